#pragma once

#include <array>
#include <cstdint>

#include "monvar/monoid.hpp"

namespace monvar {

enum class Engine { brute, pruned };

struct Assignment {
  std::vector<Letter> letters;
  std::vector<int> values;  // aligned with letters

  std::map<Letter, int> as_map() const;
};

struct SatResult {
  bool holds = true;
  std::optional<Assignment> witness;  // a refuting assignment when holds is false
};

int evaluate(const FiniteMonoid& m, const Word& w, const std::map<Letter, int>& phi);

// Whether the identity holds under every assignment of its letters. The brute
// engine walks the full assignment grid; the pruned engine assigns letters in
// first-use order and cuts a branch as soon as both sides are forced, either
// to equal values (prune) or to different ones (counterexample, remaining
// letters set to the identity). Both report a refuting assignment on failure.
SatResult satisfies(const FiniteMonoid& m, const Identity& id, Engine engine = Engine::pruned);
bool refutes(const FiniteMonoid& m, const Identity& id, const Assignment& a);

bool is_aperiodic(const FiniteMonoid& m);
bool is_j_trivial(const FiniteMonoid& m);

struct IdempotentReport {
  std::vector<int> idempotents;
  bool commuting = true;
  bool central = true;
  std::optional<std::array<int, 2>> commuting_witness;  // e, f with ef != fe
  std::optional<std::array<int, 2>> central_witness;    // e, a with ea != ae
};
IdempotentReport idempotent_checks(const FiniteMonoid& m);

// Searches for a word v != u over the letters of u, of length at most
// max_len, with u = v holding in m. No partner up to the bound is the
// evidence that u is an isoterm for m, as far as the bound goes.
struct IsotermResult {
  std::optional<Word> partner;
  int max_len = 0;
};
IsotermResult is_isoterm_bounded(const FiniteMonoid& m, const Word& u, int max_len);

// All partners of u up to the bound, smallest first.
std::vector<Word> identity_partners(const FiniteMonoid& m, const Word& u, int max_len);

// Searches for an identity u = v of m with u a spanning representative of
// the class and v outside the class, over the class letters, up to max_len.
struct StabilityResult {
  std::optional<Identity> leak;
  int max_len = 0;
};
StabilityResult is_class_stable_bounded(const FiniteMonoid& m, const GammaClass& c, int max_len);

// All words over an abstract alphabet of up to four letters (printed x, y,
// z, t) up to a length bound, in a fixed preorder shared by every signature
// table built from the same enumeration.
class WordEnum {
 public:
  WordEnum(int letters, int max_len);

  int letters() const { return letters_; }
  int max_len() const { return max_len_; }
  size_t size() const { return digits_.size(); }
  const std::string& digits(size_t id) const { return digits_[id]; }
  Word word(size_t id) const;

 private:
  int letters_;
  int max_len_;
  std::vector<std::string> digits_;  // letter indices as bytes
};

// One 64-bit fingerprint per enumerated word, over the word's value under
// every assignment of the letters into the monoid. Words get equal
// fingerprints exactly when the monoid satisfies the identity they form
// (up to hash collisions, which exact checks downstream would catch).
struct SignatureTable {
  const WordEnum* words = nullptr;
  std::vector<uint64_t> hash;
};

SignatureTable signature_table(const FiniteMonoid& m, const WordEnum& we);
// Fingerprints of a direct product from factor fingerprints; an identity
// holds in the product exactly when it holds in both factors.
SignatureTable product_signature(const SignatureTable& a, const SignatureTable& b);

size_t signature_class_count(const SignatureTable& t);

// Smallest identity (by word order) satisfied by holder and refuted by
// refuter, verified exactly by the engines; nothing found means the two
// monoids satisfy the same identities within the enumeration bounds.
std::optional<Identity> separating_identity(const FiniteMonoid& holder, const SignatureTable& ht,
                                            const FiniteMonoid& refuter, const SignatureTable& rt,
                                            const WordEnum& we);

struct CompareBounds {
  int letters = 4;
  int max_len = 8;
};

struct CompareOutcome {
  std::optional<Identity> holds_a_fails_b;  // certifies the variety of b is not below a's
  std::optional<Identity> holds_b_fails_a;  // certifies the variety of a is not below b's
  CompareBounds bounds;
};

CompareOutcome bounded_variety_compare(const FiniteMonoid& a, const FiniteMonoid& b,
                                       CompareBounds bounds = {});

}  // namespace monvar
