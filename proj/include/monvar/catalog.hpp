#pragma once

#include <optional>

#include "monvar/gamma.hpp"
#include "monvar/words.hpp"

namespace monvar {

// A permutation of {1..n}, stored as the image sequence 1p, 2p, ..., np.
struct Perm {
  std::vector<int> images;

  int degree() const { return static_cast<int>(images.size()); }
  int apply(int i) const { return images[static_cast<size_t>(i) - 1]; }
  static Perm identity(int n);
  auto operator<=>(const Perm&) const = default;
};

std::vector<Perm> all_perms(int n);      // lexicographic order
Perm parse_perm(std::string_view text);  // comma-separated images, "2,1,3"
std::string format_perm(const Perm& p);

// The three fixed permutation identities and the two-identity set used as the
// shared prefix of most bases.
Identity sigma_identity(int i);              // i in {1,2,3}
std::vector<Identity> phi_identities();      // x^2 = x^3 and x^2y^2 = y^2x^2

// Parametric word families. The a-kinds take a permutation of degree n+m, the
// c- and d-kinds one of degree n+m+k; d-kinds are the reversals of c-kinds and
// the primed c-kind swaps the first occurrences of x and y.
enum class FamilyKind { a, a_prime, a_bar, c, c_prime, d, d_prime };

FamilyKind parse_family_kind(std::string_view text);  // "a", "a'", "abar", ...

Word family_word(FamilyKind kind, int n, int m, const Perm& rho);
Word family_word(FamilyKind kind, int n, int m, int k, const Perm& tau);

Word swap_first_occurrences(const Word& w, const Letter& a, const Letter& b);

// Truncation bounds for the three infinite identity families; permutations are
// enumerated exhaustively at each admitted parameter triple or pair.
struct Phi1Bound {
  int k = 1, l = 1, m = 1;
  auto operator<=>(const Phi1Bound&) const = default;
};
struct Phi23Bound {
  int n = 1, m = 1;
  auto operator<=>(const Phi23Bound&) const = default;
};

std::vector<Identity> phi1_identities(const Phi1Bound& b);  // c = c' and d = d'
std::vector<Identity> phi2_identities(const Phi23Bound& b);  // a = abar
std::vector<Identity> phi3_identities(const Phi23Bound& b);  // a = a'

// The two-letter witness words c_n = xytxy1^2...yn^2y and the variant with the
// leading xy swapped, together with their congruence classes.
struct CnWords {
  Word c, c_prime;
  GammaClass cls, cls_prime;
};
CnWords make_cn(int n);

// The long interlock words v over four slot letters x1,x2,y1,y2; xi and eta
// permute the first occurrences inside the x-slot and y-slot. The class is
// only a single congruence class when both slots are unswapped, so it is
// reported just for that case; membership in the full four families, where a
// swapped slot admits every two-letter word not of the form first+second+,
// is exposed as a predicate.
struct VWords {
  Word v;
  std::optional<GammaClass> cls;
};
VWords make_v(int n, const Perm& xi, const Perm& eta);
bool in_v_family(const Word& w, int n, const Perm& xi, const Perm& eta);

// The block identity (a1 t1 ... ak tk) x^2y^2 (t_{k+1} a_{k+1} ...) with each
// ai one of the empty word, x or y, and (xy)^2 replacing x^2y^2 on the right.
Identity block_square_identity(int k, int l, const std::vector<Word>& assign);

// A named identity basis: fixed identities plus references to the truncated
// families, expanded on demand.
enum class FamilyId { phi, phi1, phi2, phi3, block_square };

struct FamilyRef {
  FamilyId id;
  Phi1Bound phi1;       // used by phi1
  Phi23Bound phi23;     // used by phi2 and phi3
  int block_total = 1;  // used by block_square: admits k + l <= block_total
};

struct VarietyBasis {
  std::string name;
  std::vector<Identity> fixed;
  std::vector<FamilyRef> families;
  bool dualized = false;
};

struct BasisOptions {
  int series_n = 2;  // exponent for the P/Q/R series
  Phi1Bound phi1;
  Phi23Bound phi23;
};

// The 34 recognized names: B, D1..D15, P, Q, R and the duals D1d..D10d,
// D12d..D14d, Qd and Rd of the ones that are not self-dual.
std::vector<std::string> basis_names();
VarietyBasis make_basis(const std::string& name, const BasisOptions& opts = {});
VarietyBasis dual_basis(const VarietyBasis& b);

std::vector<Identity> basis_identities(const VarietyBasis& b);
std::vector<Identity> expand_family(const FamilyRef& ref);

}  // namespace monvar
