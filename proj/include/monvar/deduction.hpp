#pragma once

#include <optional>

#include "monvar/words.hpp"

namespace monvar {

struct Rule {
  std::string name;
  Identity id;
};

// One application u = a s(phi) b -> v = a t(phi) b of a rule s = t, possibly
// with the rule read right to left.
struct RuleMatch {
  Word left, right;  // the common context a and b
  Substitution phi;  // defined on every rule letter, images may be empty
  bool reversed = false;
};

// Search over context splits and substitutions; bindings are shared between
// the two rule sides, so letters on either side are matched, never left
// free.
std::optional<RuleMatch> directly_deducible(const Word& u, const Word& v, const Identity& rule);
bool match_applies(const Word& u, const Word& v, const Identity& rule, const RuleMatch& how);

struct ChainStep {
  std::string rule;
  std::optional<RuleMatch> how;  // checked verbatim when present, searched otherwise
};

struct DeductionChain {
  std::vector<Rule> rules;
  std::vector<Word> words;
  std::vector<ChainStep> steps;  // steps.size() + 1 == words.size()
};

struct ChainReport {
  bool ok = false;
  int failed_step = -1;  // index into steps when not ok, -1 for shape errors
  std::string message;
};
ChainReport verify_chain(const DeductionChain& chain);

std::string chain_to_json(const DeductionChain& chain);
DeductionChain chain_from_json(const std::string& text);

// Breadth-first closure of single rule applications from the left side of
// the goal. Letters appearing on only one side of a rule are given images
// over the goal alphabet or the empty word, one letter at most.
struct DeduceOutcome {
  std::optional<DeductionChain> chain;
  bool exhausted = false;  // the whole bounded space was searched
  size_t explored = 0;
};
DeduceOutcome deduce_bounded(const std::vector<Rule>& rules, const Identity& goal, int max_depth,
                             int max_len, size_t max_states = 200000);

// Fewest adjacent swaps of distinct letters turning u into v, where a swap
// needs both letters to occur elsewhere in the word too; unreachable within
// the state budget gives no value.
std::optional<int> invertibility_distance(const Word& u, const Word& v,
                                          size_t max_states = 100000);

}  // namespace monvar
