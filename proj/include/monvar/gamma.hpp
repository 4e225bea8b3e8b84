#pragma once

#include "monvar/words.hpp"

namespace monvar {

// One maximal run of equal letters in a class pattern together with the
// exponents it admits. A letter occurring once in the whole word gives an
// exactly_one run; a letter whose occurrences form a single run gives an
// at_least_two run; a letter spread over several runs gives at_least_one
// runs.
enum class RunBound : unsigned char { exactly_one, at_least_one, at_least_two };

struct ClassRun {
  Letter letter;
  RunBound bound = RunBound::exactly_one;
  auto operator<=>(const ClassRun&) const = default;
};

// A congruence class of words, determined by the run skeleton and the set of
// simple letters. Changing run exponents never merges or splits runs here,
// so the class of a word is exactly this data.
struct GammaClass {
  std::vector<ClassRun> runs;
  auto operator<=>(const GammaClass&) const = default;
};

GammaClass canon(const Word& w);
bool contains(const GammaClass& c, const Word& w);
void validate_class(const GammaClass& c);  // throws std::invalid_argument

Word min_rep(const GammaClass& c);  // shortest member
// Members with every flexible run at its minimum or minimum plus one; any
// factor of any member is a factor of one of these.
std::vector<Word> spanning_reps(const GammaClass& c);

// Grammar: whitespace-separated or juxtaposed run tokens. "x" is a simple
// letter, "x+" a run of one or more, and "x x+" (or "xx+") merges into a run
// of two or more. "1" denotes the class of the empty word.
GammaClass parse_class(std::string_view text);
std::string format_class(const GammaClass& c);

GammaClass class_multiply(const GammaClass& a, const GammaClass& b);
std::set<GammaClass> class_factors(const GammaClass& c);

}  // namespace monvar
