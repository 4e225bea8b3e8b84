#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace monvar {

// A letter is a lowercase base character with an optional numeric subscript,
// so x, x1, y12 and t3 are four distinct letters. Letters without a subscript
// sort before subscripted ones of the same base.
struct Letter {
  char base = 'x';
  int index = -1;  // -1 means no subscript

  auto operator<=>(const Letter&) const = default;
};

std::string format_letter(const Letter& l);

// A word is a finite, possibly empty, sequence of letters.
using Word = std::vector<Letter>;

// Grammar: a word is a sequence of tokens, whitespace optional between them.
// A token is a letter (base character, optional subscript digits, optional
// ^exponent with exponent >= 1) or the symbol 1 for the empty word. "z1"
// parses as the letter z with subscript 1; use "z^1" or "z 1" otherwise.
Word parse_word(std::string_view text);

// Run-length form without spaces, e.g. "x^2y^2" or "z1t1x"; "1" when empty.
std::string format_word(const Word& w);

Word concat(const Word& a, const Word& b);
Word power(const Word& w, int e);
Word reverse_word(const Word& w);

int occurrences(const Word& w, const Letter& l);
std::vector<Letter> alphabet(const Word& w);          // sorted, distinct
std::vector<Letter> simple_letters(const Word& w);    // exactly one occurrence
std::vector<Letter> multiple_letters(const Word& w);  // two or more occurrences
bool is_simple_in(const Word& w, const Letter& l);

// Keeps exactly the occurrences of the given letters, preserving order.
Word project(const Word& w, const std::set<Letter>& keep);

// Letter-to-word substitution extended multiplicatively; unmapped letters are
// kept as they are, and images may be empty.
using Substitution = std::map<Letter, Word>;
Word substitute(const Word& w, const Substitution& phi);

bool is_factor(const Word& f, const Word& w);  // contiguous subword
std::set<Word> factors(const Word& w);         // all factors incl. the empty word

// Splitting along simple letters: w = b0 t1 b1 ... tm bm where the ti are the
// simple letters of w in order and the bi are the possibly empty blocks.
struct Decomposition {
  std::vector<Letter> simples;
  std::vector<Word> blocks;  // blocks.size() == simples.size() + 1
};
Decomposition decompose(const Word& w);

struct Identity {
  Word lhs, rhs;
  auto operator<=>(const Identity&) const = default;
};

Identity parse_identity(std::string_view text);  // "u = v", also accepts "~"
std::string format_identity(const Identity& id);
Identity dual_identity(const Identity& id);  // reverse both sides

// Letters of both sides merged by first use, scanning lhs and rhs in
// parallel; this is the assignment order used by the satisfaction engines.
std::vector<Letter> identity_letters(const Identity& id);

}  // namespace monvar
