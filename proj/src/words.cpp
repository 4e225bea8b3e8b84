#include "monvar/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace monvar {

std::string format_letter(const Letter& l) {
  std::string s(1, l.base);
  if (l.index >= 0) s += std::to_string(l.index);
  return s;
}

namespace {

[[noreturn]] void bad_word(std::string_view text, size_t pos, const std::string& why) {
  throw std::invalid_argument("cannot parse word \"" + std::string(text) + "\" at position " +
                              std::to_string(pos) + ": " + why);
}

int read_int(std::string_view text, size_t& i) {
  size_t start = i;
  long v = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    v = v * 10 + (text[i] - '0');
    if (v > 1000000) bad_word(text, start, "number too large");
    ++i;
  }
  return static_cast<int>(v);
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1') {
      // standalone empty-word symbol; subscript digits are consumed with a
      // preceding base character before we ever get here
      ++i;
      continue;
    }
    if (!std::islower(static_cast<unsigned char>(c))) bad_word(text, i, "expected a letter");
    Letter l{c, -1};
    ++i;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      l.index = read_int(text, i);
    }
    int exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        bad_word(text, i, "expected an exponent after ^");
      exp = read_int(text, i);
      if (exp < 1) bad_word(text, i, "exponent must be at least 1");
    }
    w.insert(w.end(), static_cast<size_t>(exp), l);
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += format_letter(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word power(const Word& w, int e) {
  Word r;
  r.reserve(w.size() * static_cast<size_t>(e));
  for (int i = 0; i < e; ++i) r.insert(r.end(), w.begin(), w.end());
  return r;
}

Word reverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

int occurrences(const Word& w, const Letter& l) {
  return static_cast<int>(std::count(w.begin(), w.end(), l));
}

std::vector<Letter> alphabet(const Word& w) {
  std::set<Letter> s(w.begin(), w.end());
  return {s.begin(), s.end()};
}

std::vector<Letter> simple_letters(const Word& w) {
  std::vector<Letter> r;
  for (const Letter& l : alphabet(w))
    if (occurrences(w, l) == 1) r.push_back(l);
  return r;
}

std::vector<Letter> multiple_letters(const Word& w) {
  std::vector<Letter> r;
  for (const Letter& l : alphabet(w))
    if (occurrences(w, l) >= 2) r.push_back(l);
  return r;
}

bool is_simple_in(const Word& w, const Letter& l) { return occurrences(w, l) == 1; }

Word project(const Word& w, const std::set<Letter>& keep) {
  Word r;
  for (const Letter& l : w)
    if (keep.count(l)) r.push_back(l);
  return r;
}

Word substitute(const Word& w, const Substitution& phi) {
  Word r;
  for (const Letter& l : w) {
    auto it = phi.find(l);
    if (it == phi.end())
      r.push_back(l);
    else
      r.insert(r.end(), it->second.begin(), it->second.end());
  }
  return r;
}

bool is_factor(const Word& f, const Word& w) {
  if (f.empty()) return true;
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

std::set<Word> factors(const Word& w) {
  std::set<Word> r;
  r.insert(Word{});
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t len = 1; i + len <= w.size(); ++len)
      r.insert(Word(w.begin() + i, w.begin() + i + len));
  return r;
}

Decomposition decompose(const Word& w) {
  std::vector<Letter> sl = simple_letters(w);
  std::set<Letter> simple(sl.begin(), sl.end());
  Decomposition d;
  d.blocks.emplace_back();
  for (const Letter& l : w) {
    if (simple.count(l)) {
      d.simples.push_back(l);
      d.blocks.emplace_back();
    } else {
      d.blocks.back().push_back(l);
    }
  }
  return d;
}

Identity parse_identity(std::string_view text) {
  size_t pos = text.find('=');
  if (pos == std::string_view::npos) pos = text.find('~');
  if (pos == std::string_view::npos)
    throw std::invalid_argument("identity needs a = or ~ separator: \"" + std::string(text) + "\"");
  return {parse_word(text.substr(0, pos)), parse_word(text.substr(pos + 1))};
}

std::string format_identity(const Identity& id) {
  return format_word(id.lhs) + " = " + format_word(id.rhs);
}

Identity dual_identity(const Identity& id) {
  return {reverse_word(id.lhs), reverse_word(id.rhs)};
}

std::vector<Letter> identity_letters(const Identity& id) {
  std::vector<Letter> order;
  std::set<Letter> seen;
  size_t n = std::max(id.lhs.size(), id.rhs.size());
  for (size_t i = 0; i < n; ++i) {
    for (const Word* side : {&id.lhs, &id.rhs}) {
      if (i < side->size() && !seen.count((*side)[i])) {
        seen.insert((*side)[i]);
        order.push_back((*side)[i]);
      }
    }
  }
  return order;
}

}  // namespace monvar
