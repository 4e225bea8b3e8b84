#include "monvar/gamma.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace monvar {

namespace {

struct LetterStats {
  int runs = 0;
  int occurrences = 0;
};

std::map<Letter, LetterStats> run_stats(const std::vector<ClassRun>& runs) {
  std::map<Letter, LetterStats> st;
  for (const ClassRun& r : runs) st[r.letter].runs++;
  return st;
}

int min_exponent(RunBound b) { return b == RunBound::at_least_two ? 2 : 1; }

}  // namespace

GammaClass canon(const Word& w) {
  std::map<Letter, LetterStats> st;
  for (const Letter& l : w) st[l].occurrences++;
  GammaClass c;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    st[w[i]].runs++;
    c.runs.push_back({w[i], RunBound::exactly_one});
    i = j;
  }
  for (ClassRun& r : c.runs) {
    const LetterStats& s = st[r.letter];
    if (s.occurrences == 1)
      r.bound = RunBound::exactly_one;
    else if (s.runs == 1)
      r.bound = RunBound::at_least_two;
    else
      r.bound = RunBound::at_least_one;
  }
  return c;
}

bool contains(const GammaClass& c, const Word& w) { return canon(w) == c; }

void validate_class(const GammaClass& c) {
  for (size_t i = 0; i + 1 < c.runs.size(); ++i)
    if (c.runs[i].letter == c.runs[i + 1].letter)
      throw std::invalid_argument("class has adjacent runs of the same letter " +
                                  format_letter(c.runs[i].letter));
  std::map<Letter, LetterStats> st = run_stats(c.runs);
  for (const ClassRun& r : c.runs) {
    int runs = st[r.letter].runs;
    if (runs == 1 && r.bound == RunBound::at_least_one)
      throw std::invalid_argument("single-run letter " + format_letter(r.letter) +
                                  " must be simple or doubled");
    if (runs > 1 && r.bound != RunBound::at_least_one)
      throw std::invalid_argument("letter " + format_letter(r.letter) +
                                  " occurs in several runs, so each run is one-or-more");
  }
}

Word min_rep(const GammaClass& c) {
  Word w;
  for (const ClassRun& r : c.runs)
    w.insert(w.end(), static_cast<size_t>(min_exponent(r.bound)), r.letter);
  return w;
}

std::vector<Word> spanning_reps(const GammaClass& c) {
  std::vector<size_t> flexible;
  for (size_t i = 0; i < c.runs.size(); ++i)
    if (c.runs[i].bound != RunBound::exactly_one) flexible.push_back(i);
  if (flexible.size() > 20)
    throw std::runtime_error("class has too many flexible runs to span (" +
                             std::to_string(flexible.size()) + ")");
  std::vector<Word> reps;
  for (size_t mask = 0; mask < (size_t{1} << flexible.size()); ++mask) {
    Word w;
    size_t f = 0;
    for (size_t i = 0; i < c.runs.size(); ++i) {
      int e = min_exponent(c.runs[i].bound);
      if (c.runs[i].bound != RunBound::exactly_one && (mask >> f++ & 1)) ++e;
      w.insert(w.end(), static_cast<size_t>(e), c.runs[i].letter);
    }
    reps.push_back(w);
  }
  return reps;
}

GammaClass parse_class(std::string_view text) {
  GammaClass c;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '1') {
      ++i;
      continue;
    }
    if (!std::islower(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("cannot parse class \"" + std::string(text) +
                                  "\" at position " + std::to_string(i));
    Letter l{ch, -1};
    ++i;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      l.index = static_cast<int>(v);
    }
    bool plus = false;
    if (i < text.size() && text[i] == '+') {
      plus = true;
      ++i;
    }
    if (plus && !c.runs.empty() && c.runs.back().letter == l &&
        c.runs.back().bound == RunBound::exactly_one) {
      c.runs.back().bound = RunBound::at_least_two;  // "x x+" means two or more
    } else {
      c.runs.push_back({l, plus ? RunBound::at_least_one : RunBound::exactly_one});
    }
  }
  validate_class(c);
  return c;
}

std::string format_class(const GammaClass& c) {
  if (c.runs.empty()) return "1";
  std::string out;
  for (const ClassRun& r : c.runs) {
    switch (r.bound) {
      case RunBound::exactly_one: out += format_letter(r.letter); break;
      case RunBound::at_least_one: out += format_letter(r.letter) + "+"; break;
      case RunBound::at_least_two: out += format_letter(r.letter) + format_letter(r.letter) + "+"; break;
    }
  }
  return out;
}

GammaClass class_multiply(const GammaClass& a, const GammaClass& b) {
  return canon(concat(min_rep(a), min_rep(b)));
}

std::set<GammaClass> class_factors(const GammaClass& c) {
  std::set<GammaClass> r;
  for (const Word& rep : spanning_reps(c))
    for (const Word& f : factors(rep)) r.insert(canon(f));
  return r;
}

}  // namespace monvar
