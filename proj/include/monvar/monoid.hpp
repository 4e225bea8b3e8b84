#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>

#include "monvar/gamma.hpp"

namespace monvar {

// Finite monoid as a dense multiplication table over element indices. The
// identity is always index 0; an absorbing zero, when present, is the last
// index.
struct FiniteMonoid {
  int size = 0;
  int identity = 0;
  std::optional<int> zero;
  std::vector<uint16_t> table;  // size*size, row-major
  std::vector<std::string> labels;

  int mul(int a, int b) const {
    return table[static_cast<size_t>(a) * static_cast<size_t>(size) + static_cast<size_t>(b)];
  }
};

std::optional<std::array<int, 3>> associativity_counterexample(const FiniteMonoid& m);
bool is_associative(const FiniteMonoid& m);

// Quotient of the free monoid collapsing every word outside the factor
// closure of the generating words to a single zero. With no generators the
// result is the trivial monoid, whose only element is both identity and zero.
struct WordMonoid {
  FiniteMonoid monoid;
  std::vector<Word> elements;  // element words; the zero slot holds no word
  std::map<Word, int> index;

  std::optional<int> index_of(const Word& w) const {
    auto it = index.find(w);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};
WordMonoid build_word_monoid(const std::vector<Word>& generators);

// Same construction one level up: elements are the congruence classes of
// factors of the generating classes, everything else is zero.
struct ClassMonoid {
  FiniteMonoid monoid;
  std::vector<GammaClass> elements;
  std::map<GammaClass, int> index;

  std::optional<int> index_of(const GammaClass& c) const {
    auto it = index.find(c);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};
ClassMonoid build_class_monoid(const std::vector<GammaClass>& generators);

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

// "MW: w, w, ..." over words, "MG: c, c, ..." over classes, or
// "PROD: <spec> x <spec>". An empty generator list is allowed.
FiniteMonoid parse_monoid_spec(std::string_view text);

std::string monoid_to_json(const FiniteMonoid& m);

}  // namespace monvar
