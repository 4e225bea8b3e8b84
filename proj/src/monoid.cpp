#include "monvar/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "json.hpp"

namespace monvar {

std::optional<std::array<int, 3>> associativity_counterexample(const FiniteMonoid& m) {
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b)
      for (int c = 0; c < m.size; ++c)
        if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

bool is_associative(const FiniteMonoid& m) { return !associativity_counterexample(m); }

namespace {

FiniteMonoid trivial_monoid() {
  FiniteMonoid m;
  m.size = 1;
  m.identity = 0;
  m.zero = 0;
  m.table = {0};
  m.labels = {"1"};
  return m;
}

void check_size(size_t nonzero) {
  if (nonzero + 1 > 65535) throw std::runtime_error("monoid too large for a dense table");
}

}  // namespace

WordMonoid build_word_monoid(const std::vector<Word>& generators) {
  std::set<Word> closure;
  for (const Word& g : generators)
    for (const Word& f : factors(g)) closure.insert(f);

  WordMonoid wm;
  if (closure.empty()) {
    wm.monoid = trivial_monoid();
    return wm;
  }
  check_size(closure.size());
  wm.elements.assign(closure.begin(), closure.end());
  std::sort(wm.elements.begin(), wm.elements.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (size_t i = 0; i < wm.elements.size(); ++i) wm.index[wm.elements[i]] = static_cast<int>(i);

  FiniteMonoid& m = wm.monoid;
  m.size = static_cast<int>(wm.elements.size()) + 1;
  m.identity = 0;
  m.zero = m.size - 1;
  m.table.assign(static_cast<size_t>(m.size) * m.size, static_cast<uint16_t>(*m.zero));
  for (int i = 0; i + 1 < m.size; ++i)
    for (int j = 0; j + 1 < m.size; ++j) {
      std::optional<int> k = wm.index_of(concat(wm.elements[i], wm.elements[j]));
      m.table[static_cast<size_t>(i) * m.size + j] =
          static_cast<uint16_t>(k.value_or(*m.zero));
    }
  for (const Word& w : wm.elements) m.labels.push_back(format_word(w));
  m.labels.push_back("0");
  return wm;
}

ClassMonoid build_class_monoid(const std::vector<GammaClass>& generators) {
  std::set<GammaClass> closure;
  for (const GammaClass& g : generators) {
    validate_class(g);
    for (const GammaClass& f : class_factors(g)) closure.insert(f);
  }

  ClassMonoid cm;
  if (closure.empty()) {
    cm.monoid = trivial_monoid();
    return cm;
  }
  check_size(closure.size());
  cm.elements.assign(closure.begin(), closure.end());
  std::sort(cm.elements.begin(), cm.elements.end(), [](const GammaClass& a, const GammaClass& b) {
    size_t la = min_rep(a).size(), lb = min_rep(b).size();
    if (la != lb) return la < lb;
    return format_class(a) < format_class(b);
  });
  for (size_t i = 0; i < cm.elements.size(); ++i) cm.index[cm.elements[i]] = static_cast<int>(i);

  FiniteMonoid& m = cm.monoid;
  m.size = static_cast<int>(cm.elements.size()) + 1;
  m.identity = 0;
  m.zero = m.size - 1;
  m.table.assign(static_cast<size_t>(m.size) * m.size, static_cast<uint16_t>(*m.zero));
  for (int i = 0; i + 1 < m.size; ++i)
    for (int j = 0; j + 1 < m.size; ++j) {
      std::optional<int> k = cm.index_of(class_multiply(cm.elements[i], cm.elements[j]));
      m.table[static_cast<size_t>(i) * m.size + j] =
          static_cast<uint16_t>(k.value_or(*m.zero));
    }
  for (const GammaClass& c : cm.elements) m.labels.push_back(format_class(c));
  m.labels.push_back("0");
  return cm;
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  FiniteMonoid m;
  if (static_cast<long>(a.size) * b.size > 65535)
    throw std::runtime_error("product monoid too large for a dense table");
  m.size = a.size * b.size;
  m.identity = a.identity * b.size + b.identity;
  if (a.zero && b.zero) m.zero = *a.zero * b.size + *b.zero;
  m.table.resize(static_cast<size_t>(m.size) * m.size);
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) {
      int ia = i / b.size, ib = i % b.size;
      int ja = j / b.size, jb = j % b.size;
      m.table[static_cast<size_t>(i) * m.size + j] =
          static_cast<uint16_t>(a.mul(ia, ja) * b.size + b.mul(ib, jb));
    }
  for (int i = 0; i < m.size; ++i)
    m.labels.push_back("(" + a.labels[i / b.size] + "," + b.labels[i % b.size] + ")");
  return m;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  while (true) {
    size_t pos = s.find(',');
    if (pos == std::string_view::npos) break;
    parts.push_back(trim(s.substr(0, pos)));
    s.remove_prefix(pos + 1);
  }
  s = trim(s);
  if (!s.empty()) parts.push_back(s);
  return parts;
}

}  // namespace

FiniteMonoid parse_monoid_spec(std::string_view text) {
  std::string_view s = trim(text);
  if (s.rfind("MW:", 0) == 0) {
    std::vector<Word> gens;
    for (std::string_view part : split_commas(s.substr(3))) gens.push_back(parse_word(part));
    return build_word_monoid(gens).monoid;
  }
  if (s.rfind("MG:", 0) == 0) {
    std::vector<GammaClass> gens;
    for (std::string_view part : split_commas(s.substr(3))) gens.push_back(parse_class(part));
    return build_class_monoid(gens).monoid;
  }
  if (s.rfind("PROD:", 0) == 0) {
    std::string_view rest = s.substr(5);
    // the separator is a standalone x with a valid spec on both sides
    for (size_t pos = 0; pos + 1 < rest.size(); ++pos) {
      if (rest[pos] != 'x') continue;
      bool left_ws = pos > 0 && std::isspace(static_cast<unsigned char>(rest[pos - 1]));
      bool right_ws =
          pos + 1 < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos + 1]));
      if (!left_ws || !right_ws) continue;
      try {
        FiniteMonoid a = parse_monoid_spec(rest.substr(0, pos));
        FiniteMonoid b = parse_monoid_spec(rest.substr(pos + 1));
        return direct_product(a, b);
      } catch (const std::invalid_argument&) {
        continue;
      }
    }
    throw std::invalid_argument("PROD spec needs two specs separated by a standalone x");
  }
  throw std::invalid_argument("monoid spec must start with MW:, MG: or PROD:");
}

std::string monoid_to_json(const FiniteMonoid& m) {
  nlohmann::json j;
  j["size"] = m.size;
  j["identity"] = m.identity;
  if (m.zero)
    j["zero"] = *m.zero;
  else
    j["zero"] = nullptr;
  j["labels"] = m.labels;
  std::vector<std::vector<int>> rows(m.size, std::vector<int>(m.size));
  for (int i = 0; i < m.size; ++i)
    for (int j2 = 0; j2 < m.size; ++j2) rows[i][j2] = m.mul(i, j2);
  j["table"] = rows;
  return j.dump(2);
}

}  // namespace monvar
