#include "monvar/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace monvar {

namespace {

const Letter kX{'x', -1};
const Letter kY{'y', -1};
const Letter kT{'t', -1};

Letter sub(char base, int index) { return Letter{base, index}; }

void append(Word& w, const Letter& l, int count = 1) {
  w.insert(w.end(), static_cast<size_t>(count), l);
}

void append(Word& w, const Word& tail) { w.insert(w.end(), tail.begin(), tail.end()); }

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

Perm Perm::identity(int n) {
  Perm p;
  p.images.resize(static_cast<size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

std::vector<Perm> all_perms(int n) {
  Perm p = Perm::identity(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  return out;
}

Perm parse_perm(std::string_view text) {
  Perm p;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) p.images.push_back(std::stoi(item));
  std::vector<int> sorted = p.images;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    require(sorted[static_cast<size_t>(i)] == i + 1, "not a permutation: " + std::string(text));
  require(!p.images.empty(), "empty permutation");
  return p;
}

std::string format_perm(const Perm& p) {
  std::string out;
  for (size_t i = 0; i < p.images.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.images[i]);
  }
  return out;
}

Identity sigma_identity(int i) {
  switch (i) {
    case 1: return parse_identity("xyzxty = yxzxty");
    case 2: return parse_identity("xzytxy = xzytyx");
    case 3: return parse_identity("xzxyty = xzyxty");
    default: throw std::invalid_argument("sigma index must be 1, 2 or 3");
  }
}

std::vector<Identity> phi_identities() {
  return {parse_identity("x^2 = x^3"), parse_identity("x^2y^2 = y^2x^2")};
}

FamilyKind parse_family_kind(std::string_view text) {
  if (text == "a") return FamilyKind::a;
  if (text == "a'" || text == "aprime") return FamilyKind::a_prime;
  if (text == "abar") return FamilyKind::a_bar;
  if (text == "c") return FamilyKind::c;
  if (text == "c'" || text == "cprime") return FamilyKind::c_prime;
  if (text == "d") return FamilyKind::d;
  if (text == "d'" || text == "dprime") return FamilyKind::d_prime;
  throw std::invalid_argument("unknown word family: " + std::string(text));
}

Word swap_first_occurrences(const Word& w, const Letter& a, const Letter& b) {
  Word out = w;
  auto ia = std::find(out.begin(), out.end(), a);
  auto ib = std::find(out.begin(), out.end(), b);
  require(ia != out.end() && ib != out.end(), "both letters must occur");
  std::iter_swap(ia, ib);
  return out;
}

Word family_word(FamilyKind kind, int n, int m, const Perm& rho) {
  require(kind == FamilyKind::a || kind == FamilyKind::a_prime || kind == FamilyKind::a_bar,
          "two-parameter families are a, a' and abar");
  require(n >= 1 && m >= 1, "parameters must be positive");
  require(rho.degree() == n + m, "permutation degree must be n+m");
  Word w;
  for (int i = 1; i <= n; ++i) {
    append(w, sub('z', i));
    append(w, sub('t', i));
  }
  if (kind != FamilyKind::a_prime) append(w, kX);
  for (int i = 1; i <= n + m - 1; ++i) {
    append(w, sub('z', rho.apply(i)));
    append(w, sub('y', i), 2);
    if (kind == FamilyKind::a_bar) append(w, kX);
  }
  append(w, sub('z', rho.apply(n + m)));
  append(w, kX, kind == FamilyKind::a_prime ? 2 : 1);
  for (int i = n + 1; i <= n + m; ++i) {
    append(w, sub('t', i));
    append(w, sub('z', i));
  }
  return w;
}

Word family_word(FamilyKind kind, int n, int m, int k, const Perm& tau) {
  require(kind == FamilyKind::c || kind == FamilyKind::c_prime || kind == FamilyKind::d ||
              kind == FamilyKind::d_prime,
          "three-parameter families are c, c', d and d'");
  require(n >= 1 && m >= 1 && k >= 1, "parameters must be positive");
  require(tau.degree() == n + m + k, "permutation degree must be n+m+k");
  Word w;
  for (int i = 1; i <= n; ++i) {
    append(w, sub('z', i));
    append(w, sub('t', i));
  }
  append(w, kX);
  append(w, kY);
  append(w, kT);
  for (int i = n + 1; i <= n + m; ++i) {
    append(w, sub('z', i));
    append(w, sub('t', i));
  }
  append(w, kX);
  for (int i = 1; i <= n + m + k - 1; ++i) {
    append(w, sub('z', tau.apply(i)));
    append(w, sub('y', i), 2);
  }
  append(w, sub('z', tau.apply(n + m + k)));
  append(w, kY);
  for (int i = n + m + 1; i <= n + m + k; ++i) {
    append(w, sub('t', i));
    append(w, sub('z', i));
  }
  if (kind == FamilyKind::c_prime || kind == FamilyKind::d_prime)
    w = swap_first_occurrences(w, kX, kY);
  if (kind == FamilyKind::d || kind == FamilyKind::d_prime) w = reverse_word(w);
  return w;
}

std::vector<Identity> phi1_identities(const Phi1Bound& b) {
  require(b.k >= 1 && b.l >= 1 && b.m >= 1, "bounds must be at least 1");
  std::vector<Identity> out;
  for (int n = 1; n <= b.k; ++n)
    for (int m = 1; m <= b.l; ++m)
      for (int k = 1; k <= b.m; ++k)
        for (const Perm& tau : all_perms(n + m + k)) {
          out.push_back({family_word(FamilyKind::c, n, m, k, tau),
                         family_word(FamilyKind::c_prime, n, m, k, tau)});
          out.push_back({family_word(FamilyKind::d, n, m, k, tau),
                         family_word(FamilyKind::d_prime, n, m, k, tau)});
        }
  return out;
}

namespace {

std::vector<Identity> a_family(FamilyKind variant, const Phi23Bound& b) {
  require(b.n >= 1 && b.m >= 1, "bounds must be at least 1");
  std::vector<Identity> out;
  for (int n = 1; n <= b.n; ++n)
    for (int m = 1; m <= b.m; ++m)
      for (const Perm& rho : all_perms(n + m))
        out.push_back({family_word(FamilyKind::a, n, m, rho), family_word(variant, n, m, rho)});
  return out;
}

}  // namespace

std::vector<Identity> phi2_identities(const Phi23Bound& b) { return a_family(FamilyKind::a_bar, b); }

std::vector<Identity> phi3_identities(const Phi23Bound& b) {
  return a_family(FamilyKind::a_prime, b);
}

CnWords make_cn(int n) {
  require(n >= 1, "parameter must be positive");
  Word c;
  append(c, kX);
  append(c, kY);
  append(c, kT);
  append(c, kX);
  for (int i = 1; i <= n; ++i) append(c, sub('y', i), 2);
  append(c, kY);
  CnWords out;
  out.c = c;
  out.c_prime = swap_first_occurrences(c, kX, kY);
  out.cls = canon(out.c);
  out.cls_prime = canon(out.c_prime);
  return out;
}

namespace {

Word v_tail(int n) {
  Word q;
  append(q, kT);
  append(q, sub('x', 1));
  append(q, sub('c', 1), 2);
  append(q, sub('a', 1));
  for (int i = 2; i <= n - 1; ++i) append(q, sub('c', i), 2);
  append(q, sub('a', 3));
  append(q, sub('c', n), 2);
  append(q, sub('x', 2));
  append(q, Letter{'c', -1}, 2);
  append(q, sub('y', 1));
  append(q, sub('d', 1), 2);
  append(q, sub('a', 2));
  for (int i = 2; i <= n - 1; ++i) append(q, sub('d', i), 2);
  append(q, sub('a', 4));
  append(q, sub('d', n), 2);
  append(q, sub('y', 2));
  return q;
}

}  // namespace

VWords make_v(int n, const Perm& xi, const Perm& eta) {
  require(n >= 1, "parameter must be positive");
  require(xi.degree() == 2 && eta.degree() == 2, "slot permutations act on {1,2}");
  Word v;
  append(v, sub('a', 1));
  append(v, sub('b', 1), 2);
  append(v, sub('a', 2));
  append(v, sub('b', 2), 2);
  append(v, sub('x', xi.apply(1)));
  append(v, sub('x', xi.apply(2)));
  append(v, Letter{'b', -1}, 2);
  append(v, sub('y', eta.apply(1)));
  append(v, sub('y', eta.apply(2)));
  append(v, sub('b', 3), 2);
  append(v, sub('a', 3));
  append(v, sub('b', 4), 2);
  append(v, sub('a', 4));
  append(v, v_tail(n));
  VWords out;
  out.v = v;
  if (xi == Perm::identity(2) && eta == Perm::identity(2)) out.cls = canon(v);
  return out;
}

namespace {

// Word-set pattern pieces: a fixed sequence of runs with per-run minimum
// counts (maximum 1 for a simple letter), or a two-letter slot that accepts
// either exactly first+second+ or, when swapped, any word using both letters
// that is not of that shape.
struct RunSpec {
  Letter letter;
  int min = 1;
  int max = -1;  // -1 means unbounded
};

struct SlotSpec {
  Letter first, second;
  bool swapped = false;
};

struct Segment {
  std::vector<RunSpec> runs;  // empty for a slot segment
  std::optional<SlotSpec> slot;
};

std::vector<std::pair<Letter, int>> maximal_runs(const Word& w) {
  std::vector<std::pair<Letter, int>> out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().first == l)
      ++out.back().second;
    else
      out.emplace_back(l, 1);
  }
  return out;
}

bool match_segments(const Word& w, const std::vector<Segment>& pattern) {
  auto runs = maximal_runs(w);
  size_t pos = 0;
  for (const Segment& seg : pattern) {
    if (seg.slot) {
      size_t start = pos;
      while (pos < runs.size() &&
             (runs[pos].first == seg.slot->first || runs[pos].first == seg.slot->second))
        ++pos;
      bool has_first = false, has_second = false;
      for (size_t i = start; i < pos; ++i) {
        has_first |= runs[i].first == seg.slot->first;
        has_second |= runs[i].first == seg.slot->second;
      }
      if (!has_first || !has_second) return false;
      bool plain = pos - start == 2 && runs[start].first == seg.slot->first;
      if (plain != !seg.slot->swapped) return false;
    } else {
      for (const RunSpec& spec : seg.runs) {
        if (pos >= runs.size() || runs[pos].first != spec.letter) return false;
        if (runs[pos].second < spec.min) return false;
        if (spec.max >= 0 && runs[pos].second > spec.max) return false;
        ++pos;
      }
    }
  }
  return pos == runs.size();
}

}  // namespace

bool in_v_family(const Word& w, int n, const Perm& xi, const Perm& eta) {
  require(n >= 1, "parameter must be positive");
  require(xi.degree() == 2 && eta.degree() == 2, "slot permutations act on {1,2}");
  const Perm id2 = Perm::identity(2);
  std::vector<Segment> pattern;
  auto runs = [&](std::vector<RunSpec> rs) { pattern.push_back({std::move(rs), std::nullopt}); };
  auto slot = [&](Letter a, Letter b, bool swapped) {
    pattern.push_back({{}, SlotSpec{a, b, swapped}});
  };
  runs({{sub('a', 1), 1, -1},
        {sub('b', 1), 2, -1},
        {sub('a', 2), 1, -1},
        {sub('b', 2), 2, -1}});
  slot(sub('x', 1), sub('x', 2), xi != id2);
  runs({{Letter{'b', -1}, 2, -1}});
  slot(sub('y', 1), sub('y', 2), eta != id2);
  std::vector<RunSpec> tail{{sub('b', 3), 2, -1},
                            {sub('a', 3), 1, -1},
                            {sub('b', 4), 2, -1},
                            {sub('a', 4), 1, -1},
                            {kT, 1, 1},
                            {sub('x', 1), 1, -1},
                            {sub('c', 1), 2, -1},
                            {sub('a', 1), 1, -1}};
  for (int i = 2; i <= n - 1; ++i) tail.push_back({sub('c', i), 2, -1});
  tail.push_back({sub('a', 3), 1, -1});
  tail.push_back({sub('c', n), 2, -1});
  tail.push_back({sub('x', 2), 1, -1});
  tail.push_back({Letter{'c', -1}, 2, -1});
  tail.push_back({sub('y', 1), 1, -1});
  tail.push_back({sub('d', 1), 2, -1});
  tail.push_back({sub('a', 2), 1, -1});
  for (int i = 2; i <= n - 1; ++i) tail.push_back({sub('d', i), 2, -1});
  tail.push_back({sub('a', 4), 1, -1});
  tail.push_back({sub('d', n), 2, -1});
  tail.push_back({sub('y', 2), 1, -1});
  runs(std::move(tail));
  return match_segments(w, pattern);
}

Identity block_square_identity(int k, int l, const std::vector<Word>& assign) {
  require(k >= 0 && l >= 0, "block counts must be nonnegative");
  require(static_cast<int>(assign.size()) == k + l, "need one slot word per block");
  for (const Word& a : assign)
    require(a.empty() || a == Word{kX} || a == Word{kY},
            "slot words must be empty, x or y");
  Word left, mid_l, mid_r, right;
  for (int i = 1; i <= k; ++i) {
    append(left, assign[static_cast<size_t>(i) - 1]);
    append(left, sub('t', i));
  }
  append(mid_l, kX, 2);
  append(mid_l, kY, 2);
  for (int rep = 0; rep < 2; ++rep) {
    append(mid_r, kX);
    append(mid_r, kY);
  }
  for (int i = k + 1; i <= k + l; ++i) {
    append(right, sub('t', i));
    append(right, assign[static_cast<size_t>(i) - 1]);
  }
  return {concat(concat(left, mid_l), right), concat(concat(left, mid_r), right)};
}

namespace {

struct BasisSpec {
  std::vector<FamilyId> families;
  std::vector<std::string> fixed;  // sigma names or identity strings
};

const std::vector<std::pair<std::string, BasisSpec>>& basis_table() {
  using F = FamilyId;
  static const std::vector<std::pair<std::string, BasisSpec>> table = {
      {"B", {{}, {"x = x^2"}}},
      {"D1", {{F::phi}, {"xyx = xyx^2", "x^2y = x^2yx"}}},
      {"D2", {{F::phi, F::phi1, F::phi2}, {"xyx = xyx^2"}}},
      {"D3",
       {{F::phi}, {"s2", "s3", "x^2y = x^2yx", "x^2yx = xyx^2", "xyxzx = xyxzx^2"}}},
      {"D4",
       {{F::phi},
        {"s2", "s3", "x^2y = x^2yx", "x^2yty = yx^2ty", "xyzx^2ty^2 = yxzx^2ty^2",
         "xyxzx = xyx^2zx"}}},
      {"D5",
       {{F::phi}, {"s2", "s3", "xyx^2 = x^2yx", "xyzx^2y = yxzx^2y", "xyxzx = xyxzx^2"}}},
      {"D6",
       {{F::phi},
        {"s2", "s3", "x^2yx = x^2yx^2", "x^2yty = yx^2ty", "xyzx^2ty = yxzx^2ty",
         "xyzytx^2 = yxzytx^2"}}},
      {"D7",
       {{F::phi},
        {"s2", "s3", "x^2yx = x^2yx^2", "x^2yty = yx^2ty", "xyzx^2ty^2 = yxzx^2ty^2",
         "xyzx^2y = yxzx^2y", "xyxzx = xyx^2zx"}}},
      {"D8",
       {{F::phi},
        {"s2", "s3", "x^2yx = x^2yx^2", "x^2yty = yx^2ty", "xyzx^2ty^2 = yxzx^2ty^2",
         "xyzx^2y = yxzx^2y", "xyzx^2tysx = yxzx^2tysx", "xyxzx = xyxzx^2"}}},
      {"D9", {{F::phi}, {"s1", "s3", "x^2yx = x^2yx^2", "ytx^2y = ytyx^2"}}},
      {"D10",
       {{F::phi},
        {"s1", "s3", "x^2yx = x^2yx^2", "xyxzx = xyxzx^2", "x^2zytxy = x^2zytyx"}}},
      {"D11", {{F::phi, F::phi1, F::phi2}, {"xyx^2 = x^2yx", "xyxzx = xyxzx^2"}}},
      {"D12",
       {{F::phi, F::phi1, F::phi2},
        {"x^2yx = x^2yx^2", "ytx^2y = ytyx^2", "x^2yty = yx^2ty", "xyzx^2ty = yxzx^2ty",
         "xyzytx^2 = yxzytx^2", "yzyxtx^2 = yzxytx^2"}}},
      {"D13",
       {{F::phi, F::phi1, F::phi2},
        {"x^2yx = x^2yx^2", "yx^2ty = xyx^2ty", "ytyx^2 = ytxyx^2", "xyxzx = xyx^2zx",
         "x^2yty^2 = yx^2ty^2", "x^2yzytx = yx^2zytx", "x^2yzxty = yx^2zxty",
         "x^2zytxy = x^2zytyx", "yzx^2ytx = yzyx^2tx", "xyzx^2ty^2 = yxzx^2ty^2"}}},
      {"D14",
       {{F::phi, F::phi1, F::phi2},
        {"x^2yx = x^2yx^2", "yx^2ty = xyx^2ty", "ytyx^2 = ytxyx^2", "xyxzx = xyxzx^2",
         "x^2yty^2 = yx^2ty^2", "x^2yzytx = yx^2zytx", "x^2yzxty = yx^2zxty",
         "x^2zytxy = x^2zytyx", "yzx^2ytx = yzyx^2tx", "xyzx^2ty^2 = yxzx^2ty^2",
         "xyzx^2tysx = yxzx^2tysx"}}},
      {"D15", {{F::phi1}, {"xyx = x^2yx", "x^2yx = xyx^2", "xyxy = yxyx"}}},
      {"P", {{F::phi1, F::phi3}, {"@n = @n1", "x^2y = yx^2"}}},
      {"Q", {{}, {"@n = @n1", "@ny = y@n", "x^2y = xyx"}}},
      {"R", {{}, {"s1", "s3", "@n = @n1", "x^2y = yx^2"}}},
  };
  return table;
}

const std::vector<std::string>& self_dual_names() {
  static const std::vector<std::string> names = {"B", "D11", "D15", "P"};
  return names;
}

Identity fixed_identity(const std::string& text, int series_n) {
  if (text == "s1") return sigma_identity(1);
  if (text == "s2") return sigma_identity(2);
  if (text == "s3") return sigma_identity(3);
  std::string expanded;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '@' && i + 1 < text.size() && text[i + 1] == 'n') {
      bool bump = i + 2 < text.size() && text[i + 2] == '1';
      expanded += "x^" + std::to_string(series_n + (bump ? 1 : 0));
      i += bump ? 2 : 1;
    } else {
      expanded += text[i];
    }
  }
  return parse_identity(expanded);
}

}  // namespace

std::vector<std::string> basis_names() {
  std::vector<std::string> out;
  for (const auto& [name, spec] : basis_table()) out.push_back(name);
  for (const auto& [name, spec] : basis_table()) {
    const auto& sd = self_dual_names();
    if (std::find(sd.begin(), sd.end(), name) == sd.end()) out.push_back(name + "d");
  }
  return out;
}

VarietyBasis make_basis(const std::string& name, const BasisOptions& opts) {
  bool dual = name.size() > 1 && name.back() == 'd';
  std::string base = dual ? name.substr(0, name.size() - 1) : name;
  const auto& table = basis_table();
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const auto& entry) { return entry.first == base; });
  require(it != table.end(), "unknown basis name: " + name);
  if (dual) {
    const auto& sd = self_dual_names();
    require(std::find(sd.begin(), sd.end(), base) == sd.end(),
            name + " is not listed; " + base + " is self-dual");
  }
  VarietyBasis b;
  b.name = base;
  for (const std::string& text : it->second.fixed)
    b.fixed.push_back(fixed_identity(text, opts.series_n));
  for (FamilyId id : it->second.families) {
    FamilyRef ref;
    ref.id = id;
    ref.phi1 = opts.phi1;
    ref.phi23 = opts.phi23;
    b.families.push_back(ref);
  }
  return dual ? dual_basis(b) : b;
}

VarietyBasis dual_basis(const VarietyBasis& b) {
  VarietyBasis out = b;
  out.dualized = !b.dualized;
  out.name = b.dualized ? b.name.substr(0, b.name.size() - 1) : b.name + "d";
  for (Identity& id : out.fixed) id = dual_identity(id);
  return out;
}

std::vector<Identity> expand_family(const FamilyRef& ref) {
  switch (ref.id) {
    case FamilyId::phi: return phi_identities();
    case FamilyId::phi1: return phi1_identities(ref.phi1);
    case FamilyId::phi2: return phi2_identities(ref.phi23);
    case FamilyId::phi3: return phi3_identities(ref.phi23);
    case FamilyId::block_square: {
      std::vector<Identity> out;
      for (int k = 0; k <= ref.block_total; ++k)
        for (int l = 0; k + l <= ref.block_total; ++l) {
          std::vector<Word> assign(static_cast<size_t>(k + l));
          const std::vector<Word> choices = {Word{}, Word{kX}, Word{kY}};
          // Odometer over the slot choices.
          std::vector<size_t> digits(assign.size(), 0);
          while (true) {
            for (size_t i = 0; i < assign.size(); ++i) assign[i] = choices[digits[i]];
            out.push_back(block_square_identity(k, l, assign));
            size_t j = 0;
            while (j < digits.size() && ++digits[j] == choices.size()) digits[j++] = 0;
            if (j == digits.size() && !digits.empty()) break;
            if (digits.empty()) break;
          }
        }
      return out;
    }
  }
  throw std::invalid_argument("unknown family id");
}

std::vector<Identity> basis_identities(const VarietyBasis& b) {
  std::vector<Identity> out = b.fixed;
  for (const FamilyRef& ref : b.families)
    for (Identity id : expand_family(ref)) out.push_back(b.dualized ? dual_identity(id) : id);
  return out;
}

}  // namespace monvar
