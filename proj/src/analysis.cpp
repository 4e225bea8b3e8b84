#include "monvar/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace monvar {

std::map<Letter, int> Assignment::as_map() const {
  std::map<Letter, int> m;
  for (size_t i = 0; i < letters.size(); ++i) m[letters[i]] = values[i];
  return m;
}

int evaluate(const FiniteMonoid& m, const Word& w, const std::map<Letter, int>& phi) {
  int v = m.identity;
  for (const Letter& l : w) {
    auto it = phi.find(l);
    if (it == phi.end())
      throw std::invalid_argument("no value assigned to letter " + format_letter(l));
    v = m.mul(v, it->second);
  }
  return v;
}

bool refutes(const FiniteMonoid& m, const Identity& id, const Assignment& a) {
  std::map<Letter, int> phi = a.as_map();
  return evaluate(m, id.lhs, phi) != evaluate(m, id.rhs, phi);
}

namespace {

std::vector<int> to_ord(const Word& w, const std::map<Letter, int>& pos) {
  std::vector<int> ord;
  ord.reserve(w.size());
  for (const Letter& l : w) ord.push_back(pos.at(l));
  return ord;
}

struct Side {
  std::vector<int> ord;      // word as letter-order indices
  std::vector<size_t> plen;  // plen[j]: longest prefix using only letters before j
};

Side make_side(const Word& w, const std::map<Letter, int>& pos, int k) {
  Side s;
  s.ord = to_ord(w, pos);
  s.plen.assign(static_cast<size_t>(k) + 1, 0);
  size_t p = 0;
  for (int j = 0; j <= k; ++j) {
    while (p < s.ord.size() && s.ord[p] < j) ++p;
    s.plen[static_cast<size_t>(j)] = p;
  }
  return s;
}

struct PrunedSearch {
  const FiniteMonoid& m;
  const std::vector<Letter>& letters;
  int k;
  Side u, v;
  std::vector<int> assign;
  std::optional<Assignment> witness;

  bool zero_val(int val) const { return m.zero && val == *m.zero; }

  bool determined(const Side& s, int j, int val) const {
    return zero_val(val) || s.plen[static_cast<size_t>(j)] == s.ord.size();
  }

  int extend(const Side& s, int j, int val) const {
    if (zero_val(val)) return val;
    for (size_t p = s.plen[static_cast<size_t>(j)]; p < s.plen[static_cast<size_t>(j) + 1]; ++p) {
      val = m.mul(val, assign[static_cast<size_t>(s.ord[p])]);
      if (zero_val(val)) break;
    }
    return val;
  }

  // true when the subtree contains no counterexample
  bool run(int j, int vu, int vv) {
    bool du = determined(u, j, vu), dv = determined(v, j, vv);
    if (du && dv) {
      if (vu == vv) return true;
      Assignment a;
      a.letters = letters;
      a.values.assign(assign.begin(), assign.begin() + j);
      a.values.resize(static_cast<size_t>(k), m.identity);
      witness = std::move(a);
      return false;
    }
    for (int e = 0; e < m.size; ++e) {
      assign[static_cast<size_t>(j)] = e;
      if (!run(j + 1, extend(u, j, vu), extend(v, j, vv))) return false;
    }
    return true;
  }
};

SatResult satisfies_pruned(const FiniteMonoid& m, const Identity& id) {
  std::vector<Letter> letters = identity_letters(id);
  int k = static_cast<int>(letters.size());
  std::map<Letter, int> pos;
  for (int i = 0; i < k; ++i) pos[letters[static_cast<size_t>(i)]] = i;
  PrunedSearch ps{m, letters, k, make_side(id.lhs, pos, k), make_side(id.rhs, pos, k),
                  std::vector<int>(static_cast<size_t>(k), m.identity), std::nullopt};
  SatResult r;
  r.holds = ps.run(0, m.identity, m.identity);
  r.witness = std::move(ps.witness);
  return r;
}

SatResult satisfies_brute(const FiniteMonoid& m, const Identity& id) {
  std::vector<Letter> letters = identity_letters(id);
  int k = static_cast<int>(letters.size());
  double cost = static_cast<double>(id.lhs.size() + id.rhs.size() + 1);
  for (int i = 0; i < k; ++i) cost *= m.size;
  if (cost > 1e8)
    throw std::runtime_error("assignment grid too large for the brute engine; use pruned");
  std::map<Letter, int> pos;
  for (int i = 0; i < k; ++i) pos[letters[static_cast<size_t>(i)]] = i;
  std::vector<int> lo = to_ord(id.lhs, pos), ro = to_ord(id.rhs, pos);
  std::vector<int> a(static_cast<size_t>(k), 0);
  while (true) {
    int vu = m.identity, vv = m.identity;
    for (int i : lo) vu = m.mul(vu, a[static_cast<size_t>(i)]);
    for (int i : ro) vv = m.mul(vv, a[static_cast<size_t>(i)]);
    if (vu != vv) {
      SatResult r;
      r.holds = false;
      r.witness = Assignment{letters, a};
      return r;
    }
    int i = 0;
    for (; i < k; ++i) {
      if (++a[static_cast<size_t>(i)] < m.size) break;
      a[static_cast<size_t>(i)] = 0;
    }
    if (i == k) break;
  }
  return {};
}

}  // namespace

SatResult satisfies(const FiniteMonoid& m, const Identity& id, Engine engine) {
  return engine == Engine::brute ? satisfies_brute(m, id) : satisfies_pruned(m, id);
}

bool is_aperiodic(const FiniteMonoid& m) {
  for (int a = 0; a < m.size; ++a) {
    int x = a;
    bool settled = false;
    for (int t = 0; t <= m.size; ++t) {
      int y = m.mul(x, a);
      if (y == x) {
        settled = true;
        break;
      }
      x = y;
    }
    if (!settled) return false;
  }
  return true;
}

bool is_j_trivial(const FiniteMonoid& m) {
  size_t nw = (static_cast<size_t>(m.size) + 63) / 64;
  std::map<std::vector<uint64_t>, int> seen;
  for (int a = 0; a < m.size; ++a) {
    std::vector<uint64_t> ideal(nw, 0);
    for (int x = 0; x < m.size; ++x) {
      int xa = m.mul(x, a);
      for (int y = 0; y < m.size; ++y) {
        int e = m.mul(xa, y);
        ideal[static_cast<size_t>(e) / 64] |= uint64_t{1} << (e % 64);
      }
    }
    if (!seen.emplace(std::move(ideal), a).second) return false;
  }
  return true;
}

IdempotentReport idempotent_checks(const FiniteMonoid& m) {
  IdempotentReport r;
  for (int e = 0; e < m.size; ++e)
    if (m.mul(e, e) == e) r.idempotents.push_back(e);
  for (int e : r.idempotents) {
    for (int f : r.idempotents)
      if (m.mul(e, f) != m.mul(f, e) && !r.commuting_witness) {
        r.commuting = false;
        r.commuting_witness = {e, f};
      }
    for (int a = 0; a < m.size; ++a)
      if (m.mul(e, a) != m.mul(a, e) && !r.central_witness) {
        r.central = false;
        r.central_witness = {e, a};
      }
  }
  return r;
}

namespace {

// Seeded assignments used to discard most candidate partners before the
// exact engine runs; a probe mismatch is already a refutation.
std::vector<std::vector<int>> make_probes(const FiniteMonoid& m, size_t letters, size_t count) {
  std::mt19937_64 rng(0x20260823ULL);
  std::uniform_int_distribution<int> pick(0, m.size - 1);
  std::vector<std::vector<int>> probes(count, std::vector<int>(letters));
  for (auto& p : probes)
    for (auto& v : p) v = pick(rng);
  return probes;
}

std::vector<int> probe_values(const FiniteMonoid& m, const std::vector<int>& ord,
                              const std::vector<std::vector<int>>& probes) {
  std::vector<int> tv(probes.size());
  for (size_t p = 0; p < probes.size(); ++p) {
    int v = m.identity;
    for (int i : ord) v = m.mul(v, probes[p][static_cast<size_t>(i)]);
    tv[p] = v;
  }
  return tv;
}

// All digit strings (over the letter indices) up to max_len whose probe
// values coincide with the target's, excluding the target itself, ordered by
// length then lexicographically.
std::vector<std::string> probe_candidates(const FiniteMonoid& m, size_t nletters,
                                          const std::vector<int>& target_ord, int max_len,
                                          const std::vector<std::vector<int>>& probes) {
  std::vector<int> tv = probe_values(m, target_ord, probes);
  std::string target(target_ord.begin(), target_ord.end());
  std::vector<std::string> out;
  std::string cur;
  std::vector<std::vector<int>> vals;
  vals.push_back(std::vector<int>(probes.size(), m.identity));
  auto rec = [&](auto&& self) -> void {
    if (vals.back() == tv && cur != target) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (size_t l = 0; l < nletters; ++l) {
      std::vector<int> next(probes.size());
      for (size_t p = 0; p < probes.size(); ++p)
        next[p] = m.mul(vals.back()[p], probes[p][l]);
      cur.push_back(static_cast<char>(l));
      vals.push_back(std::move(next));
      self(self);
      vals.pop_back();
      cur.pop_back();
    }
  };
  rec(rec);
  std::stable_sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Word from_digits(const std::string& digits, const std::vector<Letter>& letters) {
  Word w;
  for (char d : digits) w.push_back(letters[static_cast<size_t>(d)]);
  return w;
}

}  // namespace

IsotermResult is_isoterm_bounded(const FiniteMonoid& m, const Word& u, int max_len) {
  IsotermResult r;
  r.max_len = max_len;
  std::vector<Letter> letters = alphabet(u);
  std::map<Letter, int> pos;
  for (size_t i = 0; i < letters.size(); ++i) pos[letters[i]] = static_cast<int>(i);
  auto probes = make_probes(m, letters.size(), 48);
  for (const std::string& digits :
       probe_candidates(m, letters.size(), to_ord(u, pos), max_len, probes)) {
    Word v = from_digits(digits, letters);
    if (satisfies(m, {u, v}).holds) {
      r.partner = v;
      return r;
    }
  }
  return r;
}

std::vector<Word> identity_partners(const FiniteMonoid& m, const Word& u, int max_len) {
  std::vector<Word> out;
  std::vector<Letter> letters = alphabet(u);
  std::map<Letter, int> pos;
  for (size_t i = 0; i < letters.size(); ++i) pos[letters[i]] = static_cast<int>(i);
  auto probes = make_probes(m, letters.size(), 48);
  for (const std::string& digits :
       probe_candidates(m, letters.size(), to_ord(u, pos), max_len, probes)) {
    Word v = from_digits(digits, letters);
    if (satisfies(m, {u, v}).holds) out.push_back(v);
  }
  return out;
}

StabilityResult is_class_stable_bounded(const FiniteMonoid& m, const GammaClass& c, int max_len) {
  StabilityResult r;
  r.max_len = max_len;
  std::set<Letter> lset;
  for (const ClassRun& run : c.runs) lset.insert(run.letter);
  std::vector<Letter> letters(lset.begin(), lset.end());
  std::map<Letter, int> pos;
  for (size_t i = 0; i < letters.size(); ++i) pos[letters[i]] = static_cast<int>(i);
  auto probes = make_probes(m, letters.size(), 48);
  for (const Word& rep : spanning_reps(c)) {
    for (const std::string& digits :
         probe_candidates(m, letters.size(), to_ord(rep, pos), max_len, probes)) {
      Word v = from_digits(digits, letters);
      if (canon(v) == c) continue;
      if (satisfies(m, {rep, v}).holds) {
        r.leak = Identity{rep, v};
        return r;
      }
    }
  }
  return r;
}

WordEnum::WordEnum(int letters, int max_len) : letters_(letters), max_len_(max_len) {
  if (letters < 1 || letters > 4)
    throw std::invalid_argument("word enumeration supports one to four letters");
  if (max_len < 0 || max_len > 12) throw std::invalid_argument("word enumeration length bound");
  size_t total = 0, layer = 1;
  for (int i = 0; i <= max_len; ++i) {
    total += layer;
    layer *= static_cast<size_t>(letters);
  }
  digits_.reserve(total);
  std::string cur;
  auto rec = [&](auto&& self) -> void {
    digits_.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int l = 0; l < letters; ++l) {
      cur.push_back(static_cast<char>(l));
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}

Word WordEnum::word(size_t id) const {
  static constexpr char names[4] = {'x', 'y', 'z', 't'};
  Word w;
  for (char d : digits_.at(id)) w.push_back({names[static_cast<size_t>(d)], -1});
  return w;
}

namespace {

uint64_t mix(uint64_t h, uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0x100000001b3ULL;
}

uint64_t live_hash(const std::vector<uint32_t>& idx, const std::vector<uint8_t>& val) {
  uint64_t h = 0xcbf29ce484222325ULL;
  h = mix(h, idx.size());
  for (size_t i = 0; i < idx.size(); ++i) h = mix(mix(h, idx[i]), val[i]);
  return h;
}

}  // namespace

SignatureTable signature_table(const FiniteMonoid& m, const WordEnum& we) {
  if (m.size > 255)
    throw std::runtime_error("signature tables need monoids with at most 255 elements");
  double pd = 1;
  for (int i = 0; i < we.letters(); ++i) pd *= m.size;
  if (pd > 4.5e6) throw std::runtime_error("assignment space too large for a signature table");
  size_t P = static_cast<size_t>(llround(pd));
  int n = m.size, k = we.letters();

  // letter images per packed assignment index
  std::vector<std::vector<uint8_t>> dig(static_cast<size_t>(k), std::vector<uint8_t>(P));
  size_t period = 1;
  for (int l = 0; l < k; ++l) {
    for (size_t i = 0; i < P; ++i)
      dig[static_cast<size_t>(l)][i] = static_cast<uint8_t>(i / period % static_cast<size_t>(n));
    period *= static_cast<size_t>(n);
  }

  SignatureTable t;
  t.words = &we;
  t.hash.resize(we.size());
  size_t id = 0;
  bool hz = m.zero.has_value();
  uint8_t zero = hz ? static_cast<uint8_t>(*m.zero) : 0;

  std::vector<uint32_t> idx0(P);
  std::vector<uint8_t> val0(P, static_cast<uint8_t>(m.identity));
  for (size_t i = 0; i < P; ++i) idx0[i] = static_cast<uint32_t>(i);

  // assignments whose running value hit the zero stay there, so they are
  // dropped from the live list once and for all
  auto rec = [&](auto&& self, const std::vector<uint32_t>& idx, const std::vector<uint8_t>& val,
                 int depth) -> void {
    t.hash[id++] = live_hash(idx, val);
    if (depth == we.max_len()) return;
    for (int l = 0; l < k; ++l) {
      std::vector<uint32_t> cidx;
      std::vector<uint8_t> cval;
      cidx.reserve(idx.size());
      cval.reserve(idx.size());
      const std::vector<uint8_t>& d = dig[static_cast<size_t>(l)];
      for (size_t i = 0; i < idx.size(); ++i) {
        uint8_t v = static_cast<uint8_t>(
            m.table[static_cast<size_t>(val[i]) * static_cast<size_t>(n) + d[idx[i]]]);
        if (hz && v == zero) continue;
        cidx.push_back(idx[i]);
        cval.push_back(v);
      }
      self(self, cidx, cval, depth + 1);
    }
  };
  rec(rec, idx0, val0, 0);
  return t;
}

SignatureTable product_signature(const SignatureTable& a, const SignatureTable& b) {
  if (a.words != b.words || !a.words)
    throw std::invalid_argument("product signatures need tables over the same enumeration");
  SignatureTable t;
  t.words = a.words;
  t.hash.resize(a.hash.size());
  for (size_t i = 0; i < a.hash.size(); ++i)
    t.hash[i] = mix(mix(0x27d4eb2f165667c5ULL, a.hash[i]), b.hash[i]);
  return t;
}

size_t signature_class_count(const SignatureTable& t) {
  std::unordered_set<uint64_t> s(t.hash.begin(), t.hash.end());
  return s.size();
}

std::optional<Identity> separating_identity(const FiniteMonoid& holder, const SignatureTable& ht,
                                            const FiniteMonoid& refuter, const SignatureTable& rt,
                                            const WordEnum& we) {
  if (ht.words != &we || rt.words != &we)
    throw std::invalid_argument("signature tables built over a different enumeration");
  std::vector<size_t> order(we.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const std::string &da = we.digits(a), &db = we.digits(b);
    if (da.size() != db.size()) return da.size() < db.size();
    return da < db;
  });
  struct Group {
    size_t first;
    uint64_t refuter_hash;
  };
  std::unordered_map<uint64_t, Group> groups;
  for (size_t id : order) {
    uint64_t g = ht.hash[id];
    auto [it, inserted] = groups.try_emplace(g, Group{id, rt.hash[id]});
    if (inserted || rt.hash[id] == it->second.refuter_hash) continue;
    Identity cand{we.word(it->second.first), we.word(id)};
    if (!satisfies(holder, cand).holds) continue;  // hash collision, not a real identity
    if (satisfies(refuter, cand).holds) continue;
    return cand;
  }
  return std::nullopt;
}

CompareOutcome bounded_variety_compare(const FiniteMonoid& a, const FiniteMonoid& b,
                                       CompareBounds bounds) {
  WordEnum we(bounds.letters, bounds.max_len);
  SignatureTable ta = signature_table(a, we), tb = signature_table(b, we);
  CompareOutcome out;
  out.bounds = bounds;
  out.holds_a_fails_b = separating_identity(a, ta, b, tb, we);
  out.holds_b_fails_a = separating_identity(b, tb, a, ta, we);
  return out;
}

}  // namespace monvar
