#include "monvar/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "monvar/analysis.hpp"
#include "monvar/deduction.hpp"
#include "monvar/monoid.hpp"

namespace monvar {

namespace {

double now_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct Suite {
  SuiteResult out;

  void check(const std::string& id, bool pass, const std::string& detail = "") {
    out.checks.push_back({id, pass, detail});
  }
};

Rule mk_rule(const std::string& text) { return {text, parse_identity(text)}; }

DeductionChain chain_of(const std::vector<Rule>& rules, const std::vector<const char*>& words,
                        const std::vector<std::string>& steps) {
  DeductionChain c;
  c.rules = rules;
  for (const char* w : words) c.words.push_back(parse_word(w));
  for (const std::string& s : steps) c.steps.push_back({s, std::nullopt});
  return c;
}

void check_chain(Suite& s, const std::string& id, const DeductionChain& chain) {
  ChainReport r = verify_chain(chain);
  std::ostringstream d;
  d << chain.words.size() - 1 << " steps";
  if (!r.ok) d << "; step " << r.failed_step << ": " << r.message;
  s.check(id, r.ok, d.str());
}

std::string assignment_text(const FiniteMonoid& m, const Assignment& a) {
  std::ostringstream os;
  for (size_t i = 0; i < a.letters.size(); ++i) {
    if (i) os << ' ';
    os << format_letter(a.letters[i]) << "->" << m.labels[static_cast<size_t>(a.values[i])];
  }
  return os.str();
}

void check_holds(Suite& s, const std::string& id, const FiniteMonoid& m, const Identity& ident,
                 Engine engine = Engine::pruned) {
  SatResult r = satisfies(m, ident, engine);
  std::string detail = format_identity(ident);
  if (!r.holds && r.witness) detail += "; refuted by " + assignment_text(m, *r.witness);
  s.check(id, r.holds, detail);
}

void check_fails(Suite& s, const std::string& id, const FiniteMonoid& m, const Identity& ident,
                 Engine engine = Engine::pruned) {
  SatResult r = satisfies(m, ident, engine);
  bool ok = !r.holds && r.witness.has_value() && refutes(m, ident, *r.witness);
  std::string detail = format_identity(ident);
  if (ok) detail += "; witness " + assignment_text(m, *r.witness);
  if (r.holds) detail += "; unexpectedly holds";
  s.check(id, ok, detail);
}

FiniteMonoid word_monoid(std::initializer_list<const char*> gens) {
  std::vector<Word> ws;
  for (const char* g : gens) ws.push_back(parse_word(g));
  return build_word_monoid(ws).monoid;
}

FiniteMonoid class_monoid(const char* cls) {
  return build_class_monoid({parse_class(cls)}).monoid;
}

Word random_word(std::mt19937_64& rng, const std::vector<Letter>& letters, int max_len) {
  int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(letters[rng() % letters.size()]);
  return w;
}

// ---- congruence class suites ----

void suite_gamma_elements(Suite& s, const HarnessOptions&) {
  ClassMonoid g = build_class_monoid({canon(parse_word("x^2y^2"))});
  s.check("ten-elements", g.monoid.size == 10, "size " + std::to_string(g.monoid.size));
  s.check("zero-last", g.monoid.zero.has_value() && *g.monoid.zero == g.monoid.size - 1);
  s.check("identity-first", g.monoid.identity == 0 && g.monoid.labels[0] == "1");

  std::set<std::string> got(g.monoid.labels.begin(), g.monoid.labels.end());
  std::set<std::string> want{"1", "x", "y", "xx+", "xy", "yy+", "xx+y", "xyy+", "xx+yy+", "0"};
  std::string joined;
  for (const std::string& l : g.monoid.labels) joined += l + " ";
  s.check("labels-frozen", got == want, joined);

  // The whole table agrees with multiplying classes directly.
  bool table_ok = g.monoid.zero.has_value();
  for (size_t i = 0; table_ok && i < g.elements.size(); ++i)
    for (size_t j = 0; table_ok && j < g.elements.size(); ++j) {
      GammaClass prod = class_multiply(g.elements[i], g.elements[j]);
      auto idx = g.index_of(prod);
      int want_idx = idx ? *idx : *g.monoid.zero;
      if (g.monoid.mul(static_cast<int>(i), static_cast<int>(j)) != want_idx) table_ok = false;
    }
  s.check("table-matches-class-products", table_ok);
}

std::vector<std::pair<size_t, size_t>> runs_of(const Word& w) {
  std::vector<std::pair<size_t, size_t>> r;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    r.push_back({i, j});
    i = j;
  }
  return r;
}

// Closure of single-run exponent rewrites preserving the simple letters, the
// independent reading of the congruence. Two words of length up to cap with
// the same run sequence connect run by run through words no longer than
// twice the cap, so bounding intermediates keeps the closure complete on the
// enumerated universe while staying finite.
std::set<Word> move_closure(const Word& u, int cap) {
  size_t max_len = 2 * static_cast<size_t>(cap);
  std::set<Word> seen{u};
  std::vector<Word> queue{u};
  while (!queue.empty()) {
    Word w = queue.back();
    queue.pop_back();
    std::vector<Letter> simple = simple_letters(w);
    for (auto [b, e] : runs_of(w)) {
      for (int k = 1; k <= cap; ++k) {
        if (static_cast<size_t>(k) == e - b) continue;
        if (w.size() - (e - b) + static_cast<size_t>(k) > max_len) continue;
        Word next(w.begin(), w.begin() + static_cast<long>(b));
        next.insert(next.end(), static_cast<size_t>(k), w[b]);
        next.insert(next.end(), w.begin() + static_cast<long>(e), w.end());
        if (simple_letters(next) != simple) continue;
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return seen;
}

void suite_gamma_oracle(Suite& s, const HarnessOptions&) {
  std::vector<Letter> letters{{'x', -1}, {'y', -1}, {'z', -1}};
  std::vector<Word> words{Word{}};
  size_t begin = 0;
  for (int len = 1; len <= 6; ++len) {
    size_t end = words.size();
    for (size_t i = begin; i < end; ++i)
      for (const Letter& l : letters) {
        Word w = words[i];
        w.push_back(l);
        words.push_back(w);
      }
    begin = end;
  }
  s.check("word-count", words.size() == 1093, std::to_string(words.size()) + " words");

  std::set<Word> all(words.begin(), words.end());
  std::map<GammaClass, std::vector<Word>> groups;
  for (const Word& w : words) groups[canon(w)].push_back(w);

  bool agree = true;
  std::string mismatch;
  for (const auto& [cls, members] : groups) {
    std::set<Word> closure = move_closure(members.front(), 6);
    std::set<Word> inside;
    for (const Word& w : closure)
      if (all.count(w)) inside.insert(w);
    std::set<Word> expected(members.begin(), members.end());
    if (inside != expected) {
      agree = false;
      mismatch = "class " + format_class(cls);
      break;
    }
  }
  s.check("canon-matches-move-closure", agree,
          agree ? std::to_string(groups.size()) + " classes" : mismatch);
  s.check("canon-spot", canon(parse_word("x^2tyx^3y")) == parse_class("x+ty+x+y+"));
}

// ---- engine cross-checks ----

std::vector<std::pair<std::string, FiniteMonoid>> small_pool() {
  std::vector<std::pair<std::string, FiniteMonoid>> pool;
  pool.push_back({"MW: xyx", word_monoid({"xyx"})});
  pool.push_back({"MW: xy", word_monoid({"xy"})});
  pool.push_back({"MG: yxx+", class_monoid("yxx+")});
  pool.push_back({"MG: xx+yy+", class_monoid("xx+yy+")});
  pool.push_back({"MG: x+yzx+", class_monoid("x+yzx+")});
  pool.push_back({"MG: x+tyy+x+", class_monoid("x+tyy+x+")});
  return pool;
}

void suite_engine_agreement(Suite& s, const HarnessOptions& opts) {
  auto pool = small_pool();
  pool.push_back({"MG: c1", build_class_monoid({make_cn(1).cls}).monoid});
  std::mt19937_64 rng(opts.seed ^ 0x656e67696e65ULL);
  std::vector<Letter> letters{{'x', -1}, {'y', -1}, {'z', -1}};
  int holds = 0, fails = 0;
  std::string problem;
  for (int i = 0; i < 200 && problem.empty(); ++i) {
    const auto& [name, m] = pool[rng() % pool.size()];
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Letter> use(letters.begin(), letters.begin() + k);
    Identity ident{random_word(rng, use, 6), random_word(rng, use, 6)};
    SatResult b = satisfies(m, ident, Engine::brute);
    SatResult p = satisfies(m, ident, Engine::pruned);
    if (b.holds != p.holds) {
      problem = name + " disagrees on " + format_identity(ident);
      break;
    }
    if (b.holds) {
      ++holds;
    } else {
      ++fails;
      if (!b.witness || !refutes(m, ident, *b.witness) || !p.witness ||
          !refutes(m, ident, *p.witness))
        problem = name + " bad witness for " + format_identity(ident);
    }
  }
  s.check("engines-agree-on-200-cases", problem.empty(),
          problem.empty() ? "holds " + std::to_string(holds) + ", fails " + std::to_string(fails)
                          : problem);
}

void suite_product_conjunction(Suite& s, const HarnessOptions& opts) {
  auto pool = small_pool();
  std::mt19937_64 rng(opts.seed ^ 0x70726f64ULL);
  std::vector<Letter> letters{{'x', -1}, {'y', -1}, {'z', -1}};
  std::string problem;
  int held = 0;
  for (int i = 0; i < 50 && problem.empty(); ++i) {
    const auto& [na, a] = pool[rng() % pool.size()];
    const auto& [nb, b] = pool[rng() % pool.size()];
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Letter> use(letters.begin(), letters.begin() + k);
    Identity ident{random_word(rng, use, 5), random_word(rng, use, 5)};
    FiniteMonoid prod = direct_product(a, b);
    bool in_a = satisfies(a, ident).holds;
    bool in_b = satisfies(b, ident).holds;
    bool in_prod = satisfies(prod, ident).holds;
    if (in_prod != (in_a && in_b))
      problem = na + " x " + nb + " breaks conjunction on " + format_identity(ident);
    held += in_prod;
  }
  s.check("product-satisfies-conjunction-50-cases", problem.empty(),
          problem.empty() ? std::to_string(held) + " held in the product" : problem);
}

// ---- structural properties ----

void suite_structure(Suite& s, const HarnessOptions&) {
  std::vector<std::pair<std::string, FiniteMonoid>> ms;
  ms.push_back({"MW:", build_word_monoid({}).monoid});
  ms.push_back({"MW: 1", word_monoid({"1"})});
  ms.push_back({"MW: x", word_monoid({"x"})});
  ms.push_back({"MW: xy", word_monoid({"xy"})});
  ms.push_back({"MW: xyx", word_monoid({"xyx"})});
  for (const char* c : {"yxx+", "xx+y", "xx+yy+", "x+yzx+", "x+tyy+x+", "x+yy+tx+"})
    ms.push_back({std::string("MG: ") + c, class_monoid(c)});
  for (int n : {1, 2, 3})
    ms.push_back({"MG: c" + std::to_string(n), build_class_monoid({make_cn(n).cls}).monoid});
  ms.push_back({"top", direct_product(class_monoid("x+tyy+x+"), class_monoid("x+yy+tx+"))});

  std::string bad_assoc, bad_aper, bad_j, bad_conv, bad_idem;
  for (const auto& [name, m] : ms) {
    if (!is_associative(m)) bad_assoc += name + " ";
    if (!is_aperiodic(m)) bad_aper += name + " ";
    if (!is_j_trivial(m)) bad_j += name + " ";
    bool conv = m.identity == 0 && (m.labels[0] == "1" || m.labels[0] == "(1,1)") &&
                (!m.zero || (*m.zero == m.size - 1 || m.size == 1));
    if (!conv) bad_conv += name + " ";
    IdempotentReport rep = idempotent_checks(m);
    for (int e : rep.idempotents)
      if (m.mul(e, e) != e) bad_idem += name + " ";
    if (!rep.commuting) {
      if (!rep.commuting_witness) {
        bad_idem += name + " ";
      } else {
        auto [e, f] = *rep.commuting_witness;
        if (m.mul(e, f) == m.mul(f, e)) bad_idem += name + " ";
      }
    }
  }
  s.check("all-associative", bad_assoc.empty(), bad_assoc);
  s.check("all-aperiodic", bad_aper.empty(), bad_aper);
  s.check("all-j-trivial", bad_j.empty(), bad_j);
  s.check("element-conventions", bad_conv.empty(), bad_conv);
  s.check("idempotent-reports-consistent", bad_idem.empty(), bad_idem);

  IdempotentReport wm = idempotent_checks(word_monoid({"xy"}));
  s.check("word-monoid-idempotents-trivial",
          wm.idempotents == std::vector<int>{0, 4} && wm.commuting && wm.central);
  IdempotentReport cm = idempotent_checks(class_monoid("xx+yy+"));
  s.check("class-monoid-idempotents-noncommuting", !cm.commuting && cm.commuting_witness.has_value());
}

// ---- catalog ----

void suite_catalog_sanity(Suite& s, const HarnessOptions& opts) {
  auto names = basis_names();
  s.check("names-count", names.size() == 34, std::to_string(names.size()));

  FiniteMonoid trivial = build_word_monoid({}).monoid;
  BasisOptions bopts;
  bopts.phi1 = opts.phi1;
  std::string problem;
  size_t total = 0;
  for (const std::string& name : names) {
    std::vector<Identity> ids;
    try {
      ids = basis_identities(make_basis(name, bopts));
    } catch (const std::exception& e) {
      problem = name + ": " + e.what();
      break;
    }
    if (ids.empty()) {
      problem = name + ": empty";
      break;
    }
    total += ids.size();
    for (const Identity& id : ids)
      if (!satisfies(trivial, id, Engine::brute).holds) {
        problem = name + ": trivial monoid refutes " + format_identity(id);
        break;
      }
  }
  s.check("all-bases-expand", problem.empty(),
          problem.empty() ? std::to_string(total) + " identities total" : problem);

  std::string dual_problem;
  for (const std::string& name : names) {
    if (name.size() < 2 || name.back() != 'd') continue;
    std::string base = name.substr(0, name.size() - 1);
    auto a = basis_identities(make_basis(base, bopts));
    auto b = basis_identities(make_basis(name, bopts));
    if (a.size() != b.size()) {
      dual_problem = name + ": size mismatch";
      break;
    }
    for (size_t i = 0; i < a.size(); ++i)
      if (b[i] != dual_identity(a[i])) {
        dual_problem = name + ": entry " + std::to_string(i);
        break;
      }
  }
  s.check("dual-bases-mirror", dual_problem.empty(), dual_problem);

  bool rejects = true;
  for (const char* n : {"Bd", "Pd", "D11d", "D15d", "bogus"}) {
    try {
      make_basis(n);
      rejects = false;
    } catch (const std::invalid_argument&) {
    }
  }
  s.check("self-dual-and-unknown-names-rejected", rejects);

  s.check("frozen-counts",
          basis_identities(make_basis("B")).size() == 1 &&
              basis_identities(make_basis("Q")).size() == 3 &&
              basis_identities(make_basis("D15")).size() == 15 &&
              basis_identities(make_basis("D13")).size() == 26);
}

void suite_d15_generators(Suite& s, const HarnessOptions& opts) {
  BasisOptions bopts;
  bopts.phi1 = opts.phi1;
  std::vector<Identity> ids = basis_identities(make_basis("D15", bopts));
  std::vector<std::pair<std::string, FiniteMonoid>> targets;
  targets.push_back({"bridge-monoid", class_monoid("x+yzx+")});
  targets.push_back({"double-square-monoid", class_monoid("xx+yy+")});
  for (const auto& [tag, m] : targets) {
    std::string bad;
    for (const Identity& id : ids)
      if (!satisfies(m, id, Engine::pruned).holds) bad += format_identity(id) + "; ";
    s.check("defining-identities-hold-in-" + tag, bad.empty(),
            bad.empty() ? std::to_string(ids.size()) + " identities" : bad);
  }
}

// ---- lattice corner facts ----

void suite_prop51(Suite& s, const HarnessOptions&) {
  FiniteMonoid mxyx = word_monoid({"xyx"});
  FiniteMonoid g10 = class_monoid("xx+yy+");
  Identity sigma3 = sigma_identity(3);

  check_holds(s, "swap-identity-holds-in-sandwich-monoid", mxyx, sigma3, Engine::brute);
  check_fails(s, "swap-identity-fails-in-double-square-monoid", g10, sigma3);

  auto partners = identity_partners(mxyx, parse_word("xzxyty"), 8);
  std::string got;
  for (const Word& w : partners) got += format_word(w) + " ";
  s.check("unique-partner-up-to-length-8",
          partners.size() == 1 && partners[0] == parse_word("xzyxty"), got);

  IsotermResult iso = is_isoterm_bounded(direct_product(mxyx, g10), parse_word("xzxyty"), 8);
  s.check("isoterm-for-product-up-to-length-8", !iso.partner.has_value(),
          iso.partner ? format_word(*iso.partner) : "no partner");

  check_fails(s, "swap-identity-fails-in-own-word-monoid", word_monoid({"xzxyty"}), sigma3);

  CompareOutcome cmp = bounded_variety_compare(mxyx, word_monoid({"xy"}));
  s.check("two-letter-monoid-strictly-below",
          !cmp.holds_a_fails_b.has_value() && cmp.holds_b_fails_a.has_value() &&
              *cmp.holds_b_fails_a == parse_identity("x^2y = xyx"),
          cmp.holds_b_fails_a ? format_identity(*cmp.holds_b_fails_a) : "none");
}

void suite_fig1(Suite& s, const HarnessOptions&) {
  std::vector<std::pair<std::string, FiniteMonoid>> nodes;
  nodes.push_back({"MW:", build_word_monoid({}).monoid});
  nodes.push_back({"MW: 1", word_monoid({"1"})});
  nodes.push_back({"MW: x", word_monoid({"x"})});
  nodes.push_back({"MW: xy", word_monoid({"xy"})});
  for (const char* c : {"yxx+", "xx+y", "xx+yy+", "x+yzx+", "x+tyy+x+", "x+yy+tx+"})
    nodes.push_back({std::string("MG: ") + c, class_monoid(c)});
  nodes.push_back({"top", direct_product(nodes[8].second, nodes[9].second)});
  nodes.push_back({"join-lower", direct_product(nodes[4].second, nodes[5].second)});
  nodes.push_back({"join-upper", direct_product(nodes[6].second, nodes[7].second)});

  std::vector<int> sizes;
  for (const auto& [name, m] : nodes) sizes.push_back(m.size);
  std::vector<int> want_sizes{1, 2, 3, 5, 7, 7, 10, 16, 22, 22, 484, 49, 160};
  std::string size_text;
  for (int v : sizes) size_text += std::to_string(v) + " ";
  s.check("node-sizes", sizes == want_sizes, size_text);

  // leq[i][j] holds when the variety of node i lies below the variety of
  // node j in the diagram.
  static const char* leq[13] = {
      "1111111111111",  // trivial
      "0111111111111",  // one generator, empty word
      "0011111111111",  // single letter
      "0001111111111",  // two letters
      "0000101111111",  // yxx+
      "0000011111111",  // xx+y
      "0000001011101",  // xx+yy+
      "0000000111101",  // x+yzx+
      "0000000010100",  // x+tyy+x+
      "0000000001100",  // x+yy+tx+
      "0000000000100",  // top product
      "0000001111111",  // lower join
      "0000000011101",  // upper join
  };

  WordEnum we(4, 8);
  std::vector<SignatureTable> tabs(nodes.size());
  for (size_t i = 0; i < 10; ++i) tabs[i] = signature_table(nodes[i].second, we);
  tabs[10] = product_signature(tabs[8], tabs[9]);
  tabs[11] = product_signature(tabs[4], tabs[5]);
  tabs[12] = product_signature(tabs[6], tabs[7]);

  std::string mismatches;
  std::string samples;
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      auto sep = separating_identity(nodes[i].second, tabs[i], nodes[j].second, tabs[j], we);
      bool expect_sep = leq[j][i] == '0';  // j not below i: something holds in i, fails in j
      if (sep.has_value() != expect_sep)
        mismatches += nodes[i].first + " vs " + nodes[j].first + "; ";
      if (sep && samples.size() < 160 && i < 6 && j < 6)
        samples += nodes[i].first + "/" + nodes[j].first + ": " + format_identity(*sep) + "; ";
    }
  s.check("order-matrix-156-directions", mismatches.empty(),
          mismatches.empty() ? samples : mismatches);
}

void suite_prop52_small(Suite& s, const HarnessOptions&) {
  CnWords cn = make_cn(3);
  ClassMonoid cm = build_class_monoid({cn.cls});
  const FiniteMonoid& m = cm.monoid;
  s.check("witness-monoid-size", m.size == 126, std::to_string(m.size));

  check_holds(s, "square-collapse-xyxy-xyyx", m, parse_identity("xyxy = xy^2x"));
  check_holds(s, "square-collapse-xyyx-yxyx", m, parse_identity("xy^2x = yxyx"));
  check_holds(s, "square-collapse-yxyx-yxxy", m, parse_identity("yxyx = yx^2y"));
  check_holds(s, "short-insert-holds", m, parse_identity("xytxy1^2y = xyxytxy1^2y"));
  check_holds(s, "short-insert-mirror-holds", m, parse_identity("yxtxy1^2y = yxyxtxy1^2y"));
  check_fails(s, "full-insert-fails", m,
              parse_identity("xytxy1^2y2^2y3^2y = xyxytxy1^2y2^2y3^2y"));
  check_fails(s, "defining-pair-fails", m, Identity{cn.c, cn.c_prime});

  Perm e = Perm::identity(2);
  Perm u = parse_perm("2,1");
  VWords vee = make_v(3, e, e);
  VWords veu = make_v(3, e, u);

  std::set<Letter> keep{{'y', 1}, {'y', 2}, {'t', -1}, {'d', 1}, {'d', 2}, {'d', 3}};
  Substitution ren;
  ren[{'x', -1}] = parse_word("y1");
  ren[{'y', -1}] = parse_word("y2");
  ren[{'y', 1}] = parse_word("d1");
  ren[{'y', 2}] = parse_word("d2");
  ren[{'y', 3}] = parse_word("d3");
  s.check("interlock-projects-to-witness-pair",
          project(vee.v, keep) == substitute(cn.c, ren) &&
              project(veu.v, keep) == substitute(cn.c_prime, ren),
          format_word(project(vee.v, keep)));

  Identity vid{vee.v, veu.v};
  Assignment a;
  for (const Letter& l : identity_letters(vid)) {
    GammaClass img;
    if (l == Letter{'y', 1}) img = canon(parse_word("x"));
    else if (l == Letter{'y', 2}) img = canon(parse_word("y"));
    else if (l == Letter{'t', -1}) img = canon(parse_word("t"));
    else if (l == Letter{'d', 1}) img = canon(parse_word("y1"));
    else if (l == Letter{'d', 2}) img = canon(parse_word("y2"));
    else if (l == Letter{'d', 3}) img = canon(parse_word("y3"));
    else {
      a.letters.push_back(l);
      a.values.push_back(m.identity);
      continue;
    }
    a.letters.push_back(l);
    a.values.push_back(*cm.index_of(img));
  }
  s.check("projection-assignment-refutes-interlock", refutes(m, vid, a));

  std::vector<std::pair<Perm, Perm>> cases{{e, e}, {u, e}, {e, u}, {u, u}};
  bool fam_ok = true;
  for (const auto& [xi, eta] : cases) {
    Word w = make_v(3, xi, eta).v;
    for (const auto& [xi2, eta2] : cases)
      if (in_v_family(w, 3, xi2, eta2) != (xi == xi2 && eta == eta2)) fam_ok = false;
  }
  s.check("interlock-family-membership", fam_ok);

  bool proj_ok =
      canon(project(vee.v, {{'a', 1}, {'c', 1}, {'t', -1}})) == parse_class("a1+tc1c1+a1+") &&
      canon(project(vee.v, {{'a', 1}, {'b', 1}, {'t', -1}})) == parse_class("a1+b1b1+ta1+") &&
      canon(project(vee.v, {{'b', 1}, {'a', 2}})) == parse_class("b1b1+a2a2+");
  s.check("interlock-small-projections", proj_ok);

  FiniteMonoid prod = direct_product(class_monoid("x+tyy+x+"), class_monoid("x+yy+tx+"));
  for (const char* cls : {"x+tyy+x+", "x+yy+tx+", "xx+yy+"}) {
    double t0 = now_s();
    StabilityResult r = is_class_stable_bounded(prod, parse_class(cls), 7);
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << (now_s() - t0) << "s";
    if (r.leak) d << "; leak " << format_identity(*r.leak);
    s.check(std::string("class-stable-in-product-") + cls, !r.leak.has_value(), d.str());
  }
}

// ---- negative identity generation ----

void suite_lemma34_negative(Suite& s, const HarnessOptions& opts) {
  FiniteMonoid m16 = class_monoid("x+yzx+");
  std::mt19937_64 rng(opts.seed ^ 0x626c6f636bULL);
  std::vector<Letter> block_letters{{'x', -1}, {'y', -1}, {'z', -1}};
  Letter T{'t', -1}, S{'s', -1}, F{'w', -1};

  auto simple_positions = [](const Word& w) {
    std::vector<size_t> pos;
    for (size_t i = 0; i < w.size(); ++i)
      if (occurrences(w, w[i]) == 1) pos.push_back(i);
    return pos;
  };
  auto skeleton = [&](const Word& w) {
    std::vector<Letter> sk;
    for (size_t i : simple_positions(w)) sk.push_back(w[i]);
    return sk;
  };
  auto block_alphabets = [](const Word& w) {
    Decomposition d = decompose(w);
    std::vector<std::vector<Letter>> out;
    for (const Word& b : d.blocks) out.push_back(alphabet(b));
    return out;
  };

  int done = 0, zeroth = 0, holds = 0;
  std::string problem;
  while (done < 100 && problem.empty()) {
    int simples = 1 + static_cast<int>(rng() % 2);
    Word u;
    auto add_block = [&] {
      Word b = random_word(rng, block_letters, 3);
      u.insert(u.end(), b.begin(), b.end());
    };
    add_block();
    u.push_back(T);
    add_block();
    if (simples == 2) {
      u.push_back(S);
      add_block();
    }
    // Every block letter must occur at least twice to stay off the skeleton.
    for (const Letter& l : block_letters) {
      if (occurrences(u, l) == 1) {
        auto it = std::find(u.begin(), u.end(), l);
        u.insert(it, l);
      }
    }

    auto spos = simple_positions(u);
    int mode = static_cast<int>(rng() % 5);
    if (mode == 0 && spos.size() < 2) mode = 1;
    Word v = u;
    bool want_skeleton_change = mode <= 2;
    int touched_block = -1;
    if (mode == 0) {
      std::swap(v[spos[0]], v[spos[1]]);
    } else if (mode == 1) {
      size_t p = spos[rng() % spos.size()];
      v.erase(v.begin() + static_cast<long>(p));
    } else if (mode == 2) {
      size_t p = spos[rng() % spos.size()];
      v.insert(v.begin() + static_cast<long>(p), v[p]);
    } else if (mode == 3) {
      // Fresh squared letter lands inside one block span.
      std::vector<size_t> bounds{0};
      for (size_t p : spos) bounds.push_back(p);
      bounds.push_back(u.size());
      size_t bi = rng() % (spos.size() + 1);
      size_t lo = bi == 0 ? 0 : bounds[bi] + 1;
      size_t hi = bounds[bi + 1];
      size_t at = lo + (lo == hi ? 0 : rng() % (hi - lo + 1));
      v.insert(v.begin() + static_cast<long>(at), 2, F);
      touched_block = static_cast<int>(bi);
    } else {
      // Drop every occurrence of one multiple letter.
      std::vector<Letter> mult = multiple_letters(u);
      if (mult.empty()) continue;
      Letter l = mult[rng() % mult.size()];
      std::erase(v, l);
      touched_block = 0;  // reported only when the change is provably front-block
      want_skeleton_change = false;
    }

    if (v == u) continue;
    bool skel_changed = skeleton(v) != skeleton(u);
    bool alf_changed = !skel_changed && block_alphabets(v) != block_alphabets(u);
    if (want_skeleton_change && !skel_changed) continue;
    if (!want_skeleton_change && !skel_changed && !alf_changed) continue;

    if (mode == 3 && touched_block == 0) ++zeroth;
    Identity ident{u, v};
    SatResult r = satisfies(m16, ident, Engine::pruned);
    if (r.holds) {
      ++holds;
      problem = format_identity(ident) + " unexpectedly holds";
    } else if (!r.witness || !refutes(m16, ident, *r.witness)) {
      problem = format_identity(ident) + " bad witness";
    }
    ++done;
  }
  s.check("hundred-perturbed-pairs-refuted", problem.empty(),
          problem.empty() ? std::to_string(done) + " pairs, " + std::to_string(zeroth) +
                                " touching the leading block"
                          : problem);
}

// ---- deduction suites ----

void suite_lemma41(Suite& s, const HarnessOptions&) {
  FiniteMonoid mxyx = word_monoid({"xyx"});
  FiniteMonoid g10 = class_monoid("xx+yy+");
  check_holds(s, "idempotent-power-holds-in-sandwich-monoid", mxyx, parse_identity("x^2 = x^3"),
              Engine::brute);
  check_holds(s, "square-product-idempotent-in-sandwich-monoid", mxyx,
              parse_identity("x^2y^2 = x^2y^2x^2y^2"), Engine::brute);
  check_holds(s, "idempotent-power-holds-in-double-square-monoid", g10,
              parse_identity("x^2 = x^3"), Engine::brute);
  check_fails(s, "square-product-not-idempotent-in-double-square-monoid", g10,
              parse_identity("x^2y^2 = x^2y^2x^2y^2"));
  check_fails(s, "swap-identity-separates", g10, sigma_identity(3));
}

void suite_lemma42(Suite& s, const HarnessOptions&) {
  Rule r1 = mk_rule("xyx = xyx^2");
  Rule r3 = mk_rule("xyxy = yxyx");
  Rule r5 = mk_rule("xty^2x = xtyxyx");
  check_chain(s, "insert-between-squares-chain",
              chain_of({r1, r3, r5},
                       {"xty^2x", "xtyxyx", "xtxyxy", "xtx^2yxy", "xtxyxyx", "xtxy^2x"},
                       {r5.name, r3.name, r1.name, r3.name, r5.name}));

  FiniteMonoid m22 = class_monoid("x+tyy+x+");
  check_holds(s, "tail-monoid-satisfies-duplication", m22, parse_identity("xyx = xyx^2"));
  check_holds(s, "tail-monoid-satisfies-front-duplication", m22, parse_identity("xyx = x^2yx"));
  check_holds(s, "tail-monoid-satisfies-square-swap", m22, parse_identity("xyxy = yxyx"));
  check_fails(s, "tail-monoid-refutes-insert", m22, parse_identity("xty^2x = xtxy^2x"));
  check_fails(s, "tail-monoid-refutes-interleave", m22, parse_identity("xty^2x = xtyxyx"));
}

void suite_lemma43_small(Suite& s, const HarnessOptions&) {
  Rule r1 = mk_rule("xyx = xyx^2");
  Rule r2 = mk_rule("xyx = x^2yx");
  Rule r3 = mk_rule("xyxy = yxyx");
  Rule r4 = mk_rule("xty^2x = xtxy^2x");
  Rule r5 = mk_rule("xty^2x = xtyxyx");

  ClassMonoid cm1 = build_class_monoid({make_cn(1).cls});
  check_holds(s, "n1-square-collapse", cm1.monoid, parse_identity("xyxy = xy^2x"));
  check_fails(s, "n1-defining-pair-fails", cm1.monoid,
              Identity{make_cn(1).c, make_cn(1).c_prime});

  check_chain(s, "insert-derivation",
              chain_of({r2, r4}, {"xytxy1^2y", "xytxyy1^2y", "xyxytxyy1^2y", "xyxytxy1^2y"},
                       {r4.name, r2.name, r4.name}));
  check_chain(s, "insert-derivation-mirror",
              chain_of({r1, r2, r4, r5},
                       {"yxtxy1^2y", "yxtxyy1^2y", "yxtx^2yy1^2y", "yxtxyxyy1^2y",
                        "yxyxtxyxyy1^2y", "yxyxtxyy1^2y", "yxyxtxy1^2y"},
                       {r4.name, r1.name, r5.name, r2.name, r1.name, r4.name}));

  Rule r6 = mk_rule("xytxy1^2y = xyxytxy1^2y");
  Rule r7 = mk_rule("yxtxy1^2y = yxyxtxy1^2y");
  check_chain(s, "swap-chain-through-doubled-prefix",
              chain_of({r3, r6, r7},
                       {"xytxy1^2y", "xyxytxy1^2y", "yxyxtxy1^2y", "yxtxy1^2y"},
                       {r6.name, r3.name, r7.name}));

  Substitution yt;
  yt[{'t', -1}] = parse_word("yt");
  Word left = substitute(concat(parse_word("x"), make_cn(1).c), yt);
  Word right = substitute(concat(parse_word("x"), make_cn(1).c_prime), yt);
  s.check("unstable-class-substitution",
          left == parse_word("x^2y^2txy1^2y") && right == parse_word("xyxytxy1^2y"),
          format_word(left) + " = " + format_word(right));
  check_chain(s, "substitution-connects-to-insert",
              chain_of({r2}, {"xytxy1^2y", "x^2ytxy1^2y", "x^2y^2txy1^2y"},
                       {r2.name, r2.name}));

  CnWords c5 = make_cn(5);
  Rule rc5{format_identity({c5.c, c5.c_prime}), {c5.c, c5.c_prime}};
  DeductionChain big;
  big.rules = {r1, r2, rc5};
  Perm id3 = Perm::identity(3);
  big.words = {family_word(FamilyKind::c, 1, 1, 1, id3),
               parse_word("z1t1xytz2t2xz1^2y1^2z2y2^2z3yt3z3"),
               parse_word("z1t1xytz2t2xz1^2y1^2z2^2y2^2z3yt3z3"),
               parse_word("z1t1xytz2t2xz1^2y1^2z2^2y2^2z3^2yt3z3"),
               parse_word("z1t1yxtz2t2xz1^2y1^2z2^2y2^2z3^2yt3z3"),
               parse_word("z1t1yxtz2t2xz1y1^2z2^2y2^2z3^2yt3z3"),
               parse_word("z1t1yxtz2t2xz1y1^2z2y2^2z3^2yt3z3"),
               family_word(FamilyKind::c_prime, 1, 1, 1, id3)};
  RuleMatch mid;
  mid.left = parse_word("z1t1");
  mid.right = parse_word("t3z3");
  mid.phi[{'x', -1}] = parse_word("x");
  mid.phi[{'y', -1}] = parse_word("y");
  mid.phi[{'t', -1}] = parse_word("tz2t2");
  mid.phi[{'y', 1}] = parse_word("z1");
  mid.phi[{'y', 2}] = parse_word("y1");
  mid.phi[{'y', 3}] = parse_word("z2");
  mid.phi[{'y', 4}] = parse_word("y2");
  mid.phi[{'y', 5}] = parse_word("z3");
  big.steps = {{r1.name, std::nullopt}, {r1.name, std::nullopt}, {r2.name, std::nullopt},
               {rc5.name, mid},         {r1.name, std::nullopt}, {r1.name, std::nullopt},
               {r2.name, std::nullopt}};
  check_chain(s, "parameter-reduction-chain", big);

  DeductionChain searched = big;
  searched.steps[3].how = std::nullopt;
  check_chain(s, "parameter-reduction-chain-searched", searched);
}

void suite_sec6_chains(Suite& s, const HarnessOptions&) {
  Rule r1 = mk_rule("xyx = xyx^2");
  Rule r2 = mk_rule("xyx = x^2yx");
  Perm id3 = Perm::identity(3);
  Word c111 = family_word(FamilyKind::c, 1, 1, 1, id3);
  Word c111p = family_word(FamilyKind::c_prime, 1, 1, 1, id3);
  Rule rc{format_identity({c111, c111p}), {c111, c111p}};

  check_chain(s, "one-step-swap", chain_of({rc}, {"xyzxyz", "yxzxyz"}, {rc.name}));
  check_chain(s, "squared-context-swap",
              chain_of({r2, rc}, {"xyxzyz", "xyxz^2yz", "yx^2z^2yz", "yx^2zyz"},
                       {r2.name, rc.name, r2.name}));
  check_chain(s, "interior-insert",
              chain_of({r2, rc},
                       {"xyzxyz", "x^2yzxyz", "x^2y^2zxyz", "xyxyzxyz", "xy^2xzxyz",
                        "xyxzxyz"},
                       {r2.name, r2.name, rc.name, rc.name, r2.name}));

  Identity g10 = block_square_identity(1, 0, {Word{}});
  Rule rg{format_identity(g10), g10};
  check_chain(s, "block-rewrite",
              chain_of({r2, rg}, {"txyxy", "tx^2yxy", "tx^2y^2xy", "txyxyxy"},
                       {r2.name, r2.name, rg.name}));

  Substitution sub;
  sub[{'t', 1}] = parse_word("t1x");
  sub[{'t', 2}] = parse_word("yt2");
  Identity target = block_square_identity(1, 1, {parse_word("x"), parse_word("y")});
  s.check("block-substitution-lands-on-family",
          substitute(parse_word("xt1xyt2y"), sub) == target.lhs &&
              substitute(parse_word("xt1yxt2y"), sub) == target.rhs,
          format_identity(target));

  DeduceOutcome a =
      deduce_bounded({r1, r2}, parse_identity("xt1x^3y^2t2y = xt1x^2y^2t2y"), 2, 10);
  DeduceOutcome b =
      deduce_bounded({r1, r2}, parse_identity("xt1xyx^2yt2y = xt1xyxyt2y"), 2, 10);
  s.check("block-substitution-connects",
          a.chain.has_value() && verify_chain(*a.chain).ok && b.chain.has_value() &&
              verify_chain(*b.chain).ok);

  bool swaps = invertibility_distance(parse_word("xyzxyz"), parse_word("yxzxyz")) == 1 &&
               invertibility_distance(parse_word("x^2y^2zxyz"), parse_word("xyxyzxyz")) == 1 &&
               invertibility_distance(parse_word("xyxy"), parse_word("yxyx")) == 2;
  s.check("swap-distances", swaps);
}

using SuiteFn = void (*)(Suite&, const HarnessOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"gamma-elements", suite_gamma_elements},
      {"gamma-oracle", suite_gamma_oracle},
      {"engine-agreement", suite_engine_agreement},
      {"product-conjunction", suite_product_conjunction},
      {"structure", suite_structure},
      {"catalog-sanity", suite_catalog_sanity},
      {"d15-generators", suite_d15_generators},
      {"prop51", suite_prop51},
      {"fig1", suite_fig1},
      {"prop52-small", suite_prop52_small},
      {"lemma34-negative", suite_lemma34_negative},
      {"lemma41", suite_lemma41},
      {"lemma42", suite_lemma42},
      {"lemma43-small", suite_lemma43_small},
      {"sec6-chains", suite_sec6_chains},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, const HarnessOptions& opts) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    Suite s;
    s.out.name = name;
    double t0 = now_s();
    try {
      fn(s, opts);
    } catch (const std::exception& e) {
      s.check("no-exception", false, e.what());
    }
    s.out.seconds = now_s() - t0;
    return s.out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all(const HarnessOptions& opts) {
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : registry()) out.push_back(run_suite(name, opts));
  return out;
}

std::string report_to_text(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  int suites_failed = 0;
  for (const SuiteResult& r : results) {
    os.precision(1);
    os << (r.passed() ? "PASS" : "FAIL") << " " << r.name << " (" << std::fixed << r.seconds
       << "s)\n";
    if (!r.passed()) ++suites_failed;
    for (const CheckResult& c : r.checks) {
      os << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.id;
      if (!c.detail.empty()) os << "  [" << c.detail << "]";
      os << "\n";
    }
  }
  os << (suites_failed == 0 ? "all suites passed" : std::to_string(suites_failed) + " suite(s) failed")
     << "\n";
  return os.str();
}

std::string report_to_json(const std::vector<SuiteResult>& results) {
  nlohmann::json root;
  root["suites"] = nlohmann::json::array();
  bool all = true;
  for (const SuiteResult& r : results) {
    nlohmann::json jr;
    jr["name"] = r.name;
    jr["seconds"] = r.seconds;
    jr["passed"] = r.passed();
    jr["checks"] = nlohmann::json::array();
    for (const CheckResult& c : r.checks)
      jr["checks"].push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
    root["suites"].push_back(jr);
    all = all && r.passed();
  }
  root["passed"] = all;
  return root.dump(2);
}

}  // namespace monvar
