#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "monvar/analysis.hpp"
#include "monvar/deduction.hpp"
#include "monvar/harness.hpp"
#include "monvar/monoid.hpp"

using namespace monvar;

namespace {

// 0 = yes / all checks pass, 2 = a negative verdict, 1 = usage or input error.
constexpr int kNo = 2;

std::vector<int> parse_ints(const std::string& text, size_t count, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(std::stoi(piece));
  if (out.size() != count)
    throw std::invalid_argument(what + " needs " + std::to_string(count) +
                                " comma-separated integers");
  return out;
}

std::string witness_text(const FiniteMonoid& m, const Assignment& a) {
  std::ostringstream os;
  for (size_t i = 0; i < a.letters.size(); ++i) {
    if (i) os << "  ";
    os << format_letter(a.letters[i]) << " -> " << m.labels[static_cast<size_t>(a.values[i])];
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<Rule> rules_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<Rule> rules;
  for (const auto& jr : j.at("rules"))
    rules.push_back({jr.at("name").get<std::string>(),
                     {parse_word(jr.at("lhs").get<std::string>()),
                      parse_word(jr.at("rhs").get<std::string>())}});
  return rules;
}

FamilyKind kind_from_name(const std::string& name) {
  static const std::map<std::string, FamilyKind> table{
      {"a", FamilyKind::a},       {"a'", FamilyKind::a_prime}, {"a-prime", FamilyKind::a_prime},
      {"abar", FamilyKind::a_bar}, {"a-bar", FamilyKind::a_bar},
      {"c", FamilyKind::c},       {"c'", FamilyKind::c_prime}, {"c-prime", FamilyKind::c_prime},
      {"d", FamilyKind::d},       {"d'", FamilyKind::d_prime}, {"d-prime", FamilyKind::d_prime}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown family kind: " + name);
  return it->second;
}

bool two_parameter(FamilyKind k) {
  return k == FamilyKind::a || k == FamilyKind::a_prime || k == FamilyKind::a_bar;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite monoid identity workbench"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- check ----
  CLI::App* check = app.add_subcommand("check", "Decide properties of a finite monoid");
  check->require_subcommand(1);
  std::string spec, id_text, engine_name = "pruned", word_text, class_text;
  int max_len = 8;

  CLI::App* c_id = check->add_subcommand("identity", "Does the monoid satisfy an identity");
  c_id->add_option("--monoid", spec, "Monoid spec, e.g. \"MW: xyx\" or \"MG: xx+yy+\"")
      ->required();
  c_id->add_option("--id", id_text, "Identity, e.g. \"xyx = xyx^2\"")->required();
  c_id->add_option("--engine", engine_name, "brute or pruned")
      ->check(CLI::IsMember({"brute", "pruned"}));
  c_id->callback([&] {
    FiniteMonoid m = parse_monoid_spec(spec);
    Identity id = parse_identity(id_text);
    SatResult r = satisfies(m, id, engine_name == "brute" ? Engine::brute : Engine::pruned);
    if (r.holds) {
      std::cout << "holds: " << format_identity(id) << "\n";
    } else {
      std::cout << "fails: " << format_identity(id) << "\n";
      if (r.witness) std::cout << "witness: " << witness_text(m, *r.witness) << "\n";
      rc = kNo;
    }
  });

  CLI::App* c_ap = check->add_subcommand("aperiodic", "Is the monoid aperiodic");
  c_ap->add_option("--monoid", spec, "Monoid spec")->required();
  c_ap->callback([&] {
    bool yes = is_aperiodic(parse_monoid_spec(spec));
    std::cout << (yes ? "aperiodic\n" : "not aperiodic\n");
    if (!yes) rc = kNo;
  });

  CLI::App* c_jt = check->add_subcommand("jtrivial", "Is the monoid J-trivial");
  c_jt->add_option("--monoid", spec, "Monoid spec")->required();
  c_jt->callback([&] {
    bool yes = is_j_trivial(parse_monoid_spec(spec));
    std::cout << (yes ? "J-trivial\n" : "not J-trivial\n");
    if (!yes) rc = kNo;
  });

  CLI::App* c_ide = check->add_subcommand("idempotents", "List idempotents and how they sit");
  c_ide->add_option("--monoid", spec, "Monoid spec")->required();
  c_ide->callback([&] {
    FiniteMonoid m = parse_monoid_spec(spec);
    IdempotentReport r = idempotent_checks(m);
    std::cout << "idempotents:";
    for (int e : r.idempotents) std::cout << " " << m.labels[static_cast<size_t>(e)];
    std::cout << "\ncommuting: " << (r.commuting ? "yes" : "no");
    if (r.commuting_witness)
      std::cout << "  (" << m.labels[static_cast<size_t>((*r.commuting_witness)[0])] << ", "
                << m.labels[static_cast<size_t>((*r.commuting_witness)[1])] << ")";
    std::cout << "\ncentral: " << (r.central ? "yes" : "no");
    if (r.central_witness)
      std::cout << "  (" << m.labels[static_cast<size_t>((*r.central_witness)[0])] << ", "
                << m.labels[static_cast<size_t>((*r.central_witness)[1])] << ")";
    std::cout << "\n";
  });

  CLI::App* c_iso = check->add_subcommand("isoterm", "Search for an identity partner of a word");
  c_iso->add_option("--monoid", spec, "Monoid spec")->required();
  c_iso->add_option("--word", word_text, "Word to test")->required();
  c_iso->add_option("--max-len", max_len, "Candidate length bound");
  c_iso->callback([&] {
    FiniteMonoid m = parse_monoid_spec(spec);
    IsotermResult r = is_isoterm_bounded(m, parse_word(word_text), max_len);
    if (r.partner) {
      std::cout << "partner: " << format_word(*r.partner) << "\n";
      rc = kNo;
    } else {
      std::cout << "no partner up to length " << r.max_len << "\n";
    }
  });

  CLI::App* c_st = check->add_subcommand("stable", "Search for a class-breaking identity");
  c_st->add_option("--monoid", spec, "Monoid spec")->required();
  c_st->add_option("--class", class_text, "Congruence class, e.g. \"x+tyy+x+\"")->required();
  c_st->add_option("--max-len", max_len, "Candidate length bound");
  c_st->callback([&] {
    FiniteMonoid m = parse_monoid_spec(spec);
    StabilityResult r = is_class_stable_bounded(m, parse_class(class_text), max_len);
    if (r.leak) {
      std::cout << "leak: " << format_identity(*r.leak) << "\n";
      rc = kNo;
    } else {
      std::cout << "stable up to length " << r.max_len << "\n";
    }
  });

  // ---- deduce ----
  std::string sigma_path, goal_text, out_path;
  int max_depth = 4;
  int deduce_len = 16;
  CLI::App* ded = app.add_subcommand("deduce", "Search for a deduction chain proving a goal");
  ded->add_option("--sigma", sigma_path, "JSON file with a rules array")->required();
  ded->add_option("--goal", goal_text, "Goal identity")->required();
  ded->add_option("--max-depth", max_depth, "Chain length bound");
  ded->add_option("--max-len", deduce_len, "Intermediate word length bound");
  ded->add_option("--out", out_path, "Write the found chain as JSON");
  ded->callback([&] {
    std::vector<Rule> rules = rules_from_json(read_file(sigma_path));
    DeduceOutcome r = deduce_bounded(rules, parse_identity(goal_text), max_depth, deduce_len);
    if (r.chain) {
      for (const Word& w : r.chain->words) std::cout << format_word(w) << "\n";
      std::cout << "found in " << r.chain->steps.size() << " step(s)\n";
      if (!out_path.empty()) write_file(out_path, chain_to_json(*r.chain));
    } else {
      std::cout << (r.exhausted ? "no chain exists within the bounds"
                                : "search budget exhausted without a chain")
                << " (" << r.explored << " words explored)\n";
      rc = kNo;
    }
  });

  // ---- verify-chain ----
  std::string chain_path;
  CLI::App* vch = app.add_subcommand("verify-chain", "Check a deduction chain file step by step");
  vch->add_option("file", chain_path, "Chain JSON file")->required();
  vch->callback([&] {
    DeductionChain chain = chain_from_json(read_file(chain_path));
    ChainReport r = verify_chain(chain);
    if (r.ok) {
      std::cout << "ok: " << chain.steps.size() << " step(s), "
                << format_word(chain.words.front()) << " to "
                << format_word(chain.words.back()) << "\n";
    } else {
      std::cout << "step " << r.failed_step << " fails: " << r.message << "\n";
      rc = kNo;
    }
  });

  // ---- catalog ----
  CLI::App* cat = app.add_subcommand("catalog", "Emit identity families and basis lists");
  cat->require_subcommand(1);

  int sigma_i = 3;
  CLI::App* csig = cat->add_subcommand("sigma", "One of the three swap identities");
  csig->add_option("index", sigma_i, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  csig->callback([&] { std::cout << format_identity(sigma_identity(sigma_i)) << "\n"; });

  std::string kind_name, perm_text;
  int fam_n = 1, fam_m = 1, fam_k = -1;
  CLI::App* cword = cat->add_subcommand("word", "A parametric family word");
  cword->add_option("kind", kind_name, "a, a', abar, c, c', d or d'")->required();
  cword->add_option("--n", fam_n, "First block count");
  cword->add_option("--m", fam_m, "Second block count");
  cword->add_option("--k", fam_k, "Third block count (three-parameter kinds)");
  cword->add_option("--perm", perm_text, "Permutation images, e.g. 1,2,3");
  cword->callback([&] {
    FamilyKind kind = kind_from_name(kind_name);
    Word w;
    if (two_parameter(kind)) {
      Perm rho = perm_text.empty() ? Perm::identity(fam_n + fam_m) : parse_perm(perm_text);
      w = family_word(kind, fam_n, fam_m, rho);
    } else {
      if (fam_k < 0) throw std::invalid_argument("--k is required for kind " + kind_name);
      Perm tau =
          perm_text.empty() ? Perm::identity(fam_n + fam_m + fam_k) : parse_perm(perm_text);
      w = family_word(kind, fam_n, fam_m, fam_k, tau);
    }
    std::cout << format_word(w) << "\n";
  });

  std::string basis_name, phi1_text, phi23_text, emit = "text";
  int series_n = 2;
  CLI::App* cbas = cat->add_subcommand("basis", "The identity list of a named basis");
  cbas->add_option("name", basis_name, "Basis name, e.g. B, D15, Q, Rd")->required();
  cbas->add_option("--phi1", phi1_text, "Family bound k,l,m");
  cbas->add_option("--phi23", phi23_text, "Family bound n,m");
  cbas->add_option("--series-n", series_n, "Exponent for the fixed series");
  cbas->add_option("--emit", emit, "text or json")->check(CLI::IsMember({"text", "json"}));
  cbas->callback([&] {
    BasisOptions opts;
    opts.series_n = series_n;
    if (!phi1_text.empty()) {
      auto v = parse_ints(phi1_text, 3, "--phi1");
      opts.phi1 = {v[0], v[1], v[2]};
    }
    if (!phi23_text.empty()) {
      auto v = parse_ints(phi23_text, 2, "--phi23");
      opts.phi23 = {v[0], v[1]};
    }
    std::vector<Identity> ids = basis_identities(make_basis(basis_name, opts));
    if (emit == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const Identity& id : ids)
        j.push_back({{"lhs", format_word(id.lhs)}, {"rhs", format_word(id.rhs)}});
      std::cout << j.dump(2) << "\n";
    } else {
      for (const Identity& id : ids) std::cout << format_identity(id) << "\n";
    }
  });

  // ---- export ----
  std::string export_out;
  CLI::App* exp = app.add_subcommand("export", "Emit a monoid table as JSON");
  exp->add_option("--monoid", spec, "Monoid spec")->required();
  exp->add_option("--out", export_out, "Output file (default stdout)");
  exp->callback([&] {
    std::string text = monoid_to_json(parse_monoid_spec(spec));
    if (export_out.empty())
      std::cout << text << "\n";
    else
      write_file(export_out, text);
  });

  // ---- verify ----
  std::string suite = "all", json_out, bound_phi1;
  std::uint64_t seed = HarnessOptions{}.seed;
  CLI::App* ver = app.add_subcommand("verify", "Run the named verification suite");
  ver->add_option("--suite", suite, "Suite name or \"all\"");
  ver->add_option("--json", json_out, "Also write a JSON report to this file");
  ver->add_option("--bound-phi1", bound_phi1, "Family bound k,l,m for basis suites");
  ver->add_option("--seed", seed, "Seed for randomized property suites");
  ver->callback([&] {
    HarnessOptions opts;
    opts.seed = seed;
    if (!bound_phi1.empty()) {
      auto v = parse_ints(bound_phi1, 3, "--bound-phi1");
      opts.phi1 = {v[0], v[1], v[2]};
    }
    std::vector<SuiteResult> results;
    if (suite == "all")
      results = run_all(opts);
    else
      results.push_back(run_suite(suite, opts));
    std::cout << report_to_text(results);
    if (!json_out.empty()) write_file(json_out, report_to_json(results));
    for (const SuiteResult& r : results)
      if (!r.passed()) rc = kNo;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
