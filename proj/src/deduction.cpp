#include "monvar/deduction.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "json.hpp"

namespace monvar {

namespace {

struct MatchBudget {
  size_t nodes = 0;
  void tick() {
    if (++nodes > 5000000) throw std::runtime_error("rule match search too large");
  }
};

// Backtracking word-equation match of pattern against the whole target,
// extending phi in place. done() may reject a solution to keep searching.
bool match_pattern(const Word& pattern, size_t ppos, const Word& target, size_t tpos,
                   Substitution& phi, MatchBudget& budget,
                   const std::function<bool(Substitution&)>& done) {
  budget.tick();
  if (ppos == pattern.size()) return tpos == target.size() && done(phi);
  const Letter& l = pattern[ppos];
  auto it = phi.find(l);
  if (it != phi.end()) {
    const Word& img = it->second;
    if (tpos + img.size() > target.size()) return false;
    if (!std::equal(img.begin(), img.end(), target.begin() + static_cast<long>(tpos)))
      return false;
    return match_pattern(pattern, ppos + 1, target, tpos + img.size(), phi, budget, done);
  }
  for (size_t len = 0; tpos + len <= target.size(); ++len) {
    phi[l] = Word(target.begin() + static_cast<long>(tpos),
                  target.begin() + static_cast<long>(tpos + len));
    if (match_pattern(pattern, ppos + 1, target, tpos + len, phi, budget, done)) return true;
  }
  phi.erase(l);
  return false;
}

size_t common_prefix(const Word& u, const Word& v) {
  size_t i = 0;
  while (i < u.size() && i < v.size() && u[i] == v[i]) ++i;
  return i;
}

size_t common_suffix(const Word& u, const Word& v) {
  size_t j = 0;
  while (j < u.size() && j < v.size() && u[u.size() - 1 - j] == v[v.size() - 1 - j]) ++j;
  return j;
}

Word slice(const Word& w, size_t from, size_t to) {
  return Word(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
}

}  // namespace

std::optional<RuleMatch> directly_deducible(const Word& u, const Word& v, const Identity& rule) {
  size_t lcp = common_prefix(u, v), lcs = common_suffix(u, v);
  MatchBudget budget;
  for (bool reversed : {false, true}) {
    const Word& s = reversed ? rule.rhs : rule.lhs;
    const Word& t = reversed ? rule.lhs : rule.rhs;
    for (size_t i = 0; i <= lcp; ++i) {
      for (size_t j = 0; j <= lcs && i + j <= u.size() && i + j <= v.size(); ++j) {
        Word umid = slice(u, i, u.size() - j);
        Word vmid = slice(v, i, v.size() - j);
        Substitution phi;
        auto check_rhs = [&](Substitution& p) {
          MatchBudget inner;
          return match_pattern(t, 0, vmid, 0, p, inner, [](Substitution&) { return true; });
        };
        if (match_pattern(s, 0, umid, 0, phi, budget, check_rhs))
          return RuleMatch{slice(u, 0, i), slice(u, u.size() - j, u.size()), phi, reversed};
      }
    }
  }
  return std::nullopt;
}

bool match_applies(const Word& u, const Word& v, const Identity& rule, const RuleMatch& how) {
  const Word& s = how.reversed ? rule.rhs : rule.lhs;
  const Word& t = how.reversed ? rule.lhs : rule.rhs;
  for (const Word* side : {&s, &t})
    for (const Letter& l : *side)
      if (!how.phi.count(l)) return false;
  Word uu = concat(how.left, concat(substitute(s, how.phi), how.right));
  Word vv = concat(how.left, concat(substitute(t, how.phi), how.right));
  return u == uu && v == vv;
}

ChainReport verify_chain(const DeductionChain& chain) {
  ChainReport r;
  if (chain.words.empty()) {
    r.message = "chain has no words";
    return r;
  }
  if (chain.steps.size() + 1 != chain.words.size()) {
    r.message = "chain needs one step between consecutive words";
    return r;
  }
  std::map<std::string, Identity> by_name;
  for (const Rule& rule : chain.rules) by_name[rule.name] = rule.id;
  for (size_t k = 0; k < chain.steps.size(); ++k) {
    const ChainStep& st = chain.steps[k];
    auto it = by_name.find(st.rule);
    if (it == by_name.end()) {
      r.failed_step = static_cast<int>(k);
      r.message = "unknown rule " + st.rule;
      return r;
    }
    const Word& u = chain.words[k];
    const Word& v = chain.words[k + 1];
    if (st.how) {
      if (!match_applies(u, v, it->second, *st.how)) {
        r.failed_step = static_cast<int>(k);
        r.message = "stated application of " + st.rule + " does not rewrite " + format_word(u) +
                    " into " + format_word(v);
        return r;
      }
    } else if (!directly_deducible(u, v, it->second)) {
      r.failed_step = static_cast<int>(k);
      r.message = "no application of " + st.rule + " rewrites " + format_word(u) + " into " +
                  format_word(v);
      return r;
    }
  }
  r.ok = true;
  return r;
}

namespace {

nlohmann::json match_to_json(const RuleMatch& how) {
  nlohmann::json j;
  j["a"] = format_word(how.left);
  j["b"] = format_word(how.right);
  nlohmann::json phi = nlohmann::json::object();
  for (const auto& [l, img] : how.phi) phi[format_letter(l)] = format_word(img);
  j["phi"] = phi;
  if (how.reversed) j["dir"] = "reverse";
  return j;
}

RuleMatch match_from_json(const nlohmann::json& j) {
  RuleMatch how;
  how.left = parse_word(j.value("a", "1"));
  how.right = parse_word(j.value("b", "1"));
  if (j.contains("phi"))
    for (auto it = j["phi"].begin(); it != j["phi"].end(); ++it) {
      Word key = parse_word(it.key());
      if (key.size() != 1)
        throw std::invalid_argument("phi key must be a single letter: " + it.key());
      how.phi[key[0]] = parse_word(it.value().get<std::string>());
    }
  how.reversed = j.value("dir", "forward") == std::string("reverse");
  return how;
}

}  // namespace

std::string chain_to_json(const DeductionChain& chain) {
  nlohmann::json j;
  j["rules"] = nlohmann::json::array();
  for (const Rule& r : chain.rules)
    j["rules"].push_back({{"name", r.name},
                          {"lhs", format_word(r.id.lhs)},
                          {"rhs", format_word(r.id.rhs)}});
  j["words"] = nlohmann::json::array();
  for (const Word& w : chain.words) j["words"].push_back(format_word(w));
  j["steps"] = nlohmann::json::array();
  for (const ChainStep& st : chain.steps) {
    nlohmann::json s = st.how ? match_to_json(*st.how) : nlohmann::json::object();
    s["rule"] = st.rule;
    j["steps"].push_back(s);
  }
  return j.dump(2);
}

DeductionChain chain_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  DeductionChain chain;
  for (const auto& r : j.value("rules", nlohmann::json::array()))
    chain.rules.push_back(
        {r.at("name").get<std::string>(),
         {parse_word(r.at("lhs").get<std::string>()), parse_word(r.at("rhs").get<std::string>())}});
  for (const auto& w : j.at("words")) chain.words.push_back(parse_word(w.get<std::string>()));
  for (const auto& s : j.value("steps", nlohmann::json::array())) {
    ChainStep st;
    st.rule = s.at("rule").get<std::string>();
    if (s.contains("a") || s.contains("b") || s.contains("phi")) st.how = match_from_json(s);
    chain.steps.push_back(std::move(st));
  }
  return chain;
}

namespace {

void match_all(const Word& pattern, const Word& target, std::vector<Substitution>& sink) {
  Substitution phi;
  MatchBudget budget;
  match_pattern(pattern, 0, target, 0, phi, budget, [&](Substitution& p) {
    sink.push_back(p);
    return false;  // keep enumerating
  });
}

}  // namespace

DeduceOutcome deduce_bounded(const std::vector<Rule>& rules, const Identity& goal, int max_depth,
                             int max_len, size_t max_states) {
  DeduceOutcome out;
  std::vector<Word> images{Word{}};  // candidate images for one-sided rule letters
  for (const Letter& l : identity_letters(goal)) images.push_back({l});

  struct Parent {
    Word word;
    std::string rule;
    RuleMatch how;
  };
  std::map<Word, Parent> parent;
  std::deque<std::pair<Word, int>> queue;
  parent[goal.lhs];  // mark visited, no parent
  queue.push_back({goal.lhs, 0});
  bool found = goal.lhs == goal.rhs;
  bool truncated = false;

  while (!queue.empty() && !found) {
    auto [w, depth] = queue.front();
    queue.pop_front();
    if (depth == max_depth) {
      truncated = true;
      continue;
    }
    for (const Rule& rule : rules) {
      for (bool reversed : {false, true}) {
        const Word& s = reversed ? rule.id.rhs : rule.id.lhs;
        const Word& t = reversed ? rule.id.lhs : rule.id.rhs;
        std::set<Letter> bound(s.begin(), s.end());
        std::vector<Letter> free_letters;
        for (const Letter& l : alphabet(t))
          if (!bound.count(l)) free_letters.push_back(l);
        for (size_t i = 0; i <= w.size(); ++i) {
          for (size_t j = 0; i + j <= w.size(); ++j) {
            Word mid = slice(w, i, w.size() - j);
            std::vector<Substitution> phis;
            match_all(s, mid, phis);
            for (Substitution& phi : phis) {
              // every one-sided letter ranges over short images
              std::vector<size_t> pick(free_letters.size(), 0);
              while (true) {
                for (size_t f = 0; f < free_letters.size(); ++f)
                  phi[free_letters[f]] = images[pick[f]];
                Word next = concat(slice(w, 0, i),
                                   concat(substitute(t, phi), slice(w, w.size() - j, w.size())));
                if (static_cast<int>(next.size()) <= max_len && !parent.count(next)) {
                  if (parent.size() >= max_states) {
                    truncated = true;
                  } else {
                    parent[next] = {w, rule.name,
                                    RuleMatch{slice(w, 0, i), slice(w, w.size() - j, w.size()),
                                              phi, reversed}};
                    queue.push_back({next, depth + 1});
                    if (next == goal.rhs) found = true;
                  }
                }
                if (found) break;
                size_t f = 0;
                for (; f < free_letters.size(); ++f) {
                  if (++pick[f] < images.size()) break;
                  pick[f] = 0;
                }
                if (f == free_letters.size()) break;
              }
              if (found) break;
            }
            if (found) break;
          }
          if (found) break;
        }
        if (found) break;
      }
      if (found) break;
    }
  }

  out.explored = parent.size();
  out.exhausted = !found && !truncated && queue.empty();
  if (!found) return out;

  DeductionChain chain;
  chain.rules = rules;
  std::vector<Word> back{goal.rhs};
  std::vector<ChainStep> steps;
  Word cur = goal.rhs;
  while (cur != goal.lhs) {
    const Parent& p = parent.at(cur);
    steps.push_back({p.rule, p.how});
    back.push_back(p.word);
    cur = p.word;
  }
  chain.words.assign(back.rbegin(), back.rend());
  chain.steps.assign(steps.rbegin(), steps.rend());
  out.chain = std::move(chain);
  return out;
}

std::optional<int> invertibility_distance(const Word& u, const Word& v, size_t max_states) {
  if (u == v) return 0;
  std::map<Word, int> dist;
  std::deque<Word> queue;
  dist[u] = 0;
  queue.push_back(u);
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    int d = dist[w];
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) continue;
      if (occurrences(w, w[i]) < 2 || occurrences(w, w[i + 1]) < 2) continue;
      Word next = w;
      std::swap(next[i], next[i + 1]);
      if (dist.count(next)) continue;
      if (next == v) return d + 1;
      if (dist.size() >= max_states) return std::nullopt;
      dist[next] = d + 1;
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

}  // namespace monvar
