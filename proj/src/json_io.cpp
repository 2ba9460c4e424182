#include "xymx/json_io.hpp"

#include <stdexcept>

namespace xymx {

namespace {

std::string str(const Integer& n) { return n.get_str(); }

Integer parse_int(const ordered_json& j) {
  return Integer(j.get<std::string>());
}

}  // namespace

ordered_json to_json(const PowerSolution& s) {
  return ordered_json{
      {"base",
       ordered_json{{"num", str(s.base.get_num())}, {"den", str(s.base.get_den())}}},
      {"ex", str(s.e_x)},
      {"ey", str(s.e_y)},
  };
}

PowerSolution solution_from_json(const ordered_json& j) {
  PowerSolution s;
  s.base = make_rational(parse_int(j.at("base").at("num")),
                         parse_int(j.at("base").at("den")));
  s.e_x = parse_int(j.at("ex"));
  s.e_y = parse_int(j.at("ey"));
  return s;
}

ordered_json to_json(const PellUnit& unit) {
  return ordered_json{
      {"D", str(unit.D)}, {"u1", str(unit.u1)}, {"v1", str(unit.v1)}};
}

ordered_json to_json(const PellRep& rep) {
  return ordered_json{{"x0", str(rep.x0)},
                      {"y0", str(rep.y0)},
                      {"D", str(rep.D)},
                      {"N", str(rep.N)}};
}

ordered_json to_json(const SolutionSet& set) {
  ordered_json j;
  j["m"] = str(set.m);
  j["s0"] = to_json(set.s0);

  ordered_json s1 = ordered_json::array();
  for (const EulerFamily& fam : set.s1) {
    ordered_json f;
    f["branch"] = fam.branch == EulerFamily::Branch::Plus ? "plus" : "minus";
    f["n_min"] = fam.n_min();
    ordered_json elems = ordered_json::array();
    for (long n = fam.n_min(); n < fam.n_min() + set.config.family_count; ++n)
      elems.push_back(to_json(fam.element(n)));
    f["elements"] = elems;
    s1.push_back(std::move(f));
  }
  j["s1_families"] = std::move(s1);

  ordered_json s2 = ordered_json::array();
  for (const S2Family& fam : set.s2.families) {
    ordered_json f;
    f["d"] = str(fam.candidate.d);
    f["m_prime"] = str(fam.candidate.m_prime);
    f["sign"] = fam.candidate.sign;
    f["target"] = str(fam.candidate.target());
    f["rep"] = ordered_json{{"x0", str(fam.rep.x0)}, {"y0", str(fam.rep.y0)}};
    f["unit"] = ordered_json{{"u1", str(fam.unit.u1)}, {"v1", str(fam.unit.v1)}};
    f["period"] = fam.period;
    ordered_json chain = ordered_json::array();
    for (const auto& [u, v] : fam.chain)
      chain.push_back(ordered_json::array({str(u), str(v)}));
    f["chain"] = std::move(chain);
    ordered_json sols = ordered_json::array();
    for (const PowerSolution& s : fam.solutions) sols.push_back(to_json(s));
    f["solutions"] = std::move(sols);
    s2.push_back(std::move(f));
  }
  j["s2_families"] = std::move(s2);

  ordered_json sporadics = ordered_json::array();
  for (const PowerSolution& s : set.sporadics) sporadics.push_back(to_json(s));
  j["sporadics"] = std::move(sporadics);

  ordered_json unresolved = ordered_json::array();
  for (const UnresolvedEquation& u : set.unresolved) {
    unresolved.push_back(ordered_json{{"k", u.k},
                                      {"c", str(u.c)},
                                      {"search_bound", str(u.search_bound)},
                                      {"solutions_found", u.solutions_found}});
  }
  j["unresolved"] = std::move(unresolved);

  j["k_range"] = ordered_json::array({set.k_min, set.k_max});
  j["config"] = ordered_json{
      {"k_min", set.k_min},
      {"k_max", set.k_max},
      {"sieve_n_max", set.config.sieve_n_max},
      {"prime_power_cap", set.config.prime_power_cap},
      {"search_bound", str(set.config.search_bound)},
      {"families_count", set.config.family_count},
  };
  return j;
}

SolutionSet solution_set_from_json(const ordered_json& j) {
  SolutionSet set;
  set.m = parse_int(j.at("m"));
  set.s0 = solution_from_json(j.at("s0"));

  for (const auto& f : j.at("s1_families")) {
    EulerFamily fam;
    fam.m = set.m;
    fam.branch = f.at("branch").get<std::string>() == "plus"
                     ? EulerFamily::Branch::Plus
                     : EulerFamily::Branch::Minus;
    set.s1.push_back(fam);
  }

  for (const auto& f : j.at("s2_families")) {
    S2Family fam;
    fam.candidate.m = set.m;
    fam.candidate.k = 2;
    fam.candidate.d = parse_int(f.at("d"));
    fam.candidate.m_prime = parse_int(f.at("m_prime"));
    fam.candidate.sign = f.at("sign").get<int>();
    fam.rep.x0 = parse_int(f.at("rep").at("x0"));
    fam.rep.y0 = parse_int(f.at("rep").at("y0"));
    fam.rep.D = set.m;
    fam.rep.N = fam.candidate.target();
    fam.unit.D = set.m;
    fam.unit.u1 = parse_int(f.at("unit").at("u1"));
    fam.unit.v1 = parse_int(f.at("unit").at("v1"));
    fam.period = f.at("period").get<long>();
    for (const auto& pr : f.at("chain"))
      fam.chain.emplace_back(parse_int(pr.at(0)), parse_int(pr.at(1)));
    for (const auto& s : f.at("solutions"))
      fam.solutions.push_back(solution_from_json(s));
    set.s2.families.push_back(std::move(fam));
  }
  // The verdict is not part of the serialized schema; the families carry
  // the content (nonempty == infinite).
  set.s2.verdict = set.s2.families.empty() ? S2Verdict::EmptyRepSearch
                                           : S2Verdict::Infinite;

  for (const auto& s : j.at("sporadics"))
    set.sporadics.push_back(solution_from_json(s));

  for (const auto& u : j.at("unresolved")) {
    UnresolvedEquation eq;
    eq.k = u.at("k").get<long>();
    eq.c = parse_int(u.at("c"));
    eq.search_bound = parse_int(u.at("search_bound"));
    eq.solutions_found = u.at("solutions_found").get<bool>();
    set.unresolved.push_back(std::move(eq));
  }

  set.k_min = j.at("k_range").at(0).get<long>();
  set.k_max = j.at("k_range").at(1).get<long>();
  const auto& cfg = j.at("config");
  set.config.k_min = set.k_min;
  set.config.k_max = set.k_max;
  set.config.sieve_n_max = cfg.at("sieve_n_max").get<long>();
  set.config.prime_power_cap = cfg.at("prime_power_cap").get<long>();
  set.config.search_bound = parse_int(cfg.at("search_bound"));
  set.config.family_count = cfg.at("families_count").get<long>();
  return set;
}

ordered_json to_json(const ThueOutcome& outcome) {
  ordered_json j;
  j["k"] = outcome.k;
  j["m"] = str(outcome.m);
  switch (outcome.status) {
    case ThueStatus::EmptyByParity: j["status"] = "empty-by-parity"; break;
    case ThueStatus::EmptyBySieve: j["status"] = "empty-by-sieve"; break;
    case ThueStatus::Solved: j["status"] = "solved"; break;
    case ThueStatus::Unresolved: j["status"] = "unresolved"; break;
  }
  ordered_json ws = ordered_json::array();
  for (const ResidueWitness& w : outcome.witnesses) {
    ordered_json wj;
    wj["p"] = str(w.p);
    wj["n"] = w.n;
    wj["e"] = w.e;
    wj["modulus"] = str(w.modulus);
    ordered_json elim = ordered_json::array();
    for (const Integer& t : w.eliminated) elim.push_back(str(t));
    wj["eliminated_targets"] = std::move(elim);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  ordered_json elim = ordered_json::array();
  for (const Integer& t : outcome.eliminated) elim.push_back(str(t));
  j["eliminated"] = std::move(elim);
  ordered_json survivors = ordered_json::array();
  for (const TargetResolution& tr : outcome.survivors) {
    ordered_json t;
    t["c"] = str(tr.c);
    ordered_json sols = ordered_json::array();
    for (const auto& [u, v] : tr.solutions)
      sols.push_back(ordered_json::array({str(u), str(v)}));
    t["solutions"] = std::move(sols);
    t["complete"] = tr.complete;
    if (!tr.complete) t["search_bound"] = str(tr.search_bound);
    survivors.push_back(std::move(t));
  }
  j["survivors"] = std::move(survivors);
  return j;
}

ordered_json to_json(const SieveReport& report, long k, const Integer& m) {
  ordered_json j;
  j["k"] = k;
  j["m"] = str(m);
  j["complete"] = report.complete();
  ordered_json ws = ordered_json::array();
  for (const ResidueWitness& w : report.witnesses) {
    ordered_json wj;
    wj["p"] = str(w.p);
    wj["n"] = w.n;
    wj["e"] = w.e;
    wj["modulus"] = str(w.modulus);
    ordered_json elim = ordered_json::array();
    for (const Integer& t : w.eliminated) elim.push_back(str(t));
    wj["eliminated_targets"] = std::move(elim);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  ordered_json survivors = ordered_json::array();
  for (const Integer& t : report.survivors) survivors.push_back(str(t));
  j["survivors"] = std::move(survivors);
  return j;
}

ordered_json to_json(const HasseVerdict& verdict, long k, const Integer& m,
                     const Integer& c) {
  ordered_json j;
  j["k"] = k;
  j["m"] = str(m);
  j["c"] = str(c);
  switch (verdict.status) {
    case HasseStatus::GloballySolvable: {
      j["status"] = "globally-solvable";
      j["witness"] = ordered_json::array(
          {str(verdict.witness->first), str(verdict.witness->second)});
      break;
    }
    case HasseStatus::LocalObstruction: {
      j["status"] = "local-obstruction";
      j["p"] = str(verdict.obstruction->p);
      j["e"] = verdict.obstruction->e;
      break;
    }
    case HasseStatus::CandidateHasseFailure: {
      j["status"] = "candidate-hasse-failure";
      break;
    }
  }
  j["prime_cap"] = str(verdict.prime_cap);
  j["exp_cap"] = str(verdict.exp_cap);
  j["global_bound"] = str(verdict.global_bound);
  return j;
}

}  // namespace xymx
