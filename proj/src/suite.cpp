#include "cideal/suite.hpp"

#include <functional>

#include "cideal/closures.hpp"
#include "cideal/errors.hpp"
#include "cideal/report_json.hpp"

namespace cideal {

using nlohmann::json;

json to_json(const SuiteOutcome& o) {
  return json{{"name", o.name}, {"verdict", to_string(o.verdict)}, {"evidence", o.evidence}};
}

namespace {

SuiteOutcome guarded(const std::string& name, const std::function<SuiteOutcome()>& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    return {name, Verdict::inconclusive, json{{"error", e.what()}}};
  } catch (const Error& e) {
    return {name, Verdict::fails, json{{"error", e.what()}}};
  }
}

SuiteOutcome from_report(const std::string& name, const CheckReport& r) {
  return {name, r.verdict, to_json(r)};
}

}  // namespace

std::vector<SuiteOutcome> run_property_suite(const MonomialIdeal& I, const VerifyOptions& opts) {
  const int d = static_cast<int>(I.dim());
  std::vector<SuiteOutcome> out;

  out.push_back(guarded("oracle_equivalence", [&] {
    json rows = json::array();
    Verdict v = Verdict::holds;
    PowerLadder powers(I);
    for (int n = 1; n <= 5; ++n) {
      const MonomialIdeal& p = powers.get(n);
      const std::int64_t box = colength(p, ColengthMethod::box_enumeration, opts.limits);
      if (p.num_generators() > opts.limits.inclusion_exclusion_max_gens) {
        rows.push_back(json{{"n", n}, {"box", box}, {"inclusion_exclusion", nullptr}});
        if (v == Verdict::holds) v = Verdict::inconclusive;
        continue;
      }
      const std::int64_t ie = colength(p, ColengthMethod::inclusion_exclusion, opts.limits);
      rows.push_back(json{{"n", n}, {"box", box}, {"inclusion_exclusion", ie}});
      if (box != ie) v = Verdict::fails;
    }
    return SuiteOutcome{"oracle_equivalence", v, rows};
  }));

  out.push_back(guarded("chain_structure", [&] {
    // coefficient_chain asserts the structural invariants itself.
    const CoefficientChain chain = coefficient_chain(I, opts.method, opts.limits);
    return SuiteOutcome{"chain_structure", Verdict::holds, to_json(chain)};
  }));

  out.push_back(guarded("w_profile_bound",
                        [&] { return from_report("w_profile_bound", check_prop52_all(I, opts)); }));
  for (int t : {2, 3}) {
    const std::string name = "veronese_t" + std::to_string(t);
    out.push_back(guarded(name, [&] { return from_report(name, check_veronese(I, t, 2, opts)); }));
  }
  if (is_complete_intersection(I) && d >= 2)
    out.push_back(guarded("main_theorem", [&] { return from_report("main_theorem", check_main_theorem(I, d - 1, 3, opts)); }));
  return out;
}

}  // namespace cideal
