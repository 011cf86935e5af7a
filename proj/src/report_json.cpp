#include "cideal/report_json.hpp"

#include "cideal/errors.hpp"

namespace cideal {

using nlohmann::json;

json ideal_to_json(const MonomialIdeal& I) { return format_generators(I); }

json ideals_to_json(const std::vector<MonomialIdeal>& ideals) {
  json out = json::array();
  for (const auto& I : ideals) out.push_back(ideal_to_json(I));
  return out;
}

json to_json(const HilbertFit& fit) {
  return json{{"degree", fit.degree},
              {"e", fit.e},
              {"window_start", fit.window_start},
              {"validated_through", fit.validated_through},
              {"values_start", fit.values.start},
              {"values", fit.values.values}};
}

json to_json(const NewtonWitness& w, const RingContext& ring) {
  json subset = json::array();
  for (const auto& g : w.subset) subset.push_back(format_monomial(g, ring));
  json weights = json::array();
  for (const auto& q : w.weights) weights.push_back(q.get_str());
  return json{{"monomial", format_monomial(w.point, ring)}, {"subset", subset}, {"weights", weights}};
}

json to_json(const ClosureResult& r) {
  json out{{"closure", ideal_to_json(r.ideal)}};
  if (r.kind == ClosureKind::ratliff_rush) {
    const auto& c = r.ratliff_rush();
    out["kind"] = "ratliff-rush";
    out["certificate"] = json{{"n_star", c.n_star}, {"stable_steps", c.stable_steps},
                              {"colon_chain", ideals_to_json(c.colon_chain)}};
  } else {
    out["kind"] = "integral";
    json witnesses = json::array();
    for (const auto& w : r.integral().witnesses) witnesses.push_back(to_json(w, r.ideal.ring()));
    out["certificate"] = json{{"witnesses", witnesses}};
  }
  return out;
}

json to_json(const DefectSeries& s) { return json{{"defects", s.lengths}}; }

json to_json(const CoefficientChain& c) {
  json fits = json::array();
  for (const auto& f : c.per_ideal_fits) fits.push_back(f.e);
  json witnesses = json::array();
  for (const auto& w : c.maximality_witnesses)
    witnesses.push_back(json{{"i", w.level}, {"monomial", format_monomial(w.monomial, c.base.ring())},
                             {"j", w.mismatch_index}});
  return json{{"label", "monomial coefficient ideal"},
              {"method", std::string(to_string(c.method))},
              {"e", c.coefficients.e},
              {"chain", ideals_to_json(c.chain)},
              {"chain_e", fits},
              {"maximality_witnesses", witnesses}};
}

json ideal_document(const MonomialIdeal& I) {
  return json{{"ring", {{"vars", I.ring().var_names()}}}, {"ideal", ideal_to_json(I)}};
}

MonomialIdeal parse_ideal_document(const json& doc) {
  if (!doc.is_object()) throw ValidationError("ideal document must be a JSON object");
  if (!doc.contains("ring") || !doc["ring"].is_object() || !doc["ring"].contains("vars") ||
      !doc["ring"]["vars"].is_array())
    throw ValidationError("ideal document needs ring.vars as an array of strings");
  if (!doc.contains("ideal") || !doc["ideal"].is_array())
    throw ValidationError("ideal document needs ideal as an array of strings");
  std::vector<std::string> vars;
  for (const auto& v : doc["ring"]["vars"]) {
    if (!v.is_string()) throw ValidationError("ring.vars entries must be strings");
    vars.push_back(v.get<std::string>());
  }
  std::vector<std::string> gens;
  for (const auto& g : doc["ideal"]) {
    if (!g.is_string()) throw ValidationError("ideal entries must be strings");
    gens.push_back(g.get<std::string>());
  }
  auto ring = std::make_shared<const RingContext>(std::move(vars));
  MonomialIdeal I = parse_ideal(gens, ring);
  if (!is_m_primary(I)) throw NotMPrimary("ideal " + to_string(I) + " is not m-primary");
  return I;
}

}  // namespace cideal
