#pragma once

// JSON forms of every result type. Objects use nlohmann::json's sorted
// keys, and generator lists are canonical monomial strings, so equal
// results serialize to identical bytes.

#include <vector>

#include <json.hpp>

#include "cideal/closures.hpp"
#include "cideal/coeff.hpp"
#include "cideal/hilbert.hpp"
#include "cideal/ring.hpp"

namespace cideal {

nlohmann::json ideal_to_json(const MonomialIdeal& I);
nlohmann::json ideals_to_json(const std::vector<MonomialIdeal>& ideals);

nlohmann::json to_json(const HilbertFit& fit);
nlohmann::json to_json(const NewtonWitness& w, const RingContext& ring);
nlohmann::json to_json(const ClosureResult& r);
nlohmann::json to_json(const DefectSeries& s);
nlohmann::json to_json(const CoefficientChain& c);

/// {"ring":{"vars":[...]},"ideal":[...]}.
nlohmann::json ideal_document(const MonomialIdeal& I);
/// Parses an ideal document; throws ValidationError/ParseError on schema
/// or grammar problems and NotMPrimary when the ideal is not m-primary.
MonomialIdeal parse_ideal_document(const nlohmann::json& doc);

}  // namespace cideal
