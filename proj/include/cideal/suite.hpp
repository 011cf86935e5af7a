#pragma once

// The per-ideal property suite behind `corpus run`.

#include <string>
#include <vector>

#include <json.hpp>

#include "cideal/verify.hpp"

namespace cideal {

struct SuiteOutcome {
  std::string name;
  Verdict verdict = Verdict::inconclusive;
  nlohmann::json evidence;
};

/// Runs, on one ideal: colength oracle agreement on I^n (n <= 5), chain
/// structure, the W-profile degree bound for every level, the Veronese
/// identity for t in {2,3} and m <= 2, and for complete intersections the
/// r = d-1 power equality. Errors inside a check become a "fails" outcome
/// carrying the message.
std::vector<SuiteOutcome> run_property_suite(const MonomialIdeal& I, const VerifyOptions& opts = {});

nlohmann::json to_json(const SuiteOutcome& o);

}  // namespace cideal
