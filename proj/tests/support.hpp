#pragma once

#include <string>
#include <vector>

#include "cideal/ring.hpp"
#include "oracles.hpp"

namespace testing {

inline cideal::MonomialIdeal ideal(const std::vector<std::string>& gens, std::size_t dim = 2) {
  return cideal::parse_ideal(gens, cideal::RingContext::standard(dim));
}

inline oracle::Gens to_gens(const cideal::MonomialIdeal& I) {
  oracle::Gens out;
  for (const auto& g : I.generators()) out.emplace_back(g.begin(), g.end());
  return out;
}

inline cideal::MonomialIdeal from_gens(const oracle::Gens& g, const cideal::RingPtr& ring) {
  std::vector<cideal::ExponentVec> raw;
  for (const auto& m : g) raw.emplace_back(m.begin(), m.end());
  return cideal::normalize(raw, ring);
}

}  // namespace testing
