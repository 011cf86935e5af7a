#include "cideal/closures.hpp"

#include <string>

#include "cideal/errors.hpp"
#include "cideal/hilbert.hpp"

namespace cideal {

ClosureResult ratliff_rush(const MonomialIdeal& I, const Limits& limits) {
  if (!is_m_primary(I)) throw NotMPrimary("ideal " + to_string(I) + " is not m-primary");
  if (limits.rr_stable_steps < 1) throw ValidationError("stable_steps must be positive");

  PowerLadder powers(I);
  RatliffRushCertificate cert;
  int run_start = 1;
  int run = 0;
  for (int n = 1; n <= limits.rr_n_cap; ++n) {
    cert.colon_chain.push_back(colon(powers.get(n + 1), powers.get(n)));
    if (n > 1) {
      if (cert.colon_chain[n - 1] == cert.colon_chain[n - 2]) {
        ++run;
      } else {
        run = 0;
        run_start = n;
      }
    }
    if (run == limits.rr_stable_steps) {
      cert.n_star = run_start;
      cert.stable_steps = run;
      MonomialIdeal closure = cert.colon_chain[run_start - 1];
      if (e_coefficients(closure, limits).e != e_coefficients(I, limits).e)
        throw ConsistencyError("Ratliff-Rush candidate " + to_string(closure) + " of " + to_string(I) +
                               " changes the Hilbert coefficients; raise the stop parameters");
      return {std::move(closure), ClosureKind::ratliff_rush, std::move(cert)};
    }
  }
  throw CapExceeded("colon chain of " + to_string(I) + " did not stabilize by n = " +
                    std::to_string(limits.rr_n_cap));
}

MonomialIdeal ratliff_rush_power(const MonomialIdeal& I, int n, const Limits& limits) {
  if (n < 1) throw ValidationError("power must be positive");
  return ratliff_rush(power(I, n), limits).ideal;
}

DefectSeries defect_series(const MonomialIdeal& I, int N, const Limits& limits) {
  if (N < 0) throw ValidationError("N must be non-negative");
  DefectSeries out;
  PowerLadder powers(I);
  for (int n = 0; n <= N; ++n) {
    const MonomialIdeal& p = powers.get(n + 1);
    out.lengths.push_back(colength(p, ColengthMethod::box_enumeration, limits) -
                          colength(ratliff_rush(p, limits).ideal, ColengthMethod::box_enumeration, limits));
  }
  return out;
}

}  // namespace cideal
