#pragma once

// Executable checks of statements about coefficient ideals, Ratliff-Rush
// closures and Rees-algebra length profiles, plus a seeded corpus of
// m-primary monomial ideals to run them on.
//
// Hypotheses that involve local cohomology of the associated graded ring
// are never evaluated here. Reports that depend on them say so through
// `hypothesis_unverified`, and a "fails" verdict is only a record of what
// was computed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cideal/coeff.hpp"
#include "cideal/hilbert.hpp"
#include "cideal/limits.hpp"
#include "cideal/ring.hpp"

namespace cideal {

/// n -> lambda(A/I^{n+1}) - lambda(A/J^{n+1}), the lengths of the graded
/// pieces of R(J)/R(I) shifted by one.
struct WProfile {
  MonomialIdeal I;
  MonomialIdeal J;
  LengthSequence lengths;
  /// Empty when no window stabilized (inconclusive).
  std::optional<HilbertFit> fit;

  /// Degree of the eventual polynomial, -1 if eventually zero.
  std::optional<int> fitted_degree() const {
    return fit ? std::optional<int>(fit->degree) : std::nullopt;
  }
};

enum class Verdict { holds, fails, inconclusive };
std::string to_string(Verdict v);

struct CheckReport {
  std::string check_name;
  std::vector<std::string> inputs;
  Verdict verdict = Verdict::inconclusive;
  bool hypothesis_unverified = false;
  /// Evidence rows; a failing report ends with a "counter_witness" row.
  nlohmann::json details = nlohmann::json::array();
};

nlohmann::json to_json(const CheckReport& report);

struct VerifyOptions {
  Limits limits;
  ChainMethod method = ChainMethod::atoms;
  /// Initial length of W-profiles; grown until the fit settles.
  int profile_n = 8;
  /// Also test every member of E_i found by the lattice search.
  bool all_members = false;
};

/// Lengths for n = 0..N and the fitted eventual polynomial (degree <= d).
WProfile w_profile(const MonomialIdeal& I, const MonomialIdeal& J, int N, const Limits& limits = {});

/// deg W(I_i) <= d - i - 1.
CheckReport check_prop52(const MonomialIdeal& I, int i, const VerifyOptions& opts = {});
/// The same bound for every i = 0..d, one report.
CheckReport check_prop52_all(const MonomialIdeal& I, const VerifyOptions& opts = {});

/// For s = 1..s_max, which j in 1..d have I^s = (I^s)_j. Holds iff all do.
CheckReport check_shah(const MonomialIdeal& I, int s_max, const VerifyOptions& opts = {});

/// (I^n)_{d-r} = ~(I^n) for n = 1..N.
CheckReport check_main_theorem(const MonomialIdeal& I, int r, int N, const VerifyOptions& opts = {});

/// ~((I^t)^m) = ~(I^{tm}) for m = 1..m_max.
CheckReport check_veronese(const MonomialIdeal& I, int t, int m_max, const VerifyOptions& opts = {});

/// Deterministic m-primary ideals: pure powers x_i^{b_i}, 2 <= b_i <= max_exp,
/// plus 0-4 mixed monomials inside the box. Requires d in {2,3} and
/// 2 <= max_exp <= 6.
std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, int count, int d, int max_exp);

/// Only pure powers among the generators.
bool is_complete_intersection(const MonomialIdeal& I);

}  // namespace cideal
