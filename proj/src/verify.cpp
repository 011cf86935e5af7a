#include "cideal/verify.hpp"

#include <algorithm>
#include <random>

#include "cideal/closures.hpp"
#include "cideal/errors.hpp"
#include "cideal/report_json.hpp"

namespace cideal {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

json to_json(const CheckReport& report) {
  return json{{"check_name", report.check_name},
              {"inputs", report.inputs},
              {"verdict", to_string(report.verdict)},
              {"hypothesis_unverified", report.hypothesis_unverified},
              {"details", report.details}};
}

WProfile w_profile(const MonomialIdeal& I, const MonomialIdeal& J, int N, const Limits& limits) {
  if (!is_m_primary(I) || !is_m_primary(J)) throw NotMPrimary("W-profile needs m-primary ideals");
  if (!is_subset(I, J)) throw InclusionViolated(to_string(I) + " is not contained in " + to_string(J));
  if (N < 0) throw ValidationError("N must be non-negative");
  PowerLadder pi(I);
  PowerLadder pj(J);
  WProfile out{I, J, {}, std::nullopt};
  for (int n = 0; n <= N; ++n) {
    const std::int64_t len = colength(pi.get(n + 1), ColengthMethod::box_enumeration, limits) -
                             colength(pj.get(n + 1), ColengthMethod::box_enumeration, limits);
    if (len < 0) throw ConsistencyError("negative W length at n = " + std::to_string(n));
    out.lengths.values.push_back(len);
  }
  try {
    out.fit = fit_integer_polynomial(out.lengths, static_cast<int>(I.dim()), limits.validate_extra);
  } catch (const NoStableWindow&) {
    out.fit.reset();
  }
  return out;
}

namespace {

std::string param(const char* name, long value) { return std::string(name) + "=" + std::to_string(value); }

std::optional<ExponentVec> first_generator_outside(const MonomialIdeal& from, const MonomialIdeal& other) {
  for (std::size_t g = 0; g < from.num_generators(); ++g) {
    auto m = from.generator(g);
    if (!other.contains(m)) return ExponentVec(m.begin(), m.end());
  }
  return std::nullopt;
}

// A monomial in exactly one of the two ideals, for counter-witnesses.
std::optional<ExponentVec> difference_witness(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (auto m = first_generator_outside(a, b)) return m;
  return first_generator_outside(b, a);
}

// Profile of (I, J) grown from opts.profile_n until the fit settles.
WProfile settled_profile(const MonomialIdeal& I, const MonomialIdeal& J, const VerifyOptions& opts) {
  const int d = static_cast<int>(I.dim());
  int N = std::max(opts.profile_n, d + 1 + opts.limits.validate_extra);
  while (true) {
    WProfile p = w_profile(I, J, N, opts.limits);
    if (p.fit || N >= opts.limits.max_hilbert_n) return p;
    N = std::min(2 * N, opts.limits.max_hilbert_n);
  }
}

// Appends one profile row; returns false if the bound fails, nullopt if
// inconclusive.
std::optional<bool> profile_row(CheckReport& report, const MonomialIdeal& I, const MonomialIdeal& J, int i,
                                const VerifyOptions& opts) {
  const int d = static_cast<int>(I.dim());
  WProfile p = settled_profile(I, J, opts);
  json row{{"i", i}, {"J", format_generators(J)}, {"lengths", p.lengths.values}, {"bound", d - i - 1}};
  if (!p.fit) {
    row["fitted_degree"] = nullptr;
    report.details.push_back(row);
    return std::nullopt;
  }
  row["fitted_degree"] = p.fit->degree;
  row["e"] = p.fit->e;
  row["window_start"] = p.fit->window_start;
  report.details.push_back(row);
  return p.fit->degree <= d - i - 1;
}

void combine(Verdict& verdict, std::optional<bool> outcome) {
  if (!outcome) {
    if (verdict == Verdict::holds) verdict = Verdict::inconclusive;
  } else if (!*outcome) {
    verdict = Verdict::fails;
  }
}

void prop52_level(CheckReport& report, const MonomialIdeal& I, int i, const VerifyOptions& opts) {
  const int d = static_cast<int>(I.dim());
  const MonomialIdeal Ii = coefficient_ideal(I, i, opts.method, opts.limits);
  std::vector<MonomialIdeal> targets{Ii};
  if (opts.all_members) {
    for (auto& J : members_of_E(I, i, opts.limits))
      if (!(J == Ii)) targets.push_back(std::move(J));
  }
  for (const auto& J : targets) {
    auto outcome = profile_row(report, I, J, i, opts);
    const bool was_failing = report.verdict == Verdict::fails;
    combine(report.verdict, outcome);
    if (outcome && !*outcome && !was_failing) {
      const auto& last = report.details.back();
      report.details.push_back(json{{"counter_witness", {{"i", i}, {"J", format_generators(J)},
                                                          {"fitted_degree", last["fitted_degree"]},
                                                          {"bound", d - i - 1}}}});
    }
  }
}

}  // namespace

CheckReport check_prop52(const MonomialIdeal& I, int i, const VerifyOptions& opts) {
  const int d = static_cast<int>(I.dim());
  if (i < 0 || i > d) throw ValidationError("i must lie in 0..d");
  CheckReport report{"prop52", {to_string(I), param("i", i)}, Verdict::holds, false, json::array()};
  prop52_level(report, I, i, opts);
  return report;
}

CheckReport check_prop52_all(const MonomialIdeal& I, const VerifyOptions& opts) {
  const int d = static_cast<int>(I.dim());
  CheckReport report{"prop52", {to_string(I)}, Verdict::holds, false, json::array()};
  for (int i = 0; i <= d; ++i) prop52_level(report, I, i, opts);
  return report;
}

CheckReport check_shah(const MonomialIdeal& I, int s_max, const VerifyOptions& opts) {
  if (s_max < 1) throw ValidationError("s_max must be positive");
  const int d = static_cast<int>(I.dim());
  CheckReport report{"shah", {to_string(I), param("s_max", s_max)}, Verdict::holds, true, json::array()};
  std::optional<json> witness;
  PowerLadder powers(I);
  for (int s = 1; s <= s_max; ++s) {
    const MonomialIdeal& Is = powers.get(s);
    const CoefficientChain chain = coefficient_chain(Is, opts.method, opts.limits);
    std::vector<int> equal;
    for (int j = 1; j <= d; ++j) {
      if (chain.chain[j] == Is) {
        equal.push_back(j);
      } else if (!witness) {
        auto m = difference_witness(chain.chain[j], Is);
        witness = json{{"s", s}, {"j", j}, {"monomial", m ? format_monomial(*m, I.ring()) : ""}};
      }
    }
    report.details.push_back(json{{"s", s}, {"equal_for_j", equal}, {"chain", ideals_to_json(chain.chain)}});
  }
  if (witness) {
    report.verdict = Verdict::fails;
    report.details.push_back(json{{"counter_witness", *witness}});
  }
  return report;
}

CheckReport check_main_theorem(const MonomialIdeal& I, int r, int N, const VerifyOptions& opts) {
  const int d = static_cast<int>(I.dim());
  if (d < 2) throw ValidationError("the check needs d >= 2");
  if (r < 1 || r > d - 1) throw ValidationError("r must lie in 1..d-1");
  if (N < 1) throw ValidationError("N must be positive");
  CheckReport report{"main", {to_string(I), param("r", r), param("N", N)}, Verdict::holds, true, json::array()};
  std::optional<json> witness;
  PowerLadder powers(I);
  for (int n = 1; n <= N; ++n) {
    const MonomialIdeal& In = powers.get(n);
    const MonomialIdeal lhs = coefficient_ideal(In, d - r, opts.method, opts.limits);
    const MonomialIdeal rhs = ratliff_rush(In, opts.limits).ideal;
    const bool equal = lhs == rhs;
    report.details.push_back(json{{"n", n},
                                  {"coefficient_ideal", format_generators(lhs)},
                                  {"ratliff_rush", format_generators(rhs)},
                                  {"equal", equal}});
    if (!equal && !witness) {
      auto m = difference_witness(lhs, rhs);
      witness = json{{"n", n}, {"monomial", m ? format_monomial(*m, I.ring()) : ""}};
    }
  }
  if (witness) {
    report.verdict = Verdict::fails;
    report.details.push_back(json{{"counter_witness", *witness}});
  }
  return report;
}

CheckReport check_veronese(const MonomialIdeal& I, int t, int m_max, const VerifyOptions& opts) {
  if (t < 1 || m_max < 1) throw ValidationError("t and m_max must be positive");
  CheckReport report{"veronese", {to_string(I), param("t", t), param("m_max", m_max)}, Verdict::holds, false,
                     json::array()};
  std::optional<json> witness;
  const MonomialIdeal It = power(I, t);
  for (int m = 1; m <= m_max; ++m) {
    const MonomialIdeal lhs = ratliff_rush_power(It, m, opts.limits);
    const MonomialIdeal rhs = ratliff_rush_power(I, t * m, opts.limits);
    const bool equal = lhs == rhs;
    report.details.push_back(json{{"m", m},
                                  {"veronese_side", format_generators(lhs)},
                                  {"power_side", format_generators(rhs)},
                                  {"equal", equal}});
    if (!equal && !witness) {
      auto mono = difference_witness(lhs, rhs);
      witness = json{{"m", m}, {"monomial", mono ? format_monomial(*mono, I.ring()) : ""}};
    }
  }
  if (witness) {
    report.verdict = Verdict::fails;
    report.details.push_back(json{{"counter_witness", *witness}});
  }
  return report;
}

bool is_complete_intersection(const MonomialIdeal& I) {
  for (std::size_t g = 0; g < I.num_generators(); ++g) {
    auto v = I.generator(g);
    if (std::count_if(v.begin(), v.end(), [](Exponent e) { return e != 0; }) > 1) return false;
  }
  return is_m_primary(I);
}

namespace {

// Uniform draw in [lo, hi] by rejection from raw engine output, so the
// sequence is the same on every standard library.
int draw(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

}  // namespace

std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, int count, int d, int max_exp) {
  if (d != 2 && d != 3) throw ValidationError("corpus dimension must be 2 or 3");
  if (max_exp < 2 || max_exp > 6) throw ValidationError("corpus max_exp must lie in 2..6");
  if (count < 0) throw ValidationError("count must be non-negative");
  std::mt19937_64 rng(seed);
  const RingPtr ring = RingContext::standard(static_cast<std::size_t>(d));
  std::vector<MonomialIdeal> out;
  for (int c = 0; c < count; ++c) {
    std::vector<ExponentVec> gens;
    ExponentVec box(d);
    for (int j = 0; j < d; ++j) {
      box[j] = draw(rng, 2, max_exp);
      ExponentVec pure(d, 0);
      pure[j] = box[j];
      gens.push_back(pure);
    }
    const int mixed = draw(rng, 0, 4);
    for (int k = 0; k < mixed; ++k) {
      ExponentVec v(d);
      int support = 0;
      do {
        support = 0;
        for (int j = 0; j < d; ++j) {
          v[j] = draw(rng, 0, box[j] - 1);
          support += v[j] != 0;
        }
      } while (support < 2);
      gens.push_back(v);
    }
    out.push_back(normalize(gens, ring));
  }
  return out;
}

}  // namespace cideal
