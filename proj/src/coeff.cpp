#include "cideal/coeff.hpp"

#include <algorithm>
#include <string>

#include "cideal/closures.hpp"
#include "cideal/errors.hpp"

namespace cideal {

std::string_view to_string(ChainMethod m) { return m == ChainMethod::exhaustive ? "exhaustive" : "atoms"; }

namespace {

bool divides(const ExponentVec& a, const ExponentVec& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

/// Number of leading Hilbert coefficients on which the fits agree; J is in
/// E_i(I) exactly when this is > i.
int agreement(const HilbertFit& a, const HilbertFit& b) {
  const std::size_t n = std::min(a.e.size(), b.e.size());
  std::size_t k = 0;
  while (k < n && a.e[k] == b.e[k]) ++k;
  return static_cast<int>(k);
}

void require_level(const MonomialIdeal& I, int i) {
  if (i < 0 || i > static_cast<int>(I.dim()))
    throw ValidationError("coefficient index " + std::to_string(i) + " outside 0.." + std::to_string(I.dim()));
}

// Everything the level searches share for one base ideal.
struct Search {
  const MonomialIdeal& base;
  const Limits& limits;
  FitCache cache;
  HilbertFit base_fit;
  MonomialIdeal top;
  std::vector<ExponentVec> gap;

  Search(const MonomialIdeal& I, const Limits& lim)
      : base(I), limits(lim), cache(lim), base_fit(cache.get(I)), top(integral_closure(I, lim).ideal),
        gap(gap_monomials(I, top, lim)) {}

  int dim() const { return static_cast<int>(base.dim()); }

  // Reference: scan every intermediate ideal. Returns I_0..I_d.
  std::vector<MonomialIdeal> exhaustive() {
    IntermediateLattice lattice = enumerate_intermediate(base, top, limits);
    std::vector<std::pair<MonomialIdeal, int>> scored;
    lattice.for_each([&](const MonomialIdeal& J) { scored.emplace_back(J, agreement(cache.get(J), base_fit)); });

    std::vector<MonomialIdeal> levels;
    for (int i = 0; i <= dim(); ++i) {
      MonomialIdeal joined = base;
      for (const auto& [J, agree] : scored)
        if (agree > i) joined = sum(joined, J);
      if (agreement(cache.get(joined), base_fit) <= i) {
        std::vector<std::string> maximal;
        for (const auto& [J, agree] : scored) {
          if (agree <= i) continue;
          bool dominated = false;
          for (const auto& [K, agree_k] : scored)
            if (agree_k > i && !(K == J) && K.contains(J)) dominated = true;
          if (!dominated) maximal.push_back(to_string(J));
        }
        std::string list;
        for (const auto& m : maximal) list += (list.empty() ? "" : ", ") + m;
        throw NonUniqueMaximum("E_" + std::to_string(i) + " of " + to_string(base) +
                               " has several maximal monomial members: " + list);
      }
      levels.push_back(std::move(joined));
    }
    return levels;
  }

  // Sum of I with every single-monomial augmentation inside E_i.
  std::vector<MonomialIdeal> atoms() {
    std::vector<int> agree;
    agree.reserve(gap.size());
    for (const auto& m : gap) agree.push_back(agreement(cache.get(add_monomial(base, m)), base_fit));
    std::vector<MonomialIdeal> levels;
    for (int i = 0; i <= dim(); ++i) {
      std::vector<Exponent> flat(base.flat().begin(), base.flat().end());
      for (std::size_t k = 0; k < gap.size(); ++k)
        if (agree[k] > i) flat.insert(flat.end(), gap[k].begin(), gap[k].end());
      levels.push_back(MonomialIdeal::from_flat(base.ring_ptr(), flat));
    }
    if (gap.size() <= limits.gap_cap) {
      const std::vector<MonomialIdeal> reference = exhaustive();
      for (int i = 0; i <= dim(); ++i)
        if (!(reference[i] == levels[i]))
          throw ConsistencyError("atom search gives I_" + std::to_string(i) + " = " + to_string(levels[i]) +
                                 " but the lattice search gives " + to_string(reference[i]) + " for " +
                                 to_string(base));
    }
    return levels;
  }

  std::vector<MonomialIdeal> levels(ChainMethod method) {
    return method == ChainMethod::exhaustive ? exhaustive() : atoms();
  }
};

}  // namespace

IntermediateLattice::IntermediateLattice(MonomialIdeal bottom, MonomialIdeal top, std::vector<ExponentVec> gap)
    : bottom_(std::move(bottom)), top_(std::move(top)), gap_(std::move(gap)), multiples_(gap_.size()) {
  for (std::size_t a = 0; a < gap_.size(); ++a)
    for (std::size_t b = a + 1; b < gap_.size(); ++b)
      if (divides(gap_[a], gap_[b])) multiples_[a].push_back(b);
}

void IntermediateLattice::for_each(const std::function<void(const MonomialIdeal&)>& visit) const {
  // Decide gap elements from the lexicographically largest down. Every
  // multiple of an element is decided before it, so including it is legal
  // exactly when all of its multiples are already in.
  const std::size_t n = gap_.size();
  std::vector<char> in(n, 0);
  auto recurse = [&](auto&& self, std::size_t remaining) -> void {
    if (remaining == 0) {
      std::vector<Exponent> flat(bottom_.flat().begin(), bottom_.flat().end());
      for (std::size_t k = 0; k < n; ++k)
        if (in[k]) flat.insert(flat.end(), gap_[k].begin(), gap_[k].end());
      visit(MonomialIdeal::from_flat(bottom_.ring_ptr(), flat));
      return;
    }
    const std::size_t k = remaining - 1;
    in[k] = 0;
    self(self, k);
    if (std::all_of(multiples_[k].begin(), multiples_[k].end(), [&](std::size_t m) { return in[m] != 0; })) {
      in[k] = 1;
      self(self, k);
      in[k] = 0;
    }
  };
  recurse(recurse, n);
}

std::vector<MonomialIdeal> IntermediateLattice::collect() const {
  std::vector<MonomialIdeal> out;
  for_each([&](const MonomialIdeal& J) { out.push_back(J); });
  return out;
}

IntermediateLattice enumerate_intermediate(const MonomialIdeal& bottom, const MonomialIdeal& top,
                                           const Limits& limits) {
  auto gap = gap_monomials(bottom, top, limits);
  if (gap.size() > limits.gap_cap)
    throw CapExceeded("gap of " + std::to_string(gap.size()) + " monomials exceeds the lattice cap of " +
                      std::to_string(limits.gap_cap));
  return IntermediateLattice(bottom, top, std::move(gap));
}

bool is_in_E(const MonomialIdeal& J, const MonomialIdeal& I, int i, EVariant variant, const Limits& limits) {
  require_level(I, i);
  if (!is_subset(I, J)) throw InclusionViolated(to_string(I) + " is not contained in " + to_string(J));
  if (variant == EVariant::E_prime && !is_subset(ratliff_rush(I, limits).ideal, J)) return false;
  return agreement(e_coefficients(J, limits), e_coefficients(I, limits)) > i;
}

std::vector<MonomialIdeal> members_of_E(const MonomialIdeal& I, int i, const Limits& limits) {
  require_level(I, i);
  FitCache cache(limits);
  const HilbertFit& base_fit = cache.get(I);
  std::vector<MonomialIdeal> out;
  enumerate_intermediate(I, integral_closure(I, limits).ideal, limits).for_each([&](const MonomialIdeal& J) {
    if (agreement(cache.get(J), base_fit) > i) out.push_back(J);
  });
  return out;
}

MonomialIdeal coefficient_ideal(const MonomialIdeal& I, int i, ChainMethod method, const Limits& limits) {
  require_level(I, i);
  Search search(I, limits);
  return search.levels(method)[static_cast<std::size_t>(i)];
}

CoefficientChain coefficient_chain(const MonomialIdeal& I, ChainMethod method, const Limits& limits) {
  Search search(I, limits);
  const int d = search.dim();

  CoefficientChain out{I, search.levels(method), search.base_fit, {}, method, {}};

  auto fail = [&](const std::string& what) {
    throw ConsistencyError("coefficient chain of " + to_string(I) + ": " + what);
  };
  if (!(out.chain[0] == search.top)) fail("I_0 differs from the integral closure");
  if (!(out.chain[d] == ratliff_rush(I, limits).ideal)) fail("I_d differs from the Ratliff-Rush closure");
  if (!out.chain[d].contains(I)) fail("I_d does not contain I");
  for (int i = 0; i < d; ++i)
    if (!out.chain[i].contains(out.chain[i + 1])) fail("I_" + std::to_string(i + 1) + " is not inside I_" + std::to_string(i));

  for (int i = 0; i <= d; ++i) {
    out.per_ideal_fits.push_back(search.cache.get(out.chain[i]));
    if (agreement(out.per_ideal_fits.back(), search.base_fit) <= i)
      fail("I_" + std::to_string(i) + " changes e_j for some j <= " + std::to_string(i));

    // The minimal monomials of the closure missing from I_i are exactly the
    // closure's minimal generators outside I_i.
    for (std::size_t g = 0; g < search.top.num_generators(); ++g) {
      auto m = search.top.generator(g);
      if (out.chain[i].contains(m)) continue;
      const int agree = agreement(search.cache.get(add_monomial(out.chain[i], m)), search.base_fit);
      if (agree > i) fail("I_" + std::to_string(i) + " is not maximal");
      out.maximality_witnesses.push_back({i, ExponentVec(m.begin(), m.end()), agree});
    }
  }
  return out;
}

}  // namespace cideal
