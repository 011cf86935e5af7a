#pragma once

// Slow reference computations for the tests. Nothing here calls into the
// library's algorithms: ideals are plain vectors of exponent vectors and
// every answer comes from direct enumeration.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Mono = std::vector<int>;
using Gens = std::vector<Mono>;

inline bool divides(const Mono& a, const Mono& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

inline bool member(const Gens& I, const Mono& v) {
  for (const auto& g : I)
    if (divides(g, v)) return true;
  return false;
}

inline Gens minimize(Gens g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  Gens out;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b)
      redundant = b != a && divides(g[b], g[a]);
    if (!redundant) out.push_back(g[a]);
  }
  return out;
}

inline Gens product(const Gens& I, const Gens& J) {
  Gens out;
  for (const auto& a : I)
    for (const auto& b : J) {
      Mono m(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) m[j] = a[j] + b[j];
      out.push_back(m);
    }
  return minimize(out);
}

inline Gens power(const Gens& I, int n) {
  Gens out{Mono(I.front().size(), 0)};
  for (int k = 0; k < n; ++k) out = product(out, I);
  return out;
}

// Largest pure power of each variable, which bounds the standard monomials.
inline Mono box_of(const Gens& I) {
  const std::size_t d = I.front().size();
  Mono box(d, 0);
  for (const auto& g : I) {
    int support = 0;
    std::size_t at = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (g[j]) ++support, at = j;
    if (support == 1) box[at] = box[at] ? std::min(box[at], g[at]) : g[at];
  }
  return box;
}

inline void for_box(const Mono& box, const std::function<void(const Mono&)>& f) {
  Mono v(box.size(), 0);
  while (true) {
    f(v);
    std::size_t j = 0;
    while (j < v.size() && ++v[j] >= box[j]) v[j++] = 0;
    if (j == v.size()) return;
  }
}

// Standard monomials counted one by one.
inline std::int64_t colength(const Gens& I) {
  std::int64_t n = 0;
  for_box(box_of(I), [&](const Mono& v) { n += !member(I, v); });
  return n;
}

// lambda(A / I^{n+1}) for n = 0..N.
inline std::vector<std::int64_t> hilbert_samuel(const Gens& I, int N) {
  std::vector<std::int64_t> out;
  for (int n = 0; n <= N; ++n) out.push_back(colength(power(I, n + 1)));
  return out;
}

inline double choose(double x, int k) {
  double r = 1;
  for (int i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
  return r;
}

// Solves P(n) = sum_i (-1)^i e_i C(n+d-i, d-i) on d+1 late samples by
// Gaussian elimination in long double, then rounds.
inline std::vector<std::int64_t> e_from_values(const std::vector<std::int64_t>& values, int d) {
  const int k = d + 1;
  const int first = static_cast<int>(values.size()) - k;
  std::vector<std::vector<long double>> a(k, std::vector<long double>(k + 1));
  for (int r = 0; r < k; ++r) {
    const int n = first + r;
    for (int i = 0; i < k; ++i) a[r][i] = (i % 2 ? -1.0L : 1.0L) * choose(n + d - i, d - i);
    a[r][k] = static_cast<long double>(values[first + r]);
  }
  for (int c = 0; c < k; ++c) {
    int p = c;
    for (int r = c + 1; r < k; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    std::swap(a[c], a[p]);
    for (int r = 0; r < k; ++r) {
      if (r == c) continue;
      const long double f = a[r][c] / a[c][c];
      for (int i = c; i <= k; ++i) a[r][i] -= f * a[c][i];
    }
  }
  std::vector<std::int64_t> e;
  for (int i = 0; i < k; ++i) e.push_back(std::llround(static_cast<double>(a[i][k] / a[i][i])));
  return e;
}

inline std::vector<std::int64_t> e_coefficients(const Gens& I, int N = 12) {
  return e_from_values(hilbert_samuel(I, N), static_cast<int>(I.front().size()));
}

// (I^{n+1} : I^n), collected monomial by monomial.
inline Gens colon_power(const Gens& I, int n) {
  const Gens big = power(I, n + 1);
  const Gens small = power(I, n);
  Gens out;
  Mono box = box_of(I);
  for (auto& b : box) b += 1;
  for_box(box, [&](const Mono& v) {
    bool ok = true;
    for (const auto& g : small) {
      Mono m(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) m[j] = v[j] + g[j];
      if (!member(big, m)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(v);
  });
  return minimize(out);
}

// Union of the colons for n = 1..n_max.
inline Gens ratliff_rush(const Gens& I, int n_max = 6) {
  Gens all = I;
  for (int n = 1; n <= n_max; ++n)
    for (const auto& g : colon_power(I, n)) all.push_back(g);
  return minimize(all);
}

// v is outside the Newton polyhedron iff some nonnegative integer weight w
// has w.v < min_g w.g. Weights up to `reach` per coordinate are tried,
// which finds every facet normal of small polyhedra.
inline bool separated(const Gens& I, const Mono& v, int reach) {
  Mono top(v.size(), reach + 1);
  bool found = false;
  for_box(top, [&](const Mono& wt) {
    if (found) return;
    long long wv = 0;
    for (std::size_t j = 0; j < v.size(); ++j) wv += static_cast<long long>(wt[j]) * v[j];
    long long best = -1;
    for (const auto& g : I) {
      long long s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<long long>(wt[j]) * g[j];
      if (best < 0 || s < best) best = s;
    }
    found = wv < best;
  });
  return found;
}

// v^k in I^k for some k <= k_max certifies integrality.
inline bool power_certified(const Gens& I, const Mono& v, int k_max) {
  for (int k = 1; k <= k_max; ++k) {
    Mono vk(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) vk[j] = k * v[j];
    if (member(power(I, k), vk)) return true;
  }
  return false;
}

// Integral closure by support functions. `reach` must bound every facet
// normal of the Newton polyhedron (the largest exponent suffices in two
// variables, twice its square in three). A point certified by powers but
// separated by a weight marks a contradiction.
inline Gens integral_closure(const Gens& I, int reach, int k_max, bool* contradiction = nullptr) {
  Gens out;
  Mono box = box_of(I);
  for (auto& b : box) b += 1;
  for_box(box, [&](const Mono& v) {
    if (member(I, v)) {
      out.push_back(v);
      return;
    }
    const bool inside = !separated(I, v, reach);
    if (inside) out.push_back(v);
    if (contradiction && !inside && power_certified(I, v, k_max)) *contradiction = true;
  });
  return minimize(out);
}

// Largest J with I <= J <= top sharing e_0..e_i with I, by trying every
// subset of the gap monomials. The union of all such J must itself qualify.
inline Gens coefficient_ideal(const Gens& I, const Gens& top, int i) {
  Gens gap;
  Mono box = box_of(I);
  for_box(box, [&](const Mono& v) {
    if (member(top, v) && !member(I, v)) gap.push_back(v);
  });
  const auto base = e_coefficients(I);
  auto agrees = [&](const Gens& J) {
    const auto e = e_coefficients(J);
    for (int k = 0; k <= i; ++k)
      if (e[k] != base[k]) return false;
    return true;
  };
  std::set<Mono> joined;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gap.size()); ++mask) {
    Gens J = I;
    for (std::size_t k = 0; k < gap.size(); ++k)
      if (mask >> k & 1) J.push_back(gap[k]);
    J = minimize(J);
    if (!agrees(J)) continue;
    for_box(box, [&](const Mono& v) {
      if (member(J, v)) joined.insert(v);
    });
  }
  Gens out(joined.begin(), joined.end());
  for (const auto& g : I) out.push_back(g);
  return minimize(out);
}

}  // namespace oracle
