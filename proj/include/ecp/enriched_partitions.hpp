#pragma once

#include "ecp/guards.hpp"
#include "ecp/lattice_geometry.hpp"
#include "ecp/peaks.hpp"
#include "ecp/polynomial.hpp"
#include "ecp/poset.hpp"

#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

namespace ecp {

enum class PartitionKind {
  Left,      // values in {0, +-1, ..., +-m}; equal absolute values force f(y) >= 0
  Enriched,  // values in {+-1, ..., +-m}; equal absolute values force f(y) > 0
};

/// A map f : P -> Z given by its values f(1), ..., f(n), with bound m.
struct PartitionMap {
  std::vector<int> values;
  int bound = 0;
  PartitionKind kind = PartitionKind::Left;

  int operator()(int label) const { return values[label - 1]; }
  friend bool operator==(const PartitionMap&, const PartitionMap&) = default;
};

namespace detail {

inline bool partition_pair_ok(int fx, int fy, PartitionKind kind) {
  const int ax = std::abs(fx), ay = std::abs(fy);
  if (ax > ay) return false;
  if (ax == ay) return kind == PartitionKind::Left ? fy >= 0 : fy > 0;
  return true;
}

inline void require_natural(const Poset& p) {
  if (!p.naturally_labeled()) fail(ErrorCode::NotNaturallyLabeled, "relabel along a linear extension first");
}

}  // namespace detail

inline bool is_valid_partition(const Poset& p, const PartitionMap& f) {
  if (static_cast<int>(f.values.size()) != p.size()) return false;
  for (int v : f.values) {
    if (std::abs(v) > f.bound) return false;
    if (v == 0 && f.kind == PartitionKind::Enriched) return false;
  }
  for (int y = 1; y <= p.size(); ++y)
    for (int x : mask_elements(p.below(y)))
      if (!detail::partition_pair_ok(f(x), f(y), f.kind)) return false;
  return true;
}

namespace detail {

// Backtracking along the natural order 1..n; every relation x < y has x < y
// as integers, so all constraints on f(y) are checkable when y is assigned.
template <class Visit>
void for_each_partition(const Poset& p, int m, PartitionKind kind, Visit&& visit) {
  std::vector<int> candidates;
  for (int a = 0; a <= m; ++a) {
    if (a == 0) {
      if (kind == PartitionKind::Left) candidates.push_back(0);
      continue;
    }
    candidates.push_back(a);
    candidates.push_back(-a);
  }
  std::vector<int> f(p.size());
  auto assign = [&](auto&& self, int y) -> void {
    if (y > p.size()) {
      visit(f);
      return;
    }
    const Mask below = p.below(y);
    for (int v : candidates) {
      bool ok = true;
      for (int x : mask_elements(below))
        if (!partition_pair_ok(f[x - 1], v, kind)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      f[y - 1] = v;
      self(self, y + 1);
    }
  };
  assign(assign, 1);
}

inline void check_partition_guards(const Poset& p, int m, const Guards& g) {
  require_natural(p);
  if (m < 1) throw std::invalid_argument("partitions need m >= 1");
  require_n(p.size(), g, "enumerate_partitions");
  require_points(saturating_pow(2 * static_cast<std::uint64_t>(m) + 1, p.size()), g, "enumerate_partitions");
}

}  // namespace detail

/// All left enriched (or enriched) P-partitions with values bounded by m.
inline std::vector<PartitionMap> enumerate_partitions(const Poset& p, int m, PartitionKind kind, const Guards& g = {}) {
  detail::check_partition_guards(p, m, g);
  std::vector<PartitionMap> out;
  detail::for_each_partition(p, m, kind, [&](const std::vector<int>& f) { out.push_back({f, m, kind}); });
  return out;
}

inline BigInt count_partitions(const Poset& p, int m, PartitionKind kind, const Guards& g = {}) {
  detail::check_partition_guards(p, m, g);
  std::uint64_t count = 0;
  detail::for_each_partition(p, m, kind, [&](const std::vector<int>&) { ++count; });
  return BigInt(count);
}

/// Order polynomial interpolated from counts at m = 1..n+1; its value at 0
/// comes from the interpolant.
inline RatPolynomial order_polynomial(const Poset& p, PartitionKind kind, const Guards& g = {}) {
  std::vector<BigInt> counts;
  for (int m = 1; m <= p.size() + 1; ++m) counts.push_back(count_partitions(p, m, kind, g));
  return interpolate(counts, 1);
}

/// phi: x_i = f(i) for minimal i, otherwise +-min{|f(i)| - |f(j)| : i covers j}
/// with the sign of f(i) (zero counts as nonnegative).
inline LatticePoint phi_map(const Poset& p, const PartitionMap& f) {
  if (f.kind != PartitionKind::Left || !is_valid_partition(p, f))
    fail(ErrorCode::InvalidPartition, "phi needs a valid left enriched partition");
  LatticePoint x(p.size());
  for (int i = 1; i <= p.size(); ++i) {
    if (p.is_minimal(i)) {
      x[i - 1] = f(i);
      continue;
    }
    int gap = f.bound + 1;
    for (int j : mask_elements(p.covered_by(i))) gap = std::min(gap, std::abs(f(i)) - std::abs(f(j)));
    x[i - 1] = f(i) >= 0 ? gap : -gap;
  }
  return x;
}

/// psi: psi(x)(i) = +-max{|x_{j1}| + ... + |x_{jk}| : j1 < ... < jk = i}, with
/// the sign of x_i (zero counts as nonnegative).
inline PartitionMap psi_map(const Poset& p, std::span<const int> x, int m) {
  if (static_cast<int>(x.size()) != p.size()) fail(ErrorCode::PointOutsidePolytope, "dimension mismatch");
  const auto chains = maximal_chains(p);
  if (!in_dilated_enriched_polytope(chains, x, m)) fail(ErrorCode::PointOutsidePolytope, "point is not in m E_P");
  std::vector<int> best(p.size() + 1, 0);
  PartitionMap f{std::vector<int>(p.size()), m, PartitionKind::Left};
  for (int i : first_linear_extension(p)) {
    int below = 0;
    for (int j : mask_elements(p.below(i))) below = std::max(below, best[j]);
    best[i] = below + std::abs(x[i - 1]);
    f.values[i - 1] = x[i - 1] >= 0 ? best[i] : -best[i];
  }
  return f;
}

struct SeriesCheck {
  bool holds = false;
  std::vector<BigInt> lhs;  // Omega^(l)(m), m = 0..M
  std::vector<BigInt> rhs;  // coefficients of (x+1)^n W^(l)(4x/(x+1)^2) / (1-x)^{n+1}
};

/// Numerator (x+1)^n W(4x/(x+1)^2) = sum_i w_i 4^i x^i (1+x)^{n-2i}.
inline IntPolynomial peak_transform(const IntPolynomial& w, int n) {
  IntPolynomial out;
  for (int i = 0; i <= w.degree(); ++i)
    out += IntPolynomial::monomial(pow_int(4, i) * w.coeff(i), i) * IntPolynomial::one_plus_x_pow(n - 2 * i);
  return out;
}

/// Compares the generating function of the left enriched order polynomial
/// with the left-peak-polynomial expression, coefficients 0..M.
inline SeriesCheck series_identity_check(const Poset& p, int M, const Guards& g = {}) {
  detail::require_natural(p);
  const int n = p.size();
  const RatPolynomial omega = order_polynomial(p, PartitionKind::Left, g);
  SeriesCheck out;
  for (int m = 0; m <= M; ++m) {
    const Rational v = omega.evaluate(Rational(m));
    if (!is_integer(v)) fail(ErrorCode::NonInteger, "order polynomial value " + v.str());
    out.lhs.push_back(to_integer(v));
  }
  const IntPolynomial numerator = peak_transform(peak_polynomials(p, g).W_left, n);
  out.rhs = series_over_one_minus_x(numerator, n + 1, M);
  out.holds = out.lhs == out.rhs;
  return out;
}

/// p(m + c)
inline RatPolynomial shift_argument(const RatPolynomial& p, const Rational& c) {
  RatPolynomial out;
  const RatPolynomial lin{c, Rational(1)};
  for (int i = p.degree(); i >= 0; --i) out = out * lin + RatPolynomial::constant(p.coeffs()[i]);
  return out;
}

struct OmegaRelation {
  RatPolynomial left;                // Omega^(l)_P(m)
  RatPolynomial enriched;            // Omega'_P(m)
  RatPolynomial half_difference;     // (Omega'(m+1) - Omega'(m)) / 2
  bool holds = false;                // left == half_difference
  bool half_sum_holds = false;       // left == (Omega'(m+1) + Omega'(m)) / 2
};

/// Evaluates the stated relation between the left enriched and enriched
/// order polynomials; the verdict is measured, not assumed.
inline OmegaRelation omega_relation_check(const Poset& p, const Guards& g = {}) {
  OmegaRelation r;
  r.left = order_polynomial(p, PartitionKind::Left, g);
  r.enriched = order_polynomial(p, PartitionKind::Enriched, g);
  const RatPolynomial shifted = shift_argument(r.enriched, 1);
  r.half_difference = (shifted - r.enriched) * Rational(1, 2);
  r.holds = r.left == r.half_difference;
  r.half_sum_holds = r.left == (shifted + r.enriched) * Rational(1, 2);
  return r;
}

}  // namespace ecp
