#pragma once

#include "ecp/guards.hpp"
#include "ecp/linear_program.hpp"
#include "ecp/peaks.hpp"
#include "ecp/polynomial.hpp"
#include "ecp/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace ecp {

using LatticePoint = std::vector<int>;

/// Sign vector indexing the closed orthant {x : x_i * signs_i >= 0}.
struct OrthantSign {
  std::vector<int> signs;  // entries +1 / -1

  bool contains(std::span<const int> x) const {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] * signs[i] < 0) return false;
    return true;
  }
};

/// Signed indicator vector of an antichain; signs[k] belongs to the k-th
/// smallest element.
inline LatticePoint signed_indicator(int n, Antichain a, std::span<const int> signs) {
  LatticePoint x(n, 0);
  const auto elems = a.elements();
  for (std::size_t k = 0; k < elems.size(); ++k) x[elems[k] - 1] = signs[k];
  return x;
}

/// All sign vectors of length k in lexicographic order (-1 before +1).
inline std::vector<std::vector<int>> sign_patterns(int k) {
  std::vector<std::vector<int>> out;
  for (Mask bits = 0; bits < (Mask{1} << k); ++bits) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = (bits >> (k - 1 - i)) & 1u ? 1 : -1;
    out.push_back(std::move(s));
  }
  return out;
}

/// E(P) together with the origin; equals the lattice points of E_P. Ordered
/// by antichain, then sign pattern.
inline std::vector<LatticePoint> lattice_points_EP(const Poset& p) {
  std::vector<LatticePoint> out;
  for (const auto& a : antichains(p))
    for (const auto& s : sign_patterns(a.size())) out.push_back(signed_indicator(p.size(), a, s));
  return out;
}

/// y in m*C_P, using y >= 0 and sum_{i in C} y_i <= m over all maximal chains.
template <class Value>
bool in_dilated_chain_polytope(std::span<const std::vector<int>> chains, std::span<const Value> y, const Value& m) {
  for (const auto& v : y)
    if (v < 0) return false;
  for (const auto& chain : chains) {
    Value sum = 0;
    for (int i : chain) sum += y[i - 1];
    if (sum > m) return false;
  }
  return true;
}

/// x in m*E_P: |x| lies in m*C_P (orthant decomposition).
inline bool in_dilated_enriched_polytope(std::span<const std::vector<int>> chains, std::span<const int> x, int m) {
  std::vector<int> y(x.size());
  std::transform(x.begin(), x.end(), y.begin(), [](int v) { return v < 0 ? -v : v; });
  return in_dilated_chain_polytope<int>(chains, y, m);
}

/// |m E_P cap Z^n| = sum over y in m C_P cap Z_{>=0}^n of 2^{#nonzero(y)}.
/// Points are enumerated along a linear extension, carrying the largest chain
/// sum ending at each element, so partial assignments prune immediately.
inline BigInt count_dilation(const Poset& p, int m, const Guards& g = {}) {
  if (m < 0) throw std::invalid_argument("count_dilation needs m >= 0");
  const int n = p.size();
  require_n(n, g, "count_dilation");
  require_points(saturating_pow(static_cast<std::uint64_t>(m) + 1, n), g, "count_dilation");
  const Permutation order = first_linear_extension(p);
  std::vector<int> chain_sum(n + 1, 0);  // by label
  std::uint64_t total = 0;
  auto assign = [&](auto&& self, int k, std::uint64_t weight) -> void {
    if (k == n) {
      total += weight;
      return;
    }
    const int e = order[k];
    int base = 0;
    for (int j : mask_elements(p.covered_by(e))) base = std::max(base, chain_sum[j]);
    for (int v = 0; base + v <= m; ++v) {
      chain_sum[e] = base + v;
      self(self, k + 1, v == 0 ? weight : 2 * weight);
    }
  };
  assign(assign, 0, 1);
  return BigInt(total);
}

/// Membership of a nonnegative rational point in C_P, decided as feasibility
/// of a convex combination of antichain indicators (exact LP). Independent of
/// the chain-inequality description.
inline bool membership_oracle(const Poset& p, std::span<const Rational> point, const Guards& g = {}) {
  const int n = p.size();
  require_n(n, g, "membership_oracle");
  if (static_cast<int>(point.size()) != n) throw std::invalid_argument("point dimension mismatch");
  for (const auto& v : point)
    if (v < 0) return false;
  const auto acs = antichains(p);
  LinearProgram lp(acs.size());
  lp.add_constraint(std::vector<Rational>(acs.size(), 1), LinearProgram::Relation::Equal, 1);
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> row(acs.size());
    for (std::size_t k = 0; k < acs.size(); ++k) row[k] = (acs[k].mask >> (i - 1)) & 1u;
    lp.add_constraint(std::move(row), LinearProgram::Relation::Equal, point[i - 1]);
  }
  return lp.solve().status == LpStatus::Optimal;
}

/// L(0), ..., L(max_m).
inline std::vector<BigInt> dilation_counts(const Poset& p, int max_m, const Guards& g = {}) {
  std::vector<BigInt> out;
  for (int m = 0; m <= max_m; ++m) out.push_back(count_dilation(p, m, g));
  return out;
}

/// Ehrhart polynomial from L(0..n); degree n with leading coefficient Vol/n!.
inline RatPolynomial ehrhart_polynomial(const Poset& p, const Guards& g = {}) {
  const auto counts = dilation_counts(p, p.size(), g);
  RatPolynomial L = interpolate(counts, 0);
  if (L.degree() != p.size() || L.leading() <= 0)
    fail(ErrorCode::IdentityViolation, "Ehrhart polynomial " + L.to_string('m') + " does not have degree n with positive leading term");
  return L;
}

struct EhrhartData {
  RatPolynomial L;
  IntPolynomial hstar;
  std::vector<BigInt> gamma;
  BigInt volume;
};

/// Ehrhart polynomial, h*, gamma vector and normalized volume of E_P, with
/// gamma_i >= 0 and gamma_i = 4^i [x^i] W^(l)_P asserted.
inline EhrhartData hstar_and_gamma(const Poset& p, const Guards& g = {}) {
  const int n = p.size();
  const auto counts = dilation_counts(p, n, g);
  EhrhartData d;
  d.L = interpolate(counts, 0);
  d.hstar = hstar_from_counts(counts, n);
  d.gamma = gamma_expansion(d.hstar, n);
  d.volume = d.hstar.evaluate(BigInt(1));
  for (std::size_t i = 0; i < d.gamma.size(); ++i)
    if (d.gamma[i] < 0) fail(ErrorCode::GammaNegative, "gamma_" + std::to_string(i) + " = " + d.gamma[i].str());
  if (n <= g.max_extensions_n && n <= 31) {
    // W^(l) is defined through linear extensions with the poset's own labels,
    // so compare on the natural relabeling.
    const auto w_left = peak_polynomials(canonicalize(p), g).W_left;
    for (std::size_t i = 0; i < d.gamma.size(); ++i)
      if (d.gamma[i] != pow_int(4, static_cast<unsigned>(i)) * w_left.coeff(i))
        fail(ErrorCode::IdentityViolation,
             "gamma_" + std::to_string(i) + " = " + d.gamma[i].str() + " but 4^i w_i = " +
                 BigInt(pow_int(4, static_cast<unsigned>(i)) * w_left.coeff(i)).str());
  }
  return d;
}

struct VolumeReflexivity {
  BigInt volume;
  bool reflexive = false;
};

/// Normalized volume h*(1), asserted equal to 2^n |L(P)|; reflexivity via
/// palindromicity of h* at degree n.
inline VolumeReflexivity volume_and_reflexivity(const Poset& p, const Guards& g = {}) {
  const int n = p.size();
  const auto counts = dilation_counts(p, n, g);
  const IntPolynomial hstar = hstar_from_counts(counts, n);
  VolumeReflexivity out{hstar.evaluate(BigInt(1)), is_palindromic(hstar, n)};
  const BigInt expected = pow_int(2, static_cast<unsigned>(n)) * BigInt(count_linear_extensions(p));
  if (out.volume != expected)
    fail(ErrorCode::IdentityViolation, "volume " + out.volume.str() + " != 2^n |L(P)| = " + expected.str());
  if (!out.reflexive) fail(ErrorCode::IdentityViolation, "h* = " + hstar.to_string() + " is not palindromic");
  return out;
}

}  // namespace ecp
