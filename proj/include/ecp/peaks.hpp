#pragma once

#include "ecp/guards.hpp"
#include "ecp/polynomial.hpp"
#include "ecp/poset.hpp"

#include <span>
#include <vector>

namespace ecp {

struct PeakData {
  int pk = 0;       // 2 <= i <= n-1 with pi_{i-1} < pi_i > pi_{i+1}
  int pk_left = 0;  // same over 1 <= i <= n-1, with pi_0 = 0
  int des = 0;      // pi_i > pi_{i+1}
};

/// Left peak positions i (1-based) of a permutation, using pi_0 = 0.
inline std::vector<int> left_peak_positions(std::span<const int> perm) {
  std::vector<int> out;
  for (std::size_t i = 1; i < perm.size(); ++i) {
    const int prev = i >= 2 ? perm[i - 2] : 0;
    if (prev < perm[i - 1] && perm[i - 1] > perm[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

inline PeakData peak_data(std::span<const int> perm) {
  PeakData d;
  for (std::size_t i = 1; i < perm.size(); ++i) {
    const bool drops = perm[i - 1] > perm[i];
    d.des += drops;
    const int prev = i >= 2 ? perm[i - 2] : 0;
    if (prev < perm[i - 1] && drops) {
      ++d.pk_left;
      if (i >= 2) ++d.pk;
    }
  }
  return d;
}

struct PeakPolynomials {
  IntPolynomial W;       // peak polynomial
  IntPolynomial W_left;  // left peak polynomial
  IntPolynomial W_des;   // P-Eulerian polynomial
};

inline PeakPolynomials peak_polynomials(const Poset& p, const Guards& g = {}) {
  const auto extensions = linear_extensions(p, g.max_extensions_n);
  const int n = p.size();
  std::vector<BigInt> w(n + 1), wl(n + 1), wd(n + 1);
  for (const auto& perm : extensions) {
    const PeakData d = peak_data(perm);
    w[d.pk] += 1;
    wl[d.pk_left] += 1;
    wd[d.des] += 1;
  }
  return {IntPolynomial(std::move(w)), IntPolynomial(std::move(wl)), IntPolynomial(std::move(wd))};
}

}  // namespace ecp
