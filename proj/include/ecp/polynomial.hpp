#pragma once

#include "ecp/error.hpp"
#include "ecp/number.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace ecp {

/// Dense univariate polynomial with exact coefficients; `coeffs()[i]` is the
/// coefficient of x^i. Trailing zeros are always trimmed, so the zero
/// polynomial has no stored coefficients.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

  static Polynomial monomial(Coeff c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// (1 + x)^k
  static Polynomial one_plus_x_pow(std::size_t k) {
    std::vector<Coeff> v(k + 1);
    for (std::size_t i = 0; i <= k; ++i) v[i] = Coeff(binomial(k, i));
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  const Coeff& leading() const { return coeffs_.back(); }

  template <class X>
  X evaluate(const X& x) const {
    X acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Coeff(static_cast<long>(i));
    return Polynomial(std::move(v));
  }

  /// Substitute x -> c*x.
  Polynomial scale_argument(const Coeff& c) const {
    std::vector<Coeff> v = coeffs_;
    Coeff p = 1;
    for (auto& a : v) {
      a *= p;
      p *= c;
    }
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Coeff(-1); }
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Coeff& a = coeffs_[i];
      if (a == 0) continue;
      if (!first) out << (a < 0 ? " - " : " + ");
      else if (a < 0) out << "-";
      first = false;
      Coeff mag = a < 0 ? Coeff(-a) : a;
      if (i == 0 || mag != 1) out << mag;
      if (i >= 1) out << var;
      if (i >= 2) out << '^' << i;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  return RatPolynomial(std::move(v));
}

/// Integer polynomial when every coefficient is integral.
inline std::optional<IntPolynomial> to_integer(const RatPolynomial& p) {
  std::vector<BigInt> v;
  v.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) {
    if (!is_integer(q)) return std::nullopt;
    v.push_back(to_integer(q));
  }
  return IntPolynomial(std::move(v));
}

/// Quotient and remainder of polynomial division over the rationals.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& num, const RatPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
  const int dd = den.degree();
  if (num.degree() < dd) return {RatPolynomial{}, num};
  std::vector<Rational> quot(num.degree() - dd + 1);
  for (int k = num.degree() - dd; k >= 0; --k) {
    Rational c = rem[k + dd] / den.leading();
    quot[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= c * den.coeffs()[j];
  }
  rem.resize(dd);
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

inline RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Unique polynomial of degree <= values.size()-1 taking values[k] at
/// first_node + k. Newton forward differences, exact.
inline RatPolynomial interpolate(std::span<const BigInt> values, std::int64_t first_node = 0) {
  const std::size_t count = values.size();
  if (count == 0) return {};
  std::vector<Rational> diff(values.begin(), values.end());
  // diff[k] becomes the k-th forward difference at first_node.
  for (std::size_t k = 1; k < count; ++k)
    for (std::size_t i = count - 1; i >= k; --i) diff[i] = diff[i] - diff[i - 1];
  // p(m) = sum_k diff[k] * C(m - first_node, k), C(t, k) = t(t-1)...(t-k+1)/k!
  RatPolynomial result;
  RatPolynomial falling = RatPolynomial::constant(1);
  Rational factorial = 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      factorial *= static_cast<long>(k);
      falling = falling * RatPolynomial{Rational(-(first_node + static_cast<std::int64_t>(k) - 1)), Rational(1)};
    }
    result += falling * (diff[k] / factorial);
  }
  return result;
}

/// Coefficients 0..order of numerator(x) / (1-x)^power.
inline std::vector<BigInt> series_over_one_minus_x(const IntPolynomial& numerator, unsigned power, std::size_t order) {
  std::vector<BigInt> out(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    for (std::size_t j = 0; j <= m && j < numerator.coeffs().size(); ++j) {
      // [x^k] (1-x)^{-power} = C(k + power - 1, power - 1)
      const std::size_t k = m - j;
      out[m] += numerator.coeffs()[j] * (power == 0 ? BigInt(k == 0 ? 1 : 0) : binomial(k + power - 1, power - 1));
    }
  }
  return out;
}

/// h*-polynomial of an n-dimensional lattice polytope from L(0..n):
/// h*_j = sum_{i=0..j} (-1)^i C(n+1, i) L(j - i).
template <class Value>
IntPolynomial hstar_from_counts(std::span<const Value> counts, int n) {
  if (n < 0 || counts.size() < static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("hstar_from_counts needs n+1 values");
  if (counts[0] != 1) throw std::invalid_argument("hstar_from_counts needs L(0) = 1");
  std::vector<BigInt> h(n + 1);
  for (int j = 0; j <= n; ++j) {
    Value acc = 0;
    for (int i = 0; i <= j; ++i) {
      Value term = Value(binomial(n + 1, i)) * counts[j - i];
      acc += (i % 2 == 0) ? term : Value(-term);
    }
    if constexpr (std::is_same_v<Value, Rational>) {
      if (!is_integer(acc)) fail(ErrorCode::NonInteger, "h*_" + std::to_string(j) + " = " + acc.str());
      h[j] = to_integer(acc);
    } else {
      h[j] = acc;
    }
    if (h[j] < 0) fail(ErrorCode::NegativeHStar, "h*_" + std::to_string(j) + " = " + h[j].str());
  }
  return IntPolynomial(std::move(h));
}

inline IntPolynomial hstar_from_counts(std::span<const BigInt> counts, int n) {
  return hstar_from_counts<BigInt>(counts, n);
}

/// f(x) = x^n f(1/x), with coefficients beyond the stored degree taken as zero.
template <class Coeff>
bool is_palindromic(const Polynomial<Coeff>& f, int n) {
  if (f.degree() > n) return false;
  for (int i = 0; i <= n; ++i)
    if (f.coeff(i) != f.coeff(n - i)) return false;
  return true;
}

/// Coefficients gamma_0..gamma_{n/2} with h = sum gamma_i x^i (1+x)^{n-2i}.
inline std::vector<BigInt> gamma_expansion(const IntPolynomial& h, int n) {
  if (!is_palindromic(h, n)) fail(ErrorCode::NotPalindromic, h.to_string() + " at degree " + std::to_string(n));
  IntPolynomial residual = h;
  std::vector<BigInt> gamma(n / 2 + 1);
  for (int i = 0; i <= n / 2; ++i) {
    gamma[i] = residual.coeff(i);
    residual -= IntPolynomial::monomial(1, i) * IntPolynomial::one_plus_x_pow(n - 2 * i) * gamma[i];
  }
  if (!residual.is_zero()) fail(ErrorCode::IdentityViolation, "gamma residual " + residual.to_string());
  return gamma;
}

inline IntPolynomial from_gamma(std::span<const BigInt> gamma, int n) {
  IntPolynomial h;
  for (std::size_t i = 0; i < gamma.size(); ++i)
    h += IntPolynomial::monomial(1, i) * IntPolynomial::one_plus_x_pow(n - 2 * static_cast<int>(i)) * gamma[i];
  return h;
}

template <class Coeff>
bool is_unimodal(const Polynomial<Coeff>& f) {
  auto c = f.coeffs();
  std::size_t i = 1;
  while (i < c.size() && c[i - 1] <= c[i]) ++i;
  while (i < c.size() && c[i - 1] >= c[i]) ++i;
  return i >= c.size();
}

template <class Coeff>
bool is_log_concave(const Polynomial<Coeff>& f) {
  auto c = f.coeffs();
  for (std::size_t i = 1; i + 1 < c.size(); ++i)
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
  return true;
}

namespace detail {

inline int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// Distinct real roots of a squarefree polynomial: V(-inf) - V(+inf).
inline int sturm_distinct_real_roots(const RatPolynomial& g) {
  if (g.degree() <= 0) return 0;
  std::vector<RatPolynomial> seq{g, g.derivative()};
  while (!seq.back().is_zero()) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto changes = [&](bool at_plus_infinity) {
    int count = 0, prev = 0;
    for (const auto& p : seq) {
      int s = sign(p.leading());
      if (!at_plus_infinity && p.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

}  // namespace detail

/// Yun's squarefree decomposition: f = c * prod_i factors[i-1]^i, factors monic.
inline std::vector<RatPolynomial> squarefree_decomposition(const RatPolynomial& f) {
  std::vector<RatPolynomial> factors;
  if (f.degree() <= 0) return factors;
  RatPolynomial df = f.derivative();
  RatPolynomial b = gcd(f, df);
  RatPolynomial c = divmod(f, b).first;
  RatPolynomial d = divmod(df, b).first - c.derivative();
  while (c.degree() > 0) {
    RatPolynomial a = gcd(c, d);
    factors.push_back(a);
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
  }
  return factors;
}

/// Number of real roots counted with multiplicity.
template <class Coeff>
int real_root_count(const Polynomial<Coeff>& f) {
  RatPolynomial q;
  if constexpr (std::is_same_v<Coeff, Rational>) q = f;
  else q = to_rational(f);
  auto factors = squarefree_decomposition(q);
  int total = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    total += static_cast<int>(i + 1) * detail::sturm_distinct_real_roots(factors[i]);
  return total;
}

struct PolyProperties {
  bool palindromic = false;
  bool unimodal = false;
  bool log_concave = false;
  bool gamma_positive = false;
  int real_root_count = 0;
};

/// Shape predicates of f; palindromicity is taken at `n` (defaults to deg f).
inline PolyProperties polynomial_properties(const IntPolynomial& f, std::optional<int> n = std::nullopt) {
  const int deg = n.value_or(f.degree());
  PolyProperties props;
  props.palindromic = is_palindromic(f, deg);
  props.unimodal = is_unimodal(f);
  props.log_concave = is_log_concave(f);
  props.real_root_count = real_root_count(f);
  if (props.palindromic) {
    auto gamma = gamma_expansion(f, deg);
    props.gamma_positive = std::all_of(gamma.begin(), gamma.end(), [](const BigInt& g) { return g >= 0; });
  }
  return props;
}

namespace detail {

// Greedy k-binomial (Macaulay) representation of value: sum C(a_i, i), i = k, k-1, ...
inline std::vector<std::pair<std::int64_t, std::int64_t>> macaulay_representation(BigInt value, std::int64_t k) {
  std::vector<std::pair<std::int64_t, std::int64_t>> rep;
  while (value > 0 && k >= 1) {
    std::int64_t a = k;
    while (binomial(a + 1, k) <= value) ++a;
    rep.emplace_back(a, k);
    value -= binomial(a, k);
    --k;
  }
  return rep;
}

}  // namespace detail

/// Whether (f_{-1}, f_0, f_1, ...) is the f-vector of a simplicial complex:
/// f_{-1} = 1 and f_{k} <= f_{k-1}^{(k)} for every k >= 1.
inline bool kruskal_katona_check(std::span<const BigInt> f) {
  if (f.empty() || f[0] != 1) return false;
  for (const auto& v : f)
    if (v < 0) return false;
  // f[s] counts faces with s vertices.
  for (std::size_t s = 1; s + 1 < f.size(); ++s) {
    BigInt bound = 0;
    for (auto [a, i] : detail::macaulay_representation(f[s], static_cast<std::int64_t>(s))) bound += binomial(a, i + 1);
    if (f[s + 1] > bound) return false;
  }
  return true;
}

inline std::vector<BigInt> to_bigints(std::span<const std::int64_t> v) { return {v.begin(), v.end()}; }

}  // namespace ecp
