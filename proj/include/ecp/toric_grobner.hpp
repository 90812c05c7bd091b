#pragma once

#include "ecp/guards.hpp"
#include "ecp/lattice_geometry.hpp"
#include "ecp/linear_program.hpp"
#include "ecp/polynomial.hpp"
#include "ecp/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ecp {

/// Variable x_A^signs of the toric ring, one per lattice point of E_P.
struct SignedVariable {
  Antichain antichain;
  std::vector<int> signs;  // per element of the antichain, ascending labels
  LatticePoint image;      // t-exponent vector; the s-degree is 1
};

using VarId = std::uint16_t;
/// Multiset of variables, ids ascending.
using Monomial = std::vector<VarId>;

/// Variables of R_P ordered by (antichain, signs); id 0 is the origin x_0.
class ToricRing {
 public:
  explicit ToricRing(const Poset& p) : poset_(p) {
    for (const auto& a : antichains(p))
      for (const auto& s : sign_patterns(a.size())) {
        Mask positive = 0;
        const auto elems = a.elements();
        for (std::size_t k = 0; k < elems.size(); ++k)
          if (s[k] > 0) positive |= Mask{1} << (elems[k] - 1);
        index_.emplace(key(a.mask, positive), static_cast<VarId>(vars_.size()));
        vars_.push_back({a, s, signed_indicator(p.size(), a, s)});
      }
  }

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return vars_.size(); }
  const SignedVariable& var(VarId id) const { return vars_[id]; }
  std::span<const SignedVariable> variables() const { return vars_; }
  VarId origin() const { return 0; }

  /// Variable with support `support` whose positive elements are `positive`.
  VarId find(Mask support, Mask positive) const {
    auto it = index_.find(key(support, positive & support));
    if (it == index_.end()) throw std::out_of_range("no such variable");
    return it->second;
  }

  Mask positive_mask(VarId id) const {
    Mask m = 0;
    const auto elems = vars_[id].antichain.elements();
    for (std::size_t k = 0; k < elems.size(); ++k)
      if (vars_[id].signs[k] > 0) m |= Mask{1} << (elems[k] - 1);
    return m;
  }

  /// (t-exponents, s-degree) of a monomial under the toric map.
  std::pair<LatticePoint, int> image(const Monomial& u) const {
    LatticePoint t(poset_.size(), 0);
    for (VarId v : u)
      for (int i = 0; i < poset_.size(); ++i) t[i] += vars_[v].image[i];
    return {t, static_cast<int>(u.size())};
  }

  std::string name(VarId id) const {
    const auto& v = vars_[id];
    if (v.antichain.mask == 0) return "x_0";
    std::string s = "x_";
    const auto elems = v.antichain.elements();
    for (std::size_t k = 0; k < elems.size(); ++k) s += (v.signs[k] > 0 ? "+" : "-") + std::to_string(elems[k]);
    return s;
  }

  std::string name(const Monomial& u) const {
    std::string s;
    for (std::size_t k = 0; k < u.size(); ++k) s += (k ? "*" : "") + name(u[k]);
    return s.empty() ? "1" : s;
  }

 private:
  static std::uint64_t key(Mask support, Mask positive) { return (std::uint64_t{support} << 32) | positive; }

  Poset poset_;
  std::vector<SignedVariable> vars_;
  std::unordered_map<std::uint64_t, VarId> index_;
};

inline Monomial make_monomial(std::initializer_list<VarId> ids) {
  Monomial m(ids);
  std::sort(m.begin(), m.end());
  return m;
}

/// lead - tail; `lead` is the intended initial monomial.
struct ToricBinomial {
  Monomial lead;
  Monomial tail;
  int family = 0;  // 1: sign clash, 2: Hibi-Li type
  friend bool operator==(const ToricBinomial& a, const ToricBinomial& b) { return a.lead == b.lead && a.tail == b.tail; }
  friend bool operator<(const ToricBinomial& a, const ToricBinomial& b) {
    return std::tie(a.lead, a.tail) < std::tie(b.lead, b.tail);
  }
};

/// Both binomial families of the quadratic Groebner basis candidate, each
/// member checked to lie in the toric ideal (equal images).
inline std::vector<ToricBinomial> generate_groebner_candidates(const ToricRing& ring) {
  const Poset& p = ring.poset();
  std::set<ToricBinomial> out;
  // (1) two variables sharing an element with opposite signs: drop it from both.
  for (VarId u = 0; u < ring.size(); ++u)
    for (VarId v = u + 1; v < ring.size(); ++v) {
      const Mask su = ring.var(u).antichain.mask, sv = ring.var(v).antichain.mask;
      const Mask pu = ring.positive_mask(u), pv = ring.positive_mask(v);
      const Mask clash = su & sv & (pu ^ pv);
      for (int i : mask_elements(clash)) {
        const Mask bit = Mask{1} << (i - 1);
        out.insert({make_monomial({u, v}), make_monomial({ring.find(su & ~bit, pu), ring.find(sv & ~bit, pv)}), 1});
      }
    }
  // (2) x_{max I} x_{max J} - x_{max(I cup J)} x_{max(I*J)} with a common sign
  // assignment on max(I) cup max(J).
  const auto ideals = ideal_lattice(p);
  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t b = a + 1; b < ideals.size(); ++b) {
      const PosetIdeal& I = ideals[a];
      const PosetIdeal& J = ideals[b];
      const Mask A = I.max.mask, B = J.max.mask;
      const Mask C = p.maximal(I.elements | J.elements);
      const Mask D = star(p, I, J).max.mask;
      const Mask support = A | B;
      // Enumerate sign assignments as subsets of the support taken positive.
      for (Mask pos = support;; pos = (pos - 1) & support) {
        ToricBinomial g{make_monomial({ring.find(A, pos), ring.find(B, pos)}), make_monomial({ring.find(C, pos), ring.find(D, pos)}), 2};
        if (g.lead != g.tail) out.insert(std::move(g));
        if (pos == 0) break;
      }
    }
  std::vector<ToricBinomial> result(out.begin(), out.end());
  for (const auto& g : result)
    if (ring.image(g.lead) != ring.image(g.tail))
      fail(ErrorCode::ImageMismatch, ring.name(g.lead) + " - " + ring.name(g.tail));
  return result;
}

/// The order <_P: total antichain cardinality, then the lifted weight w_P,
/// then graded reverse lexicographic order on variable ids.
class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(std::vector<int> card, std::vector<Rational> weight) : card_(std::move(card)), weight_(std::move(weight)) {
    BigInt scale = 1;
    for (const auto& w : weight_) scale = boost::multiprecision::lcm(scale, BigInt(boost::multiprecision::denominator(w)));
    for (const auto& w : weight_) {
      const Rational scaled = w * Rational(scale);
      scaled_.push_back(static_cast<std::int64_t>(to_integer(scaled)));
    }
  }

  std::span<const int> card() const { return card_; }
  std::span<const Rational> weight() const { return weight_; }

  /// Positive when u > v.
  int compare(const Monomial& u, const Monomial& v) const {
    if (u.size() != v.size()) return u.size() > v.size() ? 1 : -1;
    std::int64_t cu = 0, cv = 0, wu = 0, wv = 0;
    for (VarId x : u) cu += card_[x], wu += scaled_[x];
    for (VarId x : v) cv += card_[x], wv += scaled_[x];
    if (cu != cv) return cu > cv ? 1 : -1;
    if (wu != wv) return wu > wv ? 1 : -1;
    // grevlex: at the smallest variable where exponents differ, the smaller
    // exponent wins.
    std::size_t i = 0, j = 0;
    while (i < u.size() || j < v.size()) {
      VarId x = i < u.size() ? u[i] : v[j];
      if (j < v.size()) x = std::min(x, v[j]);
      std::size_t eu = 0, ev = 0;
      while (i < u.size() && u[i] == x) ++i, ++eu;
      while (j < v.size() && v[j] == x) ++j, ++ev;
      if (eu != ev) return eu < ev ? 1 : -1;
    }
    return 0;
  }

  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

 private:
  std::vector<int> card_;
  std::vector<Rational> weight_;
  std::vector<std::int64_t> scaled_;
};

struct OrderConstruction {
  TermOrder order;
  /// Weight per antichain (index = position in antichains(P)).
  std::vector<Rational> antichain_weight;
  std::size_t constraint_count = 0;
};

/// Finds w >= 0 on antichains with w(max I) + w(max J) >= 1 + w(max(I cup J))
/// + w(max(I*J)) for all incomparable ideals I, J, by solving the dual program
/// max 1.y s.t. M^T y <= 0, y >= 0 exactly; its multipliers are such a w.
inline OrderConstruction construct_order(const ToricRing& ring) {
  const Poset& p = ring.poset();
  const auto acs = antichains(p);
  std::map<Mask, std::size_t> position;
  for (std::size_t k = 0; k < acs.size(); ++k) position[acs[k].mask] = k;

  std::set<std::vector<int>> rows;
  const auto ideals = ideal_lattice(p);
  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t b = a + 1; b < ideals.size(); ++b) {
      const PosetIdeal& I = ideals[a];
      const PosetIdeal& J = ideals[b];
      const Mask meet = I.elements & J.elements;
      if (meet == I.elements || meet == J.elements) continue;
      std::vector<int> row(acs.size(), 0);
      row[position[I.max.mask]] += 1;
      row[position[J.max.mask]] += 1;
      row[position[p.maximal(I.elements | J.elements)]] -= 1;
      row[position[star(p, I, J).max.mask]] -= 1;
      rows.insert(std::move(row));
    }

  OrderConstruction out;
  out.constraint_count = rows.size();
  out.antichain_weight.assign(acs.size(), 0);
  if (!rows.empty()) {
    const std::vector<std::vector<int>> M(rows.begin(), rows.end());
    auto slack = [&](const std::vector<int>& row, const std::vector<Rational>& w) -> Rational {
      Rational lhs = 0;
      for (std::size_t a = 0; a < acs.size(); ++a)
        if (row[a] != 0) lhs += row[a] * w[a];
      return lhs - 1;
    };
    // Constraint generation: solve over a working set of rows, then add the
    // rows the multipliers violate until none is left.
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < M.size() && k < acs.size(); ++k) active.push_back(k);
    std::vector<bool> in_active(M.size(), false);
    for (std::size_t k : active) in_active[k] = true;
    for (;;) {
      LinearProgram dual(active.size());
      dual.set_objective(std::vector<Rational>(active.size(), 1));
      for (std::size_t a = 0; a < acs.size(); ++a) {
        std::vector<Rational> col(active.size());
        for (std::size_t k = 0; k < active.size(); ++k) col[k] = M[active[k]][a];
        dual.add_constraint(std::move(col), LinearProgram::Relation::LessEqual, 0);
      }
      const LpResult r = dual.solve();
      if (r.status != LpStatus::Optimal)
        fail(ErrorCode::Infeasible, "no nonnegative weight separates the Hibi-Li binomials with margin 1");
      out.antichain_weight = r.duals;
      std::size_t added = 0;
      for (std::size_t k = 0; k < M.size() && added < acs.size(); ++k)
        if (!in_active[k] && slack(M[k], out.antichain_weight) < 0) {
          active.push_back(k);
          in_active[k] = true;
          ++added;
        }
      if (added == 0) break;
    }
    for (const auto& row : M)
      if (slack(row, out.antichain_weight) < 0) fail(ErrorCode::Infeasible, "LP multipliers violate a weight constraint");
    for (const auto& w : out.antichain_weight)
      if (w < 0) fail(ErrorCode::Infeasible, "negative weight from LP");
  }
  std::vector<int> card;
  std::vector<Rational> weight;
  for (const auto& v : ring.variables()) {
    card.push_back(v.antichain.size());
    weight.push_back(out.antichain_weight[position[v.antichain.mask]]);
  }
  out.order = TermOrder(std::move(card), std::move(weight));
  return out;
}

/// Every candidate's first monomial is its initial term under the order.
inline bool leads_are_first(std::span<const ToricBinomial> G, const TermOrder& order) {
  return std::all_of(G.begin(), G.end(), [&](const ToricBinomial& g) { return order.greater(g.lead, g.tail); });
}

/// Squarefree, quadratic and free of the origin variable.
inline bool lead_is_squarefree_quadratic(const ToricBinomial& g, VarId origin) {
  return g.lead.size() == 2 && g.lead[0] != g.lead[1] && g.lead[0] != origin && g.lead[1] != origin;
}

struct BuchbergerResult {
  bool is_groebner_basis = false;
  std::uint64_t spairs_checked = 0;
  std::uint64_t spairs_skipped_coprime = 0;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

namespace detail {

using Term = std::pair<Monomial, BigInt>;

inline Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// a / b for b dividing a (multisets)
inline std::optional<Monomial> divide(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t j = 0;
  for (VarId x : a) {
    if (j < b.size() && b[j] == x) ++j;
    else out.push_back(x);
  }
  if (j != b.size()) return std::nullopt;
  return out;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class Reducer {
 public:
  Reducer(std::span<const ToricBinomial> G, const TermOrder& order) : order_(order) {
    for (std::size_t k = 0; k < G.size(); ++k) {
      ToricBinomial g = G[k];
      if (order.greater(g.tail, g.lead)) std::swap(g.lead, g.tail);
      basis_.push_back(g);
      if (g.lead.size() == 2) quadratic_.emplace(pair_key(g.lead[0], g.lead[1]), k);
      else other_.push_back(k);
    }
  }

  const std::vector<ToricBinomial>& basis() const { return basis_; }

  /// Index of a basis element whose lead divides t.
  std::optional<std::size_t> find_divisor(const Monomial& t) const {
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        auto it = quadratic_.find(pair_key(t[i], t[j]));
        if (it != quadratic_.end()) return it->second;
      }
    for (std::size_t k : other_)
      if (divide(t, basis_[k].lead)) return k;
    return std::nullopt;
  }

  /// Full reduction to normal form; true when the remainder is zero.
  bool reduces_to_zero(std::vector<Term> poly) const {
    auto cmp = [this](const Monomial& a, const Monomial& b) { return order_.greater(a, b); };
    std::map<Monomial, BigInt, decltype(cmp)> terms(cmp);
    for (auto& [m, c] : poly) add(terms, m, c);
    // Reducing a term only introduces smaller terms, so scanning from the top
    // visits each surviving term once.
    auto it = terms.begin();
    while (it != terms.end()) {
      auto divisor = find_divisor(it->first);
      if (!divisor) {
        ++it;
        continue;
      }
      const ToricBinomial& g = basis_[*divisor];
      const Monomial reduced = it->first;
      const BigInt coeff = it->second;
      terms.erase(it);
      add(terms, multiply(*divide(reduced, g.lead), g.tail), coeff);
      it = terms.upper_bound(reduced);
    }
    return terms.empty();
  }

 private:
  template <class Map>
  static void add(Map& terms, const Monomial& m, const BigInt& c) {
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  static std::uint32_t pair_key(VarId a, VarId b) { return (std::uint32_t{a} << 16) | b; }

  const TermOrder& order_;
  std::vector<ToricBinomial> basis_;
  std::unordered_map<std::uint32_t, std::size_t> quadratic_;
  std::vector<std::size_t> other_;
};

}  // namespace detail

/// Buchberger's criterion on a fixed set of binomials: every S-pair reduces to
/// zero. Pairs with coprime initial terms are skipped (first criterion).
inline BuchbergerResult buchberger_verify(std::span<const ToricBinomial> G, const TermOrder& order, const Guards& guards = {}) {
  detail::Reducer reducer(G, order);
  const auto& basis = reducer.basis();
  BuchbergerResult result;

  // Pairs sharing a lead variable, each visited once (at its smallest shared variable).
  std::map<VarId, std::vector<std::size_t>> by_variable;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Monomial vars = basis[k].lead;
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (VarId x : vars) by_variable[x].push_back(k);
  }
  std::uint64_t planned = 0;
  for (const auto& [x, list] : by_variable) planned += list.size() * (list.size() - 1) / 2;
  if (planned > guards.max_spairs)
    fail(ErrorCode::SizeLimit, "buchberger_verify: " + std::to_string(planned) + " S-pairs exceed max_spairs");
  const std::uint64_t total_pairs = basis.size() * (basis.size() - 1) / 2;

  for (const auto& [x, list] : by_variable)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        const ToricBinomial& f = basis[list[a]];
        const ToricBinomial& g = basis[list[b]];
        Monomial shared;
        std::set_intersection(f.lead.begin(), f.lead.end(), g.lead.begin(), g.lead.end(), std::back_inserter(shared));
        if (shared.front() != x) continue;
        ++result.spairs_checked;
        const Monomial l = detail::lcm(f.lead, g.lead);
        // S(f, g) = (l/lf)(lf - tf) - (l/lg)(lg - tg) = (l/lg) tg - (l/lf) tf
        std::vector<detail::Term> s{{detail::multiply(*detail::divide(l, g.lead), g.tail), BigInt(1)},
                                    {detail::multiply(*detail::divide(l, f.lead), f.tail), BigInt(-1)}};
        if (!reducer.reduces_to_zero(std::move(s))) {
          result.failing_pair = std::make_pair(list[a], list[b]);
          return result;
        }
      }
  result.spairs_skipped_coprime = total_pairs - result.spairs_checked;
  result.is_groebner_basis = true;
  return result;
}

/// Undirected graph on the variables whose edges are the initial terms.
class InitialGraph {
 public:
  InitialGraph(std::size_t vertices, std::span<const ToricBinomial> G, const TermOrder& order)
      : n_(vertices), words_((vertices + 63) / 64), adj_(vertices, Bits(words_, 0)) {
    for (const auto& g : G) {
      const Monomial& lead = order.greater(g.tail, g.lead) ? g.tail : g.lead;
      if (lead.size() != 2 || lead[0] == lead[1]) fail(ErrorCode::IdentityViolation, "initial term is not squarefree quadratic");
      set(adj_[lead[0]], lead[1]);
      set(adj_[lead[1]], lead[0]);
    }
  }

  std::size_t size() const { return n_; }
  bool adjacent(std::size_t a, std::size_t b) const { return test(adj_[a], b); }

  /// Visits every independent set (as ascending vertex list) with a flag
  /// telling whether it is maximal.
  template <class Visit>
  void for_each_independent_set(Visit&& visit) const {
    std::vector<std::size_t> current;
    Bits all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) set(all, v);
    auto extend = [&](auto&& self, const Bits& allowed, std::size_t next) -> void {
      bool maximal = true;
      for (std::size_t w = 0; w < words_; ++w)
        if (allowed[w]) maximal = false;
      visit(current, maximal);
      for (std::size_t v = next; v < n_; ++v) {
        if (!test(allowed, v)) continue;
        Bits narrowed(words_);
        for (std::size_t w = 0; w < words_; ++w) narrowed[w] = allowed[w] & ~adj_[v][w];
        clear(narrowed, v);
        current.push_back(v);
        self(self, narrowed, v + 1);
        current.pop_back();
      }
    };
    extend(extend, all, 0);
  }

  /// Number of independent sets by size.
  std::vector<BigInt> face_sizes() const {
    std::vector<std::uint64_t> counts;
    for_each_independent_set([&](const std::vector<std::size_t>& s, bool) {
      if (counts.size() <= s.size()) counts.resize(s.size() + 1, 0);
      ++counts[s.size()];
    });
    return {counts.begin(), counts.end()};
  }

 private:
  using Bits = std::vector<std::uint64_t>;
  static void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
  static void clear(Bits& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  static bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }

  std::size_t n_;
  std::size_t words_;
  std::vector<Bits> adj_;
};

/// Standard monomials of degree m, from independent-set sizes:
/// sum over nonempty independent S of C(m-1, |S|-1); 1 for m = 0.
inline BigInt standard_monomial_count(std::span<const BigInt> face_sizes, int m) {
  if (m == 0) return 1;
  BigInt total = 0;
  for (std::size_t k = 1; k < face_sizes.size(); ++k) total += face_sizes[k] * binomial(m - 1, static_cast<std::int64_t>(k) - 1);
  return total;
}

inline BigInt standard_monomial_count(const InitialGraph& graph, int m) {
  const auto sizes = graph.face_sizes();
  return standard_monomial_count(sizes, m);
}

/// Integer determinant by fraction-free elimination.
inline BigInt integer_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return n == 0 ? BigInt(1) : BigInt(sign * a[n - 1][n - 1]);
}

struct Triangulation {
  std::vector<std::vector<VarId>> maximal_faces;
  bool unimodular = false;
  /// f_{-1}, f_0, ... of the faces omitting the origin.
  std::vector<BigInt> boundary_f_vector;
  IntPolynomial boundary_h;
};

/// Triangulation read off the initial ideal: faces are the independent sets
/// of the initial graph. Every maximal face must contain the origin, have
/// n + 1 vertices and determinant +-1; there must be 2^n |L(P)| of them, and
/// the boundary h-polynomial is returned for comparison with h*.
inline Triangulation triangulation_extract(const ToricRing& ring, const InitialGraph& graph) {
  const int n = ring.poset().size();
  Triangulation t;
  std::vector<std::uint64_t> boundary(n + 1, 0);
  graph.for_each_independent_set([&](const std::vector<std::size_t>& face, bool maximal) {
    const bool has_origin = !face.empty() && face.front() == ring.origin();
    if (!has_origin) {
      if (face.size() > static_cast<std::size_t>(n)) fail(ErrorCode::FaceCountMismatch, "boundary face of dimension >= n");
      ++boundary[face.size()];
    }
    if (!maximal) return;
    if (!has_origin || face.size() != static_cast<std::size_t>(n) + 1)
      fail(ErrorCode::FaceCountMismatch, "maximal face without the origin or with wrong size");
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t k = 1; k < face.size(); ++k) {
      const auto& img = ring.var(static_cast<VarId>(face[k])).image;
      rows.emplace_back(img.begin(), img.end());
    }
    const BigInt det = integer_determinant(std::move(rows));
    if (det != 1 && det != -1) fail(ErrorCode::NonUnimodularSimplex, "simplex determinant " + det.str());
    t.maximal_faces.emplace_back(face.begin(), face.end());
  });
  t.unimodular = true;
  const BigInt expected = pow_int(2, static_cast<unsigned>(n)) * BigInt(count_linear_extensions(ring.poset()));
  if (BigInt(t.maximal_faces.size()) != expected)
    fail(ErrorCode::FaceCountMismatch, std::to_string(t.maximal_faces.size()) + " maximal faces, expected " + expected.str());
  t.boundary_f_vector.assign(boundary.begin(), boundary.end());
  // h(x) = sum_k f_{k-1} x^k (1-x)^{n-k}
  for (int k = 0; k <= n; ++k) {
    IntPolynomial term = IntPolynomial::monomial(t.boundary_f_vector[k], k);
    for (int j = 0; j < n - k; ++j) term = term * IntPolynomial{BigInt(1), BigInt(-1)};
    t.boundary_h += term;
  }
  return t;
}

}  // namespace ecp
