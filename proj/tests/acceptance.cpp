// One PASS/FAIL line per acceptance criterion. Every comparison is exact
// (integer or rational equality), so the pinned tolerance is zero throughout.

#include "ecp/enriched_partitions.hpp"
#include "ecp/gamma_complex.hpp"
#include "ecp/lattice_geometry.hpp"
#include "ecp/peaks.hpp"
#include "ecp/poset.hpp"
#include "ecp/toric_grobner.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

using namespace ecp;

namespace {

constexpr int kTolerance = 0;  // exact arithmetic; no numeric slack anywhere

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string join(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string one_line(const Poset& p) {
  std::string s = "n=" + std::to_string(p.size());
  for (const auto& [a, b] : p.cover_relations()) s += " " + std::to_string(a) + "<" + std::to_string(b);
  return s;
}

// Points of m E_P by scanning the box [-m, m]^n against the chain inequalities.
std::vector<LatticePoint> dilated_points(const Poset& p, int m) {
  const auto chains = maximal_chains(p);
  const int n = p.size();
  std::vector<LatticePoint> out;
  LatticePoint x(n, -m);
  for (;;) {
    if (in_dilated_enriched_polytope(chains, x, m)) out.push_back(x);
    int i = 0;
    while (i < n && x[i] == m) x[i++] = -m;
    if (i == n) break;
    ++x[i];
  }
  return out;
}

// Brute-force type-B descents: sigma_0 = 0, sigma_i = eps_i w_i.
IntPolynomial type_b_eulerian(int n) {
  std::vector<BigInt> coeffs(n + 1, 0);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      int prev = 0, des = 0;
      for (int i = 0; i < n; ++i) {
        const int s = (signs >> i) & 1u ? -w[i] : w[i];
        des += prev > s;
        prev = s;
      }
      coeffs[des] += 1;
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return IntPolynomial(std::move(coeffs));
}

Outcome criterion_1() {
  std::size_t checks = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : naturally_labeled_posets(n))
      for (int m = 1; m <= 4; ++m) {
        const BigInt lattice = count_dilation(p, m), partitions = count_partitions(p, m, PartitionKind::Left);
        if (lattice != partitions)
          return {false, one_line(p) + " m=" + std::to_string(m) + ": " + lattice.str() + " points vs " + partitions.str() + " partitions"};
        ++checks;
      }
  return {true, std::to_string(checks) + " (poset, m) pairs, n<=5, m<=4"};
}

Outcome criterion_2() {
  std::size_t checks = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : naturally_labeled_posets(n))
      for (int m = 1; m <= 3; ++m) {
        for (const auto& f : enumerate_partitions(p, m, PartitionKind::Left)) {
          const LatticePoint x = phi_map(p, f);
          const PartitionMap back = psi_map(p, x, m);
          if (back != f) return {false, one_line(p) + ": psi(phi(f)) != f"};
          for (int i = 0; i < n; ++i) {
            if ((f.values[i] >= 0) != (x[i] >= 0)) return {false, one_line(p) + ": phi changes a sign"};
            if (std::abs(back.values[i]) != std::abs(f.values[i])) return {false, one_line(p) + ": |psi(phi(f))| != |f|"};
          }
          ++checks;
        }
        for (const auto& x : dilated_points(p, m)) {
          if (phi_map(p, psi_map(p, x, m)) != x) return {false, one_line(p) + ": phi(psi(x)) != x"};
          ++checks;
        }
      }
  return {true, std::to_string(checks) + " round trips in both directions, n<=4, m<=3"};
}

Outcome criterion_3() {
  std::size_t posets = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : naturally_labeled_posets(n)) {
      const auto counts = dilation_counts(p, n);
      const IntPolynomial hstar = hstar_from_counts(counts, n);
      const auto gamma = gamma_expansion(hstar, n);
      const IntPolynomial w_left = peak_polynomials(p).W_left;
      for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] < 0) return {false, one_line(p) + ": gamma_" + std::to_string(i) + " < 0"};
        const BigInt expected = pow_int(4, static_cast<unsigned>(i)) * w_left.coeff(i);
        if (gamma[i] - expected > kTolerance || expected - gamma[i] > kTolerance)
          return {false, one_line(p) + ": gamma " + join(gamma) + " vs 4^i w_i"};
      }
      ++posets;
    }
  return {true, std::to_string(posets) + " naturally labeled posets, n<=6"};
}

Outcome criterion_4() {
  std::size_t posets = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : naturally_labeled_posets(n)) {
      const BigInt volume = hstar_from_counts(dilation_counts(p, n), n).evaluate(BigInt(1));
      const BigInt expected = pow_int(2, static_cast<unsigned>(n)) * BigInt(count_linear_extensions(p));
      if (volume != expected) return {false, one_line(p) + ": h*(1) = " + volume.str() + " vs " + expected.str()};
      ++posets;
    }
  return {true, std::to_string(posets) + " naturally labeled posets, n<=6"};
}

Outcome criterion_5() {
  std::string detail;
  for (int n = 1; n <= 5; ++n) {
    const IntPolynomial hstar = hstar_from_counts(dilation_counts(antichain_poset(n), n), n);
    const IntPolynomial oracle = type_b_eulerian(n);
    if (hstar != oracle) return {false, "n=" + std::to_string(n) + ": " + hstar.to_string() + " vs " + oracle.to_string()};
    if (n == 2 || n == 3) detail += "B_" + std::to_string(n) + " = " + hstar.to_string() + "; ";
  }
  return {true, detail + "n<=5"};
}

Outcome criterion_6() {
  std::size_t verified = 0, hilbert = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : naturally_labeled_posets(n)) {
      const ToricRing ring(p);
      const auto G = generate_groebner_candidates(ring);
      const auto oc = construct_order(ring);
      if (!leads_are_first(G, oc.order)) return {false, one_line(p) + ": weight order does not select the leads"};
      for (const auto& g : G)
        if (!lead_is_squarefree_quadratic(g, ring.origin())) return {false, one_line(p) + ": lead " + ring.name(g.lead)};
      if (n <= 4) {
        const auto r = buchberger_verify(G, oc.order);
        if (!r.is_groebner_basis) return {false, one_line(p) + ": an S-pair does not reduce to zero"};
        ++verified;
      }
      const InitialGraph graph(ring.size(), G, oc.order);
      for (int m = 0; m <= 3; ++m)
        if (standard_monomial_count(graph, m) != count_dilation(p, m))
          return {false, one_line(p) + ": Hilbert count differs at m=" + std::to_string(m)};
      ++hilbert;
    }
  return {true, std::to_string(verified) + " Buchberger runs (n<=4), " + std::to_string(hilbert) + " Hilbert certificates (n<=5, m<=3)"};
}

Outcome criterion_7() {
  std::size_t posets = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : naturally_labeled_posets(n)) {
      const ToricRing ring(p);
      const auto G = generate_groebner_candidates(ring);
      const auto oc = construct_order(ring);
      const auto t = triangulation_extract(ring, InitialGraph(ring.size(), G, oc.order));
      const BigInt expected = pow_int(2, static_cast<unsigned>(n)) * BigInt(count_linear_extensions(p));
      if (!t.unimodular) return {false, one_line(p) + ": non-unimodular simplex"};
      if (BigInt(t.maximal_faces.size()) != expected) return {false, one_line(p) + ": face count"};
      for (const auto& face : t.maximal_faces)
        if (face.size() != static_cast<std::size_t>(n) + 1 || face.front() != ring.origin())
          return {false, one_line(p) + ": maximal face without the origin or of wrong size"};
      if (t.boundary_h != hstar_from_counts(dilation_counts(p, n), n)) return {false, one_line(p) + ": boundary h != h*"};
      ++posets;
    }
  return {true, std::to_string(posets) + " posets, n<=4"};
}

Outcome criterion_8() {
  std::size_t posets = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : naturally_labeled_posets(n)) {
      GammaComplex c;
      try {
        c = build_complex(p);
      } catch (const Error& e) {
        return {false, one_line(p) + ": " + e.what()};
      }
      if (c.f_polynomial != peak_polynomials(p).W_left.scale_argument(BigInt(4))) return {false, one_line(p) + ": f != W_left(4x)"};
      if (!kruskal_katona_check(c.f_vector())) return {false, one_line(p) + ": Kruskal-Katona fails for " + join(c.f_vector())};
      ++posets;
    }
  const auto f4 = build_complex(antichain_poset(4)).f_vector();
  if (f4 != std::vector<BigInt>{1, 72, 80}) return {false, "4-antichain f = " + join(f4)};
  return {true, std::to_string(posets) + " posets, n<=5; 4-antichain f = " + join(f4)};
}

Outcome criterion_9() {
  std::size_t posets = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : naturally_labeled_posets(n)) {
      const auto s = series_identity_check(p, 8);
      if (!s.holds) return {false, one_line(p) + ": series " + join(s.lhs) + " vs " + join(s.rhs)};
      ++posets;
    }
  return {true, std::to_string(posets) + " posets, n<=5, truncation 8"};
}

// Labeled posets on [n] are grouped by labeled comparability graph; each is
// evaluated on its natural relabeling and the outputs compared within groups.
Outcome criterion_10() {
  struct Data {
    RatPolynomial L;
    IntPolynomial hstar, W, W_left;
  };
  std::map<Poset, Data> cache;
  auto data_of = [&](const Poset& natural) -> const Data& {
    auto it = cache.find(natural);
    if (it != cache.end()) return it->second;
    const int n = natural.size();
    const auto counts = dilation_counts(natural, n);
    const auto peaks = peak_polynomials(natural);
    return cache.emplace(natural, Data{interpolate(counts, 0), hstar_from_counts(counts, n), peaks.W, peaks.W_left}).first->second;
  };
  std::size_t groups = 0, pairs = 0;
  std::map<std::string, std::size_t> mismatches;
  std::string example;
  for (int n = 1; n <= 5; ++n) {
    std::map<std::vector<std::pair<int, int>>, std::vector<Poset>> by_graph;
    for (const auto& p : all_labeled_posets(n)) by_graph[poset_predicates(p).comparability_edges].push_back(canonicalize(p));
    for (const auto& [graph, members] : by_graph) {
      ++groups;
      const Data& first = data_of(members.front());
      for (std::size_t k = 1; k < members.size(); ++k) {
        const Data& other = data_of(members[k]);
        ++pairs;
        auto note = [&](const std::string& what, const std::string& a, const std::string& b) {
          if (mismatches[what]++ == 0 && example.empty())
            example = what + " differs: [" + one_line(members.front()) + "] " + a + " vs [" + one_line(members[k]) + "] " + b;
        };
        if (first.L != other.L) note("Ehrhart", first.L.to_string('m'), other.L.to_string('m'));
        if (first.hstar != other.hstar) note("h*", first.hstar.to_string(), other.hstar.to_string());
        if (first.W != other.W) note("W", first.W.to_string(), other.W.to_string());
        if (first.W_left != other.W_left) note("W_left", first.W_left.to_string(), other.W_left.to_string());
      }
    }
  }
  std::ostringstream s;
  s << groups << " comparability graphs, " << pairs << " pairs, n<=5";
  if (mismatches.empty()) return {true, s.str()};
  s << "; mismatching pairs:";
  for (const auto& [what, count] : mismatches) s << " " << what << "=" << count;
  s << "; " << example;
  return {false, s.str()};
}

Outcome criterion_11() {
  std::size_t narrow = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : naturally_labeled_posets(n)) {
      if (!poset_predicates(p).narrow) continue;
      const auto peaks = peak_polynomials(p);
      if (peaks.W_left != peaks.W_des) return {false, one_line(p) + ": W_left = " + peaks.W_left.to_string() + ", W_des = " + peaks.W_des.to_string()};
      ++narrow;
    }
  return {true, std::to_string(narrow) + " narrow posets, n<=6"};
}

Outcome criterion_12() {
  const auto point = omega_relation_check(antichain_poset(1));
  const bool measured = point.enriched == RatPolynomial{0, 2} && point.left == RatPolynomial{1, 2};
  std::size_t holds = 0, half_sum = 0, total = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : naturally_labeled_posets(n)) {
      const auto r = omega_relation_check(p);
      holds += r.holds;
      half_sum += r.half_sum_holds;
      ++total;
    }
  std::ostringstream s;
  s << "1-element poset: Omega' = " << point.enriched.to_string('m') << ", Omega_left = " << point.left.to_string('m')
    << ", (Omega'(m+1) - Omega'(m))/2 = " << point.half_difference.to_string('m') << ", relation "
    << (point.holds ? "holds" : "does not hold") << "; over " << total << " posets n<=4 the relation holds for " << holds
    << " and the half-sum variant for " << half_sum;
  return {measured, s.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"left enriched partitions count lattice points of m E_P", criterion_1},
      {"phi/psi bijection round trips", criterion_2},
      {"gamma_i = 4^i [x^i] W_left, gamma >= 0", criterion_3},
      {"h*(1) = 2^n |L(P)|", criterion_4},
      {"antichain h* = type-B Eulerian polynomial", criterion_5},
      {"squarefree quadratic Groebner basis", criterion_6},
      {"unimodular flag triangulation with boundary h = h*", criterion_7},
      {"f(Gamma(S_P)) = W_left(4x)", criterion_8},
      {"left enriched order series identity", criterion_9},
      {"invariance under labeled comparability graph", criterion_10},
      {"narrow posets: W_left = W_des", criterion_11},
      {"Omega_left / Omega' relation measured and reported", criterion_12},
  };
  // Criteria whose red verdict is a measured finding documented in the README.
  const std::set<int> documented_red{10};

  int failures = 0, unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(1);
    t << std::fixed << seconds;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << criteria[k].first << "  [tolerance "
              << kTolerance << ", " << t.str() << "s]  " << o.detail << std::endl;
    if (!o.pass) {
      ++failures;
      if (!documented_red.count(id)) ++unexpected;
    }
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria pass";
  if (failures > unexpected) std::cout << "; " << failures - unexpected << " documented red";
  std::cout << std::endl;
  return unexpected == 0 ? 0 : 1;
}
