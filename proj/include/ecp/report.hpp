#pragma once

#include "ecp/enriched_partitions.hpp"
#include "ecp/gamma_complex.hpp"
#include "ecp/guards.hpp"
#include "ecp/lattice_geometry.hpp"
#include "ecp/peaks.hpp"
#include "ecp/polynomial.hpp"
#include "ecp/poset.hpp"
#include "ecp/poset_io.hpp"
#include "ecp/toric_grobner.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ecp {

using Json = nlohmann::ordered_json;

/// Largest n accepted by the verify-all poset generator.
inline constexpr int kSweepLimit = 6;

struct RunConfig {
  std::string command;
  std::optional<std::string> poset_path;
  /// verify-all without a poset: sweep all naturally labeled posets with n <= sweep_n.
  int sweep_n = 4;
  Guards guards;
  int max_m = 4;
  int truncation = 8;
  std::string format = "json";
  /// Full Buchberger verification up to this n; above it the Hilbert-count
  /// certificate alone stands.
  int buchberger_max_n = 4;
};

struct Report {
  Json body;
  /// False when some identity failed; maps to exit code 2.
  bool identities_hold = true;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"antichains", "extensions", "ehrhart",       "hstar",   "gamma", "partitions",
                                              "peaks",      "grobner",    "triangulation", "complex", "verify-all"};
  return names;
}

namespace detail {

inline Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Json rat(const Rational& v) { return is_integer(v) ? big(to_integer(v)) : Json(v.str()); }

inline Json coeffs(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(big(c));
  if (a.empty()) a.push_back(0);
  return a;
}

inline Json coeffs(const RatPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rat(c));
  if (a.empty()) a.push_back(0);
  return a;
}

inline Json bigs(std::span<const BigInt> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

/// gamma without trailing zeros (at least one entry).
inline Json gamma_json(std::vector<BigInt> gamma) {
  while (gamma.size() > 1 && gamma.back() == 0) gamma.pop_back();
  return bigs(gamma);
}

inline std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

inline Json poset_json(const Poset& p) {
  Json covers = Json::array();
  for (auto [a, b] : p.cover_relations()) covers.push_back({a, b});
  return Json{{"n", p.size()}, {"covers", covers}};
}

inline std::string poset_label(const Poset& p) {
  std::string s = std::to_string(p.size()) + ":";
  bool first = true;
  for (auto [a, b] : p.cover_relations()) {
    s += (first ? "" : ",") + std::to_string(a) + "<" + std::to_string(b);
    first = false;
  }
  return s;
}

}  // namespace detail

/// Reports for single-poset commands. The input is relabeled naturally
/// first when needed; every quantity reported is invariant under that.
inline Report run_command(const RunConfig& cfg, const PosetInput& input) {
  const Guards& g = cfg.guards;
  Poset p = input.poset;
  require_n(p.size(), g, cfg.command.c_str());
  Report r;
  r.body["poset"] = detail::poset_json(p);
  if (input.relabeling) {
    r.body["relabeling"] = *input.relabeling;
    p = p.relabeled(relabeling_from_extension(*input.relabeling));
  }
  const int n = p.size();
  Json& out = r.body;

  if (cfg.command == "antichains") {
    Json list = Json::array();
    for (const auto& a : antichains(p)) list.push_back(a.elements());
    out["count"] = list.size();
    out["antichains"] = list;
  } else if (cfg.command == "extensions") {
    const auto ext = linear_extensions(p, g.max_extensions_n);
    out["count"] = ext.size();
    out["extensions"] = ext;
  } else if (cfg.command == "ehrhart") {
    const EhrhartData d = hstar_and_gamma(p, g);
    out["L"] = detail::coeffs(d.L);
    out["hstar"] = detail::coeffs(d.hstar);
    out["gamma"] = detail::gamma_json(d.gamma);
    out["volume"] = detail::big(d.volume);
    const auto counts = dilation_counts(p, std::max(cfg.max_m, n), g);
    out["counts"] = detail::bigs(counts);
  } else if (cfg.command == "hstar") {
    const auto vr = volume_and_reflexivity(p, g);
    const auto counts = dilation_counts(p, n, g);
    const IntPolynomial h = hstar_from_counts(counts, n);
    const auto props = polynomial_properties(h, n);
    out["hstar"] = detail::coeffs(h);
    out["volume"] = detail::big(vr.volume);
    out["reflexive"] = vr.reflexive;
    out["unimodal"] = props.unimodal;
    out["log_concave"] = props.log_concave;
    out["real_roots"] = props.real_root_count;
    out["real_rooted"] = props.real_root_count == h.degree();
    out["gamma_positive"] = props.gamma_positive;
  } else if (cfg.command == "gamma") {
    const EhrhartData d = hstar_and_gamma(p, g);
    out["gamma"] = detail::gamma_json(d.gamma);
    out["W_left"] = detail::coeffs(peak_polynomials(p, g).W_left);
    out["identity"] = "pass";
  } else if (cfg.command == "partitions") {
    Json left = Json::array(), enriched = Json::array(), lattice = Json::array();
    bool equal = true;
    for (int m = 1; m <= cfg.max_m; ++m) {
      const BigInt l = count_partitions(p, m, PartitionKind::Left, g);
      const BigInt c = count_dilation(p, m, g);
      equal = equal && l == c;
      left.push_back(detail::big(l));
      enriched.push_back(detail::big(count_partitions(p, m, PartitionKind::Enriched, g)));
      lattice.push_back(detail::big(c));
    }
    out["m"] = cfg.max_m;
    out["left_enriched_counts"] = left;
    out["enriched_counts"] = enriched;
    out["lattice_counts"] = lattice;
    out["equality"] = detail::verdict(equal);
    const OmegaRelation rel = omega_relation_check(p, g);
    out["omega_left"] = detail::coeffs(rel.left);
    out["omega_enriched"] = detail::coeffs(rel.enriched);
    out["omega_half_difference"] = detail::coeffs(rel.half_difference);
    out["omega_relation"] = rel.holds ? "holds" : "fails";
    out["omega_half_sum"] = rel.half_sum_holds ? "holds" : "fails";
    const SeriesCheck s = series_identity_check(p, cfg.truncation, g);
    out["series"] = Json{{"truncation", cfg.truncation}, {"lhs", detail::bigs(s.lhs)}, {"rhs", detail::bigs(s.rhs)}, {"verdict", detail::verdict(s.holds)}};
    r.identities_hold = equal && s.holds;
  } else if (cfg.command == "peaks") {
    const PeakPolynomials w = peak_polynomials(p, g);
    const bool narrow = poset_predicates(p).narrow;
    out["linear_extensions"] = count_linear_extensions(p);
    out["W"] = detail::coeffs(w.W);
    out["W_left"] = detail::coeffs(w.W_left);
    out["W_des"] = detail::coeffs(w.W_des);
    out["narrow"] = narrow;
    if (narrow) {
      out["narrow_identity"] = detail::verdict(w.W_left == w.W_des);
      r.identities_hold = w.W_left == w.W_des;
    } else {
      out["narrow_identity"] = "n/a";
    }
  } else if (cfg.command == "grobner") {
    const ToricRing ring(p);
    const auto G = generate_groebner_candidates(ring);
    const OrderConstruction oc = construct_order(ring);
    const bool leads_first = leads_are_first(G, oc.order);
    std::size_t fam1 = 0;
    bool squarefree = true;
    for (const auto& b : G) {
      fam1 += b.family == 1;
      squarefree = squarefree && lead_is_squarefree_quadratic(b, ring.origin());
    }
    out["variables"] = ring.size();
    out["groebner_basis_size"] = G.size();
    out["family_1"] = fam1;
    out["family_2"] = G.size() - fam1;
    out["lp_constraints"] = oc.constraint_count;
    Json weights = Json::array();
    const auto acs = antichains(p);
    for (std::size_t k = 0; k < acs.size(); ++k)
      weights.push_back(Json{{"antichain", acs[k].elements()}, {"w", detail::rat(oc.antichain_weight[k])}});
    out["weights"] = weights;
    out["leads_first"] = leads_first;
    out["leads_squarefree_quadratic"] = squarefree;
    bool ok = leads_first && squarefree;
    if (p.size() > cfg.buchberger_max_n) {
      out["buchberger"] = "skipped";
      out["skip_reason"] = "n > " + std::to_string(cfg.buchberger_max_n) + ": Hilbert-count certificate only";
    } else {
      try {
        const BuchbergerResult br = buchberger_verify(G, oc.order, g);
        out["buchberger"] = detail::verdict(br.is_groebner_basis);
        out["spairs_checked"] = br.spairs_checked;
        ok = ok && br.is_groebner_basis;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SizeLimit) throw;
        out["buchberger"] = "skipped";
        out["skip_reason"] = e.what();
      }
    }
    const InitialGraph graph(ring.size(), G, oc.order);
    const auto sizes = graph.face_sizes();
    Json checks = Json::array();
    for (int m = 0; m <= cfg.max_m; ++m) {
      const BigInt s = standard_monomial_count(sizes, m), l = count_dilation(p, m, g);
      ok = ok && s == l;
      checks.push_back(Json{{"m", m}, {"standard", detail::big(s)}, {"L", detail::big(l)}, {"match", s == l}});
    }
    out["hilbert_checks"] = checks;
    r.identities_hold = ok;
  } else if (cfg.command == "triangulation") {
    const ToricRing ring(p);
    const auto G = generate_groebner_candidates(ring);
    const OrderConstruction oc = construct_order(ring);
    const InitialGraph graph(ring.size(), G, oc.order);
    const Triangulation t = triangulation_extract(ring, graph);
    const IntPolynomial h = hstar_from_counts(dilation_counts(p, n, g), n);
    out["maximal_faces"] = t.maximal_faces.size();
    out["unimodular"] = t.unimodular;
    out["boundary_f"] = detail::bigs(t.boundary_f_vector);
    out["boundary_h"] = detail::coeffs(t.boundary_h);
    out["hstar"] = detail::coeffs(h);
    out["boundary_h_equals_hstar"] = detail::verdict(t.boundary_h == h);
    r.identities_hold = t.boundary_h == h;
  } else if (cfg.command == "complex") {
    const GammaComplex c = build_complex(p, g);
    const auto f = c.f_vector();
    const bool kk = kruskal_katona_check(f);
    out["vertices"] = c.vertices.size();
    out["f"] = detail::bigs(f);
    out["identity"] = "pass";
    out["kruskal_katona"] = detail::verdict(kk);
    if (n <= 4) {
      const bool iso = iso_check(p, g).holds();
      out["phi_isomorphism"] = detail::verdict(iso);
      r.identities_hold = iso;
    } else {
      out["phi_isomorphism"] = "skipped";
    }
    r.identities_hold = r.identities_hold && kk;
  } else {
    throw std::invalid_argument("unknown command " + cfg.command);
  }
  return r;
}

namespace detail {

struct RowResult {
  std::string value;
  bool failed = false;
};

/// Runs one check; alarms become failures, guard hits become "skipped".
inline RowResult run_check(const std::function<bool()>& check) {
  try {
    const bool ok = check();
    return {verdict(ok), !ok};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SizeLimit) return {"skipped", false};
    return {std::string(e.alarm() ? "alarm " : "error ") + e.what(), true};
  }
}

}  // namespace detail

/// Verdict row for one naturally labeled poset.
inline Report verify_poset(const Poset& p, const RunConfig& cfg) {
  const Guards& g = cfg.guards;
  const int n = p.size();
  Report r;
  Json& row = r.body;
  row["poset"] = detail::poset_label(p);
  row["n"] = n;
  auto put = [&](const char* key, const std::function<bool()>& check) {
    const auto res = detail::run_check(check);
    row[key] = res.value;
    if (res.failed) r.identities_hold = false;
  };

  put("ehrhart_equals_partitions", [&] {
    for (int m = 0; m <= cfg.max_m; ++m) {
      const BigInt c = count_dilation(p, m, g);
      const BigInt l = m == 0 ? BigInt(1) : count_partitions(p, m, PartitionKind::Left, g);
      if (c != l) return false;
    }
    return true;
  });
  put("gamma_identity", [&] {
    hstar_and_gamma(p, g);
    return true;
  });
  put("volume", [&] {
    volume_and_reflexivity(p, g);
    return true;
  });
  put("series", [&] { return series_identity_check(p, cfg.truncation, g).holds; });

  std::optional<ToricRing> ring;
  std::vector<ToricBinomial> G;
  std::optional<OrderConstruction> oc;
  put("groebner", [&] {
    ring.emplace(p);
    G = generate_groebner_candidates(*ring);
    oc = construct_order(*ring);
    bool ok = leads_are_first(G, oc->order);
    for (const auto& b : G) ok = ok && lead_is_squarefree_quadratic(b, ring->origin());
    const InitialGraph graph(ring->size(), G, oc->order);
    const auto sizes = graph.face_sizes();
    for (int m = 0; m <= std::min(cfg.max_m, 3); ++m) ok = ok && standard_monomial_count(sizes, m) == count_dilation(p, m, g);
    return ok && (n > cfg.buchberger_max_n || buchberger_verify(G, oc->order, g).is_groebner_basis);
  });
  row["groebner_tier"] = n > cfg.buchberger_max_n ? "hilbert" : "buchberger";
  put("triangulation", [&] {
    if (!oc) {
      ring.emplace(p);
      G = generate_groebner_candidates(*ring);
      oc = construct_order(*ring);
    }
    const InitialGraph graph(ring->size(), G, oc->order);
    const Triangulation t = triangulation_extract(*ring, graph);
    return t.boundary_h == hstar_from_counts(dilation_counts(p, n, g), n);
  });

  std::optional<GammaComplex> complex;
  put("complex", [&] {
    complex = build_complex(p, g);
    return true;
  });
  put("kruskal_katona", [&] {
    if (!complex) fail(ErrorCode::SizeLimit, "no complex");
    return kruskal_katona_check(complex->f_vector());
  });

  try {
    const OmegaRelation rel = omega_relation_check(p, g);
    row["omega_relation"] = rel.holds ? "holds" : "fails";
    row["omega_half_sum"] = rel.half_sum_holds ? "holds" : "fails";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeLimit) throw;
    row["omega_relation"] = "skipped";
    row["omega_half_sum"] = "skipped";
  }

  if (poset_predicates(p).narrow) {
    put("narrow", [&] {
      const auto w = peak_polynomials(p, g);
      return w.W_left == w.W_des;
    });
  } else {
    row["narrow"] = "n/a";
  }
  return r;
}

/// verify-all: one poset from a file, or all naturally labeled posets with
/// 1 <= n <= sweep_n.
inline Report verify_all(const RunConfig& cfg, const std::optional<PosetInput>& input) {
  std::vector<Poset> posets;
  if (input) {
    Poset p = input->poset;
    if (input->relabeling) p = p.relabeled(relabeling_from_extension(*input->relabeling));
    require_n(p.size(), cfg.guards, "verify-all");
    posets.push_back(p);
  } else {
    if (cfg.sweep_n > kSweepLimit || cfg.sweep_n > cfg.guards.max_n)
      fail(ErrorCode::GuardExceeded, "verify-all: --max-n " + std::to_string(cfg.sweep_n) + " exceeds the generator limit " +
                                         std::to_string(std::min(kSweepLimit, cfg.guards.max_n)));
    for (int n = 1; n <= cfg.sweep_n; ++n)
      for (auto& p : naturally_labeled_posets(n)) posets.push_back(std::move(p));
  }
  Report r;
  Json rows = Json::array();
  std::size_t failures = 0;
  for (const auto& p : posets) {
    Report row = verify_poset(p, cfg);
    if (!row.identities_hold) {
      ++failures;
      r.identities_hold = false;
    }
    rows.push_back(std::move(row.body));
  }
  r.body["posets"] = posets.size();
  r.body["failures"] = failures;
  r.body["rows"] = rows;
  return r;
}

}  // namespace ecp
