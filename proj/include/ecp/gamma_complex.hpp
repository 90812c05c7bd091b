#pragma once

#include "ecp/guards.hpp"
#include "ecp/peaks.hpp"
#include "ecp/polynomial.hpp"
#include "ecp/poset.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecp {

struct Bar {
  int position = 0;  // bar sits after letter `position` (1-based)
  int color = 0;     // 0..3
  friend auto operator<=>(const Bar&, const Bar&) = default;
};

/// Permutation with a colored bar after each left peak.
struct DecoratedPermutation {
  Permutation perm;
  std::vector<Bar> bars;

  int bar_count() const { return static_cast<int>(bars.size()); }
  friend auto operator<=>(const DecoratedPermutation&, const DecoratedPermutation&) = default;

  /// Letters between consecutive bars.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out;
    int start = 0;
    for (const Bar& b : bars) {
      out.emplace_back(perm.begin() + start, perm.begin() + b.position);
      start = b.position;
    }
    out.emplace_back(perm.begin() + start, perm.end());
    return out;
  }

  /// e.g. "3|^2 24|^1 157|^0 689"
  std::string to_string() const {
    std::string s;
    std::size_t next = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      s += std::to_string(perm[i]);
      if (next < bars.size() && bars[next].position == static_cast<int>(i) + 1) {
        s += "|^" + std::to_string(bars[next].color) + ' ';
        ++next;
      }
    }
    return s;
  }

  /// Inverse of to_string; letters are single digits.
  static DecoratedPermutation parse(std::string_view text) {
    DecoratedPermutation d;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c == ' ') continue;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        d.perm.push_back(c - '0');
      } else if (c == '|' && i + 2 < text.size() && text[i + 1] == '^' && std::isdigit(static_cast<unsigned char>(text[i + 2]))) {
        d.bars.push_back({static_cast<int>(d.perm.size()), text[i + 2] - '0'});
        i += 2;
      } else {
        fail(ErrorCode::ParseError, "bad decorated permutation: " + std::string(text));
      }
    }
    return d;
  }
};

inline bool is_permutation(std::span<const int> w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

/// Bars exactly at the left peaks, sorted, colors in 0..3.
inline bool is_decorated_permutation(const DecoratedPermutation& d) {
  if (!is_permutation(d.perm)) return false;
  const auto peaks = left_peak_positions(d.perm);
  if (peaks.size() != d.bars.size()) return false;
  for (std::size_t k = 0; k < peaks.size(); ++k)
    if (d.bars[k].position != peaks[k] || d.bars[k].color < 0 || d.bars[k].color > 3) return false;
  return true;
}

/// Decreasing part and increasing part of a block. The first block rises
/// from the virtual letter 0, so its decreasing part is empty.
struct Block {
  std::vector<int> word;
  std::vector<int> grave;
  std::vector<int> acute;
};

inline Block split_block(std::span<const int> word, bool first) {
  Block b{{word.begin(), word.end()}, {}, {}};
  std::size_t k = 0;
  if (!first && !word.empty()) {
    k = 1;
    while (k < word.size() && word[k] < word[k - 1]) ++k;
  }
  b.grave.assign(word.begin(), word.begin() + k);
  b.acute.assign(word.begin() + k, word.end());
  if (!std::is_sorted(b.acute.begin(), b.acute.end()) || std::adjacent_find(b.acute.begin(), b.acute.end()) != b.acute.end())
    fail(ErrorCode::MalformedResult, "block without decreasing-then-increasing shape");
  return b;
}

/// All 4^{pk_left(w)} decorations of w.
inline std::vector<DecoratedPermutation> decorate(const Permutation& w) {
  const auto peaks = left_peak_positions(w);
  std::vector<DecoratedPermutation> out;
  const std::size_t total = std::size_t{1} << (2 * peaks.size());
  for (std::size_t code = 0; code < total; ++code) {
    DecoratedPermutation d{w, {}};
    for (std::size_t k = 0; k < peaks.size(); ++k)
      d.bars.push_back({peaks[k], static_cast<int>((code >> (2 * (peaks.size() - 1 - k))) & 3u)});
    out.push_back(std::move(d));
  }
  return out;
}

/// Removes bar i (1-based): w_i w_{i+1} becomes grave(w_i) sort(acute(w_i) w_{i+1}).
inline DecoratedPermutation cover_reduce(const DecoratedPermutation& d, int i) {
  if (i < 1 || i > d.bar_count()) throw std::out_of_range("cover_reduce: bar index");
  const auto blocks = d.blocks();
  const Block left = split_block(blocks[i - 1], i == 1);
  std::vector<int> merged = left.acute;
  merged.insert(merged.end(), blocks[i].begin(), blocks[i].end());
  std::sort(merged.begin(), merged.end());

  DecoratedPermutation out;
  for (int k = 0; k < i - 1; ++k) out.perm.insert(out.perm.end(), blocks[k].begin(), blocks[k].end());
  out.perm.insert(out.perm.end(), left.grave.begin(), left.grave.end());
  out.perm.insert(out.perm.end(), merged.begin(), merged.end());
  for (std::size_t k = i + 1; k < blocks.size(); ++k) out.perm.insert(out.perm.end(), blocks[k].begin(), blocks[k].end());
  for (int k = 0; k < d.bar_count(); ++k)
    if (k != i - 1) out.bars.push_back(d.bars[k]);
  if (!is_decorated_permutation(out)) fail(ErrorCode::MalformedResult, "removing a bar of " + d.to_string() + " gives " + out.to_string());
  return out;
}

/// Adjacency of one-bar decorated permutations u = u1 |^c u2, v = v1 |^d v2
/// with |u1| < |v1|: for a split u2 = grave(u2) acute(u2) into a nonempty
/// decreasing and an increasing word, the composite
/// u1 |^c grave(u2) sort(acute(u2) cap v1) |^d v2 must be a decorated
/// permutation with bars at those two positions whose middle block has
/// decreasing part exactly grave(u2). A block such as 214 splits as 2.14 or
/// 21.4, and any split meeting this counts.
inline bool vertex_adjacent(const DecoratedPermutation& a, const DecoratedPermutation& b) {
  if (a.bar_count() != 1 || b.bar_count() != 1) throw std::invalid_argument("vertex must carry exactly one bar");
  const DecoratedPermutation* u = &a;
  const DecoratedPermutation* v = &b;
  if (u->bars[0].position == v->bars[0].position) return false;
  if (u->bars[0].position > v->bars[0].position) std::swap(u, v);
  const auto cut_u = u->perm.begin() + u->bars[0].position;
  const auto cut_v = v->perm.begin() + v->bars[0].position;
  std::vector<int> v1(v->perm.begin(), cut_v);
  std::sort(v1.begin(), v1.end());

  for (auto split = cut_u + 1; split <= u->perm.end(); ++split) {
    if (split - cut_u >= 2 && *(split - 1) > *(split - 2)) break;  // grave must decrease
    if (!std::is_sorted(split, u->perm.end())) continue;
    DecoratedPermutation w;
    w.perm.assign(u->perm.begin(), split);
    std::vector<int> middle;
    for (auto it = split; it != u->perm.end(); ++it)
      if (std::binary_search(v1.begin(), v1.end(), *it)) middle.push_back(*it);
    w.perm.insert(w.perm.end(), middle.begin(), middle.end());
    w.bars = {{u->bars[0].position, u->bars[0].color}, {static_cast<int>(w.perm.size()), v->bars[0].color}};
    w.perm.insert(w.perm.end(), cut_v, v->perm.end());
    if (w.perm.size() != a.perm.size() || !is_decorated_permutation(w)) continue;
    // the middle block must decrease exactly through grave(u2)
    if (!middle.empty() && middle.front() < *(split - 1)) continue;
    return true;
  }
  return false;
}

/// phi(d) = { a_i |^{c_i} grave(w_{i+1}) b_i }: a_i and b_i are the letters
/// left and right of grave(w_{i+1}), each written in increasing order.
inline std::vector<DecoratedPermutation> phi_face_map(const DecoratedPermutation& d) {
  const auto blocks = d.blocks();
  std::vector<DecoratedPermutation> out;
  for (int i = 1; i <= d.bar_count(); ++i) {
    const Block next = split_block(blocks[i], false);
    const auto start = d.perm.begin() + d.bars[i - 1].position;
    std::vector<int> left(d.perm.begin(), start);
    std::vector<int> right(start + static_cast<std::ptrdiff_t>(next.grave.size()), d.perm.end());
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    DecoratedPermutation v;
    v.perm = left;
    v.bars.push_back({static_cast<int>(left.size()), d.bars[i - 1].color});
    v.perm.insert(v.perm.end(), next.grave.begin(), next.grave.end());
    v.perm.insert(v.perm.end(), right.begin(), right.end());
    out.push_back(std::move(v));
  }
  return out;
}

/// S_P: all decorations of the linear extensions.
inline std::vector<DecoratedPermutation> decorated_extensions(const Poset& p, const Guards& g = {}) {
  std::vector<DecoratedPermutation> out;
  for (const auto& w : linear_extensions(p, g.max_extensions_n))
    for (auto& d : decorate(w)) out.push_back(std::move(d));
  std::sort(out.begin(), out.end());
  return out;
}

struct GammaComplex {
  std::vector<DecoratedPermutation> vertices;          // sorted
  std::vector<std::vector<bool>> adjacency;
  std::vector<std::vector<int>> faces;                 // cliques as sorted vertex indices, empty face first
  IntPolynomial f_polynomial;                          // sum over faces of x^{|F|}

  int index_of(const DecoratedPermutation& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    return it != vertices.end() && *it == v ? static_cast<int>(it - vertices.begin()) : -1;
  }

  std::vector<BigInt> f_vector() const { return {f_polynomial.coeffs().begin(), f_polynomial.coeffs().end()}; }
};

/// Flag complex on the one-bar decorated linear extensions. Cliques are
/// searched one level past floor(n/2) so an oversized face is detected; the
/// f-polynomial is asserted equal to W^(l)_P(4x).
inline GammaComplex build_complex(const Poset& p, const Guards& g = {}) {
  const int n = p.size();
  if (n > g.max_complex_n)
    fail(ErrorCode::SizeLimit, "build_complex: n = " + std::to_string(n) + " exceeds max_complex_n = " + std::to_string(g.max_complex_n));
  if (!p.naturally_labeled()) fail(ErrorCode::NotNaturallyLabeled, "relabel along a linear extension first");
  GammaComplex c;
  for (auto& d : decorated_extensions(p, g))
    if (d.bar_count() == 1) c.vertices.push_back(std::move(d));
  const std::size_t nv = c.vertices.size();
  c.adjacency.assign(nv, std::vector<bool>(nv, false));
  for (std::size_t a = 0; a < nv; ++a)
    for (std::size_t b = a + 1; b < nv; ++b)
      c.adjacency[a][b] = c.adjacency[b][a] = vertex_adjacent(c.vertices[a], c.vertices[b]);

  const std::size_t depth = static_cast<std::size_t>(n / 2) + 1;
  std::vector<int> current;
  auto grow = [&](auto&& self, std::size_t next) -> void {
    c.faces.push_back(current);
    if (current.size() == depth) return;
    for (std::size_t v = next; v < nv; ++v) {
      bool ok = true;
      for (int u : current)
        if (!c.adjacency[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(static_cast<int>(v));
      self(self, v + 1);
      current.pop_back();
    }
  };
  grow(grow, 0);
  std::vector<BigInt> f(depth + 1, 0);
  for (const auto& face : c.faces) f[face.size()] += 1;
  c.f_polynomial = IntPolynomial(std::move(f));

  const IntPolynomial expected = peak_polynomials(p, g).W_left.scale_argument(BigInt(4));
  if (c.f_polynomial != expected)
    fail(ErrorCode::IdentityViolation, "f-polynomial " + c.f_polynomial.to_string() + " != W_left(4x) = " + expected.to_string());
  return c;
}

struct IsoCheck {
  bool bijective = false;      // phi: S_P -> faces, one to one and onto
  bool graded = false;         // bars = face cardinality
  bool order_preserving = false;  // phi(cover_reduce(d, i)) = phi(d) minus its i-th vertex
  bool lower_ideal = false;    // cover_reduce stays in S_P
  bool holds() const { return bijective && graded && order_preserving && lower_ideal; }
};

/// Exhaustive check that phi is an isomorphism of graded posets from S_P onto
/// the face poset of its complex.
inline IsoCheck iso_check(const Poset& p, const Guards& g = {}) {
  const GammaComplex c = build_complex(p, g);
  const auto S = decorated_extensions(p, g);
  const std::set<DecoratedPermutation> members(S.begin(), S.end());
  IsoCheck r{true, true, true, true};

  auto face_of = [&](const DecoratedPermutation& d) -> std::optional<std::vector<int>> {
    std::vector<int> face;
    for (const auto& v : phi_face_map(d)) {
      const int k = c.index_of(v);
      if (k < 0) return std::nullopt;
      face.push_back(k);
    }
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end()) return std::nullopt;
    return face;
  };

  std::set<std::vector<int>> image;
  for (const auto& d : S) {
    const auto face = face_of(d);
    if (!face) {
      r.bijective = false;
      continue;
    }
    if (static_cast<int>(face->size()) != d.bar_count()) r.graded = false;
    if (!image.insert(*face).second) r.bijective = false;
    const auto vertices = phi_face_map(d);
    for (int i = 1; i <= d.bar_count(); ++i) {
      const DecoratedPermutation lower = cover_reduce(d, i);
      if (!members.count(lower)) r.lower_ideal = false;
      auto expected = vertices;
      expected.erase(expected.begin() + (i - 1));
      auto got = phi_face_map(lower);
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      if (got != expected) r.order_preserving = false;
    }
  }
  const std::set<std::vector<int>> faces(c.faces.begin(), c.faces.end());
  if (image != faces) r.bijective = false;
  return r;
}

}  // namespace ecp
