#pragma once

#include "ecp/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ecp {

/// Subset of a poset's ground set; bit i is element i+1.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

/// Labels (1-based) of the elements of a mask, ascending.
inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i + 1);
  return out;
}

inline Mask mask_of(std::span<const int> labels) {
  Mask m = 0;
  for (int l : labels) m |= Mask{1} << (l - 1);
  return m;
}

/// Sort key for element sets: cardinality first, then lexicographic on the
/// ascending label lists.
inline bool set_order_less(Mask a, Mask b) {
  if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
  return mask_elements(a) < mask_elements(b);
}

struct Antichain {
  Mask mask = 0;

  std::vector<int> elements() const { return mask_elements(mask); }
  int size() const { return popcount(mask); }
  friend bool operator==(Antichain a, Antichain b) { return a.mask == b.mask; }
  friend bool operator<(Antichain a, Antichain b) { return set_order_less(a.mask, b.mask); }
};

struct PosetIdeal {
  Mask elements = 0;
  Antichain max;
  friend bool operator==(const PosetIdeal& a, const PosetIdeal& b) { return a.elements == b.elements; }
};

using Permutation = std::vector<int>;  // one-line notation, values are labels 1..n

/// A finite poset on labels 1..n, stored transitively closed.
class Poset {
 public:
  static constexpr int kMaxElements = 31;

  Poset() = default;

  /// Builds from a strict order given as below-masks (below[i] = elements
  /// strictly below element i+1). Fails unless the relation is an
  /// irreflexive, transitive (hence antisymmetric) order.
  static Poset from_below_masks(std::vector<Mask> below) {
    Poset p;
    p.n_ = static_cast<int>(below.size());
    if (p.n_ > kMaxElements) fail(ErrorCode::SizeLimit, "poset with more than 31 elements");
    p.below_ = std::move(below);
    p.above_.assign(p.n_, 0);
    for (int i = 0; i < p.n_; ++i) {
      if (p.below_[i] & (Mask{1} << i)) fail(ErrorCode::CycleDetected, "element " + std::to_string(i + 1) + " below itself");
      for (int j = 0; j < p.n_; ++j)
        if (p.below_[i] & (Mask{1} << j)) {
          if ((p.below_[j] & ~p.below_[i]) != 0) throw std::invalid_argument("relation is not transitively closed");
          p.above_[j] |= Mask{1} << i;
        }
    }
    return p;
  }

  int size() const { return n_; }
  Mask ground() const { return n_ == 0 ? 0 : (n_ >= 32 ? ~Mask{0} : (Mask{1} << n_) - 1); }

  /// i <_P j, labels 1-based.
  bool less(int i, int j) const { return (below_[j - 1] >> (i - 1)) & 1u; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }

  /// Elements strictly below / above label i.
  Mask below(int i) const { return below_[i - 1]; }
  Mask above(int i) const { return above_[i - 1]; }
  std::span<const Mask> below_masks() const { return below_; }

  /// Elements covered by label i.
  Mask covered_by(int i) const {
    Mask b = below_[i - 1], covered = b;
    for (int j : mask_elements(b)) covered &= ~below_[j - 1];
    return covered;
  }

  bool is_minimal(int i) const { return below_[i - 1] == 0; }

  std::vector<std::pair<int, int>> cover_relations() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= n_; ++j)
      for (int i : mask_elements(covered_by(j))) out.emplace_back(i, j);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool naturally_labeled() const {
    for (int j = 0; j < n_; ++j)
      if (below_[j] >> j) return false;
    return true;
  }

  bool is_antichain(Mask m) const {
    for (int i : mask_elements(m))
      if (below_[i - 1] & m) return false;
    return true;
  }

  bool is_down_closed(Mask m) const {
    for (int i : mask_elements(m))
      if ((below_[i - 1] & ~m) != 0) return false;
    return true;
  }

  /// Maximal elements of a subset.
  Mask maximal(Mask m) const {
    Mask out = 0;
    for (int i : mask_elements(m))
      if ((above_[i - 1] & m) == 0) out |= Mask{1} << (i - 1);
    return out;
  }

  /// Smallest poset ideal containing m.
  Mask down_closure(Mask m) const {
    Mask out = m;
    for (int i : mask_elements(m)) out |= below_[i - 1];
    return out;
  }

  /// Poset with element i renamed to new_label[i-1].
  Poset relabeled(std::span<const int> new_label) const {
    std::vector<Mask> below(n_, 0);
    for (int j = 1; j <= n_; ++j)
      for (int i : mask_elements(below_[j - 1])) below[new_label[j - 1] - 1] |= Mask{1} << (new_label[i - 1] - 1);
    return from_below_masks(std::move(below));
  }

  friend bool operator==(const Poset& a, const Poset& b) { return a.below_ == b.below_; }
  friend bool operator<(const Poset& a, const Poset& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.below_ < b.below_;
  }

  /// Text form: first line n, then one "a < b" line per cover relation.
  std::string to_text() const {
    std::string s = std::to_string(n_) + "\n";
    for (auto [a, b] : cover_relations()) s += std::to_string(a) + " < " + std::to_string(b) + "\n";
    return s;
  }

 private:
  int n_ = 0;
  std::vector<Mask> below_;
  std::vector<Mask> above_;
};

/// Lexicographically first linear extension; exists for every poset.
inline Permutation first_linear_extension(const Poset& p) {
  Permutation out;
  Mask placed = 0;
  for (int step = 0; step < p.size(); ++step)
    for (int i = 1; i <= p.size(); ++i) {
      const Mask bit = Mask{1} << (i - 1);
      if (!(placed & bit) && (p.below(i) & ~placed) == 0) {
        out.push_back(i);
        placed |= bit;
        break;
      }
    }
  return out;
}

/// The relabeling that sends the k-th element of `extension` to label k.
inline std::vector<int> relabeling_from_extension(std::span<const int> extension) {
  std::vector<int> new_label(extension.size());
  for (std::size_t k = 0; k < extension.size(); ++k) new_label[extension[k] - 1] = static_cast<int>(k) + 1;
  return new_label;
}

/// Natural relabeling along the lexicographically first linear extension.
/// Identity on naturally labeled posets.
inline Poset canonicalize(const Poset& p) {
  return p.relabeled(relabeling_from_extension(first_linear_extension(p)));
}

struct PosetInput {
  Poset poset;
  /// For non-naturally-labeled input: a linear extension (old labels in new
  /// label order) that relabels the poset naturally.
  std::optional<Permutation> relabeling;
};

/// Builds a poset from cover pairs (a, b) meaning a <_P b.
inline PosetInput poset_from_covers(int n, std::span<const std::pair<int, int>> covers) {
  if (n < 0 || n > Poset::kMaxElements) fail(ErrorCode::LabelOutOfRange, "element count " + std::to_string(n));
  std::vector<Mask> below(n, 0);
  for (auto [a, b] : covers) {
    if (a < 1 || a > n || b < 1 || b > n)
      fail(ErrorCode::LabelOutOfRange, std::to_string(a) + " < " + std::to_string(b) + " with n = " + std::to_string(n));
    if (a == b) fail(ErrorCode::CycleDetected, std::to_string(a) + " < " + std::to_string(a));
    below[b - 1] |= Mask{1} << (a - 1);
  }
  // transitive closure
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 0; j < n; ++j) {
      Mask closed = below[j];
      for (int i : mask_elements(below[j])) closed |= below[i - 1];
      if (closed != below[j]) {
        below[j] = closed;
        changed = true;
      }
    }
  }
  for (int j = 0; j < n; ++j)
    if (below[j] & (Mask{1} << j)) fail(ErrorCode::CycleDetected, "element " + std::to_string(j + 1) + " lies on a cycle");
  PosetInput out{Poset::from_below_masks(std::move(below)), std::nullopt};
  if (!out.poset.naturally_labeled()) out.relabeling = first_linear_extension(out.poset);
  return out;
}

inline Poset chain_poset(int n) {
  std::vector<Mask> below(n);
  for (int j = 0; j < n; ++j) below[j] = (Mask{1} << j) - 1;
  return Poset::from_below_masks(std::move(below));
}

inline Poset antichain_poset(int n) { return Poset::from_below_masks(std::vector<Mask>(n, 0)); }

/// All antichains including the empty one, by size then lexicographically.
inline std::vector<Antichain> antichains(const Poset& p) {
  std::vector<Antichain> out;
  // Extend antichains by larger labels only, so every set is produced once.
  std::vector<Mask> stack{0};
  while (!stack.empty()) {
    Mask m = stack.back();
    stack.pop_back();
    out.push_back({m});
    const int start = m == 0 ? 0 : 32 - std::countl_zero(m);
    for (int i = start; i < p.size(); ++i) {
      const Mask bit = Mask{1} << i;
      if (((p.below(i + 1) | p.above(i + 1)) & m) == 0) stack.push_back(m | bit);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every maximal chain once, bottom to top, in lexicographic order.
inline std::vector<std::vector<int>> maximal_chains(const Poset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  auto extend = [&](auto&& self, int top) -> void {
    chain.push_back(top);
    bool maximal = true;
    for (int j = 1; j <= p.size(); ++j)
      if ((p.covered_by(j) >> (top - 1)) & 1u) {
        maximal = false;
        self(self, j);
      }
    if (maximal) out.push_back(chain);
    chain.pop_back();
  };
  for (int i = 1; i <= p.size(); ++i)
    if (p.is_minimal(i)) extend(extend, i);
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of linear extensions by dynamic programming over down-sets.
inline std::uint64_t count_linear_extensions(const Poset& p) {
  const int n = p.size();
  if (n > 24) fail(ErrorCode::SizeLimit, "count_linear_extensions beyond 24 elements");
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (!ways[m]) continue;
    for (int i = 1; i <= n; ++i) {
      const Mask bit = Mask{1} << (i - 1);
      if (!(m & bit) && (p.below(i) & ~m) == 0) ways[m | bit] += ways[m];
    }
  }
  return ways[(std::size_t{1} << n) - 1];
}

/// All linear extensions in lexicographic order.
inline std::vector<Permutation> linear_extensions(const Poset& p, int max_n = 10) {
  if (p.size() > max_n)
    fail(ErrorCode::SizeLimit, "linear_extensions: n = " + std::to_string(p.size()) + " > " + std::to_string(max_n));
  std::vector<Permutation> out;
  Permutation current;
  auto place = [&](auto&& self, Mask placed) -> void {
    if (static_cast<int>(current.size()) == p.size()) {
      out.push_back(current);
      return;
    }
    for (int i = 1; i <= p.size(); ++i) {
      const Mask bit = Mask{1} << (i - 1);
      if ((placed & bit) || (p.below(i) & ~placed) != 0) continue;
      current.push_back(i);
      self(self, placed | bit);
      current.pop_back();
    }
  };
  place(place, 0);
  return out;
}

inline bool is_linear_extension(const Poset& p, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != p.size()) return false;
  Mask placed = 0;
  for (int i : perm) {
    if (i < 1 || i > p.size()) return false;
    const Mask bit = Mask{1} << (i - 1);
    if ((placed & bit) || (p.below(i) & ~placed) != 0) return false;
    placed |= bit;
  }
  return true;
}

inline PosetIdeal make_ideal(const Poset& p, Mask elements) {
  if (!p.is_down_closed(elements)) fail(ErrorCode::NotAnIdeal, "subset is not down-closed");
  return {elements, {p.maximal(elements)}};
}

/// I * J: the ideal generated by max(I cap J) cap (max(I) cup max(J)).
inline PosetIdeal star(const Poset& p, const PosetIdeal& I, const PosetIdeal& J) {
  if (!p.is_down_closed(I.elements) || !p.is_down_closed(J.elements))
    fail(ErrorCode::NotAnIdeal, "star() argument is not a poset ideal");
  const Mask generators = p.maximal(I.elements & J.elements) & (I.max.mask | J.max.mask);
  return make_ideal(p, p.down_closure(generators));
}

/// J(P), ordered by the antichain order of the maximal elements. Closure under
/// union and intersection is verified.
inline std::vector<PosetIdeal> ideal_lattice(const Poset& p) {
  std::vector<PosetIdeal> out;
  for (const auto& a : antichains(p)) out.push_back(make_ideal(p, p.down_closure(a.mask)));
  std::set<Mask> members;
  for (const auto& I : out) members.insert(I.elements);
  for (const auto& I : out)
    for (const auto& J : out)
      if (!members.count(I.elements | J.elements) || !members.count(I.elements & J.elements))
        fail(ErrorCode::IdentityViolation, "J(P) is not closed under union/intersection");
  return out;
}

struct PosetPredicates {
  std::vector<std::pair<int, int>> comparability_edges;  // (i, j) with i < j
  int width = 0;
  bool narrow = false;
};

inline PosetPredicates poset_predicates(const Poset& p) {
  PosetPredicates out;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p.comparable(i, j)) out.comparability_edges.emplace_back(i, j);
  for (const auto& a : antichains(p)) out.width = std::max(out.width, a.size());
  out.narrow = out.width <= 2;
  return out;
}

/// Every naturally labeled poset on [n], each exactly once, in a fixed order.
/// Element j's down-set is chosen as any ideal of the poset on 1..j-1.
inline std::vector<Poset> naturally_labeled_posets(int n) {
  std::vector<Poset> out;
  std::vector<Mask> below;
  auto grow = [&](auto&& self) -> void {
    const int j = static_cast<int>(below.size());
    if (j == n) {
      out.push_back(Poset::from_below_masks(below));
      return;
    }
    for (Mask m = 0; m < (Mask{1} << j); ++m) {
      bool closed = true;
      for (int i : mask_elements(m))
        if ((below[i - 1] & ~m) != 0) {
          closed = false;
          break;
        }
      if (!closed) continue;
      below.push_back(m);
      self(self);
      below.pop_back();
    }
  };
  grow(grow);
  return out;
}

/// Every poset on [n] (any labeling), sorted and duplicate-free.
inline std::vector<Poset> all_labeled_posets(int n) {
  std::set<Poset> seen;
  std::vector<int> perm(n);
  for (const auto& base : naturally_labeled_posets(n)) {
    std::iota(perm.begin(), perm.end(), 1);
    do seen.insert(base.relabeled(perm));
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace ecp
