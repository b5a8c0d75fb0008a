#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cdgor/error.hpp"

namespace cdgor {

using ElementId = std::int64_t;

/// Raw, unvalidated poset description: the shape of the on-disk format.
struct PosetDescription {
  std::vector<std::pair<ElementId, int>> elements;  // (id, rank)
  std::vector<std::pair<ElementId, ElementId>> covers;  // (lower, upper)
  ElementId bottom = 0;
  ElementId top = 0;
};

class GradedPoset;
GradedPoset validate(const PosetDescription& raw);

/**
 * A finite graded poset with a unique bottom and top.
 *
 * Values are immutable; the only way to obtain one is through validate() (or
 * an operation built on it), so every instance satisfies the gradedness
 * invariants. Elements are addressed by opaque integer ids; internally they
 * are stored in increasing id order and also reachable by dense index.
 */
class GradedPoset {
 public:
  std::size_t size() const { return ids_.size(); }
  /// Rank of the top element (n + 1).
  int rank() const { return rank_[top_]; }
  int n() const { return rank() - 1; }

  ElementId bottom() const { return ids_[bottom_]; }
  ElementId top() const { return ids_[top_]; }
  std::span<const ElementId> elements() const { return ids_; }
  ElementId max_id() const { return ids_.back(); }

  bool contains(ElementId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

  std::size_t index_of(ElementId id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
      throw Error(ErrorCode::InvalidInput, "unknown element id " + std::to_string(id));
    return static_cast<std::size_t>(it - ids_.begin());
  }
  ElementId id_at(std::size_t index) const { return ids_[index]; }

  int rank_of(ElementId id) const { return rank_[index_of(id)]; }
  int rank_at(std::size_t index) const { return rank_[index]; }

  /// Dense indices of lower / upper covers (sorted).
  std::span<const std::size_t> down_at(std::size_t index) const { return down_[index]; }
  std::span<const std::size_t> up_at(std::size_t index) const { return up_[index]; }

  std::vector<ElementId> lower_covers(ElementId id) const { return to_ids(down_[index_of(id)]); }
  std::vector<ElementId> upper_covers(ElementId id) const { return to_ids(up_[index_of(id)]); }

  /// True iff `upper` covers `lower`.
  bool covers(ElementId upper, ElementId lower) const {
    const auto& d = down_[index_of(upper)];
    return std::binary_search(d.begin(), d.end(), index_of(lower));
  }

  bool leq_at(std::size_t a, std::size_t b) const { return above_[a].test(b); }
  bool leq(ElementId a, ElementId b) const { return leq_at(index_of(a), index_of(b)); }

  /// Set of dense indices lying above (or equal to) the element at `index`.
  const boost::dynamic_bitset<>& above_at(std::size_t index) const { return above_[index]; }

  std::vector<std::size_t> indices_at_rank(int r) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (rank_[i] == r) out.push_back(i);
    return out;
  }
  std::vector<ElementId> at_rank(int r) const { return to_ids(indices_at_rank(r)); }

  /// All cover pairs (lower, upper), sorted.
  std::vector<std::pair<ElementId, ElementId>> cover_pairs() const {
    std::vector<std::pair<ElementId, ElementId>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j : up_[i]) out.emplace_back(ids_[i], ids_[j]);
    std::sort(out.begin(), out.end());
    return out;
  }

  PosetDescription describe() const {
    PosetDescription d;
    for (std::size_t i = 0; i < size(); ++i) d.elements.emplace_back(ids_[i], rank_[i]);
    d.covers = cover_pairs();
    d.bottom = bottom();
    d.top = top();
    return d;
  }

  /// Labeled equality: same ids, ranks and covers.
  friend bool operator==(const GradedPoset& a, const GradedPoset& b) {
    return a.ids_ == b.ids_ && a.rank_ == b.rank_ && a.down_ == b.down_ && a.bottom_ == b.bottom_ &&
           a.top_ == b.top_;
  }

 private:
  GradedPoset() = default;
  friend GradedPoset validate(const PosetDescription& raw);

  std::vector<ElementId> to_ids(std::span<const std::size_t> idx) const {
    std::vector<ElementId> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(ids_[i]);
    return out;
  }

  std::vector<ElementId> ids_;
  std::vector<int> rank_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<boost::dynamic_bitset<>> above_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

inline GradedPoset validate(const PosetDescription& raw) {
  if (raw.elements.empty()) throw Error(ErrorCode::InvalidInput, "poset has no elements");

  std::vector<std::pair<ElementId, int>> elems = raw.elements;
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 1; i < elems.size(); ++i)
    if (elems[i].first == elems[i - 1].first)
      throw Error(ErrorCode::InvalidInput, "duplicate element id " + std::to_string(elems[i].first));

  GradedPoset p;
  const std::size_t count = elems.size();
  p.ids_.reserve(count);
  p.rank_.reserve(count);
  for (const auto& [id, r] : elems) {
    if (r < 0) throw Error(ErrorCode::NotGraded, "negative rank on element " + std::to_string(id));
    p.ids_.push_back(id);
    p.rank_.push_back(r);
  }
  auto index = [&](ElementId id) -> std::size_t {
    auto it = std::lower_bound(p.ids_.begin(), p.ids_.end(), id);
    if (it == p.ids_.end() || *it != id)
      throw Error(ErrorCode::InvalidInput, "cover references unknown element " + std::to_string(id));
    return static_cast<std::size_t>(it - p.ids_.begin());
  };

  p.down_.assign(count, {});
  p.up_.assign(count, {});
  for (const auto& [lo, hi] : raw.covers) {
    std::size_t a = index(lo), b = index(hi);
    if (a == b) throw Error(ErrorCode::Cyclic, "self cover on element " + std::to_string(lo));
    p.up_[a].push_back(b);
    p.down_[b].push_back(a);
  }
  for (auto& v : p.down_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  for (auto& v : p.up_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  // Kahn's algorithm; leftovers mean a directed cycle.
  std::vector<std::size_t> indeg(count), topo;
  topo.reserve(count);
  std::queue<std::size_t> ready;
  for (std::size_t i = 0; i < count; ++i) {
    indeg[i] = p.down_[i].size();
    if (indeg[i] == 0) ready.push(i);
  }
  while (!ready.empty()) {
    std::size_t i = ready.front();
    ready.pop();
    topo.push_back(i);
    for (std::size_t j : p.up_[i])
      if (--indeg[j] == 0) ready.push(j);
  }
  if (topo.size() != count) throw Error(ErrorCode::Cyclic, "cover relation contains a cycle");

  if (!std::binary_search(p.ids_.begin(), p.ids_.end(), raw.bottom) ||
      !std::binary_search(p.ids_.begin(), p.ids_.end(), raw.top))
    throw Error(ErrorCode::NoUniqueBottomTop, "bottom/top id not among elements");
  p.bottom_ = index(raw.bottom);
  p.top_ = index(raw.top);
  for (std::size_t i = 0; i < count; ++i) {
    if (p.down_[i].empty() && i != p.bottom_)
      throw Error(ErrorCode::NoUniqueBottomTop,
                  "element " + std::to_string(p.ids_[i]) + " is minimal but not the bottom");
    if (p.up_[i].empty() && i != p.top_)
      throw Error(ErrorCode::NoUniqueBottomTop,
                  "element " + std::to_string(p.ids_[i]) + " is maximal but not the top");
  }
  if (!p.down_[p.bottom_].empty()) throw Error(ErrorCode::NoUniqueBottomTop, "bottom has a lower cover");
  if (!p.up_[p.top_].empty()) throw Error(ErrorCode::NoUniqueBottomTop, "top has an upper cover");

  if (p.rank_[p.bottom_] != 0) throw Error(ErrorCode::NotGraded, "bottom does not have rank 0");
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j : p.up_[i])
      if (p.rank_[j] != p.rank_[i] + 1)
        throw Error(ErrorCode::NotGraded, "cover " + std::to_string(p.ids_[i]) + " < " +
                                              std::to_string(p.ids_[j]) + " skips a rank");

  p.above_.assign(count, boost::dynamic_bitset<>(count));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    std::size_t i = *it;
    p.above_[i].set(i);
    for (std::size_t j : p.up_[i]) p.above_[i] |= p.above_[j];
  }
  return p;
}

/// Closed interval [lower, upper] with the rank of `lower` shifted to 0.
struct PosetInterval {
  ElementId lower;
  ElementId upper;
  GradedPoset poset;
};

inline PosetInterval interval(const GradedPoset& p, ElementId x, ElementId y) {
  const std::size_t xi = p.index_of(x), yi = p.index_of(y);
  if (!p.leq_at(xi, yi))
    throw Error(ErrorCode::NotComparable, std::to_string(x) + " is not below " + std::to_string(y));
  const int shift = p.rank_at(xi);
  PosetDescription d;
  std::vector<std::size_t> inside;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.leq_at(xi, i) && p.leq_at(i, yi)) inside.push_back(i);
  for (std::size_t i : inside) {
    d.elements.emplace_back(p.id_at(i), p.rank_at(i) - shift);
    for (std::size_t j : p.up_at(i))
      if (p.leq_at(j, yi)) d.covers.emplace_back(p.id_at(i), p.id_at(j));
  }
  d.bottom = x;
  d.top = y;
  return {x, y, validate(d)};
}

/// Order reversed; rank'(e) = rank(top) - rank(e).
inline GradedPoset dual(const GradedPoset& p) {
  PosetDescription d;
  const int top_rank = p.rank();
  for (std::size_t i = 0; i < p.size(); ++i) d.elements.emplace_back(p.id_at(i), top_rank - p.rank_at(i));
  for (const auto& [lo, hi] : p.cover_pairs()) d.covers.emplace_back(hi, lo);
  d.bottom = p.top();
  d.top = p.bottom();
  return validate(d);
}

/// Offset applied to the second operand's ids inside join(p, q).
inline ElementId join_offset(const GradedPoset& p, const GradedPoset& q) {
  return p.max_id() + 1 - q.elements().front();
}

/**
 * The join P*Q on (P - top) + (Q - bottom): everything in P lies below
 * everything in Q. Q's ids are shifted by join_offset(p, q).
 */
inline GradedPoset join(const GradedPoset& p, const GradedPoset& q) {
  const ElementId offset = join_offset(p, q);
  const int shift = p.rank() - 1;
  PosetDescription d;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.id_at(i) != p.top()) d.elements.emplace_back(p.id_at(i), p.rank_at(i));
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q.id_at(i) != q.bottom()) d.elements.emplace_back(q.id_at(i) + offset, q.rank_at(i) + shift);

  for (const auto& [lo, hi] : p.cover_pairs())
    if (hi != p.top()) d.covers.emplace_back(lo, hi);
  for (const auto& [lo, hi] : q.cover_pairs())
    if (lo != q.bottom()) d.covers.emplace_back(lo + offset, hi + offset);
  for (ElementId coatom : p.lower_covers(p.top()))
    for (ElementId atom : q.upper_covers(q.bottom())) d.covers.emplace_back(coatom, atom + offset);
  d.bottom = p.bottom();
  d.top = q.top() + offset;
  return validate(d);
}

/// Every rank-2 closed interval has exactly two middle elements.
inline bool is_thin(const GradedPoset& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    const int rx = p.rank_at(x);
    if (rx < 2) continue;
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.rank_at(y) != rx - 2 || !p.leq_at(y, x)) continue;
      int middle = 0;
      for (std::size_t m : p.down_at(x))
        if (p.leq_at(y, m)) ++middle;
      if (middle != 2) return false;
    }
  }
  return true;
}

namespace detail {

inline void require_interior(const GradedPoset& p, ElementId e, ErrorCode code, const char* role) {
  if (!p.contains(e)) throw Error(code, std::string(role) + " " + std::to_string(e) + " is not an element");
  if (e == p.bottom() || e == p.top())
    throw Error(code, std::string(role) + " " + std::to_string(e) + " is the bottom or top");
}

}  // namespace detail

/**
 * Zipping Z(P; x, y, z): delete x and y, and let every element that
 * covered y (other than x) cover z instead. Requires a thin poset.
 */
inline GradedPoset zip(const GradedPoset& p, ElementId x, ElementId y, ElementId z) {
  constexpr auto bad = ErrorCode::ZipPreconditionViolated;
  detail::require_interior(p, x, bad, "x");
  detail::require_interior(p, y, bad, "y");
  detail::require_interior(p, z, bad, "z");
  if (x == y || y == z || x == z) throw Error(bad, "x, y, z must be distinct");
  std::vector<ElementId> expected{y, z};
  std::sort(expected.begin(), expected.end());
  if (p.lower_covers(x) != expected) throw Error(bad, "(i) x does not cover exactly y and z");

  const std::size_t yi = p.index_of(y), zi = p.index_of(z), xi = p.index_of(x);
  const boost::dynamic_bitset<> common = p.above_at(yi) & p.above_at(zi);
  for (std::size_t u = common.find_first(); u != boost::dynamic_bitset<>::npos; u = common.find_next(u)) {
    bool minimal = true;
    for (std::size_t d : p.down_at(u))
      if (common.test(d)) minimal = false;
    if (minimal && u != xi) throw Error(bad, "(ii) x is not the unique minimal upper bound of y and z");
  }
  if (p.lower_covers(y) != p.lower_covers(z)) throw Error(bad, "(iii) y and z cover different elements");
  // On thin posets (i) already forces (iii); checking thinness last keeps (iii) reportable.
  if (!is_thin(p)) throw Error(bad, "poset is not thin");

  PosetDescription d;
  for (ElementId e : p.elements())
    if (e != x && e != y) d.elements.emplace_back(e, p.rank_of(e));
  std::set<std::pair<ElementId, ElementId>> covers;
  for (const auto& [lo, hi] : p.cover_pairs()) {
    if (lo == x || hi == x) continue;
    if (lo == y) {
      covers.emplace(z, hi);
      continue;
    }
    if (hi == y) continue;
    covers.insert({lo, hi});
  }
  d.covers.assign(covers.begin(), covers.end());
  d.bottom = p.bottom();
  d.top = p.top();
  try {
    return validate(d);
  } catch (const Error& e) {
    throw Error(ErrorCode::ResultNotGraded, e.what());
  }
}

/// Result of one unzip: the new poset plus the ids of the created pair.
struct Unzipped {
  GradedPoset poset;
  ElementId upper_new;  // x'
  ElementId lower_new;  // y'
};

/**
 * Unzipping U(P; x, y) for a cover y < x: delete that cover, add x' and y'
 * with x' under everything covering x, y' over everything y covers, and
 * covers y' < x', y < x', y' < x. New ids are max_id + 1 (x') and
 * max_id + 2 (y').
 */
inline Unzipped unzip(const GradedPoset& p, ElementId x, ElementId y) {
  detail::require_interior(p, x, ErrorCode::NotACover, "x");
  detail::require_interior(p, y, ErrorCode::NotACover, "y");
  if (!p.covers(x, y))
    throw Error(ErrorCode::NotACover, std::to_string(x) + " does not cover " + std::to_string(y));

  const ElementId xn = p.max_id() + 1;
  const ElementId yn = p.max_id() + 2;
  PosetDescription d = p.describe();
  d.elements.emplace_back(xn, p.rank_of(x));
  d.elements.emplace_back(yn, p.rank_of(y));
  std::erase(d.covers, std::pair<ElementId, ElementId>{y, x});
  for (ElementId w : p.upper_covers(x)) d.covers.emplace_back(xn, w);
  for (ElementId w : p.lower_covers(y)) d.covers.emplace_back(w, yn);
  d.covers.emplace_back(yn, xn);
  d.covers.emplace_back(y, xn);
  d.covers.emplace_back(yn, x);
  return {validate(d), xn, yn};
}

/// Pairs created by an iterated unzip, in order.
struct UnzippedChain {
  GradedPoset poset;
  std::vector<std::pair<ElementId, ElementId>> created;  // (x', y') per step
};

/// Unzip (x, y), then the freshly created pair, k times in total.
inline UnzippedChain unzip_k(const GradedPoset& p, ElementId x, ElementId y, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidInput, "unzip count must be nonnegative");
  if (!p.covers(x, y))
    throw Error(ErrorCode::NotACover, std::to_string(x) + " does not cover " + std::to_string(y));
  UnzippedChain out{p, {}};
  ElementId cx = x, cy = y;
  for (int step = 0; step < k; ++step) {
    Unzipped u = unzip(out.poset, cx, cy);
    out.poset = std::move(u.poset);
    out.created.emplace_back(u.upper_new, u.lower_new);
    cx = u.upper_new;
    cy = u.lower_new;
  }
  return out;
}

namespace detail {

// Colour refinement on the Hasse diagram; colours are comparable across the
// two posets because the palette is shared.
inline std::pair<std::vector<int>, std::vector<int>> refine_colours(const GradedPoset& p,
                                                                    const GradedPoset& q) {
  std::vector<int> cp(p.size()), cq(q.size());
  for (std::size_t i = 0; i < p.size(); ++i) cp[i] = p.rank_at(i);
  for (std::size_t i = 0; i < q.size(); ++i) cq[i] = q.rank_at(i);
  std::size_t classes = 0;
  while (true) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::map<Sig, int> palette;
    auto signature = [](const GradedPoset& g, const std::vector<int>& c, std::size_t i) {
      std::vector<int> dn, upc;
      for (std::size_t j : g.down_at(i)) dn.push_back(c[j]);
      for (std::size_t j : g.up_at(i)) upc.push_back(c[j]);
      std::sort(dn.begin(), dn.end());
      std::sort(upc.begin(), upc.end());
      return Sig{c[i], std::move(dn), std::move(upc)};
    };
    std::vector<Sig> sp, sq;
    for (std::size_t i = 0; i < p.size(); ++i) sp.push_back(signature(p, cp, i));
    for (std::size_t i = 0; i < q.size(); ++i) sq.push_back(signature(q, cq, i));
    for (const auto& s : sp) palette.emplace(s, 0);
    for (const auto& s : sq) palette.emplace(s, 0);
    int next = 0;
    for (auto& [sig, colour] : palette) colour = next++;
    for (std::size_t i = 0; i < p.size(); ++i) cp[i] = palette[sp[i]];
    for (std::size_t i = 0; i < q.size(); ++i) cq[i] = palette[sq[i]];
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  return {cp, cq};
}

}  // namespace detail

/**
 * Rank-preserving order isomorphism test. Colour refinement prunes the
 * search; the remaining backtracking is exponential in the worst case, so
 * inputs above `budget` elements are rejected.
 */
inline bool is_isomorphic(const GradedPoset& p, const GradedPoset& q, std::size_t budget = 200) {
  if (p.size() != q.size() || p.rank() != q.rank()) return false;
  if (p.size() > budget) throw Error(ErrorCode::TooLarge, "isomorphism test above element budget");
  if (p.cover_pairs().size() != q.cover_pairs().size()) return false;

  auto [cp, cq] = detail::refine_colours(p, q);
  {
    auto hp = cp, hq = cq;
    std::sort(hp.begin(), hp.end());
    std::sort(hq.begin(), hq.end());
    if (hp != hq) return false;
  }

  // Assign p's elements in breadth-first order from the bottom so that each
  // new element is usually adjacent to an already-mapped one.
  std::vector<std::size_t> order;
  {
    std::vector<char> seen(p.size(), 0);
    std::queue<std::size_t> bfs;
    bfs.push(p.index_of(p.bottom()));
    seen[bfs.front()] = 1;
    while (!bfs.empty()) {
      std::size_t i = bfs.front();
      bfs.pop();
      order.push_back(i);
      auto visit = [&](std::size_t j) {
        if (!seen[j]) {
          seen[j] = 1;
          bfs.push(j);
        }
      };
      for (std::size_t j : p.up_at(i)) visit(j);
      for (std::size_t j : p.down_at(i)) visit(j);
    }
  }

  std::vector<std::ptrdiff_t> image(p.size(), -1);
  std::vector<char> used(q.size(), 0);
  auto consistent = [&](std::size_t a, std::size_t b) {
    for (std::size_t j : p.down_at(a))
      if (image[j] >= 0) {
        auto d = q.down_at(b);
        if (!std::binary_search(d.begin(), d.end(), static_cast<std::size_t>(image[j]))) return false;
      }
    for (std::size_t j : p.up_at(a))
      if (image[j] >= 0) {
        auto u = q.up_at(b);
        if (!std::binary_search(u.begin(), u.end(), static_cast<std::size_t>(image[j]))) return false;
      }
    // Reverse direction: mapped neighbours of b must come from neighbours of a.
    std::size_t mapped_p = 0, mapped_q = 0;
    for (std::size_t j : p.down_at(a)) mapped_p += image[j] >= 0;
    for (std::size_t j : p.up_at(a)) mapped_p += image[j] >= 0;
    for (std::size_t j : q.down_at(b)) mapped_q += used[j];
    for (std::size_t j : q.up_at(b)) mapped_q += used[j];
    return mapped_p == mapped_q;
  };

  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const std::size_t a = order[pos];
    for (std::size_t b = 0; b < q.size(); ++b) {
      if (used[b] || cq[b] != cp[a] || !consistent(a, b)) continue;
      image[a] = static_cast<std::ptrdiff_t>(b);
      used[b] = 1;
      if (self(self, pos + 1)) return true;
      image[a] = -1;
      used[b] = 0;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace cdgor
