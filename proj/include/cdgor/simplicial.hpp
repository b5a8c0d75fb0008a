#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cdgor/error.hpp"
#include "cdgor/poset.hpp"

namespace cdgor {

using Vertex = std::int64_t;
/// A face is a sorted set of vertex ids.
using Face = std::vector<Vertex>;

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : f) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/**
 * Abstract simplicial complex stored by its facets.
 *
 * The default-constructed complex is the void complex (no faces at all);
 * `empty_face()` is {∅}, whose only face is the empty set.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Build from any generating set of faces; keeps the inclusion-maximal ones.
  static SimplicialComplex from_faces(std::vector<Face> faces) {
    for (auto& f : faces) {
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw Error(ErrorCode::InvalidInput, "face lists a vertex twice");
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    // Larger faces first so each candidate only needs checking against kept facets.
    std::stable_sort(faces.begin(), faces.end(),
                     [](const Face& a, const Face& b) { return a.size() > b.size(); });
    std::vector<Face> kept;
    std::map<Vertex, std::vector<std::size_t>> by_vertex;
    for (auto& f : faces) {
      bool covered = false;
      if (f.empty()) {
        covered = !kept.empty();
      } else {
        auto it = by_vertex.find(f.front());
        if (it != by_vertex.end())
          for (std::size_t k : it->second)
            if (std::includes(kept[k].begin(), kept[k].end(), f.begin(), f.end())) {
              covered = true;
              break;
            }
      }
      if (covered) continue;
      for (Vertex v : f) by_vertex[v].push_back(kept.size());
      kept.push_back(std::move(f));
    }
    SimplicialComplex out;
    std::sort(kept.begin(), kept.end());
    out.facets_ = std::move(kept);
    std::set<Vertex> vs;
    for (const auto& f : out.facets_) vs.insert(f.begin(), f.end());
    out.vertices_.assign(vs.begin(), vs.end());
    return out;
  }

  static SimplicialComplex empty_face() { return from_faces({Face{}}); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  /// Dimension; -1 for {∅}, -2 for the void complex.
  int dimension() const {
    int d = -2;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }
  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return f.size() == facets_.front().size(); });
  }

  bool contains(const Face& face) const {
    Face f = face;
    std::sort(f.begin(), f.end());
    return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) {
      return std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
  }

  /// Every face, grouped by cardinality (index k holds the faces with k vertices), each group sorted.
  std::vector<std::vector<Face>> faces_by_size() const {
    std::vector<std::unordered_set<Face, FaceHash>> seen(static_cast<std::size_t>(dimension() + 2));
    for (const auto& f : facets_) {
      const std::size_t m = f.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Face sub;
        for (std::size_t i = 0; i < m; ++i)
          if (mask >> i & 1) sub.push_back(f[i]);
        seen[sub.size()].insert(std::move(sub));
      }
    }
    std::vector<std::vector<Face>> out(seen.size());
    for (std::size_t k = 0; k < seen.size(); ++k) {
      out[k].assign(seen[k].begin(), seen[k].end());
      std::sort(out[k].begin(), out[k].end());
    }
    return out;
  }

  std::size_t face_count() const {
    std::size_t total = 0;
    for (const auto& g : faces_by_size()) total += g.size();
    return total;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Face> facets_;
};

/// Chains of P minus {bottom, top}; facets are the maximal chains.
inline SimplicialComplex order_complex(const GradedPoset& p) {
  if (p.n() < 1) {
    if (p.n() == 0) return SimplicialComplex::empty_face();
    throw Error(ErrorCode::InvalidInput, "order complex needs rank at least 1");
  }
  std::vector<Face> chains;
  Face current;
  const std::size_t top = p.index_of(p.top());
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == top) {
      Face f = current;
      std::sort(f.begin(), f.end());
      chains.push_back(std::move(f));
      return;
    }
    for (std::size_t j : p.up_at(i)) {
      if (j != top) current.push_back(p.id_at(j));
      self(self, j);
      if (j != top) current.pop_back();
    }
  };
  walk(walk, p.index_of(p.bottom()));
  return SimplicialComplex::from_faces(std::move(chains));
}

/// lk(F) = { G disjoint from F : G ∪ F is a face }.
inline SimplicialComplex link(const SimplicialComplex& d, const Face& face) {
  Face f = face;
  std::sort(f.begin(), f.end());
  std::vector<Face> parts;
  for (const auto& g : d.facets())
    if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
      Face rest;
      std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(rest));
      parts.push_back(std::move(rest));
    }
  if (parts.empty()) throw Error(ErrorCode::NotAFace, "link of a non-face");
  return SimplicialComplex::from_faces(std::move(parts));
}

/// Stellar subdivision of edge {i, j} with new vertex v.
inline SimplicialComplex edge_subdivision(const SimplicialComplex& d, Vertex i, Vertex j, Vertex v) {
  if (i == j || !d.contains({i, j})) throw Error(ErrorCode::NotAnEdge, "subdivision target is not an edge");
  if (std::binary_search(d.vertices().begin(), d.vertices().end(), v))
    throw Error(ErrorCode::VertexCollision, "new vertex id already in use");
  std::vector<Face> out;
  for (const auto& g : d.facets()) {
    const bool has_i = std::binary_search(g.begin(), g.end(), i);
    const bool has_j = std::binary_search(g.begin(), g.end(), j);
    if (!(has_i && has_j)) {
      out.push_back(g);
      continue;
    }
    for (Vertex drop : {i, j}) {
      Face h;
      for (Vertex w : g)
        if (w != drop) h.push_back(w);
      h.push_back(v);
      out.push_back(std::move(h));
    }
  }
  return SimplicialComplex::from_faces(std::move(out));
}

/// Identify vertex i with j (the contraction of i to j).
inline SimplicialComplex edge_contraction(const SimplicialComplex& d, Vertex i, Vertex j) {
  const auto& vs = d.vertices();
  if (!std::binary_search(vs.begin(), vs.end(), i) || !std::binary_search(vs.begin(), vs.end(), j))
    throw Error(ErrorCode::InvalidInput, "contraction endpoints must be vertices");
  std::vector<Face> out;
  for (const auto& g : d.facets()) {
    Face h;
    for (Vertex w : g) h.push_back(w == i ? j : w);
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    out.push_back(std::move(h));
  }
  return SimplicialComplex::from_faces(std::move(out));
}

namespace detail {

inline std::set<Face> all_faces(const SimplicialComplex& d) {
  std::set<Face> out;
  for (auto& group : d.faces_by_size())
    for (auto& f : group) out.insert(std::move(f));
  return out;
}

}  // namespace detail

/// lk({i}) ∩ lk({j}) = lk({i, j}) as face sets.
inline bool link_condition(const SimplicialComplex& d, Vertex i, Vertex j) {
  if (i == j || !d.contains({i, j})) throw Error(ErrorCode::NotAnEdge, "link condition needs an edge");
  const auto li = detail::all_faces(link(d, {i}));
  const auto lj = detail::all_faces(link(d, {j}));
  const auto lij = detail::all_faces(link(d, {i, j}));
  std::set<Face> meet;
  std::set_intersection(li.begin(), li.end(), lj.begin(), lj.end(), std::inserter(meet, meet.end()));
  return meet == lij;
}

/// Shift applied to the second complex when vertex ids collide.
inline Vertex join_vertex_offset(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertices().empty() || b.vertices().empty()) return 0;
  std::vector<Vertex> both;
  std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                        std::back_inserter(both));
  if (both.empty()) return 0;
  return a.vertices().back() + 1 - b.vertices().front();
}

/// Simplicial join; the second complex is relabelled by join_vertex_offset on a collision.
inline SimplicialComplex simplicial_join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const Vertex offset = join_vertex_offset(a, b);
  std::vector<Face> out;
  out.reserve(a.facets().size() * b.facets().size());
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) {
      Face h = f;
      for (Vertex v : g) h.push_back(v + offset);
      out.push_back(std::move(h));
    }
  return SimplicialComplex::from_faces(std::move(out));
}

/// Flag iff every maximal clique of the 1-skeleton is a face.
inline bool is_flag(const SimplicialComplex& d) {
  const auto& vs = d.vertices();
  const std::size_t nv = vs.size();
  auto idx = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  std::vector<std::set<std::size_t>> adj(nv);
  for (const auto& f : d.facets())
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b) {
        adj[idx(f[a])].insert(idx(f[b]));
        adj[idx(f[b])].insert(idx(f[a]));
      }

  bool ok = true;
  // Bron–Kerbosch with pivoting.
  auto bk = [&](auto&& self, std::vector<std::size_t>& r, std::set<std::size_t> p, std::set<std::size_t> x) -> void {
    if (!ok) return;
    if (p.empty() && x.empty()) {
      Face clique;
      for (std::size_t i : r) clique.push_back(vs[i]);
      if (!d.contains(clique)) ok = false;
      return;
    }
    std::size_t pivot = p.empty() ? *x.begin() : *p.begin();
    std::size_t best = 0;
    for (const auto* s : {&p, &x})
      for (std::size_t u : *s) {
        std::size_t c = 0;
        for (std::size_t w : p) c += adj[u].count(w);
        if (c >= best) {
          best = c;
          pivot = u;
        }
      }
    std::vector<std::size_t> candidates;
    for (std::size_t v : p)
      if (!adj[pivot].count(v)) candidates.push_back(v);
    for (std::size_t v : candidates) {
      std::set<std::size_t> np, nx;
      for (std::size_t w : p)
        if (adj[v].count(w)) np.insert(w);
      for (std::size_t w : x)
        if (adj[v].count(w)) nx.insert(w);
      r.push_back(v);
      self(self, r, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(v);
      x.insert(v);
      if (!ok) return;
    }
  };
  std::vector<std::size_t> r;
  std::set<std::size_t> all;
  for (std::size_t i = 0; i < nv; ++i) all.insert(i);
  bk(bk, r, std::move(all), {});
  return ok;
}

/// (f_{-1}, f_0, ..., f_{dim}).
struct FVector {
  std::vector<BigInt> entries;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// (h_0, ..., h_n) with n = dim + 1.
struct HVector {
  std::vector<BigInt> entries;
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// (γ_0, ..., γ_{⌊n/2⌋}).
struct GammaVector {
  std::vector<BigInt> entries;
  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline FVector f_vector(const SimplicialComplex& d) {
  FVector out;
  for (const auto& group : d.faces_by_size()) out.entries.emplace_back(group.size());
  return out;
}

/// From Σ h_i x^{n-i} = Σ f_{i-1} (x-1)^{n-i}.
inline HVector h_from_f(const FVector& f) {
  const long n = static_cast<long>(f.entries.size()) - 1;
  HVector h;
  for (long k = 0; k <= n; ++k) {
    BigInt acc = 0;
    for (long i = 0; i <= k; ++i) {
      BigInt term = binomial(n - i, k - i) * f.entries[static_cast<std::size_t>(i)];
      if ((k - i) % 2) acc -= term;
      else acc += term;
    }
    h.entries.push_back(acc);
  }
  return h;
}

inline FVector f_from_h(const HVector& h) {
  const long n = static_cast<long>(h.entries.size()) - 1;
  FVector f;
  for (long k = 0; k <= n; ++k) {
    BigInt acc = 0;
    for (long i = 0; i <= k; ++i) acc += binomial(n - i, k - i) * h.entries[static_cast<std::size_t>(i)];
    f.entries.push_back(acc);
  }
  return f;
}

inline HVector h_vector(const SimplicialComplex& d) { return h_from_f(f_vector(d)); }

inline bool is_symmetric(const HVector& h) {
  const auto& e = h.entries;
  return std::equal(e.begin(), e.end(), e.rbegin());
}

/// Solves Σ h_i x^i = Σ γ_i x^i (1+x)^{n-2i}; only defined for symmetric h.
inline GammaVector gamma_from_h(const HVector& h) {
  if (!is_symmetric(h)) throw Error(ErrorCode::HNotSymmetric, "gamma-vector needs a symmetric h-vector");
  const long n = static_cast<long>(h.entries.size()) - 1;
  GammaVector g;
  for (long i = 0; 2 * i <= n; ++i) {
    BigInt acc = h.entries[static_cast<std::size_t>(i)];
    for (long j = 0; j < i; ++j) acc -= g.entries[static_cast<std::size_t>(j)] * binomial(n - 2 * j, i - j);
    g.entries.push_back(acc);
  }
  return g;
}

inline HVector h_from_gamma(const GammaVector& g, int n) {
  HVector h;
  h.entries.assign(static_cast<std::size_t>(n + 1), 0);
  for (long i = 0; i < static_cast<long>(g.entries.size()); ++i)
    for (long k = 0; k <= n - 2 * i; ++k)
      h.entries[static_cast<std::size_t>(i + k)] += g.entries[static_cast<std::size_t>(i)] * binomial(n - 2 * i, k);
  return h;
}

inline GammaVector gamma_vector(const SimplicialComplex& d) { return gamma_from_h(h_vector(d)); }

}  // namespace cdgor
