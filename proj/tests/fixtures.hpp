#pragma once

#include <vector>

#include "cdgor/cdgor.hpp"

namespace fixture {

using namespace cdgor;

/// 0 < 1 < ... < r: the chain of rank r.
inline GradedPoset chain(int r) {
  PosetDescription d;
  for (int i = 0; i <= r; ++i) d.elements.emplace_back(i, i);
  for (int i = 0; i < r; ++i) d.covers.emplace_back(i, i + 1);
  d.bottom = 0;
  d.top = r;
  return validate(d);
}

inline GradedPoset b2() { return build_boolean2(); }
inline GradedPoset cyc(int k) { return build_cycle_poset(k); }
inline GradedPoset b2_c_b2(int k) { return join(join(b2(), cyc(k)), b2()); }

/// {B2, C3..C6} and all pairwise joins.
inline std::vector<GradedPoset> block_set() {
  std::vector<GradedPoset> base{b2()};
  for (int k = 3; k <= 6; ++k) base.push_back(cyc(k));
  std::vector<GradedPoset> all = base;
  for (const auto& p : base)
    for (const auto& q : base) all.push_back(join(p, q));
  return all;
}

inline SimplicialComplex cycle_complex(int m) {
  std::vector<Face> f;
  for (int i = 0; i < m; ++i) f.push_back({i, (i + 1) % m});
  return SimplicialComplex::from_faces(f);
}

/// Boundary of the cross-polytope of dimension d (join of d zero-spheres).
inline SimplicialComplex cross_polytope(int d) {
  SimplicialComplex k = SimplicialComplex::from_faces({{0}, {1}});
  for (int i = 1; i < d; ++i) k = simplicial_join(k, SimplicialComplex::from_faces({{2 * i}, {2 * i + 1}}));
  return k;
}

inline SimplicialComplex hollow_triangle() { return SimplicialComplex::from_faces({{0, 1}, {1, 2}, {0, 2}}); }

/// Six-vertex real projective plane.
inline SimplicialComplex rp2() {
  return SimplicialComplex::from_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                        {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
}

}  // namespace fixture
