#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdgor/error.hpp"
#include "cdgor/poset.hpp"
#include "cdgor/simplicial.hpp"

namespace cdgor {

constexpr std::size_t kDefaultFaceBudget = 50000;

/// Face budget: CDGOR_BUDGET if set to a positive integer, else the default.
inline std::size_t default_face_budget() {
  if (const char* env = std::getenv("CDGOR_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultFaceBudget;
}

/// Reduced integer homology in dimensions -1..dim; index i holds dimension i-1.
struct HomologyProfile {
  int dim = -2;
  std::vector<BigInt> betti;
  std::vector<std::vector<BigInt>> torsion;

  BigInt betti_at(int d) const {
    const int i = d + 1;
    return i >= 0 && i < static_cast<int>(betti.size()) ? betti[static_cast<std::size_t>(i)] : BigInt(0);
  }
  bool torsion_free() const {
    return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
  }
  /// Reduced homology of the m-sphere ({∅} is the (-1)-sphere).
  bool is_sphere_of_dim(int m) const {
    if (dim != m || !torsion_free()) return false;
    for (int d = -1; d <= dim; ++d)
      if (betti_at(d) != (d == m ? 1 : 0)) return false;
    return true;
  }
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Sparse integer matrix as rows of (column, value), plus a column->rows index.
class SparseIntMatrix {
 public:
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }

  void set(std::size_t r, std::size_t c, const BigInt& v) {
    if (v == 0) {
      rows_[r].erase(c);
      cols_[c].erase(r);
    } else {
      rows_[r][c] = v;
      cols_[c].insert(r);
    }
  }

  /// Invariant factors (nonzero diagonal of the Smith form, in divisibility order).
  std::vector<BigInt> invariant_factors() && {
    std::vector<BigInt> units;
    std::size_t unit_count = 0;
    // Pass 1: eliminate with ±1 pivots, shortest pivot row first.
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        if (cols_[c].empty()) continue;
        std::optional<std::size_t> best;
        for (std::size_t r : cols_[c]) {
          const BigInt& v = rows_[r].at(c);
          if ((v == 1 || v == -1) && (!best || rows_[r].size() < rows_[*best].size())) best = r;
        }
        if (!best) continue;
        eliminate(*best, c);
        ++unit_count;
        progress = true;
      }
    }
    // Pass 2: dense Smith form on what is left.
    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!rows_[r].empty()) live_rows.push_back(r);
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (!cols_[c].empty()) live_cols.push_back(c);
    std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols.size()));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (std::size_t j = 0; j < live_cols.size(); ++j) {
        auto it = rows_[live_rows[i]].find(live_cols[j]);
        if (it != rows_[live_rows[i]].end()) dense[i][j] = it->second;
      }
    std::vector<BigInt> diag = dense_smith(std::move(dense));
    std::vector<BigInt> out(unit_count, BigInt(1));
    out.insert(out.end(), diag.begin(), diag.end());
    for (std::size_t i = 1; i < out.size(); ++i)
      if (out[i] % out[i - 1] != 0) throw std::logic_error("Smith form divisibility chain broken");
    return out;
  }

 private:
  void eliminate(std::size_t pr, std::size_t pc) {
    const std::map<std::size_t, BigInt> pivot_row = rows_[pr];
    const BigInt pv = pivot_row.at(pc);  // ±1, its own inverse
    const std::vector<std::size_t> targets(cols_[pc].begin(), cols_[pc].end());
    for (std::size_t r : targets) {
      if (r == pr) continue;
      const BigInt factor = rows_[r].at(pc) * pv;
      for (const auto& [c, v] : pivot_row) {
        auto it = rows_[r].find(c);
        BigInt nv = (it == rows_[r].end() ? BigInt(0) : it->second) - factor * v;
        set(r, c, nv);
      }
    }
    // The pivot column is now a single entry; column operations clear the pivot row.
    for (const auto& [c, v] : pivot_row) cols_[c].erase(pr);
    rows_[pr].clear();
  }

  static std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a) {
    const std::size_t m = a.size(), n = m ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      while (true) {
        // Smallest nonzero magnitude in the trailing block becomes the pivot.
        std::optional<std::pair<std::size_t, std::size_t>> piv;
        for (std::size_t i = t; i < m; ++i)
          for (std::size_t j = t; j < n; ++j)
            if (a[i][j] != 0 && (!piv || abs(a[i][j]) < abs(a[piv->first][piv->second]))) piv = {i, j};
        if (!piv) return finish(diag);
        std::swap(a[t], a[piv->first]);
        for (auto& row : a) std::swap(row[t], row[piv->second]);
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a[i][t] == 0) continue;
          const BigInt q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
          if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[t][j] == 0) continue;
          const BigInt q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        // Enforce divisibility of the remaining block by the pivot.
        std::optional<std::size_t> bad;
        for (std::size_t i = t + 1; i < m && !bad; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (a[i][j] % a[t][t] != 0) {
              bad = i;
              break;
            }
        if (!bad) break;
        for (std::size_t j = t; j < n; ++j) a[t][j] += a[*bad][j];
      }
      diag.push_back(abs(a[t][t]));
    }
    return finish(diag);
  }

  static std::vector<BigInt> finish(std::vector<BigInt> diag) {
    std::sort(diag.begin(), diag.end());
    return diag;
  }

  std::vector<std::map<std::size_t, BigInt>> rows_;
  std::vector<std::set<std::size_t>> cols_;
};

/// Reduced homology via Smith forms of the augmented boundary maps.
inline HomologyProfile reduced_homology(const SimplicialComplex& d, std::size_t budget = default_face_budget()) {
  HomologyProfile out;
  out.dim = d.dimension();
  if (d.is_void()) return out;
  const auto faces = d.faces_by_size();
  std::size_t total = 0;
  for (const auto& g : faces) total += g.size();
  if (total > budget)
    throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " faces exceed budget " + std::to_string(budget));

  // faces[k] spans C_{k-1}; boundary k maps faces[k] -> faces[k-1].
  const std::size_t levels = faces.size();
  std::vector<std::unordered_map<Face, std::size_t, FaceHash>> index(levels);
  for (std::size_t k = 0; k < levels; ++k)
    for (std::size_t i = 0; i < faces[k].size(); ++i) index[k].emplace(faces[k][i], i);

  // rank[k] and torsion of boundary k (k >= 1).
  std::vector<std::size_t> rank(levels + 1, 0);
  std::vector<std::vector<BigInt>> tors(levels + 1);
  for (std::size_t k = 1; k < levels; ++k) {
    SparseIntMatrix m(faces[k - 1].size(), faces[k].size());
    for (std::size_t j = 0; j < faces[k].size(); ++j) {
      const Face& f = faces[k][j];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face g;
        g.reserve(f.size() - 1);
        for (std::size_t q = 0; q < f.size(); ++q)
          if (q != drop) g.push_back(f[q]);
        m.set(index[k - 1].at(g), j, drop % 2 ? BigInt(-1) : BigInt(1));
      }
    }
    const auto factors = std::move(m).invariant_factors();
    rank[k] = factors.size();
    for (const auto& v : factors)
      if (v > 1) tors[k].push_back(v);
  }
  for (std::size_t k = 0; k < levels; ++k) {
    out.betti.emplace_back(faces[k].size() - rank[k] - rank[k + 1]);
    out.torsion.push_back(tors[k + 1]);
  }
  return out;
}

/// Every face link (∅ included) has the reduced integer homology of a sphere of dimension dim - |F|.
inline bool is_homology_sphere(const SimplicialComplex& d, std::size_t budget = default_face_budget()) {
  if (d.is_void()) return false;
  if (!d.is_pure()) throw Error(ErrorCode::NotPure, "homology-sphere test needs a pure complex");
  const auto faces = d.faces_by_size();
  std::size_t total = 0;
  for (const auto& g : faces) total += g.size();
  if (total > budget)
    throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " faces exceed budget " + std::to_string(budget));
  const int dim = d.dimension();
  for (const auto& group : faces)
    for (const auto& f : group) {
      const int m = dim - static_cast<int>(f.size());
      if (!reduced_homology(link(d, f), budget).is_sphere_of_dim(m)) return false;
    }
  return true;
}

/// Per-link outcome of a homology-sphere scan.
struct SphereReport {
  HomologyProfile whole;
  std::size_t links_checked = 0;
  std::vector<Face> failures;
  bool ok() const { return failures.empty(); }
};

/// As is_homology_sphere, but records every offending face.
inline SphereReport sphere_report(const SimplicialComplex& d, std::size_t budget = default_face_budget()) {
  if (!d.is_pure()) throw Error(ErrorCode::NotPure, "homology-sphere test needs a pure complex");
  SphereReport rep;
  rep.whole = reduced_homology(d, budget);
  if (d.is_void()) {
    rep.failures.push_back({});
    return rep;
  }
  const int dim = d.dimension();
  for (const auto& group : d.faces_by_size())
    for (const auto& f : group) {
      ++rep.links_checked;
      const int m = dim - static_cast<int>(f.size());
      const auto prof = f.empty() ? rep.whole : reduced_homology(link(d, f), budget);
      if (!prof.is_sphere_of_dim(m)) rep.failures.push_back(f);
    }
  return rep;
}

inline bool is_gorenstein_star(const GradedPoset& p, std::size_t budget = default_face_budget()) {
  return is_homology_sphere(order_complex(p), budget);
}

}  // namespace cdgor
