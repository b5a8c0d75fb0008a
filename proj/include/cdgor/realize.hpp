#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdgor/error.hpp"
#include "cdgor/flagvec.hpp"
#include "cdgor/poset.hpp"
#include "cdgor/simplicial.hpp"

namespace cdgor {

// ---- building blocks ---------------------------------------------------------

/// Face poset of a k-gon with bottom 0, vertices 1..k, edges k+1..2k (edge k+i spans i, i%k+1), top 2k+1.
inline GradedPoset build_cycle_poset(int k) {
  if (k < 3) throw Error(ErrorCode::KTooSmall, "cycle length must be at least 3");
  PosetDescription d;
  d.elements.emplace_back(0, 0);
  for (int i = 1; i <= k; ++i) d.elements.emplace_back(i, 1);
  for (int i = 1; i <= k; ++i) d.elements.emplace_back(k + i, 2);
  d.elements.emplace_back(2 * k + 1, 3);
  for (int i = 1; i <= k; ++i) {
    d.covers.emplace_back(0, i);
    d.covers.emplace_back(i, k + i);
    d.covers.emplace_back(i % k + 1, k + i);
    d.covers.emplace_back(k + i, 2 * k + 1);
  }
  d.bottom = 0;
  d.top = 2 * k + 1;
  return validate(d);
}

inline GradedPoset build_boolean2() {
  PosetDescription d;
  d.elements = {{0, 0}, {1, 1}, {2, 1}, {3, 2}};
  d.covers = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  d.bottom = 0;
  d.top = 3;
  return validate(d);
}

/// C_k for k >= 3; B2*B2 (cd-index c^2) stands in for the degenerate C_2.
inline GradedPoset cycle_or_square(int k) {
  if (k == 2) return join(build_boolean2(), build_boolean2());
  if (k < 2) throw Error(ErrorCode::DegenerateCycle, "cycle length below 2 has no substitute");
  return build_cycle_poset(k);
}

inline std::string cycle_name(int k) { return k == 2 ? "B2*B2" : "C" + std::to_string(k); }

/// A constructed poset with its addressable labels and the ordered build steps.
struct Construction {
  GradedPoset poset;
  std::map<std::string, ElementId> labels;
  std::vector<std::string> trace;
};

namespace detail {

inline std::string label_list(const std::map<std::string, ElementId>& labels) {
  std::string s;
  for (const auto& [k, v] : labels) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

/// Applies unzip_k on labelled targets and logs it.
inline void unzip_step(Construction& c, const std::string& upper, const std::string& lower, int k) {
  const ElementId x = c.labels.at(upper), y = c.labels.at(lower);
  std::string line = "unzip (" + upper + "=" + std::to_string(x) + ", " + lower + "=" + std::to_string(y) + ") x" +
                     std::to_string(k);
  if (k > 0) {
    auto out = unzip_k(c.poset, x, y, k);
    c.poset = std::move(out.poset);
    line += " created";
    for (const auto& [xn, yn] : out.created) line += " (" + std::to_string(xn) + "," + std::to_string(yn) + ")";
  }
  c.trace.push_back(std::move(line));
}

/// Labels of B2*C_k*B2: rho, pi the smallest atom/coatom side elements; tau_i the C_k vertices;
/// sigma_i the C_k edges.
inline Construction labelled_seed(int k) {
  Construction c{join(join(build_boolean2(), build_cycle_poset(k)), build_boolean2()), {}, {}};
  c.trace.push_back("join B2 * C" + std::to_string(k) + " * B2");
  const GradedPoset& p = c.poset;
  c.labels["rho"] = p.at_rank(1).front();
  c.labels["pi"] = p.at_rank(4).front();
  const auto taus = p.at_rank(2);
  for (int i = 0; i < k; ++i) c.labels["tau" + std::to_string(i + 1)] = taus[static_cast<std::size_t>(i)];
  for (ElementId s : p.at_rank(3)) {
    const auto below = p.lower_covers(s);
    if (k == 3) {
      // sigma_i covers every tau_j with j != i.
      for (int i = 0; i < 3; ++i)
        if (!std::binary_search(below.begin(), below.end(), taus[static_cast<std::size_t>(i)]))
          c.labels["sigma" + std::to_string(i + 1)] = s;
    } else {
      // sigma_i covers tau_i and tau_{i+1 mod k}.
      for (int i = 0; i < k; ++i) {
        std::vector<ElementId> want{taus[static_cast<std::size_t>(i)], taus[static_cast<std::size_t>((i + 1) % k)]};
        std::sort(want.begin(), want.end());
        if (below == want) c.labels["sigma" + std::to_string(i + 1)] = s;
      }
    }
  }
  c.trace.push_back("labels " + label_list(c.labels));
  return c;
}

}  // namespace detail

/// B2 * C3 * B2 with labels rho, tau1..3, sigma1..3, pi.
inline Construction seed_case_ii() { return detail::labelled_seed(3); }
/// B2 * C4 * B2 with labels rho, tau1..4, sigma1..4, pi.
inline Construction seed_case_iii() { return detail::labelled_seed(4); }

// ---- rank-5 cd-indices -------------------------------------------------------

struct CaseWitness {
  BigInt b1, b2, b3, c1, c2, c3;
  friend bool operator==(const CaseWitness&, const CaseWitness&) = default;
};

enum class Verdict { Infeasible, CaseI, CaseII, CaseIII };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Infeasible: return "infeasible";
    case Verdict::CaseI: return "CaseI";
    case Verdict::CaseII: return "CaseII";
    case Verdict::CaseIII: return "CaseIII";
  }
  return "?";
}

struct Feasibility {
  Verdict verdict = Verdict::Infeasible;
  std::optional<CaseWitness> witness;
  Rank5Coeffs target;
  bool feasible() const { return verdict != Verdict::Infeasible; }
};

/// First witness in lexicographic (b1,b2,b3,c1,c2,c3) order, parts bounded by alpha1 resp. alpha3.
inline std::optional<CaseWitness> find_case_ii_witness(const Rank5Coeffs& t) {
  if (t.a1 < 0 || t.a3 < 0 || t.a13 < 0) return std::nullopt;
  const BigInt need = t.a1 * t.a3 - t.a13;
  if (need < 0) return std::nullopt;
  for (BigInt b1 = 0; b1 <= t.a1; ++b1)
    for (BigInt b2 = 0; b1 + b2 <= t.a1; ++b2) {
      const BigInt b3 = t.a1 - b1 - b2;
      for (BigInt c1 = 0; c1 <= t.a3; ++c1)
        for (BigInt c2 = 0; c1 + c2 <= t.a3; ++c2) {
          const BigInt c3 = t.a3 - c1 - c2;
          if (b1 * c1 + b2 * c2 + b3 * c3 == need) return CaseWitness{b1, b2, b3, c1, c2, c3};
        }
    }
  return std::nullopt;
}

inline Feasibility feasible_rank5_cd(const Rank5Coeffs& t) {
  Feasibility f;
  f.target = t;
  if (t.a1 < 0 || t.a2 < 0 || t.a3 < 0 || t.a13 < 0) return f;
  if (t.a2 == 0) {
    if (t.a13 == t.a1 * t.a3) f.verdict = Verdict::CaseI;
  } else if (t.a2 == 1) {
    f.witness = find_case_ii_witness(t);
    if (f.witness) f.verdict = Verdict::CaseII;
  } else if (t.a13 <= t.a1 * t.a3) {
    f.verdict = Verdict::CaseIII;
  }
  return f;
}

namespace detail {

inline int small(const BigInt& v, const char* what) {
  if (v < 0 || v > 1'000'000) throw Error(ErrorCode::InvalidInput, std::string(what) + " out of supported range");
  return v.convert_to<int>();
}

}  // namespace detail

inline Construction realize_rank5_cd_traced(const Rank5Coeffs& t) {
  const Feasibility f = feasible_rank5_cd(t);
  if (!f.feasible()) throw Error(ErrorCode::InfeasibleTarget, "no Gorenstein* poset of rank 5 has this cd-index");
  const int a1 = detail::small(t.a1, "alpha1"), a2 = detail::small(t.a2, "alpha2");
  const int a3 = detail::small(t.a3, "alpha3"), a13 = detail::small(t.a13, "alpha13");

  if (f.verdict == Verdict::CaseI) {
    Construction c{join(cycle_or_square(a1 + 2), cycle_or_square(a3 + 2)), {}, {}};
    c.trace.push_back("case I: join " + cycle_name(a1 + 2) + " * " + cycle_name(a3 + 2));
    return c;
  }

  if (f.verdict == Verdict::CaseII) {
    Construction c = detail::labelled_seed(3);
    const CaseWitness& w = *f.witness;
    c.trace.insert(c.trace.begin(), "case II: witness b=(" + w.b1.str() + "," + w.b2.str() + "," + w.b3.str() +
                                        ") c=(" + w.c1.str() + "," + w.c2.str() + "," + w.c3.str() + ")");
    const BigInt* bs[] = {&w.b1, &w.b2, &w.b3};
    const BigInt* cs[] = {&w.c1, &w.c2, &w.c3};
    for (int i = 0; i < 3; ++i)
      detail::unzip_step(c, "tau" + std::to_string(i + 1), "rho", detail::small(*bs[i], "b"));
    for (int i = 0; i < 3; ++i)
      detail::unzip_step(c, "pi", "sigma" + std::to_string(i + 1), detail::small(*cs[i], "c"));
    return c;
  }

  Construction c = detail::labelled_seed(4);
  if (a1 == 0) {
    c.trace.insert(c.trace.begin(), "case III.1");
    detail::unzip_step(c, "pi", "sigma1", a3);
  } else if (a3 == 0) {
    // Here alpha13 = 0; the order dual of Case III.1.
    c.trace.insert(c.trace.begin(), "case III.1*");
    detail::unzip_step(c, "tau1", "rho", a1);
  } else if (a13 <= a1) {
    c.trace.insert(c.trace.begin(), "case III.2");
    detail::unzip_step(c, "tau1", "rho", a13);
    detail::unzip_step(c, "tau4", "rho", a1 - a13);
    detail::unzip_step(c, "pi", "sigma1", 1);
    detail::unzip_step(c, "pi", "sigma2", a3 - 1);
  } else {
    const int beta = (a13 + a1 - 1) / a1;
    const int p = a1 * beta - a13;
    c.trace.insert(c.trace.begin(), "case III.3: beta=" + std::to_string(beta) + " p=" + std::to_string(p));
    detail::unzip_step(c, "tau1", "rho", a1 - p);
    detail::unzip_step(c, "tau2", "rho", p);
    detail::unzip_step(c, "pi", "sigma1", beta - 1);
    detail::unzip_step(c, "pi", "sigma3", a3 - beta);
    detail::unzip_step(c, "pi", "sigma4", 1);
  }
  detail::unzip_step(c, "sigma1", "tau1", a2 - 2);
  return c;
}

inline GradedPoset realize_rank5_cd(const Rank5Coeffs& t) { return realize_rank5_cd_traced(t).poset; }

// ---- rank-5 and rank-6 d-vectors ----------------------------------------------

/// a + b = x and ab = y with the smallest such a.
inline std::optional<std::pair<BigInt, BigInt>> exact_product_split(const BigInt& x, const BigInt& y) {
  if (x < 0 || y < 0) return std::nullopt;
  for (BigInt a = 0; 2 * a <= x; ++a)
    if (a * (x - a) == y) return std::make_pair(a, x - a);
  return std::nullopt;
}

struct DFeasibility {
  bool feasible = false;
  std::optional<std::pair<BigInt, BigInt>> product;  // (a, b) with a+b=x, ab=y
};

inline DFeasibility feasible_rank5_d(const BigInt& x, const BigInt& y) {
  DFeasibility f;
  if (x < 0 || y < 0) return f;
  f.product = exact_product_split(x, y);
  f.feasible = 4 * y <= (x - 1) * (x - 1) || f.product.has_value();
  return f;
}

inline bool feasible_rank6_d(const BigInt& x, const BigInt& y) { return x >= 0 && y >= 0 && 4 * y <= x * x; }

inline Construction realize_rank5_d_traced(const BigInt& x, const BigInt& y) {
  const DFeasibility f = feasible_rank5_d(x, y);
  if (!f.feasible) throw Error(ErrorCode::InfeasibleTarget, "no Gorenstein* poset of rank 5 has this d-vector");
  if (f.product) {
    const int a = detail::small(f.product->first, "a"), b = detail::small(f.product->second, "b");
    Construction c{join(cycle_or_square(a + 2), cycle_or_square(b + 2)), {}, {}};
    c.trace.push_back("d-vector product split a=" + std::to_string(a) + " b=" + std::to_string(b) + ": join " +
                      cycle_name(a + 2) + " * " + cycle_name(b + 2));
    return c;
  }
  // Here x >= 2 and 0 < y <= (x-1)^2/4.
  for (BigInt a = 1; a < x; ++a) {
    const BigInt b = (y + a - 1) / a;
    if (a + b <= x - 1 && a * (b - 1) < y && y <= a * b) {
      Construction c = realize_rank5_cd_traced({a, x - a - b, b, y});
      c.trace.insert(c.trace.begin(), "d-vector split a=" + a.str() + " b=" + b.str() + " -> alpha=(" + a.str() +
                                          "," + BigInt(x - a - b).str() + "," + b.str() + "," + y.str() + ")");
      return c;
    }
  }
  throw std::logic_error("rank-5 d-vector split not found");
}

inline GradedPoset realize_rank5_d(const BigInt& x, const BigInt& y) { return realize_rank5_d_traced(x, y).poset; }

inline Construction realize_rank6_d_traced(const BigInt& x, const BigInt& y) {
  if (!feasible_rank6_d(x, y)) throw Error(ErrorCode::InfeasibleTarget, "no Gorenstein* poset of rank 6 has this d-vector");
  if (4 * y <= (x - 1) * (x - 1) || exact_product_split(x, y)) {
    Construction c = realize_rank5_d_traced(x, y);
    c.poset = join(c.poset, build_boolean2());
    c.trace.push_back("join * B2");
    return c;
  }
  for (BigInt a = 1; a < x; ++a) {
    const BigInt b = x - a;
    if (!(a * (b - 1) < y && y <= a * b)) continue;
    const int ai = detail::small(a, "a"), bi = detail::small(b, "b");
    const int r = detail::small(a * b - y, "r");
    Construction c{join(join(cycle_or_square(ai - r + 2), build_boolean2()), cycle_or_square(bi + 1)), {}, {}};
    c.trace.push_back("rank-6 split a=" + std::to_string(ai) + " b=" + std::to_string(bi) + " r=" + std::to_string(r) +
                      ": join " + cycle_name(ai - r + 2) + " * B2 * " + cycle_name(bi + 1));
    const GradedPoset& p = c.poset;
    const auto atoms = p.at_rank(3);
    c.labels["rho"] = p.at_rank(2).front();
    c.labels["sigma"] = atoms.at(0);
    c.labels["tau"] = atoms.at(1);
    c.labels["pi"] = p.at_rank(4).front();
    c.trace.push_back("labels " + detail::label_list(c.labels));
    detail::unzip_step(c, "sigma", "rho", r);
    detail::unzip_step(c, "pi", "tau", 1);
    return c;
  }
  throw std::logic_error("rank-6 d-vector split not found");
}

inline GradedPoset realize_rank6_d(const BigInt& x, const BigInt& y) { return realize_rank6_d_traced(x, y).poset; }

// ---- flag 4-spheres ----------------------------------------------------------

inline bool feasible_gamma4(const BigInt& x, const BigInt& y) { return x >= 0 && y >= 0 && 4 * y <= x * x; }

struct ComplexConstruction {
  SimplicialComplex complex;
  std::vector<std::string> trace;
};

/// Flag 4-sphere with gamma-vector (1, x, y), built as a join of two cycles and a 0-sphere
/// followed by edge subdivisions whose links have known gamma-vectors.
inline ComplexConstruction build_flag_gamma4_traced(const BigInt& xb, const BigInt& yb) {
  if (!feasible_gamma4(xb, yb)) throw Error(ErrorCode::InfeasibleTarget, "gamma-vector violates 4y <= x^2");
  const int x = detail::small(xb, "x"), y = detail::small(yb, "y");
  int a = 0, b = 0, r = 0, m1 = 0, m2 = 4;
  ComplexConstruction out;
  if (y == 0) {
    m1 = x + 4;
    out.trace.push_back("y=0: join cycle" + std::to_string(m1) + " * S0 * cycle4");
  } else {
    bool found = false;
    for (int s = x; s >= 2 && !found; --s)
      for (int aa = 1; aa < s && !found; ++aa) {
        const int bb = s - aa;
        if (aa * (bb - 1) < y && y <= aa * bb) {
          a = aa;
          b = bb;
          found = true;
        }
      }
    if (!found) throw std::logic_error("gamma split not found");
    r = a * b - y;
    m1 = a - r + 4;
    m2 = b + 3;
    out.trace.push_back("split a=" + std::to_string(a) + " b=" + std::to_string(b) + " r=" + std::to_string(r) +
                        ": join cycle" + std::to_string(m1) + " * S0 * cycle" + std::to_string(m2));
  }

  // Vertices: first cycle 0..m1-1, poles N=m1 and S=m1+1, second cycle m1+2..m1+m2+1.
  const Vertex north = m1, south = m1 + 1, base2 = m1 + 2;
  std::vector<Face> facets;
  for (int i = 0; i < m1; ++i)
    for (Vertex pole : {north, south})
      for (int j = 0; j < m2; ++j)
        facets.push_back({i, (i + 1) % m1, pole, base2 + j, base2 + (j + 1) % m2});
  SimplicialComplex k = SimplicialComplex::from_faces(std::move(facets));
  Vertex next = base2 + m2;

  auto subdivide_chain = [&](Vertex fixed, Vertex other, int times, const std::string& what) {
    std::string line = "subdivide " + what + " {" + std::to_string(fixed) + "," + std::to_string(other) + "} x" +
                       std::to_string(times) + " new";
    for (int step = 0; step < times; ++step) {
      k = edge_subdivision(k, fixed, other, next);
      line += " " + std::to_string(next);
      other = next++;
    }
    out.trace.push_back(std::move(line));
  };

  if (y > 0) {
    subdivide_chain(north, 0, r, "pole-edge");
    subdivide_chain(south, base2, 1, "pole-edge");
    // The cross edge has an octahedral link, so each step raises gamma_1 only.
    if (x > a + b) subdivide_chain(2, base2 + 2, x - a - b, "cross-edge");
  }
  out.complex = std::move(k);
  return out;
}

inline SimplicialComplex build_flag_gamma4(const BigInt& x, const BigInt& y) {
  return build_flag_gamma4_traced(x, y).complex;
}

}  // namespace cdgor
