// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cdgor;
using namespace fixture;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::size_t checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) detail << "first failure: " << what;
    ok = ok && cond;
  }
};

using Criterion = std::function<void(Outcome&)>;

std::string coeffs_str(const Rank5Coeffs& t) {
  std::ostringstream os;
  os << "(" << t.a1 << "," << t.a2 << "," << t.a3 << "," << t.a13 << ")";
  return os.str();
}

std::string xy_str(int x, int y) { return "(1," + std::to_string(x) + "," + std::to_string(y) + ")"; }

/// Block set restricted to at most 60 elements.
std::vector<GradedPoset> small_blocks() {
  std::vector<GradedPoset> out;
  for (auto& p : block_set())
    if (p.size() <= 60) out.push_back(std::move(p));
  return out;
}

template <class Fn>
void for_each_interior_unzip(Fn&& fn) {
  for (const auto& p : small_blocks())
    for (const auto& [y, x] : p.cover_pairs()) {
      if (y == p.bottom() || x == p.top()) continue;
      fn(p, x, y);
    }
}

/// Three-part compositions of a nonnegative integer, by filtering the full cube.
std::vector<std::array<int, 3>> compositions(int total) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i <= total; ++i)
    for (int j = 0; j <= total; ++j)
      for (int k = 0; k <= total; ++k)
        if (i + j + k == total) out.push_back({i, j, k});
  return out;
}

Verdict expected_verdict(int a1, int a2, int a3, int a13) {
  if (a2 == 0) return a13 == a1 * a3 ? Verdict::CaseI : Verdict::Infeasible;
  if (a2 == 1) {
    for (const auto& b : compositions(a1))
      for (const auto& c : compositions(a3))
        if (b[0] * c[0] + b[1] * c[1] + b[2] * c[2] == a1 * a3 - a13) return Verdict::CaseII;
    return Verdict::Infeasible;
  }
  return a13 <= a1 * a3 ? Verdict::CaseIII : Verdict::Infeasible;
}

bool rank5_d_expected(int x, int y) {
  if (4 * y <= (x - 1) * (x - 1)) return true;
  for (int a = 0; a <= x; ++a)
    if (a * (x - a) == y) return true;
  return false;
}

/// Realized posets reused by later criteria.
std::vector<GradedPoset> g_rank5_cd, g_rank5_d, g_rank6_d;
std::vector<std::pair<int, int>> g_rank6_targets;

void check_gorenstein_vectors(Outcome& o, const GradedPoset& p, const std::string& tag) {
  const CdPolynomial phi = cd_index(p);
  const HVector h = h_vector(order_complex(p));
  o.expect(is_symmetric(h), tag + " h symmetric");
  o.expect(h == h_from_d(d_vector(phi), p.n()), tag + " h from d");
  o.expect(phi.coeff(std::string(static_cast<std::size_t>(p.n()), 'c')) == 1, tag + " leading c^n");
  for (const auto& [w, k] : phi.coeffs()) o.expect(k >= 0, tag + " cd coefficient of " + w);
}

void criterion1(Outcome& o) {
  for (int k = 3; k <= 10; ++k) {
    CdPolynomial expected = parse_cd("c^2");
    expected.add("d", k - 2);
    o.expect(cd_index(cyc(k)) == expected, "C_" + std::to_string(k));
  }
}

void criterion2(Outcome& o) {
  const auto blocks = block_set();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      o.expect(cd_index(join(blocks[i], blocks[j])) == cd_index(blocks[i]) * cd_index(blocks[j]),
               "pair " + std::to_string(i) + "," + std::to_string(j));
}

void criterion3(Outcome& o) {
  for_each_interior_unzip([&](const GradedPoset& p, ElementId x, ElementId y) {
    const Unzipped u = unzip(p, x, y);
    const CdPolynomial term =
        cd_index(interval(p, p.bottom(), y).poset) * cd_d() * cd_index(interval(p, x, p.top()).poset);
    o.expect(cd_index(u.poset) == cd_index(p) + term, "unzip (" + std::to_string(x) + "," + std::to_string(y) + ")");
  });
}

void criterion4(Outcome& o) {
  for_each_interior_unzip([&](const GradedPoset& p, ElementId x, ElementId y) {
    const Unzipped u = unzip(p, x, y);
    const GradedPoset back = zip(u.poset, u.upper_new, u.lower_new, y);
    o.expect(is_isomorphic(back, p), "zip round trip (" + std::to_string(x) + "," + std::to_string(y) + ")");
  });
}

void criterion5(Outcome& o) {
  // Labeled equality implies isomorphism.
  for_each_interior_unzip([&](const GradedPoset& p, ElementId x, ElementId y) {
    const Unzipped u = unzip(p, x, y);
    const auto once = edge_subdivision(order_complex(p), x, y, u.upper_new);
    const auto twice = edge_subdivision(once, x, u.upper_new, u.lower_new);
    o.expect(order_complex(u.poset) == twice, "subdivision (" + std::to_string(x) + "," + std::to_string(y) + ")");
  });
}

void criterion6(Outcome& o) {
  for (int a1 = 0; a1 <= 4; ++a1)
    for (int a2 = 0; a2 <= 4; ++a2)
      for (int a3 = 0; a3 <= 4; ++a3)
        for (int a13 = 0; a13 <= a1 * a3 + 2; ++a13) {
          const Rank5Coeffs t{a1, a2, a3, a13};
          const std::string tag = coeffs_str(t);
          const Feasibility f = feasible_rank5_cd(t);
          o.expect(f.verdict == expected_verdict(a1, a2, a3, a13), tag + " verdict " + to_string(f.verdict));
          if (!f.feasible()) continue;
          const GradedPoset p = realize_rank5_cd(t);
          o.expect(p.rank() == 5 && is_thin(p), tag + " thin rank 5");
          o.expect(cd_index(p) == from_rank5(t), tag + " cd-index");
          o.expect(flag_f(p).at(rank_mask({2, 3})) == a13 + 2 * (a1 + a2 + a3) + 4, tag + " f_{2,3}");
          g_rank5_cd.push_back(p);
        }
}

void criterion7(Outcome& o) {
  for (int a1 = 0; a1 <= 2; ++a1)
    for (int a2 = 0; a2 <= 2; ++a2)
      for (int a3 = 0; a3 <= 2; ++a3)
        for (int a13 = 0; a13 <= a1 * a3 + 2; ++a13) {
          const Rank5Coeffs t{a1, a2, a3, a13};
          if (!feasible_rank5_cd(t).feasible()) continue;
          o.expect(is_gorenstein_star(realize_rank5_cd(t), 10'000'000), coeffs_str(t));
        }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 4);
  for (int drawn = 0; drawn < 10;) {
    const int a1 = pick(rng), a2 = pick(rng), a3 = pick(rng);
    const int a13 = std::uniform_int_distribution<int>(0, a1 * a3)(rng);
    const Rank5Coeffs t{a1, a2, a3, a13};
    if (!feasible_rank5_cd(t).feasible()) continue;
    ++drawn;
    o.expect(is_gorenstein_star(realize_rank5_cd(t), 10'000'000), "sample " + coeffs_str(t));
  }
}

void criterion8(Outcome& o) {
  for (int x = 0; x <= 8; ++x)
    for (int y = 0; 4 * y <= x * x + 4; ++y) {
      const std::string tag = xy_str(x, y);
      const bool feasible = feasible_rank5_d(x, y).feasible;
      o.expect(feasible == rank5_d_expected(x, y), tag + " verdict");
      if (!feasible) continue;
      const GradedPoset p = realize_rank5_d(x, y);
      o.expect(p.rank() == 5 && d_vector(cd_index(p)) == DVector{{1, x, y}}, tag + " d-vector");
      g_rank5_d.push_back(p);
    }
}

void criterion9(Outcome& o) {
  for (int x = 0; x <= 6; ++x)
    for (int y = 0; 4 * y <= x * x; ++y) {
      const std::string tag = xy_str(x, y);
      const GradedPoset p = realize_rank6_d(x, y);
      const CdPolynomial phi = cd_index(p);
      o.expect(p.rank() == 6 && d_vector(phi) == DVector{{1, x, y}}, tag + " d-vector");
      const Rank6Coeffs a = rank6_coeffs(phi);
      o.expect(a.a13 <= a.a1 * a.a3, tag + " a13");
      o.expect(a.a14 <= a.a1 * a.a4, tag + " a14");
      o.expect(a.a24 <= a.a2 * a.a4, tag + " a24");
      g_rank6_d.push_back(p);
      g_rank6_targets.emplace_back(x, y);
    }
}

void criterion10(Outcome& o) {
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; 4 * y <= x * x; ++y) {
      const std::string tag = xy_str(x, y);
      const SimplicialComplex k = build_flag_gamma4(x, y);
      o.expect(k.dimension() == 4, tag + " dimension");
      o.expect(is_flag(k), tag + " flag");
      o.expect(gamma_vector(k) == GammaVector{{1, x, y}}, tag + " gamma");
      o.expect(is_homology_sphere(k, 10'000'000), tag + " homology sphere");
    }
  for (std::size_t i = 0; i < g_rank6_d.size(); ++i) {
    const auto [x, y] = g_rank6_targets[i];
    const GammaVector g = gamma_vector(order_complex(g_rank6_d[i]));
    o.expect(g == GammaVector{{1, 2 * x, 4 * y}}, xy_str(x, y) + " gamma = 2^i delta");
  }
  o.expect(!g_rank6_d.empty(), "criterion 9 outputs available");
}

void criterion11(Outcome& o) {
  std::mt19937 rng(1000);
  std::uniform_int_distribution<int> coeff(0, 9), deg(0, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = deg(rng);
    CdPolynomial phi(n);
    std::vector<std::string> frontier{""}, words;
    while (!frontier.empty()) {
      std::vector<std::string> next;
      for (const auto& w : frontier) {
        const int wt = CdPolynomial::weight(w);
        if (wt == n) words.push_back(w);
        if (wt + 1 <= n) next.push_back(w + "c");
        if (wt + 2 <= n) next.push_back(w + "d");
      }
      frontier = std::move(next);
    }
    for (const auto& w : words) phi.add(w, coeff(rng));
    o.expect(cd_rewrite(cd_expand(phi)) == phi, "trial " + std::to_string(trial) + ": " + to_string(phi));
  }
  try {
    cd_rewrite(ab_index(chain(3)));
    o.expect(false, "chain accepted");
  } catch (const Error& e) {
    o.expect(e.code() == ErrorCode::NotCdExpressible, "chain error code");
  }
}

void criterion12(Outcome& o) {
  o.expect(!g_rank5_cd.empty() && !g_rank5_d.empty() && !g_rank6_d.empty(), "realized posets available");
  for (std::size_t i = 0; i < g_rank5_cd.size(); ++i) check_gorenstein_vectors(o, g_rank5_cd[i], "cd#" + std::to_string(i));
  for (std::size_t i = 0; i < g_rank5_d.size(); ++i) check_gorenstein_vectors(o, g_rank5_d[i], "d5#" + std::to_string(i));
  for (std::size_t i = 0; i < g_rank6_d.size(); ++i) check_gorenstein_vectors(o, g_rank6_d[i], "d6#" + std::to_string(i));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"cycle cd-index", criterion1},
      {"join multiplicativity", criterion2},
      {"unzip cd identity", criterion3},
      {"zip round trip", criterion4},
      {"order complex is double edge subdivision", criterion5},
      {"rank-5 cd grid", criterion6},
      {"Gorenstein* certification", criterion7},
      {"rank-5 d-vector grid", criterion8},
      {"rank-6 d-vector grid", criterion9},
      {"flag 4-spheres and gamma = 2^i delta", criterion10},
      {"rewriting soundness", criterion11},
      {"Dehn-Sommerville and nonnegativity", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << o.checks
              << " checks, " << timing << ")";
    if (!o.ok) std::cout << " " << o.detail.str();
    std::cout << std::endl;
    failed += !o.ok;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failed) << "/"
            << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
