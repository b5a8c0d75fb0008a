#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cdgor;
using namespace fixture;

namespace {

AbPolynomial ab(int n, std::initializer_list<std::pair<const char*, long>> terms) {
  AbPolynomial p{n, {}};
  for (const auto& [w, k] : terms) p.coeffs[w] = k;
  return p;
}

CdPolynomial cd(const char* text) { return parse_cd(text); }

}  // namespace

TEST(FlagF, CycleFour) {
  const FlagVector f = flag_f(cyc(4));
  EXPECT_EQ(f.at(0), 1);
  EXPECT_EQ(f.at(rank_mask({1})), 4);
  EXPECT_EQ(f.at(rank_mask({2})), 4);
  EXPECT_EQ(f.at(rank_mask({1, 2})), 8);
}

TEST(FlagF, MatchesChainEnumerationOracle) {
  std::vector<GradedPoset> cases = block_set();
  cases.push_back(realize_rank5_cd({2, 3, 1, 1}));
  cases.push_back(realize_rank6_d(5, 6));
  for (const auto& p : cases) {
    const FlagVector f = flag_f(p);
    const auto counts = oracle::flag_f_by_chains(p);
    for (std::uint32_t m = 0; m < f.values.size(); ++m) {
      BigInt expected = 0;
      for (const auto& [s, c] : counts)
        if (oracle::to_mask(s) == m) expected = c;
      EXPECT_EQ(f.values[m], expected) << "mask " << m;
    }
  }
}

TEST(FlagF, EdgeFormulaOnSeed) {
  const FlagVector f = flag_f(b2_c_b2(3));
  EXPECT_EQ(f.at(rank_mask({2, 3})), 6);
}

TEST(FlagH, ChainPosetAndCycleFour) {
  const FlagVector h_chain = flag_h(flag_f(chain(4)));
  EXPECT_EQ(h_chain.at(0), 1);
  for (std::uint32_t m = 1; m < h_chain.values.size(); ++m) EXPECT_EQ(h_chain.at(m), 0);
  const FlagVector h = flag_h(flag_f(cyc(4)));
  EXPECT_EQ(h.at(rank_mask({1})), 3);
  EXPECT_EQ(h.at(rank_mask({2})), 3);
  EXPECT_EQ(h.at(rank_mask({1, 2})), 1);
}

TEST(FlagH, InverseRoundTrip) {
  for (const auto& p : block_set()) {
    const FlagVector f = flag_f(p);
    EXPECT_EQ(flag_f_from_h(flag_h(f)), f);
  }
}

TEST(AbIndex, SmallExamples) {
  EXPECT_EQ(ab_index(b2()), ab(1, {{"a", 1}, {"b", 1}}));
  EXPECT_EQ(ab_index(cyc(4)), ab(2, {{"aa", 1}, {"ab", 3}, {"ba", 3}, {"bb", 1}}));
  EXPECT_EQ(ab_index(join(b2(), b2())), ab(2, {{"aa", 1}, {"ab", 1}, {"ba", 1}, {"bb", 1}}));
}

TEST(CdRewrite, Examples) {
  EXPECT_EQ(cd_rewrite(ab(2, {{"aa", 1}, {"ab", 3}, {"ba", 3}, {"bb", 1}})), cd("c^2 + 2*d"));
  EXPECT_EQ(cd_rewrite(ab(1, {{"a", 1}, {"b", 1}})), cd("c"));
  EXPECT_EQ(cd_rewrite(ab_index(b2_c_b2(3))), cd("c^4 + cdc"));
}

TEST(CdRewrite, RejectsNonEulerian) {
  try {
    cd_rewrite(ab_index(chain(3)));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCdExpressible);
  }
}

TEST(CdExpand, Examples) {
  EXPECT_EQ(cd_expand(cd("c^2")), ab(2, {{"aa", 1}, {"ab", 1}, {"ba", 1}, {"bb", 1}}));
  EXPECT_EQ(cd_expand(cd("d")), ab(2, {{"ab", 1}, {"ba", 1}}));
  EXPECT_EQ(cd_expand(cd("c^4 + cdc")), ab_index(b2_c_b2(3)));
}

TEST(CdRewrite, InvertsExpandOnRandomPolynomials) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> coeff(0, 9), deg(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = deg(rng);
    CdPolynomial phi(n);
    // All cd-words of weight n.
    std::vector<std::string> words{""};
    std::vector<std::string> done;
    while (!words.empty()) {
      std::vector<std::string> next;
      for (const auto& w : words) {
        const int wt = CdPolynomial::weight(w);
        if (wt == n) done.push_back(w);
        if (wt + 1 <= n) next.push_back(w + "c");
        if (wt + 2 <= n) next.push_back(w + "d");
      }
      words = std::move(next);
    }
    for (const auto& w : done) phi.add(w, coeff(rng));
    EXPECT_EQ(cd_rewrite(cd_expand(phi)), phi);
  }
}

TEST(CdIndex, Cycles) {
  for (int k = 3; k <= 8; ++k) {
    CdPolynomial expected = cd("c^2");
    expected.add("d", k - 2);
    EXPECT_EQ(cd_index(cyc(k)), expected);
  }
}

TEST(CdIndex, JoinMultiplies) {
  for (const auto& p : {b2(), cyc(3), cyc(5)})
    for (const auto& q : {b2(), cyc(4), join(b2(), cyc(3))}) EXPECT_EQ(cd_index(join(p, q)), cd_index(p) * cd_index(q));
}

TEST(CdIndex, SeedOfCaseThree) { EXPECT_EQ(cd_index(b2_c_b2(4)), cd("c^4 + 2*cdc")); }

TEST(CdIndex, UnzipIdentity) {
  const GradedPoset p = b2_c_b2(3);
  for (const auto& [y, x] : p.cover_pairs()) {
    if (y == p.bottom() || x == p.top()) continue;
    const Unzipped u = unzip(p, x, y);
    const CdPolynomial term =
        cd_index(interval(p, p.bottom(), y).poset) * cd_d() * cd_index(interval(p, x, p.top()).poset);
    EXPECT_EQ(cd_index(u.poset), cd_index(p) + term);
  }
  const Construction seed = seed_case_ii();
  const Unzipped u = unzip(seed.poset, seed.labels.at("tau1"), seed.labels.at("rho"));
  EXPECT_EQ(cd_index(u.poset) - cd_index(seed.poset), cd("dc^2"));
}

TEST(DVector, Examples) {
  EXPECT_EQ(d_vector(cd("c^4 + 2*dc^2 + 3*cdc + 5*c^2d + 7*d^2")), (DVector{{1, 10, 7}}));
  EXPECT_EQ(d_vector(cd("c^6")), (DVector{{1, 0, 0, 0}}));
  for (const auto& p : {cyc(5), b2_c_b2(4), join(cyc(3), cyc(4))})
    EXPECT_EQ(d_vector(cd_index(join(p, b2()))), d_vector(cd_index(p)));
}

TEST(HFromD, BinomialRowAndOracle) {
  EXPECT_EQ(h_from_d(DVector{{1, 0}}, 2).entries, (std::vector<BigInt>{1, 2, 1}));
  // (1+x)^4 + 4x(1+x)^2
  EXPECT_EQ(h_from_d(DVector{{1, 2, 0}}, 4).entries, (std::vector<BigInt>{1, 8, 14, 8, 1}));
  EXPECT_EQ(h_from_d(DVector{{1, 2, 0}}, 4).entries, oracle::h_from_d({1, 2, 0}, 4));
  EXPECT_EQ(h_from_d(DVector{{1, 3, 2}}, 5).entries, oracle::h_from_d({1, 3, 2}, 5));
}

TEST(HFromD, MatchesOrderComplex) {
  std::vector<GradedPoset> cases = block_set();
  cases.push_back(join(join(cyc(4), b2()), b2()));
  cases.push_back(realize_rank5_cd({1, 2, 2, 1}));
  for (const auto& p : cases)
    EXPECT_EQ(h_from_d(d_vector(cd_index(p)), p.n()), h_vector(order_complex(p)));
}

TEST(Coeffs, RankFiveAndSix) {
  EXPECT_EQ(rank5_coeffs(cd("c^4 + cdc")), (Rank5Coeffs{0, 1, 0, 0}));
  EXPECT_EQ(rank5_coeffs(cd_index(join(cyc(3), cyc(3)))), (Rank5Coeffs{1, 0, 1, 1}));
  EXPECT_EQ(rank6_coeffs(cd("c^5")), (Rank6Coeffs{0, 0, 0, 0, 0, 0, 0}));
  try {
    rank5_coeffs(cd("c^5"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongDegree);
  }
  try {
    rank5_coeffs(cd("2*c^4"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LeadingCoeffNotOne);
  }
}

TEST(CdText, CanonicalOrderAndRoundTrip) {
  const CdPolynomial phi = cd("d^2 + 3*c^2d + cdc + 2*dc^2 + c^4");
  EXPECT_EQ(to_string(phi), "1*c^4 + 2*dc^2 + 1*cdc + 3*c^2d + 1*d^2");
  EXPECT_EQ(parse_cd(to_string(phi)), phi);
  EXPECT_EQ(to_string(cd("c^2 - 2*d")), "1*c^2 - 2*d");
  EXPECT_EQ(to_string(CdPolynomial(3)), "0");
  EXPECT_EQ(to_string(cd("-c")), "-1*c");
  EXPECT_EQ(to_string(cd("dcd + d^2c + cd^2 + c^5")), "1*c^5 + 1*d^2c + 1*dcd + 1*cd^2");
  EXPECT_EQ(parse_cd("7"), CdPolynomial::monomial("", 7));
  for (const char* bad : {"", "c +", "2**c", "x", "c^0", "c + d d"}) EXPECT_THROW(parse_cd(bad), Error) << bad;
}
