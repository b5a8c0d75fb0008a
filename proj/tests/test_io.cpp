#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cdgor;
using namespace fixture;

TEST(PosetJson, RoundTripIsByteExact) {
  std::vector<GradedPoset> cases = block_set();
  cases.push_back(realize_rank5_cd({2, 1, 2, 2}));
  for (const auto& p : cases) {
    const std::string text = io::poset_to_json(p);
    const GradedPoset back = io::poset_from_json(text);
    EXPECT_EQ(back, p);
    EXPECT_EQ(io::poset_to_json(back), text);
  }
}

TEST(PosetJson, LayoutOfBooleanAlgebra) {
  const std::string text = io::poset_to_json(b2());
  EXPECT_EQ(text.rfind("{\n  \"elements\": [\n", 0), 0u);
  EXPECT_NE(text.find("\"bottom\": 0"), std::string::npos);
  EXPECT_NE(text.find("\"top\": 3"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(ComplexJson, RoundTripIsByteExact) {
  for (const auto& d : {cycle_complex(5), cross_polytope(3), rp2(), build_flag_gamma4(2, 1)}) {
    const std::string text = io::complex_to_json(d);
    const SimplicialComplex back = io::complex_from_json(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(io::complex_to_json(back), text);
  }
}

TEST(Json, MalformedTextIsParseError) {
  for (const char* bad : {"", "{", "[1, 2", "{\"elements\": 3}x"}) {
    try {
      io::document_from_json(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Json, WrongShapesAreRejected) {
  EXPECT_THROW(io::document_from_json("{\"foo\": 1}"), Error);
  EXPECT_THROW(io::poset_from_json("{\"elements\": [{\"id\": 0}], \"covers\": [], \"bottom\": 0, \"top\": 0}"), Error);
  // Vertex list disagrees with the facets.
  EXPECT_THROW(io::complex_from_json("{\"vertices\": [0, 1, 2], \"facets\": [[0, 1]]}"), Error);
}

TEST(Json, InvalidPosetKeepsValidationCode) {
  const char* text =
      "{\"elements\": [{\"id\": 0, \"rank\": 0}, {\"id\": 1, \"rank\": 1}, {\"id\": 2, \"rank\": 3}],"
      " \"covers\": [[0, 1], [1, 2]], \"bottom\": 0, \"top\": 2}";
  try {
    io::poset_from_json(text);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGraded);
  }
}

TEST(Json, DocumentKindDetection) {
  const io::Document p = io::document_from_json(io::poset_to_json(cyc(4)));
  ASSERT_TRUE(std::holds_alternative<GradedPoset>(p));
  EXPECT_EQ(std::get<GradedPoset>(p), cyc(4));
  const io::Document d = io::document_from_json(io::complex_to_json(cycle_complex(4)));
  ASSERT_TRUE(std::holds_alternative<SimplicialComplex>(d));
  EXPECT_EQ(std::get<SimplicialComplex>(d), cycle_complex(4));
}

TEST(Files, WriteThenRead) {
  const std::string path = ::testing::TempDir() + "cdgor_io_roundtrip.json";
  const std::string text = io::poset_to_json(cyc(3));
  io::write_file(path, text);
  EXPECT_EQ(io::read_file(path), text);
  EXPECT_THROW(io::read_file(path + ".missing"), Error);
}
