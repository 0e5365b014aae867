#include "k3pol/certificate.hpp"
#include "k3pol/error.hpp"
#include "k3pol/json_io.hpp"
#include "k3pol/mukai.hpp"
#include "k3pol/random.hpp"

#include <gtest/gtest.h>

using namespace k3pol;
using nlohmann::json;

TEST(JsonIo, IntegersAreDecimalStrings) {
  EXPECT_EQ(to_json(Integer(-5)), json("-5"));
  const Integer big = parse_integer("-98765432109876543210987654321");
  EXPECT_EQ(integer_from_json(to_json(big)), big);
  EXPECT_EQ(integer_from_json(json(7)), 7);
  EXPECT_EQ(to_json(Rational(-3, 6)), json("-1/2"));
  EXPECT_EQ(rational_from_json(json("4/6")), Rational(2, 3));
}

TEST(JsonIo, RejectsWrongTypes) {
  for (const char* text : {"1.5", "true", "null", "{}", "\"x\""})
    EXPECT_THROW(integer_from_json(parse_json(text)), Error) << text;
  EXPECT_THROW(int_vector_from_json(parse_json("[1, [2]]")), Error);
  EXPECT_THROW(matrix_from_json(parse_json("[[1, 2], [3]]")), Error);
  EXPECT_THROW(lattice_from_json(parse_json(R"({"rank": 3, "gram": [[0,1],[1,0]]})")), Error);
  EXPECT_THROW(lattice_from_json(parse_json(R"({"rank": 2, "gram": [[0,1],[2,0]]})")), Error);
  EXPECT_THROW(parse_json("[1, 2"), Error);
}

TEST(JsonIo, MatricesAndLatticesRoundTrip) {
  random::Engine rng(41);
  for (int t = 0; t < 50; ++t) {
    const auto m = random::matrix(rng, static_cast<std::size_t>(random::uniform(rng, 1, 6)),
                                  static_cast<std::size_t>(random::uniform(rng, 1, 6)), 1000);
    EXPECT_EQ(matrix_from_json(parse_json(to_json(m).dump())), m);
  }
  const Lattice k3 = k3_lattice();
  const json j = to_json(k3);
  EXPECT_EQ(j.at("rank"), 22);
  EXPECT_EQ(lattice_from_json(parse_json(j.dump())).gram(), k3.gram());
  EXPECT_EQ(matrix_from_json(j), k3.gram());
}

TEST(JsonIo, StructuredDocumentsRoundTrip) {
  const auto w = beauville_mukai_vector(10, 3, 2);
  const json doc = to_json(w);
  EXPECT_EQ(doc.at("(v,v)"), json("18"));
  EXPECT_EQ(doc.at("div_alpha"), json("3"));
  EXPECT_EQ(doc.at("div_check"), json("pass"));
  EXPECT_EQ(parse_json(doc.dump()), doc);

  IntVector c(layout::k3n_rank);
  c[layout::u(3)] = 1;
  const auto cert = principality_certificate(2, LatticeVector(k3n_lattice(2), c));
  const json cj = to_json(cert);
  EXPECT_EQ(cj.at("status"), "complete");
  EXPECT_EQ(cj.at("conclusion").at("polarization_type"), json({"1", "1"}));
  for (const auto& s : cj.at("steps")) {
    EXPECT_TRUE(s.contains("step"));
    EXPECT_TRUE(s.contains("claim"));
    EXPECT_TRUE(s.contains("paper_tag"));
    EXPECT_TRUE(s.contains("status"));
  }
  EXPECT_EQ(parse_json(cj.dump()), cj);
}
