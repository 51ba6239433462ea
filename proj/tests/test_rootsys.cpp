#include "doctest.h"

#include "properlie/errors.hpp"
#include "properlie/rootsys.hpp"
#include "testkit.hpp"

using namespace properlie;

namespace {
RationalVector v(std::initializer_list<long> xs) {
  RationalVector out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("type parsing and canonical forms") {
  CHECK(RootSystemType::parse("A2+A1").rank() == 3);
  CHECK(RootSystemType::parse("C2").canonical() == RootSystemType::parse("B2"));
  CHECK(RootSystemType::parse("D3").isomorphic_to(RootSystemType::parse("A3")));
  CHECK(RootSystemType::parse("BC2").name() == "BC2");
  CHECK_THROWS_AS(RootSystemType::parse("E9"), ValidationError);
  CHECK_THROWS_AS(RootSystemType::parse("G3"), ValidationError);
  CHECK_THROWS(RootSystemType::parse("Q1"));
}

TEST_CASE("root counts") {
  const std::vector<std::pair<const char*, std::size_t>> counts = {
      {"A1", 2},  {"A2", 6},   {"A4", 20},  {"B3", 18},  {"C4", 32},  {"D4", 24},  {"G2", 12},
      {"F4", 48}, {"E6", 72},  {"E7", 126}, {"E8", 240}, {"BC1", 4},  {"BC2", 12}, {"A2+A1", 8}};
  for (const auto& [name, n] : counts) {
    CAPTURE(name);
    CHECK(build_root_system(RootSystemType::parse(name)).roots().size() == n);
  }
}

TEST_CASE("Weyl group orders") {
  CHECK(weyl_order(RootSystemType::parse("A2")) == 6);
  CHECK(weyl_order(RootSystemType::parse("F4")) == 1152);
  CHECK(weyl_order(RootSystemType::parse("E7")) == 2903040);
  CHECK(weyl_order(RootSystemType::parse("E8")) == 696729600);
  CHECK(weyl_order(RootSystemType::parse("BC1")) == 2);
  CHECK(weyl_order(RootSystemType::parse("A1+A1")) == 4);
}

TEST_CASE("BC1 roots") {
  const auto rs = build_root_system(RootSystemType::parse("BC1"));
  CHECK(rs.is_root({1}));
  CHECK(rs.is_root({2}));
  CHECK(rs.is_root({-2}));
  CHECK_FALSE(rs.is_root({3}));
}

TEST_CASE("reflections") {
  const auto a1 = build_root_system(RootSystemType::parse("A1"));
  CHECK(reflect(a1, 0, v({1})) == v({-1}));
  const auto a2 = build_root_system(RootSystemType::parse("A2"));
  CHECK(reflect(a2, 0, v({0, 1})) == v({1, 1}));
  const auto w = a2.fundamental_coweight(1);  // orthogonal to alpha_1
  CHECK(reflect(a2, 0, w) == w);
  CHECK_THROWS_AS(reflect(a2, 2, v({1, 0})), std::out_of_range);
  CHECK_THROWS_AS(reflect(a2, -1, v({1, 0})), std::out_of_range);
}

TEST_CASE("longest element") {
  const auto a1 = build_root_system(RootSystemType::parse("A1"));
  CHECK(longest_element(a1).as_matrix() == -RationalMatrix::identity(1));
  const auto e7 = build_root_system(RootSystemType::parse("E7"));
  CHECK(longest_element(e7).as_matrix() == -RationalMatrix::identity(7));
  const auto a2 = build_root_system(RootSystemType::parse("A2"));
  const auto w0 = longest_element(a2);
  CHECK_FALSE(w0.as_matrix() == -RationalMatrix::identity(2));
  CHECK(w0.apply(v({1, 0})) == v({0, -1}));
  CHECK(opposition_involution(a2) == std::vector<int>{1, 0});
  CHECK(w0.word().size() == 3);
}

TEST_CASE("dominant chamber") {
  const auto a2 = build_root_system(RootSystemType::parse("A2"));
  CHECK(dominant_chamber_test(a2, v({0, 0})));
  CHECK(dominant_chamber_test(a2, a2.fundamental_coweight(0) + a2.fundamental_coweight(1)));
  CHECK_FALSE(dominant_chamber_test(a2, v({-1, 0})));
}

TEST_CASE("Weyl elements compose and invert") {
  const auto b3 = build_root_system(RootSystemType::parse("B3"));
  const std::vector<int> word = {0, 1, 2, 1, 0, 2};
  const auto w = WeylElement::from_word(b3, word);
  CHECK(w.then(w.inverse(b3)).is_identity());
  CHECK(w.word() == word);
}

TEST_CASE("generated group matches the order formula for all types of rank <= 4") {
  for (const auto& t : testkit::types_up_to_rank(4, true)) {
    CAPTURE(t.name());
    const auto rs = build_root_system(t);
    CHECK(testkit::weyl_group_bruteforce(rs.gram()).size() == weyl_order(rs));
  }
}

TEST_CASE("property: reflection isometry") {
  std::mt19937_64 rng(11);
  const auto bad = testkit::prop_reflection_isometry(rng);
  CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad.front()));
}

TEST_CASE("property: w0 involution") {
  const auto bad = testkit::prop_w0_involution();
  CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad.front()));
}
