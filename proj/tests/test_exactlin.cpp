#include "doctest.h"

#include <random>

#include "properlie/errors.hpp"
#include "properlie/exactlin.hpp"
#include "testkit.hpp"

using namespace properlie;

namespace {
RationalVector vec(std::initializer_list<const char*> xs) {
  RationalVector v;
  for (auto x : xs) v.push_back(parse_rational(x));
  return v;
}
RationalMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<RationalVector> rs;
  for (auto r : rows) rs.push_back(vec(r));
  return RationalMatrix::from_rows(rs, rs.front().size());
}
}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == -4);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("solve") {
  CHECK(*solve(RationalMatrix::identity(2), vec({"1", "2"})) == vec({"1", "2"}));
  CHECK_FALSE(solve(mat({{"1", "1"}, {"2", "2"}}), vec({"1", "3"})).has_value());
  CHECK(*solve(mat({{"2", "0"}, {"0", "3"}}), vec({"4", "9"})) == vec({"2", "3"}));
  CHECK_THROWS_AS(solve(RationalMatrix::identity(2), vec({"1"})), DimensionMismatch);
}

TEST_CASE("solve returns a genuine solution on random systems") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 30; ++k) {
    const auto a = testkit::random_invertible(rng, 4) * RationalMatrix::from_rows(
        {testkit::random_vector(rng, 3), testkit::random_vector(rng, 3), testkit::random_vector(rng, 3),
         testkit::random_vector(rng, 3)}, 3);
    const auto x = testkit::random_vector(rng, 3);
    const auto b = a * x;
    const auto y = solve(a, b);
    REQUIRE(y.has_value());
    CHECK(a * *y == b);
  }
}

TEST_CASE("subspace membership") {
  const auto line = Subspace::span(2, {vec({"1", "0"})});
  CHECK(subspace_contains(line, vec({"3", "0"})));
  CHECK_FALSE(subspace_contains(line, vec({"0", "1"})));
  CHECK(subspace_contains(Subspace::span(3, {vec({"1", "1", "0"}), vec({"0", "0", "1"})}), vec({"2", "2", "5"})));
  CHECK_THROWS_AS(subspace_contains(line, vec({"1", "0", "0"})), DimensionMismatch);
}

TEST_CASE("subspace inclusion") {
  const auto whole = Subspace::whole(2);
  CHECK(subspace_contains_subspace(whole, Subspace::span(2, {vec({"5", "7"})})));
  CHECK_FALSE(subspace_contains_subspace(Subspace::span(2, {vec({"1", "0"})}), whole));
  CHECK(subspace_contains_subspace(Subspace::span(2, {vec({"1", "1"}), vec({"1", "-1"})}),
                                   Subspace::span(2, {vec({"1", "0"})})));
}

TEST_CASE("subspace representation is canonical") {
  const auto a = Subspace::span(3, {vec({"1", "2", "3"}), vec({"0", "1", "1"})});
  const auto b = Subspace::span(3, {vec({"2", "5", "7"}), vec({"1", "3", "4"}), vec({"3", "8", "11"})});
  CHECK(a == b);
  CHECK(a.key() == b.key());
  CHECK(a.dim() == 2);
}

TEST_CASE("intersection, sum and annihilator") {
  const auto xy = Subspace::span(3, {vec({"1", "0", "0"}), vec({"0", "1", "0"})});
  const auto yz = Subspace::span(3, {vec({"0", "1", "0"}), vec({"0", "0", "1"})});
  CHECK(xy.intersect(yz) == Subspace::span(3, {vec({"0", "1", "0"})}));
  CHECK(xy.sum(yz) == Subspace::whole(3));
  const auto ann = xy.annihilator();
  REQUIRE(ann.size() == 1);
  CHECK(dot(ann[0], vec({"4", "-9", "0"})) == 0);
  CHECK(dot(ann[0], vec({"0", "0", "1"})) != 0);
}

TEST_CASE("rank, nullspace and inverse") {
  const auto m = mat({{"1", "2", "3"}, {"2", "4", "6"}, {"1", "0", "1"}});
  CHECK(rank(m) == 2);
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m * ns[0]));
  CHECK_FALSE(inverse(m).has_value());
  const auto g = mat({{"2", "-1"}, {"-1", "2"}});
  CHECK(*inverse(g) * g == RationalMatrix::identity(2));
}

TEST_CASE("clear_denominators") {
  const auto s = clear_denominators(vec({"1/2", "-2/3", "0"}));
  CHECK(s.multiplier == 6);
  CHECK(s.entries == std::vector<mpz_class>{3, -4, 0});
}
