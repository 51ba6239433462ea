#include "doctest.h"

#include <random>

#include "properlie/chevalley.hpp"
#include "properlie/errors.hpp"
#include "testkit.hpp"

using namespace properlie;

namespace {
const ChevalleyAlgebra& sl3() {
  static const auto l = build_split_algebra(RootSystemType::parse("A2"));
  return l;
}
}  // namespace

TEST_CASE("dimensions") {
  CHECK(build_split_algebra(RootSystemType::parse("A1")).dimension() == 3);
  CHECK(build_split_algebra(RootSystemType::parse("G2")).dimension() == 14);
  CHECK(build_split_algebra(RootSystemType::parse("E8")).dimension() == 248);
  CHECK(build_split_algebra(RootSystemType::parse("A2+A1")).dimension() == 11);
  CHECK_THROWS_AS(build_split_algebra(RootSystemType::parse("BC2")), ValidationError);
}

TEST_CASE("structure constants: [e_a, e_-a] is the coroot and [h, e_a] = a(h) e_a") {
  for (const char* t : {"B3", "G2", "F4"}) {
    const auto l = build_split_algebra(RootSystemType::parse(t));
    const auto& roots = l.root_system().roots();
    for (std::size_t a = 0; a < roots.size(); ++a) {
      const auto br = l.bracket(l.basis(l.e_index(a)), l.basis(l.e_index(l.negative(a))));
      for (int i = 0; i < l.rank(); ++i) CHECK(br[l.h_index(i)] == l.coroot(a)[static_cast<std::size_t>(i)]);
      for (int i = 0; i < l.rank(); ++i) {
        const auto he = l.bracket(l.basis(l.h_index(i)), l.basis(l.e_index(a)));
        CHECK(he == Rational(l.root_on_h(a, i)) * l.basis(l.e_index(a)));
      }
    }
  }
}

TEST_CASE("property: Jacobi identity for every algebra of rank <= 4") {
  const auto bad = testkit::prop_jacobi_rank4();
  CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad.front()));
}

TEST_CASE("Jacobi identity on a reducible algebra and on E6 samples") {
  std::mt19937_64 rng(2);
  for (const char* t : {"A2+B2", "E6"}) {
    const auto l = build_split_algebra(RootSystemType::parse(t));
    const auto d = l.dimension();
    for (int k = 0; k < 200; ++k) {
      const auto x = l.basis(rng() % d), y = l.basis(rng() % d), z = l.basis(rng() % d);
      const auto j = l.bracket(x, l.bracket(y, z)) + l.bracket(y, l.bracket(z, x)) + l.bracket(z, l.bracket(x, y));
      CHECK(is_zero(j));
    }
  }
}

TEST_CASE("centralizers") {
  const auto& l = sl3();
  CHECK(centralizer(l, {}).dim() == 8);
  const auto sl2 = build_split_algebra(RootSystemType::parse("A1"));
  const auto c = centralizer(sl2, {sl2.basis(sl2.h_index(0))});
  CHECK(c == Subspace::span(3, {sl2.basis(sl2.h_index(0))}));
  // h_1 is regular in sl3: no root vanishes on it.
  CHECK(centralizer(l, {l.basis(l.h_index(0))}).dim() == 2);
  // The fundamental coweight kills alpha_2, leaving h plus the alpha_2 root spaces.
  const auto w1 = l.cartan_element(l.root_system().fundamental_coweight(0));
  const auto cw = centralizer(l, {w1});
  CHECK(cw.dim() == 4);
  const long a2 = l.root_system().root_index({0, 1});
  CHECK(cw.contains(l.basis(l.e_index(static_cast<std::size_t>(a2)))));
}

TEST_CASE("Cartan decomposition") {
  for (const char* t : {"A2", "G2", "B3"}) {
    const auto l = build_split_algebra(RootSystemType::parse(t));
    const auto dec = split_cartan_decomposition(l);
    const auto npos_roots = l.root_system().positive_roots().size();
    CHECK(dec.k.dim() == npos_roots);
    CHECK(dec.p.dim() == npos_roots + static_cast<std::size_t>(l.rank()));
    CHECK(dec.k.intersect(dec.p).dim() == 0);
    for (const auto& x : dec.k_basis) {
      CHECK(cartan_involution(l, x) == x);
      for (const auto& y : dec.p_basis) CHECK(dec.p.contains(l.bracket(x, y)));
      for (const auto& y : dec.k_basis) CHECK(dec.k.contains(l.bracket(x, y)));
    }
    for (const auto& x : dec.p_basis) {
      CHECK(cartan_involution(l, x) == Rational(-1) * x);
      for (const auto& y : dec.p_basis) CHECK(dec.k.contains(l.bracket(x, y)));
    }
  }
}

TEST_CASE("Cartan involution is an automorphism") {
  const auto l = build_split_algebra(RootSystemType::parse("F4"));
  std::mt19937_64 rng(9);
  for (int k = 0; k < 300; ++k) {
    const auto x = l.basis(rng() % l.dimension()), y = l.basis(rng() % l.dimension());
    CHECK(cartan_involution(l, l.bracket(x, y)) == l.bracket(cartan_involution(l, x), cartan_involution(l, y)));
  }
}

TEST_CASE("maximal abelian extension") {
  const auto& l = sl3();
  const auto dec = split_cartan_decomposition(l);
  std::vector<AlgebraElement> hs = {l.basis(0), l.basis(1)};
  const auto cartan = Subspace::span(l.dimension(), hs);
  CHECK(extend_to_maximal_abelian(l, dec, cartan) == cartan);

  const auto principal = Subspace::span(l.dimension(), {l.cartan_element({2, 2})});
  const auto ext = extend_to_maximal_abelian(l, dec, principal);
  CHECK(ext.dim() == 2);
  CHECK(ext.contains(principal));
  CHECK(is_abelian(l, ext));
  CHECK(dec.p.contains(ext));

  const auto full = extend_to_maximal_abelian(l, dec, Subspace(l.dimension()));
  CHECK(full.dim() == 2);
  CHECK(is_abelian(l, full));

  CHECK_THROWS_AS(extend_to_maximal_abelian(l, dec, Subspace::span(l.dimension(), {l.basis(2)})), ValidationError);
}

TEST_CASE("sl2 completion") {
  const auto sl2 = build_split_algebra(RootSystemType::parse("A1"));
  const auto t = sl2_completion(sl2, sl2.basis(sl2.h_index(0)));
  REQUIRE(t.has_value());
  CHECK(is_sl2_triple(sl2, *t));
  CHECK(Subspace::span(3, {t->e}) == Subspace::span(3, {sl2.basis(sl2.e_index(0))}));

  // Diagram (1,1) in sl3: g_2 is the highest root space.
  const auto& l = sl3();
  const auto h11 = l.cartan_element(*solve(l.root_system().gram(), {1, 1}));
  const auto t11 = sl2_completion(l, h11);
  REQUIRE(t11.has_value());
  CHECK(is_sl2_triple(l, *t11));
  const long top = l.root_system().root_index({1, 1});
  CHECK(Subspace::span(8, {t11->e}) == Subspace::span(8, {l.basis(l.e_index(static_cast<std::size_t>(top)))}));

  const auto h22 = l.cartan_element(*solve(l.root_system().gram(), {2, 2}));
  const auto t22 = sl2_completion(l, h22);
  REQUIRE(t22.has_value());
  CHECK(is_sl2_triple(l, *t22));

  CHECK_FALSE(sl2_completion(l, zero_vector(8)).has_value());
  // (1,0) is not a weighted Dynkin diagram of sl3.
  CHECK_FALSE(sl2_completion(l, l.cartan_element(*solve(l.root_system().gram(), {1, 0}))).has_value());
}

TEST_CASE("embedding validation") {
  const auto& l = sl3();
  const auto dec = split_cartan_decomposition(l);
  CHECK(validate_embedding(l, dec, RationalMatrix::identity(2)).dim == 2);
  CHECK(validate_embedding(l, dec, RationalMatrix::from_columns({{2, 2}}, 2)).dim == 1);
  CHECK_THROWS_AS(validate_embedding(l, dec, RationalMatrix::from_columns({{1, 0}, {1, 0}}, 2)), ValidationError);
  CHECK_THROWS_AS(validate_embedding(l, dec, RationalMatrix::identity(3)), DimensionMismatch);
}
