#pragma once

// Split semisimple Lie algebras in a Chevalley basis {h_i, e_alpha}, with
// structure constants fixed by extraspecial pairs.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "properlie/exactlin.hpp"
#include "properlie/rootsys.hpp"

namespace properlie {

// Elements are coordinate vectors over the basis h_1..h_n, then e_alpha for
// the roots in RootSystem::roots() order.
using AlgebraElement = RationalVector;

class ChevalleyAlgebra {
 public:
  static ChevalleyAlgebra build(const RootSystemType& t);

  const RootSystemType& type() const { return rs_.type(); }
  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t dimension() const { return static_cast<std::size_t>(rs_.rank()) + rs_.roots().size(); }
  std::size_t root_count() const { return rs_.roots().size(); }

  std::size_t h_index(int i) const { return static_cast<std::size_t>(i); }
  std::size_t e_index(std::size_t root) const { return static_cast<std::size_t>(rs_.rank()) + root; }
  std::string basis_label(std::size_t b) const;
  AlgebraElement basis(std::size_t b) const { return unit_vector(dimension(), b); }

  // Index of -alpha and of alpha + beta (npos when not a root).
  std::size_t negative(std::size_t root) const { return neg_[root]; }
  std::size_t sum(std::size_t a, std::size_t b) const { return sum_[a * root_count() + b]; }
  // N_{alpha,beta} with [e_alpha, e_beta] = N e_{alpha+beta}; 0 if alpha+beta is not a root.
  int structure_constant(std::size_t a, std::size_t b) const { return n_[a * root_count() + b]; }
  // alpha(h_i)
  int root_on_h(std::size_t root, int i) const { return weights_[root * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(i)]; }
  // h_alpha = [e_alpha, e_-alpha] in the h_i basis.
  const std::vector<int>& coroot(std::size_t root) const { return coroots_[root]; }

  // [b_i, b_j] as a sparse combination of basis vectors.
  std::vector<std::pair<std::size_t, int>> bracket_basis(std::size_t i, std::size_t j) const;
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;
  RationalMatrix ad(const AlgebraElement& x) const;

  // Cartan element H with alpha(H) = (alpha, x) for a point x of the Cartan
  // subspace in simple-root coordinates.
  AlgebraElement cartan_element(const RationalVector& x) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  RootSystem rs_;
  std::vector<std::size_t> neg_;
  std::vector<std::size_t> sum_;
  std::vector<int> n_;
  std::vector<int> weights_;
  std::vector<std::vector<int>> coroots_;
};

inline ChevalleyAlgebra build_split_algebra(const RootSystemType& t) { return ChevalleyAlgebra::build(t); }

Subspace centralizer(const ChevalleyAlgebra& l, const std::vector<AlgebraElement>& s);

// theta(h) = -h, theta(e_alpha) = -e_{-alpha}.
struct CartanDecomposition {
  std::vector<AlgebraElement> k_basis;  // e_alpha - e_{-alpha}, alpha > 0
  std::vector<AlgebraElement> p_basis;  // h_i and e_alpha + e_{-alpha}
  Subspace k;
  Subspace p;
};
CartanDecomposition split_cartan_decomposition(const ChevalleyAlgebra& l);
AlgebraElement cartan_involution(const ChevalleyAlgebra& l, const AlgebraElement& x);

bool is_abelian(const ChevalleyAlgebra& l, const Subspace& s);

// Adjoins elements of c_g(a) inside p until the span is maximal abelian in p.
Subspace extend_to_maximal_abelian(const ChevalleyAlgebra& l, const CartanDecomposition& dec, const Subspace& a_h);

struct Sl2Triple {
  AlgebraElement h, e, f;
};
// e is searched in g_2(h); nullopt when no attempt yields a triple.
std::optional<Sl2Triple> sl2_completion(const ChevalleyAlgebra& l, const AlgebraElement& h);
bool is_sl2_triple(const ChevalleyAlgebra& l, const Sl2Triple& t);

struct EmbeddingValidation {
  std::size_t dim = 0;
  std::vector<AlgebraElement> image;
};
// M has the basis of a_h as columns in a-coordinates. Throws ValidationError
// when M is rank-deficient or its image is not abelian or not inside p.
EmbeddingValidation validate_embedding(const ChevalleyAlgebra& l, const CartanDecomposition& dec, const RationalMatrix& m);

}  // namespace properlie
