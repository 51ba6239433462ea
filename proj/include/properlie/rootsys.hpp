#pragma once

// Root systems of types A-G and the non-reduced BC, in simple-root
// coordinates, with their Weyl groups.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "properlie/exactlin.hpp"

namespace properlie {

inline constexpr int kMaxRank = 12;

enum class Family { A, B, C, D, E, F, G, BC };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  bool operator==(const SimpleType&) const = default;
};

// A possibly reducible type, e.g. "F4", "BC2", "A2+A1". The empty type is
// the rank-0 system of a compact real form.
struct RootSystemType {
  std::vector<SimpleType> components;

  static RootSystemType parse(std::string_view text);
  static RootSystemType simple(Family f, int rank) { return RootSystemType{{SimpleType{f, rank}}}; }

  int rank() const;
  std::string name() const;
  void validate() const;

  // Representative of the isomorphism class: C2 -> B2, D3 -> A3, D2 -> 2A1,
  // components sorted.
  RootSystemType canonical() const;
  bool isomorphic_to(const RootSystemType& other) const { return canonical() == other.canonical(); }
  bool operator==(const RootSystemType&) const = default;
};

using IntVector = std::vector<std::int64_t>;

class WeylElement;

class RootSystem {
 public:
  RootSystem() = default;

  // Builds the system whose simple roots have the given Gram matrix;
  // doubled[i] marks simple roots alpha_i with 2*alpha_i also a root (type BC).
  static RootSystem from_gram(RationalMatrix gram, std::vector<bool> doubled);

  int rank() const { return rank_; }
  const RootSystemType& type() const { return type_; }
  const RationalMatrix& gram() const { return gram_; }
  const std::vector<bool>& doubled() const { return doubled_; }

  // <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
  std::span<const int> cartan_row(int i) const {
    return {cartan_.data() + static_cast<std::size_t>(i * rank_), static_cast<std::size_t>(rank_)};
  }

  // All roots as integer coefficient vectors over the simple roots; the
  // positive ones come first, ordered by height.
  const std::vector<IntVector>& roots() const { return roots_; }
  std::span<const IntVector> positive_roots() const { return {roots_.data(), roots_.size() / 2}; }
  bool is_root(const IntVector& v) const;
  long root_index(const IntVector& v) const;  // -1 when not a root

  Rational inner(const RationalVector& x, const RationalVector& y) const;
  // <v, alpha_i^vee> for v in simple-root coordinates.
  Rational coroot_pairing(const RationalVector& v, int i) const;
  RationalVector pairings(const RationalVector& v) const;
  RationalVector reflect(int i, const RationalVector& v) const;
  IntVector reflect(int i, const IntVector& v) const;

  // Vector x with (x, alpha_j) = delta_ij (the identification of the
  // fundamental coweight with an element of the root space).
  RationalVector fundamental_coweight(int i) const;

 private:
  int rank_ = 0;
  RootSystemType type_;
  RationalMatrix gram_;
  std::vector<bool> doubled_;
  std::vector<int> cartan_;
  std::vector<IntVector> roots_;
};

// Identification of a connected component of a Gram matrix with a standard
// type; nodes are listed in Bourbaki order.
struct ComponentInfo {
  SimpleType type;
  std::vector<int> nodes;
};
std::vector<ComponentInfo> identify_components(const RationalMatrix& gram, const std::vector<bool>& doubled);

RationalMatrix standard_gram(const SimpleType& t);
RootSystem build_root_system(const RootSystemType& t);

RationalVector reflect(const RootSystem& rs, int alpha_index, const RationalVector& v);
bool dominant_chamber_test(const RootSystem& rs, const RationalVector& v);

std::uint64_t weyl_order(const SimpleType& t);
std::uint64_t weyl_order(const RootSystemType& t);
std::uint64_t weyl_order(const RootSystem& rs);

// Element of the Weyl group as an integer matrix on simple-root coordinates,
// with the word of simple reflections that produced it (applied first to last).
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int rank);
  static WeylElement from_word(const RootSystem& rs, std::span<const int> word);

  int rank() const { return rank_; }
  std::int64_t operator()(int i, int j) const { return matrix_[static_cast<std::size_t>(i * rank_ + j)]; }
  const std::vector<int>& word() const { return word_; }

  RationalVector apply(const RationalVector& v) const;
  RationalMatrix as_matrix() const;
  WeylElement then(const WeylElement& next) const;  // next o this
  WeylElement inverse(const RootSystem& rs) const;
  bool is_identity() const;
  bool operator==(const WeylElement& o) const { return rank_ == o.rank_ && matrix_ == o.matrix_; }

 private:
  int rank_ = 0;
  std::vector<std::int64_t> matrix_;
  std::vector<int> word_;
};

WeylElement longest_element(const RootSystem& rs);

// Permutation tau of the simple roots with -w0(alpha_i) = alpha_tau(i).
std::vector<int> opposition_involution(const RootSystem& rs);

}  // namespace properlie
