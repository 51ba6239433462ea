#pragma once

// Exact rational linear algebra over GMP rationals.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace properlie {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);

RationalVector zero_vector(std::size_t n);
RationalVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const RationalVector& v);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);

// Smallest positive integer multiple of v with integer entries; returns the
// multiplier alongside.
struct IntegralScaling {
  std::vector<mpz_class> entries;
  mpz_class multiplier;
};
IntegralScaling clear_denominators(const RationalVector& v);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalVector column(std::size_t j) const;
  std::vector<RationalVector> columns() const;
  RationalMatrix transpose() const;

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix operator-() const;
  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::string to_string(const RationalMatrix& m);

struct EchelonForm {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

EchelonForm reduced_echelon(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

// Some x with a * x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

// Basis of {x : a * x = 0}.
std::vector<RationalVector> nullspace(const RationalMatrix& a);

std::optional<RationalMatrix> inverse(const RationalMatrix& a);

// A linear subspace of Q^n stored by its reduced row echelon basis, so equal
// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);

  static Subspace span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors);
  static Subspace column_span(const RationalMatrix& m);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }

  bool contains(const RationalVector& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  // Basis of the linear functionals (as coefficient vectors) vanishing on
  // the subspace.
  std::vector<RationalVector> annihilator() const;

  // Canonical text key, usable for hashing/deduplication.
  std::string key() const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<RationalVector> basis_;
};

bool subspace_contains(const Subspace& s, const RationalVector& v);
bool subspace_contains_subspace(const Subspace& s, const Subspace& t);

}  // namespace properlie
