#include "properlie/exactlin.hpp"

#include <sstream>
#include <utility>

#include "properlie/errors.hpp"

namespace properlie {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw ValidationError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw ValidationError("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RationalVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + "]";
}

RationalVector zero_vector(std::size_t n) { return RationalVector(n, Rational(0)); }

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

static void check_same_size(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("vector sizes differ: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  check_same_size(a, b);
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  check_same_size(a, b);
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  check_same_size(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntegralScaling clear_denominators(const RationalVector& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntegralScaling out;
  out.multiplier = l;
  out.entries.reserve(v.size());
  for (const auto& x : v) out.entries.push_back(x.get_num() * (l / x.get_den()));
  return out;
}

// ---------------------------------------------------------------------------

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols, std::size_t rows) {
  RationalMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<RationalVector> RationalMatrix::columns() const {
  std::vector<RationalVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
  RationalMatrix p(rows_, other.cols_);
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (other(k, j) == 0) continue;
        t = a * other(k, j);
        p(i, j) += t;
      }
    }
  return p;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  RationalVector r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix n(*this);
  for (auto& x : n.data_) x = -x;
  return n;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ";";
    os << to_string(m.row(i));
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

EchelonForm reduced_echelon(RationalMatrix m) {
  EchelonForm out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reduced_echelon(m).rank(); }

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.size())
    throw DimensionMismatch("solve: matrix has " + std::to_string(a.rows()) + " rows, rhs has " +
                            std::to_string(b.size()) + " entries");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const EchelonForm e = reduced_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RationalVector x(a.cols(), Rational(0));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, a.cols());
  return x;
}

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  const EchelonForm e = reduced_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const EchelonForm e = reduced_echelon(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  const EchelonForm e = reduced_echelon(RationalMatrix::from_rows(vectors, ambient_dim));
  for (std::size_t k = 0; k < e.rank(); ++k) s.basis_.push_back(e.reduced.row(k));
  return s;
}

Subspace Subspace::column_span(const RationalMatrix& m) { return span(m.rows(), m.columns()); }

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.basis_.push_back(unit_vector(ambient_dim, i));
  return s;
}

bool Subspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_)
    throw DimensionMismatch("subspace of Q^" + std::to_string(ambient_) + " tested against a vector of length " +
                            std::to_string(v.size()));
  // Reduce v against the echelon basis; the pivot of each row is its first nonzero entry.
  RationalVector r = v;
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    if (r[p] == 0) continue;
    const Rational f = r[p];
    for (std::size_t j = p; j < ambient_; ++j)
      if (b[j] != 0) r[j] -= f * b[j];
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  if (other.dim() > dim()) return false;
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  std::vector<RationalVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

std::vector<RationalVector> Subspace::annihilator() const {
  if (basis_.empty()) return whole(ambient_).basis();
  return nullspace(RationalMatrix::from_rows(basis_, ambient_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  // x in both iff x is killed by the annihilators of both.
  std::vector<RationalVector> constraints = annihilator();
  const auto more = other.annihilator();
  constraints.insert(constraints.end(), more.begin(), more.end());
  if (constraints.empty()) return whole(ambient_);
  return span(ambient_, nullspace(RationalMatrix::from_rows(constraints, ambient_)));
}

std::string Subspace::key() const {
  std::string k = std::to_string(ambient_) + ":";
  for (const auto& b : basis_) k += to_string(b);
  return k;
}

bool subspace_contains(const Subspace& s, const RationalVector& v) { return s.contains(v); }

bool subspace_contains_subspace(const Subspace& s, const Subspace& t) { return s.contains(t); }

}  // namespace properlie
