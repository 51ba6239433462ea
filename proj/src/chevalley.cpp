#include "properlie/chevalley.hpp"

#include "properlie/errors.hpp"

namespace properlie {

namespace {

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

int as_int(const Rational& q, const char* what) {
  if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw Error(std::string("non-integral ") + what);
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace

ChevalleyAlgebra ChevalleyAlgebra::build(const RootSystemType& t) {
  ChevalleyAlgebra l;
  for (const auto& c : t.components)
    if (c.family == Family::BC) throw ValidationError("no Chevalley algebra for a non-reduced system");
  l.rs_ = build_root_system(t);
  const auto& roots = l.rs_.roots();
  const std::size_t r = roots.size(), half = r / 2;
  const int n = l.rs_.rank();

  l.neg_.resize(r);
  for (std::size_t a = 0; a < r; ++a) l.neg_[a] = a < half ? a + half : a - half;
  l.sum_.assign(r * r, npos);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const long s = l.rs_.root_index(add(roots[a], roots[b]));
      if (s >= 0) l.sum_[a * r + b] = static_cast<std::size_t>(s);
    }
  l.weights_.assign(r * static_cast<std::size_t>(n), 0);
  std::vector<Rational> norm(r);
  l.coroots_.resize(r);
  for (std::size_t a = 0; a < r; ++a) {
    RationalVector v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<long>(roots[a][static_cast<std::size_t>(i)]);
    norm[a] = l.rs_.inner(v, v);
    for (int i = 0; i < n; ++i) {
      std::int64_t w = 0;
      for (int k = 0; k < n; ++k) w += roots[a][static_cast<std::size_t>(k)] * l.rs_.cartan(k, i);
      l.weights_[a * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = static_cast<int>(w);
    }
    l.coroots_[a].resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      l.coroots_[a][static_cast<std::size_t>(i)] =
          as_int(v[static_cast<std::size_t>(i)] * l.rs_.gram()(i, i) / norm[a], "coroot coefficient");
  }

  // Positive pairs first, by height of the sum; extraspecial pairs get +(p+1)
  // and the others follow from the Jacobi identity.
  std::vector<int> positive_table(half * half, 0);
  auto pos = [&](std::size_t a, std::size_t b) -> int& { return positive_table[a * half + b]; };
  auto is_pos = [&](std::size_t a) { return a < half; };
  auto same_sign = [&](std::size_t x, std::size_t y) -> Rational {
    if (is_pos(x)) return pos(x, y);
    return -pos(l.neg_[x], l.neg_[y]);
  };
  auto mixed = [&](std::size_t x, std::size_t y) -> Rational {
    bool flip = false;
    if (!is_pos(x)) {
      std::swap(x, y);
      flip = true;
    }
    const std::size_t s = l.sum_[x * r + y];
    Rational v;
    if (is_pos(s))
      v = -norm[s] / norm[x] * pos(l.neg_[y], s);
    else
      v = norm[s] / norm[y] * pos(l.neg_[s], x);
    return flip ? Rational(-v) : v;
  };
  auto nval = [&](std::size_t x, std::size_t y) -> Rational {
    if (is_pos(x) == is_pos(y)) return same_sign(x, y);
    return mixed(x, y);
  };

  std::vector<std::size_t> simple(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    IntVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    simple[static_cast<std::size_t>(i)] = static_cast<std::size_t>(l.rs_.root_index(e));
  }
  for (std::size_t xi = 0; xi < half; ++xi) {
    std::size_t a1 = npos, b1 = npos;
    for (int i = 0; i < n && a1 == npos; ++i) {
      const std::size_t si = simple[static_cast<std::size_t>(i)];
      const std::size_t d = l.sum_[xi * r + l.neg_[si]];
      if (d != npos && is_pos(d)) {
        a1 = si;
        b1 = d;
      }
    }
    if (a1 == npos) continue;  // simple root
    int p = 0;
    for (std::size_t cur = b1;;) {
      const std::size_t next = l.sum_[cur * r + l.neg_[a1]];
      if (next == npos) break;
      ++p;
      cur = next;
    }
    pos(a1, b1) = p + 1;
    pos(b1, a1) = -(p + 1);
    for (std::size_t a = 0; a < half; ++a) {
      const std::size_t b = l.sum_[xi * r + l.neg_[a]];
      if (b == npos || !is_pos(b) || b <= a) continue;
      if ((a == a1 && b == b1) || (a == b1 && b == a1)) continue;
      Rational v = 0;
      if (const std::size_t d = l.sum_[b * r + l.neg_[a1]]; d != npos)
        v += nval(b, l.neg_[a1]) * nval(a, l.neg_[b1]) / norm[d];
      if (const std::size_t d = l.sum_[a * r + l.neg_[a1]]; d != npos)
        v += nval(l.neg_[a1], a) * nval(b, l.neg_[b1]) / norm[d];
      v *= norm[xi] / Rational(p + 1);
      pos(a, b) = as_int(v, "structure constant");
      pos(b, a) = -pos(a, b);
    }
  }
  l.n_.assign(r * r, 0);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      if (l.sum_[a * r + b] != npos) l.n_[a * r + b] = as_int(nval(a, b), "structure constant");
  return l;
}

std::string ChevalleyAlgebra::basis_label(std::size_t b) const {
  if (b < static_cast<std::size_t>(rank())) return "h" + std::to_string(b + 1);
  const auto& root = rs_.roots()[b - static_cast<std::size_t>(rank())];
  std::string s = b - static_cast<std::size_t>(rank()) < root_count() / 2 ? "e[" : "f[";
  for (std::size_t i = 0; i < root.size(); ++i) s += std::to_string(std::abs(root[i]));
  return s + "]";
}

std::vector<std::pair<std::size_t, int>> ChevalleyAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  const auto n = static_cast<std::size_t>(rank());
  std::vector<std::pair<std::size_t, int>> out;
  if (i < n && j < n) return out;
  if (i < n) {
    const int w = root_on_h(j - n, static_cast<int>(i));
    if (w) out.emplace_back(j, w);
    return out;
  }
  if (j < n) {
    const int w = root_on_h(i - n, static_cast<int>(j));
    if (w) out.emplace_back(i, -w);
    return out;
  }
  const std::size_t a = i - n, b = j - n;
  if (b == neg_[a]) {
    for (std::size_t k = 0; k < n; ++k)
      if (coroots_[a][k]) out.emplace_back(k, coroots_[a][k]);
    return out;
  }
  if (const std::size_t s = sum(a, b); s != npos) out.emplace_back(n + s, structure_constant(a, b));
  return out;
}

AlgebraElement ChevalleyAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  const std::size_t d = dimension();
  if (x.size() != d || y.size() != d) throw DimensionMismatch("algebra element has wrong dimension");
  AlgebraElement out(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      for (auto [k, c] : bracket_basis(i, j)) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

RationalMatrix ChevalleyAlgebra::ad(const AlgebraElement& x) const {
  const std::size_t d = dimension();
  if (x.size() != d) throw DimensionMismatch("algebra element has wrong dimension");
  RationalMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (auto [k, c] : bracket_basis(i, j)) m(k, j) += x[i] * c;
  }
  return m;
}

AlgebraElement ChevalleyAlgebra::cartan_element(const RationalVector& x) const {
  if (x.size() != static_cast<std::size_t>(rank())) throw DimensionMismatch("Cartan vector has wrong length");
  AlgebraElement h(dimension(), Rational(0));
  for (int k = 0; k < rank(); ++k) h[static_cast<std::size_t>(k)] = rs_.gram()(k, k) / 2 * x[static_cast<std::size_t>(k)];
  return h;
}

Subspace centralizer(const ChevalleyAlgebra& l, const std::vector<AlgebraElement>& s) {
  const std::size_t d = l.dimension();
  if (s.empty()) return Subspace::whole(d);
  RationalMatrix stacked(d * s.size(), d);
  for (std::size_t t = 0; t < s.size(); ++t) {
    const auto m = l.ad(s[t]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) stacked(t * d + i, j) = m(i, j);
  }
  return Subspace::span(d, nullspace(stacked));
}

AlgebraElement cartan_involution(const ChevalleyAlgebra& l, const AlgebraElement& x) {
  const auto n = static_cast<std::size_t>(l.rank());
  AlgebraElement y(x.size(), Rational(0));
  for (std::size_t i = 0; i < n; ++i) y[i] = -x[i];
  for (std::size_t a = 0; a < l.root_count(); ++a) y[n + l.negative(a)] = -x[n + a];
  return y;
}

CartanDecomposition split_cartan_decomposition(const ChevalleyAlgebra& l) {
  CartanDecomposition dec;
  const std::size_t d = l.dimension();
  const auto n = static_cast<std::size_t>(l.rank());
  for (std::size_t i = 0; i < n; ++i) dec.p_basis.push_back(l.basis(i));
  for (std::size_t a = 0; a < l.root_count() / 2; ++a) {
    const auto e = l.basis(n + a), f = l.basis(n + l.negative(a));
    dec.k_basis.push_back(e - f);
    dec.p_basis.push_back(e + f);
  }
  dec.k = Subspace::span(d, dec.k_basis);
  dec.p = Subspace::span(d, dec.p_basis);
  return dec;
}

bool is_abelian(const ChevalleyAlgebra& l, const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!is_zero(l.bracket(b[i], b[j]))) return false;
  return true;
}

Subspace extend_to_maximal_abelian(const ChevalleyAlgebra& l, const CartanDecomposition& dec, const Subspace& a_h) {
  if (a_h.ambient_dim() != l.dimension()) throw DimensionMismatch("subspace is not in the algebra");
  if (!is_abelian(l, a_h)) throw ValidationError("subspace is not abelian");
  if (!dec.p.contains(a_h)) throw ValidationError("subspace is not contained in p");
  Subspace cur = a_h;
  for (;;) {
    const Subspace zp = centralizer(l, cur.basis()).intersect(dec.p);
    const RationalVector* next = nullptr;
    for (const auto& v : zp.basis())
      if (!cur.contains(v)) {
        next = &v;
        break;
      }
    if (!next) return cur;
    cur = cur.sum(Subspace::span(l.dimension(), {*next}));
  }
}

bool is_sl2_triple(const ChevalleyAlgebra& l, const Sl2Triple& t) {
  return l.bracket(t.h, t.e) == Rational(2) * t.e && l.bracket(t.h, t.f) == Rational(-2) * t.f && l.bracket(t.e, t.f) == t.h;
}

std::optional<Sl2Triple> sl2_completion(const ChevalleyAlgebra& l, const AlgebraElement& h) {
  const std::size_t d = l.dimension();
  const auto n = static_cast<std::size_t>(l.rank());
  if (h.size() != d) throw DimensionMismatch("algebra element has wrong dimension");
  for (std::size_t b = n; b < d; ++b)
    if (h[b] != 0) throw ValidationError("sl2 completion expects a Cartan element");
  if (is_zero(h)) return std::nullopt;
  std::vector<std::size_t> up, down;
  for (std::size_t a = 0; a < l.root_count(); ++a) {
    Rational w = 0;
    for (std::size_t i = 0; i < n; ++i) w += h[i] * l.root_on_h(a, static_cast<int>(i));
    if (w == 2) up.push_back(a);
    if (w == -2) down.push_back(a);
  }
  if (up.empty()) return std::nullopt;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  for (int attempt = 0; attempt < 8; ++attempt) {
    AlgebraElement e(d, Rational(0));
    for (std::size_t a : up) {
      long c = 1;
      if (attempt) {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        c = static_cast<long>((seed >> 33) % 9) + 1;
      }
      e[n + a] = c;
    }
    std::vector<RationalVector> cols;
    for (std::size_t b : down) cols.push_back(l.bracket(e, l.basis(n + b)));
    const auto x = solve(RationalMatrix::from_columns(cols, d), h);
    if (!x) continue;
    AlgebraElement f(d, Rational(0));
    for (std::size_t k = 0; k < down.size(); ++k) f[n + down[k]] = (*x)[k];
    Sl2Triple t{h, e, f};
    if (is_sl2_triple(l, t)) return t;
  }
  return std::nullopt;
}

EmbeddingValidation validate_embedding(const ChevalleyAlgebra& l, const CartanDecomposition& dec, const RationalMatrix& m) {
  if (m.rows() != static_cast<std::size_t>(l.rank())) throw DimensionMismatch("embedding matrix has wrong row count");
  if (rank(m) != m.cols()) throw ValidationError("embedding matrix is rank-deficient");
  EmbeddingValidation v;
  v.dim = m.cols();
  for (std::size_t j = 0; j < m.cols(); ++j) v.image.push_back(l.cartan_element(m.column(j)));
  const auto s = Subspace::span(l.dimension(), v.image);
  if (!is_abelian(l, s)) throw ValidationError("embedded subspace is not abelian");
  if (!dec.p.contains(s)) throw ValidationError("embedded subspace is not inside p");
  return v;
}

}  // namespace properlie
