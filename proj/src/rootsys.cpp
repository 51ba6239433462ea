#include "properlie/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <numeric>
#include <set>

#include "properlie/errors.hpp"

namespace properlie {

namespace {

constexpr std::string_view kFamilyNames[] = {"A", "B", "C", "D", "E", "F", "G", "BC"};

std::int64_t height(const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

bool is_positive(const IntVector& v) {
  for (auto x : v)
    if (x != 0) return x > 0;
  return false;
}

RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  RationalMatrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

}  // namespace

std::string SimpleType::name() const {
  return std::string(kFamilyNames[static_cast<int>(family)]) + std::to_string(rank);
}

RootSystemType RootSystemType::parse(std::string_view text) {
  RootSystemType t;
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty() || s == "0" || s == "-") return t;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    std::string part = s.substr(pos, end - pos);
    pos = end + 1;
    // optional multiplicity prefix such as "2A1"
    std::size_t k = 0;
    while (k < part.size() && std::isdigit(static_cast<unsigned char>(part[k]))) ++k;
    const int mult = k ? std::stoi(part.substr(0, k)) : 1;
    part = part.substr(k);
    SimpleType st;
    std::size_t digits;
    if (part.rfind("BC", 0) == 0) {
      st.family = Family::BC;
      digits = 2;
    } else if (!part.empty() && part[0] >= 'A' && part[0] <= 'G') {
      st.family = static_cast<Family>(part[0] - 'A');
      digits = 1;
    } else {
      throw ValidationError("unknown root system type '" + std::string(text) + "'");
    }
    const std::string r = part.substr(digits);
    if (r.empty() || !std::all_of(r.begin(), r.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ValidationError("missing rank in root system type '" + std::string(text) + "'");
    st.rank = std::stoi(r);
    for (int m = 0; m < mult; ++m) t.components.push_back(st);
  }
  t.validate();
  return t;
}

int RootSystemType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string RootSystemType::name() const {
  if (components.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += "+";
    out += components[i].name();
  }
  return out;
}

void RootSystemType::validate() const {
  for (const auto& c : components) {
    const int r = c.rank;
    bool ok = r >= 1;
    switch (c.family) {
      case Family::A: ok = r >= 1; break;
      case Family::B:
      case Family::C: ok = r >= 2; break;
      case Family::D: ok = r >= 2; break;
      case Family::E: ok = r >= 6 && r <= 8; break;
      case Family::F: ok = r == 4; break;
      case Family::G: ok = r == 2; break;
      case Family::BC: ok = r >= 1; break;
    }
    if (!ok) throw ValidationError("invalid rank " + std::to_string(r) + " for family " + c.name());
  }
  if (rank() > kMaxRank) throw ValidationError("rank " + std::to_string(rank()) + " exceeds supported maximum");
}

RootSystemType RootSystemType::canonical() const {
  RootSystemType out;
  for (auto c : components) {
    if ((c.family == Family::B || c.family == Family::C) && c.rank == 1) c.family = Family::A;
    if (c.family == Family::C && c.rank == 2) c.family = Family::B;
    if (c.family == Family::D && c.rank == 3) c.family = Family::A;
    if (c.family == Family::D && c.rank == 2) {
      out.components.push_back({Family::A, 1});
      out.components.push_back({Family::A, 1});
      continue;
    }
    out.components.push_back(c);
  }
  std::sort(out.components.begin(), out.components.end(), [](const SimpleType& a, const SimpleType& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.family < b.family;
  });
  return out;
}

// ---------------------------------------------------------------------------

RationalMatrix standard_gram(const SimpleType& t) {
  const int n = t.rank;
  RationalMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  auto edge = [&](int i, int j, const Rational& v) {
    if (i < n && j < n) g(i, j) = g(j, i) = v;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case Family::B:
    case Family::BC:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      g(n - 1, n - 1) = 1;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) g(i, i) = 1;
      g(n - 1, n - 1) = 2;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, Rational(-1, 2));
      edge(n - 2, n - 1, -1);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      if (n >= 3) edge(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      edge(0, 2, -1);
      edge(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case Family::F:
      g(0, 0) = 2;
      g(1, 1) = 2;
      g(2, 2) = 1;
      g(3, 3) = 1;
      edge(0, 1, -1);
      edge(1, 2, -1);
      edge(2, 3, Rational(-1, 2));
      break;
    case Family::G:
      g(0, 0) = Rational(2, 3);
      g(1, 1) = 2;
      edge(0, 1, -1);
      break;
  }
  return g;
}

std::vector<ComponentInfo> identify_components(const RationalMatrix& gram, const std::vector<bool>& doubled) {
  const int n = static_cast<int>(gram.rows());
  auto bond = [&](int i, int j) -> int {
    if (i == j || gram(i, j) == 0) return 0;
    const Rational b = 4 * gram(i, j) * gram(i, j) / (gram(i, i) * gram(j, j));
    if (b.get_den() != 1 || b > 3) throw ValidationError("Gram matrix is not that of a root system");
    return static_cast<int>(b.get_num().get_si());
  };
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<ComponentInfo> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> nodes{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] == -1 && bond(nodes[k], j)) {
          comp[j] = comp[s];
          nodes.push_back(j);
        }
    std::sort(nodes.begin(), nodes.end());
    const int m = static_cast<int>(nodes.size());
    auto neighbours = [&](int v) {
      std::vector<int> nb;
      for (int u : nodes)
        if (bond(u, v)) nb.push_back(u);
      return nb;
    };
    auto is_doubled = [&](int v) { return v < static_cast<int>(doubled.size()) && doubled[v]; };
    // Walk a path from `start` away from `from`.
    auto walk = [&](int start, int from) {
      std::vector<int> path{start};
      int prev = from, cur = start;
      for (;;) {
        int next = -1;
        for (int u : neighbours(cur))
          if (u != prev) next = u;
        if (next == -1) break;
        path.push_back(next);
        prev = cur;
        cur = next;
      }
      return path;
    };
    ComponentInfo info;
    int branch = -1, triple = 0, dbl = 0, edges = 0;
    for (int v : nodes) {
      const auto nb = neighbours(v);
      if (nb.size() > 3) throw ValidationError("Dynkin diagram node of degree > 3");
      if (nb.size() == 3) {
        if (branch != -1) throw ValidationError("Dynkin diagram with two branch nodes");
        branch = v;
      }
      for (int u : nb) {
        if (u < v) continue;
        ++edges;
        if (bond(u, v) == 2) ++dbl;
        if (bond(u, v) == 3) ++triple;
      }
    }
    if (edges != m - 1) throw ValidationError("Dynkin diagram contains a cycle");
    int doubled_count = 0;
    for (int v : nodes) doubled_count += is_doubled(v);
    if (m == 1) {
      info.type = {doubled_count ? Family::BC : Family::A, 1};
      info.nodes = nodes;
    } else if (triple) {
      if (m != 2 || doubled_count) throw ValidationError("invalid G2-type component");
      const int a = nodes[0], b = nodes[1];
      info.type = {Family::G, 2};
      info.nodes = gram(a, a) < gram(b, b) ? std::vector<int>{a, b} : std::vector<int>{b, a};
    } else if (branch != -1) {
      if (dbl || doubled_count) throw ValidationError("branched diagram with multiple bonds");
      std::vector<std::vector<int>> arms;
      for (int u : neighbours(branch)) arms.push_back(walk(u, branch));
      std::stable_sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
      const std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
      if (a0 == 1 && a1 == 1) {
        info.type = {Family::D, m};
        std::vector<int> order(arms[2].rbegin(), arms[2].rend());
        order.push_back(branch);
        order.push_back(arms[0][0]);
        order.push_back(arms[1][0]);
        info.nodes = order;
      } else if (a0 == 1 && a1 == 2 && a2 >= 2 && a2 <= 4) {
        info.type = {Family::E, m};
        info.nodes = {arms[1][1], arms[0][0], arms[1][0], branch};
        for (int u : arms[2]) info.nodes.push_back(u);
      } else {
        throw ValidationError("branched diagram is not of type D or E");
      }
    } else {
      std::vector<int> ends;
      for (int v : nodes)
        if (neighbours(v).size() == 1) ends.push_back(v);
      if (!dbl) {
        if (doubled_count) throw ValidationError("doubled root on a simply-laced chain");
        info.type = {Family::A, m};
        info.nodes = walk(ends[0], -1);
      } else {
        if (dbl != 1) throw ValidationError("chain with more than one double bond");
        std::vector<int> path = walk(ends[0], -1);
        std::size_t k = 0;
        while (bond(path[k], path[k + 1]) != 2) ++k;
        if (m == 4 && k == 1) {
          info.type = {Family::F, 4};
          if (gram(path[0], path[0]) < gram(path[3], path[3])) std::reverse(path.begin(), path.end());
          info.nodes = path;
          if (doubled_count) throw ValidationError("doubled root in F4 component");
        } else if (k == 0 || k + 2 == static_cast<std::size_t>(m)) {
          if (k == 0) std::reverse(path.begin(), path.end());
          const int end = path.back(), inner = path[path.size() - 2];
          const bool end_short = gram(end, end) < gram(inner, inner);
          if (m == 2 && !end_short) std::reverse(path.begin(), path.end());
          const bool bshape = m == 2 || end_short;
          if (doubled_count) {
            if (!bshape || doubled_count != 1 || !is_doubled(path.back()))
              throw ValidationError("doubled root is not the short end of the chain");
            info.type = {Family::BC, m};
          } else {
            info.type = {bshape ? Family::B : Family::C, m};
          }
          info.nodes = path;
        } else {
          throw ValidationError("double bond in the interior of a chain");
        }
      }
    }
    out.push_back(std::move(info));
  }
  return out;
}

// ---------------------------------------------------------------------------

RootSystem RootSystem::from_gram(RationalMatrix gram, std::vector<bool> doubled) {
  RootSystem rs;
  rs.rank_ = static_cast<int>(gram.rows());
  if (gram.cols() != gram.rows()) throw DimensionMismatch("Gram matrix must be square");
  if (rs.rank_ > kMaxRank) throw ValidationError("rank exceeds supported maximum");
  doubled.resize(static_cast<std::size_t>(rs.rank_), false);
  const int n = rs.rank_;
  rs.cartan_.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (gram(i, j) != gram(j, i)) throw ValidationError("Gram matrix is not symmetric");
      const Rational c = 2 * gram(i, j) / gram(j, j);
      if (c.get_den() != 1) throw ValidationError("Gram matrix yields a non-integral Cartan matrix");
      rs.cartan_[static_cast<std::size_t>(i * n + j)] = static_cast<int>(c.get_num().get_si());
    }
  rs.gram_ = std::move(gram);
  rs.doubled_ = std::move(doubled);
  rs.type_.components.clear();
  for (const auto& c : identify_components(rs.gram_, rs.doubled_)) rs.type_.components.push_back(c.type);

  std::set<IntVector> seen;
  std::vector<IntVector> queue;
  auto add = [&](IntVector v) {
    if (seen.insert(v).second) queue.push_back(std::move(v));
  };
  for (int i = 0; i < n; ++i) {
    IntVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    add(e);
    if (rs.doubled_[static_cast<std::size_t>(i)]) {
      e[static_cast<std::size_t>(i)] = 2;
      add(e);
    }
  }
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int i = 0; i < n; ++i) add(rs.reflect(i, IntVector(queue[k])));
  std::vector<IntVector> pos;
  for (const auto& v : seen)
    if (is_positive(v)) pos.push_back(v);
  std::sort(pos.begin(), pos.end(), [](const IntVector& a, const IntVector& b) {
    const auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (pos.size() * 2 != seen.size()) throw ValidationError("generated root set is not symmetric");
  rs.roots_ = pos;
  for (const auto& p : pos) {
    IntVector m = p;
    for (auto& x : m) x = -x;
    rs.roots_.push_back(std::move(m));
  }
  return rs;
}

bool RootSystem::is_root(const IntVector& v) const { return root_index(v) >= 0; }

long RootSystem::root_index(const IntVector& v) const {
  // Roots are few (at most a few hundred); a binary search over the positive
  // half keyed by (height, reverse lexicographic) order.
  if (v.size() != static_cast<std::size_t>(rank_)) return -1;
  const bool neg = !is_positive(v);
  IntVector p = v;
  if (neg)
    for (auto& x : p) x = -x;
  if (!is_positive(p)) return -1;
  const auto half = positive_roots();
  auto it = std::lower_bound(half.begin(), half.end(), p, [](const IntVector& a, const IntVector& b) {
    const auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (it == half.end() || *it != p) return -1;
  const long idx = it - half.begin();
  return neg ? idx + static_cast<long>(half.size()) : idx;
}

Rational RootSystem::inner(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != static_cast<std::size_t>(rank_) || y.size() != static_cast<std::size_t>(rank_))
    throw DimensionMismatch("vector length differs from root system rank");
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (y[j] != 0 && gram_(i, j) != 0) s += x[i] * gram_(i, j) * y[j];
  }
  return s;
}

Rational RootSystem::coroot_pairing(const RationalVector& v, int i) const {
  if (v.size() != static_cast<std::size_t>(rank_)) throw DimensionMismatch("vector length differs from root system rank");
  Rational s = 0;
  for (int j = 0; j < rank_; ++j)
    if (v[j] != 0) s += v[j] * cartan(j, i);
  return s;
}

RationalVector RootSystem::pairings(const RationalVector& v) const {
  RationalVector p(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) p[i] = coroot_pairing(v, i);
  return p;
}

RationalVector RootSystem::reflect(int i, const RationalVector& v) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("simple root index " + std::to_string(i) + " out of range");
  RationalVector r = v;
  r[static_cast<std::size_t>(i)] -= coroot_pairing(v, i);
  return r;
}

IntVector RootSystem::reflect(int i, const IntVector& v) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("simple root index " + std::to_string(i) + " out of range");
  std::int64_t p = 0;
  for (int j = 0; j < rank_; ++j) p += v[static_cast<std::size_t>(j)] * cartan(j, i);
  IntVector r = v;
  r[static_cast<std::size_t>(i)] -= p;
  return r;
}

RationalVector RootSystem::fundamental_coweight(int i) const {
  auto x = solve(gram_, unit_vector(static_cast<std::size_t>(rank_), static_cast<std::size_t>(i)));
  return *x;
}

// ---------------------------------------------------------------------------

RootSystem build_root_system(const RootSystemType& t) {
  t.validate();
  std::vector<RationalMatrix> blocks;
  std::vector<bool> doubled;
  for (const auto& c : t.components) {
    blocks.push_back(standard_gram(c));
    for (int i = 0; i < c.rank; ++i) doubled.push_back(c.family == Family::BC && i == c.rank - 1);
  }
  return RootSystem::from_gram(block_diagonal(blocks), doubled);
}

RationalVector reflect(const RootSystem& rs, int alpha_index, const RationalVector& v) {
  return rs.reflect(alpha_index, v);
}

bool dominant_chamber_test(const RootSystem& rs, const RationalVector& v) {
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.coroot_pairing(v, i) < 0) return false;
  return true;
}

std::uint64_t weyl_order(const SimpleType& t) {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C:
    case Family::BC: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::uint64_t weyl_order(const RootSystemType& t) {
  std::uint64_t o = 1;
  for (const auto& c : t.components) o *= weyl_order(c);
  return o;
}

std::uint64_t weyl_order(const RootSystem& rs) { return weyl_order(rs.type()); }

// ---------------------------------------------------------------------------

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.rank_ = rank;
  w.matrix_.assign(static_cast<std::size_t>(rank * rank), 0);
  for (int i = 0; i < rank; ++i) w.matrix_[static_cast<std::size_t>(i * rank + i)] = 1;
  return w;
}

WeylElement WeylElement::from_word(const RootSystem& rs, std::span<const int> word) {
  WeylElement w = identity(rs.rank());
  const int n = rs.rank();
  for (int i : word) {
    if (i < 0 || i >= n) throw std::out_of_range("reflection index out of range");
    // s_i changes only row i: x_i -> x_i - sum_j C[j][i] x_j.
    for (int col = 0; col < n; ++col) {
      std::int64_t s = 0;
      for (int j = 0; j < n; ++j) s += static_cast<std::int64_t>(rs.cartan(j, i)) * w.matrix_[static_cast<std::size_t>(j * n + col)];
      w.matrix_[static_cast<std::size_t>(i * n + col)] -= s;
    }
    w.word_.push_back(i);
  }
  return w;
}

RationalVector WeylElement::apply(const RationalVector& v) const {
  if (v.size() != static_cast<std::size_t>(rank_)) throw DimensionMismatch("Weyl element applied to wrong-length vector");
  RationalVector r(v.size(), Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      const auto m = (*this)(i, j);
      if (m != 0 && v[j] != 0) r[i] += Rational(static_cast<long>(m)) * v[j];
    }
  return r;
}

RationalMatrix WeylElement::as_matrix() const {
  RationalMatrix m(static_cast<std::size_t>(rank_), static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m(i, j) = static_cast<long>((*this)(i, j));
  return m;
}

WeylElement WeylElement::then(const WeylElement& next) const {
  if (next.rank_ != rank_) throw DimensionMismatch("Weyl elements of different rank");
  WeylElement w;
  w.rank_ = rank_;
  w.matrix_.assign(matrix_.size(), 0);
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) {
      const auto a = next(i, k);
      if (!a) continue;
      for (int j = 0; j < rank_; ++j) w.matrix_[static_cast<std::size_t>(i * rank_ + j)] += a * (*this)(k, j);
    }
  w.word_ = word_;
  w.word_.insert(w.word_.end(), next.word_.begin(), next.word_.end());
  return w;
}

WeylElement WeylElement::inverse(const RootSystem& rs) const {
  std::vector<int> rev(word_.rbegin(), word_.rend());
  WeylElement inv = from_word(rs, rev);
  if (!then(inv).is_identity()) throw Error("Weyl element word does not reproduce its matrix");
  return inv;
}

bool WeylElement::is_identity() const { return *this == identity(rank_); }

WeylElement longest_element(const RootSystem& rs) {
  const int n = rs.rank();
  // Drive a regular dominant point to the antidominant chamber.
  RationalVector x(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) x = x + rs.fundamental_coweight(i);
  std::vector<int> word;
  for (;;) {
    int next = -1;
    for (int i = 0; i < n && next < 0; ++i)
      if (rs.coroot_pairing(x, i) > 0) next = i;
    if (next < 0) break;
    x = rs.reflect(next, x);
    word.push_back(next);
  }
  return WeylElement::from_word(rs, word);
}

std::vector<int> opposition_involution(const RootSystem& rs) {
  const int n = rs.rank();
  const WeylElement w0 = longest_element(rs);
  std::vector<int> tau(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const RationalVector img = w0.apply(unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
    for (int j = 0; j < n; ++j)
      if (img == (Rational(-1) * unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(j)))) tau[i] = j;
    if (tau[i] < 0) throw Error("-w0 does not permute the simple roots");
  }
  return tau;
}

}  // namespace properlie
