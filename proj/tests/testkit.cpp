#include "testkit.hpp"

#include <algorithm>
#include <map>

#include "properlie/chevalley.hpp"
#include "properlie/datafile.hpp"

namespace testkit {

using namespace properlie;

RationalVector act(const IntMat& m, const RationalVector& v) {
  RationalVector out(static_cast<std::size_t>(m.n), Rational(0));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (const auto c = m.a[static_cast<std::size_t>(i * m.n + j)]) out[static_cast<std::size_t>(i)] += c * v[static_cast<std::size_t>(j)];
  return out;
}

namespace {

IntMat multiply(const IntMat& x, const IntMat& y) {
  IntMat z{x.n, std::vector<std::int64_t>(x.a.size(), 0)};
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k)
      if (const auto c = x.a[static_cast<std::size_t>(i * x.n + k)])
        for (int j = 0; j < x.n; ++j) z.a[static_cast<std::size_t>(i * x.n + j)] += c * y.a[static_cast<std::size_t>(k * x.n + j)];
  return z;
}

}  // namespace

std::vector<IntMat> weyl_group_bruteforce(const RationalMatrix& gram) {
  const int n = static_cast<int>(gram.rows());
  std::vector<IntMat> gens;
  for (int i = 0; i < n; ++i) {
    // s_i(x) = x - (2 (x, a_i) / (a_i, a_i)) a_i, column j is s_i(e_j).
    IntMat s{n, std::vector<std::int64_t>(static_cast<std::size_t>(n * n), 0)};
    for (int j = 0; j < n; ++j) {
      s.a[static_cast<std::size_t>(j * n + j)] = 1;
      const Rational c = 2 * gram(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) /
                         gram(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
      s.a[static_cast<std::size_t>(i * n + j)] -= c.get_num().get_si() / c.get_den().get_si();
    }
    gens.push_back(s);
  }
  IntMat id{n, std::vector<std::int64_t>(static_cast<std::size_t>(n * n), 0)};
  for (int i = 0; i < n; ++i) id.a[static_cast<std::size_t>(i * n + i)] = 1;
  std::set<IntMat> seen{id};
  std::vector<IntMat> all{id};
  for (std::size_t k = 0; k < all.size(); ++k)
    for (const auto& g : gens) {
      auto m = multiply(g, all[k]);
      if (seen.insert(m).second) all.push_back(std::move(m));
    }
  return all;
}

std::set<RationalVector> orbit_bruteforce(const std::vector<IntMat>& group, const RationalVector& v) {
  std::set<RationalVector> out;
  for (const auto& g : group) out.insert(act(g, v));
  return out;
}

std::vector<RootSystemType> types_up_to_rank(int r, bool reducible) {
  std::vector<SimpleType> simple;
  std::set<std::string> names;
  auto add = [&](Family f, int k) {
    const RootSystemType t{{SimpleType{f, k}}};
    if (names.insert(t.canonical().name()).second) simple.push_back({f, k});
  };
  for (int k = 1; k <= r; ++k) {
    add(Family::A, k);
    if (k >= 2) add(Family::B, k);
    if (k >= 2) add(Family::C, k);
    if (k >= 4) add(Family::D, k);
    add(Family::BC, k);
  }
  if (r >= 2) add(Family::G, 2);
  if (r >= 4) add(Family::F, 4);
  std::vector<RootSystemType> out;
  for (const auto& s : simple) out.push_back({{s}});
  if (!reducible) return out;
  // Multisets of components, indices non-decreasing.
  std::vector<std::size_t> stack;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (stack.size() >= 2) {
      RootSystemType t;
      for (auto i : stack) t.components.push_back(simple[i]);
      out.push_back(t);
    }
    for (std::size_t i = from; i < simple.size(); ++i)
      if (simple[i].rank <= left) {
        stack.push_back(i);
        rec(i, left - simple[i].rank);
        stack.pop_back();
      }
  };
  rec(0, r);
  return out;
}

RationalVector random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  RationalVector v;
  for (int i = 0; i < n; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

RationalVector random_special_vector(std::mt19937_64& rng, const RootSystem& rs) {
  std::uniform_int_distribution<int> val(-2, 3);
  RationalVector p;
  for (int i = 0; i < rs.rank(); ++i) p.push_back(std::max(0, val(rng)));  // zeros are frequent
  return *solve(rs.gram(), p);
}

std::vector<int> random_word(std::mt19937_64& rng, int rank, int length) {
  std::vector<int> w;
  for (int i = 0; i < length; ++i) w.push_back(static_cast<int>(rng() % static_cast<unsigned>(rank)));
  return w;
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  // Product of a random upper unitriangular and a random diagonal matrix with
  // a column permutation.
  std::uniform_int_distribution<int> off(-3, 3), diag(1, 5);
  RationalMatrix m = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Rational(diag(rng), diag(rng));
    m(i, i).canonicalize();
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = off(rng);
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, perm[j]) = m(i, j);
  return out;
}

bool oracle_c2(const RealForm& rf, const Subspace& a_h) {
  const auto gens = b_space(rf).b_plus_generators;
  for (const auto& w : weyl_group_bruteforce(rf.restricted.gram())) {
    bool inside = true;
    for (const auto& x : gens) inside = inside && a_h.contains(act(w, x));
    if (inside) return false;
  }
  return true;
}

bool oracle_c3(const RealForm& rf, const Subspace& a_h) {
  const auto group = weyl_group_bruteforce(rf.restricted.gram());
  for (const auto& h : neutral_elements(rf)) {
    bool meets = false;
    for (const auto& p : orbit_bruteforce(group, h.h)) meets = meets || a_h.contains(p);
    if (!meets) return true;
  }
  return false;
}

Failures prop_reflection_isometry(std::mt19937_64& rng) {
  Failures bad;
  std::vector<RootSystemType> types = types_up_to_rank(4, false);
  for (const char* t : {"A8", "B8", "C8", "D8", "E6", "E7", "E8"}) types.push_back(RootSystemType::parse(t));
  for (const auto& t : types) {
    const auto rs = build_root_system(t);
    for (int i = 0; i < rs.rank(); ++i)
      for (int k = 0; k < 5; ++k) {
        const auto x = random_vector(rng, rs.rank()), y = random_vector(rng, rs.rank());
        const auto sx = rs.reflect(i, x), sy = rs.reflect(i, y);
        if (rs.inner(sx, sy) != rs.inner(x, y)) bad.push_back(t.name() + ": s" + std::to_string(i + 1) + " is not an isometry");
        if (rs.reflect(i, sx) != x) bad.push_back(t.name() + ": s" + std::to_string(i + 1) + " is not an involution");
      }
  }
  return bad;
}

Failures prop_w0_involution() {
  Failures bad;
  std::vector<RootSystemType> types = types_up_to_rank(4, false);
  for (const char* t : {"A7", "B6", "C5", "D5", "D6", "E6", "E7", "E8"}) types.push_back(RootSystemType::parse(t));
  for (const auto& t : types) {
    const auto rs = build_root_system(t);
    const auto w0 = longest_element(rs);
    if (!w0.then(w0).is_identity()) bad.push_back(t.name() + ": w0^2 != 1");
    for (const auto& r : rs.positive_roots()) {
      RationalVector v(r.begin(), r.end());
      const auto img = w0.apply(v);
      bool negative = true;
      for (const auto& c : img) negative = negative && c <= 0;
      if (!negative) {
        bad.push_back(t.name() + ": w0 keeps a positive root positive");
        break;
      }
    }
  }
  return bad;
}

Failures prop_dominant_uniqueness(std::mt19937_64& rng) {
  Failures bad;
  std::vector<RootSystemType> types = types_up_to_rank(4, true);
  for (const char* t : {"E6", "E7", "E8"}) types.push_back(RootSystemType::parse(t));
  for (const auto& t : types) {
    const auto rs = build_root_system(t);
    for (int k = 0; k < 10; ++k) {
      const auto v = random_vector(rng, rs.rank());
      const auto rep = dominant_representative(rs, v);
      const auto moved = apply_word(rs, random_word(rng, rs.rank(), 40), v);
      if (dominant_representative(rs, moved).point != rep.point) bad.push_back(t.name() + ": dominant representative differs");
      if (!dominant_chamber_test(rs, rep.point)) bad.push_back(t.name() + ": representative not dominant");
      if (apply_word(rs, rep.word, v) != rep.point) bad.push_back(t.name() + ": word does not reach representative");
    }
  }
  return bad;
}

Failures prop_jacobi_rank4() {
  Failures bad;
  for (const auto& t : types_up_to_rank(4, false)) {
    if (t.components[0].family == Family::BC) continue;
    const auto l = build_split_algebra(t);
    const auto dim = l.dimension();
    // [x,[y,z]] as a sparse integer combination.
    auto nested = [&](std::size_t x, std::size_t y, std::size_t z, std::map<std::size_t, long>& acc) {
      for (const auto& [k, c] : l.bracket_basis(y, z))
        for (const auto& [m, d] : l.bracket_basis(x, k)) acc[m] += static_cast<long>(c) * d;
    };
    bool ok = true;
    for (std::size_t i = 0; i < dim && ok; ++i)
      for (std::size_t j = i + 1; j < dim && ok; ++j)
        for (std::size_t k = j + 1; k < dim && ok; ++k) {
          std::map<std::size_t, long> acc;
          nested(i, j, k, acc);
          nested(j, k, i, acc);
          nested(k, i, j, acc);
          for (const auto& [m, c] : acc)
            if (c) {
              bad.push_back(t.name() + ": Jacobi fails on (" + l.basis_label(i) + ", " + l.basis_label(j) + ", " +
                            l.basis_label(k) + ")");
              ok = false;
              break;
            }
        }
  }
  return bad;
}

Failures prop_implication_chain(const std::vector<EmbeddingPair>& pairs) {
  Failures bad;
  for (bool skip : {false, true}) {
    CheckOptions o;
    o.skip_filters = skip;
    for (const auto& p : pairs) {
      const auto v = classify(p, o);
      if ((v.c3.value == true && v.c2.value != true) || (v.c2.value == true && v.c1.value != true))
        bad.push_back(p.id + ": implication chain broken, profile " + v.profile());
      for (const auto& w : verify_witnesses(p, v)) bad.push_back(p.id + ": " + w);
    }
  }
  return bad;
}

Failures prop_filter_scan_agreement(const std::vector<EmbeddingPair>& pairs) {
  Failures bad;
  CheckOptions scans;
  scans.skip_filters = true;
  for (const auto& p : pairs) {
    if (!p.a_h) continue;
    const auto f = apply_filters(p);
    const auto v = classify(p, scans);
    auto agree = [&](const Decision& d, const Decision& s, const char* c) {
      if (d.value && s.value && d.value != s.value) bad.push_back(p.id + ": filter and scan disagree on " + c);
    };
    agree(f.c1, v.c1, "C1");
    agree(f.c2, v.c2, "C2");
    agree(f.c3, v.c3, "C3");
  }
  return bad;
}

Failures prop_invariance(const std::vector<EmbeddingPair>& pairs, std::mt19937_64& rng, int trials) {
  Failures bad;
  CheckOptions scans;
  scans.skip_filters = true;
  for (const auto& p : pairs) {
    if (!p.a_h) continue;
    const auto base = classify(p, scans).profile();
    const auto& rs = p.g->restricted;
    for (int k = 0; k < trials; ++k) {
      // Conjugate by a random Weyl element.
      auto q = p;
      const auto word = random_word(rng, rs.rank(), 50);
      std::vector<RationalVector> cols;
      for (const auto& c : p.a_h->columns()) cols.push_back(apply_word(rs, word, c));
      q.a_h = RationalMatrix::from_columns(cols, static_cast<std::size_t>(rs.rank()));
      auto v = classify(q, scans);
      if (v.profile() != base) bad.push_back(p.id + ": conjugation changed " + base + " to " + v.profile());
      for (const auto& w : verify_witnesses(q, v)) bad.push_back(p.id + " (conjugated): " + w);
      // Change the basis of a_h.
      auto r = p;
      r.a_h = (*p.a_h) * random_invertible(rng, p.a_h->cols());
      v = classify(r, scans);
      if (v.profile() != base) bad.push_back(p.id + ": basis change changed " + base + " to " + v.profile());
      for (const auto& w : verify_witnesses(r, v)) bad.push_back(p.id + " (new basis): " + w);
    }
  }
  return bad;
}

Failures orbit_oracle_equivalence(const RootSystemType& t, int vectors, std::mt19937_64& rng) {
  Failures bad;
  const auto rs = build_root_system(t);
  const auto group = weyl_group_bruteforce(rs.gram());
  if (group.size() != weyl_order(rs)) bad.push_back(t.name() + ": |W| formula " + std::to_string(weyl_order(rs)) +
                                                    " vs generated " + std::to_string(group.size()));
  for (int k = 0; k < vectors; ++k) {
    const auto v = k % 2 ? random_vector(rng, rs.rank()) : random_special_vector(rng, rs);
    std::set<RationalVector> seen;
    std::size_t visits = 0;
    bool repeated = false, word_ok = true;
    orbit_iterate(rs, v, [&](const RationalVector& p, std::span<const int> word) {
      ++visits;
      repeated = repeated || !seen.insert(p).second;
      // The word maps the seed to the point.
      if (visits % 97 == 1) word_ok = word_ok && apply_word(rs, word, v) == p;
      return true;
    });
    const auto brute = orbit_bruteforce(group, v);
    const std::string where = t.name() + " v=" + to_string(v);
    if (repeated) bad.push_back(where + ": a point was visited twice");
    if (seen != brute) bad.push_back(where + ": visited set differs from the brute-force orbit");
    if (orbit_size(rs, v) != visits) bad.push_back(where + ": orbit_size differs from the visit count");
    if (!word_ok) bad.push_back(where + ": traversal word does not reproduce the point");
  }
  return bad;
}

std::vector<EmbeddingPair> bundled_pairs() {
  std::vector<EmbeddingPair> all;
  for (const char* f : {"pairs.txt", "pairs_limited.txt"}) {
    const auto cat = load_pair_catalog(data_path(f).string());
    all.insert(all.end(), cat.pairs.begin(), cat.pairs.end());
  }
  return all;
}

}  // namespace testkit
