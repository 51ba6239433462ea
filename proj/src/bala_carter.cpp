#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "properlie/chevalley.hpp"
#include "properlie/errors.hpp"
#include "properlie/nilporb.hpp"
#include "properlie/orbit.hpp"

namespace properlie {

namespace {

constexpr std::int64_t kPrime = 2147483647;

std::int64_t mod(std::int64_t a) { return ((a % kPrime) + kPrime) % kPrime; }
std::int64_t mulmod(std::int64_t a, std::int64_t b) { return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % kPrime); }
std::int64_t invmod(std::int64_t a) {
  std::int64_t r = 1, e = kPrime - 2;
  for (a = mod(a); e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}
std::int64_t to_mod(const Rational& q) {
  const mpz_class n = q.get_num() % kPrime, d = q.get_den() % kPrime;
  return mulmod(mod(n.get_si()), invmod(d.get_si()));
}

// rank(A) == rank([A|b]) over F_p; the last column of `m` is b.
bool consistent_mod_p(std::vector<std::vector<std::int64_t>> m, std::size_t cols) {
  std::size_t row = 0;
  for (std::size_t c = 0; c <= cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    if (c == cols) return false;  // pivot in the right-hand side
    std::swap(m[piv], m[row]);
    const std::int64_t inv = invmod(m[row][c]);
    for (std::size_t k = c; k <= cols; ++k) m[row][k] = mulmod(m[row][k], inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] = mod(m[r][k] - mulmod(f, m[row][k]));
    }
    ++row;
  }
  return true;
}

struct Grading {
  std::vector<std::size_t> zero, two, minus_two;
  int d0 = 0;
};

Grading grading(const ChevalleyAlgebra& l, const std::vector<int>& w) {
  Grading g;
  const auto& roots = l.root_system().roots();
  for (std::size_t a = 0; a < roots.size(); ++a) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) v += roots[a][i] * w[i];
    if (v == 0) g.zero.push_back(a);
    if (v == 2) g.two.push_back(a);
    if (v == -2) g.minus_two.push_back(a);
  }
  g.d0 = l.rank() + static_cast<int>(g.zero.size());
  return g;
}

// Is there e in g_2 and f in g_-2 with [e, f] = h? Tested with random e,
// first modulo a prime and then exactly.
bool admits_triple(const ChevalleyAlgebra& l, const std::vector<int>& w, std::mt19937_64& rng) {
  const Grading g = grading(l, w);
  if (g.two.empty() || g.d0 < static_cast<int>(g.two.size())) return false;
  const auto n = static_cast<std::size_t>(l.rank());
  const auto& rs = l.root_system();
  RationalVector wv(n);
  for (std::size_t i = 0; i < n; ++i) wv[i] = w[i];
  const AlgebraElement h = l.cartan_element(*solve(rs.gram(), wv));

  std::map<std::size_t, std::size_t> row_of;  // root of weight 0 -> equation row
  for (std::size_t a : g.zero) row_of[a] = n + row_of.size();
  const std::size_t rows = n + g.zero.size(), cols = g.minus_two.size();

  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<long> coef(g.two.size());
    for (auto& c : coef) c = static_cast<long>(rng() % 1000003) + 1;
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols + 1, 0));
    RationalMatrix exact(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t b = g.minus_two[j];
      for (std::size_t t = 0; t < g.two.size(); ++t) {
        const std::size_t a = g.two[t];
        if (b == l.negative(a)) {
          const auto& co = l.coroot(a);
          for (std::size_t k = 0; k < n; ++k)
            if (co[k]) {
              m[k][j] = mod(m[k][j] + mulmod(mod(coef[t]), mod(co[k])));
              exact(k, j) += coef[t] * co[k];
            }
        } else if (const std::size_t s = l.sum(a, b); s != ChevalleyAlgebra::npos) {
          const int nab = l.structure_constant(a, b);
          m[row_of.at(s)][j] = mod(m[row_of.at(s)][j] + mulmod(mod(coef[t]), mod(nab)));
          exact(row_of.at(s), j) += coef[t] * nab;
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) m[k][cols] = to_mod(h[k]);
    if (!consistent_mod_p(m, cols)) continue;
    RationalVector rhs(rows, Rational(0));
    for (std::size_t k = 0; k < n; ++k) rhs[k] = h[k];
    if (solve(exact, rhs)) return true;
  }
  return false;
}

std::vector<WeightedDynkinDiagram> valid_diagrams(const RootSystemType& t) {
  const auto l = build_split_algebra(t);
  const int n = l.rank();
  std::mt19937_64 rng(20240601);
  std::vector<WeightedDynkinDiagram> out;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (;;) {
    const bool zero = std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
    if (zero || admits_triple(l, w, rng)) out.push_back({w, "", orbit_dimension(l.root_system(), w)});
    int i = 0;
    while (i < n && w[static_cast<std::size_t>(i)] == 2) w[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

bool is_distinguished(const RootSystem& rs, const std::vector<int>& w) {
  int d0 = rs.rank(), d2 = 0;
  for (const auto& root : rs.roots()) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) v += root[i] * w[i];
    d0 += v == 0;
    d2 += v == 2;
  }
  return d0 == d2;
}

const std::map<std::string, std::vector<std::string>>& exceptional_distinguished_names() {
  static const std::map<std::string, std::vector<std::string>> names{
      {"G2", {"G2", "G2(a1)"}},
      {"F4", {"F4", "F4(a1)", "F4(a2)", "F4(a3)"}},
      {"E6", {"E6", "E6(a1)", "E6(a3)"}},
      {"E7", {"E7", "E7(a1)", "E7(a2)", "E7(a3)", "E7(a4)", "E7(a5)"}},
      {"E8", {"E8", "E8(a1)", "E8(a2)", "E8(a3)", "E8(a4)", "E8(b4)", "E8(a5)", "E8(b5)", "E8(a6)", "E8(b6)", "E8(a7)"}},
  };
  return names;
}

std::map<std::string, std::vector<WeightedDynkinDiagram>>& computed_cache() {
  static std::map<std::string, std::vector<WeightedDynkinDiagram>> cache;
  return cache;
}

struct Distinguished {
  std::string name;  // without tilde
  std::vector<int> weights;
  int order = 0;  // position in the descending-dimension list
};

std::vector<Distinguished> distinguished_orbits(const SimpleType& st) {
  const RootSystemType t{{st}};
  const auto rs = build_root_system(t);
  std::vector<WeightedDynkinDiagram> all;
  if (st.family == Family::E || st.family == Family::F || st.family == Family::G)
    all = compute_exceptional_wdds(t);
  else
    all = classical_wdds(t);
  std::vector<WeightedDynkinDiagram> dist;
  for (const auto& d : all)
    if (!d.is_zero() && is_distinguished(rs, d.weights)) dist.push_back(d);
  std::stable_sort(dist.begin(), dist.end(), [](const auto& a, const auto& b) { return a.orbit_dim > b.orbit_dim; });
  std::vector<Distinguished> out;
  for (std::size_t j = 0; j < dist.size(); ++j) {
    std::string name = st.name();
    if (const auto it = exceptional_distinguished_names().find(name); it != exceptional_distinguished_names().end()) {
      if (it->second.size() != dist.size()) throw Error("unexpected number of distinguished orbits in " + name);
      name = it->second[j];
    } else if (j) {
      name += "(a" + std::to_string(j) + ")";
    }
    out.push_back({name, dist[j].weights, static_cast<int>(j)});
  }
  return out;
}

int family_priority(Family f) {
  switch (f) {
    case Family::E: return 0;
    case Family::D: return 1;
    case Family::C: return 2;
    case Family::B: return 3;
    default: return 4;
  }
}

struct LabelPart {
  int priority, rank;
  bool short_roots;
  int order;
  std::string text;
  auto key() const { return std::tie(priority, rank, short_roots, order); }
};

std::string assemble_label(std::vector<LabelPart> parts) {
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.priority != b.priority) return a.priority < b.priority;
    if (a.rank != b.rank) return a.rank > b.rank;
    if (a.short_roots != b.short_roots) return !a.short_roots;
    return a.order < b.order;
  });
  std::string out;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j].text == parts[i].text) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += parts[i].text;
    i = j;
  }
  return out;
}

}  // namespace

std::vector<WeightedDynkinDiagram> compute_exceptional_wdds(const RootSystemType& t) {
  const std::string key = t.name();
  if (const auto it = computed_cache().find(key); it != computed_cache().end()) return it->second;
  if (t.components.size() != 1 || !exceptional_distinguished_names().count(key))
    throw ValidationError("compute_exceptional_wdds: unsupported type " + key);

  auto diagrams = valid_diagrams(t);
  const auto rs = build_root_system(t);
  const int n = rs.rank();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < diagrams.size(); ++i) index[diagrams[i].weights] = i;
  Rational longest = 0;
  for (int i = 0; i < n; ++i) longest = std::max(longest, rs.gram()(i, i));

  std::map<std::vector<int>, std::string> label_of;
  auto assign = [&](const std::vector<int>& w, const std::string& label) {
    if (!index.count(w)) throw Error(key + ": Levi construction gives an invalid diagram " + weights_string(w));
    auto [it, fresh] = label_of.emplace(w, label);
    if (!fresh && it->second != label)
      throw Error(key + ": diagram " + weights_string(w) + " labelled both " + it->second + " and " + label);
  };
  assign(std::vector<int>(static_cast<std::size_t>(n), 0), "0");

  // Distinguished orbits of the algebra itself, by decreasing dimension.
  std::vector<const WeightedDynkinDiagram*> own;
  for (const auto& d : diagrams)
    if (!d.is_zero() && is_distinguished(rs, d.weights)) own.push_back(&d);
  std::stable_sort(own.begin(), own.end(), [](auto a, auto b) { return a->orbit_dim > b->orbit_dim; });
  const auto& own_names = exceptional_distinguished_names().at(key);
  if (own.size() != own_names.size()) throw Error(key + ": unexpected number of distinguished orbits");
  for (std::size_t j = 0; j < own.size(); ++j) assign(own[j]->weights, own_names[j]);

  // Proper Levi subalgebra on node set J with a distinguished orbit in each factor.
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    RationalMatrix gj(nodes.size(), nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = 0; b < nodes.size(); ++b) gj(a, b) = rs.gram()(nodes[a], nodes[b]);
    const auto comps = identify_components(gj, {});
    std::vector<std::vector<Distinguished>> choices;
    for (const auto& c : comps) choices.push_back(distinguished_orbits(c.type));
    std::vector<std::size_t> pick(comps.size(), 0);
    for (;;) {
      RationalVector wj(nodes.size(), Rational(0));
      std::vector<LabelPart> parts;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& d = choices[c][pick[c]];
        for (std::size_t k = 0; k < comps[c].nodes.size(); ++k)
          wj[static_cast<std::size_t>(comps[c].nodes[k])] = d.weights[k];
        bool short_roots = false;
        for (int v : comps[c].nodes) short_roots |= rs.gram()(nodes[static_cast<std::size_t>(v)], nodes[static_cast<std::size_t>(v)]) < longest;
        const bool tilde = short_roots && comps[c].type.family == Family::A;
        parts.push_back({family_priority(comps[c].type.family), comps[c].type.rank, short_roots, d.order,
                         (tilde ? "~" : "") + d.name});
      }
      // h lies in the span of the Levi's simple roots with alpha_j(h) = w_j there.
      const auto coeff = *solve(gj, wj);
      RationalVector h(static_cast<std::size_t>(n), Rational(0));
      for (std::size_t a = 0; a < nodes.size(); ++a) h[static_cast<std::size_t>(nodes[a])] = coeff[a];
      const auto dom = dominant_representative(rs, h).point;
      std::vector<int> w(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const Rational v = rs.inner(dom, unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
        if (v.get_den() != 1) throw Error(key + ": non-integral weight from Levi construction");
        w[static_cast<std::size_t>(i)] = static_cast<int>(v.get_num().get_si());
      }
      assign(w, assemble_label(parts));
      std::size_t c = 0;
      while (c < pick.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
      if (c == pick.size()) break;
    }
  }

  // Non-conjugate Levi subalgebras of the same type: '' marks the smaller orbit.
  std::map<std::string, std::vector<std::size_t>> by_label;
  for (const auto& [w, label] : label_of) by_label[label].push_back(index.at(w));
  for (auto& [label, idx] : by_label) {
    if (idx.size() > 2) throw Error(key + ": label " + label + " used by more than two orbits");
    if (idx.size() == 2) {
      std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return diagrams[a].orbit_dim < diagrams[b].orbit_dim; });
      if (diagrams[idx[0]].orbit_dim == diagrams[idx[1]].orbit_dim) throw Error(key + ": cannot order " + label);
      diagrams[idx[0]].label = "(" + label + ")''";
      diagrams[idx[1]].label = "(" + label + ")'";
    } else {
      diagrams[idx[0]].label = label;
    }
  }
  for (const auto& d : diagrams)
    if (d.label.empty()) throw Error(key + ": diagram " + weights_string(d.weights) + " has no Levi label");
  std::stable_sort(diagrams.begin(), diagrams.end(), [](const auto& a, const auto& b) {
    if (a.orbit_dim != b.orbit_dim) return a.orbit_dim < b.orbit_dim;
    return a.label < b.label;
  });
  computed_cache()[key] = diagrams;
  return diagrams;
}

std::string format_wdd_table(const std::vector<std::pair<std::string, std::vector<WeightedDynkinDiagram>>>& tables) {
  std::vector<std::string> lines;
  for (const auto& [type, diagrams] : tables)
    for (const auto& d : diagrams)
      lines.push_back(type + " | " + d.label + " | " + weights_string(d.weights) + " | " + std::to_string(d.orbit_dim));
  std::ostringstream out;
  out << "# Weighted Dynkin diagrams of nilpotent orbits in the exceptional Lie algebras.\n"
      << "# type | Bala-Carter label | weights (Bourbaki order) | complex orbit dimension\n"
      << "# ~ marks a factor made of short roots. Produced by `properlie gen-wdd`; the\n"
      << "# checksum covers the record lines and is verified on load.\n"
      << "@checksum sha256:" << record_checksum(lines) << "\n";
  for (const auto& l : lines) out << l << "\n";
  return out.str();
}

}  // namespace properlie
