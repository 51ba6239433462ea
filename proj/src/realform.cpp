#include "properlie/realform.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <regex>
#include <set>

#include "properlie/datafile.hpp"
#include "properlie/errors.hpp"

namespace properlie {

std::vector<int> SatakeDiagram::involution() const {
  std::vector<int> p(static_cast<std::size_t>(complex_type.rank()));
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
  for (auto [a, b] : arrows) {
    p[static_cast<std::size_t>(a)] = b;
    p[static_cast<std::size_t>(b)] = a;
  }
  return p;
}

bool SatakeDiagram::is_black(int i) const {
  return std::find(black_nodes.begin(), black_nodes.end(), i) != black_nodes.end();
}

void SatakeDiagram::validate() const {
  complex_type.validate();
  if (complex_type.components.size() != 1) throw ValidationError("Satake diagram needs a simple complex type");
  if (complex_type.components[0].family == Family::BC) throw ValidationError("complex type cannot be BC");
  const int n = complex_type.rank();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int b : black_nodes) {
    if (b < 0 || b >= n) throw ValidationError("black node " + std::to_string(b + 1) + " out of range");
    if (seen[static_cast<std::size_t>(b)]++) throw ValidationError("black node listed twice");
  }
  for (auto [a, b] : arrows) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw ValidationError("arrow endpoint out of range");
    if (a == b) throw ValidationError("arrow joins a node to itself");
    if (is_black(a) || is_black(b)) throw ValidationError("arrow touches a black node");
    if (seen[static_cast<std::size_t>(a)]++ || seen[static_cast<std::size_t>(b)]++)
      throw ValidationError("node carries more than one arrow");
  }
  // Look for an involutive diagram automorphism that keeps the black set and
  // restricts to the arrows on white nodes.
  const auto rs = build_root_system(complex_type);
  const auto p = involution();
  std::vector<int> sigma(static_cast<std::size_t>(n), -1);
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  auto extend = [&](auto&& self, int i) -> bool {
    if (i == n) {
      for (int k = 0; k < n; ++k)
        if (sigma[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] != k) return false;
      return true;
    }
    for (int c = 0; c < n; ++c) {
      if (taken[static_cast<std::size_t>(c)] || is_black(i) != is_black(c)) continue;
      if (!is_black(i) && c != p[static_cast<std::size_t>(i)]) continue;
      bool ok = rs.cartan(i, i) == rs.cartan(c, c);
      for (int j = 0; j < i && ok; ++j)
        ok = rs.cartan(i, j) == rs.cartan(c, sigma[static_cast<std::size_t>(j)]) &&
             rs.cartan(j, i) == rs.cartan(sigma[static_cast<std::size_t>(j)], c);
      if (!ok) continue;
      sigma[static_cast<std::size_t>(i)] = c;
      taken[static_cast<std::size_t>(c)] = true;
      if (self(self, i + 1)) return true;
      taken[static_cast<std::size_t>(c)] = false;
    }
    sigma[static_cast<std::size_t>(i)] = -1;
    return false;
  };
  if (!extend(extend, 0)) throw ValidationError("arrows do not come from a diagram automorphism");
}

RealForm make_real_form(std::string name, SatakeDiagram satake, const RootSystemType* expected_type,
                        const int* expected_rank) {
  satake.validate();
  RealForm rf;
  rf.name = std::move(name);
  rf.complex_system = build_root_system(satake.complex_type);
  const auto& g = rf.complex_system.gram();
  const std::size_t n = g.rows();
  const auto partner = satake.involution();

  // t* = span of black roots and differences of arrow-paired roots; a* is its
  // orthogonal complement, P the orthogonal projection onto it.
  std::vector<RationalVector> tcols;
  for (int b : satake.black_nodes) tcols.push_back(unit_vector(n, static_cast<std::size_t>(b)));
  for (auto [a, b] : satake.arrows)
    tcols.push_back(unit_vector(n, static_cast<std::size_t>(a)) - unit_vector(n, static_cast<std::size_t>(b)));
  RationalMatrix proj = RationalMatrix::identity(n);
  if (!tcols.empty()) {
    const auto t = RationalMatrix::from_columns(tcols, n);
    const auto tg = t.transpose() * g;
    const auto inv = inverse(tg * t);
    if (!inv) throw ValidationError(rf.name + ": degenerate compact part");
    const auto correction = t * (*inv) * tg;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) proj(i, j) -= correction(i, j);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const int ii = static_cast<int>(i);
    if (!satake.is_black(ii) && partner[i] >= ii) rf.representatives.push_back(ii);
  }
  const std::size_t r = rf.representatives.size();
  rf.real_rank = static_cast<int>(r);
  std::vector<RationalVector> bcols;
  for (int i : rf.representatives) bcols.push_back(proj.column(static_cast<std::size_t>(i)));
  rf.restricted_simple_roots = RationalMatrix::from_columns(bcols, n);
  const auto& bm = rf.restricted_simple_roots;
  const auto gres = bm.transpose() * g * bm;
  if (r) {
    const auto inv = inverse(gres);
    if (!inv) throw ValidationError(rf.name + ": restricted Gram matrix is singular");
    rf.restriction_map = (*inv) * bm.transpose() * g;
  } else {
    rf.restriction_map = RationalMatrix(0, n);
  }

  for (const auto& root : rf.complex_system.roots()) {
    RationalVector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<long>(root[k]);
    const auto y = rf.restrict(v);
    if (is_zero(y)) continue;
    IntVector iy(r);
    for (std::size_t k = 0; k < r; ++k) {
      if (y[k].get_den() != 1) throw ValidationError(rf.name + ": non-integral restricted root");
      iy[k] = y[k].get_num().get_si();
    }
    ++rf.multiplicities[iy];
  }
  std::vector<bool> doubled(r, false);
  for (std::size_t k = 0; k < r; ++k) {
    IntVector twice(r, 0);
    twice[k] = 2;
    doubled[k] = rf.multiplicities.count(twice) > 0;
  }
  rf.restricted = RootSystem::from_gram(gres, doubled);
  rf.restricted_type = rf.restricted.type();

  std::set<IntVector> generated(rf.restricted.roots().begin(), rf.restricted.roots().end());
  std::set<IntVector> projected;
  for (const auto& [k, m] : rf.multiplicities) projected.insert(k);
  if (generated != projected)
    throw ValidationError(rf.name + ": projected roots do not form the generated restricted root system");

  if (expected_type && !rf.restricted_type.isomorphic_to(*expected_type))
    throw ValidationError(rf.name + ": restricted type " + rf.restricted_type.name() + " but catalog says " +
                          expected_type->name());
  if (expected_rank && *expected_rank != rf.real_rank)
    throw ValidationError(rf.name + ": real rank " + std::to_string(rf.real_rank) + " but catalog says " +
                          std::to_string(*expected_rank));
  rf.satake = std::move(satake);
  return rf;
}

BSpaceData b_space(const RealForm& rf) {
  const auto& rs = rf.restricted;
  const auto r = static_cast<std::size_t>(rs.rank());
  BSpaceData out;
  if (r == 0) {
    out.b = Subspace(0);
    return out;
  }
  const auto tau = opposition_involution(rs);
  std::vector<bool> used(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    if (used[i]) continue;
    RationalVector x = rs.fundamental_coweight(static_cast<int>(i));
    used[i] = true;
    const auto j = static_cast<std::size_t>(tau[i]);
    if (!used[j]) {
      x = x + rs.fundamental_coweight(static_cast<int>(j));
      used[j] = true;
    }
    out.b_plus_generators.push_back(std::move(x));
  }
  out.b = Subspace::span(r, out.b_plus_generators);
  out.a_hyperbolic_rank = static_cast<int>(out.b.dim());
  return out;
}

int a_hyperbolic_rank(const RealForm& rf) { return b_space(rf).a_hyperbolic_rank; }
const RootSystem& restricted_root_system(const RealForm& rf) { return rf.restricted; }
const RootSystem& little_weyl_group(const RealForm& rf) { return rf.restricted; }

std::string normalize_form_name(const std::string& name) {
  std::string out;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  // so(p,q), su(p,q), sp(p,q) are listed with p <= q.
  static const std::regex pq(R"(^(so|su|sp)\((\d+),(\d+)\)$)");
  if (std::smatch m; std::regex_match(out, m, pq) && std::stoi(m[2]) > std::stoi(m[3]))
    out = m[1].str() + "(" + m[3].str() + "," + m[2].str() + ")";
  return out;
}

// name | complex_type | rank | black_nodes | arrows | restricted_type | real_rank
FormCatalog FormCatalog::load(const std::string& path) {
  const DataFile df = read_data_file(path, 7);
  FormCatalog cat;
  cat.digest_ = df.digest;
  for (const auto& rec : df.records) {
    const auto& f = rec.fields;
    const std::string where = path + ":" + std::to_string(rec.line) + ": ";
    try {
      SatakeDiagram sd;
      sd.complex_type = RootSystemType::parse(f[1]);
      if (std::stoi(f[2]) != sd.complex_type.rank()) throw DataFileError("rank field disagrees with type");
      for (int b : parse_int_list(f[3])) sd.black_nodes.push_back(b - 1);
      if (f[4] != "-")
        for (const auto& a : split(f[4], ',')) {
          const auto ends = split(a, '-');
          if (ends.size() != 2) throw DataFileError("bad arrow '" + a + "'");
          sd.arrows.emplace_back(std::stoi(ends[0]) - 1, std::stoi(ends[1]) - 1);
        }
      const auto expected = RootSystemType::parse(f[5]);
      const int rank = std::stoi(f[6]);
      const std::string key = normalize_form_name(f[0]);
      if (cat.index_.count(key)) throw DataFileError("duplicate form " + key);
      cat.index_[key] = cat.forms_.size();
      cat.forms_.push_back(std::make_shared<const RealForm>(make_real_form(key, std::move(sd), &expected, &rank)));
    } catch (const DataFileError& e) {
      throw DataFileError(where + e.what());
    } catch (const ValidationError& e) {
      throw DataFileError(where + e.what());
    } catch (const std::invalid_argument&) {
      throw DataFileError(where + "malformed number");
    }
  }
  return cat;
}

const FormCatalog& FormCatalog::standard() {
  static const FormCatalog cat = load(data_path("satake_catalog.txt").string());
  return cat;
}

const RealForm* FormCatalog::find(const std::string& name) const {
  const auto it = index_.find(normalize_form_name(name));
  return it == index_.end() ? nullptr : forms_[it->second].get();
}

const RealForm& FormCatalog::lookup(const std::string& name) const {
  if (const auto* rf = find(name)) return *rf;
  throw UnknownName("unknown real form '" + name + "'");
}

const RealForm& lookup_real_form(const std::string& name) { return FormCatalog::standard().lookup(name); }

}  // namespace properlie
