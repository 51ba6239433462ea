#include "properlie/nilporb.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "properlie/datafile.hpp"
#include "properlie/errors.hpp"

namespace properlie {

bool WeightedDynkinDiagram::is_zero() const {
  return std::all_of(weights.begin(), weights.end(), [](int w) { return w == 0; });
}

int WeightedDynkinDiagram::support_size() const {
  return static_cast<int>(std::count_if(weights.begin(), weights.end(), [](int w) { return w != 0; }));
}

std::string weights_string(const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

int orbit_dimension(const RootSystem& rs, const std::vector<int>& weights) {
  if (weights.size() != static_cast<std::size_t>(rs.rank())) throw DimensionMismatch("diagram length differs from rank");
  int d0 = rs.rank(), d1 = 0;
  for (const auto& root : rs.roots()) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) w += root[i] * weights[i];
    if (w == 0) ++d0;
    if (w == 1 || w == -1) ++d1;
  }
  // g_1 and g_-1 have the same dimension; only one of them is subtracted.
  return rs.rank() + static_cast<int>(rs.roots().size()) - d0 - d1 / 2;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

std::string partition_label(const std::vector<int>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

// Eigenvalues of the neutral element on the natural representation, descending.
std::vector<int> eigenvalues(const std::vector<int>& p) {
  std::vector<int> e;
  for (int d : p)
    for (int k = d - 1; k >= 1 - d; k -= 2) e.push_back(k);
  std::sort(e.rbegin(), e.rend());
  return e;
}

bool parts_have_even_multiplicity(const std::vector<int>& p, int parity) {
  std::map<int, int> mult;
  for (int d : p) ++mult[d];
  for (auto [d, m] : mult)
    if (d % 2 == parity && m % 2) return false;
  return true;
}

}  // namespace

std::vector<WeightedDynkinDiagram> classical_wdds(const RootSystemType& t) {
  if (t.components.size() != 1) throw ValidationError("classical_wdds needs a simple type");
  const auto st = t.components[0];
  const int n = st.rank;
  const auto rs = build_root_system(t);
  std::vector<WeightedDynkinDiagram> out;
  auto emit = [&](std::vector<int> w, std::string label) {
    WeightedDynkinDiagram d{std::move(w), std::move(label), 0};
    d.orbit_dim = orbit_dimension(rs, d.weights);
    out.push_back(std::move(d));
  };
  switch (st.family) {
    case Family::A:
      for (const auto& p : partitions(n + 1)) {
        const auto e = eigenvalues(p);
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(i + 1)];
        emit(w, partition_label(p));
      }
      break;
    case Family::B:
    case Family::C:
    case Family::D: {
      const int m = st.family == Family::B ? 2 * n + 1 : 2 * n;
      const int parity = st.family == Family::C ? 1 : 0;  // parts of this parity need even multiplicity
      for (const auto& p : partitions(m)) {
        if (!parts_have_even_multiplicity(p, parity)) continue;
        const auto e = eigenvalues(p);
        std::vector<int> h(e.begin(), e.begin() + n);
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i + 1 < n; ++i) w[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)] - h[static_cast<std::size_t>(i + 1)];
        const auto last = static_cast<std::size_t>(n - 1);
        if (st.family == Family::B) {
          w[last] = h[last];
        } else if (st.family == Family::C) {
          w[last] = 2 * h[last];
        } else {
          w[last] = h[last - 1] + h[last];
        }
        const bool very_even = st.family == Family::D &&
                               std::all_of(p.begin(), p.end(), [](int d) { return d % 2 == 0; });
        if (very_even) {
          emit(w, partition_label(p) + "I");
          // h_n -> -h_n exchanges the two fork weights
          auto w2 = w;
          std::swap(w2[last - 1], w2[last]);
          emit(w2, partition_label(p) + "II");
        } else {
          emit(w, partition_label(p));
        }
      }
      break;
    }
    default:
      throw ValidationError("classical_wdds: unsupported family " + st.name());
  }
  return out;
}

const std::map<std::string, std::size_t>& WddTable::expected_counts() {
  static const std::map<std::string, std::size_t> counts{{"G2", 5}, {"F4", 16}, {"E6", 21}, {"E7", 45}, {"E8", 70}};
  return counts;
}

std::string record_checksum(const std::vector<std::string>& record_lines) {
  std::string joined;
  for (const auto& l : record_lines) joined += l + "\n";
  return sha256_hex(joined);
}

WddTable WddTable::parse(const std::string& text, const std::string& origin) {
  const DataFile df = parse_data_text(text, 4, origin);
  WddTable table;
  table.digest_ = df.digest;
  std::vector<std::string> lines;
  std::set<std::pair<std::string, std::vector<int>>> seen;
  for (const auto& rec : df.records) {
    const auto& f = rec.fields;
    const std::string where = origin + ":" + std::to_string(rec.line) + ": ";
    lines.push_back(f[0] + " | " + f[1] + " | " + f[2] + " | " + f[3]);
    if (!expected_counts().count(f[0])) throw DataFileError(where + "unexpected type " + f[0]);
    const auto rs_rank = RootSystemType::parse(f[0]).rank();
    WeightedDynkinDiagram d;
    d.label = f[1];
    try {
      d.weights = parse_int_list(f[2]);
      d.orbit_dim = std::stoi(f[3]);
    } catch (const std::exception& e) {
      throw DataFileError(where + e.what());
    }
    if (static_cast<int>(d.weights.size()) != rs_rank) throw DataFileError(where + "wrong number of weights");
    for (int w : d.weights)
      if (w < 0 || w > 2) throw DataFileError(where + "weight outside {0,1,2}");
    if (d.is_zero() != (d.label == "0")) throw DataFileError(where + "only the orbit labelled 0 has the zero diagram");
    if (!seen.insert({f[0], d.weights}).second) throw DataFileError(where + "duplicate diagram");
    table.by_type_[f[0]].push_back(std::move(d));
  }
  std::string stated;
  for (const auto& dir : df.directives)
    if (dir.rfind("checksum sha256:", 0) == 0) stated = trim(dir.substr(16));
  if (stated.empty()) throw DataFileError(origin + ": missing checksum line");
  if (stated != record_checksum(lines)) throw DataFileError(origin + ": checksum mismatch");
  for (const auto& [type, count] : expected_counts()) {
    const auto it = table.by_type_.find(type);
    const std::size_t have = it == table.by_type_.end() ? 0 : it->second.size();
    if (have != count)
      throw DataFileError(origin + ": " + type + " has " + std::to_string(have) + " diagrams, expected " + std::to_string(count));
  }
  return table;
}

WddTable WddTable::load(const std::string& path) { return parse(read_text_file(path), path); }

const WddTable& WddTable::standard() {
  static const WddTable table = load(data_path("exceptional_wdd.txt").string());
  return table;
}

const std::vector<WeightedDynkinDiagram>& WddTable::entries(const std::string& type) const {
  const auto it = by_type_.find(type);
  if (it == by_type_.end()) throw UnknownName("no diagrams for type " + type);
  return it->second;
}

std::vector<WeightedDynkinDiagram> exceptional_wdds(const RootSystemType& t) {
  if (t.components.size() != 1) throw ValidationError("exceptional_wdds needs a simple type");
  const auto f = t.components[0].family;
  if (f != Family::E && f != Family::F && f != Family::G)
    throw ValidationError("exceptional_wdds: unsupported family " + t.name());
  return WddTable::standard().entries(t.name());
}

std::vector<WeightedDynkinDiagram> all_wdds(const RootSystemType& t) {
  if (t.components.size() != 1) throw ValidationError("diagrams are listed for simple types only");
  switch (t.components[0].family) {
    case Family::E:
    case Family::F:
    case Family::G: return exceptional_wdds(t);
    default: return classical_wdds(t);
  }
}

bool matches_satake(const WeightedDynkinDiagram& w, const SatakeDiagram& s) {
  if (w.weights.size() != static_cast<std::size_t>(s.complex_type.rank()))
    throw DimensionMismatch("diagram and Satake diagram have different ranks");
  for (int b : s.black_nodes)
    if (w.weights[static_cast<std::size_t>(b)] != 0) return false;
  for (auto [a, b] : s.arrows)
    if (w.weights[static_cast<std::size_t>(a)] != w.weights[static_cast<std::size_t>(b)]) return false;
  return true;
}

std::vector<NeutralElement> neutral_elements(const RealForm& rf) {
  const auto& g = rf.complex_system.gram();
  const auto n = static_cast<std::size_t>(rf.complex_system.rank());
  std::vector<NeutralElement> out;
  for (auto& d : all_wdds(rf.satake.complex_type)) {
    if (d.is_zero() || !matches_satake(d, rf.satake)) continue;
    RationalVector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = d.weights[i];
    const auto hc = solve(g, w);  // (h, alpha_i) = w_i
    NeutralElement ne{rf.restrict(*hc), d};
    if (is_zero(ne.h)) throw ValidationError(rf.name + ": matching diagram " + d.label + " restricts to zero");
    // a matching diagram's element already lies in a
    if (rf.restricted_simple_roots * ne.h != *hc)
      throw ValidationError(rf.name + ": element of " + d.label + " does not lie in a");
    for (std::size_t k = 0; k < ne.h.size(); ++k)
      if (rf.complex_system.inner(rf.restricted_simple_roots.column(k), *hc) !=
          d.weights[static_cast<std::size_t>(rf.representatives[k])])
        throw ValidationError(rf.name + ": restriction of " + d.label + " does not reproduce its weights");
    out.push_back(std::move(ne));
  }
  std::stable_sort(out.begin(), out.end(), [](const NeutralElement& a, const NeutralElement& b) {
    if (a.source.support_size() != b.source.support_size()) return a.source.support_size() < b.source.support_size();
    return a.source.weights < b.source.weights;
  });
  return out;
}

std::vector<NeutralElement> collinearity_reduce(const std::vector<NeutralElement>& h) {
  std::vector<NeutralElement> out;
  std::set<std::string> lines;
  for (const auto& e : h) {
    if (is_zero(e.h)) continue;
    if (lines.insert(Subspace::span(e.h.size(), {e.h}).key()).second) out.push_back(e);
  }
  return out;
}

}  // namespace properlie
