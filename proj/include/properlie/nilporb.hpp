#pragma once

// Weighted Dynkin diagrams of nilpotent orbits, matching against Satake
// diagrams, and the neutral elements they give in a.

#include <map>
#include <string>
#include <vector>

#include "properlie/exactlin.hpp"
#include "properlie/realform.hpp"
#include "properlie/rootsys.hpp"

namespace properlie {

struct WeightedDynkinDiagram {
  std::vector<int> weights;  // Bourbaki node order
  std::string label;         // partition or Bala-Carter name
  int orbit_dim = 0;

  bool is_zero() const;
  int support_size() const;
};

std::string weights_string(const std::vector<int>& w);  // "2,0,2"

// Complex orbit dimension dim g - dim g_0 - dim g_1 of the diagram.
int orbit_dimension(const RootSystem& rs, const std::vector<int>& weights);

std::vector<std::vector<int>> partitions(int n);

// Dynkin's recipe over partitions; family must be A, B, C or D.
std::vector<WeightedDynkinDiagram> classical_wdds(const RootSystemType& t);
// Bundled table; family must be E, F or G.
std::vector<WeightedDynkinDiagram> exceptional_wdds(const RootSystemType& t);
std::vector<WeightedDynkinDiagram> all_wdds(const RootSystemType& t);

bool matches_satake(const WeightedDynkinDiagram& w, const SatakeDiagram& s);

struct NeutralElement {
  RationalVector h;  // a-coordinates
  WeightedDynkinDiagram source;
};

// One element per matching nonzero diagram, ordered by support size then
// weights.
std::vector<NeutralElement> neutral_elements(const RealForm& rf);
std::vector<NeutralElement> collinearity_reduce(const std::vector<NeutralElement>& h);

// The exceptional table file: type | label | weights | orbit_dim, plus an
// "@checksum sha256:<hex>" line over the record lines.
class WddTable {
 public:
  static WddTable load(const std::string& path);
  static WddTable parse(const std::string& text, const std::string& origin);
  static const WddTable& standard();

  const std::vector<WeightedDynkinDiagram>& entries(const std::string& type) const;
  const std::map<std::string, std::vector<WeightedDynkinDiagram>>& all() const { return by_type_; }
  const std::string& digest() const { return digest_; }

  static const std::map<std::string, std::size_t>& expected_counts();

 private:
  std::map<std::string, std::vector<WeightedDynkinDiagram>> by_type_;
  std::string digest_;
};

std::string record_checksum(const std::vector<std::string>& record_lines);

// Exhaustive search over {0,1,2}^rank for diagrams of sl2-triples, labelled
// through Levi subalgebras (Bala-Carter). Used to produce the bundled table.
std::vector<WeightedDynkinDiagram> compute_exceptional_wdds(const RootSystemType& t);
std::string format_wdd_table(const std::vector<std::pair<std::string, std::vector<WeightedDynkinDiagram>>>& tables);

}  // namespace properlie
