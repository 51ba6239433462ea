#pragma once

// Real forms of complex simple Lie algebras given by Satake diagrams, and the
// data derived from them: restricted roots, little Weyl group, b-space.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "properlie/exactlin.hpp"
#include "properlie/rootsys.hpp"

namespace properlie {

// Node indices are 0-based in the Bourbaki numbering of the complex type.
struct SatakeDiagram {
  RootSystemType complex_type;
  std::vector<int> black_nodes;
  std::vector<std::pair<int, int>> arrows;

  // partner(i) = the arrow partner of i, or i itself.
  std::vector<int> involution() const;
  bool is_black(int i) const;
  void validate() const;  // throws ValidationError
};

struct RealForm {
  std::string name;
  SatakeDiagram satake;
  RootSystem complex_system;
  RootSystem restricted;            // simple roots ordered by representative node
  RootSystemType restricted_type;   // as identified from the restricted Gram matrix
  std::vector<int> representatives; // complex node giving each restricted simple root
  // Columns: restricted simple roots in complex root coordinates.
  RationalMatrix restricted_simple_roots;
  // Sends complex root coordinates to a-coordinates (restricted simple-root
  // coordinates); black directions go to zero.
  RationalMatrix restriction_map;
  // Restricted root (integer a-coordinates) -> multiplicity.
  std::map<IntVector, int> multiplicities;
  int real_rank = 0;

  RationalVector restrict(const RationalVector& complex_coords) const { return restriction_map * complex_coords; }
};

// Builds the real form and checks it against the expected restricted type and
// real rank when those are given.
RealForm make_real_form(std::string name, SatakeDiagram satake, const RootSystemType* expected_type = nullptr,
                        const int* expected_rank = nullptr);

struct BSpaceData {
  std::vector<RationalVector> b_plus_generators;
  Subspace b;
  int a_hyperbolic_rank = 0;
};

BSpaceData b_space(const RealForm& rf);
int a_hyperbolic_rank(const RealForm& rf);
const RootSystem& restricted_root_system(const RealForm& rf);
const RootSystem& little_weyl_group(const RealForm& rf);

// Catalog of real forms read from the Satake data file.
class FormCatalog {
 public:
  static FormCatalog load(const std::string& path);
  // The catalog in the data directory, loaded on first use.
  static const FormCatalog& standard();

  const RealForm& lookup(const std::string& name) const;
  const RealForm* find(const std::string& name) const;
  const std::vector<std::shared_ptr<const RealForm>>& forms() const { return forms_; }
  const std::string& digest() const { return digest_; }

 private:
  std::vector<std::shared_ptr<const RealForm>> forms_;
  std::map<std::string, std::size_t> index_;
  std::string digest_;
};

const RealForm& lookup_real_form(const std::string& name);

// Canonical spelling used for catalog keys: whitespace removed.
std::string normalize_form_name(const std::string& name);

}  // namespace properlie
