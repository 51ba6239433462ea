#pragma once

// Decision procedures for the properness conditions C1, C2, C3 of G/H, given
// the real form g and the subspace a_h of its split Cartan subspace a.

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "properlie/exactlin.hpp"
#include "properlie/nilporb.hpp"
#include "properlie/orbit.hpp"
#include "properlie/realform.hpp"

namespace properlie {

struct ExpectedProfile {
  std::optional<bool> c1, c2, c3;  // nullopt = expected undecided
};
std::string profile_string(const std::optional<bool>& c1, const std::optional<bool>& c2, const std::optional<bool>& c3);
ExpectedProfile parse_profile(const std::string& text);  // "y,n,n" with ? for undecided

struct EmbeddingPair {
  std::string id;
  std::shared_ptr<const RealForm> g;
  std::string h_name;
  // Columns span a_h in a-coordinates of g. Missing when the embedding cannot
  // be computed in scope; `unavailable_reason` then says why.
  std::optional<RationalMatrix> a_h;
  std::string unavailable_reason;
  int h_real_rank = 0;
  int h_a_hyp_rank = 0;
  std::string provenance;
  std::optional<ExpectedProfile> expected;

  // Checks ranks against a_h; throws ValidationError.
  void validate() const;
  Subspace a_h_subspace() const;
};

// Decision of one condition together with how it was reached.
struct Decision {
  std::optional<bool> value;
  std::string method;  // "rank", "filter:<rule>", "scan", "dimension", "implication", ...
  std::string reason;  // human-readable justification, or why undecided
};

struct FilterOutcome {
  Decision c1, c2, c3;
  std::vector<std::string> rules;
};
FilterOutcome apply_filters(const EmbeddingPair& p);

bool check_c1(const EmbeddingPair& p);

struct CheckOptions {
  ScanOptions scan;          // budget here is shared by all scans of one classify call
  bool skip_filters = false;
};

struct C2Evidence {
  Decision decision;
  // For C2 false: the word u with u.b inside a_h (so w = u^-1 has w.a_h containing b),
  // and the images of the b+ generators.
  std::vector<int> word;
  std::vector<RationalVector> images;
  std::uint64_t points_visited = 0;
};
C2Evidence check_c2(const EmbeddingPair& p, const CheckOptions& options = {});

// Scan record for one neutral element.
struct NeutralScan {
  NeutralElement h;
  ScanOutcome outcome = ScanOutcome::aborted;
  std::optional<OrbitWitness> witness;  // point of W.h inside a_h
  std::string note;                     // e.g. "scaled from 2,2"
  std::uint64_t points_visited = 0;
};

struct C3Evidence {
  Decision decision;
  std::vector<NeutralScan> scans;
  std::uint64_t points_visited = 0;
};
C3Evidence check_c3(const EmbeddingPair& p, const CheckOptions& options = {});

// Orbit scans of the neutral elements against an arbitrary subspace of a.
C3Evidence c3_for_subspace(const RealForm& rf, const Subspace& a_h, const CheckOptions& options = {});

struct Verdict {
  std::string pair_id;
  Decision c1, c2, c3;
  std::vector<std::string> filter_rules;
  C2Evidence c2_evidence;
  C3Evidence c3_evidence;
  std::vector<std::string> advisories;
  std::uint64_t points_visited = 0;
  double seconds = 0;

  bool decided() const { return c1.value && c2.value && c3.value; }
  std::string profile() const { return profile_string(c1.value, c2.value, c3.value); }
  bool matches(const ExpectedProfile& e) const { return c1.value == e.c1 && c2.value == e.c2 && c3.value == e.c3; }
  // A decided condition that differs from the expectation, or a decision
  // where the expectation is "undecided". Undecided results never contradict.
  bool contradicts(const ExpectedProfile& e) const;
};

Verdict classify(const EmbeddingPair& p, const CheckOptions& options = {});

// Exact re-check of every witness in a verdict; returns the failures.
std::vector<std::string> verify_witnesses(const EmbeddingPair& p, const Verdict& v);

// Pair catalog: id | g | h | h_real_rank | h_a_hyp_rank | a_h | expected | provenance.
// a_h is "c1;c2;..." with comma-separated rational columns, or
// "unavailable: <reason>". expected is "-" or a profile like "y,n,n".
struct PairCatalog {
  std::string path;
  std::string digest;
  std::vector<EmbeddingPair> pairs;

  const EmbeddingPair& lookup(const std::string& id) const;
};
PairCatalog load_pair_catalog(const std::string& path, const FormCatalog& forms = FormCatalog::standard());
PairCatalog parse_pair_catalog(const std::string& text, const std::string& origin,
                               const FormCatalog& forms = FormCatalog::standard());

// The 2-plane procedure for absolutely simple g with a-hyperbolic rank > 1:
// every 2-plane that could be a_h of a non-C3 space is spanned by A_1 and a
// point of X = union of the orbits W.A_j.
struct TwoPlaneCandidates {
  std::vector<NeutralElement> reduced;  // A_1..A_k
  std::size_t x_size = 0;               // |X|
  std::size_t raw_count = 0;            // |X| minus the points +-A_1
  std::uint64_t bound = 0;              // (k+1)(|W|-1)
  std::vector<Subspace> planes;         // deduplicated
};
TwoPlaneCandidates two_plane_candidate_set(const RealForm& rf);

struct TwoPlaneReport {
  std::string form;
  bool all_c3 = false;
  std::optional<Subspace> failing_plane;
  std::vector<OrbitWitness> failing_witnesses;  // one point of each W.A_j inside the failing plane
  std::size_t planes_checked = 0;
  std::vector<std::size_t> decided_by;          // decided_by[j] = planes avoided by W.A_j first
  TwoPlaneCandidates candidates;
  double seconds = 0;
};
TwoPlaneReport two_plane_scan(const RealForm& rf);

// Log10 of the operation count of the direct k-fold search for w_1..w_k with
// w_j A_j in one 2-plane; the search itself is refused above `bound`.
double straightforward_log10_cost(const RealForm& rf);
void require_straightforward_feasible(const RealForm& rf, double log10_bound = 9);

}  // namespace properlie
