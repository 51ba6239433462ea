#include "properlie/checker.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "properlie/datafile.hpp"
#include "properlie/errors.hpp"

namespace properlie {

namespace {

const char* yn(const std::optional<bool>& b) { return !b ? "?" : *b ? "y" : "n"; }

std::optional<bool> parse_flag(const std::string& s) {
  if (s == "y") return true;
  if (s == "n") return false;
  if (s == "?") return std::nullopt;
  throw ValidationError("bad profile entry '" + s + "' (expected y, n or ?)");
}

// Remaining share of a budget; 0 in `total` means unlimited.
struct Budget {
  std::uint64_t total = 0, used = 0;
  bool exhausted() const { return total && used >= total; }
  std::uint64_t remaining() const { return total ? total - used : 0; }
};

ScanOptions with_budget(ScanOptions s, const Budget& b) {
  s.budget = b.remaining();
  return s;
}

std::string describe(const WeightedDynkinDiagram& d) {
  return "[" + weights_string(d.weights) + "]" + (d.label.empty() ? "" : " " + d.label);
}

// Scalar c with u = c * v, if any.
std::optional<Rational> proportion(const RationalVector& u, const RationalVector& v) {
  std::optional<Rational> c;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (v[i] == 0) {
      if (u[i] != 0) return std::nullopt;
      continue;
    }
    const Rational q = u[i] / v[i];
    if (c && *c != q) return std::nullopt;
    c = q;
  }
  return c;
}

C3Evidence c3_scan(const RealForm& rf, const Subspace& a_h, const CheckOptions& options, Budget& budget) {
  C3Evidence ev;
  const auto hs = neutral_elements(rf);
  if (hs.empty()) {
    ev.decision = {false, "scan", "no nonzero nilpotent orbit meets g, so g has no sl2-triple"};
    return ev;
  }
  for (const auto& h : hs) {
    NeutralScan rec{h, ScanOutcome::aborted, std::nullopt, "", 0};
    // An element on the line of one already scanned has the same answer.
    bool derived = false;
    for (const auto& prev : ev.scans) {
      if (prev.outcome != ScanOutcome::witness_found) continue;
      if (const auto c = proportion(h.h, prev.h.h); c && *c != 0) {
        rec.outcome = ScanOutcome::witness_found;
        rec.witness = OrbitWitness{(*c) * prev.witness->point, prev.witness->word};
        rec.note = "scaled by " + to_string(*c) + " from " + describe(prev.h.source);
        derived = true;
        break;
      }
    }
    if (!derived) {
      if (budget.exhausted()) {
        ev.decision = {std::nullopt, "scan", "visit budget exhausted before " + describe(h.source)};
        return ev;
      }
      const auto r = orbit_meets_subspace(rf.restricted, h.h, a_h, with_budget(options.scan, budget));
      budget.used += r.points_visited;
      ev.points_visited += r.points_visited;
      rec.outcome = r.outcome;
      rec.witness = r.witness;
      rec.points_visited = r.points_visited;
    }
    ev.scans.push_back(rec);
    if (rec.outcome == ScanOutcome::empty_intersection) {
      ev.decision = {true, "scan", "orbit of h from " + describe(h.source) + " does not meet a_h"};
      return ev;
    }
    if (rec.outcome == ScanOutcome::aborted) {
      ev.decision = {std::nullopt, "scan",
                     "visit budget exhausted while scanning the orbit of h from " + describe(h.source)};
      return ev;
    }
  }
  ev.decision = {false, "scan", "every one of the " + std::to_string(hs.size()) + " neutral-element orbits meets a_h"};
  return ev;
}

C2Evidence c2_scan(const EmbeddingPair& p, const CheckOptions& options, Budget& budget) {
  C2Evidence ev;
  const RealForm& g = *p.g;
  const Subspace a_h = p.a_h_subspace();
  const auto bs = b_space(g);
  if (bs.b.dim() > a_h.dim()) {
    ev.decision = {true, "dimension",
                   "dim b = " + std::to_string(bs.b.dim()) + " > dim a_h = " + std::to_string(a_h.dim())};
    return ev;
  }
  if (bs.b_plus_generators.empty()) {
    ev.decision = {false, "dimension", "b = 0 lies in every subspace"};
    return ev;
  }
  // b1 = sum of the generators is regular, so orbit points and Weyl elements
  // correspond one to one.
  RationalVector b1 = zero_vector(static_cast<std::size_t>(g.real_rank));
  for (const auto& x : bs.b_plus_generators) b1 = b1 + x;
  ScanOptions scan = with_budget(options.scan, budget);
  scan.accept = [&](const OrbitWitness& w) {
    for (const auto& x : bs.b_plus_generators)
      if (!a_h.contains(apply_word(g.restricted, w.word, x))) return false;
    return true;
  };
  if (budget.exhausted()) {
    ev.decision = {std::nullopt, "scan", "visit budget exhausted"};
    return ev;
  }
  const auto r = orbit_meets_subspace(g.restricted, b1, a_h, scan);
  budget.used += r.points_visited;
  ev.points_visited = r.points_visited;
  switch (r.outcome) {
    case ScanOutcome::witness_found:
      ev.word = r.witness->word;
      for (const auto& x : bs.b_plus_generators) ev.images.push_back(apply_word(g.restricted, ev.word, x));
      ev.decision = {false, "scan", "a Weyl element maps b into a_h"};
      break;
    case ScanOutcome::empty_intersection:
      ev.decision = {true, "scan", "no Weyl element maps b into a_h"};
      break;
    case ScanOutcome::aborted:
      ev.decision = {std::nullopt, "scan", "visit budget exhausted during the b-orbit scan"};
      break;
  }
  return ev;
}

}  // namespace

std::string profile_string(const std::optional<bool>& c1, const std::optional<bool>& c2, const std::optional<bool>& c3) {
  return std::string(yn(c1)) + "," + yn(c2) + "," + yn(c3);
}

ExpectedProfile parse_profile(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ValidationError("profile '" + text + "' must have three entries");
  return {parse_flag(trim(parts[0])), parse_flag(trim(parts[1])), parse_flag(trim(parts[2]))};
}

void EmbeddingPair::validate() const {
  if (!g) throw ValidationError(id + ": missing real form");
  if (h_real_rank < 0 || h_real_rank > g->real_rank)
    throw ValidationError(id + ": rank_R h = " + std::to_string(h_real_rank) + " exceeds rank_R g");
  if (h_a_hyp_rank < 0 || h_a_hyp_rank > h_real_rank)
    throw ValidationError(id + ": a-hyperbolic rank of h exceeds its real rank");
  if (h_a_hyp_rank > a_hyperbolic_rank(*g))
    throw ValidationError(id + ": a-hyperbolic rank of h exceeds that of g");
  if (!a_h) {
    if (unavailable_reason.empty()) throw ValidationError(id + ": a_h missing without a reason");
    return;
  }
  if (a_h->rows() != static_cast<std::size_t>(g->real_rank))
    throw DimensionMismatch(id + ": a_h columns have length " + std::to_string(a_h->rows()) + ", expected " +
                            std::to_string(g->real_rank));
  if (rank(*a_h) != a_h->cols()) throw ValidationError(id + ": a_h columns are linearly dependent");
  if (a_h->cols() != static_cast<std::size_t>(h_real_rank))
    throw ValidationError(id + ": dim a_h = " + std::to_string(a_h->cols()) + " but rank_R h = " +
                          std::to_string(h_real_rank));
}

Subspace EmbeddingPair::a_h_subspace() const {
  if (!a_h) throw ValidationError(id + ": no embedding data: " + unavailable_reason);
  return Subspace::column_span(*a_h);
}

bool Verdict::contradicts(const ExpectedProfile& e) const {
  auto differs = [](const std::optional<bool>& got, const std::optional<bool>& want) { return got && got != want; };
  return differs(c1.value, e.c1) || differs(c2.value, e.c2) || differs(c3.value, e.c3);
}

bool check_c1(const EmbeddingPair& p) { return p.g->real_rank > p.h_real_rank; }

FilterOutcome apply_filters(const EmbeddingPair& p) {
  FilterOutcome f;
  const int rg = p.g->real_rank, ag = a_hyperbolic_rank(*p.g);
  const std::string ranks = "rank_R g = " + std::to_string(rg) + ", rank_R h = " + std::to_string(p.h_real_rank);
  f.c1 = {check_c1(p), "rank", ranks};
  if (!*f.c1.value) {
    f.rules.push_back("calabi-markus");
    f.c2 = {false, "implication", "C2 implies C1"};
    f.c3 = {false, "implication", "C3 implies C2"};
    return f;
  }
  if (ag == p.h_a_hyp_rank) {
    f.rules.push_back("a-hyp-equal");
    f.c2 = {false, "filter:a-hyp-equal", "a-hyp rank of g and h both " + std::to_string(ag)};
    f.c3 = {false, "implication", "C3 implies C2"};
    return f;
  }
  if (ag > p.h_real_rank) {
    f.rules.push_back("a-hyp-exceeds-rank");
    f.c2 = {true, "filter:a-hyp-exceeds-rank",
            "a-hyp rank of g " + std::to_string(ag) + " > rank_R h " + std::to_string(p.h_real_rank)};
  }
  if (p.h_real_rank == 1 && ag > 1) {
    f.rules.push_back("rank-one");
    f.c3 = {true, "filter:rank-one", "rank_R h = 1 < a-hyp rank of g " + std::to_string(ag)};
  }
  return f;
}

C2Evidence check_c2(const EmbeddingPair& p, const CheckOptions& options) {
  if (!p.a_h) return {{std::nullopt, "unavailable", p.unavailable_reason}, {}, {}, 0};
  Budget budget{options.scan.budget, 0};
  return c2_scan(p, options, budget);
}

C3Evidence c3_for_subspace(const RealForm& rf, const Subspace& a_h, const CheckOptions& options) {
  Budget budget{options.scan.budget, 0};
  return c3_scan(rf, a_h, options, budget);
}

C3Evidence check_c3(const EmbeddingPair& p, const CheckOptions& options) {
  if (!p.a_h) return {{std::nullopt, "unavailable", p.unavailable_reason}, {}, 0};
  return c3_for_subspace(*p.g, p.a_h_subspace(), options);
}

Verdict classify(const EmbeddingPair& p, const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  p.validate();
  Verdict v;
  v.pair_id = p.id;
  if (options.skip_filters) {
    v.c1 = {check_c1(p), "rank",
            "rank_R g = " + std::to_string(p.g->real_rank) + ", rank_R h = " + std::to_string(p.h_real_rank)};
  } else {
    auto f = apply_filters(p);
    v.c1 = f.c1;
    v.c2 = f.c2;
    v.c3 = f.c3;
    v.filter_rules = f.rules;
  }

  Budget budget{options.scan.budget, 0};
  if (!p.a_h) {
    const Decision missing{std::nullopt, "unavailable", p.unavailable_reason};
    if (!v.c2.value) v.c2 = missing;
    if (!v.c3.value) v.c3 = missing;
    if (!v.c3.value && p.h_real_rank == 2 && a_hyperbolic_rank(*p.g) > 1)
      v.advisories.push_back("rank_R h = 2 and the a-hyperbolic rank of " + p.g->name +
                             " exceeds 1: the 2-plane procedure (properlie two-plane " + p.g->name +
                             ") decides C3 for every such h");
  } else {
    if (!v.c2.value || options.skip_filters) {
      v.c2_evidence = c2_scan(p, options, budget);
      v.c2 = v.c2_evidence.decision;
    }
    const bool c3_implied_false = v.c2.value == false && !options.skip_filters;
    if (c3_implied_false && !v.c3.value) v.c3 = {false, "implication", "C3 implies C2"};
    if (!v.c3.value || options.skip_filters) {
      v.c3_evidence = c3_scan(*p.g, p.a_h_subspace(), options, budget);
      v.c3 = v.c3_evidence.decision;
    }
  }

  // Close under C3 => C2 => C1 and reject contradictions.
  if (v.c3.value == true && !v.c2.value) v.c2 = {true, "implication", "C3 implies C2"};
  if (v.c2.value == true && !v.c1.value) v.c1 = {true, "implication", "C2 implies C1"};
  if (v.c1.value == false && !v.c2.value) v.c2 = {false, "implication", "C2 implies C1"};
  if (v.c2.value == false && !v.c3.value) v.c3 = {false, "implication", "C3 implies C2"};
  if ((v.c3.value == true && v.c2.value == false) || (v.c2.value == true && v.c1.value == false))
    throw Error(p.id + ": inconsistent verdict " + v.profile());

  v.points_visited = budget.used;
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

std::vector<std::string> verify_witnesses(const EmbeddingPair& p, const Verdict& v) {
  std::vector<std::string> bad;
  if (!p.a_h) return bad;
  const Subspace a_h = p.a_h_subspace();
  const RootSystem& rs = p.g->restricted;
  if (v.c2_evidence.decision.value == false && v.c2_evidence.decision.method == "scan") {
    const auto gens = b_space(*p.g).b_plus_generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto img = apply_word(rs, v.c2_evidence.word, gens[i]);
      if (!a_h.contains(img) || i >= v.c2_evidence.images.size() || img != v.c2_evidence.images[i])
        bad.push_back("C2 witness does not map b+ generator " + std::to_string(i + 1) + " into a_h");
    }
  }
  for (const auto& s : v.c3_evidence.scans) {
    if (s.outcome != ScanOutcome::witness_found) continue;
    const auto& w = *s.witness;
    if (!a_h.contains(w.point)) bad.push_back("C3 witness for " + describe(s.h.source) + " is not in a_h");
    if (apply_word(rs, w.word, s.h.h) != w.point)
      bad.push_back("C3 witness word for " + describe(s.h.source) + " does not reproduce the point");
    if (!same_orbit(rs, w.point, s.h.h)) bad.push_back("C3 witness for " + describe(s.h.source) + " is off the orbit");
  }
  if (v.c3_evidence.decision.value == false && v.c3_evidence.decision.method == "scan" &&
      v.c3_evidence.scans.size() != neutral_elements(*p.g).size())
    bad.push_back("C3 false without a witness for every neutral element");
  return bad;
}

const EmbeddingPair& PairCatalog::lookup(const std::string& id) const {
  for (const auto& p : pairs)
    if (p.id == id) return p;
  throw UnknownName("unknown pair '" + id + "' in " + path);
}

PairCatalog parse_pair_catalog(const std::string& text, const std::string& origin, const FormCatalog& forms) {
  const auto file = parse_data_text(text, 8, origin);
  PairCatalog cat;
  cat.path = origin;
  cat.digest = file.digest;
  std::set<std::string> ids;
  for (const auto& rec : file.records) {
    const auto& f = rec.fields;
    const std::string where = origin + ":" + std::to_string(rec.line) + ": ";
    try {
      EmbeddingPair p;
      p.id = f[0];
      if (!ids.insert(p.id).second) throw ValidationError("duplicate pair id " + p.id);
      const std::string gname = normalize_form_name(f[1]);
      for (const auto& form : forms.forms())
        if (form->name == gname) p.g = form;
      if (!p.g) throw UnknownName("unknown real form '" + f[1] + "'");
      p.h_name = f[2];
      p.h_real_rank = std::stoi(f[3]);
      p.h_a_hyp_rank = std::stoi(f[4]);
      if (f[5].rfind("unavailable:", 0) == 0) {
        p.unavailable_reason = trim(f[5].substr(12));
      } else {
        std::vector<RationalVector> cols;
        for (const auto& c : split(f[5], ';')) {
          RationalVector col;
          for (const auto& e : split(c, ',')) col.push_back(parse_rational(trim(e)));
          cols.push_back(std::move(col));
        }
        for (const auto& c : cols)
          if (c.size() != cols[0].size()) throw DimensionMismatch("a_h columns of different lengths");
        p.a_h = RationalMatrix::from_columns(cols, cols.empty() ? 0 : cols[0].size());
      }
      if (f[6] != "-") p.expected = parse_profile(f[6]);
      p.provenance = f[7];
      p.validate();
      cat.pairs.push_back(std::move(p));
    } catch (const Error& e) {
      throw DataFileError(where + e.what());
    } catch (const std::logic_error& e) {
      throw DataFileError(where + "malformed number (" + e.what() + ")");
    }
  }
  return cat;
}

PairCatalog load_pair_catalog(const std::string& path, const FormCatalog& forms) {
  return parse_pair_catalog(read_text_file(path), path, forms);
}

}  // namespace properlie
