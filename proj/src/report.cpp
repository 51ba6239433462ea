#include "properlie/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace properlie {

namespace {

Json decision_json(const Decision& d) {
  Json j;
  j["value"] = d.value ? Json(*d.value) : Json(nullptr);
  j["method"] = d.method;
  j["reason"] = d.reason;
  return j;
}

const char* outcome_name(ScanOutcome o) {
  switch (o) {
    case ScanOutcome::empty_intersection: return "empty_intersection";
    case ScanOutcome::witness_found: return "witness_found";
    case ScanOutcome::aborted: return "aborted";
  }
  return "?";
}

std::string yes_no(const Json& v) { return v.is_null() ? "undecided" : v.get<bool>() ? "yes" : "no"; }

std::string word_text(const Json& w) {
  if (w.empty()) return "e";
  std::string s;
  for (const auto& i : w) s += (s.empty() ? "s" : " s") + std::to_string(i.get<int>());
  return s;
}

std::string vec_text(const Json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get<std::string>();
  return s + ")";
}

void render_verdict(std::ostream& out, const Json& r) {
  out << r["id"].get<std::string>() << ": " << r["g"].get<std::string>() << " / " << r["h"].get<std::string>()
      << "  (rank_R h " << r["h_real_rank"] << ", a-hyp h " << r["h_a_hyp_rank"] << ")\n";
  if (r["a_h"].is_null())
    out << "  a_h: unavailable\n";
  else
    for (const auto& c : r["a_h"]) out << "  a_h column " << vec_text(c) << "\n";
  for (const char* key : {"c1", "c2", "c3"}) {
    const auto& d = r[key];
    out << "  " << char(std::toupper(key[0])) << key[1] << " " << yes_no(d["value"]) << "  [" << d["method"].get<std::string>()
        << "] " << d["reason"].get<std::string>() << "\n";
  }
  if (const auto& w = r["c2_witness"]; !w.is_null()) {
    out << "  C2 witness: u = " << word_text(w["word"]) << " (reflections applied left to right) maps b into a_h\n";
    for (const auto& img : w["images"]) out << "    u.X = " << vec_text(img) << "\n";
  }
  for (const auto& s : r["c3_scans"]) {
    out << "  h " << vec_text(s["h"]) << " from [" << s["diagram"].get<std::string>() << "] " << s["label"].get<std::string>()
        << ": " << s["outcome"].get<std::string>();
    if (!s["word"].is_null()) out << ", word " << word_text(s["word"]) << " -> " << vec_text(s["point"]);
    if (!s["note"].get<std::string>().empty()) out << " (" << s["note"].get<std::string>() << ")";
    out << ", " << s["visited"] << " visited\n";
  }
  for (const auto& a : r["advisories"]) out << "  advisory: " << a.get<std::string>() << "\n";
  out << "  profile " << r["profile"].get<std::string>();
  if (!r["expected"].is_null())
    out << ", expected " << r["expected"].get<std::string>() << " (" << r["expectation"].get<std::string>() << ")";
  out << "; " << r["points_visited"] << " points visited, " << std::fixed << std::setprecision(3)
      << r["seconds"].get<double>() << " s\n";
  out.unsetf(std::ios::fixed);
}

void render_two_plane(std::ostream& out, const Json& r) {
  out << "two-plane " << r["form"].get<std::string>() << ": all_c3 = " << (r["all_c3"].get<bool>() ? "true" : "false") << "\n"
      << "  A_1..A_k: k = " << r["k"] << " (from " << r["matching_diagrams"] << " matching diagrams)\n"
      << "  |X| = " << r["x_size"] << ", candidates before dedup " << r["raw_candidates"] << " <= bound (k+1)(|W|-1) = "
      << r["bound"] << (r["within_bound"].get<bool>() ? "" : " VIOLATED") << "\n"
      << "  distinct planes " << r["planes"] << ", checked " << r["planes_checked"] << "\n"
      << "  planes settled by A_j:";
  for (const auto& d : r["decided_by"]) out << " " << d;
  out << "\n  direct search estimate 10^" << r["straightforward_log10_ops"] << " operations\n";
  if (!r["failing_plane"].is_null()) {
    out << "  failing plane:";
    for (const auto& v : r["failing_plane"]) out << " " << vec_text(v);
    out << "\n";
    for (const auto& w : r["failing_witnesses"])
      out << "    " << word_text(w["word"]) << " -> " << vec_text(w["point"]) << "\n";
  }
  out << "  " << std::fixed << std::setprecision(3) << r["seconds"].get<double>() << " s\n";
  out.unsetf(std::ios::fixed);
}

}  // namespace

Json word_json(const std::vector<int>& word) {
  Json j = Json::array();
  for (int i : word) j.push_back(i + 1);
  return j;
}

Json vector_json(const RationalVector& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(to_string(q));
  return j;
}

Json verdict_json(const EmbeddingPair& p, const Verdict& v) {
  Json r;
  r["id"] = p.id;
  r["g"] = p.g->name;
  r["h"] = p.h_name;
  r["h_real_rank"] = p.h_real_rank;
  r["h_a_hyp_rank"] = p.h_a_hyp_rank;
  if (p.a_h) {
    Json cols = Json::array();
    for (const auto& c : p.a_h->columns()) cols.push_back(vector_json(c));
    r["a_h"] = cols;
  } else {
    r["a_h"] = nullptr;
  }
  r["c1"] = decision_json(v.c1);
  r["c2"] = decision_json(v.c2);
  r["c3"] = decision_json(v.c3);
  r["filter_rules"] = v.filter_rules;
  if (v.c2_evidence.decision.value == false && v.c2_evidence.decision.method == "scan") {
    Json w;
    w["word"] = word_json(v.c2_evidence.word);
    Json imgs = Json::array();
    for (const auto& x : v.c2_evidence.images) imgs.push_back(vector_json(x));
    w["images"] = imgs;
    r["c2_witness"] = w;
  } else {
    r["c2_witness"] = nullptr;
  }
  Json scans = Json::array();
  for (const auto& s : v.c3_evidence.scans) {
    Json j;
    j["diagram"] = weights_string(s.h.source.weights);
    j["label"] = s.h.source.label;
    j["h"] = vector_json(s.h.h);
    j["outcome"] = outcome_name(s.outcome);
    j["word"] = s.witness ? word_json(s.witness->word) : Json(nullptr);
    j["point"] = s.witness ? vector_json(s.witness->point) : Json(nullptr);
    j["note"] = s.note;
    j["visited"] = s.points_visited;
    scans.push_back(j);
  }
  r["c3_scans"] = scans;
  r["advisories"] = v.advisories;
  r["profile"] = v.profile();
  if (p.expected) {
    r["expected"] = profile_string(p.expected->c1, p.expected->c2, p.expected->c3);
    r["expectation"] = v.contradicts(*p.expected) ? "mismatch" : v.matches(*p.expected) ? "match" : "undecided";
  } else {
    r["expected"] = nullptr;
    r["expectation"] = nullptr;
  }
  r["decided"] = v.decided();
  r["points_visited"] = v.points_visited;
  r["seconds"] = v.seconds;
  r["provenance"] = p.provenance;
  return r;
}

Json two_plane_json(const RealForm& rf, const TwoPlaneReport& r) {
  Json j;
  j["form"] = r.form;
  j["all_c3"] = r.all_c3;
  j["k"] = r.candidates.reduced.size();
  j["matching_diagrams"] = neutral_elements(rf).size();
  Json as = Json::array();
  for (const auto& h : r.candidates.reduced) as.push_back(vector_json(h.h));
  j["A"] = as;
  j["x_size"] = r.candidates.x_size;
  j["raw_candidates"] = r.candidates.raw_count;
  j["bound"] = r.candidates.bound;
  j["within_bound"] = r.candidates.raw_count <= r.candidates.bound;
  j["planes"] = r.candidates.planes.size();
  j["planes_checked"] = r.planes_checked;
  j["decided_by"] = r.decided_by;
  j["straightforward_log10_ops"] = std::round(straightforward_log10_cost(rf) * 10) / 10;
  if (r.failing_plane) {
    Json basis = Json::array();
    for (const auto& v : r.failing_plane->basis()) basis.push_back(vector_json(v));
    j["failing_plane"] = basis;
    Json ws = Json::array();
    for (const auto& w : r.failing_witnesses) ws.push_back({{"word", word_json(w.word)}, {"point", vector_json(w.point)}});
    j["failing_witnesses"] = ws;
  } else {
    j["failing_plane"] = nullptr;
    j["failing_witnesses"] = Json::array();
  }
  j["seconds"] = r.seconds;
  return j;
}

Json form_row_json(const RealForm& rf) {
  return {{"name", rf.name},
          {"complex_type", rf.satake.complex_type.name()},
          {"restricted_type", rf.real_rank ? rf.restricted_type.name() : "0"},
          {"real_rank", rf.real_rank},
          {"a_hyp_rank", a_hyperbolic_rank(rf)}};
}

Json run_report(const std::string& command, Json results, const std::map<std::string, std::string>& digests) {
  Json r;
  r["tool"] = "properlie";
  r["version"] = PROPERLIE_VERSION;
  r["command"] = command;
  r["inputs"] = digests;
  r["results"] = std::move(results);
  return r;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  const std::string cmd = report["command"];
  const auto& res = report["results"];
  if (cmd == "list-forms") {
    for (const auto& f : res)
      out << f["name"].get<std::string>() << " | " << f["complex_type"].get<std::string>() << " | "
          << f["restricted_type"].get<std::string>() << " | " << f["real_rank"] << " | " << f["a_hyp_rank"] << "\n";
  } else if (cmd == "check" || cmd == "sweep") {
    for (const auto& r : res["pairs"]) render_verdict(out, r);
    if (cmd == "sweep") {
      out << "summary: " << res["total"] << " pairs, " << res["undecided"] << " undecided, " << res["mismatches"].size()
          << " mismatches";
      for (const auto& m : res["mismatches"]) out << " " << m.get<std::string>();
      out << "\n";
      for (const auto& [profile, n] : res["profiles"].items()) out << "  " << profile << ": " << n << "\n";
    }
    for (const auto& e : res["errors"]) out << "error: " << e.get<std::string>() << "\n";
  } else if (cmd == "two-plane") {
    render_two_plane(out, res);
  } else if (cmd == "validate-data") {
    for (const auto& [k, v] : res.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  } else {
    out << res.dump(2) << "\n";
  }
  out << "# properlie " << report["version"].get<std::string>();
  for (const auto& [k, v] : report["inputs"].items()) out << " | " << k << " sha256:" << v.get<std::string>().substr(0, 16);
  out << "\n";
  return out.str();
}

}  // namespace properlie
