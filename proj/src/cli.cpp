#include "properlie/cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <mutex>

#include "properlie/datafile.hpp"
#include "properlie/errors.hpp"
#include "properlie/report.hpp"

namespace properlie {

namespace {

enum Exit { kOk = 0, kError = 1, kUndecided = 2 };

struct Flags {
  std::uint64_t budget = 0;
  bool serial = false;
  bool skip_filters = false;
  bool json = false;
  bool progress = false;
  std::uint64_t progress_interval = 1'000'000;
  std::vector<std::string> catalogs;
  std::string inline_record;
  std::string pair_id;
  std::string form;
  std::string output;
};

std::vector<std::string> default_catalogs() {
  return {data_path("pairs.txt").string(), data_path("pairs_limited.txt").string()};
}

CheckOptions check_options(const Flags& f, std::ostream& err, std::mutex& err_mutex, const std::string& id) {
  CheckOptions o;
  o.skip_filters = f.skip_filters;
  o.scan.mode = f.serial ? ScanMode::serial : ScanMode::parallel;
  o.scan.budget = f.budget;
  o.scan.progress_interval = f.progress_interval;
  if (f.progress)
    o.scan.progress = [&err, &err_mutex, id](std::uint64_t visited) {
      std::lock_guard lock(err_mutex);
      err << "[" << id << "] " << visited << " points visited\n";
    };
  return o;
}

void emit(std::ostream& out, const Json& report, bool json) {
  if (json)
    out << report.dump(2) << "\n";
  else
    out << render_text(report);
}

std::map<std::string, std::string> base_digests() {
  return {{"satake_catalog", FormCatalog::standard().digest()}, {"exceptional_wdd", WddTable::standard().digest()}};
}

// Classifies pairs (in parallel across pairs unless --serial) and builds the
// "pairs" result block.
int classify_all(const std::vector<EmbeddingPair>& pairs, const Flags& f, std::ostream& err, Json& results) {
  std::vector<Json> rows(pairs.size());
  std::vector<std::string> errors(pairs.size());
  std::mutex err_mutex;
  const auto n = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1) if (!f.serial && n > 1)
  for (long i = 0; i < n; ++i) {
    const auto& p = pairs[static_cast<std::size_t>(i)];
    try {
      const Verdict v = classify(p, check_options(f, err, err_mutex, p.id));
      rows[static_cast<std::size_t>(i)] = verdict_json(p, v);
      for (const auto& problem : verify_witnesses(p, v)) errors[static_cast<std::size_t>(i)] += problem + "; ";
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = e.what();
    }
  }
  Json list = Json::array(), mismatches = Json::array(), errs = Json::array();
  std::map<std::string, int> profiles;
  int undecided = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!errors[i].empty()) {
      errs.push_back(pairs[i].id + ": " + errors[i]);
      continue;
    }
    const auto& r = rows[i];
    list.push_back(r);
    ++profiles[r["profile"].get<std::string>()];
    if (!r["decided"].get<bool>()) ++undecided;
    if (r["expectation"] == "mismatch") mismatches.push_back(pairs[i].id);
  }
  results["pairs"] = list;
  results["total"] = pairs.size();
  results["undecided"] = undecided;
  results["mismatches"] = mismatches;
  results["profiles"] = profiles;
  results["errors"] = errs;
  if (!errs.empty() || !mismatches.empty()) return kError;
  return undecided ? kUndecided : kOk;
}

int cmd_list_forms(const Flags& f, std::ostream& out) {
  Json rows = Json::array();
  for (const auto& rf : FormCatalog::standard().forms()) rows.push_back(form_row_json(*rf));
  emit(out, run_report("list-forms", rows, {{"satake_catalog", FormCatalog::standard().digest()}}), f.json);
  return kOk;
}

int cmd_check(const Flags& f, std::ostream& out, std::ostream& err) {
  std::vector<EmbeddingPair> selected;
  auto digests = base_digests();
  if (!f.inline_record.empty()) {
    auto cat = parse_pair_catalog(f.inline_record + "\n", "inline");
    selected = cat.pairs;
    digests["pairs:inline"] = cat.digest;
  } else {
    const auto catalogs = f.catalogs.empty() ? default_catalogs() : f.catalogs;
    for (const auto& path : catalogs) {
      auto cat = load_pair_catalog(path);
      for (const auto& p : cat.pairs)
        if (p.id == f.pair_id) {
          selected.push_back(p);
          digests["pairs:" + std::filesystem::path(path).filename().string()] = cat.digest;
        }
    }
    if (selected.empty()) throw UnknownName("unknown pair '" + f.pair_id + "'");
  }
  Json results;
  const int status = classify_all(selected, f, err, results);
  emit(out, run_report("check", results, digests), f.json);
  return status;
}

int cmd_sweep(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto catalogs = f.catalogs.empty() ? default_catalogs() : f.catalogs;
  std::vector<EmbeddingPair> pairs;
  auto digests = base_digests();
  for (const auto& path : catalogs) {
    auto cat = load_pair_catalog(path);
    digests["pairs:" + std::filesystem::path(path).filename().string()] = cat.digest;
    pairs.insert(pairs.end(), cat.pairs.begin(), cat.pairs.end());
  }
  Json results;
  const int status = classify_all(pairs, f, err, results);
  emit(out, run_report("sweep", results, digests), f.json);
  return status;
}

int cmd_two_plane(const Flags& f, std::ostream& out) {
  const RealForm& rf = FormCatalog::standard().lookup(f.form);
  const auto r = two_plane_scan(rf);
  emit(out, run_report("two-plane", two_plane_json(rf, r), base_digests()), f.json);
  return r.all_c3 ? kOk : kError;
}

int cmd_validate_data(const Flags& f, std::ostream& out) {
  Json res;
  const auto& forms = FormCatalog::standard();
  res["satake_catalog"] = std::to_string(forms.forms().size()) + " forms, sha256:" + forms.digest();
  const auto& wdd = WddTable::standard();
  std::string counts;
  for (const auto& [type, list] : wdd.all()) counts += type + "=" + std::to_string(list.size()) + " ";
  res["exceptional_wdd"] = counts + "sha256:" + wdd.digest();
  for (const auto& path : f.catalogs.empty() ? default_catalogs() : f.catalogs) {
    const auto cat = load_pair_catalog(path, forms);
    res["pairs:" + std::filesystem::path(path).filename().string()] =
        std::to_string(cat.pairs.size()) + " pairs, sha256:" + cat.digest;
  }
  res["status"] = "ok";
  emit(out, run_report("validate-data", res, base_digests()), f.json);
  return kOk;
}

int cmd_gen_wdd(const Flags& f, std::ostream& out) {
  std::vector<std::pair<std::string, std::vector<WeightedDynkinDiagram>>> tables;
  for (const char* t : {"G2", "F4", "E6", "E7", "E8"}) tables.emplace_back(t, compute_exceptional_wdds(RootSystemType::parse(t)));
  const std::string text = format_wdd_table(tables);
  WddTable::parse(text, "generated");  // same validation as on load
  if (f.output.empty()) {
    out << text;
  } else {
    std::ofstream file(f.output);
    if (!(file << text)) throw Error("cannot write " + f.output);
  }
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Properness of Clifford-Klein homogeneous spaces G/H: conditions C1, C2, C3", "properlie"};
  app.set_version_flag("--version", std::string(PROPERLIE_VERSION));
  app.require_subcommand(1);
  Flags f;

  auto add_scan_flags = [&f](CLI::App* c) {
    c->add_option("--budget", f.budget, "Cap on orbit points visited per pair (0 = unlimited)");
    c->add_flag("--serial", f.serial, "Single-threaded deterministic traversal");
    c->add_flag("--skip-filters", f.skip_filters, "Force the orbit scans even where a rank filter decides");
    c->add_flag("--progress", f.progress, "Report scan progress on stderr");
    c->add_option("--progress-interval", f.progress_interval, "Visits between progress reports");
  };

  auto* list = app.add_subcommand("list-forms", "Real forms with restricted type, real rank and a-hyperbolic rank");
  list->add_flag("--json", f.json, "Machine-readable output");

  auto* check = app.add_subcommand("check", "Classify one pair from the catalogs, or one given inline");
  check->add_option("pair", f.pair_id, "Pair id");
  check->add_option("--inline", f.inline_record, "A catalog record: id | g | h | rank | a-hyp rank | a_h | expected | note");
  check->add_option("--catalog", f.catalogs, "Pair catalog file(s)");
  check->add_flag("--json", f.json, "Machine-readable output");
  add_scan_flags(check);

  auto* sweep = app.add_subcommand("sweep", "Classify every pair of the given catalogs (default: bundled ones)");
  sweep->add_option("catalog", f.catalogs, "Pair catalog file(s)");
  sweep->add_flag("--json", f.json, "Machine-readable output");
  add_scan_flags(sweep);

  auto* two = app.add_subcommand("two-plane", "Run the 2-plane C3 procedure for rank-2 subalgebras of a real form");
  two->add_option("form", f.form, "Real form, e.g. e6(2)")->required();
  two->add_flag("--json", f.json, "Machine-readable output");

  auto* validate = app.add_subcommand("validate-data", "Load and validate all bundled data files");
  validate->add_option("--catalog", f.catalogs, "Pair catalog file(s)");
  validate->add_flag("--json", f.json, "Machine-readable output");

  auto* gen = app.add_subcommand("gen-wdd", "Recompute the exceptional weighted Dynkin diagram table");
  gen->group("");
  gen->add_option("--output", f.output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*list) return cmd_list_forms(f, out);
    if (*check) {
      if (f.pair_id.empty() == f.inline_record.empty()) throw ValidationError("give either a pair id or --inline");
      return cmd_check(f, out, err);
    }
    if (*sweep) return cmd_sweep(f, out, err);
    if (*two) return cmd_two_plane(f, out);
    if (*validate) return cmd_validate_data(f, out);
    if (*gen) return cmd_gen_wdd(f, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace properlie
