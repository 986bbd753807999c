#include "alcove/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alcove/affine.hpp"
#include "alcove/errors.hpp"
#include "alcove/eval_oracle.hpp"
#include "alcove/fusion.hpp"
#include "alcove/restricted_ring.hpp"
#include "alcove/root_datum.hpp"
#include "alcove/table_io.hpp"

namespace alcove {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string family = "A";
  int rank = 1;
  i64 l = 5;
  std::string json_path;
  std::string csv_path;
  std::string cache_dir;
  i64 size_bound = kDefaultDomainSizeBound;
  std::vector<std::string> selectors;
};

void add_common(CLI::App* sub, Options& opts, bool with_level) {
  sub->add_option("--family", opts.family, "Root-system family (A, D or E)")
      ->check(CLI::IsMember({"A", "D", "E"}));
  sub->add_option("--rank", opts.rank, "Rank of the root system");
  if (with_level) sub->add_option("-l,--level", opts.l, "Level (odd, >= Coxeter number)");
  auto* json_opt = sub->add_option("--json", opts.json_path, "Write JSON output to this path");
  auto* csv_opt = sub->add_option("--csv", opts.csv_path, "Write CSV output to this path");
  json_opt->excludes(csv_opt);
  csv_opt->excludes(json_opt);
  sub->add_option("--cache", opts.cache_dir, "Directory for the on-disk multiplicity cache");
  sub->add_option("--size-bound", opts.size_bound,
                  "Abort enumerations larger than this many weights");
}

RootDatum make_datum(const Options& opts) {
  CacheConfig cache = CacheConfig::from_env();
  if (!opts.cache_dir.empty()) cache = CacheConfig{true, opts.cache_dir};
  return build_root_datum(family_from_string(opts.family), opts.rank, cache);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::Validation, "cannot open output file: " + path);
  out << content;
  require(out.good(), ErrorKind::Validation, "failed writing output file: " + path);
}

std::string basis_sibling_path(const std::string& csv_path) {
  const std::string suffix = ".csv";
  if (csv_path.size() > suffix.size() &&
      csv_path.compare(csv_path.size() - suffix.size(), suffix.size(), suffix) == 0)
    return csv_path.substr(0, csv_path.size() - suffix.size()) + ".basis.csv";
  return csv_path + ".basis.csv";
}

void emit_table(const FusionTable& table, const Options& opts) {
  if (!opts.csv_path.empty()) {
    write_file(opts.csv_path, table_to_csv(table));
    write_file(basis_sibling_path(opts.csv_path), basis_to_csv(table));
  } else if (!opts.json_path.empty()) {
    write_file(opts.json_path, table_to_json(table));
  } else {
    std::cout << table_to_json(table);
  }
}

void run_datum(const Options& opts) {
  RootDatum datum = make_datum(opts);
  std::ostringstream out;
  out << "name " << datum.name() << '\n'
      << "rank " << datum.rank() << '\n'
      << "positive_roots " << datum.positive_roots().size() << '\n'
      << "coxeter_number " << datum.coxeter_number() << '\n'
      << "weyl_order " << to_decimal(datum.weyl_order()) << '\n'
      << "cartan_det " << datum.cartan_det() << '\n'
      << "index_of_connection " << datum.index_of_connection() << '\n';
  out << "highest_root";
  for (i64 x : datum.highest_root().c) out << ' ' << x;
  out << '\n';
  std::cout << out.str();
}

ordered_json weights_json(const std::vector<Weight>& ws) {
  ordered_json arr = ordered_json::array();
  for (const Weight& w : ws) arr.push_back(w.c);
  return arr;
}

void run_domains(const Options& opts) {
  RootDatum datum = make_datum(opts);
  Domains dom = enumerate_domains(datum, opts.l, opts.size_bound);
  std::ostringstream out;
  out << "l " << dom.l << '\n'
      << "P_l " << dom.P_l.size() << '\n'
      << "X " << dom.X.size() << '\n'
      << "Xhat " << dom.Xhat.size() << '\n'
      << "Xbar " << dom.Xbar.size() << '\n'
      << "Xreg " << dom.Xreg.size() << '\n'
      << "xhat_outside_X " << dom.xhat_outside_X << '\n';
  std::cout << out.str();
  if (!opts.json_path.empty()) {
    ordered_json j;
    j["family"] = to_string(datum.family());
    j["rank"] = datum.rank();
    j["l"] = dom.l;
    j["X"] = weights_json(dom.X);
    j["Xhat"] = weights_json(dom.Xhat);
    j["Xbar"] = weights_json(dom.Xbar);
    j["Xreg"] = weights_json(dom.Xreg);
    j["xhat_outside_X"] = dom.xhat_outside_X;
    write_file(opts.json_path, j.dump(2) + "\n");
  }
  require(opts.csv_path.empty(), ErrorKind::InvalidArgument,
          "domains has no CSV form; use --json");
}

void run_prbar(const Options& opts) {
  RootDatum datum = make_datum(opts);
  Domains dom = enumerate_domains(datum, opts.l, opts.size_bound);
  std::vector<RestrictedElem> basis = pr_basis(datum, opts.l);

  if (!opts.csv_path.empty()) {
    std::ostringstream out;
    for (int i = 0; i < datum.rank(); ++i) out << "l" << i << ',';
    for (int i = 0; i < datum.rank(); ++i) out << "m" << i << ',';
    out << "c\n";
    for (size_t t = 0; t < basis.size(); ++t)
      for (const auto& [mu, c] : basis[t].coords) {
        for (i64 x : dom.Xhat[t].c) out << x << ',';
        for (i64 x : mu.c) out << x << ',';
        out << to_decimal(c) << '\n';
      }
    write_file(opts.csv_path, out.str());
    return;
  }

  ordered_json j;
  j["family"] = to_string(datum.family());
  j["rank"] = datum.rank();
  j["l"] = opts.l;
  j["labels"] = weights_json(dom.Xhat);
  ordered_json elements = ordered_json::array();
  for (const RestrictedElem& p : basis) {
    ordered_json terms = ordered_json::array();
    for (const auto& [mu, c] : p.coords) {
      ordered_json term;
      term["mu"] = mu.c;
      term["c"] = to_decimal(c);
      terms.push_back(std::move(term));
    }
    elements.push_back(std::move(terms));
  }
  j["elements"] = std::move(elements);
  const std::string text = j.dump(2) + "\n";
  if (!opts.json_path.empty())
    write_file(opts.json_path, text);
  else
    std::cout << text;
}

void run_cache_info(const Options& opts) {
  CacheConfig cache = CacheConfig::from_env();
  if (!opts.cache_dir.empty()) cache = CacheConfig{true, opts.cache_dir};
  std::vector<CacheFileInfo> files = cache_dir_info(cache.dir);
  std::ostringstream out;
  out << "dir " << cache.dir << '\n' << "files " << files.size() << '\n';
  for (const auto& f : files)
    out << f.path << " records " << f.records << " bytes " << f.bytes << '\n';
  std::cout << out.str();
}

int run_verify(const Options& opts) {
  static const std::set<std::string> known{"pr-product", "thm-pr", "bj",    "socle",
                                           "propor",     "strips", "oracle", "all"};
  std::set<std::string> wanted;
  for (const std::string& s : opts.selectors) {
    require(known.count(s) != 0, ErrorKind::InvalidArgument,
            "unknown verification selector: " + s);
    if (s == "all")
      wanted.insert({"pr-product", "thm-pr", "bj", "socle", "propor", "strips",
                     "oracle"});
    else
      wanted.insert(s);
  }

  RootDatum datum = make_datum(opts);
  const std::string where =
      " (" + datum.name() + ", l=" + std::to_string(opts.l) + ")";
  int failures = 0;
  auto report = [&](bool ok, const std::string& name, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << where
              << '\n';
    if (!ok) ++failures;
  };

  if (wanted.count("pr-product")) {
    PrProductSummary s = check_pr_product_all(datum, opts.l);
    report(s.ok, "pr-product",
           std::to_string(s.pairs) + " products match the Steinberg-multiplied "
                                     "orbit decomposition");
  }
  if (wanted.count("thm-pr")) {
    ThmPrBoxReport box = check_thm_pr_box(datum, opts.l, 3 * opts.l, 2);
    report(box.ok, "thm-pr",
           std::to_string(box.cases) + " translated character sums factor");
    if (box.printed_failure_count > 0) {
      std::cout << "  note: the naive factor f(lambda - l mu) fails in "
                << box.printed_failure_count << " of " << box.cases
                << " cases; first at lambda=";
      for (i64 x : box.printed_failures.front().first.c) std::cout << ' ' << x;
      std::cout << ", mu=";
      for (i64 x : box.printed_failures.front().second.c) std::cout << ' ' << x;
      std::cout << " (the f(dominant(lambda + rho - l mu)) form is verified)\n";
    }
  }
  if (wanted.count("bj")) {
    CodimReport r = check_bJ_codim(datum, opts.l);
    report(r.ok, "bj",
           "ideal dimension " + std::to_string(r.dim) + ", codimension " +
               std::to_string(r.codim) + " == " + std::to_string(r.expected_codim));
  }
  if (wanted.count("socle")) {
    SocleReport r = check_socle(datum, opts.l);
    report(r.ok, "socle",
           "annihilator of the radical has dimension " +
               std::to_string(r.annihilator_dim) + " and equals the projective span");
  }
  if (wanted.count("propor")) {
    ProporReport r = check_propor(datum, opts.l);
    report(r.ok, "propor",
           std::to_string(r.cases) +
               " Steinberg multiples are orbit-invariant");
  }
  if (wanted.count("strips")) {
    StripReport r = strip_complement_check(datum, opts.l, 3 * opts.l);
    report(r.ok && r.corner_in_box, "strips",
           std::to_string(r.box_size) +
               " dominant weights: strip complement equals the shifted cone");
  }
  if (wanted.count("oracle")) {
    bool ok = true;
    std::ostringstream detail;
    for (TableKind kind : {TableKind::VR_MINUS, TableKind::VR_PLUS}) {
      FusionTable exact = build_table(datum, opts.l, kind);
      EvalTable eval = kind == TableKind::VR_MINUS ? vr_eval_table(datum, opts.l)
                                                   : vrplus_eval_table(datum, opts.l);
      FusionTable numeric = table_from_eval(datum, eval);
      bool match = exact == numeric;
      ok = ok && match;
      detail << to_string(kind) << (match ? " matches" : " DIFFERS")
             << " (min singular " << eval.min_singular << ") ";
    }
    report(ok, "oracle", detail.str() + "against numerical recovery");
  }

  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Fusion-type character rings at a root of unity"};
  app.require_subcommand(1);

  Options opts;
  CLI::App* datum_cmd = app.add_subcommand("datum", "Print root-system invariants");
  add_common(datum_cmd, opts, false);
  CLI::App* domains_cmd =
      app.add_subcommand("domains", "Enumerate the fundamental domains");
  add_common(domains_cmd, opts, true);
  CLI::App* fusion_cmd =
      app.add_subcommand("fusion", "Structure constants of the alcove fusion ring");
  add_common(fusion_cmd, opts, true);
  CLI::App* vrplus_cmd =
      app.add_subcommand("vrplus", "Structure constants of the orbit-sum ring");
  add_common(vrplus_cmd, opts, true);
  CLI::App* prbar_cmd =
      app.add_subcommand("prbar", "Projective-ideal basis in the restricted ring");
  add_common(prbar_cmd, opts, true);
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  add_common(verify_cmd, opts, true);
  verify_cmd
      ->add_option("selectors", opts.selectors,
                   "pr-product thm-pr bj socle propor strips oracle all")
      ->required();
  CLI::App* cache_cmd = app.add_subcommand("cache-info", "Describe the on-disk cache");
  cache_cmd->add_option("--cache", opts.cache_dir,
                        "Directory for the on-disk multiplicity cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (datum_cmd->parsed()) run_datum(opts);
    if (domains_cmd->parsed()) run_domains(opts);
    if (fusion_cmd->parsed())
      emit_table(build_table(make_datum(opts), opts.l, TableKind::VR_MINUS), opts);
    if (vrplus_cmd->parsed())
      emit_table(build_table(make_datum(opts), opts.l, TableKind::VR_PLUS), opts);
    if (prbar_cmd->parsed()) run_prbar(opts);
    if (cache_cmd->parsed()) run_cache_info(opts);
    if (verify_cmd->parsed()) return run_verify(opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace alcove
