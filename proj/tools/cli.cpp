#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "quartic/arith.hpp"
#include "quartic/conic.hpp"
#include "quartic/descent.hpp"
#include "quartic/family.hpp"
#include "quartic/forms.hpp"
#include "quartic/local.hpp"
#include "quartic/serialize.hpp"
#include "run_config.hpp"

namespace quartic::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct Emission {
  std::string body;
  int code = kExitOk;
};

std::string envelope(const std::string& command, json params, json results) {
  json doc = {{"schema_version", kSchemaVersion},
              {"command", command},
              {"params", std::move(params)},
              {"results", std::move(results)}};
  return doc.dump(2) + "\n";
}

template <class Triple>
std::string triples_csv(const std::vector<Triple>& rows) {
  std::ostringstream out;
  out << "x,y,z\n";
  for (const auto& t : rows) out << t.x << ',' << t.y << ',' << t.z << '\n';
  return out.str();
}

template <class Triple>
json triples_json(const std::vector<Triple>& rows) {
  json arr = json::array();
  for (const auto& t : rows) arr.push_back(to_json(t));
  return arr;
}

std::vector<Int> split_ints(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ConfigError("expected a comma-separated integer list, got '" + text + "'");
    out.push_back(static_cast<Int>(v));
  }
  return out;
}

std::vector<local::LocalModulus> parse_moduli(const std::string& text) {
  std::vector<local::LocalModulus> out;
  for (Int q : split_ints(text)) out.push_back(local::LocalModulus::from_prime_power(q));
  return out;
}

void require_positive(Int value, const char* name) {
  if (value < 1) throw ConfigError(std::string(name) + " must be a positive integer");
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << body;
}

struct Options {
  // global
  std::string format;
  std::string out;
  std::string config;
  std::string workers;
  Int scan_limit = 0;
  bool verbose = false;
  // tables
  std::string table_case;
  Int n_max = 16;
  Int p_max = 251;
  std::string seed_dir;
  // search
  Int n = 0, m = 0, p = 0, bound = 0;
  Int a = 0, b = 0, c = 0, d = 0;
  // conic
  Int ell = 0, z_max = 0;
  bool brute_check = false;
  // trace
  Int x = 0, y = 0, z = 0;
  // local
  std::string form;
  std::string prime_powers;
  Int prime_powers_up_to = 0;
  Int system_bound = -1;
  // hasse-scan
  Int q_max = 0, d_max = 0;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quartic x^4 + 2n x^2 y^2 + m y^4 = z^2: family tables, searches, descent traces, local checks",
               "quartic"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;

  auto* fmt_opt = app.add_option("--format", o.format, "Output format: csv or json");
  auto* out_opt = app.add_option("--out", o.out, "Write output to PATH instead of stdout");
  app.add_option("--config", o.config, "Flat key = value config file");
  auto* workers_opt = app.add_option("--workers", o.workers, "Worker threads, or 'auto'");
  auto* scan_opt = app.add_option("--scan-limit", o.scan_limit, "Largest modulus for residue scans");
  app.add_flag("--verbose", o.verbose, "Log each phase on stderr");

  auto* tables = app.add_subcommand("tables", "Enumerate family combinations (case-i or case-ii)");
  tables->add_option("case", o.table_case, "case-i or case-ii")->check(CLI::IsMember({"case-i", "case-ii"}));
  tables->add_option("--n-max", o.n_max, "Largest n for case-i");
  tables->add_option("--p-max", o.p_max, "Largest p for case-ii");
  tables->add_option("--seed-tables", o.seed_dir, "Regenerate golden tables and diff documents into DIR");

  auto* search = app.add_subcommand("search", "Search x^4 + 2n x^2 y^2 + m y^4 = z^2 for 1 <= x, y <= bound");
  search->add_option("--n", o.n)->required();
  search->add_option("--m", o.m)->required();
  search->add_option("--bound", o.bound)->required();

  auto* search_general = app.add_subcommand("search-general", "Search a x^4 + b x^2 y^2 + c y^4 = d z^2");
  search_general->add_option("--a", o.a)->required();
  search_general->add_option("--b", o.b)->required();
  search_general->add_option("--c", o.c)->required();
  search_general->add_option("--d", o.d)->required();
  search_general->add_option("--bound", o.bound)->required();

  auto* conic_cmd = app.add_subcommand("conic", "Primitive solutions of x^2 + ell y^2 = z^2 with z <= z-max");
  conic_cmd->add_option("--ell", o.ell)->required();
  conic_cmd->add_option("--z-max", o.z_max)->required();
  conic_cmd->add_flag("--brute-check", o.brute_check, "Compare against the brute-force oracle");

  auto* trace = app.add_subcommand("trace", "Residue-branch report for (n, p), or a descent trace for a solution");
  trace->add_option("--n", o.n)->required();
  auto* p_opt = trace->add_option("--p", o.p);
  auto* m_opt = trace->add_option("--m", o.m);
  auto* x_opt = trace->add_option("--x", o.x);
  auto* y_opt = trace->add_option("--y", o.y);
  auto* z_opt = trace->add_option("--z", o.z);
  p_opt->excludes(m_opt);
  x_opt->needs(y_opt, z_opt);

  auto* local_cmd = app.add_subcommand("local", "Prime-power solvability and bounded global search for a,b,c,d");
  local_cmd->add_option("--form", o.form, "a,b,c,d")->required();
  auto* pp_opt = local_cmd->add_option("--prime-powers", o.prime_powers, "Comma-separated prime powers");
  auto* ppu_opt = local_cmd->add_option("--prime-powers-up-to", o.prime_powers_up_to, "Every prime power <= L");
  local_cmd->add_option("--bound", o.bound, "Global search bound")->required();
  local_cmd->add_option("--system-bound", o.system_bound, "Also compare with the (u, v, w, z) system");
  pp_opt->excludes(ppu_opt);

  auto* selmer = app.add_subcommand("selmer", "3x^3 + 4y^3 + 5z^3 = 0: bounded search and prime-power witnesses");
  selmer->add_option("--bound", o.bound)->required();
  selmer->add_option("--prime-powers", o.prime_powers, "Comma-separated prime powers")->required();

  auto* hasse = app.add_subcommand("hasse-scan", "List (q, d) satisfying the generalized Lind-Reichardt conditions");
  hasse->add_option("--q-max", o.q_max)->required();
  hasse->add_option("--d-max", o.d_max)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto log = [&](const std::string& phase) {
    if (o.verbose) err << "[quartic] " << phase << "\n";
  };

  try {
    ConfigOverrides file;
    if (!o.config.empty()) {
      log("loading config " + o.config);
      file = load_config_file(o.config);
    }
    ConfigOverrides cmdline;
    if (fmt_opt->count()) cmdline.format = parse_format(o.format);
    if (out_opt->count()) cmdline.output_path = o.out;
    if (workers_opt->count()) cmdline.workers = parse_workers(o.workers);
    if (scan_opt->count()) {
      require_positive(o.scan_limit, "--scan-limit");
      cmdline.scan_limit = o.scan_limit;
    }
    const RunConfig cfg = resolve_config(file, cmdline);
    const bool as_json = cfg.format == OutputFormat::Json;

    Emission e;
    if (tables->parsed()) {
      if (!o.seed_dir.empty()) {
        const std::filesystem::path dir(o.seed_dir);
        std::filesystem::create_directories(dir);
        const auto t1 = family::enumerate_case_i(o.n_max);
        const auto t2 = family::enumerate_case_ii(o.p_max);
        write_file(dir / "table_case_i.csv", family::table_csv(t1, family::CaseTag::CaseI));
        write_file(dir / "table_case_ii.csv", family::table_csv(t2, family::CaseTag::CaseII));
        write_file(dir / "table_case_i_published_diff.md",
                   family::published_diff_markdown(t1, family::CaseTag::CaseI));
        write_file(dir / "table_case_ii_published_diff.md",
                   family::published_diff_markdown(t2, family::CaseTag::CaseII));
        err << "wrote golden tables and diff documents to " << dir.string() << "\n";
        return kExitOk;
      }
      if (o.table_case.empty()) throw ConfigError("tables: expected case-i or case-ii");
      const bool case_i = o.table_case == "case-i";
      require_positive(case_i ? o.n_max : o.p_max, case_i ? "--n-max" : "--p-max");
      log("enumerating " + o.table_case);
      const auto rows = case_i ? family::enumerate_case_i(o.n_max) : family::enumerate_case_ii(o.p_max);
      const auto tag = case_i ? family::CaseTag::CaseI : family::CaseTag::CaseII;
      if (as_json) {
        json res = json::array();
        for (const auto& c : rows) res.push_back(to_json(c));
        json params = case_i ? json{{"case", o.table_case}, {"n_max", o.n_max}}
                             : json{{"case", o.table_case}, {"p_max", o.p_max}};
        e.body = envelope("tables", params, res);
      } else {
        e.body = family::table_csv(rows, tag);
      }
    } else if (search->parsed()) {
      require_positive(o.bound, "--bound");
      const FamilyQuarticForm form(o.n, o.m);
      log("searching");
      const auto sols = quartic::search(form, o.bound, cfg.workers);
      e.body = as_json ? envelope("search", {{"n", o.n}, {"m", o.m}, {"bound", o.bound}}, triples_json(sols))
                       : triples_csv(sols);
      const Int p = o.n * o.n - o.m;
      if (!sols.empty() && p > 0 && std::holds_alternative<family::FamilyCombo>(family::validate_combo(o.n, p))) {
        err << "verification mismatch: solutions found for a form satisfying every family hypothesis\n";
        e.code = kExitMismatch;
      }
    } else if (search_general->parsed()) {
      require_positive(o.bound, "--bound");
      const GeneralQuarticForm form(o.a, o.b, o.c, o.d);
      log("searching");
      const auto sols = quartic::search_general(form, o.bound, cfg.workers);
      e.body = as_json ? envelope("search-general",
                                  {{"a", o.a}, {"b", o.b}, {"c", o.c}, {"d", o.d}, {"bound", o.bound}},
                                  triples_json(sols))
                       : triples_csv(sols);
    } else if (conic_cmd->parsed()) {
      require_positive(o.ell, "--ell");
      require_positive(o.z_max, "--z-max");
      log("enumerating parametrization");
      const auto triples = conic::enumerate_primitive(o.ell, o.z_max, cfg.workers);
      e.body = as_json ? envelope("conic", {{"ell", o.ell}, {"z_max", o.z_max}, {"brute_check", o.brute_check}},
                                  triples_json(triples))
                       : triples_csv(triples);
      if (o.brute_check) {
        log("running brute-force oracle");
        if (conic::brute_force_oracle(o.ell, o.z_max, cfg.workers) != triples) {
          err << "verification mismatch: parametrization and brute-force oracle disagree\n";
          e.code = kExitMismatch;
        }
      }
    } else if (trace->parsed()) {
      const bool have_triple = x_opt->count() > 0;
      if (!p_opt->count() && !m_opt->count()) throw ConfigError("trace: give --p or --m");
      const Int m = m_opt->count() ? o.m : checked::sub(checked::square(o.n), o.p);
      const Int p = p_opt->count() ? o.p : checked::sub(checked::square(o.n), o.m);
      json params = {{"n", o.n}, {"p", p}, {"m", m}};
      json results = json::object();
      if (p_opt->count() || !have_triple) {
        log("scanning residue branches");
        const auto report = descent::residue_branch_scan(o.n, p);
        results["branch_report"] = to_json(report);
        if (report.combo && !report.all_confirmed()) {
          err << "verification mismatch: a congruence branch has surviving residues for a family combo\n";
          e.code = kExitMismatch;
        }
      }
      if (have_triple) {
        params["solution"] = {{"x", o.x}, {"y", o.y}, {"z", o.z}};
        log("tracing descent");
        results["descent"] = to_json(descent::descend(FamilyQuarticForm(o.n, m), {o.x, o.y, o.z}));
      }
      e.body = envelope("trace", params, results);
    } else if (local_cmd->parsed()) {
      const auto coeffs = split_ints(o.form);
      if (coeffs.size() != 4) throw ConfigError("--form expects four integers a,b,c,d");
      const GeneralQuarticForm form(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
      std::vector<local::LocalModulus> moduli;
      if (pp_opt->count()) moduli = parse_moduli(o.prime_powers);
      if (ppu_opt->count()) moduli = local::prime_powers_up_to(o.prime_powers_up_to);
      log("scanning prime powers");
      const auto report = local::local_report(form, moduli, o.bound, cfg.scan_limit, cfg.workers);
      json results = {{"local", to_json(report)}};
      if (o.system_bound >= 0) {
        log("comparing with the quadratic system");
        results["correspondence"] = to_json(local::check_13_14_correspondence(form, o.system_bound));
      }
      json modulus_values = json::array();
      for (const auto& mod : moduli) modulus_values.push_back(mod.value());
      e.body = envelope("local",
                        {{"form", coeffs}, {"moduli", modulus_values}, {"bound", o.bound}, {"scan_limit", cfg.scan_limit}},
                        results);
      if (!report.self_consistent()) {
        err << "verification mismatch: a witness failed its re-check\n";
        e.code = kExitMismatch;
      }
    } else if (selmer->parsed()) {
      const auto report = local::selmer_fixture(o.bound, parse_moduli(o.prime_powers), cfg.scan_limit);
      e.body = envelope("selmer", {{"bound", o.bound}, {"moduli", split_ints(o.prime_powers)}}, to_json(report));
    } else if (hasse->parsed()) {
      require_positive(o.q_max, "--q-max");
      require_positive(o.d_max, "--d-max");
      const auto hits = local::hasse_scan(o.q_max, o.d_max);
      if (as_json) {
        json res = json::array();
        for (const auto& v : hits) res.push_back(to_json(v));
        e.body = envelope("hasse-scan", {{"q_max", o.q_max}, {"d_max", o.d_max}}, res);
      } else {
        std::ostringstream csv;
        csv << "q,d\n";
        for (const auto& v : hits) csv << v.q << ',' << v.d << '\n';
        e.body = csv.str();
      }
    }

    if (cfg.output_path) {
      write_file(*cfg.output_path, e.body);
    } else {
      out << e.body;
    }
    return e.code;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    switch (ex.kind()) {
      case ErrorKind::Overflow:
      case ErrorKind::ScanLimit:
        return kExitResource;
      default:
        return kExitUsage;
    }
  }
}

}  // namespace quartic::cli
