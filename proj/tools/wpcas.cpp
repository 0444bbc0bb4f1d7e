// wpcas: command-line front end for the weighted polynomial algebra library.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wpcas/gbengine.hpp"
#include "wpcas/hilbert.hpp"
#include "wpcas/jobfile.hpp"
#include "wpcas/k3db.hpp"
#include "wpcas/parse.hpp"
#include "wpcas/pfaff.hpp"
#include "wpcas/resolve.hpp"
#include "wpcas/unproj.hpp"

#ifndef WPCAS_DATA_DIR
#define WPCAS_DATA_DIR "."
#endif

namespace {

using wpcas::Poly;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(' ');
    const auto b = item.find_last_not_of(' ');
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

std::string degree_text(const Poly& p) {
  const auto d = p.weighted_degree();
  return d.value ? std::to_string(*d.value) + (d.homogeneous ? "" : "+") : "-";
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::vector<int> sorted_degrees(const std::vector<Poly>& ps) {
  std::vector<int> d;
  for (const auto& p : ps) d.push_back(p.weighted_degree().value.value_or(-1));
  std::sort(d.begin(), d.end());
  return d;
}

wpcas::JobFile need_polys(const std::string& path) {
  wpcas::JobFile job = wpcas::load_job(path);
  if (job.polys.empty()) throw InputError(path + ": no 'poly' lines");
  return job;
}

struct Output {
  std::string format = "text";
  bool kv() const { return format == "kv"; }
};

int cmd_repro(const std::string& which, unsigned seed, const std::string& out_path, const Output& out,
              const std::string& fault, const std::string& variant) {
  wpcas::UnprojectionReport report;
  if (which == "main") {
    wpcas::MainOptions opt;
    opt.fault = fault;
    if (variant == "standard")
      opt.variant = wpcas::MainVariant::Standard;
    else if (variant == "minus-zf")
      opt.variant = wpcas::MainVariant::MinusZf;
    else
      opt.variant = wpcas::MainVariant::NoZf;
    report = wpcas::run_main_example(opt);
  } else {
    if (!fault.empty()) throw InputError("--inject-fault applies to 'repro main' only");
    report = wpcas::run_determinantal_with_retry(seed);
  }
  const std::string text = out.kv() ? report.to_kv() : report.to_text();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot write " + out_path);
    f << text;
    if (!f) throw InputError("write to " + out_path + " failed");
  }
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_gb(const std::string& path, const Output& out) {
  const wpcas::JobFile job = need_polys(path);
  const wpcas::Ideal ideal(job.ring, job.polys);
  const auto basis = ideal.groebner();
  if (out.kv()) {
    json j;
    j["ring"] = job.ring->describe();
    j["basis"] = json::array();
    for (const auto& p : *basis) j["basis"].push_back({{"degree", degree_text(p)}, {"poly", p.to_string()}});
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "# reduced Groebner basis, weighted degrevlex, " << basis->size() << " elements\n";
    for (const auto& p : *basis) std::cout << "[" << degree_text(p) << "] " << p.to_string() << "\n";
  }
  return kOk;
}

int cmd_eliminate(const std::string& path, const std::string& drop_text, const Output& out) {
  const wpcas::JobFile job = need_polys(path);
  const auto drop = split_names(drop_text);
  if (drop.empty()) throw InputError("--drop needs at least one variable");
  std::vector<std::size_t> block;
  for (const auto& name : drop) {
    const auto idx = job.ring->index_of(name);
    if (!idx) throw InputError("unknown variable '" + name + "' in --drop");
    block.push_back(*idx);
  }
  const wpcas::Ideal ideal(job.ring, job.polys);
  std::vector<Poly> basis;
  for (const auto& p : *ideal.groebner(wpcas::MonomialOrder::elimination(*job.ring, block)))
    if (!p.involves_any(block)) basis.push_back(p);
  const wpcas::Ideal eliminated = wpcas::elimination_ideal(ideal, drop);
  const auto minimal = eliminated.generators();
  if (out.kv()) {
    json j;
    j["basis"] = json::array();
    for (const auto& p : basis) j["basis"].push_back({{"degree", degree_text(p)}, {"poly", p.to_string()}});
    j["basis_degrees"] = sorted_degrees(basis);
    j["minimal_degrees"] = sorted_degrees(minimal);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "# Groebner basis of the elimination ideal, " << basis.size() << " elements\n";
    for (const auto& p : basis) std::cout << "[" << degree_text(p) << "] " << p.to_string() << "\n";
    std::cout << "degrees: {" << join(sorted_degrees(basis)) << "}\n";
    std::cout << "minimal generators: " << minimal.size() << ", degrees {" << join(sorted_degrees(minimal)) << "}\n";
  }
  return kOk;
}

wpcas::GradedMatrix presentation_of(const wpcas::JobFile& job, const std::string& path) {
  if (!job.graph.empty()) {
    if (job.gens.empty() || job.keep.empty()) throw InputError(path + ": 'graph' needs 'gens' and 'keep'");
    return wpcas::restriction_presentation(job.graph, job.gens, job.keep);
  }
  if (job.columns.empty()) throw InputError(path + ": need 'graph' or 'column' lines");
  std::vector<wpcas::ModuleVector> cols(job.columns.begin(), job.columns.end());
  std::vector<int> col_degrees;
  for (const auto& c : cols) {
    std::optional<int> deg;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto d = c[i].weighted_degree();
      if (!d.value) continue;
      if (!d.homogeneous) throw InputError(path + ": column entry " + c[i].to_string() + " is not homogeneous");
      const int cd = *d.value + (*job.row_degrees)[i];
      if (deg && *deg != cd) throw InputError(path + ": column degrees are inconsistent");
      deg = cd;
    }
    if (!deg) throw InputError(path + ": zero column");
    col_degrees.push_back(*deg);
  }
  return wpcas::GradedMatrix::from_columns(job.ring, *job.row_degrees, cols, col_degrees);
}

int cmd_resolve(const std::string& path, std::size_t max_length, bool matrices, const Output& out) {
  const wpcas::JobFile job = wpcas::load_job(path);
  const wpcas::GradedMatrix pres = presentation_of(job, path);
  const wpcas::Resolution res = wpcas::free_resolution(pres, max_length);
  const wpcas::BettiTable betti = wpcas::BettiTable::of(res);
  const bool ok = wpcas::check_complex(res).ok;
  if (out.kv()) {
    json j;
    j["betti"] = betti.degrees;
    j["shape"] = betti.shape();
    j["complete"] = res.complete;
    j["minimal"] = res.minimal;
    j["complex"] = ok;
    if (matrices) {
      j["differentials"] = json::array();
      for (const auto& d : res.differentials) j["differentials"].push_back(d.to_string());
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << betti.to_string();
    std::cout << "shape: " << betti.shape() << "\n";
    std::cout << "complete: " << (res.complete ? "yes" : "no") << ", minimal: " << (res.minimal ? "yes" : "no")
              << ", complex: " << (ok ? "yes" : "no") << "\n";
    if (matrices)
      for (std::size_t k = 0; k < res.differentials.size(); ++k)
        std::cout << "d" << k + 1 << ":\n" << res.differentials[k].to_string();
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_hilbert(const std::string& path, std::optional<int> bound, const Output& out) {
  const wpcas::JobFile job = need_polys(path);
  const wpcas::Ideal ideal(job.ring, job.polys);
  const int b = bound ? *bound : wpcas::default_hilbert_bound(job.ring->weights());
  const wpcas::HilbertData h = wpcas::hilbert_series(ideal, b);
  if (out.kv()) {
    json j;
    j["weights"] = h.weights;
    j["bound"] = h.bound;
    std::vector<std::string> series, num;
    for (const auto& c : h.series) series.push_back(c.get_str());
    for (const auto& c : h.exact_numerator) num.push_back(c.get_str());
    j["series"] = series;
    j["numerator"] = num;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "weights: " << join(h.weights) << "\n";
    std::cout << "numerator: " << wpcas::format_tpoly(h.exact_numerator) << "\n";
    std::cout << "series through degree " << h.bound << ":";
    for (const auto& c : h.series) std::cout << " " << c.get_str();
    std::cout << "\n";
  }
  return kOk;
}

int cmd_quasismooth(const std::string& path, const Output& out) {
  const wpcas::JobFile job = need_polys(path);
  const bool qs = wpcas::quasismooth(job.polys, job.ring);
  if (out.kv())
    std::cout << json{{"quasismooth", qs}}.dump() << "\n";
  else
    std::cout << "quasismooth: " << (qs ? "true" : "false") << "\n";
  return kOk;
}

int cmd_pfaffian(const std::string& path, const Output& out) {
  const wpcas::JobFile job = wpcas::load_job(path);
  if (job.rows.empty()) throw InputError(path + ": no 'row' lines");
  const wpcas::SkewPfaffianMatrix m(job.ring, job.rows);
  const auto system = wpcas::pfaffian_system(m);
  if (out.kv()) {
    json j = json::array();
    for (const auto& e : system) j.push_back({{"rows", wpcas::pfaffian_label(e.rows)}, {"pfaffian", e.value.to_string()}});
    std::cout << j.dump() << "\n";
  } else if (m.size() == 4) {
    std::cout << system.at(0).value.to_string() << "\n";
  } else {
    for (const auto& e : system) std::cout << wpcas::pfaffian_label(e.rows) << ": " << e.value.to_string() << "\n";
  }
  return kOk;
}

int cmd_k3(const std::string& db_path, std::optional<int> codim, std::optional<int> centre_type,
           std::optional<std::string> name, bool count, const Output& out) {
  const auto db = wpcas::load_db_file(db_path);
  const auto hits = wpcas::query(db, codim, centre_type, name);
  if (count) {
    std::cout << hits.size() << "\n";
  } else if (out.kv()) {
    for (const auto& e : hits) std::cout << wpcas::entry_to_json(e) << "\n";
  } else {
    for (const auto& e : hits) std::cout << wpcas::describe(e);
    std::cout << "# " << hits.size() << " of " << db.size() << " entries\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted polynomial algebra: Groebner bases, resolutions, Pfaffians, unprojection checks"};
  app.require_subcommand(1);
  Output out;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "kv"}));
  };

  std::string which, out_path, fault, variant = "standard";
  unsigned seed = 1;
  auto* repro = app.add_subcommand("repro", "Run a full worked example and report every check");
  repro->add_option("which", which, "main or determinantal")->required()->check(CLI::IsMember({"main", "determinantal"}));
  repro->add_option("--seed", seed, "Seed for the generic choices (determinantal)");
  repro->add_option("--out", out_path, "Write the report to a file");
  repro->add_option("--inject-fault", fault, "Mutation hook")->check(CLI::IsMember({"s2sign"}));
  repro->add_option("--variant", variant, "Choice of F24 (main)")
      ->check(CLI::IsMember({"standard", "minus-zf", "no-zf"}));
  add_format(repro);

  std::string input, drop;
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of the 'poly' lines");
  gb->add_option("file", input)->required();
  add_format(gb);

  auto* elim = app.add_subcommand("eliminate", "Eliminate variables from the ideal of the 'poly' lines");
  elim->add_option("file", input)->required();
  elim->add_option("--drop", drop, "Comma separated variables to eliminate")->required();
  add_format(elim);

  std::size_t max_length = 8;
  bool matrices = false;
  auto* resolve = app.add_subcommand("resolve", "Minimal graded free resolution of a presented module");
  resolve->add_option("file", input)->required();
  resolve->add_option("--max-length", max_length, "Maximal number of differentials");
  resolve->add_flag("--matrices", matrices, "Print the differentials");
  add_format(resolve);

  std::optional<int> bound;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series and numerator of the quotient ring");
  hilbert->add_option("file", input)->required();
  hilbert->add_option("--bound", bound, "Truncation degree (default: sum of weights + 5, or $WPCAS_HILBERT_BOUND)")
      ->check(CLI::NonNegativeNumber);
  add_format(hilbert);

  auto* qs = app.add_subcommand("quasismooth", "Quasismoothness of a hypersurface or complete intersection");
  qs->add_option("file", input)->required();
  add_format(qs);

  auto* pf = app.add_subcommand("pfaffian", "4x4 Pfaffians of a skew matrix given by its upper triangle");
  pf->add_option("file", input)->required();
  add_format(pf);

  std::string db_path = std::string(WPCAS_DATA_DIR) + "/data/k3_seed.jsonl";
  std::optional<int> codim, centre_type;
  std::optional<std::string> name;
  bool count = false;
  auto* k3 = app.add_subcommand("k3", "Query the K3 graded-ring database");
  k3->add_option("--db", db_path, "Database file (JSON Lines)");
  k3->add_option("--codim", codim, "Codimension filter");
  k3->add_option("--centre-type", centre_type, "Projection type filter")->check(CLI::Range(1, 4));
  k3->add_option("--name", name, "Entry name");
  k3->add_flag("--count", count, "Print only the number of matches");
  add_format(k3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*repro) return cmd_repro(which, seed, out_path, out, fault, variant);
    if (*gb) return cmd_gb(input, out);
    if (*elim) return cmd_eliminate(input, drop, out);
    if (*resolve) return cmd_resolve(input, max_length, matrices, out);
    if (*hilbert) return cmd_hilbert(input, bound, out);
    if (*qs) return cmd_quasismooth(input, out);
    if (*pf) return cmd_pfaffian(input, out);
    if (*k3) return cmd_k3(db_path, codim, centre_type, name, count, out);
  } catch (const wpcas::JobError& e) {
    std::cerr << "error: " << input << ": " << e.what() << "\n";
    return kInputError;
  } catch (const wpcas::DbError& e) {
    std::cerr << "error: " << db_path << ": " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 2;
}
