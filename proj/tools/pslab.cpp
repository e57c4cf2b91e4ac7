// pslab: verification and character-table CLI for the principal-subspace
// presentation library. Subcommands: verify, char, dump, cache.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 internal
// error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pslab/ideal.hpp"
#include "pslab/qseries.hpp"
#include "pslab/version.hpp"
#include "report.hpp"

using namespace pslab;
using namespace pslab::cli;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::set<std::string> kAllChecks = {"presentation", "remark22",     "lifting",
                                          "tau",          "chain",        "annihilation",
                                          "characters"};

std::string default_cache_path() {
  if (const char* env = std::getenv("PSLAB_CACHE")) return env;
  if (const char* home = std::getenv("HOME")) {
    return std::string(home) + "/.cache/pslab/dimensions.json";
  }
  return "pslab-cache.json";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

std::vector<int> parse_indices(const std::string& i_str, int level) {
  if (i_str == "all") {
    std::vector<int> all;
    for (int i = 0; i <= level; ++i) all.push_back(i);
    return all;
  }
  size_t pos = 0;
  int i = 0;
  try {
    i = std::stoi(i_str, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != i_str.size()) throw UsageError("--i must be an integer or 'all'");
  if (i < 0 || i > level) throw UsageError("--i must lie between 0 and --k");
  return {i};
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  int k = 1;
  std::string i = "all";
  int max_weight = 10;
  int max_charge = -1;
  std::vector<std::string> checks = {"all"};
  std::string format = "table";
  std::string out;
  int jobs = 1;
  bool timing = false;
  int max_k = 4;
};

std::set<std::string> selected_checks(const std::vector<std::string>& requested) {
  std::set<std::string> selected;
  for (const std::string& c : requested) {
    if (c == "all") {
      selected.insert(kAllChecks.begin(), kAllChecks.end());
    } else if (kAllChecks.count(c)) {
      selected.insert(c);
    } else {
      throw UsageError("unknown check '" + c + "'");
    }
  }
  return selected;
}

std::vector<CheckRow> character_rows(int level, int index, int order, int jobs) {
  std::vector<CheckRow> rows;
  const BivariateSeries dims = dimension_table(level, index, order, jobs);
  const auto vs_counts = compare(dims, difference_two_table(level, index, order), order);
  rows.push_back({"characters.difference_two", level, index,
                  vs_counts.equal ? order : vs_counts.power,
                  vs_counts.equal ? 0 : vs_counts.charge, vs_counts.equal,
                  vs_counts.equal ? "" : vs_counts.str()});
  const auto vs_fermi =
      compare(dims, fermionic_sum(level, index, order, kDefaultLinearTerm), order);
  rows.push_back({"characters.fermionic", level, index, vs_fermi.equal ? order : vs_fermi.power,
                  vs_fermi.equal ? 0 : vs_fermi.charge, vs_fermi.equal,
                  vs_fermi.equal ? "" : vs_fermi.str()});
  return rows;
}

int run_verify(const VerifyOptions& opt) {
  if (opt.k < 1 || opt.k > opt.max_k) {
    throw UsageError("--k must lie between 1 and " + std::to_string(opt.max_k));
  }
  if (opt.max_weight < 1) throw UsageError("--max-weight must be >= 1");
  const std::vector<int> indices = parse_indices(opt.i, opt.k);
  const std::set<std::string> checks = selected_checks(opt.checks);

  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckBlock> blocks;
  const int n = opt.max_weight;
  if (checks.count("presentation")) {
    for (int i : indices) {
      CheckBlock b{"presentation", opt.k, i, false, {}, {}};
      b.piece_rows = verify_presentation(opt.k, i, n, opt.max_charge, opt.jobs);
      b.pass = all_pass(b.piece_rows);
      blocks.push_back(std::move(b));
      if (i == opt.k) {
        CheckBlock p{"presentation_primed", opt.k, i, false, {}, {}};
        p.piece_rows = verify_presentation_primed(opt.k, n, opt.max_charge, opt.jobs);
        p.pass = all_pass(p.piece_rows);
        blocks.push_back(std::move(p));
      }
    }
  }
  if (checks.count("remark22")) {
    CheckBlock b{"remark22", opt.k, -1, false, {}, {}};
    b.check_rows = verify_remark_22(opt.k, n, opt.jobs);
    b.pass = all_pass(b.check_rows);
    blocks.push_back(std::move(b));
  }
  if (checks.count("lifting")) {
    for (int i : indices) {
      CheckBlock b{"lifting", opt.k, i, false, {}, {}};
      b.check_rows = verify_lifting_lemma(opt.k, i, n, opt.jobs);
      b.pass = all_pass(b.check_rows);
      blocks.push_back(std::move(b));
    }
  }
  if (checks.count("tau")) {
    CheckBlock b{"tau", opt.k, -1, false, {}, {}};
    b.check_rows = verify_tau_lemma(opt.k, n, opt.jobs);
    b.pass = all_pass(b.check_rows);
    blocks.push_back(std::move(b));
  }
  if (checks.count("chain")) {
    CheckBlock b{"chain", opt.k, -1, false, {}, {}};
    b.check_rows = verify_kernel_chain(opt.k, n, opt.jobs);
    b.pass = all_pass(b.check_rows);
    blocks.push_back(std::move(b));
  }
  if (checks.count("annihilation")) {
    CheckBlock b{"annihilation", opt.k, -1, false, {}, {}};
    b.check_rows = verify_annihilation(opt.k, n);
    b.pass = all_pass(b.check_rows);
    blocks.push_back(std::move(b));
  }
  if (checks.count("characters")) {
    for (int i : indices) {
      CheckBlock b{"characters", opt.k, i, false, {}, {}};
      b.check_rows = character_rows(opt.k, i, n, opt.jobs);
      b.pass = all_pass(b.check_rows);
      blocks.push_back(std::move(b));
    }
  }

  RunInfo info;
  info.command = "verify";
  // The parallelism degree is intentionally not echoed: reports are
  // byte-identical for every --jobs value.
  info.config = {{"k", opt.k},
                 {"i", opt.i},
                 {"max_weight", opt.max_weight},
                 {"max_charge", opt.max_charge},
                 {"checks", std::vector<std::string>(checks.begin(), checks.end())},
                 {"format", opt.format}};
  info.timing = opt.timing;
  info.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  const ordered_json report = verification_report(info, blocks);
  emit(render_verification(report, opt.format), opt.out);
  return report.at("pass") ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// char

struct CharOptions {
  int k = 1;
  std::string i = "0";
  int max_weight = 8;
  std::string format = "table";
  std::string out;
  std::string cache;
  int jobs = 1;
  bool timing = false;
  int max_k = 4;
};

BivariateSeries series_from_json(const ordered_json& rows, int order) {
  BivariateSeries s(order);
  for (const auto& row : rows) {
    const int charge = row.at(0);
    QSeries q(order);
    const auto& coeffs = row.at(1);
    for (int n = 0; n < static_cast<int>(coeffs.size()) && n <= order; ++n) {
      const auto& c = coeffs.at(static_cast<size_t>(n));
      Rational value;
      if (c.is_number_integer()) {
        value = Rational(static_cast<long>(c.get<long long>()));
      } else {
        value = Rational(c.get<std::string>());
        value.canonicalize();
      }
      q.set_coeff(n, value);
    }
    s.add(charge, q);
  }
  return s;
}

int run_char(const CharOptions& opt) {
  if (opt.k < 1 || opt.k > opt.max_k) {
    throw UsageError("--k must lie between 1 and " + std::to_string(opt.max_k));
  }
  if (opt.max_weight < 1) throw UsageError("--max-weight must be >= 1");
  const std::vector<int> indices = parse_indices(opt.i, opt.k);
  if (opt.i == "all") throw UsageError("char needs a concrete --i");
  const int index = indices.front();
  const int order = opt.max_weight;

  const auto start = std::chrono::steady_clock::now();
  const std::string cache_path = opt.cache.empty() ? default_cache_path() : opt.cache;
  const std::string cache_key = "k=" + std::to_string(opt.k) + ";i=" + std::to_string(index) +
                                ";N=" + std::to_string(order) + ";v=" + kVersion;

  ordered_json cache_doc;
  if (std::ifstream in(cache_path); in) {
    try {
      in >> cache_doc;
    } catch (const std::exception& e) {
      std::cerr << "pslab: ignoring unreadable cache " << cache_path << ": " << e.what() << "\n";
      cache_doc = ordered_json();
    }
  }

  CharResult result;
  result.level = opt.k;
  result.index = index;
  result.order = order;
  bool cache_hit = false;
  if (cache_doc.contains("entries") && cache_doc.at("entries").contains(cache_key)) {
    try {
      result.dims =
          series_from_json(cache_doc.at("entries").at(cache_key).at("dimension_table"), order);
      cache_hit = true;
    } catch (const std::exception& e) {
      std::cerr << "pslab: ignoring corrupt cache entry " << cache_key << ": " << e.what()
                << "\n";
    }
  }
  if (!cache_hit) {
    result.dims = dimension_table(opt.k, index, order, opt.jobs);
  }
  result.counts = difference_two_table(opt.k, index, order);
  result.fermionic = fermionic_sum(opt.k, index, order, kDefaultLinearTerm);
  result.counts_match = compare(result.dims, result.counts, order).equal;
  result.fermionic_match = compare(result.dims, result.fermionic, order).equal;

  if (!cache_hit) {
    if (!cache_doc.is_object()) cache_doc = ordered_json::object();
    cache_doc["tool"] = "pslab";
    if (!cache_doc.contains("entries")) cache_doc["entries"] = ordered_json::object();
    ordered_json entry;
    entry["k"] = opt.k;
    entry["i"] = index;
    entry["order"] = order;
    entry["version"] = kVersion;
    entry["dimension_table"] = series_json(result.dims);
    cache_doc["entries"][cache_key] = std::move(entry);
    try {
      const std::filesystem::path path(cache_path);
      if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
      std::ofstream out(path, std::ios::binary);
      out << cache_doc.dump(2) << "\n";
    } catch (const std::exception& e) {
      std::cerr << "pslab: cannot write cache " << cache_path << ": " << e.what() << "\n";
    }
  }
  std::cerr << "pslab: dimension table cache " << (cache_hit ? "hit" : "miss") << " for "
            << cache_key << "\n";

  RunInfo info;
  info.command = "char";
  info.config = {{"k", opt.k},
                 {"i", index},
                 {"max_weight", order},
                 {"format", opt.format}};
  info.timing = opt.timing;
  info.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  const ordered_json report = char_report(info, result);
  emit(render_char(report, result, opt.format), opt.out);
  return result.counts_match && result.fermionic_match ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// dump

struct DumpOptions {
  std::string what;
  int k = 1;
  std::string i = "0";
  int weight = 0;
  int charge = 0;
  int t = -1;
  int variant = 0;
  bool primed = false;
  int max_k = 4;
};

int run_dump(const DumpOptions& opt) {
  if (opt.k < 1 || opt.k > opt.max_k) {
    throw UsageError("--k must lie between 1 and " + std::to_string(opt.max_k));
  }
  if (opt.what == "generators") {
    if (opt.t < 0) throw UsageError("dump generators needs --t");
    if (opt.variant != 0 && opt.variant != 1) throw UsageError("--variant must be 0 or 1");
    const GradedPolynomial r = relation_generator(opt.k, opt.t, opt.variant);
    if (!r.is_zero()) std::cout << r.str() << "\n";
    return 0;
  }
  if (opt.weight < 0 || opt.charge < 0) return 0;  // out-of-range bigrade: empty listing
  const int min_part = opt.primed ? 2 : 1;
  if (opt.what == "basis") {
    for (const Monomial& m : enumerate_monomials(opt.weight, opt.charge, min_part)) {
      std::cout << m.str() << "\n";
    }
    return 0;
  }
  const std::vector<int> indices = parse_indices(opt.i, opt.k);
  if (opt.i == "all") throw UsageError("dump needs a concrete --i");
  const int index = indices.front();
  if (opt.what == "kernel") {
    if (opt.primed && index != opt.k) throw UsageError("--primed requires --i equal to --k");
    const ModuleConfig cfg(opt.k, index);
    const Subspace kern = kernel_piece(cfg, opt.weight, opt.charge, nullptr, min_part);
    const MonomialBasis basis = MonomialBasis::bigrade(opt.weight, opt.charge, min_part);
    for (int r = 0; r < kern.dim(); ++r) {
      std::cout << row_polynomial(kern, r, basis).str() << "\n";
    }
    return 0;
  }
  if (opt.what == "fock") {
    const ModuleConfig cfg(opt.k, index);
    for (const TensorKey& key : graded_basis(cfg, opt.weight, opt.charge).keys) {
      std::cout << tensor_key_str(key) << "\n";
    }
    return 0;
  }
  throw UsageError("unknown dump target '" + opt.what + "'");
}

// ---------------------------------------------------------------------------
// cache

struct CacheOptions {
  std::string action;
  std::string cache;
};

int run_cache(const CacheOptions& opt) {
  const std::string cache_path = opt.cache.empty() ? default_cache_path() : opt.cache;
  if (opt.action == "inspect") {
    std::ifstream in(cache_path);
    if (!in) {
      std::cout << "cache " << cache_path << ": empty\n";
      return 0;
    }
    ordered_json doc;
    try {
      in >> doc;
    } catch (const std::exception& e) {
      std::cout << "cache " << cache_path << ": unreadable (" << e.what() << ")\n";
      return 0;
    }
    std::cout << "cache " << cache_path << "\n";
    if (doc.contains("entries")) {
      for (const auto& [key, entry] : doc.at("entries").items()) {
        std::cout << "  " << key << "\n";
      }
    }
    return 0;
  }
  if (opt.action == "clear") {
    std::error_code ec;
    std::filesystem::remove(cache_path, ec);
    std::cout << "cache " << cache_path << " cleared\n";
    return 0;
  }
  throw UsageError("cache action must be inspect or clear");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of principal-subspace presentations and characters"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "run graded-piece checks");
  verify->add_option("--k", vopt.k, "level")->required();
  verify->add_option("--i", vopt.i, "module index 0..k, or 'all'")->capture_default_str();
  verify->add_option("--max-weight", vopt.max_weight, "weight cutoff")->capture_default_str();
  verify->add_option("--max-charge", vopt.max_charge, "charge cutoff (-1: unbounded)")
      ->capture_default_str();
  verify->add_option("--checks", vopt.checks,
                     "presentation|remark22|lifting|tau|chain|annihilation|characters|all")
      ->delimiter(',');
  verify->add_option("--format", vopt.format, "json|csv|table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  verify->add_option("--out", vopt.out, "write the report to a file");
  verify->add_option("--jobs", vopt.jobs, "parallelism degree");
  verify->add_flag("--timing", vopt.timing, "include timing in the report");
  verify->add_option("--max-k", vopt.max_k, "largest admissible level");

  CharOptions copt;
  CLI::App* charcmd = app.add_subcommand("char", "dimension and character tables");
  charcmd->add_option("--k", copt.k, "level")->required();
  charcmd->add_option("--i", copt.i, "module index")->capture_default_str();
  charcmd->add_option("--max-weight", copt.max_weight, "series order")->capture_default_str();
  charcmd->add_option("--format", copt.format, "json|csv|table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  charcmd->add_option("--out", copt.out, "write the report to a file");
  charcmd->add_option("--cache", copt.cache, "cache file (default $PSLAB_CACHE)");
  charcmd->add_option("--jobs", copt.jobs, "parallelism degree");
  charcmd->add_flag("--timing", copt.timing, "include timing in the report");
  charcmd->add_option("--max-k", copt.max_k, "largest admissible level");

  DumpOptions dopt;
  CLI::App* dump = app.add_subcommand("dump", "print bases, generators, or kernels");
  dump->add_option("what", dopt.what, "basis|generators|kernel|fock")
      ->required()
      ->check(CLI::IsMember({"basis", "generators", "kernel", "fock"}));
  dump->add_option("--k", dopt.k, "level")->required();
  dump->add_option("--i", dopt.i, "module index");
  dump->add_option("--weight", dopt.weight, "bigrade weight");
  dump->add_option("--charge", dopt.charge, "bigrade charge");
  dump->add_option("--t", dopt.t, "relation weight (generators)");
  dump->add_option("--variant", dopt.variant, "relation variant 0|1");
  dump->add_flag("--primed", dopt.primed, "restrict to min part 2");
  dump->add_option("--max-k", dopt.max_k, "largest admissible level");

  CacheOptions kopt;
  CLI::App* cache = app.add_subcommand("cache", "inspect or clear the dimension cache");
  cache->add_option("action", kopt.action, "inspect|clear")
      ->required()
      ->check(CLI::IsMember({"inspect", "clear"}));
  cache->add_option("--cache", kopt.cache, "cache file (default $PSLAB_CACHE)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(vopt);
    if (charcmd->parsed()) return run_char(copt);
    if (dump->parsed()) return run_dump(dopt);
    if (cache->parsed()) return run_cache(kopt);
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    std::cerr << "pslab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "pslab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "pslab: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
