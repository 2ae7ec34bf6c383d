// mabuchi-cli: batch front end over the libmabuchi C interface.
//
//   mabuchi-cli classify --pn 1,1,0,1 --format json
//   mabuchi-cli scan --n-max 6 --k-max 6 --d0-max 4 --dinf-max 4 --format csv
//   mabuchi-cli profile --pn 3,1,0,0 --samples 11 --format csv
//   mabuchi-cli krs --pn 1,1,0,0 --precision 128
//
// Exit codes: 0 success, 2 invalid input, 1 internal failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mabuchi/mabuchi.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr unsigned kDefaultPrecision = 64;
constexpr unsigned kMinPrecision = 16;

struct Options {
  std::string pn;
  std::string manifest;
  std::string format = "table";
  unsigned precision = kDefaultPrecision;
  std::string out;
  unsigned samples = 0;
  std::string weight = "mabuchi";
  unsigned n_max = 6;
  unsigned k_max = 6;
  unsigned d0_max = 4;
  unsigned dinf_max = 4;
  unsigned threads = 1;
  bool verbose = false;
};

struct Failure {
  int exit_code;
  std::string message;
};

using ManifoldPtr = std::unique_ptr<mabuchi_manifold, decltype(&mabuchi_manifold_free)>;

void check(mabuchi_status status) {
  if (status == MABUCHI_OK) return;
  throw Failure{mabuchi_status_is_input_error(status) ? kExitInput : kExitInternal, mabuchi_last_error()};
}

std::optional<unsigned> precision_from_env() {
  const char* env = std::getenv("MABUCHI_PRECISION");
  if (!env || !*env) return std::nullopt;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v > 100000)
    throw Failure{kExitInput, "ParseError: MABUCHI_PRECISION must be a positive integer, got \"" + std::string(env) + "\""};
  return static_cast<unsigned>(v);
}

ManifoldPtr load_manifold(const Options& o) {
  mabuchi_manifold* raw = nullptr;
  if (!o.pn.empty()) {
    check(mabuchi_manifold_parse_pn(o.pn.c_str(), &raw));
  } else {
    std::ifstream in(o.manifest);
    if (!in) throw Failure{kExitInput, "IoError: cannot open manifest \"" + o.manifest + "\""};
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    check(mabuchi_manifold_from_json(text.c_str(), &raw));
  }
  return ManifoldPtr(raw, &mabuchi_manifold_free);
}

void emit(const Options& o, char* report) {
  const std::unique_ptr<char, decltype(&mabuchi_string_free)> owned(report, &mabuchi_string_free);
  if (o.out.empty()) {
    std::fputs(report, stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Failure{kExitInput, "IoError: cannot write \"" + o.out + "\""};
  file << report;
  if (!file) throw Failure{kExitInput, "IoError: write to \"" + o.out + "\" failed"};
}

void add_input_options(CLI::App* cmd, Options& o) {
  auto* pn = cmd->add_option("--pn", o.pn, "P^n bundle tuple n,k,d0,dinf");
  auto* manifest = cmd->add_option("--manifest", o.manifest, "manifold manifest (JSON)");
  pn->excludes(manifest);
  manifest->excludes(pn);
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--precision", o.precision, "decimal digits for numeric paths (>= 16)");
  cmd->add_option("--out", o.out, "write the report to this file");
}

int run(int argc, char** argv) {
  Options o;
  if (auto env = precision_from_env()) o.precision = *env;

  CLI::App app{"Mabuchi solitons and Kähler-Ricci solitons on Fano admissible manifolds"};
  app.set_version_flag("--version", std::string(mabuchi_version()));
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "existence of KE metrics, Mabuchi and KR solitons");
  auto* mconst = app.add_subcommand("mconst", "exact Mabuchi constant");
  auto* scan = app.add_subcommand("scan", "exhaustive verification over P^n bundles");
  auto* profile = app.add_subcommand("profile", "certified soliton profile function");
  auto* krs = app.add_subcommand("krs", "Kähler-Ricci soliton parameter");

  for (auto* cmd : {classify, mconst, profile, krs}) add_input_options(cmd, o);
  for (auto* cmd : {classify, mconst, scan, profile, krs}) add_output_options(cmd, o);

  scan->add_option("--n-max", o.n_max)->check(CLI::PositiveNumber);
  scan->add_option("--k-max", o.k_max)->check(CLI::PositiveNumber);
  scan->add_option("--d0-max", o.d0_max);
  scan->add_option("--dinf-max", o.dinf_max);
  scan->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  scan->add_flag("--verbose", o.verbose, "list skipped non-Fano tuples");

  profile->add_option("--samples", o.samples, "tabulate Theta at N equispaced points");
  profile->add_option("--weight", o.weight, "mabuchi or ke")->check(CLI::IsMember({"mabuchi", "ke"}));
  krs->add_option("--samples", o.samples, "tabulate the KR profile at N equispaced points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ParseError: " << e.what() << '\n';
    return kExitInput;
  }

  if (o.precision < kMinPrecision)
    throw Failure{kExitInput, "InvalidArgument: precision must be at least 16 digits, got " + std::to_string(o.precision)};

  mabuchi_format format = MABUCHI_FORMAT_TABLE;
  check(mabuchi_parse_format(o.format.c_str(), &format));

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen != scan && o.pn.empty() && o.manifest.empty())
    throw Failure{kExitInput, "InvalidArgument: one of --pn or --manifest is required"};

  char* report = nullptr;
  if (chosen == scan) {
    const mabuchi_scan_bounds bounds{o.n_max, o.k_max, o.d0_max, o.dinf_max};
    check(mabuchi_scan(&bounds, o.threads, o.verbose ? 1 : 0, format, &report));
  } else {
    const ManifoldPtr m = load_manifold(o);
    if (chosen == classify) {
      check(mabuchi_classify(m.get(), format, &report));
    } else if (chosen == mconst) {
      check(mabuchi_mconst(m.get(), format, &report));
    } else if (chosen == profile) {
      const auto kind = o.weight == "ke" ? MABUCHI_WEIGHT_KE : MABUCHI_WEIGHT_MABUCHI;
      check(mabuchi_profile(m.get(), kind, format, o.samples, &report));
    } else {
      check(mabuchi_krs(m.get(), o.precision, format, o.samples, &report));
    }
  }
  emit(o, report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::cerr << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "Internal: " << e.what() << '\n';
    return kExitInternal;
  }
}
