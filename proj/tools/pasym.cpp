// Command-line front end: exact partition values, certified expansion
// coefficients and bands, and the verification harness.
//
// Exit codes: 0 success / all cases pass; 1 at least one bound violation or
// ambiguous case; 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pasym/constants.hpp"
#include "pasym/errors.hpp"
#include "pasym/harness.hpp"
#include "pasym/inverse_expansion.hpp"
#include "pasym/partition_table.hpp"
#include "pasym/quotient_expansion.hpp"
#include "pasym/shift_expansion.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
  unsigned bits = 256;
  unsigned max_bits = 0;  // 0 = policy default
  std::string format = "text";
  std::string cache;
};

pasym::PrecisionContext make_ctx(const GlobalOpts& g) {
  return pasym::PrecisionContext::with_bits(g.bits, g.max_bits);
}

pasym::PartitionTable obtain_table(std::size_t n_max, const std::string& cache_path) {
  if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
    pasym::PartitionTable t = pasym::PartitionTable::load(cache_path);
    if (t.n_max() >= n_max) return t;
  }
  pasym::PartitionTable t(n_max);
  if (!cache_path.empty()) t.save(cache_path);
  return t;
}

pasym::ExpansionKind parse_kind(const std::string& kind) {
  if (kind == "ratio") return pasym::ExpansionKind::ratio;
  if (kind == "shift") return pasym::ExpansionKind::shift;
  if (kind == "inverse") return pasym::ExpansionKind::inverse;
  throw CLI::ValidationError("--kind", "must be ratio, shift or inverse");
}

void emit_table(const pasym::ExpansionTable& tbl, const GlobalOpts& g,
                const pasym::PrecisionContext& ctx) {
  const int digits = ctx.output_digits();
  const char* kind = tbl.kind == pasym::ExpansionKind::ratio     ? "ratio"
                     : tbl.kind == pasym::ExpansionKind::shift   ? "shift"
                                                                 : "inverse";
  if (g.format == "json") {
    ordered_json j;
    j["kind"] = kind;
    if (tbl.kind != pasym::ExpansionKind::inverse) j["k"] = tbl.k;
    j["N"] = tbl.N;
    ordered_json coeffs = ordered_json::array();
    for (const pasym::Real& c : tbl.coefficients) coeffs.push_back(c.str(digits));
    j["coefficients"] = std::move(coeffs);
    j["error_constant"] = tbl.error_constant.str(digits);
    j["cutoff"] = tbl.cutoff;
    j["bits"] = ctx.bits;
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "kind,k,N,index,coefficient\n";
    for (std::size_t m = 0; m < tbl.coefficients.size(); ++m)
      std::cout << kind << "," << tbl.k << "," << tbl.N << "," << m << ","
                << tbl.coefficients[m].str(digits) << "\n";
    std::cout << kind << "," << tbl.k << "," << tbl.N << ",error_constant,"
              << tbl.error_constant.str(digits) << "\n";
    std::cout << kind << "," << tbl.k << "," << tbl.N << ",cutoff," << tbl.cutoff << "\n";
  } else {
    std::cout << "kind: " << kind;
    if (tbl.kind != pasym::ExpansionKind::inverse) std::cout << "  k: " << tbl.k;
    std::cout << "  N: " << tbl.N << "  cutoff: " << tbl.cutoff << "\n";
    for (std::size_t m = 0; m < tbl.coefficients.size(); ++m)
      std::cout << "  coeff[" << m << "] = " << tbl.coefficients[m].str(digits) << "\n";
    std::cout << "  error_constant = " << tbl.error_constant.str(digits) << "\n";
  }
}

void emit_band(const pasym::BoundedApprox& band, long n, const GlobalOpts& g,
               const pasym::PrecisionContext& ctx) {
  const int digits = ctx.output_digits();
  if (g.format == "json") {
    ordered_json j;
    j["n"] = n;
    j["prefactor"] = band.prefactor.str(digits);
    j["center"] = band.center.str(digits);
    j["radius"] = band.radius.str(digits);
    j["bits"] = ctx.bits;
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "n,prefactor,center,radius\n"
              << n << "," << band.prefactor.str(digits) << "," << band.center.str(digits)
              << "," << band.radius.str(digits) << "\n";
  } else {
    std::cout << "n: " << n << "\nprefactor: " << band.prefactor.str(digits)
              << "\ncenter:    " << band.center.str(digits)
              << "\nradius:    " << band.radius.str(digits) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified asymptotic expansions for the partition function"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts g;
  app.add_option("--bits", g.bits, "working mantissa precision (>= 64)")
      ->capture_default_str();
  app.add_option("--max-bits", g.max_bits, "escalation cap for certified comparisons");
  app.add_option("--format", g.format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache", g.cache, "partition-table cache file (created if absent)");

  // exact
  long exact_n = 0;
  CLI::App* cmd_exact = app.add_subcommand("exact", "exact p(n) via the pentagonal recurrence");
  cmd_exact->add_option("--n", exact_n, "argument of p")->required()->check(CLI::NonNegativeNumber);

  // coeffs
  std::string coeffs_kind = "ratio";
  unsigned coeffs_k = 1, coeffs_N = 4;
  CLI::App* cmd_coeffs =
      app.add_subcommand("coeffs", "expansion coefficients, error constant and cutoff");
  cmd_coeffs->add_option("--kind", coeffs_kind, "ratio, shift or inverse")
      ->capture_default_str();
  cmd_coeffs->add_option("--k", coeffs_k, "shift (ratio/shift kinds)")->capture_default_str();
  cmd_coeffs->add_option("--N", coeffs_N, "expansion order")->capture_default_str();

  // approx
  std::string approx_kind = "ratio";
  unsigned approx_k = 1, approx_N = 2;
  long approx_n = 0;
  CLI::App* cmd_approx = app.add_subcommand("approx", "certified band at a given n");
  cmd_approx->add_option("--kind", approx_kind, "ratio, shift or inverse")
      ->capture_default_str();
  cmd_approx->add_option("--n", approx_n, "evaluation point")->required();
  cmd_approx->add_option("--k", approx_k, "shift")->capture_default_str();
  cmd_approx->add_option("--N", approx_N, "expansion order")->capture_default_str();

  // verify / tightness (shared options)
  std::string suite_name_opt = "main_theorem";
  pasym::SuiteParams sp;
  auto add_suite_opts = [&](CLI::App* cmd) {
    cmd->add_option("--suite", suite_name_opt, "suite name")->capture_default_str();
    cmd->add_option("--k-max", sp.k_max, "maximum shift k (0 = suite default)");
    cmd->add_option("--N-max", sp.N_max, "maximum order N (0 = suite default)");
    cmd->add_option("--samples", sp.samples, "samples per cell (0 = suite default)");
    cmd->add_option("--t-max", sp.t_max, "maximum t for envelope/identity sweeps");
    cmd->add_option("--seed", sp.seed, "sampling seed")->capture_default_str();
  };
  CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  add_suite_opts(cmd_verify);
  CLI::App* cmd_tight =
      app.add_subcommand("tightness", "per-case actual_error/bound ratios for a suite");
  add_suite_opts(cmd_tight);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    pasym::PrecisionContext ctx = make_ctx(g);

    if (cmd_exact->parsed()) {
      pasym::PartitionTable table =
          obtain_table(static_cast<std::size_t>(exact_n), g.cache);
      std::cout << table.at(static_cast<std::size_t>(exact_n)).get_str() << "\n";
      return 0;
    }

    if (cmd_coeffs->parsed()) {
      pasym::ExpansionTable tbl =
          pasym::make_expansion_table(parse_kind(coeffs_kind), coeffs_k, coeffs_N, ctx);
      emit_table(tbl, g, ctx);
      return 0;
    }

    if (cmd_approx->parsed()) {
      pasym::ExpansionKind kind = parse_kind(approx_kind);
      pasym::BoundedApprox band =
          kind == pasym::ExpansionKind::ratio
              ? pasym::ratio_band(approx_n, approx_k, approx_N, ctx)
              : kind == pasym::ExpansionKind::shift
                    ? pasym::shift_band(approx_n, approx_k, approx_N, ctx)
                    : pasym::inverse_band(approx_n, approx_N, ctx);
      emit_band(band, approx_n, g, ctx);
      return 0;
    }

    auto suite = pasym::suite_from_name(suite_name_opt);
    if (!suite) {
      std::cerr << "unknown suite: " << suite_name_opt << "\n";
      return 2;
    }
    std::size_t needed = pasym::required_table_size(*suite, sp, ctx);
    std::unique_ptr<pasym::PartitionTable> table;
    if (needed > 0)
      table = std::make_unique<pasym::PartitionTable>(obtain_table(needed, g.cache));

    if (cmd_tight->parsed()) {
      pasym::TightnessTable t = pasym::tightness_profile(*suite, sp, table.get(), ctx);
      if (g.format == "json")
        std::cout << pasym::tightness_to_json(t).dump(2) << "\n";
      else if (g.format == "csv")
        std::cout << pasym::tightness_to_csv(t);
      else
        std::cout << pasym::tightness_to_text(t);
      bool flagged = false;
      for (const auto& row : t.rows) flagged = flagged || row.flagged;
      return flagged ? 1 : 0;
    }

    pasym::VerificationReport report = pasym::run_suite(*suite, sp, table.get(), ctx);
    if (g.format == "json")
      std::cout << pasym::report_to_json(report).dump(2) << "\n";
    else if (g.format == "csv")
      std::cout << pasym::report_to_csv(report);
    else
      std::cout << pasym::report_to_text(report);
    return report.all_passed() ? 0 : 1;
  } catch (const pasym::AmbiguousError& e) {
    std::cerr << "ambiguous: " << e.what() << "\n";
    return 1;
  } catch (const pasym::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
