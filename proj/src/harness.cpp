#include "pasym/harness.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "pasym/appendix_sums.hpp"
#include "pasym/constants.hpp"
#include "pasym/errors.hpp"
#include "pasym/inverse_expansion.hpp"
#include "pasym/quotient_expansion.hpp"
#include "pasym/rational.hpp"
#include "pasym/shift_expansion.hpp"
#include "pasym/truncated_series.hpp"

namespace pasym {

namespace {

struct SuiteNameEntry {
  Suite suite;
  const char* name;
};

constexpr SuiteNameEntry kSuiteNames[] = {
    {Suite::main_theorem, "main_theorem"},
    {Suite::shift_theorem, "shift_theorem"},
    {Suite::inverse_theorem, "inverse_theorem"},
    {Suite::lehmer, "lehmer"},
    {Suite::omega_envelopes, "omega_envelopes"},
    {Suite::g_envelopes, "g_envelopes"},
    {Suite::sj_envelopes, "sj_envelopes"},
    {Suite::appendix_identities, "appendix_identities"},
    {Suite::coefficient_oracle, "coefficient_oracle"},
    {Suite::log_concavity, "log_concavity"},
};

}  // namespace

const char* suite_name(Suite s) {
  for (const auto& e : kSuiteNames)
    if (e.suite == s) return e.name;
  return "unknown";
}

std::optional<Suite> suite_from_name(std::string_view name) {
  for (const auto& e : kSuiteNames)
    if (name == e.name) return e.suite;
  return std::nullopt;
}

std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (const auto& e : kSuiteNames) out.push_back(e.suite);
  return out;
}

SuiteParams resolve_params(Suite s, SuiteParams p) {
  if (p.samples == 0) p.samples = 50;
  if (p.N_max == 0) p.N_max = 4;
  if (p.k_max == 0) p.k_max = (s == Suite::omega_envelopes) ? 5 : 3;
  if (p.t_max == 0) {
    switch (s) {
      case Suite::omega_envelopes:
      case Suite::g_envelopes: p.t_max = 40; break;
      case Suite::sj_envelopes: p.t_max = 200; break;
      case Suite::appendix_identities: p.t_max = 30; break;
      default: p.t_max = 40; break;
    }
  }
  return p;
}

namespace {

// --------------------------------------------------------------------------
// report assembly
// --------------------------------------------------------------------------

using Params = std::vector<std::pair<std::string, std::string>>;

struct ReportBuilder {
  VerificationReport report;
  int digits;
  PrecisionContext ctx;
  std::optional<Real> min_tightness;

  ReportBuilder(Suite s, const PrecisionContext& c)
      : digits(c.output_digits()), ctx(c) {
    report.suite = suite_name(s);
    report.bits = c.bits;
  }

  void add_certified(Params params, const PairEvaluator& eval) {
    CheckResult r = certify_leq(eval, ctx);
    CaseRecord rec;
    rec.params = std::move(params);
    rec.lhs = r.lhs.str(digits);
    rec.rhs = r.rhs.str(digits);
    rec.margin = r.margin.str(digits);
    rec.status = r.status;
    if (r.rhs.sign() > 0) {
      rec.has_ratio = true;
      rec.ratio = (r.lhs / r.rhs).to_double();
      if (r.status == CheckStatus::pass) {
        Real tight = (r.rhs - r.lhs) / r.rhs;
        if (!min_tightness || tight < *min_tightness) min_tightness = tight;
      }
    }
    push(std::move(rec));
  }

  /// Certified equality of two recomputable quantities, with tolerance
  /// max(|a|, |b|, 1) * 2^(margin_exponent - bits).
  void add_identity(Params params,
                    const std::function<std::pair<Real, Real>(unsigned)>& eval) {
    int margin_exponent = ctx.margin_exponent;
    add_certified(std::move(params), [eval, margin_exponent](unsigned bits) {
      auto [a, b] = eval(bits);
      Real lhs = abs(a - b);
      Real tol = max(max(abs(a), abs(b)), Real::one(bits))
                     .mul_2si(margin_exponent - static_cast<long>(bits));
      return std::make_pair(std::move(lhs), std::move(tol));
    });
  }

  void add_boolean(Params params, bool pass, std::string lhs = "", std::string rhs = "") {
    CaseRecord rec;
    rec.params = std::move(params);
    rec.lhs = std::move(lhs);
    rec.rhs = std::move(rhs);
    rec.margin = "0";
    rec.status = pass ? CheckStatus::pass : CheckStatus::fail;
    push(std::move(rec));
  }

  void push(CaseRecord rec) {
    switch (rec.status) {
      case CheckStatus::pass: ++report.pass_count; break;
      case CheckStatus::fail: ++report.fail_count; break;
      case CheckStatus::ambiguous: ++report.ambiguous_count; break;
    }
    report.cases.push_back(std::move(rec));
  }

  VerificationReport finish() {
    if (min_tightness) report.max_tightness = min_tightness->str(digits);
    return std::move(report);
  }
};

std::string istr(long v) { return std::to_string(v); }

// boundary first, then seeded samples sorted ascending
std::vector<long> sample_window(long cutoff, unsigned samples, long span,
                                std::uint64_t seed, unsigned k, unsigned N) {
  std::vector<long> ns;
  ns.push_back(cutoff);
  std::mt19937_64 eng(seed + 1000003ULL * k + 1009ULL * N);
  std::vector<long> drawn;
  drawn.reserve(samples);
  for (unsigned i = 0; i < samples; ++i)
    drawn.push_back(cutoff + 1 + static_cast<long>(eng() % static_cast<std::uint64_t>(span)));
  std::sort(drawn.begin(), drawn.end());
  ns.insert(ns.end(), drawn.begin(), drawn.end());
  return ns;
}

void require_table(const PartitionTable* table, std::size_t needed, const char* who) {
  if (table == nullptr || table->n_max() < needed)
    throw SizingError(std::string(who) + ": oracle table too small, need n_max >= " +
                          std::to_string(needed),
                      needed);
}

// --------------------------------------------------------------------------
// suite bodies
// --------------------------------------------------------------------------

void run_main_theorem(ReportBuilder& b, const SuiteParams& p, const PartitionTable& table) {
  for (unsigned k = 1; k <= p.k_max; ++k) {
    for (unsigned N = 1; N <= p.N_max; ++N) {
      QuotientErrorBudget budget = quotient_error_budget(k, N, b.ctx);
      for (long n : sample_window(budget.cutoff, p.samples, p.span, p.seed, k, N)) {
        BoundedApprox band = ratio_band(n, k, N, b.ctx);
        mpq_class exact = table.exact_quotient(static_cast<std::size_t>(n), k);
        Params params{{"k", istr(k)},
                      {"N", istr(N)},
                      {"n", istr(n)},
                      {"center", band.center.str(b.digits)},
                      {"radius", band.radius.str(b.digits)},
                      {"exact", Real::from_mpq(exact, b.ctx.bits).str(b.digits)}};
        b.add_certified(std::move(params), [n, k, N, exact](unsigned bits) {
          PrecisionContext c = PrecisionContext::with_bits(bits);
          BoundedApprox bd = ratio_band(n, k, N, c);
          Real q = Real::from_mpq(exact, bits);
          return std::make_pair(abs(q - bd.center), bd.radius);
        });
      }
    }
  }
}

void run_shift_theorem(ReportBuilder& b, const SuiteParams& p, const PartitionTable& table) {
  for (unsigned k = 1; k <= p.k_max; ++k) {
    for (unsigned N = 1; N <= p.N_max; ++N) {
      ShiftErrorBudget budget = shift_error_budget(k, N, b.ctx);
      for (long n : sample_window(budget.cutoff_n, p.samples, p.span, p.seed, k, N)) {
        BoundedApprox band = shift_band(n, k, N, b.ctx);
        const mpz_class& pnk = table.at(static_cast<std::size_t>(n) + k);
        Real target = Real::from_mpz(pnk, b.ctx.bits) / band.prefactor;
        Params params{{"k", istr(k)},
                      {"N", istr(N)},
                      {"n", istr(n)},
                      {"center", band.center.str(b.digits)},
                      {"radius", band.radius.str(b.digits)},
                      {"target", target.str(b.digits)}};
        b.add_certified(std::move(params), [n, k, N, &pnk](unsigned bits) {
          PrecisionContext c = PrecisionContext::with_bits(bits);
          BoundedApprox bd = shift_band(n, k, N, c);
          Real t = Real::from_mpz(pnk, bits) / bd.prefactor;
          return std::make_pair(abs(t - bd.center), bd.radius);
        });
      }
    }
  }
}

void run_inverse_theorem(ReportBuilder& b, const SuiteParams& p, const PartitionTable& table) {
  for (unsigned N = 1; N <= p.N_max; ++N) {
    long cutoff = inverse_cutoff(N, b.ctx);
    for (long n : sample_window(cutoff, p.samples, p.span, p.seed, 0, N)) {
      BoundedApprox band = inverse_band(n, N, b.ctx);
      const mpz_class& pn = table.at(static_cast<std::size_t>(n));
      Real target = 1 / (Real::from_mpz(pn, b.ctx.bits) * band.prefactor);
      Params params{{"N", istr(N)},
                    {"n", istr(n)},
                    {"center", band.center.str(b.digits)},
                    {"radius", band.radius.str(b.digits)},
                    {"target", target.str(b.digits)}};
      b.add_certified(std::move(params), [n, N, &pn](unsigned bits) {
        PrecisionContext c = PrecisionContext::with_bits(bits);
        BoundedApprox bd = inverse_band(n, N, c);
        Real t = 1 / (Real::from_mpz(pn, bits) * bd.prefactor);
        return std::make_pair(abs(t - bd.center), bd.radius);
      });
    }
  }
}

void run_lehmer(ReportBuilder& b, const SuiteParams& p, const PartitionTable& table) {
  for (unsigned m = 2; m <= 4; ++m) {
    long cutoff = certified_next_integer_above(
        [m](unsigned bits) { return g_hat(static_cast<long>(m), bits); }, b.ctx);
    for (long n = cutoff; n < cutoff + p.lehmer_span; ++n) {
      if (n == 6 && m == 2) continue;  // excluded by the theorem
      const mpz_class& pn = table.at(static_cast<std::size_t>(n));
      Params params{{"m", istr(m)}, {"n", istr(n)}};
      b.add_certified(std::move(params), [n, m, &pn](unsigned bits) {
        Real mun = mu(n, bits);
        Real lhs = abs(to_real(pn, bits) * (24 * n - 1) /
                           (sqrt(Real::from_long(12, bits)) * exp(mun)) -
                       (1 - 1 / mun));
        return std::make_pair(std::move(lhs), pow_si(mun, -static_cast<long>(m)));
      });
    }
  }
}

void run_omega_envelopes(ReportBuilder& b, const SuiteParams& p) {
  for (unsigned k = 1; k <= p.k_max; ++k) {
    for (unsigned t = 1; t <= p.t_max; ++t) {
      b.add_certified(
          Params{{"k", istr(k)}, {"t", istr(t)}, {"parity", "odd"}},
          [k, t](unsigned bits) {
            PrecisionContext c = PrecisionContext::with_bits(bits);
            return std::make_pair(abs(omega1(k, 2 * t + 1, c)), omega_odd_envelope(k, t, c));
          });
      b.add_certified(
          Params{{"k", istr(k)}, {"t", istr(t)}, {"parity", "even"}},
          [k, t](unsigned bits) {
            PrecisionContext c = PrecisionContext::with_bits(bits);
            return std::make_pair(abs(omega1(k, 2 * t, c)), omega_even_envelope(k, t, c));
          });
    }
  }
}

void run_g_envelopes(ReportBuilder& b, const SuiteParams& p) {
  for (unsigned t = 1; t <= p.t_max; ++t) {
    b.add_certified(Params{{"t", istr(t)}, {"parity", "even"}}, [t](unsigned bits) {
      PrecisionContext c = PrecisionContext::with_bits(bits);
      return std::make_pair(abs(g_coeff(2 * t, c)), g_envelopes(t, c).first);
    });
    b.add_certified(Params{{"t", istr(t)}, {"parity", "odd"}}, [t](unsigned bits) {
      PrecisionContext c = PrecisionContext::with_bits(bits);
      return std::make_pair(abs(g_coeff(2 * t + 1, c)), g_envelopes(t, c).second);
    });
  }
}

// Leading term L_j(t) of each S_j estimate and its envelope constant c_j:
// S_j(t) = L_j(t) (1 + O(c_j/t)).
Real sj_leading(unsigned j, unsigned t, unsigned bits) {
  Real a = alpha(bits);
  Real a2 = a * a;
  Real s = sqrt(1 + a2);
  Real q = (1 + a2) / a2;
  Real tt = Real::from_unsigned(t, bits);
  Real t32 = tt * sqrt(tt);
  Real sp = sqrt(pi(bits));
  switch (j) {
    case 1:
      return a * sinh(a) / (2 * sp) / (pow_si(Real::from_long(24, bits), static_cast<long>(t)) * t32);
    case 2: return cosh(s - 1) - 1;
    case 3: return sinh(s - 1) / (1 + a2) * pow_si(q, static_cast<long>(t));
    case 4: return (a * cosh(a) + sinh(a)) / (16 * sp * a) / t32;
    case 5: return cosh(a) / (2 * sp * t32);
    case 6: return pow_si(q, static_cast<long>(t)) / s;
    case 7: return (cosh(s - 1) - 1) / s * pow_si(q, static_cast<long>(t));
    case 8: return (a * sinh(a) + cosh(a) - 1) / (4 * sp * t32);
    case 9: return s * sinh(s - 1) / a2;
    default: throw DomainError("sj_leading: j must be 1..9");
  }
}

const char* sj_constant(unsigned j) {
  // envelope constants, in order S_1..S_9
  static const char* kC[] = {"2.6", "54.9", "15.3", "6.7", "1.2", "0.2", "14", "9", "7.7"};
  return kC[j - 1];
}

void run_sj_envelopes(ReportBuilder& b, const SuiteParams& p) {
  for (unsigned j = 1; j <= 9; ++j) {
    for (unsigned t = 2; t <= p.t_max; ++t) {
      b.add_certified(Params{{"j", istr(j)}, {"t", istr(t)}}, [j, t](unsigned bits) {
        PrecisionContext c = PrecisionContext::with_bits(bits);
        Real ratio_err = abs(S_sum(j, t, c) / sj_leading(j, t, bits) - 1);
        Real bound = Real::from_string(sj_constant(j), bits) / static_cast<long>(t);
        return std::make_pair(std::move(ratio_err), std::move(bound));
      });
    }
  }
}

void run_appendix(ReportBuilder& b, const SuiteParams& p) {
  for (unsigned t = 3; t <= p.t_max; ++t) {
    for (unsigned u = 1; u + 2 <= t; ++u) {
      b.add_identity(Params{{"check", "t_tilde"}, {"t", istr(t)}, {"u", istr(u)}},
                     [t, u](unsigned bits) {
                       PrecisionContext c = PrecisionContext::with_bits(bits);
                       return std::make_pair(t_tilde_direct(t, u, c), t_tilde_closed(t, u, c));
                     });
    }
  }
  for (unsigned t = 2; t <= p.t_max; ++t) {
    for (unsigned u = 0; u + 2 <= t; ++u) {
      b.add_identity(Params{{"check", "t_prime"}, {"t", istr(t)}, {"u", istr(u)}},
                     [t, u](unsigned bits) {
                       PrecisionContext c = PrecisionContext::with_bits(bits);
                       return std::make_pair(t_prime_direct(t, u, c), t_prime_closed(t, u, c));
                     });
    }
    b.add_identity(Params{{"check", "s3_closed"}, {"t", istr(t)}, {"u", ""}},
                   [t](unsigned bits) {
                     PrecisionContext c = PrecisionContext::with_bits(bits);
                     return std::make_pair(S_sum(3, t, c), s3_via_closed(t, c));
                   });
    b.add_identity(Params{{"check", "s2_closed"}, {"t", istr(t)}, {"u", ""}},
                   [t](unsigned bits) {
                     PrecisionContext c = PrecisionContext::with_bits(bits);
                     return std::make_pair(S_sum(2, t, c), s2_via_closed(t, c));
                   });
  }
  for (unsigned t = 2; t <= 50; ++t) {
    S2SplitResult split = s2_split_check(t, b.ctx);
    b.add_identity(Params{{"check", "s2_split"}, {"t", istr(t)}, {"u", ""}},
                   [t](unsigned bits) {
                     PrecisionContext c = PrecisionContext::with_bits(bits);
                     S2SplitResult r = s2_split_check(t, c);
                     return std::make_pair(std::move(r.sum), std::move(r.direct));
                   });
    b.add_boolean(Params{{"check", "s2_env1"}, {"t", istr(t)}, {"u", ""}}, split.env1);
    b.add_boolean(Params{{"check", "s2_env3"}, {"t", istr(t)}, {"u", ""}}, split.env3);
    b.add_boolean(Params{{"check", "s2_env4"}, {"t", istr(t)}, {"u", ""}}, split.env4);
  }
  for (const FactCase& f : fact_checks(b.ctx))
    b.add_boolean(Params{{"check", "fact:" + f.name}, {"t", ""}, {"u", ""}}, f.pass);
}

// relative agreement with the independent series oracle: |a-b| <= 2^{-bits/2} |b|
void add_oracle_case(ReportBuilder& b, Params params,
                     const std::function<std::pair<Real, Real>(unsigned)>& eval) {
  b.add_certified(std::move(params), [eval](unsigned bits) {
    auto [closed, oracle] = eval(bits);
    Real lhs = abs(closed - oracle);
    Real rhs = abs(oracle).mul_2si(-static_cast<long>(bits) / 2);
    return std::make_pair(std::move(lhs), std::move(rhs));
  });
}

const TruncatedSeries& cached_shift_series(unsigned k, unsigned order, unsigned bits) {
  static std::mutex m;
  static std::map<std::tuple<unsigned, unsigned, unsigned>, TruncatedSeries> cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_tuple(k, order, bits);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, shift_ratio_series(k, order, bits)).first;
  return it->second;
}

const TruncatedSeries& cached_inverse_series(unsigned order, unsigned bits) {
  static std::mutex m;
  static std::map<std::pair<unsigned, unsigned>, TruncatedSeries> cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_pair(order, bits);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, inverse_ratio_series(order, bits)).first;
  return it->second;
}

void run_coefficient_oracle(ReportBuilder& b, const SuiteParams& p) {
  const unsigned omega_t_max = 12, g_t_max = 10, c_m_max = 6;
  for (unsigned k = 1; k <= p.k_max; ++k) {
    for (unsigned t = 0; t <= omega_t_max; ++t) {
      add_oracle_case(b, Params{{"family", "omega"}, {"k", istr(k)}, {"index", istr(t)}},
                      [k, t, omega_t_max](unsigned bits) {
                        PrecisionContext c = PrecisionContext::with_bits(bits);
                        return std::make_pair(omega1(k, t, c),
                                              cached_shift_series(k, omega_t_max, bits).coeff(t));
                      });
    }
  }
  for (unsigned t = 0; t <= g_t_max; ++t) {
    add_oracle_case(b, Params{{"family", "g"}, {"k", ""}, {"index", istr(t)}},
                    [t, g_t_max](unsigned bits) {
                      PrecisionContext c = PrecisionContext::with_bits(bits);
                      return std::make_pair(g_coeff(t, c),
                                            cached_inverse_series(g_t_max, bits).coeff(t));
                    });
  }
  for (unsigned k = 1; k <= p.k_max; ++k) {
    for (unsigned m = 0; m <= c_m_max; ++m) {
      add_oracle_case(b, Params{{"family", "c"}, {"k", istr(k)}, {"index", istr(m)}},
                      [k, m, c_m_max](unsigned bits) {
                        PrecisionContext c = PrecisionContext::with_bits(bits);
                        TruncatedSeries prod = cached_shift_series(k, c_m_max, bits) *
                                               cached_inverse_series(c_m_max, bits);
                        return std::make_pair(c_coeff(k, m, c), prod.coeff(m));
                      });
    }
  }
}

void run_log_concavity(ReportBuilder& b, const PartitionTable& table) {
  for (std::size_t n = 26; n <= 1000; ++n) {
    mpz_class lhs = table.at(n - 1) * table.at(n + 1);
    mpz_class rhs = table.at(n) * table.at(n);
    b.add_boolean(Params{{"n", istr(static_cast<long>(n))}}, rhs >= lhs, lhs.get_str(),
                  rhs.get_str());
  }
}

}  // namespace

std::size_t required_table_size(Suite s, const SuiteParams& raw, const PrecisionContext& ctx) {
  SuiteParams p = resolve_params(s, raw);
  switch (s) {
    case Suite::main_theorem:
    case Suite::shift_theorem: {
      std::size_t need = 0;
      for (unsigned k = 1; k <= p.k_max; ++k)
        for (unsigned N = 1; N <= p.N_max; ++N) {
          ShiftErrorBudget budget = shift_error_budget(k, N, ctx);
          need = std::max(need, static_cast<std::size_t>(budget.cutoff_n + p.span + k));
        }
      return need;
    }
    case Suite::inverse_theorem: {
      std::size_t need = 0;
      for (unsigned N = 1; N <= p.N_max; ++N)
        need = std::max(need, static_cast<std::size_t>(inverse_cutoff(N, ctx) + p.span));
      return need;
    }
    case Suite::lehmer: {
      long cutoff = certified_next_integer_above(
          [](unsigned bits) { return g_hat(4, bits); }, ctx);
      return static_cast<std::size_t>(cutoff + p.lehmer_span);
    }
    case Suite::log_concavity: return 1001;
    default: return 0;
  }
}

VerificationReport run_suite(Suite s, const SuiteParams& raw, const PartitionTable* table,
                             const PrecisionContext& ctx) {
  SuiteParams p = resolve_params(s, raw);
  std::size_t needed = required_table_size(s, p, ctx);
  if (needed > 0) require_table(table, needed, suite_name(s));

  ReportBuilder b(s, ctx);
  switch (s) {
    case Suite::main_theorem: run_main_theorem(b, p, *table); break;
    case Suite::shift_theorem: run_shift_theorem(b, p, *table); break;
    case Suite::inverse_theorem: run_inverse_theorem(b, p, *table); break;
    case Suite::lehmer: run_lehmer(b, p, *table); break;
    case Suite::omega_envelopes: run_omega_envelopes(b, p); break;
    case Suite::g_envelopes: run_g_envelopes(b, p); break;
    case Suite::sj_envelopes: run_sj_envelopes(b, p); break;
    case Suite::appendix_identities: run_appendix(b, p); break;
    case Suite::coefficient_oracle: run_coefficient_oracle(b, p); break;
    case Suite::log_concavity: run_log_concavity(b, *table); break;
  }
  return b.finish();
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["ctx"] = {{"bits", report.bits}};
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const CaseRecord& c : report.cases) {
    nlohmann::ordered_json params;
    for (const auto& [key, value] : c.params) params[key] = value;
    cases.push_back({{"params", std::move(params)},
                     {"lhs", c.lhs},
                     {"rhs", c.rhs},
                     {"margin", c.margin},
                     {"status", to_string(c.status)}});
  }
  j["cases"] = std::move(cases);
  j["summary"] = {{"cases", report.cases.size()},
                  {"pass", report.pass_count},
                  {"fail", report.fail_count},
                  {"ambiguous", report.ambiguous_count},
                  {"max_tightness", report.max_tightness}};
  return j;
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream os;
  if (report.cases.empty()) return "";
  for (const auto& [key, value] : report.cases.front().params) os << key << ",";
  os << "lhs,rhs,margin,status\n";
  for (const CaseRecord& c : report.cases) {
    for (const auto& [key, value] : c.params) os << value << ",";
    os << c.lhs << "," << c.rhs << "," << c.margin << "," << to_string(c.status) << "\n";
  }
  return os.str();
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "suite: " << report.suite << "\n"
     << "bits: " << report.bits << "\n"
     << "cases: " << report.cases.size() << " pass: " << report.pass_count
     << " fail: " << report.fail_count << " ambiguous: " << report.ambiguous_count << "\n";
  if (!report.max_tightness.empty()) os << "max_tightness: " << report.max_tightness << "\n";
  for (const CaseRecord& c : report.cases) {
    if (c.status == CheckStatus::pass) continue;
    os << to_string(c.status) << ":";
    for (const auto& [key, value] : c.params) os << " " << key << "=" << value;
    os << " lhs=" << c.lhs << " rhs=" << c.rhs << "\n";
  }
  return os.str();
}

TightnessTable tightness_profile(Suite s, const SuiteParams& params,
                                 const PartitionTable* table, const PrecisionContext& ctx) {
  VerificationReport report = run_suite(s, params, table, ctx);
  TightnessTable out;
  out.suite = report.suite;
  for (const CaseRecord& c : report.cases) {
    if (!c.has_ratio) continue;
    TightnessRow row;
    row.params = c.params;
    std::ostringstream os;
    os.precision(12);
    os << c.ratio;
    row.ratio = os.str();
    row.flagged = c.ratio > 1.0 || c.status != CheckStatus::pass;
    out.rows.push_back(std::move(row));
  }
  return out;
}

nlohmann::ordered_json tightness_to_json(const TightnessTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const TightnessRow& r : table.rows) {
    nlohmann::ordered_json params;
    for (const auto& [key, value] : r.params) params[key] = value;
    rows.push_back(
        {{"params", std::move(params)}, {"ratio", r.ratio}, {"flagged", r.flagged}});
  }
  return nlohmann::ordered_json{{"suite", table.suite}, {"rows", std::move(rows)}};
}

std::string tightness_to_csv(const TightnessTable& table) {
  std::ostringstream os;
  if (table.rows.empty()) return "";
  for (const auto& [key, value] : table.rows.front().params) os << key << ",";
  os << "ratio,flagged\n";
  for (const TightnessRow& r : table.rows) {
    for (const auto& [key, value] : r.params) os << value << ",";
    os << r.ratio << "," << (r.flagged ? "1" : "0") << "\n";
  }
  return os.str();
}

std::string tightness_to_text(const TightnessTable& table) {
  std::ostringstream os;
  os << "suite: " << table.suite << " rows: " << table.rows.size() << "\n";
  for (const TightnessRow& r : table.rows) {
    for (const auto& [key, value] : r.params) os << key << "=" << value << " ";
    os << "ratio=" << r.ratio << (r.flagged ? " FLAGGED" : "") << "\n";
  }
  return os.str();
}

}  // namespace pasym
