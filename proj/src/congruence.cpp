#include "qdl/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "qdl/paths.hpp"

namespace qdl {

std::string_view statement_tag(Statement s) {
  switch (s) {
  case Statement::Thm1Odd:
    return "thm1-odd";
  case Statement::Thm1Even:
    return "thm1-even";
  case Statement::Thm2Odd:
    return "thm2-odd";
  case Statement::Thm2Even:
    return "thm2-even";
  case Statement::QLucas:
    return "q-lucas";
  case Statement::Lucas:
    return "lucas";
  case Statement::DelannoyLucas:
    return "delannoy-lucas";
  case Statement::Interp:
    return "interp";
  }
  return "?";
}

void CongruenceContext::prepare(long dq_h, long dq_k, long binom_rows, long delannoy_max, unsigned max_n) {
  if (dq_h >= 0 && dq_k >= 0)
    dq_.populate(dq_h, dq_k);
  if (binom_rows >= 0)
    binoms_.populate(binom_rows);
  if (delannoy_max >= 0)
    delannoy_.populate(delannoy_max, delannoy_max);
  cyclo_.populate(max_n);
}

namespace {

CongruenceReport finish(Statement s, std::vector<std::pair<std::string, long>> params, IntPoly lhs, IntPoly rhs,
                        unsigned n, const CongruenceContext &ctx) {
  CongruenceReport r;
  r.statement = s;
  r.params = std::move(params);
  r.residue = reduce_mod(lhs - rhs, n, ctx.cyclo());
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.pass = r.residue.is_zero();
  return r;
}

void require_digits(unsigned n, long b, long d) {
  if (n == 0)
    throw DomainError("modulus index must be positive");
  if (b < 0 || d < 0 || b >= static_cast<long>(n) || d >= static_cast<long>(n))
    throw DomainError("digits b, d must lie in [0, n - 1]");
}

void require_nonneg(long a, long c) {
  if (a < 0 || c < 0)
    throw DomainError("quotient digits a, c must be nonnegative");
}

// Integer multiplier of D_q(b, d) in the split congruence.
BigInt split_coefficient(unsigned n, long a, long c, const CongruenceContext &ctx) {
  if (a < 0 || c < 0)
    return 0;
  return n % 2 == 1 ? ctx.delannoy().at(a, c) : BigInt(1);
}

CongruenceContext context_for(long max_h, long max_k, long max_delannoy, unsigned n) {
  CongruenceContext ctx;
  ctx.prepare(max_h, max_k, -1, max_delannoy, n);
  return ctx;
}

} // namespace

CongruenceReport verify_theorem2(unsigned n, long h, long k, const CongruenceContext &ctx) {
  if (n == 0)
    throw DomainError("modulus index must be positive");
  const long w = static_cast<long>(n);
  const QDelannoyTable &dq = ctx.dq();
  IntPoly rhs = dq.at(h + w, k) + dq.at(h, k + w);
  rhs.add_shifted(dq.at(h, k), 0, n % 2 == 1 ? 1 : -1);
  return finish(n % 2 == 1 ? Statement::Thm2Odd : Statement::Thm2Even, {{"n", w}, {"h", h}, {"k", k}},
                dq.at(h + w, k + w), std::move(rhs), n, ctx);
}

CongruenceReport verify_theorem2(unsigned n, long h, long k) {
  return verify_theorem2(n, h, k, context_for(h + n, k + n, -1, n));
}

CongruenceReport verify_theorem1(unsigned n, long a, long b, long c, long d, const CongruenceContext &ctx) {
  require_digits(n, b, d);
  require_nonneg(a, c);
  const long w = static_cast<long>(n);
  const QDelannoyTable &dq = ctx.dq();
  IntPoly rhs = split_coefficient(n, a, c, ctx) * dq.at(b, d);
  return finish(n % 2 == 1 ? Statement::Thm1Odd : Statement::Thm1Even,
                {{"n", w}, {"a", a}, {"b", b}, {"c", c}, {"d", d}}, dq.at(a * w + b, c * w + d), std::move(rhs), n,
                ctx);
}

CongruenceReport verify_theorem1(unsigned n, long a, long b, long c, long d) {
  return verify_theorem1(n, a, b, c, d, context_for(a * n + b, c * n + d, std::max(a, c), n));
}

bool induction_consistency(unsigned n, long a, long b, long c, long d, const CongruenceContext &ctx) {
  require_digits(n, b, d);
  require_nonneg(a, c);
  const long w = static_cast<long>(n);
  const long h = a * w + b, k = c * w + d;
  const QDelannoyTable &dq = ctx.dq();
  const IntPoly &base = dq.at(b, d);
  const long sign = n % 2 == 1 ? 1 : -1;

  // Three-term congruence at (h, k).
  if (!verify_theorem2(n, h, k, ctx).pass)
    return false;

  // Each right-hand term already splits by the inductive hypothesis.
  const BigInt east = split_coefficient(n, a + 1, c, ctx);
  const BigInt north = split_coefficient(n, a, c + 1, ctx);
  const BigInt diag = split_coefficient(n, a, c, ctx);
  if (!congruent(dq.at(h + w, k), east * base, n, ctx.cyclo()) ||
      !congruent(dq.at(h, k + w), north * base, n, ctx.cyclo()) ||
      !congruent(dq.at(h, k), diag * base, n, ctx.cyclo()))
    return false;

  // Classical recurrence collapses the multipliers: D(a+1,c) + D(a,c+1) + D(a,c)
  // for odd n, 1 + 1 - 1 for even n.
  const BigInt combined = east + north + sign * diag;
  if (combined != split_coefficient(n, a + 1, c + 1, ctx))
    return false;

  return congruent(dq.at(h + w, k + w), combined * base, n, ctx.cyclo());
}

bool induction_consistency(unsigned n, long a, long b, long c, long d) {
  const long top = std::max(a, c) + 1;
  return induction_consistency(n, a, b, c, d, context_for((a + 1) * n + b, (c + 1) * n + d, top, n));
}

CongruenceReport verify_q_lucas(unsigned n, long a, long b, long c, long d, const CongruenceContext &ctx) {
  require_digits(n, b, d);
  require_nonneg(a, c);
  const long w = static_cast<long>(n);
  const QBinomialTable &qb = ctx.binoms();
  IntPoly rhs = binomial(a, c) * qb.at(b, d);
  return finish(Statement::QLucas, {{"n", w}, {"a", a}, {"b", b}, {"c", c}, {"d", d}}, qb.at(a * w + b, c * w + d),
                std::move(rhs), n, ctx);
}

namespace {

CongruenceReport integer_report(Statement s, unsigned p, long a, long b, long c, long d, BigInt lhs, BigInt rhs) {
  if (!is_prime(p))
    throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (b < 0 || d < 0 || b >= static_cast<long>(p) || d >= static_cast<long>(p))
    throw DomainError("digits b, d must lie in [0, p - 1]");
  CongruenceReport r;
  r.statement = s;
  r.params = {{"p", static_cast<long>(p)}, {"a", a}, {"b", b}, {"c", c}, {"d", d}};
  BigInt diff = lhs - rhs;
  mpz_fdiv_r_ui(diff.get_mpz_t(), diff.get_mpz_t(), p);
  r.lhs = IntPoly::constant(lhs);
  r.rhs = IntPoly::constant(rhs);
  r.residue = IntPoly::constant(diff);
  r.pass = r.residue.is_zero();
  return r;
}

} // namespace

CongruenceReport verify_lucas(unsigned p, long a, long b, long c, long d) {
  require_nonneg(a, c);
  const long w = static_cast<long>(p);
  return integer_report(Statement::Lucas, p, a, b, c, d, binomial(a * w + b, c * w + d),
                        binomial(a, c) * binomial(b, d));
}

CongruenceReport verify_delannoy_lucas(unsigned p, long a, long b, long c, long d, const CongruenceContext &ctx) {
  require_nonneg(a, c);
  const long w = static_cast<long>(p);
  const DelannoyTable &t = ctx.delannoy();
  return integer_report(Statement::DelannoyLucas, p, a, b, c, d, t.at(a * w + b, c * w + d),
                        t.at(a, c) * t.at(b, d));
}

CongruenceReport verify_interpretation(long h, long k, const CongruenceContext &ctx) {
  CongruenceReport r;
  r.statement = Statement::Interp;
  r.params = {{"h", h}, {"k", k}};
  r.lhs = sigma_poly(h, k);
  r.rhs = ctx.dq().at(h, k);
  r.residue = r.lhs - r.rhs;
  r.pass = r.residue.is_zero();
  return r;
}

std::optional<SweepKind> parse_sweep_kind(std::string_view name) {
  if (name == "lucas")
    return SweepKind::Lucas;
  if (name == "dlucas")
    return SweepKind::DelannoyLucas;
  if (name == "qlucas")
    return SweepKind::QLucas;
  if (name == "thm1")
    return SweepKind::Thm1;
  if (name == "thm2")
    return SweepKind::Thm2;
  if (name == "interp")
    return SweepKind::Interp;
  return std::nullopt;
}

std::string_view sweep_kind_name(SweepKind k) {
  switch (k) {
  case SweepKind::Lucas:
    return "lucas";
  case SweepKind::DelannoyLucas:
    return "dlucas";
  case SweepKind::QLucas:
    return "qlucas";
  case SweepKind::Thm1:
    return "thm1";
  case SweepKind::Thm2:
    return "thm2";
  case SweepKind::Interp:
    return "interp";
  }
  return "?";
}

namespace {

struct Case {
  long n = 0, a = 0, b = 0, c = 0, d = 0;
};

struct CaseResult {
  CongruenceReport report;
  std::optional<bool> induction;
};

std::vector<Case> digit_cases(long lo_n, long max_n, long max_a, long max_c, bool primes_only) {
  std::vector<Case> out;
  for (long n = lo_n; n <= max_n; ++n) {
    if (primes_only && !is_prime(static_cast<unsigned long>(n)))
      continue;
    for (long a = 0; a <= max_a; ++a)
      for (long b = 0; b < n; ++b)
        for (long c = 0; c <= max_c; ++c)
          for (long d = 0; d < n; ++d)
            out.push_back({n, a, b, c, d});
  }
  return out;
}

std::vector<Case> build_cases(const SweepConfig &cfg) {
  std::vector<Case> out;
  switch (cfg.kind) {
  case SweepKind::Lucas:
  case SweepKind::DelannoyLucas:
    return digit_cases(2, cfg.max_n, cfg.max_a, cfg.max_c, true);
  case SweepKind::QLucas:
  case SweepKind::Thm1:
    return digit_cases(1, cfg.max_n, cfg.max_a, cfg.max_c, false);
  case SweepKind::Thm2:
    for (long n = 1; n <= cfg.max_n; ++n)
      for (long h = 0; h <= cfg.max_h; ++h)
        for (long k = 0; k <= cfg.max_k; ++k)
          out.push_back({n, h, 0, k, 0});
    return out;
  case SweepKind::Interp:
    for (long h = 0; h <= cfg.max_h; ++h)
      for (long k = 0; k <= cfg.max_k; ++k)
        out.push_back({0, h, 0, k, 0});
    return out;
  }
  return out;
}

void prepare_context(const SweepConfig &cfg, const std::vector<Case> &cases, CongruenceContext &ctx) {
  long max_h = -1, max_k = -1, max_del = -1, max_row = -1;
  long max_n = 1;
  for (const Case &cs : cases) {
    long h = 0, k = 0;
    switch (cfg.kind) {
    case SweepKind::Thm2:
      h = cs.a + cs.n;
      k = cs.c + cs.n;
      break;
    case SweepKind::Thm1:
      h = (cs.a + 2) * cs.n - 1;
      k = (cs.c + 2) * cs.n - 1;
      max_del = std::max({max_del, cs.a + 1, cs.c + 1});
      break;
    case SweepKind::QLucas:
      max_row = std::max(max_row, cs.a * cs.n + cs.b);
      h = k = -1;
      break;
    case SweepKind::DelannoyLucas:
      max_del = std::max({max_del, (cs.a + 1) * cs.n, (cs.c + 1) * cs.n});
      break;
    case SweepKind::Interp:
      h = cs.a;
      k = cs.c;
      break;
    case SweepKind::Lucas:
      break;
    }
    max_h = std::max(max_h, h);
    max_k = std::max(max_k, k);
    max_n = std::max(max_n, cs.n);
  }
  ctx.prepare(max_h, max_k, max_row, max_del, static_cast<unsigned>(max_n));
}

CaseResult run_case(SweepKind kind, const Case &cs, const CongruenceContext &ctx) {
  const auto n = static_cast<unsigned>(cs.n);
  switch (kind) {
  case SweepKind::Lucas:
    return {verify_lucas(n, cs.a, cs.b, cs.c, cs.d), std::nullopt};
  case SweepKind::DelannoyLucas:
    return {verify_delannoy_lucas(n, cs.a, cs.b, cs.c, cs.d, ctx), std::nullopt};
  case SweepKind::QLucas:
    return {verify_q_lucas(n, cs.a, cs.b, cs.c, cs.d, ctx), std::nullopt};
  case SweepKind::Thm1:
    return {verify_theorem1(n, cs.a, cs.b, cs.c, cs.d, ctx), induction_consistency(n, cs.a, cs.b, cs.c, cs.d, ctx)};
  case SweepKind::Thm2:
    return {verify_theorem2(n, cs.a, cs.c, ctx), std::nullopt};
  case SweepKind::Interp:
    return {verify_interpretation(cs.a, cs.c, ctx), std::nullopt};
  }
  return {};
}

} // namespace

SweepSummary sweep(const SweepConfig &config) {
  SweepSummary summary;
  summary.kind = config.kind;
  const std::vector<Case> cases = build_cases(config);
  summary.cases = cases.size();
  if (cases.empty())
    return summary;

  CongruenceContext ctx;
  prepare_context(config, cases, ctx);

  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++)
      results[i] = run_case(config.kind, cases[i], ctx);
  };
  const unsigned jobs = std::clamp<unsigned>(config.jobs, 1, static_cast<unsigned>(cases.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  for (auto &res : results) {
    if (res.report.pass)
      ++summary.passed;
    else
      summary.failures.push_back(res.report);
    if (res.induction) {
      ++summary.induction_cases;
      if (!*res.induction)
        summary.induction_failures.push_back(res.report.params);
    }
  }
  return summary;
}

} // namespace qdl
