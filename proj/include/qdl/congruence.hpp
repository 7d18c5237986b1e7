#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdl/cyclotomic.hpp"
#include "qdl/polyring.hpp"
#include "qdl/qcore.hpp"
#include "qdl/qdelannoy.hpp"

namespace qdl {

enum class Statement { Thm1Odd, Thm1Even, Thm2Odd, Thm2Even, QLucas, Lucas, DelannoyLucas, Interp };

std::string_view statement_tag(Statement s);

/// One checked instance. `residue` is lhs - rhs reduced by the modulus
/// (Phi_n for polynomial statements, the prime p for integer ones, nothing
/// for the exact identity checked by Interp); pass holds iff it is zero.
struct CongruenceReport {
  Statement statement = Statement::Thm2Odd;
  std::vector<std::pair<std::string, long>> params;
  IntPoly lhs;
  IntPoly rhs;
  IntPoly residue;
  bool pass = false;
};

/**
 * Tables shared by the congruence checks. Populate once with prepare(), then
 * hand a const reference to any number of workers.
 */
class CongruenceContext {
public:
  /// Ensures D_q up to (dq_h, dq_k), q-binomial rows up to binom_rows,
  /// D up to (delannoy_max, delannoy_max) and Phi_1..Phi_max_n. Negative
  /// bounds skip a table.
  void prepare(long dq_h, long dq_k, long binom_rows, long delannoy_max, unsigned max_n);

  const QDelannoyTable &dq() const { return dq_; }
  const QBinomialTable &binoms() const { return binoms_; }
  const CyclotomicTable &cyclo() const { return cyclo_; }
  const DelannoyTable &delannoy() const { return delannoy_; }

private:
  QDelannoyTable dq_;
  QBinomialTable binoms_;
  CyclotomicTable cyclo_;
  DelannoyTable delannoy_;
};

/// D_q(h+n, k+n) against D_q(h+n, k) + D_q(h, k+n) +/- D_q(h, k), the sign
/// being + for odd n and - for even n.
CongruenceReport verify_theorem2(unsigned n, long h, long k, const CongruenceContext &ctx);
CongruenceReport verify_theorem2(unsigned n, long h, long k);

/// D_q(an+b, cn+d) against D(a,c) D_q(b,d) (odd n) or D_q(b,d) (even n).
/// Throws DomainError unless b, d <= n - 1.
CongruenceReport verify_theorem1(unsigned n, long a, long b, long c, long d, const CongruenceContext &ctx);
CongruenceReport verify_theorem1(unsigned n, long a, long b, long c, long d);

/// Re-derives the (a+1, c+1) instance of the split congruence from the
/// three-term congruence at (an+b, cn+d) together with the (a+1,c), (a,c+1),
/// (a,c) instances and the classical Delannoy recurrence.
bool induction_consistency(unsigned n, long a, long b, long c, long d, const CongruenceContext &ctx);
bool induction_consistency(unsigned n, long a, long b, long c, long d);

CongruenceReport verify_q_lucas(unsigned n, long a, long b, long c, long d, const CongruenceContext &ctx);
CongruenceReport verify_lucas(unsigned p, long a, long b, long c, long d);
CongruenceReport verify_delannoy_lucas(unsigned p, long a, long b, long c, long d, const CongruenceContext &ctx);
/// sigma_poly(h, k) == D_q(h, k) exactly.
CongruenceReport verify_interpretation(long h, long k, const CongruenceContext &ctx);

enum class SweepKind { Lucas, DelannoyLucas, QLucas, Thm1, Thm2, Interp };

std::optional<SweepKind> parse_sweep_kind(std::string_view name);
std::string_view sweep_kind_name(SweepKind k);

/// Inclusive upper bounds; a negative bound (or max_n < 1) gives an empty range.
struct SweepConfig {
  SweepKind kind = SweepKind::Thm2;
  long max_n = 0;
  long max_h = -1;
  long max_k = -1;
  long max_a = -1;
  long max_c = -1;
  unsigned jobs = 1;
};

struct SweepSummary {
  SweepKind kind = SweepKind::Thm2;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::vector<CongruenceReport> failures;
  /// Thm1 sweeps also run induction_consistency on every case.
  std::size_t induction_cases = 0;
  std::vector<std::vector<std::pair<std::string, long>>> induction_failures;

  bool ok() const { return failures.empty() && induction_failures.empty(); }
};

/// Runs every case of the grid across `jobs` workers. Results are gathered in
/// lexicographic parameter order, so the summary does not depend on scheduling.
SweepSummary sweep(const SweepConfig &config);

} // namespace qdl
