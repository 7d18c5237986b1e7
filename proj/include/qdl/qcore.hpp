#pragma once

#include <vector>

#include "qdl/cyclotomic.hpp"
#include "qdl/polyring.hpp"

namespace qdl {

/**
 * Gaussian binomial coefficients [h choose k]_q, filled row by row with the
 * Pascal rule [h, k] = q^k [h-1, k] + [h-1, k-1].
 *
 * Entries outside 0 <= k <= h are zero. get() grows the table; after
 * populate(max_h) the table may be shared read-only through at().
 */
class QBinomialTable {
public:
  const IntPoly &get(long h, long k);
  const IntPoly &at(long h, long k) const;
  void populate(long max_h);
  long rows() const { return static_cast<long>(rows_.size()); }

private:
  static const IntPoly &zero();
  std::vector<std::vector<IntPoly>> rows_;
};

/// Classical Delannoy numbers D(h, k) from the three-term recurrence.
class DelannoyTable {
public:
  BigInt get(long h, long k);
  BigInt at(long h, long k) const;
  void populate(long max_h, long max_k);

private:
  std::vector<std::vector<BigInt>> grid_;
};

/// [n]_q = 1 + q + ... + q^(n-1)
IntPoly q_integer(unsigned n);

IntPoly q_binomial(long h, long k);

/// (-q; q)_j = (1 + q)(1 + q^2)...(1 + q^j)
IntPoly neg_q_pochhammer(unsigned j);

BigInt binomial(long n, long k);

BigInt delannoy(long h, long k);
/// sum_j C(k, j) C(h + k - j, k)
BigInt delannoy_sum_form(long h, long k);
/// sum_j 2^j C(k, j) C(h, j)
BigInt delannoy_power_form(long h, long k);

/// Coefficients c[h][k], 0 <= h, k <= n, of the power series of 1/(1 - x - y - xy).
std::vector<std::vector<BigInt>> delannoy_series_table(unsigned n);

bool is_prime(unsigned long p);

/// C(ap + b, cp + d) = C(a, c) C(b, d) (mod p). Throws DomainError when p is
/// not prime or b, d fall outside [0, p - 1].
bool lucas_check(unsigned p, unsigned a, unsigned b, unsigned c, unsigned d);

/// D(ap + b, cp + d) = D(a, c) D(b, d) (mod p).
bool delannoy_lucas_check(unsigned p, unsigned a, unsigned b, unsigned c, unsigned d);

/// [an + b, cn + d]_q = C(a, c) [b, d]_q (mod Phi_n(q)).
bool q_lucas_check(unsigned n, unsigned a, unsigned b, unsigned c, unsigned d, QBinomialTable &binoms,
                   CyclotomicTable &cyclo);
bool q_lucas_check(unsigned n, unsigned a, unsigned b, unsigned c, unsigned d);

/// (-q; q)_j == sum_i q^(i(i+1)/2) [j, i]_q, as an exact identity.
bool q_binomial_theorem_check(unsigned j);

} // namespace qdl
