#pragma once

#include <map>
#include <stdexcept>

#include "qdl/polyring.hpp"

namespace qdl {

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/**
 * Memo of cyclotomic polynomials Phi_n(q).
 *
 * Phi_n is obtained as (q^n - 1) divided exactly by the product of Phi_d over
 * the proper divisors d of n. get() fills the memo on demand; once populate()
 * has covered a range, the table can be shared read-only through at().
 */
class CyclotomicTable {
public:
  const IntPoly &get(unsigned n);
  const IntPoly &at(unsigned n) const;
  void populate(unsigned max_n);
  bool contains(unsigned n) const { return memo_.count(n) != 0; }

private:
  std::map<unsigned, IntPoly> memo_;
};

IntPoly cyclotomic(unsigned n);

/// Euler's totient by trial division.
unsigned euler_phi(unsigned n);

/// Remainder of p modulo Phi_n(q).
IntPoly reduce_mod(const IntPoly &p, unsigned n, CyclotomicTable &table);
IntPoly reduce_mod(const IntPoly &p, unsigned n, const CyclotomicTable &table);
IntPoly reduce_mod(const IntPoly &p, unsigned n);

bool congruent(const IntPoly &a, const IntPoly &b, unsigned n, CyclotomicTable &table);
bool congruent(const IntPoly &a, const IntPoly &b, unsigned n, const CyclotomicTable &table);
bool congruent(const IntPoly &a, const IntPoly &b, unsigned n);

/// q^e reduced modulo Phi_n(q); uses q^n = 1 to fold e into [0, n).
IntPoly exponent_residue_factor(unsigned n, unsigned long e, CyclotomicTable &table);
IntPoly exponent_residue_factor(unsigned n, unsigned long e);

} // namespace qdl
