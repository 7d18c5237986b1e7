#include "qdl/cyclotomic.hpp"

#include <string>

namespace qdl {

namespace {

void require_positive(unsigned n) {
  if (n == 0)
    throw DomainError("cyclotomic index must be positive");
}

// Folding by q^n - 1 first keeps the monic division short for high-degree inputs.
IntPoly fold_mod_qn_minus_1(const IntPoly &p, unsigned n) {
  if (p.degree() < static_cast<long>(n))
    return p;
  std::vector<BigInt> folded(n);
  const auto &c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    folded[i % n] += c[i];
  return IntPoly(std::move(folded));
}

IntPoly reduce_with(const IntPoly &p, unsigned n, const IntPoly &phi) {
  return poly_divrem_monic(fold_mod_qn_minus_1(p, n), phi).second;
}

} // namespace

const IntPoly &CyclotomicTable::get(unsigned n) {
  require_positive(n);
  if (auto it = memo_.find(n); it != memo_.end())
    return it->second;

  IntPoly acc = IntPoly::monomial(n) - IntPoly{1};
  IntPoly divisor{1};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0)
      divisor *= get(d);
  auto [quot, rem] = poly_divrem_monic(acc, divisor);
  if (!rem.is_zero())
    throw std::logic_error("q^n - 1 not divisible by proper cyclotomic factors, n=" + std::to_string(n));
  return memo_.emplace(n, std::move(quot)).first->second;
}

const IntPoly &CyclotomicTable::at(unsigned n) const {
  require_positive(n);
  auto it = memo_.find(n);
  if (it == memo_.end())
    throw std::out_of_range("cyclotomic table not populated for n=" + std::to_string(n));
  return it->second;
}

void CyclotomicTable::populate(unsigned max_n) {
  for (unsigned n = 1; n <= max_n; ++n)
    get(n);
}

IntPoly cyclotomic(unsigned n) {
  CyclotomicTable table;
  return table.get(n);
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    while (n % p == 0)
      n /= p;
    result -= result / p;
  }
  if (n > 1)
    result -= result / n;
  return result;
}

IntPoly reduce_mod(const IntPoly &p, unsigned n, CyclotomicTable &table) {
  return reduce_with(p, n, table.get(n));
}

IntPoly reduce_mod(const IntPoly &p, unsigned n, const CyclotomicTable &table) {
  return reduce_with(p, n, table.at(n));
}

IntPoly reduce_mod(const IntPoly &p, unsigned n) {
  CyclotomicTable table;
  return reduce_mod(p, n, table);
}

bool congruent(const IntPoly &a, const IntPoly &b, unsigned n, CyclotomicTable &table) {
  return reduce_mod(a - b, n, table).is_zero();
}

bool congruent(const IntPoly &a, const IntPoly &b, unsigned n, const CyclotomicTable &table) {
  return reduce_mod(a - b, n, table).is_zero();
}

bool congruent(const IntPoly &a, const IntPoly &b, unsigned n) {
  CyclotomicTable table;
  return congruent(a, b, n, table);
}

IntPoly exponent_residue_factor(unsigned n, unsigned long e, CyclotomicTable &table) {
  require_positive(n);
  return reduce_mod(IntPoly::monomial(e % n), n, table);
}

IntPoly exponent_residue_factor(unsigned n, unsigned long e) {
  CyclotomicTable table;
  return exponent_residue_factor(n, e, table);
}

} // namespace qdl
