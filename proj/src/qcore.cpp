#include "qdl/qcore.hpp"

#include <algorithm>
#include <string>

namespace qdl {

const IntPoly &QBinomialTable::zero() {
  static const IntPoly z;
  return z;
}

void QBinomialTable::populate(long max_h) {
  for (long h = rows(); h <= max_h; ++h) {
    std::vector<IntPoly> row(static_cast<std::size_t>(h + 1));
    row[0] = IntPoly{1};
    for (long k = 1; k <= h; ++k) {
      const auto &prev = rows_[static_cast<std::size_t>(h - 1)];
      IntPoly entry = prev[static_cast<std::size_t>(k - 1)];
      if (k <= h - 1)
        entry.add_shifted(prev[static_cast<std::size_t>(k)], static_cast<std::size_t>(k));
      row[static_cast<std::size_t>(k)] = std::move(entry);
    }
    rows_.push_back(std::move(row));
  }
}

const IntPoly &QBinomialTable::get(long h, long k) {
  if (h >= 0)
    populate(h);
  return at(h, k);
}

const IntPoly &QBinomialTable::at(long h, long k) const {
  if (h < 0)
    throw DomainError("q-binomial with negative top argument");
  if (k < 0 || k > h)
    return zero();
  if (h >= rows())
    throw std::out_of_range("q-binomial table not populated for h=" + std::to_string(h));
  return rows_[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
}

void DelannoyTable::populate(long max_h, long max_k) {
  long have_h = static_cast<long>(grid_.size()) - 1;
  long have_k = grid_.empty() ? -1 : static_cast<long>(grid_[0].size()) - 1;
  if (max_h <= have_h && max_k <= have_k)
    return;
  max_h = std::max(max_h, have_h);
  max_k = std::max(max_k, have_k);
  std::vector<std::vector<BigInt>> g(static_cast<std::size_t>(max_h + 1),
                                     std::vector<BigInt>(static_cast<std::size_t>(max_k + 1)));
  for (long h = 0; h <= max_h; ++h)
    for (long k = 0; k <= max_k; ++k) {
      auto &cell = g[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
      if (h == 0 || k == 0) {
        cell = 1;
        continue;
      }
      cell = g[h][k - 1] + g[h - 1][k] + g[h - 1][k - 1];
    }
  grid_ = std::move(g);
}

BigInt DelannoyTable::get(long h, long k) {
  if (h < 0 || k < 0)
    return 0;
  populate(h, k);
  return at(h, k);
}

BigInt DelannoyTable::at(long h, long k) const {
  if (h < 0 || k < 0)
    return 0;
  if (grid_.empty() || h >= static_cast<long>(grid_.size()) || k >= static_cast<long>(grid_[0].size()))
    throw std::out_of_range("Delannoy table not populated");
  return grid_[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
}

IntPoly q_integer(unsigned n) { return IntPoly(std::vector<BigInt>(n, BigInt(1))); }

IntPoly q_binomial(long h, long k) {
  QBinomialTable table;
  return table.get(h, k);
}

IntPoly neg_q_pochhammer(unsigned j) {
  IntPoly acc{1};
  for (unsigned i = 1; i <= j; ++i)
    acc += acc.shifted(i);
  return acc;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt delannoy(long h, long k) {
  DelannoyTable table;
  return table.get(h, k);
}

BigInt delannoy_sum_form(long h, long k) {
  if (h < 0 || k < 0)
    return 0;
  BigInt acc = 0;
  for (long j = 0; j <= h; ++j)
    acc += binomial(k, j) * binomial(h + k - j, k);
  return acc;
}

BigInt delannoy_power_form(long h, long k) {
  if (h < 0 || k < 0)
    return 0;
  BigInt acc = 0;
  BigInt pow2 = 1;
  for (long j = 0; j <= h; ++j, pow2 *= 2)
    acc += pow2 * binomial(k, j) * binomial(h, j);
  return acc;
}

std::vector<std::vector<BigInt>> delannoy_series_table(unsigned n) {
  std::vector<std::vector<BigInt>> c(n + 1, std::vector<BigInt>(n + 1));
  auto at = [&](long h, long k) -> BigInt { return (h < 0 || k < 0) ? BigInt(0) : c[h][k]; };
  for (long h = 0; h <= static_cast<long>(n); ++h)
    for (long k = 0; k <= static_cast<long>(n); ++k)
      c[h][k] = (h == 0 && k == 0) ? BigInt(1) : at(h - 1, k) + at(h, k - 1) + at(h - 1, k - 1);
  return c;
}

bool is_prime(unsigned long p) {
  if (p < 2)
    return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

namespace {

void require_lucas_args(unsigned p, unsigned b, unsigned d) {
  if (!is_prime(p))
    throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (b >= p || d >= p)
    throw DomainError("remainder digits must lie in [0, p - 1]");
}

bool congruent_mod(const BigInt &x, const BigInt &y, unsigned p) {
  BigInt diff = x - y;
  return mpz_divisible_ui_p(diff.get_mpz_t(), p) != 0;
}

} // namespace

bool lucas_check(unsigned p, unsigned a, unsigned b, unsigned c, unsigned d) {
  require_lucas_args(p, b, d);
  long top = static_cast<long>(a) * p + b;
  long bottom = static_cast<long>(c) * p + d;
  return congruent_mod(binomial(top, bottom), binomial(a, c) * binomial(b, d), p);
}

bool delannoy_lucas_check(unsigned p, unsigned a, unsigned b, unsigned c, unsigned d) {
  require_lucas_args(p, b, d);
  DelannoyTable table;
  long h = static_cast<long>(a) * p + b;
  long k = static_cast<long>(c) * p + d;
  return congruent_mod(table.get(h, k), table.get(a, c) * table.get(b, d), p);
}

bool q_lucas_check(unsigned n, unsigned a, unsigned b, unsigned c, unsigned d, QBinomialTable &binoms,
                   CyclotomicTable &cyclo) {
  if (n == 0 || b >= n || d >= n)
    throw DomainError("q-Lucas digits must lie in [0, n - 1]");
  IntPoly lhs = binoms.get(static_cast<long>(a) * n + b, static_cast<long>(c) * n + d);
  IntPoly rhs = binomial(a, c) * binoms.get(b, d);
  return congruent(lhs, rhs, n, cyclo);
}

bool q_lucas_check(unsigned n, unsigned a, unsigned b, unsigned c, unsigned d) {
  QBinomialTable binoms;
  CyclotomicTable cyclo;
  return q_lucas_check(n, a, b, c, d, binoms, cyclo);
}

bool q_binomial_theorem_check(unsigned j) {
  QBinomialTable binoms;
  IntPoly rhs;
  for (unsigned i = 0; i <= j; ++i)
    rhs.add_shifted(binoms.get(j, i), static_cast<std::size_t>(i) * (i + 1) / 2);
  return rhs == neg_q_pochhammer(j);
}

} // namespace qdl
