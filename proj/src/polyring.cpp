#include "qdl/polyring.hpp"

#include <algorithm>
#include <sstream>

namespace qdl {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs)
    coeffs_.emplace_back(c);
  normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const BigInt &c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(std::size_t e, const BigInt &c) {
  std::vector<BigInt> v(e + 1);
  v[e] = c;
  return IntPoly(std::move(v));
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt &IntPoly::leading() const {
  if (coeffs_.empty())
    throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
    coeffs_.pop_back();
}

IntPoly &IntPoly::operator+=(const IntPoly &rhs) { return add_shifted(rhs, 0, 1); }

IntPoly &IntPoly::operator-=(const IntPoly &rhs) { return add_shifted(rhs, 0, -1); }

IntPoly &IntPoly::add_shifted(const IntPoly &rhs, std::size_t shift, const BigInt &c) {
  if (rhs.is_zero() || sgn(c) == 0)
    return *this;
  if (&rhs == this)
    return add_shifted(IntPoly(rhs), shift, c);
  if (coeffs_.size() < rhs.coeffs_.size() + shift)
    coeffs_.resize(rhs.coeffs_.size() + shift);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    if (c == 1)
      coeffs_[i + shift] += rhs.coeffs_[i];
    else
      coeffs_[i + shift] += c * rhs.coeffs_[i];
  }
  normalize();
  return *this;
}

IntPoly IntPoly::shifted(std::size_t shift) const {
  if (is_zero())
    return {};
  std::vector<BigInt> v(shift);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly &IntPoly::operator*=(const IntPoly &rhs) { return *this = *this * rhs; }

IntPoly &IntPoly::operator*=(const BigInt &c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto &x : coeffs_)
    x *= c;
  return *this;
}

IntPoly operator*(const IntPoly &a, const IntPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(IntPoly a) {
  for (auto &x : a.coeffs_)
    x = -x;
  return a;
}

std::string IntPoly::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt &c = coeffs_[i];
    if (sgn(c) == 0)
      continue;
    BigInt mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1)
      os << mag.get_str() << '*';
    os << 'q';
    if (i > 1)
      os << '^' << i;
  }
  return os.str();
}

std::vector<std::string> IntPoly::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto &c : coeffs_)
    out.push_back(c.get_str());
  return out;
}

IntPoly IntPoly::from_decimal_strings(const std::vector<std::string> &coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (const auto &s : coeffs) {
    BigInt c;
    if (s.empty() || c.set_str(s, 10) != 0)
      throw std::invalid_argument("malformed coefficient: '" + s + "'");
    v.push_back(std::move(c));
  }
  return IntPoly(std::move(v));
}

IntPoly poly_add(const IntPoly &a, const IntPoly &b) { return a + b; }

IntPoly poly_mul(const IntPoly &a, const IntPoly &b) { return a * b; }

std::pair<IntPoly, IntPoly> poly_divrem_monic(const IntPoly &a, const IntPoly &m) {
  if (m.is_zero())
    throw ModulusError("division by the zero polynomial");
  if (m.leading() != 1)
    throw ModulusError("divisor is not monic: " + m.to_string());
  if (a.degree() < m.degree())
    return {IntPoly{}, a};

  const std::size_t dm = static_cast<std::size_t>(m.degree());
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quot(rem.size() - dm);
  const auto &mc = m.coeffs();
  for (std::size_t top = rem.size(); top-- > dm;) {
    BigInt lead = rem[top];
    if (sgn(lead) == 0)
      continue;
    std::size_t shift = top - dm;
    quot[shift] = lead;
    for (std::size_t i = 0; i <= dm; ++i)
      mpz_submul(rem[shift + i].get_mpz_t(), lead.get_mpz_t(), mc[i].get_mpz_t());
  }
  rem.resize(dm);
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

BigInt poly_eval(const IntPoly &a, const BigInt &x) {
  BigInt acc = 0;
  const auto &c = a.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

} // namespace qdl
