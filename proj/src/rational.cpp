#include "haarmoments/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace haarmoments {

std::string to_string(const BigInteger& value) { return value.get_str(); }

std::string to_string(const BigRational& value) {
  BigRational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInteger parse_integer(std::string_view s) {
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInteger(digits, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  BigInteger q = parse_integer(den);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  BigRational r(parse_integer(num), q);
  r.canonicalize();
  return r;
}

std::string to_decimal(const BigRational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be nonnegative");
  BigInteger scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  const bool negative = sgn(value) < 0;
  BigInteger num = abs(value.get_num()) * scale;
  const BigInteger& den = value.get_den();
  BigInteger scaled = (2 * num + den) / (2 * den);

  std::string s = scaled.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && scaled != 0) s.insert(0, "-");
  return s;
}

BigInteger factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInteger r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInteger binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInteger rising_factorial(int d, int n) {
  BigInteger r = 1;
  for (int j = 0; j < n; ++j) r *= d + j;
  return r;
}

BigInteger exact_quotient(const BigInteger& numerator, const BigInteger& denominator) {
  BigInteger q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  if (rem != 0) {
    throw std::logic_error("inexact division " + numerator.get_str() + " / " +
                           denominator.get_str());
  }
  return q;
}

}  // namespace haarmoments
