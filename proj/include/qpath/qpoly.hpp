#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qpath {

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely: coefficient i of `coeffs_` multiplies q^(low_ + i). The
/// first and last stored coefficients are nonzero, so equal polynomials have
/// identical representations; the zero polynomial has no coefficients.
class QPoly {
public:
  QPoly() = default;
  QPoly(long c); // NOLINT(google-explicit-constructor): integers embed as constants
  QPoly(const mpz_class& c); // NOLINT(google-explicit-constructor)

  /// c * q^e
  static QPoly monomial(const mpz_class& c, int e);
  static QPoly q() { return monomial(1, 1); }
  /// Coefficients listed from q^low upward.
  static QPoly from_coeffs(std::vector<mpz_class> coeffs, int low = 0);
  static QPoly from_coeffs(std::initializer_list<long> coeffs, int low = 0);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest and highest exponent; both 0 for the zero polynomial.
  int low() const { return low_; }
  int high() const { return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t num_terms() const;
  mpz_class coeff(int e) const;
  mpz_class leading() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.back(); }
  mpz_class trailing() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.front(); }
  const std::vector<mpz_class>& dense() const { return coeffs_; }

  bool is_constant() const { return coeffs_.size() <= 1 && low_ == 0; }
  /// True when no negative exponent occurs.
  bool is_polynomial() const { return is_zero() || low_ >= 0; }
  /// True when every coefficient is >= 0 and no negative exponent occurs.
  bool is_nonneg_polynomial() const;
  /// True when all coefficients share one sign (zero counts as signed).
  bool is_globally_signed() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const mpz_class& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const mpz_class& c) { return a *= c; }
  friend QPoly operator*(const mpz_class& c, QPoly a) { return a *= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  /// Multiply by q^k.
  QPoly shifted(int k) const;
  /// Substitute q -> q^{-1}.
  QPoly invert_q() const;
  QPoly pow(unsigned k) const;

  /// gcd of the coefficients (nonnegative); 0 for the zero polynomial.
  mpz_class content() const;
  /// Divide every coefficient by `c`, which must divide all of them.
  QPoly divexact(const mpz_class& c) const;

  /// Exact quotient a / b in Z[q, q^-1] if it exists.
  static std::optional<QPoly> exact_div(const QPoly& a, const QPoly& b);

  mpq_class eval(const mpq_class& x) const;

  /// Sparse text form in increasing exponent, e.g. `1 + q - 2*q^2`, `q^-1 + 1`.
  std::string to_string() const;
  static QPoly parse(std::string_view text);

private:
  void normalize();

  int low_ = 0;
  std::vector<mpz_class> coeffs_;
};

/// Primitive gcd of two Laurent polynomials: the result has lowest exponent 0,
/// content 1 and positive leading coefficient. gcd(0, 0) is 0.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

} // namespace qpath
