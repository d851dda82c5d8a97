#pragma once

#include "qpath/qpoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qpath {

/// Element of Q(q) kept in a canonical reduced form.
///
/// Invariants after construction:
///  - den has lowest exponent 0 and positive leading coefficient,
///  - the primitive parts of num and den are coprime,
///  - the integer contents of num and den are coprime.
/// Powers of q in the denominator migrate to the numerator, so negative
/// exponents only ever appear in num. Equal fractions compare equal as data.
class QRat {
public:
  QRat() : den_(1) {}
  QRat(long c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
  QRat(QPoly p) : num_(std::move(p)), den_(1) {} // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den is zero.
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Denominator is the constant 1.
  bool is_laurent() const { return den_ == QPoly(1); }

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

  QRat inverse() const;
  /// Substitute q -> q^{-1}.
  QRat invert_q() const;
  /// Throws std::domain_error if the denominator vanishes at x.
  mpq_class eval(const mpq_class& x) const;

  /// `(<num>)/(<den>)`, or the bare numerator when den = 1.
  std::string to_string() const;
  static QRat parse(std::string_view text);

private:
  void reduce();

  QPoly num_;
  QPoly den_;
};

/// Common denominator of a family: returns D with D * x[i] a Laurent
/// polynomial for every i, along with those numerators.
struct ClearedDenominators {
  QPoly den;
  std::vector<QPoly> nums;
};
ClearedDenominators clear_denominators(const std::vector<QRat>& xs);

} // namespace qpath
