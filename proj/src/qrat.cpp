#include "qpath/qrat.hpp"

#include <stdexcept>

namespace qpath {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
  reduce();
}

void QRat::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  // Anchor the denominator at exponent 0.
  int shift = den_.low();
  den_ = den_.shifted(-shift);
  num_ = num_.shifted(-shift);

  if (den_.high() > 0) {
    QPoly g = poly_gcd(num_, den_);
    if (g.high() > 0) {
      num_ = *QPoly::exact_div(num_, g);
      den_ = *QPoly::exact_div(den_, g);
    }
  }
  mpz_class cn = num_.content();
  mpz_class cd = den_.content();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (g > 1) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QRat();
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat QRat::inverse() const {
  if (is_zero()) throw std::domain_error("QRat: division by zero");
  return QRat(den_, num_);
}

QRat QRat::invert_q() const { return QRat(num_.invert_q(), den_.invert_q()); }

mpq_class QRat::eval(const mpq_class& x) const {
  mpq_class d = den_.eval(x);
  if (d == 0) throw std::domain_error("QRat::eval: denominator vanishes at q = " + x.get_str());
  mpq_class r = num_.eval(x) / d;
  r.canonicalize();
  return r;
}

std::string QRat::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRat QRat::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    auto close = text.find(')');
    auto slash = text.find('/', close);
    if (close == std::string_view::npos || slash == std::string_view::npos)
      throw std::invalid_argument("cannot parse rational function '" + std::string(text) + "'");
    std::string_view num = text.substr(1, close - 1);
    std::string_view rest = trim(text.substr(slash + 1));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
      throw std::invalid_argument("cannot parse rational function '" + std::string(text) + "'");
    return QRat(QPoly::parse(num), QPoly::parse(rest.substr(1, rest.size() - 2)));
  }
  return QRat(QPoly::parse(text));
}

ClearedDenominators clear_denominators(const std::vector<QRat>& xs) {
  // Least common multiple of the denominators, built pairwise.
  QPoly lcm(1);
  for (const auto& x : xs) {
    if (x.is_zero() || x.den() == lcm) continue;
    QPoly g = poly_gcd(lcm, x.den());
    lcm = *QPoly::exact_div(lcm * x.den(), g);
    // poly_gcd drops integer content, so lcm may carry extra integer factors;
    // that is harmless for clearing.
  }
  ClearedDenominators out{lcm, {}};
  out.nums.reserve(xs.size());
  for (const auto& x : xs) {
    if (x.is_zero()) {
      out.nums.emplace_back();
      continue;
    }
    auto q = QPoly::exact_div(lcm * x.num(), x.den());
    if (!q) throw std::logic_error("clear_denominators: lcm not divisible");
    out.nums.push_back(std::move(*q));
  }
  return out;
}

} // namespace qpath
