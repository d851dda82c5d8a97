#include "qpath/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qpath {

QPoly::QPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const mpz_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly QPoly::monomial(const mpz_class& c, int e) {
  QPoly p;
  if (c != 0) {
    p.coeffs_.push_back(c);
    p.low_ = e;
  }
  return p;
}

QPoly QPoly::from_coeffs(std::vector<mpz_class> coeffs, int low) {
  QPoly p;
  p.coeffs_ = std::move(coeffs);
  p.low_ = low;
  p.normalize();
  return p;
}

QPoly QPoly::from_coeffs(std::initializer_list<long> coeffs, int low) {
  std::vector<mpz_class> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return from_coeffs(std::move(v), low);
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

std::size_t QPoly::num_terms() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; }));
}

mpz_class QPoly::coeff(int e) const {
  if (coeffs_.empty() || e < low_ || e > high()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

bool QPoly::is_nonneg_polynomial() const {
  if (!is_polynomial()) return false;
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c >= 0; });
}

bool QPoly::is_globally_signed() const {
  bool pos = false;
  bool neg = false;
  for (const auto& c : coeffs_) {
    pos = pos || c > 0;
    neg = neg || c < 0;
  }
  return !(pos && neg);
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_ || hi > high()) {
    std::vector<mpz_class> grown(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      grown[static_cast<std::size_t>(low_ - lo) + i] = std::move(coeffs_[i]);
    coeffs_ = std::move(grown);
    low_ = lo;
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return QPoly::from_coeffs(std::move(out), a.low_ + b.low_);
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly QPoly::shifted(int k) const {
  QPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

QPoly QPoly::invert_q() const {
  if (is_zero()) return {};
  std::vector<mpz_class> rev(coeffs_.rbegin(), coeffs_.rend());
  return from_coeffs(std::move(rev), -high());
}

QPoly QPoly::pow(unsigned k) const {
  QPoly result(1);
  QPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

mpz_class QPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QPoly QPoly::divexact(const mpz_class& c) const {
  if (c == 0) throw std::domain_error("QPoly::divexact: division by zero");
  QPoly r = *this;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

std::optional<QPoly> QPoly::exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("QPoly::exact_div: division by zero");
  if (a.is_zero()) return QPoly{};
  // Long division on the shifted dense arrays, from the top.
  std::vector<mpz_class> rem = a.coeffs_;
  const auto& d = b.coeffs_;
  if (rem.size() < d.size()) return std::nullopt;
  std::vector<mpz_class> quot(rem.size() - d.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) return std::nullopt;
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
    quot[k] = f;
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return from_coeffs(std::move(quot), a.low_ - b.low_);
}

mpq_class QPoly::eval(const mpq_class& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (low_ < 0) throw std::domain_error("QPoly::eval: negative power of q at q = 0");
    return low_ == 0 ? mpq_class(coeffs_.front()) : mpq_class(0);
  }
  // Horner on the dense part, then the q^low factor.
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
  mpq_class scale = 1;
  mpq_class base = low_ >= 0 ? x : mpq_class(1 / x);
  for (int i = 0; i < std::abs(low_); ++i) scale *= base;
  acc *= scale;
  acc.canonicalize();
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    int e = low_ + static_cast<int>(i);
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'q';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  QPoly run() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    QPoly acc;
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += term() * mpz_class(sign);
      first = false;
    }
    return acc;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  QPoly term() {
    mpz_class c = 1;
    bool have_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      c = integer();
      have_coeff = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
      } else {
        return QPoly(c);
      }
    }
    if (pos_ >= s_.size() || s_[pos_] != 'q') {
      if (have_coeff) fail("expected 'q' after '*'");
      fail("expected a term");
    }
    ++pos_;
    int e = 1;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      int sign = 1;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        sign = -1;
        ++pos_;
      }
      e = sign * static_cast<int>(integer().get_si());
    }
    return QPoly::monomial(c, e);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// Pseudo-remainder of a by b, both with low exponent 0.
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpz_class lead_a = a.back();
    const mpz_class& lead_b = b.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lead_b;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= lead_a * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::vector<mpz_class> primitive(std::vector<mpz_class> v) {
  mpz_class g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

} // namespace

QPoly QPoly::parse(std::string_view text) { return PolyParser(text).run(); }

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  // q is a unit in the Laurent ring, so work with the q-free parts.
  std::vector<mpz_class> x = primitive(a.dense());
  std::vector<mpz_class> y = primitive(b.dense());
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<mpz_class> r = primitive(pseudo_rem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty() && x.back() < 0) {
    for (auto& c : x) c = -c;
  }
  return QPoly::from_coeffs(std::move(x), 0);
}

} // namespace qpath
