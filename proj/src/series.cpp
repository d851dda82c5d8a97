#include "qpath/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpath {

QPoly qint(int j) {
  if (j < 0) throw std::invalid_argument("qint: negative argument");
  return QPoly::from_coeffs(std::vector<mpz_class>(static_cast<std::size_t>(j), mpz_class(1)));
}

QPoly qint_signed(int j) {
  if (j >= 0) return qint(j);
  return -qint(-j).shifted(j);
}

QPoly qfact(int m) {
  if (m < 0) throw std::invalid_argument("qfact: negative argument");
  QPoly r(1);
  for (int i = 2; i <= m; ++i) r *= qint(i);
  return r;
}

QPoly qfalling(int m, int k) {
  if (k < 0 || k > m) throw std::invalid_argument("qfalling: need 0 <= k <= m");
  QPoly r(1);
  for (int i = 0; i < k; ++i) r *= qint(m - i);
  return r;
}

TruncSeries::TruncSeries(int order) {
  if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries::TruncSeries(std::vector<QPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient list");
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  int order = std::min(a.order(), b.order());
  TruncSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

TruncSeries qpochhammer(int m, int order) {
  if (m < 0) throw std::invalid_argument("qpochhammer: negative m");
  TruncSeries acc(order);
  acc[0] = QPoly(1);
  for (int i = 0; i <= m; ++i) {
    TruncSeries factor(order);
    factor[0] = QPoly(1);
    if (order >= 1) factor[1] = -QPoly::monomial(1, i);
    acc = series_mul(acc, factor);
  }
  return acc;
}

} // namespace qpath
