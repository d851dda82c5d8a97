#include "qpath/klyachko.hpp"

#include "qpath/series.hpp"

#include <stdexcept>

namespace qpath {

int KlyMonomial::degree() const {
  int d = 0;
  for (auto [i, c] : mult) d += c;
  return d;
}

bool KlyMonomial::connected() const {
  if (mult.empty()) return true;
  return mult.rbegin()->first - mult.begin()->first + 1 == static_cast<int>(mult.size());
}

KlyMonomial KlyMonomial::shifted(int by) const {
  KlyMonomial r;
  for (auto [i, c] : mult) r.mult[i + by] = c;
  return r;
}

std::string KlyMonomial::to_string() const {
  if (mult.empty()) return "1";
  std::string s;
  for (auto [i, c] : mult) {
    if (!s.empty()) s += ' ';
    s += "u_" + std::to_string(i);
    if (c != 1) s += "^" + std::to_string(c);
  }
  return s;
}

KlyMonomial u_lambda(const BoxPartition& lambda) {
  KlyMonomial u;
  for (int a : area_sequence(lambda)) ++u.mult[a];
  return u;
}

std::vector<QPoly> remixed_connected(const std::vector<int>& alpha, int m) {
  const int k = static_cast<int>(alpha.size());
  int total = 0;
  for (int a : alpha) {
    if (a < 1) throw std::invalid_argument("remixed_connected: composition parts must be positive");
    total += a;
  }
  if (total != m || k == 0) throw std::invalid_argument("remixed_connected: alpha must be a strong composition of m");
  const int order = m - k;
  TruncSeries lhs(order);
  for (int j = 0; j <= order; ++j) {
    QPoly prod(1);
    for (int i = 1; i <= k; ++i) prod *= qint(j + i).pow(static_cast<unsigned>(alpha[static_cast<std::size_t>(i - 1)]));
    lhs[static_cast<std::size_t>(j)] = std::move(prod);
  }
  return series_mul(lhs, qpochhammer(m, order)).coeffs();
}

IntervalExpansion expand_connected(const KlyMonomial& c) {
  if (!c.connected()) throw std::invalid_argument("expand_connected: support of " + c.to_string() + " is not an interval");
  IntervalExpansion out;
  const int m = c.degree();
  out.degree = m;
  out.coeffs.assign(static_cast<std::size_t>(m) + 1, QRat());
  out.numerators.assign(static_cast<std::size_t>(m) + 1, QPoly());
  if (m == 0) {
    out.coeffs[0] = QRat(1);
    out.numerators[0] = QPoly(1);
    return out;
  }
  const int lo = c.mult.begin()->first;
  const int hi = c.mult.rbegin()->first;
  if (lo > 1 || hi < 0)
    throw std::invalid_argument("expand_connected: support of " + c.to_string() + " must contain 0 or 1");
  std::vector<int> alpha;
  for (auto [i, mult] : c.mult) alpha.push_back(mult);
  const std::vector<QPoly> a = remixed_connected(alpha, m);
  const QPoly mfact = qfact(m);
  // A_j multiplies the interval starting at lo - j, i.e. [1,m]↓(j + 1 - lo).
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto k = static_cast<std::size_t>(static_cast<int>(j) + 1 - lo);
    out.numerators[k] = a[j];
    out.coeffs[k] = QRat(a[j], mfact);
  }
  return out;
}

IntervalExpansion expand_u_lambda(const BoxPartition& lambda) { return expand_connected(u_lambda(lambda)); }

} // namespace qpath
