#pragma once

#include "qpath/qpoly.hpp"

#include <cstddef>
#include <vector>

namespace qpath {

/// [j]_q = 1 + q + ... + q^{j-1}; [0]_q = 0.
QPoly qint(int j);
/// Extension of [j]_q = (1 - q^j)/(1 - q) to all integers: [-j]_q = -q^{-j}[j]_q.
QPoly qint_signed(int j);
/// [1]_q [2]_q ... [m]_q.
QPoly qfact(int m);
/// [m]_q [m-1]_q ... [m-k+1]_q, the q-analogue of the falling factorial.
QPoly qfalling(int m, int k);

/// Power series in an auxiliary variable t with QPoly coefficients,
/// truncated after t^order. The order is fixed at construction.
class TruncSeries {
public:
  explicit TruncSeries(int order);
  TruncSeries(std::vector<QPoly> coeffs); // NOLINT(google-explicit-constructor): order = size - 1

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const QPoly& operator[](std::size_t i) const { return coeffs_.at(i); }
  QPoly& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<QPoly>& coeffs() const { return coeffs_; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
  std::vector<QPoly> coeffs_;
};

/// Product truncated at the smaller of the two orders.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// (t;q)_{m+1} = prod_{i=1}^{m+1} (1 - t q^{i-1}), truncated at t^order.
TruncSeries qpochhammer(int m, int order);

} // namespace qpath
