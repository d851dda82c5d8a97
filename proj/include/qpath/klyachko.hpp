#pragma once

#include "qpath/lattice.hpp"
#include "qpath/qpoly.hpp"
#include "qpath/qrat.hpp"

#include <map>
#include <string>
#include <vector>

namespace qpath {

/// Monomial u^c = prod_i u_i^{c_i} in the q-Klyachko algebra.
struct KlyMonomial {
  std::map<int, int> mult; // index -> multiplicity >= 1

  int degree() const;
  /// True when the support is an integer interval.
  bool connected() const;
  KlyMonomial shifted(int by) const;
  friend bool operator==(const KlyMonomial&, const KlyMonomial&) = default;
  /// e.g. `u_-1 u_0^2 u_1^3`; `1` for the empty monomial.
  std::string to_string() const;
};

/// u(lambda) = prod_i u_{a_i}, a the area sequence of lambda (square box).
KlyMonomial u_lambda(const BoxPartition& lambda);

/// Coefficients A_{0^i alpha 0^{m-k-i}}, i = 0..m-k, for a strong composition
/// alpha of m with k parts.
std::vector<QPoly> remixed_connected(const std::vector<int>& alpha, int m);

/// Coefficients of u^c on the interval basis u_{[1,m]↓k}, k = 0..m, where
/// [1,m]↓k = {1-k, ..., m-k} and m = deg c. Requires connected support inside
/// [1-m, m]. Also returns the raw numerators A (before division by [m]_q!).
struct IntervalExpansion {
  int degree = 0;
  std::vector<QRat> coeffs;    // index k
  std::vector<QPoly> numerators; // coeffs[k] * [m]_q!
};
IntervalExpansion expand_connected(const KlyMonomial& c);
IntervalExpansion expand_u_lambda(const BoxPartition& lambda);

} // namespace qpath
