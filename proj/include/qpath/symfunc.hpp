#pragma once

#include "qpath/qpoly.hpp"
#include "qpath/qrat.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qpath {

using Composition = std::vector<int>; // strong: every part >= 1
using Partition = std::vector<int>;   // weakly decreasing, positive parts

/// Partitions of n in lexicographically decreasing order.
std::vector<Partition> partitions(int n);
Partition conjugate(const Partition& p);
std::string composition_string(const std::vector<int>& c);

/// Quasisymmetric function in the monomial basis M_alpha.
struct QSymF {
  int degree = 0;
  std::map<Composition, QPoly> terms; // zero coefficients are not stored

  QPoly coeff(const Composition& a) const;
  void add(const Composition& a, const QPoly& c);
  friend bool operator==(const QSymF&, const QSymF&) = default;
  std::string to_string() const;
};

/// True when M-coefficients agree on compositions with the same sorted parts.
/// On failure the witnessing pair is stored in `witness`.
bool is_symmetric(const QSymF& x, std::pair<Composition, Composition>* witness = nullptr);
/// Reverses every composition.
QSymF rho(const QSymF& x);
/// q^shift * x(q^{-1}).
QSymF invert_q(const QSymF& x, int shift);

/// Symmetric function in the elementary basis.
struct SymE {
  int degree = 0;
  std::map<Partition, QRat> terms;

  QRat coeff(const Partition& p) const;
  void add(const Partition& p, const QRat& c);
  friend bool operator==(const SymE&, const SymE&) = default;
  /// e.g. `(1 + q)*e[2,1] + e[3]`; `0` when empty.
  std::string to_string() const;
};

/// f^{+(1,1)}: e_mu -> e_{mu_1+1, mu_2+1, mu_3, ...}, mu padded with zeros.
SymE shift_plus_11(const SymE& f);

/// Number of 0/1 matrices with row sums `rows` and column sums `cols`; this is
/// the coefficient of m_cols in e_rows.
mpz_class count_01_matrices(const std::vector<int>& rows, const std::vector<int>& cols);

/// Elementary expansion of a symmetric X given in the M basis. Throws
/// std::invalid_argument naming a witnessing composition pair if X is not symmetric.
SymE to_e_basis(const QSymF& x);

} // namespace qpath
