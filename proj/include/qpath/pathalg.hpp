#pragma once

#include "qpath/klyachko.hpp"
#include "qpath/lattice.hpp"
#include "qpath/qpoly.hpp"
#include "qpath/qrat.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qpath {

/// Homogeneous element of the path algebra: a linear combination of words
/// with m letters N and n letters E.
class PathElem {
public:
  PathElem(int m, int n) : m_(m), n_(n) {}
  explicit PathElem(const Word& w, const QRat& c = QRat(1));

  int m() const { return m_; }
  int n() const { return n_; }
  const std::map<Word, QRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Throws std::invalid_argument when w has the wrong grade.
  void add(const Word& w, const QRat& c);
  PathElem& operator+=(const PathElem& o);
  PathElem& operator-=(const PathElem& o);
  PathElem& operator*=(const QRat& c);
  friend PathElem operator+(PathElem a, const PathElem& b) { return a += b; }
  friend PathElem operator-(PathElem a, const PathElem& b) { return a -= b; }
  friend PathElem operator*(const QRat& c, PathElem a) { return a *= c; }

  std::string to_string() const;

private:
  int m_;
  int n_;
  std::map<Word, QRat> terms_;
};

/// Bilinear concatenation.
PathElem multiply(const PathElem& x, const PathElem& y);
/// Applies eta to every word.
PathElem apply_eta(const PathElem& x);

/// Coefficients on delta_{k,m,n}, k = 0..min(m,n).
struct StaircaseExpansion {
  int m = 0;
  int n = 0;
  std::vector<QRat> coeffs;
  friend bool operator==(const StaircaseExpansion&, const StaircaseExpansion&) = default;
};

enum class Policy { Leftmost, Rightmost };

/// Staircase normal forms by rewriting critical factors with
///   N^iE = [i] NE N^{i-1} - q[i-1] EN N^{i-1},
///   NE^i = [i] E^{i-1} NE - q[i-1] E^{i-1} EN.
/// Results are memoized per word; an engine is not thread safe.
class StaircaseEngine {
public:
  explicit StaircaseEngine(Policy policy = Policy::Leftmost) : policy_(policy) {}

  Policy policy() const { return policy_; }
  /// Integer-polynomial coefficients of w on delta_0..delta_min(m,n).
  const std::vector<QPoly>& expand(const Word& w);
  StaircaseExpansion expand(const PathElem& x);

  /// Expansion of w on the top-left staircases reverse(delta_k) using the
  /// reversed rules
  ///   E^iN = q^{1-i}[i] EN E^{i-1} - q^{1-i}[i-1] NE E^{i-1},
  ///   EN^i = q^{1-i}[i] N^{i-1} EN - q^{1-i}[i-1] N^{i-1} NE.
  const std::vector<QPoly>& expand_reverse(const Word& w);

  /// q-integer indices picked up by always taking the [i] branch; their
  /// product is the coefficient of delta_{m_w}.
  std::vector<int> vertical_chain(const Word& w) const;

private:
  CriticalFactor pick(const std::vector<CriticalFactor>& fs) const;

  Policy policy_;
  std::unordered_map<std::string, std::vector<QPoly>> cache_;
  std::unordered_map<std::string, std::vector<QPoly>> reverse_cache_;
};

/// Process-wide engine used by the convenience functions below (leftmost policy).
StaircaseEngine& default_engine();

StaircaseExpansion expand_staircase(const PathElem& x);

/// m_w and c_{w,k} = (-1)^{m_w-k} [delta_k] w.
struct SignedCoeffs {
  int m_w = 0;
  std::vector<QPoly> c;
};
/// Throws std::logic_error when some c_{w,k} is not in Z>=0[q] or the
/// support is not exactly 0..m_w (just m_w, with value 1, for staircase words).
SignedCoeffs signed_coeffs(const Word& w);
/// Same check, reporting instead of throwing.
bool signed_coeffs_ok(const Word& w, const std::vector<QPoly>& coeffs, std::string* why = nullptr);

/// Coefficients on rectangular_word(k, m, n), k = 0..min(m,n), from q-hit numbers.
std::vector<QRat> expand_rectangular(const Word& w);
/// Same coefficients by solving against staircase expansions of the rectangular basis.
std::vector<QRat> expand_rectangular_solve(const Word& w);

/// Coefficients on zigzag_word(r, m, n), r = 0..n, from the product of the
/// wt_{b_i}. Requires m >= n; also checks the subset-sum form and global signs
/// and throws std::logic_error on disagreement.
std::vector<QRat> expand_zigzag(const Word& w);
/// Any grade: transposes through eta when m < n.
std::vector<QRat> expand_zigzag_any(const Word& w);
/// sum over r-subsets S of wt_S, r = 0..n.
std::vector<QPoly> zigzag_closed_form(const Word& w);

/// (t-coefficient, s-coefficient) of wt_i.
std::pair<QPoly, QPoly> wt(int i);

/// Re-expands coefficients on a basis family in the staircase basis.
StaircaseExpansion combine(int m, int n, const std::vector<QRat>& coeffs, Word (*basis)(int, int, int));

bool equal(const PathElem& x, const PathElem& y);

/// u(lambda(w)) for a square word; rectangular words with m > n get E^{m-n}
/// appended first. Throws for m < n.
KlyMonomial psi(const Word& w);

/// Inverse of a square matrix over Q(q). Throws std::domain_error when singular.
std::vector<std::vector<QRat>> invert(std::vector<std::vector<QRat>> a);

} // namespace qpath
