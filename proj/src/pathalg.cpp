#include "qpath/pathalg.hpp"

#include "qpath/qhit.hpp"
#include "qpath/series.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qpath {

PathElem::PathElem(const Word& w, const QRat& c) : m_(w.m()), n_(w.n()) { add(w, c); }

void PathElem::add(const Word& w, const QRat& c) {
  if (w.m() != m_ || w.n() != n_) throw std::invalid_argument("PathElem: word " + w.to_string() + " has the wrong grade");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PathElem& PathElem::operator+=(const PathElem& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

PathElem& PathElem::operator-=(const PathElem& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

PathElem& PathElem::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

std::string PathElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*" + w.to_string();
  }
  return s;
}

PathElem multiply(const PathElem& x, const PathElem& y) {
  PathElem out(x.m() + y.m(), x.n() + y.n());
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) out.add(u + v, a * b);
  return out;
}

PathElem apply_eta(const PathElem& x) {
  PathElem out(x.n(), x.m());
  for (const auto& [w, c] : x.terms()) out.add(eta(w), c);
  return out;
}

namespace {

std::string rep(char c, int times) { return std::string(static_cast<std::size_t>(times), c); }

// The [i] and -q[i-1] successors of w at a critical factor.
std::pair<Word, Word> split(const Word& w, const CriticalFactor& f) {
  const std::string& s = w.str();
  const std::string pre = s.substr(0, f.start);
  const std::string post = s.substr(f.start + static_cast<std::size_t>(f.i) + 1);
  if (f.kind == FactorKind::NiE)
    return {Word(pre + "NE" + rep('N', f.i - 1) + post), Word(pre + "EN" + rep('N', f.i - 1) + post)};
  return {Word(pre + rep('E', f.i - 1) + "NE" + post), Word(pre + rep('E', f.i - 1) + "EN" + post)};
}

void axpy(std::vector<QPoly>& acc, const QPoly& c, const std::vector<QPoly>& x) {
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (!x[k].is_zero()) acc[k] += c * x[k];
}

} // namespace

CriticalFactor StaircaseEngine::pick(const std::vector<CriticalFactor>& fs) const {
  return policy_ == Policy::Leftmost ? fs.front() : fs.back();
}

const std::vector<QPoly>& StaircaseEngine::expand(const Word& w) {
  if (auto it = cache_.find(w.str()); it != cache_.end()) return it->second;
  std::vector<QPoly> out(static_cast<std::size_t>(std::min(w.m(), w.n())) + 1);
  const auto fs = critical_factors(w);
  if (fs.empty()) {
    out[static_cast<std::size_t>(max_staircase_index(w))] = QPoly(1);
  } else {
    const CriticalFactor f = pick(fs);
    auto [v, h] = split(w, f);
    axpy(out, qint(f.i), expand(v));
    axpy(out, -qint(f.i - 1).shifted(1), expand(h));
  }
  return cache_.emplace(w.str(), std::move(out)).first->second;
}

StaircaseExpansion StaircaseEngine::expand(const PathElem& x) {
  StaircaseExpansion out{x.m(), x.n(), std::vector<QRat>(static_cast<std::size_t>(std::min(x.m(), x.n())) + 1)};
  for (const auto& [w, c] : x.terms()) {
    const auto& e = expand(w);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (!e[k].is_zero()) out.coeffs[k] += c * QRat(e[k]);
  }
  return out;
}

const std::vector<QPoly>& StaircaseEngine::expand_reverse(const Word& w) {
  if (auto it = reverse_cache_.find(w.str()); it != reverse_cache_.end()) return it->second;
  std::vector<QPoly> out(static_cast<std::size_t>(std::min(w.m(), w.n())) + 1);
  const Word r = reversed(w);
  const auto fs = critical_factors(r);
  if (fs.empty()) {
    out[static_cast<std::size_t>(max_staircase_index(r))] = QPoly(1);
  } else {
    const CriticalFactor f = pick(fs);
    const std::string& s = w.str();
    const std::size_t start = s.size() - f.start - static_cast<std::size_t>(f.i) - 1;
    const std::string pre = s.substr(0, start);
    const std::string post = s.substr(start + static_cast<std::size_t>(f.i) + 1);
    const QPoly cv = qint(f.i).shifted(1 - f.i);
    const QPoly ch = -qint(f.i - 1).shifted(1 - f.i);
    Word v;
    Word h;
    if (f.kind == FactorKind::NiE) { // E N^i in w
      v = Word(pre + rep('N', f.i - 1) + "EN" + post);
      h = Word(pre + rep('N', f.i - 1) + "NE" + post);
    } else { // E^i N in w
      v = Word(pre + "EN" + rep('E', f.i - 1) + post);
      h = Word(pre + "NE" + rep('E', f.i - 1) + post);
    }
    axpy(out, cv, expand_reverse(v));
    axpy(out, ch, expand_reverse(h));
  }
  return reverse_cache_.emplace(w.str(), std::move(out)).first->second;
}

std::vector<int> StaircaseEngine::vertical_chain(const Word& w) const {
  std::vector<int> chain;
  Word cur = w;
  for (auto fs = critical_factors(cur); !fs.empty(); fs = critical_factors(cur)) {
    const CriticalFactor f = pick(fs);
    chain.push_back(f.i);
    cur = split(cur, f).first;
  }
  return chain;
}

StaircaseEngine& default_engine() {
  static StaircaseEngine engine(Policy::Leftmost);
  return engine;
}

StaircaseExpansion expand_staircase(const PathElem& x) { return default_engine().expand(x); }

bool signed_coeffs_ok(const Word& w, const std::vector<QPoly>& coeffs, std::string* why) {
  const int mw = max_staircase_index(w);
  // A staircase word is its own expansion, so only k = m_w survives.
  const bool basis = is_staircase(w);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const int kk = static_cast<int>(k);
    const QPoly c = (mw - kk) % 2 == 0 ? coeffs[k] : -coeffs[k];
    std::string problem;
    if (basis) {
      if (c != QPoly(kk == mw ? 1 : 0)) problem = "is not the basis indicator: " + c.to_string();
    } else if (kk <= mw && c.is_zero()) problem = "vanishes";
    else if (kk <= mw && !c.is_nonneg_polynomial()) problem = "is not in Z>=0[q]: " + c.to_string();
    else if (kk > mw && !c.is_zero()) problem = "is nonzero beyond m_w: " + c.to_string();
    if (!problem.empty()) {
      if (why) *why = "c_{" + w.to_string() + "," + std::to_string(k) + "} " + problem;
      return false;
    }
  }
  return true;
}

SignedCoeffs signed_coeffs(const Word& w) {
  const auto& e = default_engine().expand(w);
  std::string why;
  if (!signed_coeffs_ok(w, e, &why)) throw std::logic_error(why);
  SignedCoeffs out{max_staircase_index(w), {}};
  for (std::size_t k = 0; k < e.size(); ++k) out.c.push_back((out.m_w - static_cast<int>(k)) % 2 == 0 ? e[k] : -e[k]);
  return out;
}

std::vector<QRat> expand_rectangular(const Word& w) {
  const int m = w.m();
  const int n = w.n();
  if (m < n) return expand_rectangular(eta(w));
  const std::vector<QPoly> h = qhit_rect(word_to_partition(w));
  const QPoly d = qfalling(m, n);
  std::vector<QRat> out;
  out.reserve(h.size());
  for (const auto& hk : h) out.emplace_back(hk, d);
  return out;
}

std::vector<std::vector<QRat>> invert(std::vector<std::vector<QRat>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<QRat>> inv(n, std::vector<QRat>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = QRat(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("invert: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const QRat p = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= p;
      inv[col][j] *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const QRat f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
        if (!inv[col][j].is_zero()) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

namespace {

// Inverse of the matrix whose row k is the staircase expansion of rectangular_word(k, m, n).
const std::vector<std::vector<QRat>>& rectangular_inverse(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<std::vector<QRat>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({m, n});
  if (it != cache.end()) return it->second;
  const std::size_t d = static_cast<std::size_t>(std::min(m, n)) + 1;
  std::vector<std::vector<QRat>> b(d, std::vector<QRat>(d));
  for (std::size_t k = 0; k < d; ++k) {
    const auto& e = default_engine().expand(rectangular_word(static_cast<int>(k), m, n));
    for (std::size_t j = 0; j < d; ++j) b[k][j] = QRat(e[j]);
  }
  return cache.emplace(std::make_pair(m, n), invert(std::move(b))).first->second;
}

} // namespace

std::vector<QRat> expand_rectangular_solve(const Word& w) {
  const auto& inv = rectangular_inverse(w.m(), w.n());
  const auto& s = default_engine().expand(w);
  std::vector<QRat> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (!s[j].is_zero() && !inv[j][k].is_zero()) out[k] += QRat(s[j]) * inv[j][k];
  return out;
}

std::pair<QPoly, QPoly> wt(int i) {
  if (i >= 1) return {qint(i), -qint(i - 1).shifted(1)};
  return {-qint(-i).shifted(i), qint(1 - i).shifted(i)};
}

std::vector<QPoly> zigzag_closed_form(const Word& w) {
  const std::vector<int> b = b_sequence(word_to_partition(w));
  const std::size_t n = b.size();
  std::vector<std::pair<QPoly, QPoly>> factors;
  for (int bi : b) factors.push_back(wt(bi));
  std::vector<QPoly> out(n + 1);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    QPoly term(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= (mask >> i) & 1UL ? factors[i].second : factors[i].first;
    out[static_cast<std::size_t>(__builtin_popcountl(mask))] += term;
  }
  return out;
}

std::vector<QRat> expand_zigzag(const Word& w) {
  if (w.m() < w.n()) throw std::invalid_argument("expand_zigzag: requires m >= n");
  const std::vector<int> b = b_sequence(word_to_partition(w));
  std::vector<QPoly> prod{QPoly(1)};
  for (int bi : b) {
    auto [tc, sc] = wt(bi);
    std::vector<QPoly> next(prod.size() + 1);
    for (std::size_t r = 0; r < prod.size(); ++r) {
      next[r] += prod[r] * tc;
      next[r + 1] += prod[r] * sc;
    }
    prod = std::move(next);
  }
  if (prod != zigzag_closed_form(w)) throw std::logic_error("expand_zigzag: subset sum disagrees with product for " + w.to_string());
  std::vector<QRat> out;
  for (const auto& c : prod) {
    if (!c.is_globally_signed()) throw std::logic_error("expand_zigzag: coefficient " + c.to_string() + " is not globally signed");
    out.emplace_back(c);
  }
  return out;
}

std::vector<QRat> expand_zigzag_any(const Word& w) { return w.m() >= w.n() ? expand_zigzag(w) : expand_zigzag(eta(w)); }

StaircaseExpansion combine(int m, int n, const std::vector<QRat>& coeffs, Word (*basis)(int, int, int)) {
  PathElem x(m, n);
  for (std::size_t k = 0; k < coeffs.size(); ++k) x.add(basis(static_cast<int>(k), m, n), coeffs[k]);
  return expand_staircase(x);
}

bool equal(const PathElem& x, const PathElem& y) {
  if (x.m() != y.m() || x.n() != y.n()) return false;
  return expand_staircase(x) == expand_staircase(y);
}

KlyMonomial psi(const Word& w) {
  if (w.m() < w.n()) throw std::invalid_argument("psi: requires m >= n");
  return u_lambda(word_to_partition(w + repeat("E", w.m() - w.n())));
}

} // namespace qpath
