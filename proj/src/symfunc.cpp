#include "qpath/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace qpath {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition conjugate(const Partition& p) {
  Partition c;
  for (int j = 1; !p.empty() && j <= p.front(); ++j) {
    int cnt = 0;
    for (int x : p) cnt += x >= j ? 1 : 0;
    c.push_back(cnt);
  }
  return c;
}

std::string composition_string(const std::vector<int>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + "]";
}

QPoly QSymF::coeff(const Composition& a) const {
  auto it = terms.find(a);
  return it == terms.end() ? QPoly() : it->second;
}

void QSymF::add(const Composition& a, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(a, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::string QSymF::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : terms) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*M" + composition_string(a);
  }
  return s;
}

bool is_symmetric(const QSymF& x, std::pair<Composition, Composition>* witness) {
  // Every composition must carry the coefficient of its sorted rearrangement,
  // including compositions whose coefficient is zero.
  std::function<bool(Composition&, int)> rec = [&](Composition& cur, int left) {
    if (left == 0) {
      Composition sorted = cur;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      if (x.coeff(cur) != x.coeff(sorted)) {
        if (witness) *witness = {cur, sorted};
        return false;
      }
      return true;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      bool ok = rec(cur, left - p);
      cur.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  Composition cur;
  return rec(cur, x.degree);
}

QSymF rho(const QSymF& x) {
  QSymF r{x.degree, {}};
  for (const auto& [a, c] : x.terms) r.terms.emplace(Composition(a.rbegin(), a.rend()), c);
  return r;
}

QSymF invert_q(const QSymF& x, int shift) {
  QSymF r{x.degree, {}};
  for (const auto& [a, c] : x.terms) r.terms.emplace(a, c.invert_q().shifted(shift));
  return r;
}

QRat SymE::coeff(const Partition& p) const {
  auto it = terms.find(p);
  return it == terms.end() ? QRat() : it->second;
}

void SymE::add(const Partition& p, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(p, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::string SymE::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  // Largest partitions first reads more naturally.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.to_string() + ")*e" + composition_string(it->first);
  }
  return s;
}

SymE shift_plus_11(const SymE& f) {
  SymE r{f.degree + 2, {}};
  for (const auto& [mu, c] : f.terms) {
    Partition p = mu;
    p.resize(std::max<std::size_t>(p.size(), 2), 0);
    p[0] += 1;
    p[1] += 1;
    r.add(p, c);
  }
  return r;
}

mpz_class count_01_matrices(const std::vector<int>& rows, const std::vector<int>& cols) {
  std::map<std::pair<std::size_t, std::vector<int>>, mpz_class> memo;
  // Fill row r choosing `need` columns among those with remaining capacity.
  std::function<mpz_class(std::size_t, std::vector<int>&)> by_row;
  std::function<mpz_class(std::size_t, std::size_t, int, std::vector<int>&)> pick =
      [&](std::size_t r, std::size_t col, int need, std::vector<int>& cap) -> mpz_class {
    if (need == 0) return by_row(r + 1, cap);
    if (col == cap.size() || static_cast<int>(cap.size() - col) < need) return 0;
    mpz_class total = pick(r, col + 1, need, cap);
    if (cap[col] > 0) {
      --cap[col];
      total += pick(r, col + 1, need - 1, cap);
      ++cap[col];
    }
    return total;
  };
  by_row = [&](std::size_t r, std::vector<int>& cap) -> mpz_class {
    if (r == rows.size()) {
      for (int c : cap)
        if (c != 0) return 0;
      return 1;
    }
    auto key = std::make_pair(r, cap);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    mpz_class v = pick(r, 0, rows[r], cap);
    memo.emplace(std::move(key), v);
    return v;
  };
  int rs = 0;
  int cs = 0;
  for (int x : rows) rs += x;
  for (int x : cols) cs += x;
  if (rs != cs) return 0;
  std::vector<int> cap = cols;
  return by_row(0, cap);
}

namespace {

const mpz_class& e_to_m(const Partition& mu, const Partition& lambda) {
  static std::mutex mu_lock;
  static std::map<std::pair<Partition, Partition>, mpz_class> cache;
  std::lock_guard lock(mu_lock);
  auto key = std::make_pair(mu, lambda);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  mpz_class v = count_01_matrices(mu, lambda);
  return cache.emplace(std::move(key), std::move(v)).first->second;
}

} // namespace

SymE to_e_basis(const QSymF& x) {
  std::pair<Composition, Composition> witness;
  if (!is_symmetric(x, &witness))
    throw std::invalid_argument("to_e_basis: not symmetric, M" + composition_string(witness.first) + " and M" +
                                composition_string(witness.second) + " differ");
  const int n = x.degree;
  const std::vector<Partition> parts = partitions(n); // lex decreasing
  std::map<Partition, QRat> rem;
  for (const auto& p : parts) rem[p] = QRat(x.coeff(p));
  SymE out{n, {}};
  // e_{lambda'} = m_lambda + (terms m_nu with nu below lambda in dominance, hence lex).
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const QRat c = rem[parts[i]];
    if (c.is_zero()) continue;
    const Partition mu = conjugate(parts[i]);
    out.add(mu, c);
    for (std::size_t j = i; j < parts.size(); ++j) {
      const mpz_class& k = e_to_m(mu, parts[j]);
      if (k != 0) rem[parts[j]] -= c * QRat(QPoly(k));
    }
  }
  return out;
}

} // namespace qpath
