#include "qpath/qhit.hpp"

#include "qpath/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpath {

std::vector<QPoly> qhit_square_gf(const BoxPartition& lambda) {
  const int m = lambda.rows();
  const std::vector<int> a = area_sequence(lambda);
  TruncSeries lhs(m);
  for (int k = 0; k <= m; ++k) {
    QPoly prod(1);
    for (int ai : a) {
      prod *= qint_signed(ai + k);
      if (prod.is_zero()) break;
    }
    lhs[static_cast<std::size_t>(k)] = std::move(prod);
  }
  return series_mul(lhs, qpochhammer(m, m)).coeffs();
}

std::vector<QPoly> qhit_rect(const BoxPartition& lambda) {
  const int m = lambda.rows();
  const int n = lambda.width;
  if (m < n) throw std::invalid_argument("qhit_rect: requires m >= n");
  std::vector<QPoly> square = qhit_square_gf(lambda.padded(m, m));
  const QPoly f = qfact(m - n);
  std::vector<QPoly> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= m; ++k) {
    const QPoly& h = square[static_cast<std::size_t>(k)];
    if (k > n) {
      if (!h.is_zero()) throw std::logic_error("qhit_rect: nonzero hit number beyond k = n");
      continue;
    }
    auto d = QPoly::exact_div(h, f);
    if (!d) throw std::logic_error("qhit_rect: square hit number not divisible by [m-n]_q!");
    out.push_back(std::move(*d));
  }
  return out;
}

namespace {

struct PlacementSearch {
  const BoxPartition& lambda;
  int m;
  int n;
  int k;
  std::vector<RookPlacement>* out;
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used;

  bool inside(int r, int c) const { return c <= lambda.part(r); }

  void run(int idx, int inside_count) {
    const bool by_column = m >= n;
    const int lines = by_column ? n : m;
    const int other = by_column ? m : n;
    if (inside_count > k) return;
    if (idx > lines) {
      if (inside_count != k) return;
      RookPlacement p{cur};
      std::sort(p.rooks.begin(), p.rooks.end());
      out->push_back(std::move(p));
      return;
    }
    for (int j = 1; j <= other; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      int r = by_column ? j : idx;
      int c = by_column ? idx : j;
      used[static_cast<std::size_t>(j)] = true;
      cur.emplace_back(r, c);
      run(idx + 1, inside_count + (inside(r, c) ? 1 : 0));
      cur.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
  }
};

} // namespace

std::vector<RookPlacement> enumerate_placements(const BoxPartition& lambda, int k) {
  const int m = lambda.rows();
  const int n = lambda.width;
  std::vector<RookPlacement> out;
  if (k < 0 || k > std::min(m, n)) return out;
  PlacementSearch s{lambda, m, n, k, &out, {}, std::vector<bool>(static_cast<std::size_t>(std::max(m, n)) + 1, false)};
  s.run(1, 0);
  std::sort(out.begin(), out.end(), [](const RookPlacement& a, const RookPlacement& b) { return a.rooks < b.rooks; });
  return out;
}

int rook_stat(const BoxPartition& lambda, const RookPlacement& p) {
  const int m = lambda.rows();
  const int n = lambda.width;
  std::vector<std::vector<char>> board(static_cast<std::size_t>(m) + 1, std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  for (auto [r, c] : p.rooks) board[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
  auto rook = [&](int r, int c) { return board[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0; };
  auto inside = [&](int r, int c) { return c <= lambda.part(r); };

  int stat = 0;
  for (int r = 1; r <= m; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (rook(r, c)) continue;
      bool above = false;
      for (int r2 = 1; r2 < r; ++r2) above = above || rook(r2, c);
      bool left = false;
      bool left_outside = false;
      for (int c2 = 1; c2 < c; ++c2) {
        if (!rook(r, c2)) continue;
        left = true;
        left_outside = left_outside || !inside(r, c2);
      }
      bool right_outside = false;
      for (int c2 = c + 1; c2 <= n; ++c2) right_outside = right_outside || (rook(r, c2) && !inside(r, c2));
      bool attacked = inside(r, c) ? (above || left || right_outside) : (above || left_outside);
      stat += attacked ? 0 : 1;
    }
  }
  return stat;
}

QPoly qhit_rook_stat(const BoxPartition& lambda, int k) {
  QPoly h;
  for (const auto& p : enumerate_placements(lambda, k)) h += QPoly::monomial(1, rook_stat(lambda, p));
  return h;
}

} // namespace qpath
