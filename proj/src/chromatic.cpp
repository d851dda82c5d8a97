#include "qpath/chromatic.hpp"

#include "qpath/qhit.hpp"
#include "qpath/series.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qpath {

DyckGraph::DyckGraph(std::vector<int> h) : h_(std::move(h)) {
  const int n = static_cast<int>(h_.size());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= h_[static_cast<std::size_t>(i - 1)]; ++j) edges_.emplace_back(i, j);
}

DyckGraph DyckGraph::from_hess(std::vector<int> h) {
  const int n = static_cast<int>(h.size());
  for (int i = 1; i <= n; ++i) {
    const int hi = h[static_cast<std::size_t>(i - 1)];
    if (hi < i || hi > n) throw std::invalid_argument("hessenberg function needs i <= h(i) <= n");
    if (i > 1 && hi < h[static_cast<std::size_t>(i - 2)]) throw std::invalid_argument("hessenberg function must be nondecreasing");
  }
  return DyckGraph(std::move(h));
}

DyckGraph DyckGraph::from_word(const Word& w) {
  if (!is_dyck(w)) throw std::invalid_argument("not a Dyck word: " + w.to_string());
  std::vector<int> h;
  int north = 0;
  for (char c : w.str()) {
    if (c == 'N') ++north;
    else h.push_back(north);
  }
  return DyckGraph(std::move(h));
}

bool DyckGraph::adjacent(int i, int j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return j <= h(i);
}

Word DyckGraph::word() const {
  std::string s;
  int north = 0;
  for (int hi : h_) {
    s.append(static_cast<std::size_t>(hi - north), 'N');
    north = hi;
    s.push_back('E');
  }
  return Word(s);
}

DyckGraph DyckGraph::remove(int i, int j) const {
  std::vector<int> keep;
  for (int v = 1; v <= n(); ++v)
    if (v != i && v != j) keep.push_back(v);
  std::vector<int> h2;
  for (int v : keep) {
    int cnt = 0;
    for (int u : keep) cnt += u <= h(v) ? 1 : 0;
    h2.push_back(cnt);
  }
  return DyckGraph(std::move(h2));
}

std::string DyckGraph::to_string() const { return "h=" + composition_string(h_); }

namespace {

using IPoly = std::vector<std::int64_t>; // coefficient i multiplies q^i

void add_shifted(IPoly& acc, const IPoly& p, int shift) {
  if (acc.size() < p.size() + static_cast<std::size_t>(shift)) acc.resize(p.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + static_cast<std::size_t>(shift)] += p[i];
}

QPoly to_qpoly(const IPoly& p) {
  std::vector<mpz_class> c;
  c.reserve(p.size());
  for (auto x : p) c.emplace_back(static_cast<long>(x));
  return QPoly::from_coeffs(std::move(c));
}

struct ColoringDP {
  int n;
  std::uint32_t full;
  std::vector<bool> stable;
  std::vector<std::uint32_t> weight_mask; // neighbors whose earlier color makes an edge count
  QSymF* out;

  void run(Composition& prefix, const std::map<std::uint32_t, IPoly>& states, int used) {
    if (used == n) {
      out->add(prefix, to_qpoly(states.at(full)));
      return;
    }
    for (int a = 1; a <= n - used; ++a) {
      std::map<std::uint32_t, IPoly> next;
      for (const auto& [mask, poly] : states) {
        const std::uint32_t rest = full & ~mask;
        for (std::uint32_t s = rest; s; s = (s - 1) & rest) {
          if (std::popcount(s) != a || !stable[s]) continue;
          int w = 0;
          for (std::uint32_t t = s; t; t &= t - 1) w += std::popcount(mask & weight_mask[static_cast<std::size_t>(std::countr_zero(t))]);
          add_shifted(next[mask | s], poly, w);
        }
      }
      if (next.empty()) continue;
      prefix.push_back(a);
      run(prefix, next, used + a);
      prefix.pop_back();
    }
  }
};

void check_bound(const DyckGraph& g, int bound) {
  if (g.n() > bound) throw std::invalid_argument("graph has " + std::to_string(g.n()) + " vertices, above the enumeration bound " + std::to_string(bound));
  if (g.n() > 20) throw std::invalid_argument("graph too large for exhaustive enumeration");
}

} // namespace

QSymF csf(const DyckGraph& g, Weight weight, int bound) {
  check_bound(g, bound);
  const int n = g.n();
  QSymF out{n, {}};
  if (n == 0) {
    out.add({}, QPoly(1));
    return out;
  }
  ColoringDP dp{n, (1U << n) - 1, std::vector<bool>(std::size_t{1} << n, true), std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0), &out};
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : g.edges()) {
    adj[static_cast<std::size_t>(i - 1)] |= 1U << (j - 1);
    adj[static_cast<std::size_t>(j - 1)] |= 1U << (i - 1);
    // An edge i<j is an ascent when i is colored first, a descent when j is.
    if (weight == Weight::Ascents) dp.weight_mask[static_cast<std::size_t>(j - 1)] |= 1U << (i - 1);
    else dp.weight_mask[static_cast<std::size_t>(i - 1)] |= 1U << (j - 1);
  }
  for (std::uint32_t s = 1; s <= dp.full; ++s) {
    const int low = std::countr_zero(s);
    dp.stable[s] = dp.stable[s & (s - 1)] && (adj[static_cast<std::size_t>(low)] & s) == 0;
  }
  Composition prefix;
  dp.run(prefix, {{0U, IPoly{1}}}, 0);
  return out;
}

std::vector<Orientation> acyclic_orientations(const DyckGraph& g, int bound) {
  check_bound(g, bound);
  const int n = g.n();
  const auto& edges = g.edges();
  if (edges.size() > 64) throw std::invalid_argument("too many edges");
  std::set<std::uint64_t> masks;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  do {
    for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    std::uint64_t mask = 0;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (pos[static_cast<std::size_t>(edges[e].first)] > pos[static_cast<std::size_t>(edges[e].second)]) mask |= std::uint64_t{1} << e;
    masks.insert(mask);
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<Orientation> out;
  out.reserve(masks.size());
  for (std::uint64_t mask : masks) {
    Orientation o;
    o.reversed = mask;
    o.ascents = static_cast<int>(edges.size()) - std::popcount(mask);
    // in[v]: vertices with an edge pointing into v.
    std::vector<std::uint32_t> in(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [i, j] = edges[e];
      if ((mask >> e) & 1U) in[static_cast<std::size_t>(i)] |= 1U << j;
      else in[static_cast<std::size_t>(j)] |= 1U << i;
    }
    std::uint32_t alive = 0;
    for (int v = 1; v <= n; ++v) alive |= 1U << v;
    while (alive) {
      std::uint32_t src = 0;
      for (int v = 1; v <= n; ++v)
        if (((alive >> v) & 1U) && (in[static_cast<std::size_t>(v)] & alive) == 0) src |= 1U << v;
      o.source_sequence.push_back(std::popcount(src));
      alive &= ~src;
    }
    o.sources = o.source_sequence.empty() ? 0 : o.source_sequence.front();
    while (o.initial < static_cast<int>(o.source_sequence.size()) && o.source_sequence[static_cast<std::size_t>(o.initial)] == 2) ++o.initial;
    out.push_back(std::move(o));
  }
  return out;
}

BoxPartition graph_shape(const DyckGraph& g) {
  const int n = g.n();
  std::vector<int> parts;
  for (int t = 1; t <= n; ++t) {
    int cnt = 0;
    for (int hx : g.hess()) cnt += hx <= n - t ? 1 : 0;
    parts.push_back(cnt);
  }
  return BoxPartition::make(std::move(parts), n, n);
}

bool is_abelian(const DyckGraph& g) {
  const BoxPartition lam = graph_shape(g);
  return lam.part(1) + lam.length() <= g.n();
}

BoxPartition abelian_shape(const DyckGraph& g) {
  const BoxPartition lam = graph_shape(g);
  return lam.part(1) >= lam.length() ? lam : lam.transpose();
}

std::vector<int> ascent_sequence(const DyckGraph& g, AscentSequence kind) {
  std::vector<int> a(static_cast<std::size_t>(g.n()), 0);
  for (auto [i, j] : g.edges()) ++a[static_cast<std::size_t>((kind == AscentSequence::UpperNeighbors ? i : j) - 1)];
  return a;
}

namespace {

void require_abelian(const DyckGraph& g) {
  if (!is_abelian(g)) throw std::invalid_argument("graph " + g.to_string() + " is not abelian");
}

Partition two_row(int n, int j) {
  Partition p{n - j};
  if (j > 0) p.push_back(j);
  return p;
}

} // namespace

SymE harada_precup(const DyckGraph& g, AscentSequence kind) {
  require_abelian(g);
  const int n = g.n();
  SymE out{n, {}};
  if (n == 0) {
    out.add({}, QRat(1));
    return out;
  }
  QPoly one_source;
  for (const auto& o : acyclic_orientations(g, n))
    if (o.sources == 1) one_source += QPoly::monomial(1, o.ascents);
  out.add({n}, QRat(one_source));
  const std::vector<int> a = ascent_sequence(g, kind);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (g.adjacent(i, j)) continue;
      const QRat weight(QPoly::monomial(1, a[static_cast<std::size_t>(i - 1)] + a[static_cast<std::size_t>(j - 1)]));
      for (const auto& [mu, c] : shift_plus_11(harada_precup(g.remove(i, j), kind)).terms) out.add(mu, weight * c);
    }
  }
  return out;
}

SymE abelian_qstanley(const DyckGraph& g) {
  require_abelian(g);
  const int n = g.n();
  SymE out{n, {}};
  for (const auto& o : acyclic_orientations(g, n)) out.add(two_row(n, o.initial), QRat(QPoly::monomial(1, o.ascents)));
  return out;
}

std::optional<QPoly> square_hit(const BoxPartition& lambda, int box, int k) {
  if (box < 0 || k < 0 || k > box || lambda.length() > box || lambda.part(1) > box) return std::nullopt;
  std::vector<int> parts;
  for (int i = 1; i <= lambda.length(); ++i) parts.push_back(lambda.part(i));
  return qhit_square_gf(BoxPartition::make(std::move(parts), box, box))[static_cast<std::size_t>(k)];
}

std::optional<QPoly> abreu_nigro_literal_coefficient(const DyckGraph& g, int j) {
  const int n = g.n();
  const BoxPartition lam = abelian_shape(g);
  if (j < 0 || j > lam.length()) return QPoly();
  const QPoly front = qfact(j).shifted(j) * qint(n - 2 * j);
  if (front.is_zero()) return QPoly();
  auto h = square_hit(lam, n - j - 1, j);
  if (!h) return std::nullopt;
  return front * *h;
}

QPoly abreu_nigro_coefficient(const DyckGraph& g, int j) {
  require_abelian(g);
  const int n = g.n();
  const BoxPartition lam = abelian_shape(g);
  const int l = lam.length();
  if (j < 0 || j > l) return QPoly();
  if (auto h = square_hit(lam, n - j - 1, j)) return qfact(j).shifted(j) * qint(n - 2 * j) * *h;
  if (j != l) throw std::logic_error("abreu_nigro_coefficient: shape does not fit below the last term");
  auto h = square_hit(lam, n - l, l);
  if (!h) throw std::logic_error("abreu_nigro_coefficient: shape does not fit the (n-l)-square");
  return qfact(l) * *h;
}

SymE abreu_nigro(const DyckGraph& g) {
  require_abelian(g);
  const int n = g.n();
  SymE out{n, {}};
  if (n == 0) {
    out.add({}, QRat(1));
    return out;
  }
  const int l = abelian_shape(g).length();
  for (int j = 0; j <= l; ++j) out.add(two_row(n, j), QRat(abreu_nigro_coefficient(g, j)));
  return out;
}

bool is_abelian_subpath(const Word& dyck, std::size_t start, std::size_t len) {
  const DyckGraph g = DyckGraph::from_word(dyck);
  if (start + len > dyck.size()) throw std::out_of_range("subpath out of range");
  int px = 0;
  int py = 0;
  for (std::size_t i = 0; i < start; ++i) (dyck[i] == 'N' ? py : px)++;
  int a = 0;
  int b = 0;
  for (std::size_t i = start; i < start + len; ++i) (dyck[i] == 'N' ? a : b)++;
  if (px + b > py) return false;
  for (int r = py + 2; r <= py + a; ++r)
    if (g.h(r) != g.h(py + 1)) return false;
  for (int hy : g.hess())
    if (hy >= px + 1 && hy <= px + b - 1) return false;
  return true;
}

} // namespace qpath
