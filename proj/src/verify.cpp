#include "qpath/verify.hpp"

#include "qpath/klyachko.hpp"
#include "qpath/pathalg.hpp"
#include "qpath/qhit.hpp"
#include "qpath/series.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace qpath {

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const VerifyReport& r) { return !r.pass; }));
}

const VerifyReport* SuiteResult::first_failure() const {
  for (const auto& r : reports)
    if (!r.pass) return &r;
  return nullptr;
}

namespace {

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += xs[i].to_string();
  }
  return s + "]";
}

std::string ints(const std::vector<int>& xs) { return composition_string(xs); }

// Memoized chromatic data keyed by the Hessenberg function.
struct GraphData {
  QSymF x;
  SymE e;
  std::vector<Orientation> orientations;
};

const GraphData& graph_data(const DyckGraph& g) {
  static std::map<std::vector<int>, GraphData> cache;
  auto it = cache.find(g.hess());
  if (it != cache.end()) return it->second;
  const int bound = std::max(g.n(), kDefaultBound);
  GraphData d;
  d.x = csf(g, Weight::Ascents, bound);
  d.e = to_e_basis(d.x);
  d.orientations = acyclic_orientations(g, bound);
  return cache.emplace(g.hess(), std::move(d)).first->second;
}

const QSymF& csf_of(const Word& dyck) { return graph_data(DyckGraph::from_word(dyck)).x; }

using QRatSym = std::map<Composition, QRat>;

QRatSym to_rat(const QSymF& x) {
  QRatSym r;
  for (const auto& [a, c] : x.terms) r[a] = QRat(c);
  return r;
}

void axpy(QRatSym& acc, const QRat& c, const QSymF& x) {
  for (const auto& [a, v] : x.terms) {
    QRat& slot = acc[a];
    slot += c * QRat(v);
  }
}

void prune(QRatSym& x) {
  for (auto it = x.begin(); it != x.end();) it = it->second.is_zero() ? x.erase(it) : std::next(it);
}

std::string rat_sym_string(const QRatSym& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : x) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*M" + composition_string(a);
  }
  return s;
}

std::string words_instance(const Word& w) { return "word=" + w.to_string(); }

struct Builder {
  SuiteResult r;
  Builder(std::string identity, int bound) { r.identity = std::move(identity), r.bound = bound; }
  void check(std::string instance, bool pass, std::string left, std::string right) {
    r.reports.push_back({r.identity, std::move(instance), pass, std::move(left), std::move(right)});
  }
  void add(VerifyReport rep) {
    rep.identity = r.identity;
    r.reports.push_back(std::move(rep));
  }
};

template <class F>
void for_all_words(int max_len, F&& f) {
  for (int len = 0; len <= max_len; ++len)
    for (int m = len; m >= 0; --m)
      for (const auto& w : all_words(m, len - m)) f(w);
}

template <class F>
void for_all_dyck(int min_n, int max_n, F&& f) {
  for (int n = min_n; n <= max_n; ++n)
    for (const auto& w : dyck_words(n)) f(w);
}

std::vector<QRat> staircase_of(const Word& w) {
  std::vector<QRat> out;
  for (const auto& c : default_engine().expand(w)) out.emplace_back(c);
  return out;
}

// ---------------------------------------------------------------- algebra

SuiteResult suite_triangle(int bound) {
  Builder b("triangle", bound);
  for_all_words(bound, [&](const Word& w) {
    const int m = w.m();
    const int n = w.n();
    const std::vector<QRat> stair = staircase_of(w);
    const std::vector<QRat> rect = expand_rectangular(w);
    const std::vector<QRat> solve = expand_rectangular_solve(w);
    if (rect != solve) return b.check(words_instance(w) + " rectangular formula vs solve", false, join(rect), join(solve));
    const auto rect_back = combine(m, n, rect, rectangular_word).coeffs;
    if (rect_back != stair) return b.check(words_instance(w) + " rectangular re-expanded", false, join(rect_back), join(stair));
    const std::vector<QRat> zig = expand_zigzag_any(w);
    const auto zig_back = combine(m, n, zig, zigzag_word).coeffs;
    if (zig_back != stair) return b.check(words_instance(w) + " zigzag re-expanded", false, join(zig_back), join(stair));
    if (m == n) {
      const auto kly = expand_u_lambda(word_to_partition(w)).coeffs;
      if (kly != rect) return b.check(words_instance(w) + " rectangular vs interval expansion", false, join(rect), join(kly));
    }
    b.check(words_instance(w), true, join(rect), join(stair));
  });
  return b.r;
}

SuiteResult suite_cmp_sign(int bound) {
  Builder b("cmp-sign", bound);
  StaircaseEngine left(Policy::Leftmost);
  StaircaseEngine right(Policy::Rightmost);
  for_all_words(bound, [&](const Word& w) {
    const auto& l = left.expand(w);
    const auto& r = right.expand(w);
    if (l != r) return b.check(words_instance(w) + " leftmost vs rightmost", false, join(l), join(r));
    std::string why;
    if (!signed_coeffs_ok(w, l, &why)) return b.check(words_instance(w) + " signs", false, join(l), why);
    const auto& t = left.expand(eta(w));
    if (t != l) return b.check(words_instance(w) + " eta symmetry", false, join(t), join(l));
    b.check(words_instance(w) + " m_w=" + std::to_string(max_staircase_index(w)), true, join(l), join(r));
  });
  return b.r;
}

SuiteResult suite_reverse_rules(int bound) {
  Builder b("reverse-rules", bound);
  StaircaseEngine engine;
  for_all_words(bound, [&](const Word& w) {
    const auto& rev = engine.expand_reverse(w);
    std::vector<QPoly> fwd;
    for (const auto& c : engine.expand(reversed(w))) fwd.push_back(c.invert_q());
    b.check(words_instance(w), rev == fwd, join(rev), join(fwd));
  });
  return b.r;
}

SuiteResult suite_dimension(int bound) {
  Builder b("dimension", bound);
  const std::vector<mpq_class> points{mpq_class(2), mpq_class(3), mpq_class(1, 2)};
  for (int len = 0; len <= bound; ++len) {
    for (int m = len; m >= 0; --m) {
      const int n = len - m;
      const std::size_t d = static_cast<std::size_t>(std::min(m, n)) + 1;
      // The staircase words are a basis of the expansions, so the span of all
      // word expansions has full dimension d exactly when the rectangular
      // matrix is invertible; check the rank at three rational points.
      std::vector<std::vector<QPoly>> rows;
      for (std::size_t k = 0; k < d; ++k) rows.push_back(default_engine().expand(rectangular_word(static_cast<int>(k), m, n)));
      std::string ranks;
      bool ok = true;
      for (const auto& x : points) {
        std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d));
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) a[i][j] = rows[i][j].eval(x);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < d && rank < d; ++col) {
          std::size_t piv = rank;
          while (piv < d && a[piv][col] == 0) ++piv;
          if (piv == d) continue;
          std::swap(a[piv], a[rank]);
          for (std::size_t r = 0; r < d; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            mpq_class f = a[r][col] / a[rank][col];
            for (std::size_t j = 0; j < d; ++j) a[r][j] -= f * a[rank][j];
          }
          ++rank;
        }
        ranks += (ranks.empty() ? "" : ",") + std::to_string(rank);
        ok = ok && rank == d;
      }
      b.check("grade=" + std::to_string(m) + "x" + std::to_string(n), ok, "ranks " + ranks, "dimension " + std::to_string(d));
    }
  }
  return b.r;
}

std::vector<QPoly> poly_mul_st(const std::vector<QPoly>& a, const std::vector<QPoly>& c) {
  std::vector<QPoly> out(a.size() + c.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out[i + j] += a[i] * c[j];
  return out;
}

std::vector<QPoly> as_polys(const std::vector<QRat>& xs) {
  std::vector<QPoly> out;
  for (const auto& x : xs) {
    if (!x.is_laurent()) throw std::logic_error("zigzag coefficient is not a Laurent polynomial");
    out.push_back(x.num());
  }
  return out;
}

SuiteResult suite_diagonal(int bound) {
  Builder b("diagonal", bound);
  for (int a = 0; 2 * a <= bound; ++a) {
    for (int c = 0; 2 * (a + c) <= bound; ++c) {
      for (const auto& w1 : all_words(a, a)) {
        for (const auto& w2 : all_words(c, c)) {
          const auto lhs = as_polys(expand_zigzag(w1 + w2));
          const auto rhs = poly_mul_st(as_polys(expand_zigzag(w1)), as_polys(expand_zigzag(w2)));
          b.check("words=" + w1.to_string() + "*" + w2.to_string(), lhs == rhs, join(lhs), join(rhs));
        }
      }
    }
  }
  return b.r;
}

// All partitions inside an m x n box.
std::vector<BoxPartition> box_partitions(int m, int n) {
  std::vector<BoxPartition> out;
  for (const auto& w : all_words(m, n)) out.push_back(word_to_partition(w));
  return out;
}

SuiteResult suite_qhit(int bound) {
  Builder b("qhit", bound);
  for (int m = 0; m <= bound; ++m) {
    const QPoly mf = qfact(m);
    for (const auto& lam : box_partitions(m, m)) {
      const std::string inst = "lambda=" + lam.to_string();
      const auto h = qhit_square_gf(lam);
      QPoly sum;
      bool nonneg = true;
      for (const auto& x : h) {
        sum += x;
        nonneg = nonneg && x.is_nonneg_polynomial();
      }
      b.check(inst + " sum", sum == mf, sum.to_string(), mf.to_string());
      b.check(inst + " nonnegative", nonneg, join(h), "Z>=0[q]");
      std::vector<QPoly> bridge;
      for (const auto& c : expand_u_lambda(lam).coeffs) {
        const QRat x = c * QRat(mf);
        bridge.push_back(x.is_laurent() ? x.num() : QPoly());
      }
      b.check(inst + " interval expansion", bridge == h, join(bridge), join(h));
    }
    for (int n = 0; n <= m; ++n) {
      const QPoly fall = qfalling(m, n);
      for (const auto& lam : box_partitions(m, n)) {
        const std::string inst = "lambda=" + lam.to_string();
        try {
          const auto h = qhit_rect(lam);
          QPoly sum;
          for (const auto& x : h) sum += x;
          b.check(inst + " rectangular reduction", sum == fall, sum.to_string(), fall.to_string());
        } catch (const std::logic_error& e) {
          b.check(inst + " rectangular reduction", false, e.what(), "exact division");
        }
        if (m <= 5) {
          mpz_class placements = 0;
          for (int k = 0; k <= n; ++k) placements += qhit_rook_stat(lam, k).eval(1).get_num();
          const mpz_class expect = fall.eval(1).get_num();
          b.check(inst + " placement count", placements == expect, placements.get_str(), expect.get_str());
        }
      }
    }
  }
  return b.r;
}

SuiteResult suite_simple(int bound) {
  Builder b("simple", bound);
  for (int n = 1; n <= bound; ++n) {
    for (const auto& lam : box_partitions(n, n)) {
      const int l = lam.length();
      if (lam.part(1) + l > n) continue;
      const std::string inst = "n=" + std::to_string(n) + " lambda=" + ints(std::vector<int>(lam.parts.begin(), lam.parts.begin() + l));
      auto lhs = square_hit(lam, n - l, l);
      auto inner = square_hit(lam, n - l - 1, l);
      if (!lhs || !inner) {
        b.r.skipped.push_back(inst + ": lambda does not fit in the (n-l-1)-square");
        continue;
      }
      const QPoly rhs = qint(n - 2 * l).shifted(l) * *inner;
      b.check(inst, *lhs == rhs, lhs->to_string(), rhs.to_string());
    }
  }
  return b.r;
}

SuiteResult suite_discrepancy(int bound) {
  Builder b("discrepancy", bound);
  const BoxPartition lam = BoxPartition::make({1, 1, 0}, 3, 2);
  const Word w("nenne");
  const auto gf = qhit_rect(lam);
  std::vector<QPoly> stat;
  for (int k = 0; k <= 2; ++k) stat.push_back(qhit_rook_stat(lam, k));
  b.check("lambda=1,1,0 in 3x2 conventions differ (gf vs stat)", gf != stat, join(gf), join(stat));
  const QPoly d = qfalling(3, 2);
  const auto oracle = expand_rectangular_solve(w);
  std::vector<QRat> from_gf;
  std::vector<QRat> from_stat;
  for (const auto& h : gf) from_gf.emplace_back(h, d);
  for (const auto& h : stat) from_stat.emplace_back(h, d);
  b.check("word=nenne gf convention matches staircase oracle", from_gf == oracle, join(from_gf), join(oracle));
  b.check("word=nenne stat convention rejected by staircase oracle", from_stat != oracle, join(from_stat), join(oracle));
  return b.r;
}

// ---------------------------------------------------------------- chromatic

SuiteResult suite_symmetry(int bound) {
  Builder b("symmetry", bound);
  for_all_dyck(1, bound, [&](const Word& dw) {
    const auto& x = csf_of(dw);
    std::pair<Composition, Composition> wit;
    const bool ok = is_symmetric(x, &wit);
    b.check("dyck=" + dw.to_string(), ok, ok ? "symmetric" : "M" + ints(wit.first), ok ? "symmetric" : "M" + ints(wit.second));
  });
  return b.r;
}

SuiteResult suite_rho(int bound) {
  Builder b("rho", bound);
  for_all_dyck(1, bound, [&](const Word& dw) {
    const DyckGraph g = DyckGraph::from_word(dw);
    const auto& d = graph_data(g);
    const QSymF lhs = invert_q(d.x, g.num_edges());
    const QSymF rhs = rho(d.x);
    b.check("dyck=" + dw.to_string() + " q^|E| X(1/q) = rho(X)", lhs == rhs, lhs.to_string(), rhs.to_string());
    const SymE desc = to_e_basis(csf(g, Weight::Descents, std::max(g.n(), kDefaultBound)));
    SymE flipped{g.n(), {}};
    for (const auto& [p, c] : d.e.terms) flipped.add(p, c.invert_q() * QRat(QPoly::monomial(1, g.num_edges())));
    b.check("dyck=" + dw.to_string() + " descents vs inverted ascents", desc == flipped, desc.to_string(), flipped.to_string());
  });
  return b.r;
}

SuiteResult suite_modular(int bound) {
  Builder b("modular", bound);
  for_all_dyck(2, bound, [&](const Word& dw) {
    const std::string& s = dw.str();
    for (std::size_t p = 0; p + 3 <= s.size(); ++p) {
      const std::string f = s.substr(p, 3);
      if ((f != "ENE" && f != "NEN") || !is_abelian_subpath(dw, p, 3)) continue;
      b.add(verify_modular_law(dw, p));
    }
  });
  return b.r;
}

SuiteResult suite_guay_paquet(int bound) {
  Builder b("guay-paquet", bound);
  for_all_dyck(1, bound, [&](const Word& dw) {
    const std::string& s = dw.str();
    for (std::size_t p = 0; p < s.size(); ++p) {
      for (std::size_t len = 2; p + len <= s.size(); ++len) {
        const Word v(s.substr(p, len));
        if (v.m() == 0 || v.n() == 0 || !is_abelian_subpath(dw, p, len)) continue;
        b.add(verify_guay_paquet(Word(s.substr(0, p)), v, Word(s.substr(p + len))));
      }
    }
  });
  if (bound >= 6) b.add(verify_guay_paquet(Word("nnnnenn"), Word("enene"), Word("eeneee")));
  return b.r;
}

SuiteResult suite_sum_clambda(int bound) {
  Builder b("sum-clambda", bound);
  for_all_dyck(1, bound, [&](const Word& dw) {
    for (auto& r : verify_sum_clambda(DyckGraph::from_word(dw))) b.add(std::move(r));
  });
  return b.r;
}

SuiteResult suite_abelian_triple(int bound) {
  Builder b("abelian-triple", bound);
  for_all_dyck(1, bound, [&](const Word& dw) {
    const DyckGraph g = DyckGraph::from_word(dw);
    if (!is_abelian(g)) return;
    const SymE& direct = graph_data(g).e;
    const std::string inst = "dyck=" + dw.to_string() + " lambda=" + abelian_shape(g).to_string();
    const SymE hp_upper = harada_precup(g, AscentSequence::UpperNeighbors);
    const SymE hp_lower = harada_precup(g, AscentSequence::LowerNeighbors);
    const SymE st = abelian_qstanley(g);
    const SymE an = abreu_nigro(g);
    b.check(inst + " harada-precup (a_i = upper neighbors)", hp_upper == direct, hp_upper.to_string(), direct.to_string());
    b.check(inst + " harada-precup (a_i = lower neighbors)", hp_lower == direct, hp_lower.to_string(), direct.to_string());
    b.check(inst + " orientation sum", st == direct, st.to_string(), direct.to_string());
    b.check(inst + " closed form", an == direct, an.to_string(), direct.to_string());
  });
  return b.r;
}

SuiteResult suite_initial_run(int bound) {
  Builder b("initial-run", bound);
  for_all_dyck(1, bound, [&](const Word& dw) {
    const DyckGraph g = DyckGraph::from_word(dw);
    if (!is_abelian(g)) return;
    for (auto& r : verify_initial_run_proposition(g)) b.add(std::move(r));
  });
  return b.r;
}

SuiteResult suite_e_positivity(int bound) {
  Builder b("e-positivity", bound);
  for_all_dyck(1, bound, [&](const Word& dw) {
    const DyckGraph g = DyckGraph::from_word(dw);
    const SymE& e = graph_data(g).e;
    bool ok = true;
    for (const auto& [p, c] : e.terms) ok = ok && c.is_laurent() && c.num().is_nonneg_polynomial();
    b.check("dyck=" + dw.to_string(), ok, e.to_string(), "coefficients in Z>=0[q]");
    if (is_abelian(g)) {
      bool two = true;
      for (const auto& [p, c] : e.terms) two = two && p.size() <= 2;
      b.check("dyck=" + dw.to_string() + " abelian support", two, e.to_string(), "partitions with at most two parts");
    }
  });
  return b.r;
}

using SuiteFn = SuiteResult (*)(int);

struct SuiteDef {
  std::string name;
  int bound;
  SuiteFn fn;
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs{
      {"triangle", 10, suite_triangle},
      {"cmp-sign", 10, suite_cmp_sign},
      {"reverse-rules", 8, suite_reverse_rules},
      {"dimension", 10, suite_dimension},
      {"diagonal", 10, suite_diagonal},
      {"qhit", 6, suite_qhit},
      {"simple", 8, suite_simple},
      {"discrepancy", 0, suite_discrepancy},
      {"symmetry", 7, suite_symmetry},
      {"rho", 6, suite_rho},
      {"modular", 5, suite_modular},
      {"guay-paquet", 6, suite_guay_paquet},
      {"sum-clambda", 6, suite_sum_clambda},
      {"abelian-triple", 7, suite_abelian_triple},
      {"initial-run", 7, suite_initial_run},
      {"e-positivity", 7, suite_e_positivity},
  };
  return defs;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown identity '" + name + "'");
}

} // namespace

VerifyReport verify_modular_law(const Word& dyck, std::size_t start) {
  const std::string& s = dyck.str();
  if (!is_dyck(dyck)) throw std::invalid_argument("not a Dyck word: " + dyck.to_string());
  if (start + 3 > s.size()) throw std::invalid_argument("factor out of range");
  const std::string f = s.substr(start, 3);
  if (f != "ENE" && f != "NEN") throw std::invalid_argument("factor must be ene or nen");
  if (!is_abelian_subpath(dyck, start, 3))
    throw std::invalid_argument("factor " + f + " at " + std::to_string(start) + " of " + dyck.to_string() + " is not in an abelian subpath");
  const bool ene = f == "ENE";
  const Word lower(s.substr(0, start) + (ene ? "EEN" : "ENN") + s.substr(start + 3));
  const Word upper(s.substr(0, start) + (ene ? "NEE" : "NNE") + s.substr(start + 3));
  QSymF lhs{dyck.m(), {}};
  QSymF rhs{dyck.m(), {}};
  for (const auto& [a, c] : csf_of(dyck).terms) lhs.add(a, c * QPoly::from_coeffs({1, 1}));
  for (const auto& [a, c] : csf_of(lower).terms) rhs.add(a, c.shifted(1));
  for (const auto& [a, c] : csf_of(upper).terms) rhs.add(a, c);
  return {"modular", "dyck=" + dyck.to_string() + " " + f + "@" + std::to_string(start), lhs == rhs, lhs.to_string(), rhs.to_string()};
}

VerifyReport verify_guay_paquet(const Word& u, const Word& v, const Word& w) {
  const Word d = u + v + w;
  if (!is_dyck(d)) throw std::invalid_argument("not a Dyck word: " + d.to_string());
  if (!is_abelian_subpath(d, u.size(), v.size()))
    throw std::invalid_argument("subpath " + v.to_string() + " of " + d.to_string() + " is not abelian");
  const std::vector<QRat> coeffs = expand_rectangular(v);
  QRatSym rhs;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    axpy(rhs, coeffs[k], csf_of(u + rectangular_word(static_cast<int>(k), v.m(), v.n()) + w));
  }
  prune(rhs);
  const QRatSym lhs = to_rat(csf_of(d));
  return {"guay-paquet", "dyck=" + d.to_string() + " V=" + v.to_string() + "@" + std::to_string(u.size()), lhs == rhs,
          rat_sym_string(lhs), rat_sym_string(rhs)};
}

std::vector<VerifyReport> verify_sum_clambda(const DyckGraph& g) {
  const auto& d = graph_data(g);
  std::vector<VerifyReport> out;
  for (int k = 1; k <= g.n(); ++k) {
    QRat lhs;
    for (const auto& [p, c] : d.e.terms)
      if (static_cast<int>(p.size()) == k) lhs += c;
    QPoly rhs;
    for (const auto& o : d.orientations)
      if (o.sources == k) rhs += QPoly::monomial(1, o.ascents);
    out.push_back({"sum-clambda", "dyck=" + g.word().to_string() + " k=" + std::to_string(k), lhs == QRat(rhs), lhs.to_string(), rhs.to_string()});
  }
  return out;
}

std::vector<VerifyReport> verify_initial_run_proposition(const DyckGraph& g) {
  if (!is_abelian(g)) throw std::invalid_argument("graph " + g.to_string() + " is not abelian");
  const auto& d = graph_data(g);
  std::vector<VerifyReport> out;
  for (int j = 0; j <= g.n(); ++j) {
    QPoly lhs;
    for (const auto& o : d.orientations)
      if (o.initial == j) lhs += QPoly::monomial(1, o.ascents);
    const QPoly rhs = abreu_nigro_coefficient(g, j);
    out.push_back({"initial-run", "dyck=" + g.word().to_string() + " j=" + std::to_string(j), lhs == rhs, lhs.to_string(), rhs.to_string()});
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : registry()) v.push_back(s.name);
    return v;
  }();
  return names;
}

int default_bound(const std::string& identity) { return find_suite(identity).bound; }

SuiteResult run_suite(const std::string& identity, int bound) {
  const SuiteDef& s = find_suite(identity);
  return s.fn(bound > 0 ? bound : s.bound);
}

} // namespace qpath
