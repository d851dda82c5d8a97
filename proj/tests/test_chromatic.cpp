#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qpath/chromatic.hpp"
#include "qpath/series.hpp"
#include "qpath/verify.hpp"

using namespace qpath;

namespace {
QPoly P(const char* s) { return QPoly::parse(s); }
const Word kFig4 = Word("nnnnenn") + Word("enene") + Word("eeneee");
} // namespace

TEST_CASE("graphs from Dyck words") {
  const DyckGraph empty = DyckGraph::from_word(repeat("ne", 4));
  CHECK(empty.num_edges() == 0);
  const DyckGraph k4 = DyckGraph::from_word(repeat("n", 4) + repeat("e", 4));
  CHECK(k4.num_edges() == 6);
  CHECK(DyckGraph::from_word(Word("nnenee")).hess() == std::vector<int>{2, 3, 3});
  CHECK_THROWS_AS(DyckGraph::from_word(Word("enne")), std::invalid_argument);
  CHECK_THROWS_AS(DyckGraph::from_hess({2, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(DyckGraph::from_hess({1, 3, 2}), std::invalid_argument);
  for (int n = 0; n <= 6; ++n)
    for (const auto& w : dyck_words(n)) {
      const DyckGraph g = DyckGraph::from_word(w);
      CHECK(g.word() == w);
      // Interval property.
      for (const auto& [i, j] : g.edges())
        for (int a = i; a < j; ++a)
          for (int b = a + 1; b <= j; ++b) CHECK(g.adjacent(a, b));
    }
}

TEST_CASE("the large example graph") {
  const DyckGraph g = DyckGraph::from_word(kFig4);
  CHECK(g.n() == 9);
  // The factor enene starts at (1, 6) and spans vertices 2..4 against 7..8.
  CHECK(is_abelian_subpath(kFig4, 7, 5));
  CHECK(g.adjacent(2, 6));
  CHECK(g.adjacent(5, 8));
  CHECK_FALSE(g.adjacent(2, 7));
  CHECK(g.adjacent(4, 8));
}

TEST_CASE("csf against naive coloring enumeration") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : dyck_words(n)) {
      const DyckGraph g = DyckGraph::from_word(w);
      CHECK(csf(g).terms == oracle::naive_csf(g));
    }
  CHECK_THROWS_AS(csf(DyckGraph::from_word(repeat("ne", 9))), std::invalid_argument);
}

TEST_CASE("csf examples") {
  const QSymF x = csf(DyckGraph::from_word(Word("nene")));
  CHECK(x.coeff({2}) == QPoly(1));
  CHECK(x.coeff({1, 1}) == QPoly(2));
  const SymE k3 = to_e_basis(csf(DyckGraph::from_word(Word("nnneee"))));
  CHECK(k3.terms.size() == 1);
  CHECK(k3.coeff({3}) == QRat(qfact(3)));
  const SymE path = to_e_basis(csf(DyckGraph::from_word(Word("nnenee"))));
  CHECK(path.coeff({3}) == QRat(qint(3)));
  CHECK(path.coeff({2, 1}) == QRat(P("q")));
  const SymE edgeless = to_e_basis(csf(DyckGraph::from_word(repeat("ne", 4))));
  CHECK(edgeless.terms.size() == 1);
  CHECK(edgeless.coeff({1, 1, 1, 1}) == QRat(1));
}

TEST_CASE("symmetric function plumbing") {
  CHECK(partitions(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(count_01_matrices({2, 1}, {1, 1, 1}) == 3);
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions(n))
      for (const auto& alpha : oracle::compositions(n))
        CHECK(count_01_matrices(lam, alpha) == oracle::e_to_monomial(lam, alpha));
  QSymF bad{2, {}};
  bad.add({2}, 1);
  bad.add({1, 1}, 1);
  QSymF skew{3, {}};
  skew.add({2, 1}, 1);
  std::pair<Composition, Composition> wit;
  CHECK_FALSE(is_symmetric(skew, &wit));
  CHECK_THROWS_AS(to_e_basis(skew), std::invalid_argument);
  CHECK(rho(skew).coeff({1, 2}) == QPoly(1));
  CHECK(invert_q(QSymF{1, {{{1}, P("q")}}}, 3).coeff({1}) == P("q^2"));
  SymE f{3, {}};
  f.add({2, 1}, 1);
  f.add({3}, QRat(P("q")));
  const SymE g = shift_plus_11(f);
  CHECK(g.degree == 5);
  CHECK(g.coeff({3, 2}) == QRat(1));
  CHECK(g.coeff({4, 1}) == QRat(P("q")));
}

TEST_CASE("to_e_basis inverts the e-to-m transition") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : dyck_words(n)) {
      const QSymF x = csf(DyckGraph::from_word(w));
      const SymE e = to_e_basis(x);
      for (const auto& alpha : oracle::compositions(n)) {
        QRat back;
        for (const auto& [lam, c] : e.terms) back += c * QRat(oracle::e_to_monomial(lam, alpha));
        CHECK(back == QRat(x.coeff(alpha)));
      }
    }
}

TEST_CASE("acyclic orientations against brute force") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : dyck_words(n)) {
      const DyckGraph g = DyckGraph::from_word(w);
      const auto os = acyclic_orientations(g);
      const auto brute = oracle::brute_orientations(g);
      REQUIRE(os.size() == brute.size());
      for (std::size_t i = 0; i < os.size(); ++i) {
        CHECK(os[i].reversed == brute[i].reversed);
        CHECK(os[i].ascents == brute[i].ascents);
        CHECK(os[i].sources == brute[i].sources);
        CHECK(os[i].source_sequence == brute[i].sequence);
        int run = 0;
        while (run < static_cast<int>(brute[i].sequence.size()) && brute[i].sequence[static_cast<std::size_t>(run)] == 2) ++run;
        CHECK(os[i].initial == run);
      }
    }
}

TEST_CASE("orientation examples") {
  const auto none = acyclic_orientations(DyckGraph::from_word(repeat("ne", 4)));
  REQUIRE(none.size() == 1);
  CHECK(none[0].sources == 4);
  const auto kn = acyclic_orientations(DyckGraph::from_word(repeat("n", 5) + repeat("e", 5)));
  CHECK(kn.size() == 120);
  for (const auto& o : kn) {
    CHECK(o.sources == 1);
    CHECK(o.initial == 0);
  }
}

TEST_CASE("abelian shapes") {
  const DyckGraph k4 = DyckGraph::from_word(repeat("n", 4) + repeat("e", 4));
  CHECK(is_abelian(k4));
  CHECK(graph_shape(k4).size() == 0);
  const DyckGraph g = DyckGraph::from_hess({2, 4, 4, 4});
  CHECK(is_abelian(g));
  CHECK(abelian_shape(g).size() == 2);
  CHECK_FALSE(is_abelian(DyckGraph::from_word(repeat("ne", 4))));
  CHECK(ascent_sequence(g, AscentSequence::UpperNeighbors) == std::vector<int>{1, 2, 1, 0});
  CHECK(ascent_sequence(g, AscentSequence::LowerNeighbors) == std::vector<int>{0, 1, 1, 2});
  CHECK_THROWS_AS(abreu_nigro(DyckGraph::from_word(repeat("ne", 4))), std::invalid_argument);
}

TEST_CASE("complete graphs give [n]! e_n three ways") {
  for (int n = 1; n <= 6; ++n) {
    const DyckGraph g = DyckGraph::from_word(repeat("n", n) + repeat("e", n));
    SymE expect{n, {}};
    expect.add({n}, QRat(qfact(n)));
    CHECK(harada_precup(g, AscentSequence::UpperNeighbors) == expect);
    CHECK(abelian_qstanley(g) == expect);
    CHECK(abreu_nigro(g) == expect);
  }
}

TEST_CASE("smallest nontrivial abelian graph") {
  const DyckGraph g = DyckGraph::from_hess({2, 4, 4, 4});
  const SymE direct = to_e_basis(csf(g));
  CHECK(harada_precup(g, AscentSequence::UpperNeighbors) == direct);
  CHECK(harada_precup(g, AscentSequence::LowerNeighbors) == direct);
  CHECK(abelian_qstanley(g) == direct);
  CHECK(abreu_nigro(g) == direct);
}

TEST_CASE("the literal closed form differs from the fallback only at j = l") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : dyck_words(n)) {
      const DyckGraph g = DyckGraph::from_word(w);
      if (!is_abelian(g)) continue;
      const int l = abelian_shape(g).length();
      for (int j = 0; j <= l; ++j) {
        const auto lit = abreu_nigro_literal_coefficient(g, j);
        if (!lit) CHECK(j == l);
        else if (*lit != abreu_nigro_coefficient(g, j)) CHECK((j == l && n == 2 * l));
      }
    }
}

TEST_CASE("square hit helper") {
  const BoxPartition lam = BoxPartition::make({1, 1, 0}, 3, 2);
  CHECK(square_hit(lam, 3, 1) == P("q + 2*q^2 + q^3"));
  CHECK_FALSE(square_hit(lam, 1, 0).has_value());
  CHECK_FALSE(square_hit(lam, 3, 4).has_value());
}

TEST_CASE("verification entry points") {
  CHECK(verify_modular_law(Word("nnenee"), 2).pass);
  CHECK_THROWS_AS(verify_modular_law(Word("nnenee"), 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_modular_law(Word("nenene"), 1), std::invalid_argument);
  const auto r = verify_guay_paquet(Word("nnnnenn"), Word("enene"), Word("eeneee"));
  CHECK(r.pass);
  CHECK(verify_guay_paquet(Word("nn"), Word("enen"), Word("ee")).pass);
  for (const auto& rep : verify_sum_clambda(DyckGraph::from_word(Word("nnneee")))) CHECK(rep.pass);
  const auto k3 = verify_sum_clambda(DyckGraph::from_word(Word("nnneee")));
  CHECK(k3[0].right == qfact(3).to_string());
  const auto e3 = verify_sum_clambda(DyckGraph::from_word(Word("nenene")));
  CHECK(e3[2].right == "1");
  for (const auto& rep : verify_initial_run_proposition(DyckGraph::from_hess({2, 4, 4, 4}))) CHECK(rep.pass);
  CHECK_THROWS_AS(verify_initial_run_proposition(DyckGraph::from_word(Word("nenene"))), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
  CHECK(default_bound("modular") == 5);
}

TEST_CASE("abelian subpaths") {
  // An ENE factor sitting under a full square is abelian; one on the diagonal is not.
  CHECK(is_abelian_subpath(Word("nnenee"), 2, 3));
  CHECK_FALSE(is_abelian_subpath(Word("nenene"), 1, 3));
  CHECK(is_abelian_subpath(Word("nnenenee"), 2, 4));
  // A rectangle reaching the diagonal is not.
  CHECK_FALSE(is_abelian_subpath(Word("nnneee"), 1, 4));
}
