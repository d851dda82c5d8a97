#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpath/lattice.hpp"

#include <algorithm>

using namespace qpath;

namespace {
BoxPartition B(std::vector<int> parts, int width) {
  const int rows = static_cast<int>(parts.size());
  return BoxPartition::make(std::move(parts), rows, width);
}
const Word kFig6 = Word("nn") + repeat("e", 4) + repeat("n", 6) + Word("ennen");
} // namespace

TEST_CASE("words") {
  const Word w("NeNnE");
  CHECK(w.to_string() == "nenne");
  CHECK(w.m() == 3);
  CHECK(w.n() == 2);
  CHECK_THROWS_AS(Word("nex"), std::invalid_argument);
  CHECK(repeat("ne", 3) == Word("nenene"));
}

TEST_CASE("word_to_partition") {
  CHECK(word_to_partition(Word("nnnee")) == B({0, 0, 0}, 2));
  CHECK(word_to_partition(Word("nenne")) == B({1, 1, 0}, 2));
  CHECK(word_to_partition(kFig6) == B({6, 5, 5, 4, 4, 4, 4, 4, 4, 0, 0}, 6));
}

TEST_CASE("partition_to_word") {
  CHECK(partition_to_word(B({0, 0}, 2)) == Word("nnee"));
  CHECK(partition_to_word(B({1, 1, 0}, 2)) == Word("nenne"));
  CHECK(partition_to_word(B({2, 2, 2}, 2)) == Word("eennn"));
}

TEST_CASE("partition parsing and validation") {
  CHECK(BoxPartition::parse("1,1,0", "3x2") == B({1, 1, 0}, 2));
  CHECK(parse_box("4x5") == std::pair{4, 5});
  CHECK_THROWS_AS(BoxPartition::parse("1,2,0", "3x2"), std::invalid_argument);
  CHECK_THROWS_AS(BoxPartition::parse("3,1,0", "3x2"), std::invalid_argument);
  CHECK_THROWS_AS(BoxPartition::parse("1,1", "3x2x1"), std::invalid_argument);
  CHECK_THROWS_AS(B({2, 1}, 2).padded(2, 1), std::invalid_argument);
  CHECK(B({2, 1}, 2).padded(3, 3) == B({2, 1, 0}, 3));
  CHECK(B({1, 1, 0}, 2).transpose() == B({2, 0}, 3));
}

TEST_CASE("round trips on all words up to length 10") {
  for (int len = 0; len <= 10; ++len)
    for (int m = 0; m <= len; ++m)
      for (const auto& w : all_words(m, len - m)) {
        const BoxPartition lam = word_to_partition(w);
        CHECK(partition_to_word(lam) == w);
        CHECK(word_to_partition(partition_to_word(lam)) == lam);
        CHECK(eta(eta(w)) == w);
        CHECK(eta(w).m() == w.n());
        CHECK(word_to_partition(eta(w)) == lam.transpose());
        const int mw = max_staircase_index(w);
        CHECK(mw >= 0);
        CHECK(mw <= std::min(w.m(), w.n()));
      }
}

TEST_CASE("eta") {
  CHECK(eta(Word("ne")) == Word("ne"));
  CHECK(eta(Word("nenne")) == Word("neene"));
  CHECK(reversed(Word("nenne")) == Word("ennen"));
}

TEST_CASE("area sequence") {
  CHECK(area_sequence(B({5, 5, 3, 3, 3, 0}, 6)) == std::vector<int>{1, -1, 0, 1, 0, 1});
  CHECK(area_sequence(B({0, 0, 0, 0}, 4)) == std::vector<int>{1, 2, 3, 4});
  CHECK(area_sequence(B({1, 1, 0}, 3)) == std::vector<int>{1, 1, 2});
  CHECK_THROWS_AS(area_sequence(B({1, 1, 0}, 2)), std::invalid_argument);
}

TEST_CASE("area sequences of a shape and its transpose have equal multisets") {
  for (int m = 0; m <= 7; ++m)
    for (const auto& w : all_words(m, m)) {
      const BoxPartition lam = word_to_partition(w);
      auto a = area_sequence(lam);
      auto b = area_sequence(lam.transpose());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
      for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] - a[i - 1] <= 1);
      if (!a.empty()) CHECK((std::count(a.begin(), a.end(), 0) + std::count(a.begin(), a.end(), 1)) > 0);
    }
}

TEST_CASE("b sequence") {
  CHECK(b_sequence(word_to_partition(kFig6)) == std::vector<int>{2, 1, -1, 0, 4, 5});
  CHECK(b_sequence(B({1, 1, 0}, 2)) == std::vector<int>{1, 2});
  CHECK(b_sequence(B({0, 0, 0, 0, 0}, 3)) == std::vector<int>{5, 4, 3});
  CHECK_THROWS_AS(b_sequence(B({1, 0}, 3)), std::invalid_argument);
}

TEST_CASE("basis constructors") {
  CHECK(rectangular_word(0, 3, 2) == Word("nnnee"));
  CHECK(staircase_word(1, 3, 2) == Word("enenn"));
  CHECK(zigzag_word(1, 3, 2) == Word("ennen"));
  CHECK(rectangular_word(1, 2, 3) == eta(rectangular_word(1, 3, 2)));
  CHECK(zigzag_word(1, 2, 3) == eta(zigzag_word(1, 3, 2)));
  CHECK_THROWS(staircase_word(3, 3, 2));
  CHECK_THROWS(rectangular_word(-1, 3, 2));
}

TEST_CASE("max staircase index") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= std::min(m, n); ++k) CHECK(max_staircase_index(staircase_word(k, m, n)) == k);
  CHECK(max_staircase_index(Word("nnnee")) == 2);
  // The staircase with three NE steps fits under this path.
  CHECK(max_staircase_index(Word("nneeenen")) == 3);
  CHECK(max_staircase_index(Word("eenn")) == 0);
}

TEST_CASE("critical factors") {
  CHECK(critical_factors(Word("nnnee")) == std::vector<CriticalFactor>{{0, FactorKind::NiE, 3}});
  const auto fs = critical_factors(Word("nneeenen"));
  CHECK(std::find(fs.begin(), fs.end(), CriticalFactor{1, FactorKind::NEi, 3}) != fs.end());
  CHECK(critical_factors(Word("enenn")).empty());
}

TEST_CASE("no critical factor exactly for staircase words") {
  for (int len = 0; len <= 10; ++len)
    for (int m = 0; m <= len; ++m) {
      const int n = len - m;
      std::vector<Word> stairs;
      for (int k = 0; k <= std::min(m, n); ++k) stairs.push_back(staircase_word(k, m, n));
      for (const auto& w : all_words(m, n)) {
        const bool is_basis = std::find(stairs.begin(), stairs.end(), w) != stairs.end();
        CHECK(critical_factors(w).empty() == is_basis);
        CHECK(is_staircase(w) == is_basis);
      }
    }
}

TEST_CASE("enumeration") {
  CHECK(all_words(2, 2).size() == 6);
  CHECK(all_words(2, 1) == std::vector<Word>{Word("enn"), Word("nen"), Word("nne")});
  const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n < 8; ++n) CHECK(dyck_words(n).size() == catalan[static_cast<std::size_t>(n)]);
  CHECK(is_dyck(Word("nnee")));
  CHECK_FALSE(is_dyck(Word("enne")));
  CHECK_FALSE(is_dyck(Word("nne")));
}
