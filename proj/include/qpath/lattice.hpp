#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qpath {

/// Word over {N, E}; N is a unit north step, E a unit east step.
class Word {
public:
  Word() = default;
  /// Case-insensitive; throws std::invalid_argument on any other letter.
  explicit Word(std::string_view letters);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  int m() const { return m_; } // number of N
  int n() const { return n_; } // number of E

  Word operator+(const Word& o) const { return Word(letters_ + o.letters_); }
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

  /// Lower-case text form, e.g. `nenne`.
  std::string to_string() const;

private:
  std::string letters_;
  int m_ = 0;
  int n_ = 0;
};

Word repeat(std::string_view letters, int times);

/// Partition in an m x n box, parts listed from the top row down, zero padded.
struct BoxPartition {
  std::vector<int> parts; // length m, weakly decreasing, parts[0] <= n
  int width = 0;          // n

  int rows() const { return static_cast<int>(parts.size()); }
  int size() const;   // |lambda|
  int length() const; // number of nonzero parts
  /// lambda_i with 1-based i; 0 beyond the stored rows.
  int part(int i) const { return i >= 1 && i <= rows() ? parts[static_cast<std::size_t>(i - 1)] : 0; }
  /// Conjugate partition in the n x m box.
  BoxPartition transpose() const;
  /// Same parts in another box; throws if they do not fit.
  BoxPartition padded(int rows, int width) const;

  friend bool operator==(const BoxPartition&, const BoxPartition&) = default;

  /// Validates shape; throws std::invalid_argument.
  static BoxPartition make(std::vector<int> parts, int rows, int width);
  /// `1,1,0` with an explicit box `3x2`.
  static BoxPartition parse(std::string_view shape, std::string_view box);
  std::string to_string() const;
};

/// Parses `MxN`.
std::pair<int, int> parse_box(std::string_view box);

BoxPartition word_to_partition(const Word& w);
Word partition_to_word(const BoxPartition& lambda);

/// Reverse the word and swap N with E.
Word eta(const Word& w);
Word reversed(const Word& w);

/// a_i = i - lambda_{m+1-i}, square box only.
std::vector<int> area_sequence(const BoxPartition& lambda);
/// Distance-to-diagonal sequence of length n; requires m >= n.
std::vector<int> b_sequence(const BoxPartition& lambda);

/// E^{n-k} (NE)^k N^{m-k}, 0 <= k <= min(m, n).
Word staircase_word(int k, int m, int n);
/// E^k N^m E^{n-k} for m >= n; N^{m-k} E^n N^k for m < n.
Word rectangular_word(int k, int m, int n);
/// (EN)^a (NE)^{n-a} N^{m-n} for m >= n; E^{n-m} (NE)^{m-a} (EN)^a for m < n.
Word zigzag_word(int a, int m, int n);

/// Largest k such that the path of staircase_word(k, m, n) lies weakly below the path of w.
int max_staircase_index(const Word& w);

enum class FactorKind { NiE, NEi };

struct CriticalFactor {
  std::size_t start = 0;
  FactorKind kind = FactorKind::NiE;
  int i = 0; // factor length is i + 1
  friend bool operator==(const CriticalFactor&, const CriticalFactor&) = default;
};

/// Maximal factors N^iE / NE^i (i >= 2) sharing a unit step with the path of
/// staircase_word(m_w, m, n), ordered by start position.
std::vector<CriticalFactor> critical_factors(const Word& w);

bool is_staircase(const Word& w);

/// All words with m letters N and n letters E, in lexicographic order (E < N).
std::vector<Word> all_words(int m, int n);
/// Dyck words of semilength n: every prefix has at least as many N as E.
std::vector<Word> dyck_words(int n);
bool is_dyck(const Word& w);

} // namespace qpath
