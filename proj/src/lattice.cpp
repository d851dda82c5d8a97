#include "qpath/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace qpath {

Word::Word(std::string_view letters) {
  letters_.reserve(letters.size());
  for (char c : letters) {
    switch (c) {
    case 'n':
    case 'N':
      letters_.push_back('N');
      ++m_;
      break;
    case 'e':
    case 'E':
      letters_.push_back('E');
      ++n_;
      break;
    default:
      throw std::invalid_argument("word letters must be n or e, got '" + std::string(1, c) + "'");
    }
  }
}

std::string Word::to_string() const {
  std::string s = letters_;
  for (char& c : s) c = c == 'N' ? 'n' : 'e';
  return s;
}

Word repeat(std::string_view letters, int times) {
  std::string s;
  for (int i = 0; i < times; ++i) s += letters;
  return Word(s);
}

int BoxPartition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

int BoxPartition::length() const {
  int l = 0;
  for (int p : parts) l += p > 0 ? 1 : 0;
  return l;
}

BoxPartition BoxPartition::transpose() const {
  BoxPartition t;
  t.width = rows();
  t.parts.assign(static_cast<std::size_t>(width), 0);
  for (int j = 1; j <= width; ++j) {
    int c = 0;
    for (int p : parts) c += p >= j ? 1 : 0;
    t.parts[static_cast<std::size_t>(j - 1)] = c;
  }
  return t;
}

BoxPartition BoxPartition::padded(int new_rows, int new_width) const {
  return make(parts, new_rows, new_width);
}

BoxPartition BoxPartition::make(std::vector<int> parts, int rows, int width) {
  if (rows < 0 || width < 0) throw std::invalid_argument("box dimensions must be nonnegative");
  while (static_cast<int>(parts.size()) > rows && !parts.empty() && parts.back() == 0) parts.pop_back();
  if (static_cast<int>(parts.size()) > rows)
    throw std::invalid_argument("partition has more nonzero parts than the box has rows");
  parts.resize(static_cast<std::size_t>(rows), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (parts[i] > width) throw std::invalid_argument("partition part exceeds box width");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition must be weakly decreasing");
  }
  return BoxPartition{std::move(parts), width};
}

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
  return v;
}

} // namespace

std::pair<int, int> parse_box(std::string_view box) {
  auto x = box.find_first_of("xX");
  if (x == std::string_view::npos) throw std::invalid_argument("box must look like MxN");
  return {parse_int(box.substr(0, x)), parse_int(box.substr(x + 1))};
}

BoxPartition BoxPartition::parse(std::string_view shape, std::string_view box) {
  auto [m, n] = parse_box(box);
  std::vector<int> parts;
  while (!shape.empty()) {
    auto comma = shape.find(',');
    parts.push_back(parse_int(shape.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    shape.remove_prefix(comma + 1);
  }
  return make(std::move(parts), m, n);
}

std::string BoxPartition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + " in " + std::to_string(rows()) + "x" + std::to_string(width);
}

BoxPartition word_to_partition(const Word& w) {
  const int m = w.m();
  BoxPartition lam{std::vector<int>(static_cast<std::size_t>(m), 0), w.n()};
  int e = 0;
  int i = 0;
  for (char c : w.str()) {
    if (c == 'E') {
      ++e;
    } else {
      ++i;
      lam.parts[static_cast<std::size_t>(m - i)] = e;
    }
  }
  return lam;
}

Word partition_to_word(const BoxPartition& lambda) {
  const int m = lambda.rows();
  std::string s;
  int e = 0;
  for (int i = 1; i <= m; ++i) {
    int target = lambda.part(m + 1 - i);
    s.append(static_cast<std::size_t>(target - e), 'E');
    e = target;
    s.push_back('N');
  }
  s.append(static_cast<std::size_t>(lambda.width - e), 'E');
  return Word(s);
}

Word eta(const Word& w) {
  std::string s(w.str().rbegin(), w.str().rend());
  for (char& c : s) c = c == 'N' ? 'E' : 'N';
  return Word(s);
}

Word reversed(const Word& w) { return Word(std::string(w.str().rbegin(), w.str().rend())); }

std::vector<int> area_sequence(const BoxPartition& lambda) {
  const int m = lambda.rows();
  if (m != lambda.width) throw std::invalid_argument("area_sequence: box must be square");
  std::vector<int> a(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) a[static_cast<std::size_t>(i - 1)] = i - lambda.part(m + 1 - i);
  return a;
}

std::vector<int> b_sequence(const BoxPartition& lambda) {
  const int m = lambda.rows();
  const int n = lambda.width;
  if (m < n) throw std::invalid_argument("b_sequence: requires m >= n");
  BoxPartition conj = lambda.transpose();
  std::vector<int> b(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int row = lambda.part(m + 1 - i);
    b[static_cast<std::size_t>(i - 1)] = row < i ? m + 1 - i - conj.part(i) : i - row;
  }
  return b;
}

Word staircase_word(int k, int m, int n) {
  if (k < 0 || k > std::min(m, n)) throw std::out_of_range("staircase index out of range");
  return repeat("E", n - k) + repeat("NE", k) + repeat("N", m - k);
}

Word rectangular_word(int k, int m, int n) {
  if (k < 0 || k > std::min(m, n)) throw std::out_of_range("rectangular index out of range");
  if (m >= n) return repeat("E", k) + repeat("N", m) + repeat("E", n - k);
  return repeat("N", m - k) + repeat("E", n) + repeat("N", k);
}

Word zigzag_word(int a, int m, int n) {
  if (a < 0 || a > std::min(m, n)) throw std::out_of_range("zigzag index out of range");
  if (m >= n) return repeat("EN", a) + repeat("NE", n - a) + repeat("N", m - n);
  return repeat("E", n - m) + repeat("NE", m - a) + repeat("EN", a);
}

int max_staircase_index(const Word& w) {
  const int m = w.m();
  const int n = w.n();
  std::vector<int> e_before; // E's preceding the i-th N
  int e = 0;
  for (char c : w.str()) {
    if (c == 'E') ++e;
    else e_before.push_back(e);
  }
  for (int k = std::min(m, n); k > 0; --k) {
    bool below = true;
    for (int i = 1; i <= k && below; ++i) below = e_before[static_cast<std::size_t>(i - 1)] <= n - k + i - 1;
    if (below) return k;
  }
  return 0;
}

std::vector<CriticalFactor> critical_factors(const Word& w) {
  const Word delta = staircase_word(max_staircase_index(w), w.m(), w.n());
  const std::string& s = w.str();
  const std::string& d = delta.str();
  const std::size_t len = s.size();

  // shared[j]: step j of w coincides with step j of delta (same start point, same direction).
  std::vector<bool> shared(len, false);
  int nw = 0;
  int nd = 0;
  for (std::size_t j = 0; j < len; ++j) {
    shared[j] = s[j] == d[j] && nw == nd;
    nw += s[j] == 'N' ? 1 : 0;
    nd += d[j] == 'N' ? 1 : 0;
  }
  auto touches = [&](std::size_t from, std::size_t to) {
    for (std::size_t j = from; j < to; ++j)
      if (shared[j]) return true;
    return false;
  };

  std::vector<CriticalFactor> out;
  std::size_t p = 0;
  while (p < len) {
    std::size_t q = p;
    while (q < len && s[q] == s[p]) ++q;
    const int run = static_cast<int>(q - p);
    if (run >= 2) {
      if (s[p] == 'N' && q < len && touches(p, q + 1)) out.push_back({p, FactorKind::NiE, run});
      if (s[p] == 'E' && p > 0 && touches(p - 1, q)) out.push_back({p - 1, FactorKind::NEi, run});
    }
    p = q;
  }
  std::sort(out.begin(), out.end(), [](const CriticalFactor& a, const CriticalFactor& b) { return a.start < b.start; });
  return out;
}

bool is_staircase(const Word& w) { return w == staircase_word(max_staircase_index(w), w.m(), w.n()); }

std::vector<Word> all_words(int m, int n) {
  std::string s = std::string(static_cast<std::size_t>(n), 'E') + std::string(static_cast<std::size_t>(m), 'N');
  std::vector<Word> out;
  do {
    out.emplace_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

namespace {

void dyck_rec(std::string& cur, int open, int close, int n, std::vector<Word>& out) {
  if (open == n && close == n) {
    out.emplace_back(cur);
    return;
  }
  // E before N keeps the output in lexicographic order.
  if (close < open) {
    cur.push_back('E');
    dyck_rec(cur, open, close + 1, n, out);
    cur.pop_back();
  }
  if (open < n) {
    cur.push_back('N');
    dyck_rec(cur, open + 1, close, n, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Word> dyck_words(int n) {
  std::vector<Word> out;
  std::string cur;
  dyck_rec(cur, 0, 0, n, out);
  return out;
}

bool is_dyck(const Word& w) {
  if (w.m() != w.n()) return false;
  int h = 0;
  for (char c : w.str()) {
    h += c == 'N' ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

} // namespace qpath
