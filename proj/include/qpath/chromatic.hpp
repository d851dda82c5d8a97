#pragma once

#include "qpath/lattice.hpp"
#include "qpath/qpoly.hpp"
#include "qpath/symfunc.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qpath {

/// Graph on [n] with {i<j} an edge iff j <= h(i), h nondecreasing and h(i) >= i.
class DyckGraph {
public:
  /// Throws std::invalid_argument unless w is a Dyck word.
  static DyckGraph from_word(const Word& w);
  /// h given as h(1), ..., h(n); throws std::invalid_argument if invalid.
  static DyckGraph from_hess(std::vector<int> h);

  int n() const { return static_cast<int>(h_.size()); }
  /// 1-based.
  int h(int i) const { return h_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& hess() const { return h_; }
  bool adjacent(int i, int j) const;
  /// Edges {i<j}, 1-based, ordered by (i, j).
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  Word word() const;
  /// Induced subgraph on [n] minus {i, j}, relabeled in order.
  DyckGraph remove(int i, int j) const;
  std::string to_string() const;

  friend bool operator==(const DyckGraph& a, const DyckGraph& b) { return a.h_ == b.h_; }

private:
  explicit DyckGraph(std::vector<int> h);
  std::vector<int> h_;
  std::vector<std::pair<int, int>> edges_;
};

enum class Weight { Ascents, Descents };

constexpr int kDefaultBound = 8;

/// X_G in the M basis: proper colorings weighted by q^{ascents} (or descents).
/// Throws std::invalid_argument when n exceeds `bound`.
QSymF csf(const DyckGraph& g, Weight weight = Weight::Ascents, int bound = kDefaultBound);

struct Orientation {
  std::uint64_t reversed = 0; // bit e set: edge e of edges() points from larger to smaller
  int ascents = 0;
  int sources = 0;
  std::vector<int> source_sequence;
  int initial = 0; // length of the leading run of 2's in source_sequence
};

/// All acyclic orientations, each once, ordered by `reversed`.
std::vector<Orientation> acyclic_orientations(const DyckGraph& g, int bound = kDefaultBound);

/// Partition whose cells correspond to the non-edges: lambda_t = #{x : h(x) <= n - t}.
BoxPartition graph_shape(const DyckGraph& g);
/// lambda_1 + l(lambda) <= n for lambda = graph_shape(g).
bool is_abelian(const DyckGraph& g);
/// graph_shape, transposed if needed so that lambda_1 >= l(lambda).
BoxPartition abelian_shape(const DyckGraph& g);

enum class AscentSequence {
  UpperNeighbors, // a_i = #{j > i adjacent to i}
  LowerNeighbors, // a_i = #{j < i adjacent to i}
};
std::vector<int> ascent_sequence(const DyckGraph& g, AscentSequence kind);

/// Harada-Precup recursion
///   X_G = |Acy_1^q(G)| e_n + sum_{non-edges i<j} q^{a_i+a_j} X_{G-{i,j}}^{+(1,1)}.
SymE harada_precup(const DyckGraph& g, AscentSequence kind);
/// sum_A q^{asc(A)} e_{n-initial(A), initial(A)}.
SymE abelian_qstanley(const DyckGraph& g);
/// sum_j q^j [j]! [n-2j] H_j^{n-j-1}(lambda) e_{n-j,j}; the j = l term falls back
/// to [l]! H_l^{n-l}(lambda) when lambda does not fit in the (n-l-1)-square.
SymE abreu_nigro(const DyckGraph& g);
/// The j-th coefficient above.
QPoly abreu_nigro_coefficient(const DyckGraph& g, int j);
/// q^j [j]! [n-2j] H_j^{n-j-1}(lambda) taken literally for every j; empty when
/// lambda does not fit in the (n-j-1)-square and [n-2j] != 0.
std::optional<QPoly> abreu_nigro_literal_coefficient(const DyckGraph& g, int j);

/// H_k^N(lambda) in the N x N box (generating-function convention); empty when
/// lambda does not fit or k > N.
std::optional<QPoly> square_hit(const BoxPartition& lambda, int box, int k);

/// Whether the factor word[start, start+len) of a Dyck word is an abelian
/// subpath: with (px, py) its starting point and a, b its N and E counts,
/// px + b <= py, h is constant on rows py+1..py+a, and no h(y) lies in
/// [px+1, px+b-1].
bool is_abelian_subpath(const Word& dyck, std::size_t start, std::size_t len);

} // namespace qpath
