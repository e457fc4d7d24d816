#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qpcluster/rational.hpp"
#include "qpcluster/word.hpp"

namespace qpc {

/// 1-based vertex index. Principal vertices are 1..m, frozen ones m+1..n.
using Vertex = int;

/// Integer vector indexed by vertices (position i holds vertex i+1).
using DimensionVector = std::vector<long long>;

/// n x m matrix with b_ij = #(j -> i) - #(i -> j); row i, column j, 0-based storage.
using ExchangeMatrix = IntMatrix;

struct Arrow {
  Label label;
  Vertex source = 0;
  Vertex target = 0;
  int weight = 1;  // grading weight

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver without loops. Arrow order is part of the value: mutation
/// and printing are deterministic in it.
class Quiver {
 public:
  Quiver() = default;
  /// Throws std::invalid_argument on loops, duplicate labels, bad indices or
  /// a principal count outside 1..n.
  Quiver(int vertex_count, int principal_count, std::vector<Arrow> arrows);

  int vertex_count() const { return n_; }
  int principal_count() const { return m_; }
  bool is_principal(Vertex v) const { return v >= 1 && v <= m_; }
  bool is_frozen(Vertex v) const { return v > m_ && v <= n_; }
  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }

  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t arrow_count() const { return arrows_.size(); }

  bool has_arrow(std::string_view label) const;
  const Arrow& arrow(std::string_view label) const;  // throws std::out_of_range

  /// Number of arrows from -> to.
  int multiplicity(Vertex from, Vertex to) const;
  std::vector<const Arrow*> arrows_between(Vertex from, Vertex to) const;
  std::vector<const Arrow*> arrows_into(Vertex v) const;
  std::vector<const Arrow*> arrows_out_of(Vertex v) const;

  /// Unordered vertex pairs {i < j} carrying arrows in both directions.
  std::vector<std::pair<Vertex, Vertex>> two_cycles() const;
  bool is_two_cycle_free() const { return two_cycles().empty(); }
  bool has_two_cycle_through(Vertex v) const;

  bool is_acyclic() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.arrows_ == b.arrows_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// b_ij = (#arrows j -> i) - (#arrows i -> j), i in 1..n, j in 1..m.
ExchangeMatrix exchange_matrix(const Quiver& q);

/// Fomin-Zelevinsky matrix mutation at column s (1-based).
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, Vertex s);

/// Quiver mutation: composites [a.b], reversal a -> a*, then the deletion
/// step cancelling opposite pairs maximally, smallest labels first.
Quiver mutate_quiver(const Quiver& q, Vertex s);

/// Same vertex set, same arrow multiset per (source, target), ignoring labels.
bool same_up_to_relabeling(const Quiver& a, const Quiver& b);

/// sum_i a_i b_i - sum_{arrows} a_{s} b_{t}.
long long ringel_form(const Quiver& q, const DimensionVector& a, const DimensionVector& b);

/// Appends a frozen vertex v with one weight-0 arrow v -> marked.
Quiver frame_quiver(const Quiver& q, Vertex marked);

struct TreeAttachment {
  Quiver tree;          // must be acyclic
  Vertex tree_vertex;   // vertex of `tree` identified with...
  Vertex host_vertex;   // ...this vertex of the host quiver
};

/// Disjoint union with the listed identifications. Tree vertices other than
/// the attachment point are appended as frozen vertices, in attachment
/// order; tree arrow labels are prefixed "t<r>." (r is the 1-based index).
Quiver glue_acyclic(const Quiver& q, const std::vector<TreeAttachment>& trees);

/// Full subquiver on `vertices` (given in the original numbering),
/// renumbered in increasing order. Vertices <= m stay principal.
Quiver induced_subquiver(const Quiver& q, const std::vector<Vertex>& vertices);

/// Arrow union on a shared vertex set. Labels must be disjoint.
Quiver direct_sum(const Quiver& a, const Quiver& b);

/// Vertex path of a word read in traversal order: s(w_last), ..., t(w_0).
std::vector<Vertex> traversed_vertices(const Quiver& q, const Word& w);

/// True if `w` closes into a cycle of q (length >= 1).
bool is_cycle(const Quiver& q, const Word& w);

/// Directed cycles visiting no vertex twice, length 2..max_len, as canonical
/// words, sorted by (length, word).
std::vector<Word> enumerate_simple_cycles(const Quiver& q, int max_len);

}  // namespace qpc
