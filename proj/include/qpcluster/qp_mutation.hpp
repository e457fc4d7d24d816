#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qpcluster/path_algebra.hpp"
#include "qpcluster/quiver.hpp"
#include "qpcluster/substitution.hpp"

namespace qpc {

/// Quiver with potential. When `degree` is set the QP is graded by the arrow
/// weights of the quiver and W must be homogeneous of that degree.
struct QP {
  Quiver quiver;
  Potential potential;
  std::optional<long long> degree;
};

/// Throws std::invalid_argument if a term is not a cycle of the quiver, or a
/// graded QP is not homogeneous.
void validate_qp(const QP& qp);

/// Grading of a graded QP (throws if ungraded).
Grading qp_grading(const QP& qp);

/// Premutation at s. Exact potentials stay exact; a potential known to
/// length N becomes known to length ceil(2(N+1)/3) - 1.
QP premutate(const QP& qp, Vertex s);

/// Accuracy of a premutated potential whose input is known to length N.
int premutated_valid_to(int n);

struct SplitResult {
  std::vector<std::pair<Label, Label>> trivial;  // cancelling pairs (x, y), W contains x y
  QP reduced;
  Substitution substitution;  // maps the input potential onto trivial + reduced
  int order = 0;
};

/// Splits off the trivial part up to path length `order`. Requires
/// valid_to >= order >= 2. Exact inputs whose elimination terminates give
/// exact reduced potentials.
SplitResult split_reduce(const QP& qp, int order);

/// Outcome of one QP mutation.
struct MutationStep {
  QP premutated;
  SplitResult split;
  std::vector<std::pair<Vertex, Vertex>> remaining_two_cycles;
  const QP& result() const { return split.reduced; }
  bool degenerate() const { return !remaining_two_cycles.empty(); }
};

MutationStep mutate_qp_step(const QP& qp, Vertex s, int order);

class DegenerateMutation : public std::runtime_error {
 public:
  DegenerateMutation(Vertex s, std::vector<std::pair<Vertex, Vertex>> witness);
  Vertex vertex;
  std::vector<std::pair<Vertex, Vertex>> witness;
};

/// Premutate then reduce. Throws DegenerateMutation if a 2-cycle survives.
QP mutate_qp(const QP& qp, Vertex s, int order);

/// ceil((3/2)^t * n).
int required_order(int t, int n);

struct NondegeneracyReport {
  bool nondegenerate = false;
  int working_order = 0;
  std::size_t failed_step = 0;  // 1-based, 0 when nondegenerate
  Vertex failed_vertex = 0;
  std::vector<std::pair<Vertex, Vertex>> witness;
  QP final_qp;
};

/// Mutates along `seq` at the minimal sufficient accuracy (or min_order if
/// larger). With a seed, the potential is replaced by
/// random_potential(Q, working order, seed). Throws std::invalid_argument if
/// the potential is not known to the working order.
NondegeneracyReport check_nondegenerate(const QP& qp, const std::vector<Vertex>& seq,
                                        std::optional<std::uint64_t> rng_seed = std::nullopt, int min_order = 0);

/// Full subquiver on `vertices` with the restricted potential.
QP restrict_qp(const QP& qp, const std::vector<Vertex>& vertices);

/// Attaches acyclic quivers; the potential is unchanged.
QP glue_qp(const QP& qp, const std::vector<TreeAttachment>& trees);

/// Framed QP: one frozen vertex with a weight-0 arrow into `marked`.
QP frame_qp(const QP& qp, Vertex marked);

/// Compares mu_s(restrict(qp)) with restrict(mu_s(qp)) up to the normal form
/// of compare_qps.
bool restrict_and_mutate_commute_check(const QP& qp, const std::vector<Vertex>& sub_vertices, Vertex s,
                                       int order);

}  // namespace qpc
