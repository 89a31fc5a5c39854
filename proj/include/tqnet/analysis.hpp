#pragma once

#include "tqnet/tmatrix.hpp"

namespace tqnet {

enum class Direction { in, out };
enum class CoOccurrenceMode { instantaneous, cumulative };

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Temporal in/out degree vector over the combinatorial semiring:
/// in = e * A (left product), out = A * e (right product).
TemporalVector degrees(const TemporalMatrix& A, Direction direction);

/// Activity of a node group on another: the combinatorial sum of a_uv over
/// u in v1, v in v2. Node indices are 0-based.
TemporalQuantity activity(const TemporalMatrix& A, const std::vector<int>& v1,
                          const std::vector<int>& v2);

/// Participant co-occurrence matrix of a dated two-mode event table.
TemporalMatrix co_occurrence(const EventTable& table, CoOccurrenceMode mode);

/// Clustering coefficients. type 1: standard, type 2: corrected with the
/// temporal maximum degree, type 3: corrected with the overall maximum degree.
/// Nodes with fewer than two neighbors get an empty entry.
TemporalVector clus_coef(const TemporalMatrix& A, int type);

/// In/out degrees of the strict reachability matrix R = A (.) A*.
TemporalVector reach_degrees(const TemporalMatrix& A, Direction direction);

struct ConnectivityResult {
    TemporalMatrix matrix;
    TemporalPartition partition;
};

/// W = (A u A^T)* (strict), with the derived temporal partition.
ConnectivityResult weak_connectivity(const TemporalMatrix& A, std::uint64_t seed = kDefaultSeed);

/// S = A* n (A*)^T (strict), with the derived temporal partition.
ConnectivityResult strong_connectivity(const TemporalMatrix& A, std::uint64_t seed = kDefaultSeed);

/// Turns a temporal equivalence matrix into a partition by multiplying with
/// shuffled integer constants; re-draws the shuffle on a sum collision.
TemporalPartition eq_mat_to_part(const TemporalMatrix& E, std::uint64_t seed = kDefaultSeed);

/// Relabels classes 1, 2, ... in order of first appearance.
TemporalPartition renumber_partition(const TemporalPartition& p);

/// Temporal closeness. type 1: output, type 2: all, type 3: input.
TemporalVector closeness(const TemporalMatrix& A, int type);

/// Temporal betweenness via the strict geodetic closure.
TemporalVector betweenness(const TemporalMatrix& A);

/// Pathfinder skeleton PFnet(W, r, q): keeps a link exactly where its weight
/// equals the best r-norm value over walks of length <= q.
TemporalMatrix path_finder(const TemporalMatrix& W, double r,
                           std::uint64_t q = Semiring::kUnboundedWalks);

/// Attraction coefficient: normalized share of in-neighbors' activity
/// directed at the node; values lie in [0, 1].
TemporalVector attraction(const TemporalMatrix& A);

}  // namespace tqnet
