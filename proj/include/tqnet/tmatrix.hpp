#pragma once

#include <vector>

#include "tqnet/network.hpp"
#include "tqnet/tq.hpp"

namespace tqnet {

/// Dense n x n matrix of temporal quantities over a fixed semiring.
/// Entries are kept in standard form; an empty entry means "no link".
class TemporalMatrix {
public:
    TemporalMatrix(int n, Semiring spec, TimeHorizon horizon)
        : n_(n), spec_(std::move(spec)), horizon_(horizon), cells_(static_cast<std::size_t>(n) * n) {}

    int n() const { return n_; }
    const Semiring& spec() const { return spec_; }
    const TimeHorizon& horizon() const { return horizon_; }

    const TemporalQuantity& at(int u, int v) const { return cells_[idx(u, v)]; }
    void set(int u, int v, TemporalQuantity q) { cells_[idx(u, v)] = std::move(q); }

private:
    std::size_t idx(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) throw DimensionError("matrix index out of range");
        return static_cast<std::size_t>(u) * n_ + v;
    }

    int n_;
    Semiring spec_;
    TimeHorizon horizon_;
    std::vector<TemporalQuantity> cells_;
};

struct TemporalVector {
    Semiring spec;
    TimeHorizon horizon;
    std::vector<TemporalQuantity> entries;

    int n() const { return static_cast<int>(entries.size()); }
};

/// Node-indexed temporal quantity whose values are natural class labels.
struct TemporalPartition {
    TimeHorizon horizon{0, 1};
    std::vector<TemporalQuantity> entries;

    int n() const { return static_cast<int>(entries.size()); }
};

enum class Side { left, right };

// -- vector helpers -----------------------------------------------------------

TemporalVector vec_const(int n, const Semiring& spec, TimeHorizon horizon,
                         const TemporalQuantity& v);
TemporalVector vec_sum(const TemporalVector& a, const TemporalVector& b);
TemporalVector vec_prod(const TemporalVector& a, const TemporalVector& b);
TemporalVector vec_inv(const TemporalVector& a);

// -- matrix products and closure ----------------------------------------------

/// Left product u_j = sum_i v_i * a_ij, or right product v_i = sum_j a_ij * u_j.
TemporalVector mat_vec_mul(const TemporalMatrix& A, const TemporalVector& v, Side side);
TemporalMatrix mat_prod(const TemporalMatrix& A, const TemporalMatrix& B);
/// Diagonal of mat_prod(A, B) without the off-diagonal work.
TemporalVector mat_prod_diag(const TemporalMatrix& A, const TemporalMatrix& B);
/// A^k by repeated squaring; k >= 1.
TemporalMatrix mat_power(const TemporalMatrix& A, std::uint64_t k);
/// Fletcher closure over an absorptive semiring; strict excludes the empty walk.
TemporalMatrix mat_closure(const TemporalMatrix& A, bool strict);

// -- structural transforms ----------------------------------------------------

TemporalMatrix mat_binary(const TemporalMatrix& A);
TemporalMatrix mat_transpose(const TemporalMatrix& A);
/// S = A (+) A^T.
TemporalMatrix mat_symmetrize(const TemporalMatrix& A);
TemporalMatrix mat_set_diag(const TemporalMatrix& A, const TemporalQuantity& c);
/// Entrywise product (for binary matrices: intersection of activity sets).
TemporalMatrix mat_intersect(const TemporalMatrix& A, const TemporalMatrix& B);
/// Masks every entry (u, v) to the activity set of q(u) intersected with q(v).
TemporalMatrix mat_extract(const TemporalPartition& q, const TemporalMatrix& A);

/// Replaces every active interval of every entry with the given value under
/// a (possibly different) semiring. Used to move a matrix between value
/// domains, e.g. to reachability `true` or geodetic (1, 1).
TemporalMatrix mat_with_value(const TemporalMatrix& A, const Semiring& spec, const Value& v);
/// Reinterprets a scalar-valued matrix under another scalar semiring,
/// keeping the values.
TemporalMatrix mat_cast_scalar(const TemporalMatrix& A, const Semiring& spec);

/// Smallest node partition consistent with the links: per node, the union of
/// the binarized incident link quantities.
TemporalPartition min_time(const NetworkDocument& doc);

/// Builds the adjacency matrix of a network document over the combinatorial
/// semiring; undirected links are expanded into arc pairs.
TemporalMatrix matrix_from_network(const NetworkDocument& doc);

/// The full-span unit quantity [(t_min, forever, one)].
TemporalQuantity unit_quantity(const Semiring& spec, TimeHorizon horizon);

}  // namespace tqnet
