#include "tqnet/tmatrix.hpp"

#include <algorithm>

namespace tqnet {

namespace {

void check_same_shape(const TemporalMatrix& A, const TemporalMatrix& B) {
    if (A.n() != B.n()) throw DimensionError("matrix sizes differ");
    if (!(A.spec() == B.spec())) throw DimensionError("matrix semirings differ");
}

}  // namespace

TemporalQuantity unit_quantity(const Semiring& spec, TimeHorizon horizon) {
    return {{horizon.t_min, kForever, spec.one()}};
}

TemporalVector vec_const(int n, const Semiring& spec, TimeHorizon horizon,
                         const TemporalQuantity& v) {
    TemporalVector out{spec, horizon, {}};
    out.entries.assign(static_cast<std::size_t>(n), standardize(spec, v));
    return out;
}

TemporalVector vec_sum(const TemporalVector& a, const TemporalVector& b) {
    if (a.n() != b.n()) throw DimensionError("vector lengths differ");
    TemporalVector out{a.spec, a.horizon, {}};
    out.entries.reserve(a.entries.size());
    for (int i = 0; i < a.n(); ++i) out.entries.push_back(tq_sum(a.spec, a.entries[i], b.entries[i]));
    return out;
}

TemporalVector vec_prod(const TemporalVector& a, const TemporalVector& b) {
    if (a.n() != b.n()) throw DimensionError("vector lengths differ");
    TemporalVector out{a.spec, a.horizon, {}};
    out.entries.reserve(a.entries.size());
    for (int i = 0; i < a.n(); ++i) out.entries.push_back(tq_prod(a.spec, a.entries[i], b.entries[i]));
    return out;
}

TemporalVector vec_inv(const TemporalVector& a) {
    TemporalVector out{a.spec, a.horizon, {}};
    out.entries.reserve(a.entries.size());
    for (const auto& e : a.entries) out.entries.push_back(tq_invert(e));
    return out;
}

TemporalVector mat_vec_mul(const TemporalMatrix& A, const TemporalVector& v, Side side) {
    if (A.n() != v.n()) throw DimensionError("matrix and vector sizes differ");
    const Semiring& sr = A.spec();
    TemporalVector out{sr, A.horizon(), {}};
    out.entries.resize(A.n());
    for (int i = 0; i < A.n(); ++i) {
        TemporalQuantity acc;
        for (int j = 0; j < A.n(); ++j) {
            const TemporalQuantity& entry = side == Side::right ? A.at(i, j) : A.at(j, i);
            TemporalQuantity term = side == Side::right ? tq_prod(sr, entry, v.entries[j])
                                                        : tq_prod(sr, v.entries[j], entry);
            acc = tq_sum(sr, acc, term);
        }
        out.entries[i] = std::move(acc);
    }
    return out;
}

TemporalMatrix mat_prod(const TemporalMatrix& A, const TemporalMatrix& B) {
    check_same_shape(A, B);
    const Semiring& sr = A.spec();
    TemporalMatrix P(A.n(), sr, A.horizon());
    for (int i = 0; i < A.n(); ++i) {
        for (int j = 0; j < A.n(); ++j) {
            TemporalQuantity acc;
            for (int k = 0; k < A.n(); ++k) {
                acc = tq_sum(sr, acc, tq_prod(sr, A.at(i, k), B.at(k, j)));
            }
            P.set(i, j, std::move(acc));
        }
    }
    return P;
}

TemporalVector mat_prod_diag(const TemporalMatrix& A, const TemporalMatrix& B) {
    check_same_shape(A, B);
    const Semiring& sr = A.spec();
    TemporalVector out{sr, A.horizon(), {}};
    out.entries.resize(A.n());
    for (int i = 0; i < A.n(); ++i) {
        TemporalQuantity acc;
        for (int k = 0; k < A.n(); ++k) {
            acc = tq_sum(sr, acc, tq_prod(sr, A.at(i, k), B.at(k, i)));
        }
        out.entries[i] = std::move(acc);
    }
    return out;
}

TemporalMatrix mat_power(const TemporalMatrix& A, std::uint64_t k) {
    if (k == 0) throw InvalidInputError("matrix power requires k >= 1");
    TemporalMatrix base = A;
    // peel the lowest set bit so no identity matrix is needed
    while ((k & 1) == 0) {
        base = mat_prod(base, base);
        k >>= 1;
    }
    TemporalMatrix result = base;
    k >>= 1;
    while (k > 0) {
        base = mat_prod(base, base);
        if (k & 1) result = mat_prod(result, base);
        k >>= 1;
    }
    return result;
}

TemporalMatrix mat_closure(const TemporalMatrix& A, bool strict) {
    const Semiring& sr = A.spec();
    if (!sr.absorptive())
        throw UnsupportedClosureError("matrix closure needs an absorptive semiring");
    TemporalMatrix C = A;
    const TemporalQuantity unit = unit_quantity(sr, A.horizon());
    for (int k = 0; k < A.n(); ++k) {
        for (int u = 0; u < A.n(); ++u) {
            for (int v = 0; v < A.n(); ++v) {
                C.set(u, v, tq_sum(sr, C.at(u, v), tq_prod(sr, C.at(u, k), C.at(k, v))));
            }
        }
        if (!strict) C.set(k, k, tq_sum(sr, unit, C.at(k, k)));
    }
    return C;
}

TemporalMatrix mat_binary(const TemporalMatrix& A) {
    return mat_with_value(A, A.spec(), A.spec().one());
}

TemporalMatrix mat_transpose(const TemporalMatrix& A) {
    TemporalMatrix T(A.n(), A.spec(), A.horizon());
    for (int u = 0; u < A.n(); ++u)
        for (int v = 0; v < A.n(); ++v) T.set(v, u, A.at(u, v));
    return T;
}

TemporalMatrix mat_symmetrize(const TemporalMatrix& A) {
    TemporalMatrix S(A.n(), A.spec(), A.horizon());
    for (int u = 0; u < A.n(); ++u)
        for (int v = 0; v < A.n(); ++v) S.set(u, v, tq_sum(A.spec(), A.at(u, v), A.at(v, u)));
    return S;
}

TemporalMatrix mat_set_diag(const TemporalMatrix& A, const TemporalQuantity& c) {
    TemporalMatrix D = A;
    TemporalQuantity cs = standardize(A.spec(), c);
    for (int u = 0; u < A.n(); ++u) D.set(u, u, cs);
    return D;
}

TemporalMatrix mat_intersect(const TemporalMatrix& A, const TemporalMatrix& B) {
    check_same_shape(A, B);
    TemporalMatrix C(A.n(), A.spec(), A.horizon());
    for (int u = 0; u < A.n(); ++u)
        for (int v = 0; v < A.n(); ++v) C.set(u, v, tq_prod(A.spec(), A.at(u, v), B.at(u, v)));
    return C;
}

TemporalMatrix mat_extract(const TemporalPartition& q, const TemporalMatrix& A) {
    if (q.n() != A.n()) throw DimensionError("partition and matrix sizes differ");
    TemporalMatrix B(A.n(), A.spec(), A.horizon());
    Semiring reach = Semiring::reachability();
    for (int u = 0; u < A.n(); ++u) {
        for (int v = 0; v < A.n(); ++v) {
            TemporalQuantity mask =
                tq_prod(reach, tq_binary(reach, q.entries[u]), tq_binary(reach, q.entries[v]));
            B.set(u, v, tq_extract(A.spec(), mask, A.at(u, v)));
        }
    }
    return B;
}

TemporalMatrix mat_with_value(const TemporalMatrix& A, const Semiring& spec, const Value& v) {
    TemporalMatrix B(A.n(), spec, A.horizon());
    for (int u = 0; u < A.n(); ++u) {
        for (int w = 0; w < A.n(); ++w) {
            TemporalQuantity q;
            q.reserve(A.at(u, w).size());
            for (const Triple& t : A.at(u, w)) q.push_back({t.start, t.finish, v});
            B.set(u, w, standardize(spec, q));
        }
    }
    return B;
}

TemporalMatrix mat_cast_scalar(const TemporalMatrix& A, const Semiring& spec) {
    TemporalMatrix B(A.n(), spec, A.horizon());
    for (int u = 0; u < A.n(); ++u) {
        for (int w = 0; w < A.n(); ++w) {
            for (const Triple& t : A.at(u, w)) as_scalar(t.value);
            B.set(u, w, standardize(spec, A.at(u, w)));
        }
    }
    return B;
}

TemporalPartition min_time(const NetworkDocument& doc) {
    Semiring reach = Semiring::reachability();
    TemporalPartition p;
    p.horizon = doc.horizon;
    p.entries.resize(doc.nodes.size());
    std::vector<TemporalQuantity> acc(doc.nodes.size());
    for (const LinkRecord& l : doc.links) {
        TemporalQuantity b = tq_binary(reach, l.tq);
        acc[l.from - 1] = tq_sum(reach, acc[l.from - 1], b);
        if (l.to != l.from) acc[l.to - 1] = tq_sum(reach, acc[l.to - 1], b);
    }
    Semiring comb = Semiring::combinatorial();
    for (std::size_t i = 0; i < acc.size(); ++i) p.entries[i] = tq_binary(comb, acc[i]);
    return p;
}

TemporalMatrix matrix_from_network(const NetworkDocument& doc) {
    Semiring comb = Semiring::combinatorial();
    TemporalMatrix A(doc.node_count(), comb, doc.horizon);
    for (const LinkRecord& l : doc.links) {
        int u = l.from - 1, v = l.to - 1;
        A.set(u, v, tq_sum(comb, A.at(u, v), l.tq));
        if (!l.directed && u != v) A.set(v, u, tq_sum(comb, A.at(v, u), l.tq));
    }
    return A;
}

}  // namespace tqnet
