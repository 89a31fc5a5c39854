#include "tqnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace tqnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_combinatorial(const TemporalMatrix& A, const char* op) {
    if (A.spec().kind() != SemiringKind::combinatorial)
        throw UnsupportedError(std::string(op) + " needs a combinatorial matrix");
}

void require_nonnegative(const TemporalMatrix& A, const char* op) {
    for (int u = 0; u < A.n(); ++u)
        for (int v = 0; v < A.n(); ++v)
            for (const Triple& t : A.at(u, v))
                if (as_scalar(t.value) < 0.0)
                    throw InvalidInputError(std::string(op) + " needs nonnegative link values");
}

TemporalVector unit_vector(const TemporalMatrix& A) {
    return vec_const(A.n(), A.spec(), A.horizon(), unit_quantity(A.spec(), A.horizon()));
}

/// Temporal maximum of the entries of a combinatorial degree vector,
/// obtained by summing over the maxmin semiring.
TemporalQuantity maxmin_fold(const TemporalVector& deg) {
    Semiring mm = Semiring::maxmin();
    TemporalQuantity delta;
    for (const auto& d : deg.entries) delta = tq_sum(mm, delta, d);
    return delta;
}

double overall_max(const TemporalQuantity& delta) {
    double m = 0.0;
    for (const Triple& t : delta) m = std::max(m, as_scalar(t.value));
    return m;
}

/// Undirected skeleton degree of every node: the row sums of the binarized
/// symmetrized matrix with a zero diagonal.
TemporalVector skeleton_degrees(const TemporalMatrix& A, TemporalMatrix* skeleton_out,
                                TemporalMatrix* binary_out) {
    TemporalMatrix B = mat_set_diag(mat_binary(A), {});
    TemporalMatrix S = mat_binary(mat_symmetrize(B));
    TemporalVector deg = mat_vec_mul(S, unit_vector(A), Side::right);
    if (skeleton_out) *skeleton_out = S;
    if (binary_out) *binary_out = B;
    return deg;
}

/// Elementary-segment sweep over the union of triple boundaries.
std::vector<Time> boundaries(std::initializer_list<const TemporalQuantity*> qs) {
    std::set<Time> pts;
    for (const TemporalQuantity* q : qs)
        for (const Triple& t : *q) {
            pts.insert(t.start);
            pts.insert(t.finish);
        }
    return {pts.begin(), pts.end()};
}

/// The temporal form of: if d[u,w] = d[u,v] + d[v,w] then contribute
/// n[u,v] * n[v,w] / n[u,w].
TemporalQuantity between(const TemporalQuantity& uv, const TemporalQuantity& vw,
                         const TemporalQuantity& uw) {
    if (uv.empty() || vw.empty() || uw.empty()) return {};
    TemporalQuantity c;
    std::vector<Time> pts = boundaries({&uv, &vw, &uw});
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Time s = pts[i], f = pts[i + 1];
        auto a = tq_at(uv, s), b = tq_at(vw, s), z = tq_at(uw, s);
        if (!a || !b || !z) continue;
        Geodesic ga = as_geodesic(*a), gb = as_geodesic(*b), gz = as_geodesic(*z);
        if (ga.dist + gb.dist != gz.dist) continue;
        double val = static_cast<double>(ga.count) * static_cast<double>(gb.count) /
                     static_cast<double>(gz.count);
        c.push_back({s, f, val});
    }
    return standardize(Semiring::combinatorial(), c);
}

/// Alg. 9 merge: keep the sub-intervals of `a` where `b` carries an equal value.
TemporalQuantity pf_check(const Semiring& pf, const TemporalQuantity& a,
                          const TemporalQuantity& b) {
    if (a.empty() || b.empty()) return a;
    TemporalQuantity c;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia].finish <= b[ib].start) {
            ++ia;
        } else if (b[ib].finish <= a[ia].start) {
            ++ib;
        } else {
            Time s = std::max(a[ia].start, b[ib].start);
            Time f = std::min(a[ia].finish, b[ib].finish);
            if (pf.equal(a[ia].value, b[ib].value)) c.push_back({s, f, a[ia].value});
            if (f == a[ia].finish) ++ia;
            if (f == b[ib].finish) ++ib;
        }
    }
    return standardize(Semiring::combinatorial(), c);
}

}  // namespace

TemporalVector degrees(const TemporalMatrix& A, Direction direction) {
    require_combinatorial(A, "degrees");
    return mat_vec_mul(A, unit_vector(A), direction == Direction::out ? Side::right : Side::left);
}

TemporalQuantity activity(const TemporalMatrix& A, const std::vector<int>& v1,
                          const std::vector<int>& v2) {
    require_combinatorial(A, "activity");
    Semiring comb = A.spec();
    TemporalQuantity acc;
    for (int u : v1)
        for (int v : v2) acc = tq_sum(comb, acc, A.at(u, v));
    return acc;
}

TemporalMatrix co_occurrence(const EventTable& table, CoOccurrenceMode mode) {
    Semiring comb = Semiring::combinatorial();
    TimeHorizon horizon{table.first, table.last + 1};
    TemporalMatrix C(table.participant_count, comb, horizon);
    for (const Event& e : table.events) {
        if (e.date < table.first || e.date > table.last)
            throw InvalidInputError("event '" + e.id + "' dated outside the horizon");
        Time finish = mode == CoOccurrenceMode::instantaneous ? e.date + 1 : table.last + 1;
        TemporalQuantity unit{{e.date, finish, 1.0}};
        for (int p : e.participants)
            for (int q : e.participants)
                C.set(p - 1, q - 1, tq_sum(comb, C.at(p - 1, q - 1), unit));
    }
    return C;
}

TemporalVector clus_coef(const TemporalMatrix& A, int type) {
    require_combinatorial(A, "clus_coef");
    if (type < 1 || type > 3) throw InvalidInputError("clus_coef type must be 1, 2 or 3");
    Semiring comb = A.spec();
    int n = A.n();
    TemporalMatrix S(n, comb, A.horizon()), B(n, comb, A.horizon());
    TemporalVector deg = skeleton_degrees(A, &S, &B);
    TemporalVector ve =
        vec_const(n, comb, A.horizon(), {{A.horizon().t_min, kForever, -1.0}});

    TemporalVector fac{comb, A.horizon(), {}};
    if (type == 1) {
        fac = vec_prod(deg, vec_sum(deg, ve));
    } else {
        TemporalQuantity delta = maxmin_fold(deg);
        if (type == 3) {
            double d = overall_max(delta);
            delta = d > 0 ? TemporalQuantity{{A.horizon().t_min, kForever, d}} : TemporalQuantity{};
        }
        TemporalVector degm = vec_sum(deg, ve);
        fac.entries.reserve(degm.entries.size());
        for (const auto& d : degm.entries) fac.entries.push_back(tq_prod(comb, delta, d));
    }
    // deg < 2 means fac = 0 there; those intervals yield C(v) = 0, kept empty
    for (auto& f : fac.entries) {
        TemporalQuantity masked;
        for (const Triple& t : f)
            if (as_scalar(t.value) > 0.0) masked.push_back(t);
        f = standardize(comb, masked);
    }
    TemporalVector tri = mat_prod_diag(mat_prod(S, B), S);
    return vec_prod(vec_inv(fac), tri);
}

TemporalVector reach_degrees(const TemporalMatrix& A, Direction direction) {
    TemporalMatrix R = mat_closure(mat_with_value(A, Semiring::reachability(), true), true);
    return degrees(mat_with_value(R, Semiring::combinatorial(), 1.0), direction);
}

TemporalPartition eq_mat_to_part(const TemporalMatrix& E, std::uint64_t seed) {
    Semiring comb = Semiring::combinatorial();
    int n = E.n();
    TemporalMatrix Ec = mat_with_value(E, comb, 1.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<int> labels(n);
        std::iota(labels.begin(), labels.end(), 1);
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
        std::shuffle(labels.begin(), labels.end(), rng);

        TemporalVector c{comb, E.horizon(), {}};
        c.entries.reserve(n);
        for (int i = 0; i < n; ++i)
            c.entries.push_back({{E.horizon().t_min, kForever, static_cast<double>(labels[i])}});
        TemporalVector p = mat_vec_mul(Ec, c, Side::right);

        // injectivity check: equal sums must mean equal classes
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n && ok; ++v) {
                std::vector<Time> pts = boundaries({&p.entries[u], &p.entries[v]});
                for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                    auto a = tq_at(p.entries[u], pts[i]);
                    auto b = tq_at(p.entries[v], pts[i]);
                    if (!a || !b || as_scalar(*a) != as_scalar(*b)) continue;
                    if (!tq_covers(E.at(u, v), pts[i], pts[i + 1])) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (!ok) continue;

        TemporalPartition part;
        part.horizon = E.horizon();
        part.entries = std::move(p.entries);
        return renumber_partition(part);
    }
    throw InvalidInputError("could not find an injective class labeling");
}

TemporalPartition renumber_partition(const TemporalPartition& p) {
    TemporalPartition q;
    q.horizon = p.horizon;
    q.entries.reserve(p.entries.size());
    std::map<double, double> relabel;
    Semiring comb = Semiring::combinatorial();
    for (const TemporalQuantity& a : p.entries) {
        TemporalQuantity r;
        r.reserve(a.size());
        for (const Triple& t : a) {
            double c = as_scalar(t.value);
            auto it = relabel.find(c);
            if (it == relabel.end())
                it = relabel.emplace(c, static_cast<double>(relabel.size() + 1)).first;
            r.push_back({t.start, t.finish, it->second});
        }
        q.entries.push_back(standardize(comb, r));
    }
    return q;
}

ConnectivityResult weak_connectivity(const TemporalMatrix& A, std::uint64_t seed) {
    TemporalMatrix bin = mat_with_value(A, Semiring::reachability(), true);
    TemporalMatrix W = mat_closure(mat_symmetrize(bin), true);
    return {W, eq_mat_to_part(W, seed)};
}

ConnectivityResult strong_connectivity(const TemporalMatrix& A, std::uint64_t seed) {
    TemporalMatrix bin = mat_with_value(A, Semiring::reachability(), true);
    TemporalMatrix closure = mat_closure(bin, true);
    TemporalMatrix S = mat_intersect(closure, mat_transpose(closure));
    return {S, eq_mat_to_part(S, seed)};
}

TemporalVector closeness(const TemporalMatrix& A, int type) {
    require_combinatorial(A, "closeness");
    require_nonnegative(A, "closeness");
    if (type < 1 || type > 3) throw InvalidInputError("closeness type must be 1, 2 or 3");
    int n = A.n();
    Semiring comb = A.spec();
    TemporalMatrix D = mat_closure(mat_cast_scalar(A, Semiring::shortest_path()), true);
    Time s = A.horizon().t_min, f = A.horizon().t_max;
    double k = static_cast<double>(2 - std::abs(type - 2)) * (n - 1);
    TemporalQuantity fac{{s, kForever, k}};
    TemporalVector cl{comb, A.horizon(), {}};
    cl.entries.resize(n);
    for (int v = 0; v < n; ++v) {
        TemporalQuantity d;
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            if (type < 3) d = tq_sum(comb, d, tq_fill_gaps(comb, D.at(v, u), s, f, kInf));
            if (type > 1) d = tq_sum(comb, d, tq_fill_gaps(comb, D.at(u, v), s, f, kInf));
        }
        cl.entries[v] = tq_prod(comb, fac, tq_invert(d));
    }
    return cl;
}

TemporalVector betweenness(const TemporalMatrix& A) {
    require_combinatorial(A, "betweenness");
    require_nonnegative(A, "betweenness");
    int n = A.n();
    Semiring comb = A.spec();
    TemporalVector b{comb, A.horizon(), {}};
    b.entries.resize(n);
    if (n < 3) return b;
    TemporalMatrix G = mat_with_value(A, Semiring::geodetic(), Geodesic{1, 1});
    TemporalMatrix C = mat_closure(G, true);
    TemporalQuantity norm{{A.horizon().t_min, kForever,
                           1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2))}};
    for (int v = 0; v < n; ++v) {
        TemporalQuantity r;
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            for (int w = 0; w < n; ++w) {
                if (w == v || w == u) continue;
                r = tq_sum(comb, r, between(C.at(u, v), C.at(v, w), C.at(u, w)));
            }
        }
        b.entries[v] = tq_prod(comb, norm, r);
    }
    return b;
}

TemporalMatrix path_finder(const TemporalMatrix& W, double r, std::uint64_t q) {
    require_combinatorial(W, "path_finder");
    require_nonnegative(W, "path_finder");
    Semiring pf = Semiring::pathfinder(r, q);
    TemporalMatrix Wp = mat_cast_scalar(W, pf);
    TemporalMatrix Z = q > static_cast<std::uint64_t>(W.n())
                           ? mat_closure(Wp, false)
                           : mat_power(mat_set_diag(Wp, unit_quantity(pf, W.horizon())), q);
    TemporalMatrix PF(W.n(), W.spec(), W.horizon());
    for (int u = 0; u < W.n(); ++u)
        for (int v = 0; v < W.n(); ++v) PF.set(u, v, pf_check(pf, W.at(u, v), Z.at(u, v)));
    return PF;
}

TemporalVector attraction(const TemporalMatrix& A) {
    require_combinatorial(A, "attraction");
    int n = A.n();
    Semiring comb = A.spec();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (const Triple& t : A.at(u, v))
                if (!(as_scalar(t.value) > 0.0))
                    throw InvalidInputError("attraction needs positive link values");

    TemporalVector att{comb, A.horizon(), {}};
    att.entries.resize(n);
    double delta = overall_max(maxmin_fold(skeleton_degrees(A, nullptr, nullptr)));
    if (delta <= 0.0) return att;

    Time s = A.horizon().t_min, f = A.horizon().t_max;
    std::vector<TemporalQuantity> inv_act(n);
    for (int v = 0; v < n; ++v) {
        TemporalQuantity act;
        for (int w = 0; w < n; ++w)
            if (w != v) act = tq_sum(comb, act, A.at(v, w));
        inv_act[v] = tq_invert(tq_fill_gaps(comb, act, s, f, kInf));
    }
    TemporalQuantity norm{{s, kForever, 1.0 / delta}};
    for (int u = 0; u < n; ++u) {
        TemporalQuantity acc;
        for (int v = 0; v < n; ++v)
            if (v != u) acc = tq_sum(comb, acc, tq_prod(comb, A.at(v, u), inv_act[v]));
        att.entries[u] = tq_prod(comb, norm, acc);
    }
    return att;
}

}  // namespace tqnet
