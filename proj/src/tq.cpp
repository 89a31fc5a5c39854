#include "tqnet/tq.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tqnet {

namespace {

/// Ordered scan over a triple list; an exhausted scan yields the sentinel
/// (forever, forever, zero).
class Scan {
public:
    Scan(const TemporalQuantity& a, const Semiring& sr) : a_(a), sentinel_{kForever, kForever, sr.zero()} {
        advance();
    }

    Time s() const { return cur_.start; }
    Time f() const { return cur_.finish; }
    const Value& v() const { return cur_.value; }
    bool done() const { return cur_.start == kForever; }

    void advance() { cur_ = (i_ < a_.size()) ? a_[i_++] : sentinel_; }
    void clip_start(Time s) { cur_.start = s; }

private:
    const TemporalQuantity& a_;
    Triple sentinel_;
    Triple cur_;
    std::size_t i_ = 0;
};

void validate(const TemporalQuantity& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].start >= a[i].finish)
            throw MalformedQuantityError("empty or reversed interval at index " + std::to_string(i));
        if (i > 0 && a[i - 1].finish > a[i].start)
            throw MalformedQuantityError("overlapping or unsorted triples at index " + std::to_string(i));
    }
}

}  // namespace

TemporalQuantity standardize(const Semiring& sr, const TemporalQuantity& a) {
    validate(a);
    TemporalQuantity out;
    out.reserve(a.size());
    for (const Triple& t : a) {
        if (sr.absorptive() && sr.is_zero(t.value)) continue;
        if (!out.empty() && out.back().finish == t.start && sr.equal(out.back().value, t.value)) {
            out.back().finish = t.finish;
        } else {
            out.push_back(t);
        }
    }
    return out;
}

TemporalQuantity tq_sum(const Semiring& sr, const TemporalQuantity& a, const TemporalQuantity& b) {
    if (a.empty()) return standardize(sr, b);
    if (b.empty()) return standardize(sr, a);
    TemporalQuantity c;
    c.reserve(2 * (a.size() + b.size()));
    Scan pa(a, sr), pb(b, sr);
    while (!pa.done() || !pb.done()) {
        Time sc, fc;
        Value vc;
        if (pa.s() < pb.s()) {
            sc = pa.s();
            vc = pa.v();
            if (pb.s() < pa.f()) {
                fc = pb.s();
                pa.clip_start(pb.s());
            } else {
                fc = pa.f();
                pa.advance();
            }
        } else if (pa.s() == pb.s()) {
            sc = pa.s();
            fc = std::min(pa.f(), pb.f());
            vc = sr.add(pa.v(), pb.v());
            Time fa = pa.f(), fb = pb.f();
            pa.clip_start(fc);
            pb.clip_start(fc);
            if (fa <= fb) pa.advance();
            if (fb <= fa) pb.advance();
        } else {
            sc = pb.s();
            vc = pb.v();
            if (pa.s() < pb.f()) {
                fc = pa.s();
                pb.clip_start(pa.s());
            } else {
                fc = pb.f();
                pb.advance();
            }
        }
        c.push_back({sc, fc, vc});
    }
    return standardize(sr, c);
}

TemporalQuantity tq_prod(const Semiring& sr, const TemporalQuantity& a, const TemporalQuantity& b) {
    if (a.empty() || b.empty()) return {};
    TemporalQuantity c;
    c.reserve(a.size() + b.size());
    Scan pa(a, sr), pb(b, sr);
    while (!pa.done() || !pb.done()) {
        if (pa.f() <= pb.s()) {
            pa.advance();
        } else if (pb.f() <= pa.s()) {
            pb.advance();
        } else {
            Time sc = std::max(pa.s(), pb.s());
            Time fc = std::min(pa.f(), pb.f());
            c.push_back({sc, fc, sr.mul(pa.v(), pb.v())});
            Time fa = pa.f(), fb = pb.f();
            if (fc == fa) pa.advance();
            if (fc == fb) pb.advance();
        }
    }
    return standardize(sr, c);
}

double tq_total(const TemporalQuantity& a) {
    double total = 0.0;
    for (const Triple& t : a) {
        double v = as_scalar(t.value);
        if (v == 0.0) continue;
        if (t.finish == kForever) return v > 0 ? std::numeric_limits<double>::infinity()
                                              : -std::numeric_limits<double>::infinity();
        total += static_cast<double>(t.finish - t.start) * v;
    }
    return total;
}

TemporalQuantity tq_binary(const Semiring& target, const TemporalQuantity& a) {
    TemporalQuantity out;
    out.reserve(a.size());
    for (const Triple& t : a) out.push_back({t.start, t.finish, target.one()});
    return standardize(target, out);
}

TemporalQuantity tq_invert(const TemporalQuantity& a) {
    TemporalQuantity out;
    out.reserve(a.size());
    for (const Triple& t : a) {
        double v = as_scalar(t.value);
        if (v == 0.0) throw DivisionByZeroError("invert of a zero-valued triple");
        out.push_back({t.start, t.finish, std::isinf(v) ? 0.0 : 1.0 / v});
    }
    return standardize(Semiring::combinatorial(), out);
}

TemporalQuantity tq_fill_gaps(const Semiring& sr, const TemporalQuantity& a, Time s, Time f,
                              const Value& fill) {
    if (s >= f) throw MalformedQuantityError("fill window is empty");
    TemporalQuantity out;
    Time pos = s;
    for (const Triple& t : a) {
        Time ts = std::max(t.start, s), tf = std::min(t.finish, f);
        if (ts >= tf) continue;
        if (pos < ts) out.push_back({pos, ts, fill});
        out.push_back({ts, tf, t.value});
        pos = tf;
    }
    if (pos < f) out.push_back({pos, f, fill});
    return standardize(sr, out);
}

TemporalQuantity tq_extract(const Semiring& sr, const TemporalQuantity& p,
                            const TemporalQuantity& a) {
    TemporalQuantity out;
    auto ip = p.begin();
    for (const Triple& t : a) {
        while (ip != p.end() && ip->finish <= t.start) ++ip;
        for (auto jp = ip; jp != p.end() && jp->start < t.finish; ++jp) {
            Time s = std::max(t.start, jp->start), f = std::min(t.finish, jp->finish);
            if (s < f) out.push_back({s, f, t.value});
        }
    }
    return standardize(sr, out);
}

std::optional<Value> tq_at(const TemporalQuantity& a, Time t) {
    auto it = std::upper_bound(a.begin(), a.end(), t,
                               [](Time x, const Triple& tr) { return x < tr.start; });
    if (it == a.begin()) return std::nullopt;
    --it;
    if (t < it->finish) return it->value;
    return std::nullopt;
}

bool tq_covers(const TemporalQuantity& a, Time s, Time f) {
    Time pos = s;
    for (const Triple& t : a) {
        if (t.finish <= pos) continue;
        if (t.start > pos) return false;
        pos = t.finish;
        if (pos >= f) return true;
    }
    return pos >= f;
}

std::string to_string(Time t) {
    if (t == kForever) return "inf";
    return std::to_string(t);
}

std::string to_string(const Value& v) {
    if (const bool* b = std::get_if<bool>(&v)) return *b ? "1" : "0";
    if (const Geodesic* g = std::get_if<Geodesic>(&v)) {
        std::string d = g->dist == Geodesic::kUnreachable ? "inf" : std::to_string(g->dist);
        return "(" + d + ", " + std::to_string(g->count) + ")";
    }
    double x = std::get<double>(v);
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == std::floor(x) && std::abs(x) < 9.0e15) {
        return std::to_string(static_cast<long long>(x));
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string to_string(const TemporalQuantity& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ", ";
        os << "(" << to_string(a[i].start) << ", " << to_string(a[i].finish) << ", "
           << to_string(a[i].value) << ")";
    }
    os << "]";
    return os.str();
}

}  // namespace tqnet
