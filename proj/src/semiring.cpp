#include "tqnet/semiring.hpp"

#include <algorithm>
#include <cmath>

namespace tqnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r) || r == Geodesic::kUnreachable)
        throw ArithmeticOverflowError("geodesic count sum");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflowError("geodesic count product");
    return r;
}

}  // namespace

std::string to_string(SemiringKind kind) {
    switch (kind) {
        case SemiringKind::combinatorial: return "combinatorial";
        case SemiringKind::reachability: return "reachability";
        case SemiringKind::shortest_path: return "shortest_path";
        case SemiringKind::maxmin: return "maxmin";
        case SemiringKind::geodetic: return "geodetic";
        case SemiringKind::pathfinder: return "pathfinder";
    }
    throw InvalidValueError("unknown semiring kind");
}

SemiringKind semiring_kind_from_string(const std::string& name) {
    if (name == "combinatorial") return SemiringKind::combinatorial;
    if (name == "reachability") return SemiringKind::reachability;
    if (name == "shortest_path") return SemiringKind::shortest_path;
    if (name == "maxmin") return SemiringKind::maxmin;
    if (name == "geodetic") return SemiringKind::geodetic;
    if (name == "pathfinder") return SemiringKind::pathfinder;
    throw InvalidValueError("unknown semiring name '" + name + "'");
}

double as_scalar(const Value& v) {
    if (const double* p = std::get_if<double>(&v)) return *p;
    throw InvalidValueError("expected a scalar value");
}

bool as_flag(const Value& v) {
    if (const bool* p = std::get_if<bool>(&v)) return *p;
    throw InvalidValueError("expected a boolean value");
}

Geodesic as_geodesic(const Value& v) {
    if (const Geodesic* p = std::get_if<Geodesic>(&v)) return *p;
    throw InvalidValueError("expected a geodetic (d, n) value");
}

Semiring Semiring::combinatorial() { return Semiring(SemiringKind::combinatorial); }
Semiring Semiring::reachability() { return Semiring(SemiringKind::reachability); }
Semiring Semiring::shortest_path() { return Semiring(SemiringKind::shortest_path); }
Semiring Semiring::maxmin() { return Semiring(SemiringKind::maxmin); }
Semiring Semiring::geodetic() { return Semiring(SemiringKind::geodetic); }

Semiring Semiring::pathfinder(double r, std::uint64_t q) {
    if (!(r > 0.0)) throw InvalidValueError("pathfinder r must be positive");
    if (q == 0) throw InvalidValueError("pathfinder q must be positive");
    return Semiring(SemiringKind::pathfinder, r, q);
}

Value Semiring::zero() const {
    switch (kind_) {
        case SemiringKind::combinatorial: return 0.0;
        case SemiringKind::reachability: return false;
        case SemiringKind::shortest_path: return kInf;
        case SemiringKind::maxmin: return -kInf;
        case SemiringKind::geodetic: return Geodesic{Geodesic::kUnreachable, 0};
        case SemiringKind::pathfinder: return kInf;
    }
    throw InvalidValueError("unknown semiring kind");
}

Value Semiring::one() const {
    switch (kind_) {
        case SemiringKind::combinatorial: return 1.0;
        case SemiringKind::reachability: return true;
        case SemiringKind::shortest_path: return 0.0;
        case SemiringKind::maxmin: return kInf;
        case SemiringKind::geodetic: return Geodesic{0, 1};
        case SemiringKind::pathfinder: return 0.0;
    }
    throw InvalidValueError("unknown semiring kind");
}

double Semiring::check_scalar(const Value& v) const { return as_scalar(v); }

Value Semiring::add(const Value& x, const Value& y) const {
    switch (kind_) {
        case SemiringKind::combinatorial: return check_scalar(x) + check_scalar(y);
        case SemiringKind::reachability: return as_flag(x) || as_flag(y);
        case SemiringKind::shortest_path:
        case SemiringKind::pathfinder: return std::min(check_scalar(x), check_scalar(y));
        case SemiringKind::maxmin: return std::max(check_scalar(x), check_scalar(y));
        case SemiringKind::geodetic: {
            Geodesic a = as_geodesic(x), b = as_geodesic(y);
            if (a.dist < b.dist) return a;
            if (b.dist < a.dist) return b;
            if (a.dist == Geodesic::kUnreachable) return a;
            return Geodesic{a.dist, checked_add(a.count, b.count)};
        }
    }
    throw InvalidValueError("unknown semiring kind");
}

Value Semiring::mul(const Value& x, const Value& y) const {
    switch (kind_) {
        case SemiringKind::combinatorial: return check_scalar(x) * check_scalar(y);
        case SemiringKind::reachability: return as_flag(x) && as_flag(y);
        case SemiringKind::shortest_path: return check_scalar(x) + check_scalar(y);
        case SemiringKind::maxmin: return std::min(check_scalar(x), check_scalar(y));
        case SemiringKind::geodetic: {
            Geodesic a = as_geodesic(x), b = as_geodesic(y);
            if (a.dist == Geodesic::kUnreachable || b.dist == Geodesic::kUnreachable)
                return Geodesic{Geodesic::kUnreachable, 0};
            std::uint64_t d;
            if (__builtin_add_overflow(a.dist, b.dist, &d) || d == Geodesic::kUnreachable)
                throw ArithmeticOverflowError("geodesic distance sum");
            return Geodesic{d, checked_mul(a.count, b.count)};
        }
        case SemiringKind::pathfinder: {
            double a = check_scalar(x), b = check_scalar(y);
            if (std::isinf(r_)) return std::max(a, b);
            if (std::isinf(a) || std::isinf(b)) return kInf;
            if (r_ == 1.0) return a + b;
            return std::pow(std::pow(a, r_) + std::pow(b, r_), 1.0 / r_);
        }
    }
    throw InvalidValueError("unknown semiring kind");
}

Value Semiring::star(const Value& x) const {
    if (!absorptive())
        throw UnsupportedClosureError("closure is only defined for absorptive semirings");
    (void)x;
    return one();
}

bool Semiring::equal(const Value& x, const Value& y) const {
    if (kind_ == SemiringKind::pathfinder) {
        double a = check_scalar(x), b = check_scalar(y);
        if (a == b) return true;
        if (std::isinf(a) || std::isinf(b)) return false;
        return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
    }
    return x == y;
}

}  // namespace tqnet
