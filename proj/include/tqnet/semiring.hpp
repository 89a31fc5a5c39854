#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <variant>

#include "tqnet/errors.hpp"

namespace tqnet {

enum class SemiringKind {
    combinatorial,
    reachability,
    shortest_path,
    maxmin,
    geodetic,
    pathfinder,
};

std::string to_string(SemiringKind kind);
SemiringKind semiring_kind_from_string(const std::string& name);

/// Geodetic value: (length of geodesics, number of geodesics).
/// dist == kUnreachable encodes infinite distance; then count must be 0.
struct Geodesic {
    static constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t dist = kUnreachable;
    std::uint64_t count = 0;

    bool operator==(const Geodesic&) const = default;
};

/// A semiring value. double covers the scalar kinds (combinatorial,
/// shortest_path, maxmin, pathfinder), bool the reachability kind,
/// Geodesic the (d, n) pairs.
using Value = std::variant<double, bool, Geodesic>;

double as_scalar(const Value& v);
bool as_flag(const Value& v);
Geodesic as_geodesic(const Value& v);

/// The active value domain with its operations. Immutable; all member
/// functions are pure and safe to share across threads.
class Semiring {
public:
    static Semiring combinatorial();
    static Semiring reachability();
    static Semiring shortest_path();
    static Semiring maxmin();
    static Semiring geodetic();
    /// r is the Minkowski exponent (may be infinity), q the walk-length cap
    /// (kUnboundedWalks for no cap).
    static Semiring pathfinder(double r, std::uint64_t q);

    static constexpr std::uint64_t kUnboundedWalks = std::numeric_limits<std::uint64_t>::max();

    SemiringKind kind() const { return kind_; }
    double r() const { return r_; }
    std::uint64_t q() const { return q_; }
    bool absorptive() const { return kind_ != SemiringKind::combinatorial; }
    bool closed() const { return absorptive(); }

    Value zero() const;
    Value one() const;

    Value add(const Value& x, const Value& y) const;
    Value mul(const Value& x, const Value& y) const;
    /// a* = 1 for every absorptive kind; throws UnsupportedClosureError otherwise.
    Value star(const Value& x) const;

    /// Value equality; pathfinder values compare with relative tolerance 1e-9,
    /// everything else exactly.
    bool equal(const Value& x, const Value& y) const;
    bool is_zero(const Value& x) const { return equal(x, zero()); }
    bool is_one(const Value& x) const { return equal(x, one()); }

    bool operator==(const Semiring& other) const {
        return kind_ == other.kind_ && r_ == other.r_ && q_ == other.q_;
    }

private:
    explicit Semiring(SemiringKind kind, double r = 1.0, std::uint64_t q = kUnboundedWalks)
        : kind_(kind), r_(r), q_(q) {}

    double check_scalar(const Value& v) const;

    SemiringKind kind_;
    double r_;
    std::uint64_t q_;
};

}  // namespace tqnet
