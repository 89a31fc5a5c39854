#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tqnet/semiring.hpp"

namespace tqnet {

using Time = std::int64_t;

/// "Forever" finish time; compares greater than every finite time.
inline constexpr Time kForever = std::numeric_limits<Time>::max();

struct Triple {
    Time start;
    Time finish;
    Value value;

    bool operator==(const Triple&) const = default;
};

/// A temporal quantity: a sorted, non-overlapping sequence of half-open
/// interval/value triples [start, finish) over a semiring value domain.
/// Absence of a covering interval encodes the undefined value.
using TemporalQuantity = std::vector<Triple>;

struct TimeHorizon {
    Time t_min;
    Time t_max;

    bool operator==(const TimeHorizon&) const = default;
};

/// Validates ordering and joins adjacent same-value intervals. Triples whose
/// value is the semiring zero are dropped for absorptive kinds and kept for
/// the combinatorial kind. Idempotent.
TemporalQuantity standardize(const Semiring& sr, const TemporalQuantity& a);

/// Pointwise semiring addition; defined on the union of the activity sets.
TemporalQuantity tq_sum(const Semiring& sr, const TemporalQuantity& a, const TemporalQuantity& b);

/// Pointwise semiring multiplication; defined on the intersection of the
/// activity sets.
TemporalQuantity tq_prod(const Semiring& sr, const TemporalQuantity& a, const TemporalQuantity& b);

/// Duration-weighted sum of a combinatorial quantity.
double tq_total(const TemporalQuantity& a);

/// Same activity set, every value set to the target semiring's one.
TemporalQuantity tq_binary(const Semiring& target, const TemporalQuantity& a);

/// Per-triple reciprocal over the combinatorial semiring; 1/inf = 0,
/// value 0 raises DivisionByZeroError.
TemporalQuantity tq_invert(const TemporalQuantity& a);

/// Makes the quantity total on [s, f): restricts it to the window and puts
/// `fill` on every gap.
TemporalQuantity tq_fill_gaps(const Semiring& sr, const TemporalQuantity& a, Time s, Time f,
                              const Value& fill);

/// Masks `a` to the activity set of the binary quantity `p`.
TemporalQuantity tq_extract(const Semiring& sr, const TemporalQuantity& p,
                            const TemporalQuantity& a);

/// Value at an instant, or nullopt when undefined.
std::optional<Value> tq_at(const TemporalQuantity& a, Time t);

/// True when [s, f) lies entirely inside the activity set of `a`.
bool tq_covers(const TemporalQuantity& a, Time s, Time f);

/// Canonical text rendering, e.g. "[(1, 5, 2), (6, 8, 1)]".
std::string to_string(const TemporalQuantity& a);
std::string to_string(const Value& v);
std::string to_string(Time t);

}  // namespace tqnet
