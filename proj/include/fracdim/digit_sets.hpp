#pragma once

#include "fracdim/numeric.hpp"

#include <cstdint>
#include <vector>

namespace fracdim {

// Checkpoint sequence {k_n}. The multiplicative recurrence k_{n+1} = (n+2)*k_n
// certifies k_n/k_{n+1} -> 0 for the whole family; an explicit list certifies
// it only up to its own horizon and is flagged as such after validation.
struct ScheduleSpec {
    enum class Kind { Recurrence, Explicit };

    Kind kind = Kind::Recurrence;
    BigInt k0 = 5;                     // Recurrence only
    std::vector<BigInt> explicit_ks;   // Explicit only, strictly increasing

    static ScheduleSpec recurrence(BigInt k0);
    static ScheduleSpec explicit_list(std::vector<BigInt> ks);

    // k_0..k_depth. Throws NonIncreasingSchedule / DepthExceeded.
    std::vector<BigInt> generate(int depth) const;

    bool operator==(const ScheduleSpec&) const = default;
};

// Parameters ({k_n}, a1, a2) of an oscillating digit set. Odd-indexed blocks
// are packed at spacing ~1/a1, even-indexed ones at ~1/a2.
struct DigitSetSpec {
    ScheduleSpec schedule;
    Rational a1;
    Rational a2;
};

// Materialized block counts up to a fixed depth. M[n] is the cardinality of
// block n, C[n] = sum of M[1..n]. Element lists are produced on demand by
// block_elements; only the counts are stored here since M_n grows with k_n.
struct BlockTable {
    int depth = 0;
    std::vector<BigInt> M;  // index 0 unused
    std::vector<BigInt> C;  // C[0] = 0
};

// A DigitSetSpec whose schedule prefix has been generated and whose gap and
// range conditions have been checked. Immutable; all queries are const.
struct ValidatedSpec {
    DigitSetSpec params;
    int depth = 0;
    bool finite_horizon = false;    // explicit schedules certify only this far
    std::vector<BigInt> ks;         // k_0..k_depth
    BlockTable table;

    const Rational& a_for_block(int n) const { return (n % 2 == 1) ? params.a1 : params.a2; }
    const BigInt& k_max() const { return ks.back(); }
    // True when both specs generate the same k_0..k_depth prefix.
    bool shares_schedule_with(const ValidatedSpec& other) const;
};

// Checks a_i in (0,1), the schedule, and the gap condition
// (k_{n+1} - k_n) * min{a1,a2} > 1 for every generated gap; builds the block
// table. Throws ParameterOutOfRange, NonIncreasingSchedule,
// GapConditionViolated.
ValidatedSpec validate_spec(const DigitSetSpec& spec, int depth);

inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

// Block n as a sorted list: {k_{n-1} + [m/a_i] : m = 1..M_n-1} followed by
// k_n. Floors are exact: [m/(p/q)] = (m*q)/p. Throws DepthExceeded,
// CapExceeded when M_n > cap.
std::vector<BigInt> block_elements(const ValidatedSpec& spec, int n,
                                   std::uint64_t cap = kDefaultElementCap);

// k in S? Constant number of big-int operations after a binary search.
bool membership(const ValidatedSpec& spec, const BigInt& k);

// #(S n {1..k}) in closed form; no enumeration.
BigInt count_prefix(const ValidatedSpec& spec, const BigInt& k);

// S n {1..k} by scanning every integer through membership. Brute-force
// companion to count_prefix; k must stay below cap.
std::vector<BigInt> enumerate_prefix(const ValidatedSpec& spec, const BigInt& k,
                                     std::uint64_t cap = kDefaultElementCap);

// Smallest schedule start that satisfies the gap condition for every listed
// parameter from the first gap on: k_0 = max(5, ceil(2/min params)).
BigInt default_schedule_k0(const std::vector<Rational>& params);

}  // namespace fracdim
