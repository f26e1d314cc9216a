#include "fracdim/digit_sets.hpp"

#include "fracdim/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracdim {

ScheduleSpec ScheduleSpec::recurrence(BigInt k0) {
    ScheduleSpec s;
    s.kind = Kind::Recurrence;
    s.k0 = std::move(k0);
    return s;
}

ScheduleSpec ScheduleSpec::explicit_list(std::vector<BigInt> ks) {
    ScheduleSpec s;
    s.kind = Kind::Explicit;
    s.explicit_ks = std::move(ks);
    return s;
}

std::vector<BigInt> ScheduleSpec::generate(int depth) const {
    if (depth < 0) throw std::invalid_argument("schedule depth must be >= 0");
    std::vector<BigInt> ks;
    ks.reserve(static_cast<std::size_t>(depth) + 1);
    if (kind == Kind::Recurrence) {
        if (k0 < 1) throw NonIncreasingSchedule("k_0 must be a positive integer");
        ks.push_back(k0);
        for (int n = 0; n < depth; ++n) ks.push_back(BigInt((n + 2) * ks.back()));
    } else {
        if (explicit_ks.empty() || explicit_ks.front() < 1)
            throw NonIncreasingSchedule("explicit schedule must start with a positive integer");
        if (static_cast<std::size_t>(depth) + 1 > explicit_ks.size())
            throw DepthExceeded("explicit schedule has only " +
                                std::to_string(explicit_ks.size()) + " entries, depth " +
                                std::to_string(depth) + " requested");
        for (int n = 0; n <= depth; ++n) {
            if (n > 0 && explicit_ks[static_cast<std::size_t>(n)] <=
                             explicit_ks[static_cast<std::size_t>(n) - 1])
                throw NonIncreasingSchedule("k_" + std::to_string(n) +
                                            " does not exceed k_" + std::to_string(n - 1));
            ks.push_back(explicit_ks[static_cast<std::size_t>(n)]);
        }
    }
    return ks;
}

bool ValidatedSpec::shares_schedule_with(const ValidatedSpec& other) const {
    int d = std::min(depth, other.depth);
    for (int n = 0; n <= d; ++n)
        if (ks[static_cast<std::size_t>(n)] != other.ks[static_cast<std::size_t>(n)]) return false;
    return true;
}

namespace {

void check_unit_interval(const Rational& a, const char* name) {
    if (!(a > 0 && a < 1))
        throw ParameterOutOfRange(std::string(name) + " = " + numer(a).str() + "/" +
                                  denom(a).str() + " is outside (0,1)");
}

}  // namespace

ValidatedSpec validate_spec(const DigitSetSpec& spec, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    check_unit_interval(spec.a1, "a1");
    check_unit_interval(spec.a2, "a2");

    ValidatedSpec v;
    v.params = spec;
    v.depth = depth;
    v.finite_horizon = spec.schedule.kind == ScheduleSpec::Kind::Explicit;
    v.ks = spec.schedule.generate(depth);

    const Rational a_min = std::min(spec.a1, spec.a2);
    v.table.depth = depth;
    v.table.M.assign(static_cast<std::size_t>(depth) + 1, BigInt(0));
    v.table.C.assign(static_cast<std::size_t>(depth) + 1, BigInt(0));
    for (int n = 1; n <= depth; ++n) {
        const BigInt gap = v.ks[static_cast<std::size_t>(n)] - v.ks[static_cast<std::size_t>(n) - 1];
        if (gap <= 0) throw NonIncreasingSchedule("k_" + std::to_string(n) + " <= k_" +
                                                  std::to_string(n - 1));
        if (gap * numer(a_min) <= denom(a_min))
            throw GapConditionViolated(
                "(k_" + std::to_string(n) + " - k_" + std::to_string(n - 1) + ") * min{a1,a2} = " +
                    gap.str() + " * " + numer(a_min).str() + "/" + denom(a_min).str() + " <= 1",
                n - 1);

        const Rational& a = v.a_for_block(n);
        const BigInt m_count = ceil_div(gap * numer(a), denom(a));
        // The last interior element k_{n-1} + [(M_n-1)/a_i] must stay below
        // k_n; equality would merge it with the checkpoint member.
        const BigInt last_interior = ((m_count - 1) * denom(a)) / numer(a);
        if (m_count < 2 || last_interior >= gap)
            throw std::logic_error("block " + std::to_string(n) +
                                   " degenerates; gap condition should have excluded this");
        v.table.M[static_cast<std::size_t>(n)] = m_count;
        v.table.C[static_cast<std::size_t>(n)] = v.table.C[static_cast<std::size_t>(n) - 1] + m_count;
    }
    return v;
}

namespace {

// Index n of the block whose range (k_{n-1}, k_n] contains k, or 0 when
// k <= k_0. Throws DepthExceeded past the generated horizon.
int locate_block(const ValidatedSpec& spec, const BigInt& k) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    if (k > spec.k_max())
        throw DepthExceeded("k = " + k.str() + " exceeds k_" + std::to_string(spec.depth) +
                            " = " + spec.k_max().str());
    if (k <= spec.ks[0]) return 0;
    auto it = std::lower_bound(spec.ks.begin(), spec.ks.end(), k);
    return static_cast<int>(it - spec.ks.begin());
}

}  // namespace

std::vector<BigInt> block_elements(const ValidatedSpec& spec, int n, std::uint64_t cap) {
    if (n < 1 || n > spec.depth)
        throw DepthExceeded("block index " + std::to_string(n) + " outside 1.." +
                            std::to_string(spec.depth));
    const BigInt& m_count = spec.table.M[static_cast<std::size_t>(n)];
    if (m_count > cap)
        throw CapExceeded("block " + std::to_string(n) + " has " + m_count.str() +
                          " elements, cap " + std::to_string(cap));
    const Rational& a = spec.a_for_block(n);
    const BigInt p = numer(a), q = denom(a);
    const BigInt& base = spec.ks[static_cast<std::size_t>(n) - 1];

    std::vector<BigInt> out;
    out.reserve(m_count.convert_to<std::size_t>());
    for (BigInt m = 1; m < m_count; ++m) out.push_back(base + (m * q) / p);
    out.push_back(spec.ks[static_cast<std::size_t>(n)]);
    return out;
}

bool membership(const ValidatedSpec& spec, const BigInt& k) {
    const int n = locate_block(spec, k);
    if (n == 0) return false;
    if (k == spec.ks[static_cast<std::size_t>(n)]) return true;
    const Rational& a = spec.a_for_block(n);
    const BigInt p = numer(a), q = denom(a);
    const BigInt r = k - spec.ks[static_cast<std::size_t>(n) - 1];
    // k is an interior member iff [m/a] = r for some m in [1, M_n-1]. The
    // candidate interval [r*p/q, (r+1)*p/q) is shorter than 1, so at most one
    // m can work.
    const BigInt m = ceil_div(r * p, q);
    return m >= 1 && m < spec.table.M[static_cast<std::size_t>(n)] && (m * q) / p == r;
}

BigInt count_prefix(const ValidatedSpec& spec, const BigInt& k) {
    const int n = locate_block(spec, k);
    if (n == 0) return 0;
    const Rational& a = spec.a_for_block(n);
    const BigInt p = numer(a), q = denom(a);
    const BigInt r = k - spec.ks[static_cast<std::size_t>(n) - 1];
    // #{m >= 1 : [m*q/p] <= r} = floor(((r+1)*p - 1)/q), clipped to the block.
    BigInt interior = ((r + 1) * p - 1) / q;
    const BigInt limit = spec.table.M[static_cast<std::size_t>(n)] - 1;
    if (interior > limit) interior = limit;
    BigInt total = spec.table.C[static_cast<std::size_t>(n) - 1] + interior;
    if (k == spec.ks[static_cast<std::size_t>(n)]) ++total;
    return total;
}

std::vector<BigInt> enumerate_prefix(const ValidatedSpec& spec, const BigInt& k,
                                     std::uint64_t cap) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    if (k > cap)
        throw CapExceeded("enumeration to k = " + k.str() + " exceeds cap " +
                          std::to_string(cap));
    if (k > spec.k_max())
        throw DepthExceeded("k = " + k.str() + " exceeds k_" + std::to_string(spec.depth));
    std::vector<BigInt> out;
    for (BigInt i = 1; i <= k; ++i)
        if (membership(spec, i)) out.push_back(i);
    return out;
}

BigInt default_schedule_k0(const std::vector<Rational>& params) {
    BigInt k0 = 5;
    for (const Rational& a : params) {
        if (!(a > 0 && a < 1))
            throw ParameterOutOfRange("schedule parameter outside (0,1)");
        const BigInt need = ceil_div(2 * denom(a), numer(a));
        if (need > k0) k0 = need;
    }
    return k0;
}

}  // namespace fracdim
