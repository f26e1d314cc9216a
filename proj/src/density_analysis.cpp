#include "fracdim/density_analysis.hpp"

#include "fracdim/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracdim {

Rational density(const ValidatedSpec& spec, const BigInt& k) {
    return Rational(count_prefix(spec, k), k);
}

DensityProfile density_profile(const ValidatedSpec& spec, const BigInt& k_lo, const BigInt& k_hi) {
    if (k_lo < 1 || k_hi < k_lo) throw std::invalid_argument("bad density sweep range");
    DensityProfile profile;
    for (BigInt k = k_lo; k <= k_hi; ++k) {
        BigInt c = count_prefix(spec, k);
        profile.entries.push_back({k, c, Rational(c, k)});
    }
    return profile;
}

std::vector<CheckpointDensity> checkpoint_densities(const ValidatedSpec& spec, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (n_max > spec.depth)
        throw DepthExceeded("n_max " + std::to_string(n_max) + " exceeds generated depth " +
                            std::to_string(spec.depth));
    std::vector<CheckpointDensity> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const BigInt& kn = spec.ks[static_cast<std::size_t>(n)];
        const BigInt& kprev = spec.ks[static_cast<std::size_t>(n) - 1];
        const BigInt& cn = spec.table.C[static_cast<std::size_t>(n)];
        const Rational a = spec.a_for_block(n);
        const Rational ratio(kprev, kn);
        rows.push_back({n, kn, cn, Rational(cn, kn), a, Rational(kprev + n, kn),
                        a * (1 - ratio), a + (1 - a) * ratio + Rational(1, kn)});
    }
    return rows;
}

namespace {

// Offset m with k_anchor + [m/a] <= k < k_anchor + [(m+1)/a], given
// r = k - k_anchor >= 0; equals the number of interior elements at spacing
// 1/a that fit into (0, r].
BigInt sandwich_offset(const BigInt& r, const Rational& a) {
    return ((r + 1) * numer(a) - 1) / denom(a);
}

struct EnvelopeFrame {
    int case_id;
    int j;
    BigInt m;
    BigInt anchor;    // k_{2j} (Case 1) or k_{2j+1} (Case 2)
    BigInt previous;  // k_{2j-1} (Case 1) or k_{2j} (Case 2)
};

EnvelopeFrame locate_envelope(const ValidatedSpec& spec, const BigInt& k) {
    if (spec.depth < 3 || k < spec.ks[2] || k >= spec.k_max())
        throw OutOfEnvelopeRange("k = " + k.str() + " outside [k_2, k_depth)");
    // n with k_n <= k < k_{n+1}
    auto it = std::upper_bound(spec.ks.begin(), spec.ks.end(), k);
    const int n = static_cast<int>(it - spec.ks.begin()) - 1;
    EnvelopeFrame frame;
    frame.case_id = (n % 2 == 0) ? 1 : 2;
    frame.j = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
    frame.anchor = spec.ks[static_cast<std::size_t>(n)];
    frame.previous = spec.ks[static_cast<std::size_t>(n) - 1];
    const Rational& a = (frame.case_id == 1) ? spec.params.a1 : spec.params.a2;
    frame.m = sandwich_offset(k - frame.anchor, a);
    return frame;
}

}  // namespace

EnvelopePoint envelope_bounds(const ValidatedSpec& spec, const BigInt& k) {
    const EnvelopeFrame fr = locate_envelope(spec, k);
    const Rational& a1 = spec.params.a1;
    const Rational& a2 = spec.params.a2;
    const BigInt gap = fr.anchor - fr.previous;

    EnvelopePoint point;
    point.k = k;
    point.case_id = fr.case_id;
    point.j = fr.j;
    point.m = fr.m;
    if (fr.case_id == 1) {
        point.lower = a1 * Rational(a2 * gap + fr.m) / Rational(a1 * fr.anchor + 1 + fr.m);
        point.upper = a1 * Rational(fr.previous + a2 * gap + 1 + fr.m) /
                      Rational(a1 * fr.anchor - a1 + fr.m);
    } else {
        point.lower = a2 * Rational(a1 * gap + fr.m) / Rational(a2 * fr.anchor + 1 + fr.m);
        point.upper = a2 * Rational(fr.previous + a1 * gap + 1 + fr.m) /
                      Rational(a2 * fr.anchor - a2 + fr.m);
    }
    return point;
}

EnvelopePoint pair_envelope_bounds(const ValidatedSpec& s, const ValidatedSpec& t,
                                   const BigInt& k) {
    if (!s.shares_schedule_with(t))
        throw ScheduleMismatch("pair envelope requires a shared schedule");
    const EnvelopeFrame fr = locate_envelope(s, k);
    const Rational &a1 = s.params.a1, &a2 = s.params.a2;
    const Rational &b1 = t.params.a1, &b2 = t.params.a2;
    const BigInt gap = fr.anchor - fr.previous;

    EnvelopePoint point;
    point.k = k;
    point.case_id = fr.case_id;
    point.j = fr.j;
    point.m = fr.m;
    if (fr.case_id == 1) {
        point.lower = (a1 * (a2 + b2) * gap - a1 * (1 + b1) + (a1 + b1) * fr.m) /
                      Rational(a1 * fr.anchor + 1 + fr.m);
        point.upper = (2 * a1 * fr.previous + a1 * (a2 + b2) * gap + (b1 + a1 * b1 + 2 * a1) +
                       (a1 + b1) * fr.m) /
                      Rational(a1 * fr.anchor - a1 + fr.m);
    } else {
        point.lower = (a2 * (a1 + b1) * gap - a2 * (1 + b2) + (a2 + b2) * fr.m) /
                      Rational(a2 * fr.anchor + 1 + fr.m);
        point.upper = (2 * a2 * fr.previous + a2 * (a1 + b1) * gap + (b2 + a2 * b2 + 2 * a2) +
                       (a2 + b2) * fr.m) /
                      Rational(a2 * fr.anchor - a2 + fr.m);
    }
    return point;
}

int default_burn(int n_max) {
    return std::max({1, n_max / 2, n_max - 10});
}

DensityLimitsReport extremal_density_estimates(const ValidatedSpec& spec, int n_max, int n_burn) {
    return extremal_density_estimates(std::span<const ValidatedSpec>(&spec, 1), n_max, n_burn);
}

DensityLimitsReport extremal_density_estimates(std::span<const ValidatedSpec> specs, int n_max,
                                               int n_burn) {
    if (specs.empty()) throw std::invalid_argument("at least one spec required");
    if (n_burn < 1 || n_burn >= n_max) throw std::invalid_argument("need 1 <= n_burn < n_max");
    for (const ValidatedSpec& v : specs) {
        if (n_max > v.depth)
            throw DepthExceeded("n_max " + std::to_string(n_max) + " exceeds generated depth " +
                                std::to_string(v.depth));
        if (!v.shares_schedule_with(specs.front()))
            throw ScheduleMismatch("extremal estimates require a shared schedule");
    }

    Rational target_odd = 0, target_even = 0;
    for (const ValidatedSpec& v : specs) {
        target_odd += v.params.a1;
        target_even += v.params.a2;
    }

    DensityLimitsReport report;
    report.factors = static_cast<int>(specs.size());
    report.target_lower = std::min(target_odd, target_even);
    report.target_upper = std::max(target_odd, target_even);

    const auto& ks = specs.front().ks;
    for (int n = n_burn; n <= n_max; ++n) {
        const BigInt& kn = ks[static_cast<std::size_t>(n)];
        BigInt count_sum = 0;
        for (const ValidatedSpec& v : specs) count_sum += v.table.C[static_cast<std::size_t>(n)];
        CheckpointSum row;
        row.n = n;
        row.k = kn;
        row.value = Rational(count_sum, kn);
        row.target = (n % 2 == 1) ? target_odd : target_even;
        row.bound = Rational(static_cast<int>(specs.size()) *
                                 (ks[static_cast<std::size_t>(n) - 1] + n),
                             kn);
        report.rows.push_back(std::move(row));
    }

    report.lower = report.rows.front().value;
    report.upper = report.rows.front().value;
    report.certified_bound = report.rows.front().bound;
    for (const CheckpointSum& row : report.rows) {
        report.lower = std::min(report.lower, row.value);
        report.upper = std::max(report.upper, row.value);
        report.certified_bound = std::max(report.certified_bound, row.bound);
    }
    return report;
}

}  // namespace fracdim
