#pragma once

#include "fracdim/digit_sets.hpp"
#include "fracdim/numeric.hpp"

#include <span>
#include <vector>

namespace fracdim {

// d_k(S) = #(S n {1..k}) / k, in lowest terms.
Rational density(const ValidatedSpec& spec, const BigInt& k);

struct DensityEntry {
    BigInt k;
    BigInt count;
    Rational d;  // count/k
};

// Exact density sequence for k = k_lo..k_hi (closed-form counts per k).
struct DensityProfile {
    std::vector<DensityEntry> entries;
};

DensityProfile density_profile(const ValidatedSpec& spec, const BigInt& k_lo, const BigInt& k_hi);

struct CheckpointDensity {
    int n = 0;
    BigInt k;             // k_n
    BigInt count;         // C_n
    Rational d;           // d_{k_n}
    Rational target;      // a_1 for odd n, a_2 for even n
    Rational bound;       // certified |d_{k_n} - target| <= bound
    Rational cert_lower;  // a_i (1 - k_{n-1}/k_n)
    Rational cert_upper;  // a_i + (1 - a_i) k_{n-1}/k_n + 1/k_n
};

// Checkpoint densities d_{k_n} for n = 1..n_max from the closed-form counts,
// each with the certified bound (k_{n-1} + n)/k_n on its distance to the
// parity target. Feasible at any depth; k_n never has to be swept.
std::vector<CheckpointDensity> checkpoint_densities(const ValidatedSpec& spec, int n_max);

// One evaluation of the between-checkpoint sandwich. Case 1 covers
// k_{2j} <= k < k_{2j+1} (offset m measured against a_1 at k_{2j}); Case 2
// covers k_{2j+1} <= k < k_{2j+2} (offset against a_2 at k_{2j+1}).
struct EnvelopePoint {
    BigInt k;
    int case_id = 0;  // 1 or 2
    int j = 0;
    BigInt m;
    Rational lower;
    Rational upper;
};

// Exact rational envelope around d_k(S). Requires k_2 <= k < k_depth.
EnvelopePoint envelope_bounds(const ValidatedSpec& spec, const BigInt& k);

// Exact rational envelope around d_k(S) + d_k(T) for two specs sharing one
// schedule; the offset m is located on S's parameters.
EnvelopePoint pair_envelope_bounds(const ValidatedSpec& s, const ValidatedSpec& t,
                                   const BigInt& k);

struct CheckpointSum {
    int n = 0;
    BigInt k;
    Rational value;   // sum of factor densities at k_n
    Rational target;  // sum of parity parameters
    Rational bound;   // certified per-checkpoint bound
};

// Extremes of the checkpoint density sums over n in [n_burn, n_max], with the
// analytic targets and the certified worst-case bound for the window.
struct DensityLimitsReport {
    int factors = 1;
    Rational lower;         // min over window
    Rational upper;         // max over window
    Rational target_lower;  // min over parity of the parameter sums
    Rational target_upper;
    Rational certified_bound;  // max over window of the per-checkpoint bounds
    std::vector<CheckpointSum> rows;
};

// Single-spec liminf/limsup estimates (Lemma-style checkpoint extremes).
DensityLimitsReport extremal_density_estimates(const ValidatedSpec& spec, int n_max, int n_burn);

// Same for the sum of densities over several specs sharing one schedule.
DensityLimitsReport extremal_density_estimates(std::span<const ValidatedSpec> specs, int n_max,
                                               int n_burn);

// Default burn-in: drop the first half of the window, and in any case the
// first n_max - 10 checkpoints when the window is that deep, so the surviving
// ratios k_{n-1}/k_n are small.
int default_burn(int n_max);

}  // namespace fracdim
