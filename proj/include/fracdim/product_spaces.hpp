#pragma once

#include "fracdim/density_analysis.hpp"
#include "fracdim/digit_sets.hpp"
#include "fracdim/numeric.hpp"

#include <vector>

namespace fracdim {

// Finite product of digit-restriction sets. Factors may repeat; mixed
// schedules are fine for pure counting but target-annotated dimension
// reports require one shared schedule.
struct ProductSpec {
    std::vector<ValidatedSpec> factors;

    int dimension() const { return static_cast<int>(factors.size()); }
    bool shared_schedule() const;
    // Largest k every factor can answer for.
    BigInt horizon() const;
    int depth() const;
};

ProductSpec make_product(std::vector<ValidatedSpec> factors);

// E_k with N_k = 2^{E_k} the number of k-level dyadic cubes meeting the
// product. Only the exponent is ever materialized.
BigInt covering_exponent(const ProductSpec& prod, const BigInt& k);

struct CoveringEntry {
    BigInt k;
    BigInt exponent;    // E_k
    Rational quotient;  // E_k / k
};

struct CoveringProfile {
    std::vector<CoveringEntry> entries;
};

CoveringProfile covering_profile(const ProductSpec& prod, const BigInt& k_lo, const BigInt& k_hi);

// d-fold repetition of the whole factor list. Its covering exponent is
// exactly d times the input's at every k.
ProductSpec power_product(const ProductSpec& prod, int d);

// Checkpoint dimension estimates for the product. lower tracks dim_H (lower
// box), upper tracks dim_P (upper box). The product-metric correction
// (1/2)log2(d) to cube diameters is reported but never folded into the
// estimates; it vanishes against k.
struct DimensionReport {
    int d = 1;
    double metric_correction = 0.0;
    DensityLimitsReport evidence;
};

DimensionReport dimension_report(const ProductSpec& prod, int n_max, int n_burn);

// Billingsley diagnostic at one scale: mass 2^{-E_k} against diameter
// sqrt(d) 2^{-k}. Exact rational when d is a power of two.
struct BillingsleyPoint {
    BigInt k;
    BigInt exponent;  // E_k
    int d = 1;
    bool exact = false;     // d = 2^t: quotient_rat = 2 E_k / (2k - t)
    Rational quotient_rat;  // meaningful only when exact
    double quotient = 0.0;  // decimal rendering for every d
};

BillingsleyPoint billingsley_local_dimension(const ProductSpec& prod, const BigInt& k);

}  // namespace fracdim
