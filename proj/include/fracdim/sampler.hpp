#pragma once

#include "fracdim/numeric.hpp"
#include "fracdim/product_spaces.hpp"

#include <cstdint>
#include <vector>

namespace fracdim {

// Points of the product truncated at level K. Coordinates are exact dyadic
// rationals p/2^K stored as numerators; digits beyond K are zero (left
// endpoints), which never changes k-level cube membership for k <= K.
struct PointCloud {
    enum class Mode { Full, Sampled };

    int K = 0;
    int d = 1;
    Mode mode = Mode::Full;
    std::vector<std::vector<BigInt>> points;  // each entry: d numerators
};

inline constexpr std::uint64_t kDefaultPointCap = std::uint64_t(1) << 20;

// Every truncated point, ordered lexicographically by digit vectors (factor 1
// most significant). Size is exactly prod of 2^{count_prefix_i(K)}.
PointCloud enumerate_points(const ProductSpec& prod, int K,
                            std::uint64_t cap = kDefaultPointCap);

// count points drawn by independent fair digit choices on the allowed
// positions; identical seeds give identical clouds.
PointCloud sample_points(const ProductSpec& prod, int K, std::uint64_t count,
                         std::uint64_t seed);

// Sorted distinct k-level cube keys (tuples of k-bit coordinate prefixes).
std::vector<std::vector<BigInt>> cube_keys(const PointCloud& cloud, int k);

// Number of k-level dyadic cubes containing at least one cloud point.
BigInt empirical_box_count(const PointCloud& cloud, int k);

// Digit-mask check: true iff every nonzero binary digit of every coordinate
// sits at a position its factor's digit set allows.
bool cloud_matches_spec(const PointCloud& cloud, const ProductSpec& prod);

struct CrosscheckRow {
    int k = 0;
    BigInt empirical;
    BigInt exponent;  // analytic E_k
    bool ok = false;
};

// Per-level comparison of empirical cube counts with 2^{E_k}. Full clouds
// demand equality; sampled clouds can only miss cubes, so they are held to
// empirical <= 2^{E_k}.
struct CrosscheckReport {
    int K = 0;
    bool sampled = false;
    std::vector<CrosscheckRow> rows;
    bool all_ok() const;
};

CrosscheckReport crosscheck(const ProductSpec& prod, int K,
                            std::uint64_t cap = kDefaultPointCap);
CrosscheckReport crosscheck(const ProductSpec& prod, const PointCloud& cloud);

}  // namespace fracdim
