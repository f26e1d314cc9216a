#include "fracdim/sampler.hpp"

#include "fracdim/errors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fracdim {

namespace {

// S_i n {1..K}, ascending. Scanning is fine at sampler scales.
std::vector<BigInt> allowed_positions(const ValidatedSpec& v, int K) {
    if (K < 0) throw std::invalid_argument("truncation level must be >= 0");
    if (BigInt(K) > v.k_max())
        throw DepthExceeded("truncation level " + std::to_string(K) + " exceeds k_" +
                            std::to_string(v.depth) + " = " + v.k_max().str());
    std::vector<BigInt> out;
    for (BigInt k = 1; k <= K; ++k)
        if (membership(v, k)) out.push_back(k);
    return out;
}

BigInt digits_to_numerator(const std::vector<BigInt>& positions, std::uint64_t bits, int K) {
    BigInt p = 0;
    const std::size_t c = positions.size();
    for (std::size_t j = 0; j < c; ++j)
        if ((bits >> (c - 1 - j)) & 1)
            p += pow2(static_cast<unsigned>(K - positions[j].convert_to<int>()));
    return p;
}

}  // namespace

PointCloud enumerate_points(const ProductSpec& prod, int K, std::uint64_t cap) {
    std::vector<std::vector<BigInt>> positions;
    positions.reserve(prod.factors.size());
    for (const ValidatedSpec& v : prod.factors) positions.push_back(allowed_positions(v, K));

    std::uint64_t total = 1;
    for (const auto& pos : positions) {
        if (pos.size() >= 63 || total > (cap >> pos.size()))
            throw CapExceeded("full enumeration exceeds cap " + std::to_string(cap) +
                              " points; use sample_points");
        total <<= pos.size();
    }

    // Per-factor numerators indexed by digit word; lexicographic digit order
    // equals numeric order because position weights strictly decrease.
    std::vector<std::vector<BigInt>> values(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const std::uint64_t sz = std::uint64_t(1) << positions[i].size();
        values[i].reserve(sz);
        for (std::uint64_t b = 0; b < sz; ++b)
            values[i].push_back(digits_to_numerator(positions[i], b, K));
    }

    PointCloud cloud;
    cloud.K = K;
    cloud.d = prod.dimension();
    cloud.mode = PointCloud::Mode::Full;
    cloud.points.reserve(total);
    for (std::uint64_t index = 0; index < total; ++index) {
        std::vector<BigInt> point(values.size());
        std::uint64_t rem = index;
        for (std::size_t i = values.size(); i-- > 0;) {
            const std::uint64_t sz = values[i].size();
            point[i] = values[i][rem % sz];
            rem /= sz;
        }
        cloud.points.push_back(std::move(point));
    }
    return cloud;
}

PointCloud sample_points(const ProductSpec& prod, int K, std::uint64_t count,
                         std::uint64_t seed) {
    if (count < 1) throw ParameterOutOfRange("sample count must be >= 1");
    std::vector<std::vector<BigInt>> positions;
    positions.reserve(prod.factors.size());
    for (const ValidatedSpec& v : prod.factors) positions.push_back(allowed_positions(v, K));

    // One raw engine bit per digit; mt19937_64's sequence is pinned by the
    // standard, so clouds reproduce across platforms.
    std::mt19937_64 engine(seed);
    PointCloud cloud;
    cloud.K = K;
    cloud.d = prod.dimension();
    cloud.mode = PointCloud::Mode::Sampled;
    cloud.points.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
        std::vector<BigInt> point;
        point.reserve(positions.size());
        for (const auto& pos : positions) {
            BigInt p = 0;
            for (const BigInt& position : pos)
                if (engine() & 1)
                    p += pow2(static_cast<unsigned>(K - position.convert_to<int>()));
            point.push_back(std::move(p));
        }
        cloud.points.push_back(std::move(point));
    }
    return cloud;
}

std::vector<std::vector<BigInt>> cube_keys(const PointCloud& cloud, int k) {
    if (k < 0 || k > cloud.K)
        throw LevelExceedsTruncation("level " + std::to_string(k) + " outside 0.." +
                                     std::to_string(cloud.K));
    std::vector<std::vector<BigInt>> keys;
    keys.reserve(cloud.points.size());
    const unsigned shift = static_cast<unsigned>(cloud.K - k);
    for (const auto& point : cloud.points) {
        std::vector<BigInt> key(point.size());
        for (std::size_t i = 0; i < point.size(); ++i) key[i] = point[i] >> shift;
        keys.push_back(std::move(key));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

BigInt empirical_box_count(const PointCloud& cloud, int k) {
    return BigInt(cube_keys(cloud, k).size());
}

bool cloud_matches_spec(const PointCloud& cloud, const ProductSpec& prod) {
    if (cloud.d != prod.dimension()) return false;
    const BigInt one = pow2(static_cast<unsigned>(cloud.K));
    for (const auto& point : cloud.points) {
        for (std::size_t i = 0; i < point.size(); ++i) {
            const BigInt& p = point[i];
            if (p < 0 || p >= one) return false;
            for (int k = 1; k <= cloud.K; ++k) {
                const bool digit = ((p >> (cloud.K - k)) & 1) != 0;
                if (digit && !membership(prod.factors[i], BigInt(k))) return false;
            }
        }
    }
    return true;
}

bool CrosscheckReport::all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const CrosscheckRow& r) { return r.ok; });
}

CrosscheckReport crosscheck(const ProductSpec& prod, int K, std::uint64_t cap) {
    return crosscheck(prod, enumerate_points(prod, K, cap));
}

CrosscheckReport crosscheck(const ProductSpec& prod, const PointCloud& cloud) {
    CrosscheckReport report;
    report.K = cloud.K;
    report.sampled = cloud.mode == PointCloud::Mode::Sampled;
    for (int k = 1; k <= cloud.K; ++k) {
        CrosscheckRow row;
        row.k = k;
        row.empirical = empirical_box_count(cloud, k);
        row.exponent = covering_exponent(prod, BigInt(k));
        const BigInt analytic = pow2(row.exponent.convert_to<unsigned>());
        row.ok = report.sampled ? row.empirical <= analytic : row.empirical == analytic;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace fracdim
