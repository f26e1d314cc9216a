#include "fracdim/product_spaces.hpp"

#include "fracdim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracdim {

bool ProductSpec::shared_schedule() const {
    for (const ValidatedSpec& v : factors)
        if (!v.shares_schedule_with(factors.front())) return false;
    return true;
}

BigInt ProductSpec::horizon() const {
    BigInt h = factors.front().k_max();
    for (const ValidatedSpec& v : factors) h = std::min(h, v.k_max());
    return h;
}

int ProductSpec::depth() const {
    int d = factors.front().depth;
    for (const ValidatedSpec& v : factors) d = std::min(d, v.depth);
    return d;
}

ProductSpec make_product(std::vector<ValidatedSpec> factors) {
    if (factors.empty()) throw ParameterOutOfRange("a product needs at least one factor");
    return ProductSpec{std::move(factors)};
}

BigInt covering_exponent(const ProductSpec& prod, const BigInt& k) {
    BigInt e = 0;
    for (const ValidatedSpec& v : prod.factors) e += count_prefix(v, k);
    return e;
}

CoveringProfile covering_profile(const ProductSpec& prod, const BigInt& k_lo,
                                 const BigInt& k_hi) {
    if (k_lo < 1 || k_hi < k_lo) throw std::invalid_argument("bad covering sweep range");
    CoveringProfile profile;
    for (BigInt k = k_lo; k <= k_hi; ++k) {
        BigInt e = covering_exponent(prod, k);
        profile.entries.push_back({k, e, Rational(e, k)});
    }
    return profile;
}

ProductSpec power_product(const ProductSpec& prod, int d) {
    if (d < 1) throw ParameterOutOfRange("power must be >= 1");
    ProductSpec out;
    out.factors.reserve(prod.factors.size() * static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        out.factors.insert(out.factors.end(), prod.factors.begin(), prod.factors.end());
    return out;
}

DimensionReport dimension_report(const ProductSpec& prod, int n_max, int n_burn) {
    DimensionReport report;
    report.d = prod.dimension();
    report.metric_correction = 0.5 * std::log2(static_cast<double>(report.d));
    report.evidence = extremal_density_estimates(
        std::span<const ValidatedSpec>(prod.factors.data(), prod.factors.size()), n_max, n_burn);
    return report;
}

BillingsleyPoint billingsley_local_dimension(const ProductSpec& prod, const BigInt& k) {
    BillingsleyPoint point;
    point.k = k;
    point.exponent = covering_exponent(prod, k);
    point.d = prod.dimension();
    const unsigned ud = static_cast<unsigned>(point.d);
    if ((ud & (ud - 1)) == 0) {
        int t = 0;
        while ((1u << t) < ud) ++t;
        point.exact = true;
        point.quotient_rat = Rational(2 * point.exponent, 2 * k - t);
        point.quotient = to_double(point.quotient_rat);
    } else {
        const double e = point.exponent.convert_to<double>();
        const double kk = k.convert_to<double>();
        point.quotient = e / (kk - 0.5 * std::log2(static_cast<double>(point.d)));
    }
    return point;
}

}  // namespace fracdim
