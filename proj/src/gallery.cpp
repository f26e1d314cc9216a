#include "fracdim/gallery.hpp"

#include "fracdim/errors.hpp"

#include <algorithm>
#include <utility>

namespace fracdim {

namespace {

std::string rat_str(const Rational& r) {
    std::string s = numer(r).str();
    if (denom(r) != 1) s += "/" + denom(r).str();
    return s;
}

void require(bool ok, const std::string& inequality) {
    if (!ok) throw ConstraintViolated("constraint violated: " + inequality);
}

}  // namespace

TheoremInstance solve_theorem(int which, const Rational& alpha, const Rational& beta,
                              const Rational& gamma, const Rational& lambda) {
    if (which < 1 || which > 3) throw ParameterOutOfRange("theorem index must be 1, 2 or 3");
    require(alpha > 0, "alpha > 0");
    require(beta > 0, "beta > 0");
    require(gamma > 0, "gamma > 0");
    require(lambda > 0, "lambda > 0");
    if (which == 1) {
        require(beta <= gamma, "beta <= gamma");
        require(alpha + beta <= lambda, "alpha + beta <= lambda");
        require(lambda <= alpha + gamma, "lambda <= alpha + gamma");
    } else {
        require(alpha <= gamma, "alpha <= gamma");
        require(alpha + beta <= lambda, "alpha + beta <= lambda");
        require(lambda <= gamma + beta, "lambda <= gamma + beta");
        if (lambda <= gamma)
            throw DegenerateLambda(
                "lambda = " + rat_str(lambda) + " <= gamma = " + rat_str(gamma) +
                ": the construction's second T parameter (lambda-gamma)/d leaves (0,1)");
    }

    TheoremInstance inst;
    inst.which = which;
    inst.alpha = alpha;
    inst.beta = beta;
    inst.gamma = gamma;
    inst.lambda = lambda;
    inst.targets = {alpha, beta, gamma, lambda};

    const Rational top = std::max({alpha, beta, gamma, lambda});
    const BigInt smallest_ambient = floor_rat(top) + 1;
    inst.d = smallest_ambient.convert_to<int>();
    const Rational d(inst.d);

    if (which == 1) {
        inst.s1 = (lambda - beta) / d;
        inst.s2 = alpha / d;
        inst.t1 = beta / d;
        inst.t2 = gamma / d;
        inst.target_labels = {"dim_H E", "dim_H F", "dim_P F", "dim_H (E x F)"};
        inst.reproduced = {d * std::min(inst.s1, inst.s2), d * std::min(inst.t1, inst.t2),
                           d * std::max(inst.t1, inst.t2),
                           d * std::min(inst.s1 + inst.t1, inst.s2 + inst.t2)};
    } else {
        inst.s1 = alpha / d;
        inst.s2 = gamma / d;
        inst.t1 = beta / d;
        inst.t2 = (lambda - gamma) / d;
        inst.target_labels = which == 2
                                 ? std::array<std::string, 4>{"dim_H E", "dim_P F", "dim_P E",
                                                              "dim_P (E x F)"}
                                 : std::array<std::string, 4>{"lower dim_B E", "upper dim_B F",
                                                              "upper dim_B E",
                                                              "upper dim_B (E x F)"};
        inst.reproduced = {d * std::min(inst.s1, inst.s2), d * std::max(inst.t1, inst.t2),
                           d * std::max(inst.s1, inst.s2),
                           d * std::max(inst.s1 + inst.t1, inst.s2 + inst.t2)};
    }
    return inst;
}

const char* to_string(TargetStatus status) {
    switch (status) {
        case TargetStatus::Pass: return "PASS";
        case TargetStatus::Inconclusive: return "INCONCLUSIVE";
        case TargetStatus::Fail: return "FAIL";
    }
    return "?";
}

bool GalleryReport::any_fail() const {
    for (const NumericTarget& row : numeric)
        if (row.status == TargetStatus::Fail) return true;
    for (const SymbolicClaim& claim : symbolic)
        if (!claim.holds) return true;
    return false;
}

bool GalleryReport::all_pass() const {
    for (const NumericTarget& row : numeric)
        if (row.status != TargetStatus::Pass) return false;
    for (const SymbolicClaim& claim : symbolic)
        if (!claim.holds) return false;
    return true;
}

namespace {

NumericTarget judge(std::string label, Rational estimate, Rational target, Rational certified,
                    const Rational& tolerance) {
    NumericTarget row;
    row.label = std::move(label);
    row.estimate = std::move(estimate);
    row.target = std::move(target);
    row.deviation = abs_rat(row.estimate - row.target);
    row.certified = std::move(certified);
    if (row.deviation > row.certified)
        row.status = TargetStatus::Fail;
    else if (row.certified <= tolerance)
        row.status = TargetStatus::Pass;
    else
        row.status = TargetStatus::Inconclusive;
    return row;
}

}  // namespace

GalleryReport theorem_report(const TheoremInstance& inst, int n_max, int n_burn,
                             const Rational& tolerance) {
    if (n_burn == kAutoBurn) n_burn = default_burn(n_max);

    GalleryReport report;
    report.n_max = n_max;
    report.n_burn = n_burn;
    report.tolerance = tolerance;

    for (std::size_t i = 0; i < 4; ++i)
        report.symbolic.push_back({inst.target_labels[i] + " = " + rat_str(inst.targets[i]) +
                                       " via closed forms",
                                   inst.reproduced[i] == inst.targets[i]});

    const ScheduleSpec schedule =
        ScheduleSpec::recurrence(default_schedule_k0({inst.s1, inst.s2, inst.t1, inst.t2}));
    const std::array<ValidatedSpec, 2> factors = {
        validate_spec({schedule, inst.s1, inst.s2}, n_max),
        validate_spec({schedule, inst.t1, inst.t2}, n_max)};
    const DensityLimitsReport s = extremal_density_estimates(factors[0], n_max, n_burn);
    const DensityLimitsReport t = extremal_density_estimates(factors[1], n_max, n_burn);
    const DensityLimitsReport pair = extremal_density_estimates(
        std::span<const ValidatedSpec>(factors.data(), factors.size()), n_max, n_burn);

    const Rational d(inst.d);
    if (inst.which == 1) {
        report.numeric.push_back(judge(inst.target_labels[0], d * s.lower, inst.alpha,
                                       d * s.certified_bound, tolerance));
        report.numeric.push_back(judge(inst.target_labels[1], d * t.lower, inst.beta,
                                       d * t.certified_bound, tolerance));
        report.numeric.push_back(judge(inst.target_labels[2], d * t.upper, inst.gamma,
                                       d * t.certified_bound, tolerance));
        report.numeric.push_back(judge(inst.target_labels[3], d * pair.lower, inst.lambda,
                                       d * pair.certified_bound, tolerance));
    } else {
        report.numeric.push_back(judge(inst.target_labels[0], d * s.lower, inst.alpha,
                                       d * s.certified_bound, tolerance));
        report.numeric.push_back(judge(inst.target_labels[1], d * t.upper, inst.beta,
                                       d * t.certified_bound, tolerance));
        report.numeric.push_back(judge(inst.target_labels[2], d * s.upper, inst.gamma,
                                       d * s.certified_bound, tolerance));
        report.numeric.push_back(judge(inst.target_labels[3], d * pair.upper, inst.lambda,
                                       d * pair.certified_bound, tolerance));
    }
    return report;
}

GalleryReport remark1_report(int n_max, int n_burn, const Rational& tolerance) {
    if (n_max < 1) throw DepthExceeded("remark 1 needs at least one checkpoint");
    if (n_burn == kAutoBurn) n_burn = default_burn(n_max);

    const ScheduleSpec schedule = ScheduleSpec::recurrence(5);
    const std::array<ValidatedSpec, 2> factors = {
        validate_spec({schedule, Rational(1, 2), Rational(1, 4)}, n_max),
        validate_spec({schedule, Rational(1, 4), Rational(1, 3)}, n_max)};

    const DensityLimitsReport s = extremal_density_estimates(factors[0], n_max, n_burn);
    const DensityLimitsReport t = extremal_density_estimates(factors[1], n_max, n_burn);
    const DensityLimitsReport pair = extremal_density_estimates(
        std::span<const ValidatedSpec>(factors.data(), factors.size()), n_max, n_burn);

    GalleryReport report;
    report.n_max = n_max;
    report.n_burn = n_burn;
    report.tolerance = tolerance;
    report.numeric.push_back(
        judge("dim_H E_S", s.lower, Rational(1, 4), s.certified_bound, tolerance));
    report.numeric.push_back(
        judge("dim_H E_T", t.lower, Rational(1, 4), t.certified_bound, tolerance));
    report.numeric.push_back(judge("dim_H (E_S x E_T)", pair.lower, Rational(7, 12),
                                   pair.certified_bound, tolerance));
    report.numeric.push_back(judge("dim_P (E_S x E_T)", pair.upper, Rational(3, 4),
                                   pair.certified_bound, tolerance));

    // The union chain is exact: dim of a finite union is the max, and
    // E_S x E_T sits inside (E_S u E_T)^2.
    const Rational dim_s = std::min(Rational(1, 2), Rational(1, 4));
    const Rational dim_t = std::min(Rational(1, 4), Rational(1, 3));
    const Rational dim_union = std::max(dim_s, dim_t);
    const Rational dim_pair =
        std::min(Rational(1, 2) + Rational(1, 4), Rational(1, 4) + Rational(1, 3));
    report.symbolic.push_back({"dim_H E_S = dim_H E_T = 1/4", dim_s == Rational(1, 4) &&
                                                                   dim_t == Rational(1, 4)});
    report.symbolic.push_back(
        {"dim_H E = max{dim_H E_S, dim_H E_T} = 1/4 for E = E_S u E_T",
         dim_union == Rational(1, 4)});
    report.symbolic.push_back(
        {"dim_H (E_S x E_T) = min{1/2 + 1/4, 1/4 + 1/3} = 7/12", dim_pair == Rational(7, 12)});
    report.symbolic.push_back(
        {"dim_H (E x E) >= 7/12 > 1/2 = 2 dim_H E", dim_pair > 2 * dim_union});
    return report;
}

}  // namespace fracdim
