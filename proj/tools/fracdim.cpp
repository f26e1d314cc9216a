#include "CLI11.hpp"

#include "fracdim/density_analysis.hpp"
#include "fracdim/digit_sets.hpp"
#include "fracdim/errors.hpp"
#include "fracdim/gallery.hpp"
#include "fracdim/numeric.hpp"
#include "fracdim/product_spaces.hpp"
#include "fracdim/sampler.hpp"
#include "fracdim/spec_io.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace {

using namespace fracdim;

// Minimal generation depth whose horizon k_depth reaches k.
int depth_to_cover(const ScheduleSpec& schedule, const BigInt& k) {
    if (schedule.kind == ScheduleSpec::Kind::Explicit) {
        const int depth = static_cast<int>(schedule.explicit_ks.size()) - 1;
        if (depth < 1 || schedule.explicit_ks.back() < k)
            throw DepthExceeded("explicit schedule ends before k = " + k.str());
        return depth;
    }
    BigInt kn = schedule.k0;
    int depth = 0;
    while (kn < k) {
        ++depth;
        kn *= depth + 1;
    }
    return std::max(depth, 1);
}

ValidatedSpec load_factor(const std::string& path, const BigInt& k_cover, int n_cover) {
    const DigitSetSpec spec = load_spec_file(path);
    int depth = std::max(n_cover, 1);
    if (k_cover > 0) depth = std::max(depth, depth_to_cover(spec.schedule, k_cover));
    return validate_spec(spec, depth);
}

struct SourceOptions {
    std::string spec_path;
    std::string product_path;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
    auto* spec = cmd->add_option("--spec", src.spec_path, "digit set spec file");
    auto* product = cmd->add_option("--product", src.product_path, "product config file");
    spec->excludes(product);
    product->excludes(spec);
}

ProductSpec load_source(const SourceOptions& src, const BigInt& k_cover, int n_cover) {
    if (!src.spec_path.empty())
        return make_product({load_factor(src.spec_path, k_cover, n_cover)});
    if (src.product_path.empty())
        throw ParseError("one of --spec or --product is required");
    const ProductConfig config = load_product_file(src.product_path);
    std::vector<ValidatedSpec> factors;
    factors.reserve(config.factor_paths.size());
    for (const std::string& path : config.factor_paths)
        factors.push_back(load_factor(path, k_cover, n_cover));
    return power_product(make_product(std::move(factors)), config.power);
}

// Stream for --out, stdout when empty.
struct Sink {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw ParseError("cannot write " + path);
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

std::string show(const Rational& r) {
    return format_rational(r) + " (~" + decimal12(r) + ")";
}

void print_gallery(std::ostream& out, const GalleryReport& report) {
    out << "window: checkpoints " << report.n_burn << ".." << report.n_max
        << ", tolerance " << show(report.tolerance) << "\n";
    out << "numeric targets:\n";
    for (const NumericTarget& row : report.numeric) {
        out << "  [" << to_string(row.status) << "] " << row.label << ": estimate "
            << show(row.estimate) << ", target " << show(row.target) << ", |deviation| "
            << decimal12(row.deviation) << ", certified bound " << decimal12(row.certified)
            << "\n";
    }
    out << "symbolic claims:\n";
    for (const SymbolicClaim& claim : report.symbolic)
        out << "  [" << (claim.holds ? "PASS" : "FAIL") << "] " << claim.label << "\n";
}

int run_density(const SourceOptions& src, const std::string& k_min_text,
                const std::string& k_max_text, const std::string& out_path) {
    const BigInt k_min = parse_bigint(k_min_text), k_max = parse_bigint(k_max_text);
    const ProductSpec prod = load_source(src, k_max, 1);
    Sink sink(out_path);
    if (prod.dimension() == 1) {
        const DensityProfile profile = density_profile(prod.factors.front(), k_min, k_max);
        write_density_csv(sink.out(), profile.entries);
    } else {
        write_covering_csv(sink.out(), covering_profile(prod, k_min, k_max));
    }
    return 0;
}

int run_checkpoints(const SourceOptions& src, int n_max, const std::string& out_path) {
    const ProductSpec prod = load_source(src, 0, n_max);
    if (prod.dimension() != 1)
        throw ParseError("checkpoints expects a single factor; use dims for products");
    Sink sink(out_path);
    write_checkpoint_csv(sink.out(), checkpoint_densities(prod.factors.front(), n_max));
    return 0;
}

int run_dims(const SourceOptions& src, int n_max, int n_burn, const std::string& out_path) {
    const ProductSpec prod = load_source(src, 0, n_max);
    if (n_burn < 0) n_burn = default_burn(n_max);
    const DimensionReport report = dimension_report(prod, n_max, n_burn);
    Sink sink(out_path);
    std::ostream& out = sink.out();
    out << "factors: " << report.d << "\n";
    out << "window: checkpoints " << n_burn << ".." << n_max << "\n";
    out << "lower estimate (dim_H, lower box): " << show(report.evidence.lower)
        << ", target " << show(report.evidence.target_lower) << "\n";
    out << "upper estimate (dim_P, upper box): " << show(report.evidence.upper)
        << ", target " << show(report.evidence.target_upper) << "\n";
    out << "certified bound: " << show(report.evidence.certified_bound) << "\n";
    out << "metric correction (1/2)log2(d) = " << report.metric_correction
        << " (reported, not applied)\n";

    const BillingsleyPoint bill = billingsley_local_dimension(
        prod, prod.factors.front().ks[static_cast<std::size_t>(n_max)]);
    out << "billingsley at k_" << n_max << ": quotient ";
    if (bill.exact)
        out << show(bill.quotient_rat);
    else
        out << bill.quotient;
    out << ", checkpoint sum " << show(report.evidence.rows.back().value) << "\n";

    out << "checkpoints (n,k,sum_num,sum_den,sum_float,target,bound):\n";
    for (const CheckpointSum& row : report.evidence.rows)
        out << row.n << ',' << row.k << ',' << numer(row.value) << ',' << denom(row.value)
            << ',' << decimal12(row.value) << ',' << format_rational(row.target) << ','
            << decimal12(row.bound) << "\n";
    return 0;
}

int run_sample(const SourceOptions& src, int level, std::uint64_t count, std::uint64_t seed,
               std::uint64_t cap, const std::string& out_path) {
    const ProductSpec prod = load_source(src, BigInt(std::max(level, 1)), 1);
    const PointCloud cloud = count == 0 ? enumerate_points(prod, level, cap)
                                        : sample_points(prod, level, count, seed);
    Sink sink(out_path);
    write_points_csv(sink.out(), cloud);
    if (!cloud_matches_spec(cloud, prod)) {
        std::cerr << "emitted cloud violates its digit masks\n";
        return 1;
    }
    return 0;
}

int run_crosscheck(const SourceOptions& src, int level, std::uint64_t count,
                   std::uint64_t seed, std::uint64_t cap, const std::string& out_path) {
    const ProductSpec prod = load_source(src, BigInt(std::max(level, 1)), 1);
    const CrosscheckReport report =
        count == 0 ? crosscheck(prod, level, cap)
                   : crosscheck(prod, sample_points(prod, level, count, seed));
    Sink sink(out_path);
    write_boxcount_csv(sink.out(), report);
    if (!report.all_ok()) {
        std::cerr << "covering mismatch against analytic exponents\n";
        return 1;
    }
    return 0;
}

int run_theorem(int which, const std::string& alpha, const std::string& beta,
                const std::string& gamma, const std::string& lambda, int n_max, int n_burn,
                const std::string& out_path) {
    const TheoremInstance inst = solve_theorem(which, parse_rational(alpha),
                                               parse_rational(beta), parse_rational(gamma),
                                               parse_rational(lambda));
    Sink sink(out_path);
    std::ostream& out = sink.out();
    out << "theorem " << inst.which << ", d = " << inst.d << "\n";
    out << "S = ({k_n}, " << format_rational(inst.s1) << ", " << format_rational(inst.s2)
        << "), T = ({k_n}, " << format_rational(inst.t1) << ", " << format_rational(inst.t2)
        << ")\n";
    for (std::size_t i = 0; i < 4; ++i)
        out << "  " << inst.target_labels[i] << " = " << show(inst.targets[i]) << "\n";
    if (n_max == 0) {
        out << "symbolic round-trip: " << (inst.roundtrip_exact() ? "PASS" : "FAIL") << "\n";
        return inst.roundtrip_exact() ? 0 : 1;
    }
    const GalleryReport report = theorem_report(inst, n_max, n_burn);
    print_gallery(out, report);
    return report.any_fail() ? 1 : 0;
}

int run_remark1(int n_max, int n_burn, const std::string& out_path) {
    const GalleryReport report = remark1_report(n_max, n_burn);
    Sink sink(out_path);
    print_gallery(sink.out(), report);
    return report.any_fail() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for digit-restriction fractal sets"};
    app.require_subcommand(1);

    SourceOptions src;
    std::string out_path, k_min_text = "1", k_max_text;
    std::string alpha, beta, gamma, lambda;
    int n_max = 60, n_burn = kAutoBurn, level = 20, which = 1;
    std::uint64_t count = 0, seed = 0, cap = kDefaultPointCap;

    auto* density = app.add_subcommand("density", "exact density sweep CSV");
    add_source_options(density, src);
    density->add_option("--k-min", k_min_text);
    density->add_option("--k-max", k_max_text)->required();
    density->add_option("--out", out_path);

    auto* checkpoints = app.add_subcommand("checkpoints", "checkpoint densities CSV");
    add_source_options(checkpoints, src);
    checkpoints->add_option("--n", n_max)->required();
    checkpoints->add_option("--out", out_path);

    auto* dims = app.add_subcommand("dims", "dimension report from checkpoint extremes");
    add_source_options(dims, src);
    dims->add_option("--n", n_max)->required();
    dims->add_option("--n-burn", n_burn);
    dims->add_option("--out", out_path);

    auto* sample = app.add_subcommand("sample", "materialize truncated points as CSV");
    add_source_options(sample, src);
    sample->add_option("--level", level)->required();
    sample->add_option("--count", count, "0 = full enumeration");
    sample->add_option("--seed", seed);
    sample->add_option("--cap", cap);
    sample->add_option("--out", out_path);

    auto* cross = app.add_subcommand("crosscheck", "empirical vs analytic covering counts");
    add_source_options(cross, src);
    cross->add_option("--level", level)->required();
    cross->add_option("--count", count, "0 = full enumeration");
    cross->add_option("--seed", seed);
    cross->add_option("--cap", cap);
    cross->add_option("--out", out_path);

    auto* theorem = app.add_subcommand("theorem", "solve and verify a parameter construction");
    theorem->add_option("--which", which)->required()->check(CLI::Range(1, 3));
    theorem->add_option("--alpha", alpha)->required();
    theorem->add_option("--beta", beta)->required();
    theorem->add_option("--gamma", gamma)->required();
    theorem->add_option("--lambda", lambda)->required();
    theorem->add_option("--n", n_max, "checkpoint depth, 0 = symbolic only");
    theorem->add_option("--n-burn", n_burn);
    theorem->add_option("--out", out_path);

    auto* remark1 = app.add_subcommand("remark1", "the union counterexample report");
    remark1->add_option("--n", n_max);
    remark1->add_option("--n-burn", n_burn);
    remark1->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (density->parsed()) return run_density(src, k_min_text, k_max_text, out_path);
        if (checkpoints->parsed()) return run_checkpoints(src, n_max, out_path);
        if (dims->parsed()) return run_dims(src, n_max, n_burn, out_path);
        if (sample->parsed()) return run_sample(src, level, count, seed, cap, out_path);
        if (cross->parsed()) return run_crosscheck(src, level, count, seed, cap, out_path);
        if (theorem->parsed())
            return run_theorem(which, alpha, beta, gamma, lambda, n_max, n_burn, out_path);
        if (remark1->parsed()) return run_remark1(n_max, n_burn, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
