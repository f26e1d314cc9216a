#pragma once

#include "fracdim/density_analysis.hpp"
#include "fracdim/digit_sets.hpp"
#include "fracdim/product_spaces.hpp"
#include "fracdim/sampler.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fracdim {

// Spec text format, line oriented and whitespace insensitive; '#' starts a
// comment. Keys: schedule (recurrence k0=<int> | explicit <int>,<int>,...),
// a1, a2 (rationals as p/q). All three keys are required, none may repeat.
DigitSetSpec parse_spec_text(std::string_view text);
DigitSetSpec load_spec_file(const std::string& path);

// Product config: one `factor = <spec-file>` line per factor in order, plus
// an optional `power = <d>`. Relative factor paths resolve against the
// config file's directory.
struct ProductConfig {
    std::vector<std::string> factor_paths;
    int power = 1;
};

ProductConfig parse_product_config(std::string_view text);
ProductConfig load_product_file(const std::string& path);

std::string format_rational(const Rational& r);  // "p/q", or "p" when q = 1

void write_density_csv(std::ostream& out, const std::vector<DensityEntry>& entries);
void write_checkpoint_csv(std::ostream& out, const std::vector<CheckpointDensity>& rows);
void write_covering_csv(std::ostream& out, const CoveringProfile& profile);
void write_points_csv(std::ostream& out, const PointCloud& cloud);
void write_boxcount_csv(std::ostream& out, const CrosscheckReport& report);

}  // namespace fracdim
