#pragma once

#include "fracdim/density_analysis.hpp"
#include "fracdim/digit_sets.hpp"
#include "fracdim/numeric.hpp"

#include <array>
#include <string>
#include <vector>

namespace fracdim {

// One solved parameter construction. The four targets mean different
// dimensions per theorem (see target_labels); the construction realizes them
// as E = E_S^d, F = E_T^d with S = S({k_n}, s1, s2), T = S({k_n}, t1, t2).
struct TheoremInstance {
    int which = 1;
    Rational alpha, beta, gamma, lambda;
    int d = 1;
    Rational s1, s2;
    Rational t1, t2;
    std::array<std::string, 4> target_labels;
    std::array<Rational, 4> targets;
    std::array<Rational, 4> reproduced;  // closed-form round-trip values

    bool roundtrip_exact() const { return reproduced == targets; }
};

// Solves the construction: d = smallest integer putting every scaled
// quantity in (0,1); Theorem 1 takes S = ((lambda-beta)/d, alpha/d),
// T = (beta/d, gamma/d); Theorems 2 and 3 share S = (alpha/d, gamma/d),
// T = (beta/d, (lambda-gamma)/d). Throws ConstraintViolated naming the
// failing inequality; DegenerateLambda when lambda <= gamma for which 2/3,
// where the construction's t2 would leave (0,1).
TheoremInstance solve_theorem(int which, const Rational& alpha, const Rational& beta,
                              const Rational& gamma, const Rational& lambda);

enum class TargetStatus { Pass, Inconclusive, Fail };

const char* to_string(TargetStatus status);

struct NumericTarget {
    std::string label;
    Rational estimate;
    Rational target;
    Rational deviation;  // |estimate - target|
    Rational certified;  // certified bound for the window used
    TargetStatus status;
};

struct SymbolicClaim {
    std::string label;
    bool holds = false;
};

// Numeric rows are estimated from checkpoint windows and judged against the
// certified bound: Fail when the deviation exceeds it (an invariant
// violation), Pass when the bound itself is within tolerance, Inconclusive
// when the window is too shallow to certify either way. Symbolic rows are
// exact rational identities and must hold outright.
struct GalleryReport {
    int n_max = 0;
    int n_burn = 0;
    Rational tolerance;
    std::vector<NumericTarget> numeric;
    std::vector<SymbolicClaim> symbolic;

    bool any_fail() const;
    bool all_pass() const;
};

inline constexpr int kAutoBurn = -1;

// Numeric + symbolic verification of a solved instance on the adaptive
// default schedule.
GalleryReport theorem_report(const TheoremInstance& inst, int n_max, int n_burn = kAutoBurn,
                             const Rational& tolerance = Rational(1, 50));

// The union counterexample: S = ({k_n}, 1/2, 1/4), T = ({k_n}, 1/4, 1/3) on
// the k_0 = 5 schedule; E = E_S u E_T has dim_H E = 1/4 while
// dim_H (E x E) >= 7/12 > 2 dim_H E.
GalleryReport remark1_report(int n_max, int n_burn = kAutoBurn,
                             const Rational& tolerance = Rational(1, 50));

}  // namespace fracdim
