#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetac/expr.hpp"
#include "zetac/schedule.hpp"

namespace zetac {

struct CompareThresholds {
    double small = 1e-3;      // max tail ratio below this counts as collapsed
    double large = 1e3;       // min tail ratio above this counts as exploded
    double theta_band = 100.0;  // two-sided ratio band for Theta
    double slope_tol = 0.05;  // |d log r / d log n| tolerance
    // Slope of log r against log log n; separates ratios that drift to 0 or
    // infinity through a log factor, which the ratio thresholds alone can
    // never certify at reachable n (1/log n stays above 0.02 for all
    // 64-bit n).
    double trend_tol = 0.25;
};

enum class Dominance {
    StrictlyDominated,
    StrictlyDominates,
    ThetaEquivalent,
    Undetermined,
};

struct RatioPoint {
    std::int64_t n = 0;
    // g1/g2. +inf when only g1 overflowed, 0 when only g2 did, NaN when both
    // did (the sample carries no usable ordering and forces Undetermined).
    double ratio = 0.0;
};

struct DominanceVerdict {
    Dominance relation = Dominance::Undetermined;
    std::vector<RatioPoint> ratio_evidence;  // tail points, schedule order
    double trend_slope = 0.0;  // least-squares slope of log ratio vs log n
};

class ZeroDenominatorError : public std::runtime_error {
public:
    explicit ZeroDenominatorError(std::int64_t n)
        : std::runtime_error("comparison denominator has zero modulus at n=" +
                             std::to_string(n)),
          n_(n) {}
    std::int64_t n() const { return n_; }

private:
    std::int64_t n_;
};

/// Compares the moduli g1, g2 over the schedule tail. Structurally identical
/// expressions short-circuit to ThetaEquivalent. Otherwise the tail ratios
/// decide: collapsed/exploded ratios with a matching log-log trend give a
/// strict verdict, a steady log-factor drift (log r vs log log n) gives a
/// strict verdict for slowly separating pairs, ratios bounded inside the
/// theta band with flat trend give ThetaEquivalent, and anything else is
/// Undetermined. The relation is a pure function of the evidence and the
/// thresholds.
DominanceVerdict compare_modulus(const ExprPtr& f1, const ExprPtr& f2,
                                 const SampleSchedule& schedule,
                                 const CompareThresholds& thresholds = {});

struct BigOResult {
    bool holds = false;
    double witness_constant = 0.0;
    std::int64_t from_n = 0;
};

/// psi = O(f) iff compare_modulus(psi, f) is dominated or theta-equivalent.
/// On success the returned (witness_constant, from_n) satisfy
/// g_psi(n) <= witness_constant * g_f(n) at every schedule point >= from_n,
/// re-checked pointwise before returning.
BigOResult check_big_o(const ExprPtr& psi, const ExprPtr& f,
                       const SampleSchedule& schedule,
                       const CompareThresholds& thresholds = {});

}  // namespace zetac
