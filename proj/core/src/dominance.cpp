#include "zetac/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zetac/polar.hpp"
#include "zetac/simplify.hpp"

namespace zetac {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t m = xs.size();
    double xm = 0.0, ym = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        xm += xs[k];
        ym += ys[k];
    }
    xm /= static_cast<double>(m);
    ym /= static_cast<double>(m);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        num += (xs[k] - xm) * (ys[k] - ym);
        den += (xs[k] - xm) * (xs[k] - xm);
    }
    return den == 0.0 ? 0.0 : num / den;
}

struct TailStats {
    std::size_t total = 0;
    std::size_t infinite = 0;
    std::size_t zero = 0;
    std::size_t indeterminate = 0;  // both sides overflowed
    double min_finite = kInf;
    double max_finite = 0.0;
    std::vector<double> log_n, loglog_n, log_r;  // finite positive ratios only
};

TailStats collect(const std::vector<RatioPoint>& evidence) {
    TailStats s;
    s.total = evidence.size();
    for (const RatioPoint& p : evidence) {
        if (std::isnan(p.ratio)) {
            ++s.indeterminate;
        } else if (std::isinf(p.ratio)) {
            ++s.infinite;
        } else if (p.ratio == 0.0) {
            ++s.zero;
        } else {
            s.min_finite = std::min(s.min_finite, p.ratio);
            s.max_finite = std::max(s.max_finite, p.ratio);
            const double ln_n = std::log(static_cast<double>(p.n));
            s.log_n.push_back(ln_n);
            s.loglog_n.push_back(std::log(ln_n));
            s.log_r.push_back(std::log(p.ratio));
        }
    }
    return s;
}

bool monotone_nonincreasing(const std::vector<RatioPoint>& e) {
    for (std::size_t k = 1; k < e.size(); ++k) {
        if (e[k].ratio > e[k - 1].ratio * (1.0 + 1e-9)) return false;
    }
    return true;
}

bool monotone_nondecreasing(const std::vector<RatioPoint>& e) {
    for (std::size_t k = 1; k < e.size(); ++k) {
        if (e[k].ratio < e[k - 1].ratio * (1.0 - 1e-9)) return false;
    }
    return true;
}

Dominance decide(const std::vector<RatioPoint>& evidence, const TailStats& s,
                 const CompareThresholds& t, double slope) {
    if (s.indeterminate > 0) return Dominance::Undetermined;
    if (s.infinite == s.total) return Dominance::StrictlyDominates;
    if (s.zero == s.total) return Dominance::StrictlyDominated;
    if (s.infinite > 0 || s.zero > 0) {
        // Mixed tails: the finite part must already be decisive.
        if (s.zero == 0 && !s.log_r.empty() && s.min_finite > t.large) {
            return Dominance::StrictlyDominates;
        }
        if (s.infinite == 0 && s.max_finite < t.small) {
            return Dominance::StrictlyDominated;
        }
        return Dominance::Undetermined;
    }

    if (s.max_finite < t.small && slope < -t.slope_tol) {
        return Dominance::StrictlyDominated;
    }
    if (s.min_finite > t.large && slope > t.slope_tol) {
        return Dominance::StrictlyDominates;
    }

    const double trend = lsq_slope(s.loglog_n, s.log_r);
    if (s.max_finite < 1.0 && monotone_nonincreasing(evidence) && trend < -t.trend_tol) {
        return Dominance::StrictlyDominated;
    }
    if (s.min_finite > 1.0 && monotone_nondecreasing(evidence) && trend > t.trend_tol) {
        return Dominance::StrictlyDominates;
    }

    if (s.min_finite >= 1.0 / t.theta_band && s.max_finite <= t.theta_band &&
        std::fabs(slope) <= t.slope_tol) {
        return Dominance::ThetaEquivalent;
    }
    return Dominance::Undetermined;
}

}  // namespace

DominanceVerdict compare_modulus(const ExprPtr& f1, const ExprPtr& f2,
                                 const SampleSchedule& schedule,
                                 const CompareThresholds& thresholds) {
    DominanceVerdict verdict;
    const auto& pts = schedule.points();
    const std::size_t tail_start = schedule.tail_start_index();

    if (structurally_equal(simplify(f1), simplify(f2))) {
        for (std::size_t k = tail_start; k < pts.size(); ++k) {
            verdict.ratio_evidence.push_back({pts[k], 1.0});
        }
        verdict.trend_slope = 0.0;
        verdict.relation = Dominance::ThetaEquivalent;
        return verdict;
    }

    const EvalSettings settings{};  // saturating overflow; log base unused post-parse
    for (std::size_t k = tail_start; k < pts.size(); ++k) {
        const std::int64_t n = pts[k];
        const double g1 = decompose_at(f1, n, settings).g;
        const double g2 = decompose_at(f2, n, settings).g;
        if (g2 == 0.0) throw ZeroDenominatorError(n);
        double r;
        if (std::isinf(g1) && std::isinf(g2)) {
            r = std::numeric_limits<double>::quiet_NaN();
        } else if (std::isinf(g1)) {
            r = kInf;
        } else if (std::isinf(g2)) {
            r = 0.0;
        } else {
            r = g1 / g2;
        }
        verdict.ratio_evidence.push_back({n, r});
    }

    const TailStats stats = collect(verdict.ratio_evidence);
    if (stats.infinite == stats.total) {
        verdict.trend_slope = kInf;
    } else if (stats.zero == stats.total) {
        verdict.trend_slope = -kInf;
    } else if (stats.log_r.size() >= 2) {
        verdict.trend_slope = lsq_slope(stats.log_n, stats.log_r);
    } else {
        verdict.trend_slope = 0.0;
    }
    verdict.relation = decide(verdict.ratio_evidence, stats, thresholds, verdict.trend_slope);
    return verdict;
}

BigOResult check_big_o(const ExprPtr& psi, const ExprPtr& f,
                       const SampleSchedule& schedule,
                       const CompareThresholds& thresholds) {
    const DominanceVerdict v = compare_modulus(psi, f, schedule, thresholds);
    BigOResult result;
    result.from_n = v.ratio_evidence.front().n;
    result.holds = v.relation == Dominance::StrictlyDominated ||
                   v.relation == Dominance::ThetaEquivalent;
    if (!result.holds) return result;

    double max_ratio = 0.0;
    for (const RatioPoint& p : v.ratio_evidence) max_ratio = std::max(max_ratio, p.ratio);
    result.witness_constant = max_ratio > 0.0 ? 2.0 * max_ratio : 1.0;

    // Re-check the witness pointwise over every schedule point >= from_n.
    const EvalSettings settings{};
    for (std::int64_t n : schedule.points()) {
        if (n < result.from_n) continue;
        const double lhs = decompose_at(psi, n, settings).g;
        const double rhs = result.witness_constant * decompose_at(f, n, settings).g;
        if (!(lhs <= rhs)) {
            result.holds = false;
            result.witness_constant = 0.0;
            return result;
        }
    }
    return result;
}

}  // namespace zetac
