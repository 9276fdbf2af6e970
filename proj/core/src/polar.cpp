#include "zetac/polar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zetac/simplify.hpp"
#include "zetac/split.hpp"

namespace zetac {

namespace {

double normalize_phase(double phi) {
    // atan2 returns [-pi, pi]; fold the open edge so phi is in (-pi, pi].
    if (phi == -std::numbers::pi) return std::numbers::pi;
    return phi;
}

PolarSample polar_of_value(std::int64_t n, const ComplexValue& v) {
    PolarSample s;
    s.n = n;
    s.value = v;
    if (v.is_overflow()) {
        // Sentinel: magnitude beyond any finite value; keep the direction the
        // non-finite components still carry (atan2 handles infinities).
        s.g = std::numeric_limits<double>::infinity();
        const double re = std::isnan(v.re) ? 0.0 : v.re;
        const double im = std::isnan(v.im) ? 0.0 : v.im;
        s.phi = (re == 0.0 && im == 0.0) ? 0.0 : normalize_phase(std::atan2(im, re));
        return s;
    }
    s.g = std::hypot(v.re, v.im);
    s.phi = s.g == 0.0 ? 0.0 : normalize_phase(std::atan2(v.im, v.re));
    return s;
}

}  // namespace

PolarSample decompose_at(const ExprPtr& f, std::int64_t n, const EvalSettings& settings) {
    return polar_of_value(n, evaluate(f, n, settings));
}

ComplexValue reconstruct(const PolarSample& sample) {
    return {zero_absorbing_mul(sample.g, std::cos(sample.phi)),
            zero_absorbing_mul(sample.g, std::sin(sample.phi))};
}

std::vector<TrajectoryPoint> trajectory(const ExprPtr& f, const SampleSchedule& schedule,
                                        const EvalSettings& settings) {
    std::vector<TrajectoryPoint> out;
    out.reserve(schedule.size());
    for (std::int64_t n : schedule.points()) {
        TrajectoryPoint p;
        p.n = n;
        try {
            p.sample = decompose_at(f, n, settings);
        } catch (const EvalError& e) {
            p.error = e.what();
        }
        out.push_back(std::move(p));
    }
    return out;
}

RealnessVerdict is_real_valued(const ExprPtr& f, const SampleSchedule& schedule,
                               double tol_abs, double tol_rel,
                               const EvalSettings& settings) {
    if (auto sp = split_rectangular(f)) {
        if (sp->imag_part->is_constant_value(0.0)) {
            return {true, 0.0, std::nullopt};
        }
    }
    RealnessVerdict verdict;
    verdict.is_real = true;
    for (std::int64_t n : schedule.points()) {
        const ComplexValue v = evaluate(f, n, settings);
        const double abs_im = std::isnan(v.im) ? std::numeric_limits<double>::infinity()
                                               : std::fabs(v.im);
        verdict.max_abs_im = std::max(verdict.max_abs_im, abs_im);
        bool violates;
        if (!std::isfinite(v.im)) {
            violates = true;  // a sentinel imaginary part can never certify realness
        } else {
            const double g = std::hypot(v.re, v.im);
            violates = abs_im > tol_abs + tol_rel * g;
        }
        if (violates && verdict.is_real) {
            verdict.is_real = false;
            verdict.witness_n = n;
        }
    }
    return verdict;
}

PhaseLimit phase_limit(const ExprPtr& f, const SampleSchedule& schedule,
                       const EvalSettings& settings, const PhaseLimitOptions& options) {
    PhaseLimit result;
    const auto& pts = schedule.points();
    for (std::size_t k = schedule.tail_start_index(); k < pts.size(); ++k) {
        const PolarSample s = decompose_at(f, pts[k], settings);
        result.evidence.push_back({s.n, s.phi});
    }

    double lo = result.evidence.front().phi;
    double hi = lo;
    for (const PhasePoint& p : result.evidence) {
        lo = std::min(lo, p.phi);
        hi = std::max(hi, p.phi);
    }
    if (hi - lo <= options.convergence_window) {
        double sum = 0.0;
        for (const PhasePoint& p : result.evidence) sum += p.phi;
        result.kind = PhaseLimitKind::ConvergesTo;
        result.value = sum / static_cast<double>(result.evidence.size());
        return result;
    }

    // Count sign flips between consecutive significant phase steps.
    int flips = 0;
    double prev_step = 0.0;
    for (std::size_t k = 1; k < result.evidence.size(); ++k) {
        const double step = result.evidence[k].phi - result.evidence[k - 1].phi;
        if (std::fabs(step) <= options.oscillation_amplitude) continue;
        if (prev_step != 0.0 && std::signbit(step) != std::signbit(prev_step)) ++flips;
        prev_step = step;
    }
    if (flips >= options.min_sign_flips) {
        result.kind = PhaseLimitKind::Oscillates;
        return result;
    }
    result.kind = PhaseLimitKind::Undetermined;
    return result;
}

}  // namespace zetac
