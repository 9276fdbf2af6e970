#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetac/eval.hpp"
#include "zetac/expr.hpp"
#include "zetac/schedule.hpp"

namespace zetac {

/// One point of the polar decomposition: f(n) as rectangular value plus
/// modulus g = sqrt(Re^2 + Im^2) and phase phi in (-pi, pi]. phi is 0 at
/// the origin. Overflowed values report g = +inf with a best-effort phase.
struct PolarSample {
    std::int64_t n = 0;
    ComplexValue value;
    double g = 0.0;
    double phi = 0.0;
};

PolarSample decompose_at(const ExprPtr& f, std::int64_t n,
                         const EvalSettings& settings = {});

/// Euler reconstruction: g*cos(phi) + i*g*sin(phi).
ComplexValue reconstruct(const PolarSample& sample);

struct TrajectoryPoint {
    std::int64_t n = 0;
    std::optional<PolarSample> sample;  // absent when evaluation failed
    std::string error;                  // populated when sample is absent

    bool ok() const { return sample.has_value(); }
};

/// One entry per schedule point, in schedule order; evaluation failures are
/// recorded in place rather than skipped.
std::vector<TrajectoryPoint> trajectory(const ExprPtr& f, const SampleSchedule& schedule,
                                        const EvalSettings& settings = {});

struct RealnessVerdict {
    bool is_real = false;
    double max_abs_im = 0.0;
    std::optional<std::int64_t> witness_n;  // smallest violating point
};

/// Real iff |Im| <= tol_abs + tol_rel*g at every schedule point. When the
/// symbolic split succeeds and its imaginary component simplifies to the
/// literal 0 the verdict is real without sampling; sampling alone can never
/// prove Im == 0.
RealnessVerdict is_real_valued(const ExprPtr& f, const SampleSchedule& schedule,
                               double tol_abs = 1e-9, double tol_rel = 1e-9,
                               const EvalSettings& settings = {});

enum class PhaseLimitKind { ConvergesTo, Oscillates, Undetermined };

struct PhasePoint {
    std::int64_t n = 0;
    double phi = 0.0;
};

struct PhaseLimit {
    PhaseLimitKind kind = PhaseLimitKind::Undetermined;
    double value = 0.0;  // meaningful for ConvergesTo; lies in (-pi, pi]
    std::vector<PhasePoint> evidence;
};

struct PhaseLimitOptions {
    double convergence_window = 1e-3;   // max-min of tail phases, radians
    double oscillation_amplitude = 1e-2;  // minimum significant step, radians
    int min_sign_flips = 3;
};

/// Summarizes the phase over the schedule tail: ConvergesTo(mean) when the
/// tail phases sit within the convergence window, Oscillates when their
/// first differences flip sign repeatedly with significant amplitude.
PhaseLimit phase_limit(const ExprPtr& f, const SampleSchedule& schedule,
                       const EvalSettings& settings = {},
                       const PhaseLimitOptions& options = {});

}  // namespace zetac
