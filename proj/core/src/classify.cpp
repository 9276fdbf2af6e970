#include "zetac/classify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace zetac {

namespace {

struct Fit {
    double slope = 0.0;
    double max_residual = 0.0;
};

Fit lsq_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
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
    Fit fit;
    fit.slope = den == 0.0 ? 0.0 : num / den;
    for (std::size_t k = 0; k < m; ++k) {
        fit.max_residual = std::max(
            fit.max_residual, std::fabs(ys[k] - (ym + fit.slope * (xs[k] - xm))));
    }
    return fit;
}

// Ratio spread check: every value within 5% of every other.
bool stabilizes(const std::vector<double>& q) {
    if (q.size() < 2) return false;
    const auto [lo, hi] = std::minmax_element(q.begin(), q.end());
    if (*lo <= 0.0) return false;
    return *hi / *lo <= 1.05;
}

constexpr double kSlopeTol = 0.05;
constexpr double kGrowthTol = 1e-3;

}  // namespace

GrowthLabel classify_zeta(const ExprPtr& f, const SampleSchedule& schedule,
                          const EvalSettings& settings) {
    GrowthLabel label;
    label.limiting_phase = phase_limit(f, schedule, settings);

    struct Point {
        std::int64_t n;
        double g;
    };
    std::vector<Point> all, window;
    for (std::int64_t n : schedule.points()) {
        all.push_back({n, decompose_at(f, n, settings).g});
    }
    for (const Point& p : all) {
        if (p.g > 0.0 && std::isfinite(p.g)) window.push_back(p);
    }
    if (window.size() > schedule.tail_window()) {
        window.erase(window.begin(), window.end() - schedule.tail_window());
    }

    if (window.size() < 3) {
        const bool all_equal = std::all_of(all.begin(), all.end(), [&](const Point& p) {
            return p.g == all.front().g;
        });
        label.family = all_equal ? GrowthFamily::Constant : GrowthFamily::Unclassified;
        return label;
    }

    std::vector<double> ns, log_ns, log_gs;
    for (const Point& p : window) {
        ns.push_back(static_cast<double>(p.n));
        log_ns.push_back(std::log(static_cast<double>(p.n)));
        log_gs.push_back(std::log(p.g));
    }

    // Exponential: log g is linear in n itself. Requires a wide window so a
    // locally-linear polynomial cannot masquerade.
    if (ns.back() / ns.front() >= 4.0) {
        const Fit exp_fit = lsq_fit(ns, log_gs);
        const double scale = 1.0 + std::fabs(*std::max_element(
                                       log_gs.begin(), log_gs.end(),
                                       [](double a, double b) {
                                           return std::fabs(a) < std::fabs(b);
                                       }));
        if (exp_fit.slope > 0.0 && exp_fit.max_residual / scale < 1e-6) {
            label.family = GrowthFamily::Exponential;
            return label;
        }
    }

    const Fit fit = lsq_fit(log_ns, log_gs);
    const double s = fit.slope;

    bool stable = true;
    if (window.size() >= 4) {
        const std::size_t h = window.size() / 2;
        const Fit first = lsq_fit({log_ns.begin(), log_ns.begin() + h},
                                  {log_gs.begin(), log_gs.begin() + h});
        const Fit second = lsq_fit({log_ns.begin() + h, log_ns.end()},
                                   {log_gs.begin() + h, log_gs.end()});
        stable = std::fabs(first.slope - second.slope) <= kSlopeTol;
    }

    if (std::fabs(s) <= kSlopeTol) {
        const bool grows = window.back().g > window.front().g * (1.0 + kGrowthTol);
        if (!grows) {
            label.family = GrowthFamily::Constant;
            return label;
        }
        std::vector<double> q;
        for (const Point& p : window) {
            if (p.n >= 3 && p.g > 1.0) {
                q.push_back(std::log(p.g) / std::log(std::log(static_cast<double>(p.n))));
            }
        }
        label.family = stabilizes(q) ? GrowthFamily::Logarithmic
                                     : GrowthFamily::Unclassified;
        return label;
    }

    if (std::fabs(s - 1.0) <= kSlopeTol) {
        std::vector<double> q, q_over_log;
        for (const Point& p : window) {
            const double ratio = p.g / static_cast<double>(p.n);
            q.push_back(ratio);
            q_over_log.push_back(ratio / std::log(static_cast<double>(p.n)));
        }
        if (q.back() > q.front() * (1.0 + kGrowthTol) && stabilizes(q_over_log)) {
            label.family = GrowthFamily::Linearithmic;
            return label;
        }
        label.family = stable ? GrowthFamily::Linear : GrowthFamily::Unclassified;
        if (label.family == GrowthFamily::Linear) label.degree = 1.0;
        return label;
    }

    if (stable && s > 0.0) {
        label.family = GrowthFamily::Polynomial;
        label.degree = s;
        return label;
    }
    label.family = GrowthFamily::Unclassified;
    return label;
}

const char* growth_family_name(GrowthFamily family) {
    switch (family) {
        case GrowthFamily::Constant: return "Constant";
        case GrowthFamily::Logarithmic: return "Logarithmic";
        case GrowthFamily::Linear: return "Linear";
        case GrowthFamily::Linearithmic: return "Linearithmic";
        case GrowthFamily::Polynomial: return "Polynomial";
        case GrowthFamily::Exponential: return "Exponential";
        case GrowthFamily::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

}  // namespace zetac
