#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zetac {

enum class ScheduleErrorKind { TooShort, NotIncreasing, OutOfDomain };

class ScheduleError : public std::runtime_error {
public:
    ScheduleError(ScheduleErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ScheduleErrorKind kind() const { return kind_; }

private:
    ScheduleErrorKind kind_;
};

/// The strictly increasing sequence of cardinalities n >= 2 along which all
/// asymptotic limits are probed. The trailing tail_window points feed limit,
/// slope, and ratio estimates. Explicit lists may hold a single point (handy
/// for spot checks); geometric schedules need count >= 2.
class SampleSchedule {
public:
    static constexpr std::size_t kDefaultTailWindow = 8;

    static SampleSchedule from_points(std::vector<std::int64_t> points,
                                      std::size_t tail_window = kDefaultTailWindow);
    static SampleSchedule geometric(std::int64_t start, std::int64_t factor,
                                    std::int64_t count,
                                    std::size_t tail_window = kDefaultTailWindow);

    const std::vector<std::int64_t>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    std::size_t tail_window() const { return tail_window_; }
    std::size_t tail_start_index() const { return points_.size() - tail_window_; }

    SampleSchedule with_tail_window(std::size_t m) const;

private:
    SampleSchedule(std::vector<std::int64_t> points, std::size_t tail_window)
        : points_(std::move(points)), tail_window_(tail_window) {}

    std::vector<std::int64_t> points_;
    std::size_t tail_window_;
};

/// Parses "geometric:<start>:<factor>:<count>" or "list:v1,v2,..." with
/// integer values >= 2, factor >= 2, count >= 2. Throws ParseError for
/// malformed text and ScheduleError for domain violations.
SampleSchedule parse_schedule(std::string_view input);

/// geometric:2:2:40 — reaches n ~ 10^12 where low-order terms of the usual
/// growth catalog are negligible.
SampleSchedule default_schedule();

}  // namespace zetac
