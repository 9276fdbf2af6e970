#include "zetac/schedule.hpp"

#include <charconv>
#include <limits>

#include "zetac/parser.hpp"

namespace zetac {

SampleSchedule SampleSchedule::from_points(std::vector<std::int64_t> points,
                                           std::size_t tail_window) {
    if (points.empty()) {
        throw ScheduleError(ScheduleErrorKind::TooShort,
                            "schedule needs at least 1 point");
    }
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (points[k] < 2) {
            throw ScheduleError(ScheduleErrorKind::OutOfDomain,
                                "schedule points must be >= 2");
        }
        if (k > 0 && points[k] <= points[k - 1]) {
            throw ScheduleError(ScheduleErrorKind::NotIncreasing,
                                "schedule points must be strictly increasing");
        }
    }
    if (tail_window == 0) {
        throw ScheduleError(ScheduleErrorKind::OutOfDomain, "tail window must be >= 1");
    }
    if (tail_window > points.size()) tail_window = points.size();
    return SampleSchedule(std::move(points), tail_window);
}

SampleSchedule SampleSchedule::geometric(std::int64_t start, std::int64_t factor,
                                         std::int64_t count, std::size_t tail_window) {
    if (start < 2 || factor < 2) {
        throw ScheduleError(ScheduleErrorKind::OutOfDomain,
                            "geometric schedule needs start >= 2 and factor >= 2");
    }
    if (count < 2) {
        throw ScheduleError(ScheduleErrorKind::TooShort,
                            "geometric schedule needs count >= 2");
    }
    std::vector<std::int64_t> pts;
    pts.reserve(static_cast<std::size_t>(count));
    std::int64_t v = start;
    for (std::int64_t k = 0; k < count; ++k) {
        pts.push_back(v);
        if (k + 1 < count) {
            if (v > std::numeric_limits<std::int64_t>::max() / factor) {
                throw ScheduleError(ScheduleErrorKind::OutOfDomain,
                                    "geometric schedule point overflows 64-bit range");
            }
            v *= factor;
        }
    }
    return from_points(std::move(pts), tail_window);
}

SampleSchedule SampleSchedule::with_tail_window(std::size_t m) const {
    if (m == 0 || m > points_.size()) {
        throw ScheduleError(ScheduleErrorKind::OutOfDomain,
                            "tail window must be in [1, schedule length]");
    }
    SampleSchedule copy = *this;
    copy.tail_window_ = m;
    return copy;
}

namespace {

std::int64_t parse_int_field(std::string_view text, std::size_t offset,
                             std::size_t length) {
    const std::string_view field = text.substr(offset, length);
    std::int64_t value = 0;
    auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size() ||
        field.empty()) {
        throw ParseError(ParseErrorKind::MalformedNumber,
                         {offset, offset + field.size()},
                         "expected an integer in schedule");
    }
    return value;
}

}  // namespace

SampleSchedule parse_schedule(std::string_view input) {
    const std::size_t colon = input.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError(ParseErrorKind::UnexpectedToken, {0, input.size()},
                         "schedule must start with 'geometric:' or 'list:'");
    }
    const std::string_view head = input.substr(0, colon);
    if (head == "geometric") {
        std::size_t p1 = input.find(':', colon + 1);
        std::size_t p2 = p1 == std::string_view::npos ? p1 : input.find(':', p1 + 1);
        if (p1 == std::string_view::npos || p2 == std::string_view::npos) {
            throw ParseError(ParseErrorKind::UnexpectedToken, {0, input.size()},
                             "expected geometric:<start>:<factor>:<count>");
        }
        const std::int64_t start = parse_int_field(input, colon + 1, p1 - colon - 1);
        const std::int64_t factor = parse_int_field(input, p1 + 1, p2 - p1 - 1);
        const std::int64_t count = parse_int_field(input, p2 + 1, input.size() - p2 - 1);
        return SampleSchedule::geometric(start, factor, count);
    }
    if (head == "list") {
        std::vector<std::int64_t> pts;
        std::size_t pos = colon + 1;
        while (true) {
            std::size_t comma = input.find(',', pos);
            const std::size_t end = comma == std::string_view::npos ? input.size() : comma;
            pts.push_back(parse_int_field(input, pos, end - pos));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return SampleSchedule::from_points(std::move(pts));
    }
    throw ParseError(ParseErrorKind::UnexpectedToken, {0, colon},
                     "unknown schedule form '" + std::string(head) +
                         "' (expected 'geometric' or 'list')");
}

SampleSchedule default_schedule() { return SampleSchedule::geometric(2, 2, 40); }

}  // namespace zetac
