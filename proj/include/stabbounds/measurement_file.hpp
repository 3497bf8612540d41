#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "stabbounds/bounds.hpp"

namespace stabbounds {

struct ParseError : std::runtime_error {
    int line = 0;
    ParseError(int line_, const std::string& message);
};

// Plain-text measurement files ("stabbounds-measurements v1"); format is
// documented in the README. Parse errors carry the offending line number.
MeasurementRecord parse_measurement_text(const std::string& text);
MeasurementRecord load_measurement_file(const std::string& path);

std::string format_measurement_record(const MeasurementRecord& record);
void save_measurement_file(const MeasurementRecord& record, const std::string& path);

}  // namespace stabbounds
