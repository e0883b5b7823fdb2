#pragma once

#include <string>
#include <string_view>

#include "metric.hpp"

namespace divmax {

// Plain-text instance format:
//
//   points <D> <n> <norm>      or      matrix <n>
//   <n lines of D reals>               <n lines of n reals>
//
// Blank lines and lines starting with '#' are ignored. Parse failures throw
// kParse with the offending line number. The exponent q is not part of the
// file; it is supplied by the caller.
MetricInstance parse_instance(std::string_view text, double q = 1.0,
                              bool validate = true);
MetricInstance load_instance(const std::string& path, double q = 1.0,
                             bool validate = true);

// Shortest round-trip representation of every value, so writing the same
// instance twice yields byte-identical files.
std::string format_instance(const MetricInstance& inst);
void save_instance(const MetricInstance& inst, const std::string& path);

}  // namespace divmax
