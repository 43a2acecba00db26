#pragma once

#include "equidist/experiments.hpp"
#include "equidist/numeric.hpp"
#include "equidist/sequences.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace equidist::serialize {

using Json = nlohmann::ordered_json;

/// Shortest-round-trip text for a double ("%.17g", trimmed by the JSON lib
/// on its own path; CSV uses this form directly).
std::string format_double(double v);

/// Exact rationals as decimal strings: integers as plain digits, otherwise
/// "numerator/denominator" (arbitrary precision safe).
std::string rational_to_decimal_string(const BigRational& r);

Json points_to_json(const sequences::PointSet& P);
std::string points_to_csv(const sequences::PointSet& P);

Json digits_to_json(const sequences::DigitStream& s);
std::string digits_to_csv(const sequences::DigitStream& s);

Json dilation_to_json(const sequences::DilationSequence& D);
std::string dilation_to_csv(const sequences::DilationSequence& D);

Json trajectory_to_json(const experiments::TrajectoryReport& r, std::uint64_t seed);
std::string trajectory_to_csv(const experiments::TrajectoryReport& r);

/// Headerless one-value-per-line CSV of unit-interval points.
sequences::PointSet parse_points_csv(std::istream& in);

/// Scalar report: header row naming the JSON keys, one data row.
std::string scalar_report_csv(const Json& payload);

}  // namespace equidist::serialize
