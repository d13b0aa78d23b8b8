#pragma once

#include "incidence/semialg.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace incidence {

using Json = nlohmann::ordered_json;

inline constexpr const char* kInstanceFormat = "incidence-lab/instance";
inline constexpr int kInstanceVersion = 1;

/// {"format", "version", "d1", "d2", "complexity", "polynomials", "formula", "P", "Q"};
/// coordinates are rational strings.
Json instance_to_json(const BipartiteInstance& instance);
/// Throws std::invalid_argument on a wrong format tag, an unknown version or
/// malformed content.
BipartiteInstance instance_from_json(const Json& json);

BipartiteInstance read_instance_file(const std::filesystem::path& path);
void write_instance_file(const BipartiteInstance& instance, const std::filesystem::path& path);

Json point_to_json(const Point& x);
Point point_from_json(const Json& json);

/// One point per line, whitespace-separated rationals; `#` starts a comment.
/// Throws when dimensions disagree.
PointSet parse_points(std::istream& in);
PointSet read_points_file(const std::filesystem::path& path);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Fixed-format decimal text for doubles so that reports are byte-stable.
std::string format_double(double value);

}  // namespace incidence
