#pragma once

// JSON forms of the library values. Every integer is written as a decimal string and
// objects use sorted keys, so dump(parse(s)) == s for anything produced by canonical().

#include <filesystem>
#include <string>

#include "json.hpp"

#include "mmp132/oracle.hpp"
#include "mmp132/series.hpp"

namespace mmp132 {

using json = nlohmann::json;

json to_json(const XPoly& p);
XPoly xpoly_from_json(const json& j);

json to_json(const TSeries& s);
TSeries series_from_json(const json& j);

json to_json(const RationalGF& r);
RationalGF rational_from_json(const json& j);

json to_json(const DistTable& t);
DistTable table_from_json(const json& j);

/// Two-space indented dump with a trailing newline.
std::string canonical(const json& j);

/// Writes to a sibling temporary file, then renames it over `target`, so concurrent
/// readers see either the old or the new content.
void write_file_atomic(const std::filesystem::path& target, const std::string& content);

}  // namespace mmp132
