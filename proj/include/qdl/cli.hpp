#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdl/congruence.hpp"
#include "qdl/orbits.hpp"
#include "qdl/polyring.hpp"

namespace qdl {

using Json = nlohmann::ordered_json;

/// Ascending array of decimal coefficient strings.
Json poly_to_json(const IntPoly &p);
/// Inverse of poly_to_json; throws std::invalid_argument on malformed input.
IntPoly poly_from_json(const Json &j);

Json report_to_json(const CongruenceReport &r);
Json summary_to_json(const SweepSummary &s, const SweepConfig &cfg);
Json audit_to_json(const AuditReport &r);

std::string summary_to_text(const SweepSummary &s);
std::string audit_to_text(const AuditReport &r);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;
inline constexpr int usage = 2;
} // namespace exit_code

/// Entry point behind the qdelannoy executable. args excludes the program
/// name. Reports go to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qdl
