// JSON documents for the command-line front end, and the point literal
// format:
//   {"kind": "fixed_point", "left": "1", "right": "0"}
//   {"kind": "stream", "preperiod": [["", "0", "10"]], "period": [["0", "1", ""]],
//    "left_seed": null, "right_seed": null}
// Every document is built with insertion-ordered objects so that equal inputs
// give byte-identical output.

#ifndef CONSTSUB_REPORT_HPP_
#define CONSTSUB_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "constsub/desubstitution.hpp"
#include "constsub/orbit_sim.hpp"
#include "constsub/pair_classifier.hpp"
#include "constsub/tower.hpp"

namespace constsub {

using Json = nlohmann::ordered_json;

inline constexpr char const* kToolName = "constsub";
inline constexpr char const* kToolVersion = "0.1.0";
/// Event lists in reports are cut after this many entries.
inline constexpr std::size_t kMaxListedEvents = 64;

struct ReportOptions {
  std::size_t                max_word = kDefaultWordBudget;
  std::optional<std::size_t> brute_bound;
  std::optional<std::size_t> orbit_bound;
  /// 0 selects default_horizon.
  std::size_t                horizon = 0;
  std::size_t                window = kDefaultWindow;
};

[[nodiscard]] Json substitution_json(Substitution const& s);
[[nodiscard]] Json point_json(RepresentedPoint const& x);
/// Throws ParseError on a malformed literal and ValidationError when the
/// literal does not describe a point of X_tau.
[[nodiscard]] RepresentedPoint point_from_json(SubstitutionPtr s, nlohmann::json const& j);
[[nodiscard]] RepresentedPoint parse_point_literal(SubstitutionPtr s, std::string const& text);

[[nodiscard]] Json evidence_json(EvidenceReport const& rep);
[[nodiscard]] Json verdict_json(PairVerdict const& v);

[[nodiscard]] Json analyze_report(Substitution const& s, std::string const& source,
                                  ReportOptions const& opts);
[[nodiscard]] Json decide_report(Substitution const& s, std::string const& source,
                                 ReportOptions const& opts);
[[nodiscard]] Json reduce_report(Substitution const& s, std::string const& source);
[[nodiscard]] Json classify_report(SubstitutionPtr s, std::string const& source,
                                   RepresentedPoint const& x, RepresentedPoint const& y,
                                   ReportOptions const& opts);
[[nodiscard]] Json simulate_report(SubstitutionPtr s, std::string const& source,
                                   RepresentedPoint const& x, RepresentedPoint const& y,
                                   ReportOptions const& opts);
[[nodiscard]] Json language_report(Substitution const& s, std::string const& source,
                                   std::size_t n, ReportOptions const& opts);
[[nodiscard]] Json tower_report(std::size_t depth, std::size_t horizon, std::size_t window);

/// {"error": {"kind": ..., "message": ..., "line": ..., "column": ...}}
[[nodiscard]] Json error_json(std::string const& kind, std::string const& message,
                              std::size_t line = 0, std::size_t column = 0);

}  // namespace constsub

#endif  // CONSTSUB_REPORT_HPP_
