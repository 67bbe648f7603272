#include "constsub/report.hpp"

#include <algorithm>

#include "constsub/error.hpp"
#include "constsub/reduction.hpp"

namespace constsub {

namespace {

Json tool_json() { return Json{{"name", kToolName}, {"version", kToolVersion}}; }

Json header(std::string const& command) {
  Json j;
  j["command"] = command;
  j["tool"] = tool_json();
  return j;
}

Json input_json(Substitution const& s, std::string const& source) {
  return Json{{"source", source}, {"substitution", substitution_json(s)}};
}

template <class T>
Json optional_json(std::optional<T> const& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json events_head(std::vector<std::size_t> const& events) {
  std::size_t const k = std::min(events.size(), kMaxListedEvents);
  return Json(std::vector<std::size_t>(events.begin(), events.begin() + static_cast<long>(k)));
}

Json entry_json(Substitution const& s, StreamEntry const& e) {
  return Json::array({s.render(e.prefix), s.render(e.center), s.render(e.suffix)});
}

StreamEntry entry_from_json(Substitution const& s, nlohmann::json const& j) {
  if (!j.is_array() || j.size() != 3 ||
      !std::all_of(j.begin(), j.end(), [](auto const& x) { return x.is_string(); })) {
    throw ParseError("stream entry must be [prefix, center, suffix] strings");
  }
  Word const center = s.parse_word(j[1].get<std::string>());
  if (center.size() != 1) throw ParseError("stream entry center must be one letter");
  return StreamEntry{s.parse_word(j[0].get<std::string>()), center[0],
                     s.parse_word(j[2].get<std::string>())};
}

std::optional<Letter> seed_from_json(Substitution const& s, nlohmann::json const& j,
                                     char const* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_string()) throw ParseError(std::string(key) + " must be a letter or null");
  Word const w = s.parse_word(j[key].get<std::string>());
  if (w.size() != 1) throw ParseError(std::string(key) + " must be one letter");
  return w[0];
}

Letter letter_field(Substitution const& s, nlohmann::json const& j, char const* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw ParseError(std::string("point literal needs a letter in \"") + key + "\"");
  }
  Word const w = s.parse_word(j[key].get<std::string>());
  if (w.size() != 1) throw ParseError(std::string(key) + " must be one letter");
  return w[0];
}

void require_constant_primitive(Substitution const& s) {
  if (!s.is_constant_length()) {
    throw PreconditionError("substitution is not of constant length");
  }
  (void)s.length();
  if (!is_primitive(s)) throw PreconditionError("substitution is not primitive");
}

Json trace_json(FinitenessDecision const& d) {
  Json out = Json::array();
  for (auto const& step : d.trace) {
    Json j;
    j["alphabet_size"] = step.alphabet_size;
    j["elementary"] = !step.simplification.has_value();
    j["target_size"] = step.simplification ? Json(step.simplification->target_size)
                                           : Json(nullptr);
    j["biprolongeable"] = optional_json(step.biprolongeable);
    out.push_back(std::move(j));
  }
  return out;
}

Json reduction_json(Substitution const& s, ReductionResult const& r, bool with_chain) {
  Json j;
  j["substitution"] = substitution_json(r.reduced);
  Json map = Json::object();
  for (Letter a = 0; a < s.size(); ++a) map[s.token(a)] = r.reduced.token(r.letter_map[a]);
  j["letter_map"] = std::move(map);
  j["rounds"] = r.chain.size();
  if (with_chain) {
    Json chain = Json::array();
    for (auto const& step : r.chain) chain.push_back(substitution_json(step.substitution));
    j["chain"] = std::move(chain);
  }
  return j;
}

// Finiteness, reduction and the Li-Yorke decisions shared by analyze and
// decide. Returns the reduced substitution when X_tau is infinite.
std::optional<Substitution> decisions(Substitution const& s, ReportOptions const& opts,
                                      Json& j) {
  require_constant_primitive(s);
  j["validation"] = Json{{"constant_length", true}, {"one_to_one", s.is_one_to_one()}};
  j["primitive"] = true;
  j["constant_length"] = s.length();
  auto const finite = decide_infinite_traced(s);
  j["x_tau_infinite"] = finite.infinite;
  j["decision_trace"] = trace_json(finite);
  auto const red = one_to_one_reduction(s);
  j["one_to_one_reduction"] = reduction_json(s, red, false);
  j["is_elementary"] = !is_simplifiable(red.reduced).has_value();
  if (!finite.infinite) return std::nullopt;

  Substitution const& r = red.reduced;
  require_ly_preconditions(r);
  auto const cc = coincidence_class(r);
  j["coincidence_class"] = to_string(cc.kind);
  Json table = Json::array();
  for (auto const& w : cc.table) {
    table.push_back(Json{{"a", r.token(w.a)},
                         {"b", r.token(w.b)},
                         {"coincidences", w.coincidences},
                         {"differences", w.differences}});
  }
  j["coincidence_table"] = std::move(table);

  auto const run = run_flagged_fixpoint(r);
  j["fixpoint"] = Json{{"levels", run.levels.size()},
                       {"cycle_start", run.cycle_start},
                       {"first_ly_level", optional_json(run.first_ly_level)},
                       {"first_uncountable_level", optional_json(run.first_uncountable_level)}};
  bool const ly = run.first_ly_level.has_value();
  bool const unc = run.first_uncountable_level.has_value();
  j["has_li_yorke"] = ly;
  if (ly) {
    auto const c = ly_certificate(r, opts.max_word);
    if (!c) throw ValidationError("Li-Yorke decision without a certificate");
    j["li_yorke_certificate"] = Json{{"m", c->m},           {"a", r.token(c->a)},
                                     {"b", r.token(c->b)},  {"u", r.render(c->u)},
                                     {"v", r.render(c->v)}, {"u2", r.render(c->u2)},
                                     {"v2", r.render(c->v2)}};
  }
  j["uncountable_li_yorke"] = unc;
  if (unc) {
    auto const c = uncountable_certificate(r, opts.max_word);
    if (!c) throw ValidationError("uncountability decision without a certificate");
    j["uncountable_certificate"] = Json{{"m", c->m},
                                        {"a", r.token(c->a)},
                                        {"b", r.token(c->b)},
                                        {"first", c->first},
                                        {"second", c->second}};
  }
  j["strong_li_yorke"] = unc;
  if (opts.brute_bound) {
    auto const scan = brute_force_ly_scan(r, *opts.brute_bound);
    bool const agrees =
        scan.first_ly_level.has_value() == ly && scan.first_uncountable_level.has_value() == unc;
    j["brute_force"] = Json{{"bound", *opts.brute_bound},
                            {"max_level", scan.max_level},
                            {"first_ly_level", optional_json(scan.first_ly_level)},
                            {"first_uncountable_level", optional_json(scan.first_uncountable_level)},
                            {"agrees_with_fixpoint", agrees}};
  }
  return r;
}

}  // namespace

Json substitution_json(Substitution const& s) {
  Json rules = Json::object();
  for (Letter a = 0; a < s.size(); ++a) rules[s.token(a)] = s.render(s.image(a));
  return Json{{"alphabet", s.alphabet()}, {"rules", std::move(rules)}};
}

Json point_json(RepresentedPoint const& x) {
  auto const& st = x.stream();
  Substitution const& s = st.substitution();
  Json pre = Json::array(), per = Json::array();
  for (auto const& e : st.preperiod()) pre.push_back(entry_json(s, e));
  for (auto const& e : st.period()) per.push_back(entry_json(s, e));
  auto seed = [&](std::optional<Letter> c) { return c ? Json(s.render(*c)) : Json(nullptr); };
  return Json{{"kind", "stream"},
              {"preperiod", std::move(pre)},
              {"period", std::move(per)},
              {"left_seed", seed(st.left_seed())},
              {"right_seed", seed(st.right_seed())}};
}

RepresentedPoint point_from_json(SubstitutionPtr s, nlohmann::json const& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("point literal must be an object with a \"kind\"");
  }
  std::string const kind = j["kind"].get<std::string>();
  if (kind == "fixed_point") {
    Letter const left = letter_field(*s, j, "left");
    Letter const right = letter_field(*s, j, "right");
    return stream_from_fixed_point(std::move(s), left, right);
  }
  if (kind != "stream") throw ParseError("unknown point kind \"" + kind + "\"");
  auto entries = [&](char const* key) {
    std::vector<StreamEntry> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw ParseError(std::string(key) + " must be an array");
    for (auto const& e : j[key]) out.push_back(entry_from_json(*s, e));
    return out;
  };
  auto pre = entries("preperiod");
  auto per = entries("period");
  auto const left = seed_from_json(*s, j, "left_seed");
  auto const right = seed_from_json(*s, j, "right_seed");
  return stream_from_entries(std::move(s), std::move(pre), std::move(per), left, right);
}

RepresentedPoint parse_point_literal(SubstitutionPtr s, std::string const& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(std::string("point literal: ") + e.what());
  }
  return point_from_json(std::move(s), j);
}

Json evidence_json(EvidenceReport const& rep) {
  Json j;
  j["horizon"] = rep.horizon;
  j["window"] = rep.window;
  j["proximality_event_count"] = rep.proximality_events.size();
  j["separation_event_count"] = rep.separation_events.size();
  j["proximality_events"] = events_head(rep.proximality_events);
  j["separation_events"] = events_head(rep.separation_events);
  j["events_truncated"] = rep.proximality_events.size() > kMaxListedEvents ||
                          rep.separation_events.size() > kMaxListedEvents;
  j["max_last_difference"] = optional_json(rep.max_last_difference);
  j["min_distance"] = rep.min_distance;
  j["max_distance"] = rep.max_distance;
  return j;
}

Json verdict_json(PairVerdict const& v) {
  return Json{{"class", to_string(v.cls)},
              {"rule", v.rule},
              {"strong", optional_json(v.strong)},
              {"evidence", v.evidence ? evidence_json(*v.evidence) : Json(nullptr)}};
}

Json analyze_report(Substitution const& s, std::string const& source, ReportOptions const& opts) {
  Json j = header("analyze");
  j["input"] = input_json(s, source);
  auto const reduced = decisions(s, opts, j);
  auto const red = one_to_one_reduction(s);
  j["fiber_bound"] = fiber_bound(red.reduced);
  if (!reduced || !j["has_li_yorke"].get<bool>() || j["uncountable_li_yorke"].get<bool>()) {
    return j;
  }
  auto const r = share(*reduced);
  auto const orbits = enumerate_ly_orbits(r, opts.orbit_bound, true, opts.max_word);
  j["orbit_enumeration"] = Json{{"period_bound", orbits.period_bound},
                                {"radius", orbits.radius},
                                {"separated", orbits.separated},
                                {"count", orbits.pairs.size()}};
  Json reps = Json::array();
  for (auto const& [x, y] : orbits.pairs) {
    reps.push_back(Json{{"x", point_json(x)}, {"y", point_json(y)},
                        {"verdict", verdict_json(classify_pair(x, y))}});
  }
  j["orbit_representatives"] = std::move(reps);
  return j;
}

Json decide_report(Substitution const& s, std::string const& source, ReportOptions const& opts) {
  Json j = header("decide");
  j["input"] = input_json(s, source);
  (void)decisions(s, opts, j);
  return j;
}

Json reduce_report(Substitution const& s, std::string const& source) {
  Json j = header("reduce");
  j["input"] = input_json(s, source);
  auto const red = one_to_one_reduction(s);
  j["one_to_one_reduction"] = reduction_json(s, red, true);
  j["is_elementary"] = !is_simplifiable(red.reduced).has_value();
  return j;
}

Json classify_report(SubstitutionPtr s, std::string const& source, RepresentedPoint const& x,
                     RepresentedPoint const& y, ReportOptions const& opts) {
  Json j = header("classify");
  j["input"] = input_json(*s, source);
  j["x"] = point_json(x);
  j["y"] = point_json(y);
  auto const v = classify_pair(x, y);
  j["verdict"] = verdict_json(v);
  std::size_t const H = opts.horizon ? opts.horizon : default_horizon(*s);
  auto const check = check_evidence(v, x, y, H, opts.window, opts.max_word);
  j["evidence_check"] = Json{{"consistent", check.consistent},
                             {"budget_exhausted", check.budget_exhausted},
                             {"reason", check.reason},
                             {"report", evidence_json(check.report)}};
  return j;
}

Json simulate_report(SubstitutionPtr s, std::string const& source, RepresentedPoint const& x,
                     RepresentedPoint const& y, ReportOptions const& opts) {
  Json j = header("simulate");
  j["input"] = input_json(*s, source);
  j["x"] = point_json(x);
  j["y"] = point_json(y);
  std::size_t const H = opts.horizon ? opts.horizon : default_horizon(*s);
  j["evidence"] = evidence_json(empirical_class(x, y, H, opts.window, opts.max_word));
  return j;
}

Json language_report(Substitution const& s, std::string const& source, std::size_t n,
                     ReportOptions const& opts) {
  if (!is_primitive(s)) throw PreconditionError("substitution is not primitive");
  Json j = header("language");
  j["input"] = input_json(s, source);
  auto const words = language(s, n, opts.max_word);
  j["n"] = n;
  j["count"] = words.size();
  Json list = Json::array();
  for (Word const& w : words) list.push_back(s.render(w));
  j["words"] = std::move(list);
  return j;
}

Json tower_report(std::size_t depth, std::size_t horizon, std::size_t window) {
  Json j = header("tower");
  auto const rep = verify_scrambled_S(depth, horizon, window);
  j["depth"] = depth;
  j["horizon"] = horizon;
  j["window"] = window;
  Json levels = Json::array();
  for (std::size_t n = 1; n <= depth + 2; ++n) {
    auto const t = tower_substitution(n);
    levels.push_back(Json{{"n", n},
                          {"substitution", substitution_json(*t.substitution)},
                          {"primitive", is_primitive(*t.substitution)},
                          {"x_tau_infinite", decide_infinite(*t.substitution)}});
  }
  j["levels"] = std::move(levels);
  j["distal_entries"] = rep.distal_entries;
  j["matches_pattern"] = rep.matches_pattern;
  Json cells = Json::array();
  for (auto const& c : rep.cells) {
    cells.push_back(Json{{"first", c.first},
                         {"second", c.second},
                         {"level", c.level},
                         {"expected", to_string(c.expected)},
                         {"class", to_string(c.exact.cls)},
                         {"rule", c.exact.rule},
                         {"evidence_consistent", c.evidence.consistent},
                         {"proximality_event_count", c.evidence.report.proximality_events.size()},
                         {"separation_event_count", c.evidence.report.separation_events.size()},
                         {"agrees", c.agrees}});
  }
  j["cells"] = std::move(cells);
  return j;
}

Json error_json(std::string const& kind, std::string const& message, std::size_t line,
                std::size_t column) {
  Json e{{"kind", kind}, {"message", message}};
  if (line != 0) {
    e["line"] = line;
    e["column"] = column;
  }
  return Json{{"error", std::move(e)}};
}

}  // namespace constsub
