#include "tosc/report.hpp"

#include <algorithm>
#include <stdexcept>

#include "tosc/oracle.hpp"
#include "tosc/suites.hpp"

namespace tosc {

namespace {

using Args = std::vector<std::string>;

[[noreturn]] void bad(const std::string& why) { throw std::invalid_argument(why); }

void need(const Document::Task& t, std::size_t lo, std::size_t hi) {
  if (t.args.size() < lo || t.args.size() > hi) {
    bad("task " + t.verb + " expects " + std::to_string(lo) + (lo == hi ? "" : " to " + std::to_string(hi)) +
        " arguments, got " + std::to_string(t.args.size()));
  }
}

const Document::Func& func_arg(const Document& doc, const std::string& name) {
  const auto it = doc.funcs.find(name);
  if (it == doc.funcs.end()) bad("undefined func '" + name + "'");
  return it->second;
}

const Document::Set& set_arg(const Document& doc, const std::string& name) {
  const auto it = doc.sets.find(name);
  if (it == doc.sets.end()) bad("undefined set '" + name + "'");
  return it->second;
}

const Document::Series& series_arg(const Document& doc, const std::string& name) {
  const auto it = doc.series.find(name);
  if (it == doc.series.end()) bad("undefined series '" + name + "'");
  return it->second;
}

std::size_t count_arg(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    bad("expected a natural number, got '" + text + "'");
  }
  return std::stoull(text);
}

Json func_input(const Document::Func& f) { return Json{{"space", f.space}, {"value", print_func(f.func)}}; }

Json sequence_check(const SequenceCheck& c) {
  Json j{{"points", c.points}, {"violations", c.violations}};
  j["messages"] = c.messages;
  return j;
}

TaskResult do_eval(const Document& doc, const Document::Task& t, const RunOptions& o) {
  need(t, 1, 64);
  const auto& f = func_arg(doc, t.args[0]);
  TaskResult r;
  r.json["inputs"] = {{t.args[0], func_input(f)}};
  if (t.args.size() == 1) {
    r.json["values"] = point_table(f.func, o.budget);
    return r;
  }
  const SpaceTree space = shape_of(f.func);
  Json values = Json::object();
  for (std::size_t i = 1; i < t.args.size(); ++i) {
    PointAddress x;
    try {
      x = parse_address(t.args[i]);
      validate_address(space, x);
    } catch (const std::exception& e) {
      bad(std::string(e.what()) + " in '" + t.args[i] + "'");
    }
    values[format_address(space, x)] = eval(f.func, x).str();
  }
  r.json["values"] = values;
  return r;
}

TaskResult do_osc(const Document& doc, const Document::Task& t, const RunOptions& o) {
  need(t, 1, 2);
  const auto& f = func_arg(doc, t.args[0]);
  const std::size_t n = t.args.size() == 2 ? count_arg(t.args[1]) : o.alpha.value_or(d_index(f.func));
  TaskResult r;
  r.json["inputs"] = {{t.args[0], func_input(f)}};
  r.json["alpha"] = n;
  r.json["profile"] = point_table(osc_alpha(f.func, n), o.budget);
  const OracleAgreement a = compare_osc_with_oracle(f.func, n);
  r.json["oracle_agreement"] = a.ok();
  r.json["oracle_points"] = a.points;
  r.violation = !a.ok();
  return r;
}

TaskResult do_dnorm(const Document& doc, const Document::Task& t, const RunOptions&) {
  need(t, 1, 1);
  const auto& f = func_arg(doc, t.args[0]);
  TaskResult r;
  r.json["inputs"] = {{t.args[0], func_input(f)}};
  r.json["d_norm"] = dbsc_norm(f.func).str();
  r.json["tau"] = d_index(f.func);
  if (has_drift(f.func)) {
    r.json["oracle_lower"] = nullptr;
    r.json["oracle_upper"] = nullptr;
    r.json["uv_verified"] = nullptr;
    return r;
  }
  const DNormBounds b = dnorm_bounds(f.func);
  const auto uv = uv_decomposition(f.func);
  r.json["oracle_lower"] = b.lower.str();
  r.json["oracle_upper"] = b.upper.str();
  r.json["oracle_depth"] = b.depth;
  r.json["uv_verified"] = uv && uv->verified;
  if (uv) {
    r.json["u"] = print_func(uv->u);
    r.json["v"] = print_func(uv->v);
  }
  r.violation = !uv || !uv->verified || Extended(b.lower) > b.upper;
  return r;
}

TaskResult do_indices(const Document& doc, const Document::Task& t, const RunOptions&) {
  need(t, 1, 1);
  const auto& f = func_arg(doc, t.args[0]);
  const IndexTrace tr = dsc_index(f.func);
  TaskResult r;
  r.json["inputs"] = {{t.args[0], func_input(f)}};
  r.json["d_index"] = tr.d_index;
  r.json["dsc_index"] = tr.dsc_index;
  r.json["verdict"] = verdict_name(tr.verdict);
  Json chain = Json::array();
  for (const auto& step : tr.dsc_chain) {
    Json s{{"k", print_set(step.k)}};
    s["eta"] = step.eta ? Json(*step.eta) : Json(nullptr);
    chain.push_back(std::move(s));
  }
  r.json["chain"] = chain;
  r.json["strong_continuity_points"] = print_set(strong_continuity_points(f.func));
  return r;
}

TaskResult do_glue(const Document& doc, const Document::Task& t, const RunOptions& o) {
  if (t.args.empty() || t.args.size() % 2 != 0) bad("task glue expects set, func pairs");
  TaskResult r;
  Json inputs = Json::object();
  std::vector<std::pair<SubsetTree, FuncTree>> pieces;
  std::string space;
  for (std::size_t i = 0; i < t.args.size(); i += 2) {
    const auto& s = set_arg(doc, t.args[i]);
    const auto& f = func_arg(doc, t.args[i + 1]);
    if (space.empty()) space = s.space;
    if (s.space != space || f.space != space) bad("glue pieces live on different spaces");
    inputs[t.args[i]] = Json{{"space", s.space}, {"value", print_set(s.set)}};
    inputs[t.args[i + 1]] = func_input(f);
    pieces.emplace_back(s.set, f.func);
  }
  r.json["inputs"] = inputs;
  const auto seq = glue_stabilizing(doc.spaces.at(space), pieces);
  Json ps = Json::array();
  for (const auto& p : seq->pieces()) ps.push_back(print_set(p));
  r.json["pieces"] = ps;
  Json capture = Json::object();
  Json target = Json::object();
  const SpaceTree& sp = doc.spaces.at(space);
  for (const auto& x : enumerate_points(sp, o.budget)) {
    capture[format_address(sp, x)] = seq->capture_index(x);
    target[format_address(sp, x)] = seq->target(x).str();
  }
  r.json["target"] = target;
  r.json["capture"] = capture;
  const SequenceCheck c = check_stabilization(*seq, o.budget, 8);
  r.json["stabilization"] = sequence_check(c);
  r.violation = c.violations > 0;
  return r;
}

TaskResult do_stepapprox(const Document& doc, const Document::Task& t, const RunOptions& o) {
  need(t, 2, 2);
  const auto& f = func_arg(doc, t.args[0]);
  const std::size_t n = count_arg(t.args[1]);
  const StepApproximation s = step_approximation(f.func, n);
  const StepCheck c = check_step_approximation(f.func, s, o.budget);
  TaskResult r;
  r.json["inputs"] = {{t.args[0], func_input(f)}};
  r.json["n"] = n;
  r.json["step"] = print_func(s.step);
  r.json["error"] = s.error.str();
  r.json["bound"] = Rational(3, static_cast<long>(n)).str();
  Json pieces = Json::array();
  for (const auto& p : s.pieces) pieces.push_back({{"set", print_set(p.set)}, {"m", p.m}, {"j", p.j}});
  r.json["pieces"] = pieces;
  r.json["checks"] = {{"error_within_bound", c.error_within_bound}, {"bands_nested", c.bands_nested},
                      {"piece_in_band", c.piece_in_band},           {"partition", c.partition},
                      {"range_discrete", c.range_discrete},         {"ps_verified", c.ps_verified}};
  r.violation = !c.ok();
  return r;
}

TaskResult do_series(const Document& doc, const Document::Task& t, const RunOptions& o) {
  need(t, 1, 2);
  const auto& s = series_arg(doc, t.args[0]);
  const std::size_t gamma = t.args.size() == 2 ? count_arg(t.args[1]) : 4;
  TaskResult r;
  r.json["inputs"] = {{t.args[0], Json{{"space", s.space}, {"value", print_series(s.spec)}}}};
  const TailOscReport l = lemma53_check(s.spec, gamma);
  r.json["hypothesis"] = l.hypothesis_ok ? "ok" : l.hypothesis_message;
  if (!l.hypothesis_ok) return r;
  r.json["target"] = point_table(s.spec.target(), o.budget);
  r.json["tail_bound"] = {{"gamma_max", gamma},        {"checks", l.checks},
                          {"violations", l.violations}, {"equalities", l.equalities},
                          {"min_slack", l.min_slack.str()}, {"norm_conclusion", l.norm_conclusion}};
  const BlockReport b = cor54_check(s.spec);
  Json blocks = Json::array();
  for (auto n : b.blocks) blocks.push_back(n);
  r.json["blocks"] = {{"alpha", b.alpha},
                      {"block_ends", blocks},
                      {"block_bounds", b.block_bounds},
                      {"block_subadditive", b.block_subadditive},
                      {"block_norms_summable", b.block_norms_summable},
                      {"verdict", verdict_name(b.verdict)},
                      {"dsc_index", b.dsc_index},
                      {"stable_osc_finite", b.stable_osc_finite}};
  const SequenceCheck c = check_summability(*series_sequence(s.spec), o.budget, 8, false);
  r.json["summability"] = sequence_check(c);
  r.violation = l.violations > 0 || !l.norm_conclusion || !b.ok() || c.violations > 0;
  return r;
}

TaskResult do_classify(const Document& doc, const Document::Task& t, const RunOptions&) {
  need(t, 1, 1);
  const auto& s = set_arg(doc, t.args[0]);
  const SpaceTree& space = doc.spaces.at(s.space);
  const SubsetClass c = classify_subset(space, s.set);
  TaskResult r;
  r.json["inputs"] = {{t.args[0], Json{{"space", s.space}, {"value", print_set(s.set)}}}};
  r.json["closed"] = c.is_closed;
  r.json["open"] = c.is_open;
  r.json["ambiguous"] = c.is_ambiguous;
  r.json["locally_closed"] = c.is_locally_closed;
  bool agree = true;
  for (std::size_t k = 1; k <= 6; ++k) {
    const std::size_t depth = k + s.set.max_override_depth();
    const OracleClass oc = oracle_classify(space, s.set, depth);
    agree = agree && oc.is_closed == c.is_closed && oc.is_open == c.is_open &&
            oc.is_locally_closed == c.is_locally_closed;
  }
  r.json["oracle_agreement"] = agree;
  r.violation = !agree;
  return r;
}

TaskResult do_check(const Document&, const Document::Task& t, const RunOptions& o) {
  need(t, 1, 13);
  SuiteOptions so;
  so.seed = o.seed;
  so.corpus_dir = o.corpus_dir;
  std::vector<std::string> ids;
  for (const auto& a : t.args) {
    if (a == "all") {
      const auto all = criterion_ids();
      ids.insert(ids.end(), all.begin(), all.end());
    } else {
      ids.push_back(a);
    }
  }
  TaskResult r;
  Json criteria = Json::array();
  std::size_t failed = 0;
  for (const auto& id : ids) {
    const CriterionResult c = run_criterion(id, so);
    if (!c.passed) ++failed;
    criteria.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
  }
  r.json["criteria"] = criteria;
  r.json["violations"] = failed;
  r.violation = failed > 0;
  return r;
}

}  // namespace

Json point_table(const FuncTree& f, std::size_t budget) {
  const SpaceTree space = shape_of(f);
  Json out = Json::object();
  for (const auto& x : enumerate_points(space, budget)) out[format_address(space, x)] = eval(f, x).str();
  return out;
}

Json point_table(const Profile& g, std::size_t budget) {
  const SpaceTree space = shape_of(g);
  Json out = Json::object();
  for (const auto& x : enumerate_points(space, budget)) out[format_address(space, x)] = eval(g, x).str();
  return out;
}

TaskResult run_task(const Document& doc, const Document::Task& task, const RunOptions& options) {
  using Fn = TaskResult (*)(const Document&, const Document::Task&, const RunOptions&);
  static const std::pair<const char*, Fn> verbs[] = {
      {"eval", do_eval},   {"osc", do_osc},     {"dnorm", do_dnorm},       {"indices", do_indices},
      {"glue", do_glue},   {"stepapprox", do_stepapprox}, {"series", do_series}, {"classify", do_classify},
      {"check", do_check},
  };
  Json head{{"task", task.verb}, {"args", task.args}};
  if (std::find(options.skip_verbs.begin(), options.skip_verbs.end(), task.verb) != options.skip_verbs.end()) {
    head["skipped"] = true;
    return {head, false};
  }
  for (const auto& [name, fn] : verbs) {
    if (task.verb != name) continue;
    TaskResult r = fn(doc, task, options);
    head.update(r.json);
    head["violation"] = r.violation;
    return {head, r.violation};
  }
  bad("unknown task verb '" + task.verb + "'");
}

TaskResult run_document(const Document& doc, const RunOptions& options) {
  TaskResult out;
  Json tasks = Json::array();
  for (const auto& t : doc.tasks) {
    TaskResult r = run_task(doc, t, options);
    out.violation = out.violation || r.violation;
    tasks.push_back(std::move(r.json));
  }
  out.json["tasks"] = tasks;
  out.json["violation"] = out.violation;
  return out;
}

namespace {

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool flat_array(const Json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

void render(const Json& j, const std::string& indent, std::string& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    if (flat_array(*it)) {
      std::string line;
      for (const auto& e : *it) line += (line.empty() ? "" : ", ") + scalar(e);
      out += indent + key + ": [" + line + "]\n";
    } else if (it->is_structured() && !it->empty()) {
      out += indent + key + ":\n";
      render(*it, indent + "  ", out);
    } else {
      out += indent + key + ": " + scalar(*it) + "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render(j, "", out);
  return out;
}

}  // namespace tosc
