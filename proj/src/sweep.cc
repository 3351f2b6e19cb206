#include "lotto/sweep.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>

#include "lotto/coalition_model.h"
#include "lotto/core_model.h"
#include "lotto/duel_analysis.h"
#include "lotto/emit.h"
#include "lotto/oracle.h"

namespace lotto {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kParamKeys[] = {"xa", "xb",  "x1",         "x2",
                                      "phi", "phi1", "phi2",     "vb",
                                      "t",   "seed", "resolution", "delta"};

double need(const SweepConfig& cfg, const std::string& key) {
  auto it = cfg.params.find(key);
  if (it == cfg.params.end()) throw UsageError("missing required --" + key);
  return it->second;
}

double get_or(const SweepConfig& cfg, const std::string& key, double fallback) {
  auto it = cfg.params.find(key);
  return it == cfg.params.end() ? fallback : it->second;
}

std::optional<double> get_opt(const SweepConfig& cfg, const std::string& key) {
  auto it = cfg.params.find(key);
  if (it == cfg.params.end()) return std::nullopt;
  return it->second;
}

std::size_t resolution(const SweepConfig& cfg, std::size_t fallback) {
  const double r = get_or(cfg, "resolution", static_cast<double>(fallback));
  if (!(r >= 2.0) || r != std::floor(r) || r > 1e6) {
    throw UsageError("--resolution must be an integer >= 2");
  }
  return static_cast<std::size_t>(r);
}

std::uint64_t seed(const SweepConfig& cfg) {
  const double s = get_or(cfg, "seed", static_cast<double>(kDefaultSeed));
  if (!(s >= 0.0) || s != std::floor(s) || s > 9007199254740992.0) {
    throw UsageError("--seed must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(s);
}

OutputFormat format_for(const SweepConfig& cfg, bool region) {
  const OutputFormat f =
      cfg.format.value_or(region ? OutputFormat::kCsv : OutputFormat::kJson);
  if (region && f == OutputFormat::kJson) {
    throw UsageError("region modes emit csv or svg");
  }
  if (!region && f != OutputFormat::kJson) {
    throw UsageError("only region modes emit csv or svg");
  }
  return f;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json split_json(const SplitDecision& s) {
  return Json{{"case", case_name(s.label, s.side)},
              {"x_a1", s.x_a1},
              {"x_a2", s.x_a2},
              {"from_oracle", s.from_oracle}};
}

Json outcome_json(const CommitOutcome3P& o) {
  Json j{{"decision", to_string(o.decision)},
         {"split_front1", o.split_front1},
         {"split_front2", o.split_front2},
         {"payoff_player1", o.payoff_player1},
         {"payoff_player2", o.payoff_player2},
         {"payoff_adversary", o.payoff_adversary},
         {"call_value", nullptr},
         {"fold_value", o.fold_value},
         {"oracle_derived", o.oracle_derived}};
  if (o.call_value) j["call_value"] = *o.call_value;
  return j;
}

Json membership_json(const Theorem3Report& r) {
  Json j{{"tstar", r.tstar},
         {"t_eval", r.t_eval},
         {"tstar_positive", r.tstar_positive},
         {"in_domain", r.in_domain},
         {"base_split", split_json(r.base_split)},
         {"condition_set", nullptr},
         {"fold_pair_case2", r.fold_pair_case2},
         {"call_pair_case2", r.call_pair_case2},
         {"margin_profit", r.margin_profit},
         {"margin_call", r.margin_call},
         {"profit_holds", r.profit_holds},
         {"call_holds", r.call_holds},
         {"member", r.member}};
  if (r.condition_set) j["condition_set"] = *r.condition_set;
  return j;
}

RunResult run_payoff(const SweepConfig& cfg) {
  format_for(cfg, false);
  const double xa = need(cfg, "xa"), xb = need(cfg, "xb"), phi = need(cfg, "phi");
  const double a = lotto_payoff(xa, xb, phi, Role::kAdversary);
  const double b = lotto_payoff(xb, xa, phi, Role::kTeam);
  return {kExitOk, dump(Json{{"mode", "payoff"},
                             {"x_a", xa},
                             {"x_b", xb},
                             {"phi", phi},
                             {"payoff_a", a},
                             {"payoff_b", b}})};
}

RunResult run_commit2p(const SweepConfig& cfg) {
  format_for(cfg, false);
  const DuelGame duel(need(cfg, "xa"), need(cfg, "xb"), need(cfg, "phi"));
  const Commitment commit{need(cfg, "vb"), need(cfg, "t")};
  const ResponseOutcome response = adversary_response(duel, commit);
  const DuelParams params{duel.gamma(), commit.v_b, duel.phi(), duel.x_a()};
  const PrecommitClassification cls = classify_precommit(params);
  const double delta = delta_payoff(duel, commit);
  Json interval = nullptr;
  if (cls.fold_interval) {
    interval = Json::array({cls.fold_interval->first, cls.fold_interval->second});
  }
  return {kExitOk,
          dump(Json{{"mode", "commit2p"},
                    {"gamma", duel.gamma()},
                    {"decision", to_string(response.decision)},
                    {"call_payoff", response.call_payoff},
                    {"fold_payoff", response.fold_payoff},
                    {"payoff_a", response.payoffs.payoff_a},
                    {"payoff_b", response.payoffs.payoff_b},
                    {"delta", delta},
                    {"profitable", delta > 0.0},
                    {"call_margin", call_margin(params, commit.t)},
                    {"classification", to_string(cls.kind)},
                    {"fold_interval", interval}})};
}

RunResult run_split(const SweepConfig& cfg) {
  format_for(cfg, false);
  const double x1 = need(cfg, "x1"), x2 = need(cfg, "x2");
  const double phi1 = need(cfg, "phi1"), phi2 = need(cfg, "phi2");
  const SplitDecision s = best_split(x1, x2, phi1, phi2);
  Json j = split_json(s);
  j["adversary_payoff"] = lotto_payoff(s.x_a1, x1, phi1, Role::kAdversary) +
                          lotto_payoff(s.x_a2, x2, phi2, Role::kAdversary);
  return {kExitOk, dump(Json{{"mode", "split"}, {"split", j}})};
}

RunResult run_commit3p(const SweepConfig& cfg) {
  format_for(cfg, false);
  const CoalitionGame game(need(cfg, "x1"), need(cfg, "x2"), need(cfg, "phi1"),
                           need(cfg, "phi2"));
  const double v_b = need(cfg, "vb");
  const Theorem3Report report =
      theorem3_membership(game, v_b, get_opt(cfg, "delta"));
  double t = 0.0;
  if (auto given = get_opt(cfg, "t")) {
    t = *given;
  } else if (report.t_eval > 0.0) {
    t = report.t_eval;
  } else {
    throw std::domain_error("t: t* - delta is not positive; pass --t");
  }
  const CommitOutcome3P outcome = adversary_best_response_3p(game, v_b, t);
  return {kExitOk, dump(Json{{"mode", "commit3p"},
                             {"t", t},
                             {"outcome", outcome_json(outcome)},
                             {"nocommit_payoff_player1",
                              player1_payoff_nocommit(game)},
                             {"membership", membership_json(report)}})};
}

RunResult run_region2p(const SweepConfig& cfg) {
  const OutputFormat f = format_for(cfg, true);
  const double phi = get_or(cfg, "phi", 1.0);
  const std::size_t n = resolution(cfg, 200);
  const std::string csv = region2p_csv(region_map_duel(n, n, phi));
  if (f == OutputFormat::kCsv) return {kExitOk, csv};
  return {kExitOk, render_svg(csv, duel_overlays(phi), 1.0, phi)};
}

RunResult run_region3p(const SweepConfig& cfg) {
  const OutputFormat f = format_for(cfg, true);
  const double phi1 = need(cfg, "phi1"), phi2 = need(cfg, "phi2");
  const double v_b = need(cfg, "vb");
  const std::size_t n = resolution(cfg, 200);
  const std::string csv = region3p_csv(
      region_map_coalition(phi1, phi2, v_b, n, n, get_opt(cfg, "delta")));
  if (f == OutputFormat::kCsv) return {kExitOk, csv};
  return {kExitOk, render_svg(csv, coalition_overlays(phi1, phi2, v_b))};
}

RunResult run_verify(const SweepConfig& cfg) {
  format_for(cfg, false);
  Json j{{"mode", "verify"}, {"target", cfg.verify_target}};
  bool passed = false;
  if (cfg.verify_target == "theorem1") {
    const std::size_t n = resolution(cfg, 100);
    const double phi = get_or(cfg, "phi", 1.0);
    const Theorem1Report r = verify_theorem1({n, n, n}, phi);
    passed = r.passed();
    j.update(Json{{"resolution", n},
                  {"phi", phi},
                  {"cells", r.cells},
                  {"violations", r.violations},
                  {"max_delta", r.max_delta},
                  {"worst", {{"gamma", r.worst_gamma},
                             {"v_b", r.worst_v_b},
                             {"t", r.worst_t}}},
                  {"fold_cells", r.fold_cells},
                  {"decision_mismatches", r.decision_mismatches}});
  } else if (cfg.verify_target == "theorem2") {
    const std::size_t n = resolution(cfg, 50);
    const double phi1 = get_or(cfg, "phi1", 1.0);
    const double phi2 = get_or(cfg, "phi2", 1.0);
    const Theorem2Report r = verify_theorem2({n, n, 20}, phi1, phi2);
    passed = r.passed();
    j.update(Json{{"resolution", n},
                  {"t_samples", 20},
                  {"phi1", phi1},
                  {"phi2", phi2},
                  {"points", r.points},
                  {"violations", r.violations},
                  {"max_slope", r.max_slope},
                  {"slope_tolerance", r.slope_tolerance},
                  {"worst", {{"x1", r.worst_x1},
                             {"x2", r.worst_x2},
                             {"t", r.worst_t}}}});
  } else if (cfg.verify_target == "oracle") {
    const std::size_t per_case = resolution(cfg, 250);
    const std::uint64_t s = seed(cfg);
    const OracleAgreementReport r =
        verify_oracle_agreement(per_case, s, OracleConfig{});
    passed = r.passed();
    j.update(Json{{"seed", s},
                  {"instances", r.instances},
                  {"per_case", r.per_case},
                  {"violations", r.violations},
                  {"max_gap", r.max_gap},
                  {"min_gap", r.min_gap},
                  {"tolerance_factor", r.tolerance_factor}});
  } else {
    throw UsageError("verify target must be theorem1, theorem2 or oracle");
  }
  j["passed"] = passed;
  return {passed ? kExitOk : kExitVerification, dump(j)};
}

}  // namespace

RunResult run(const SweepConfig& config) {
  switch (config.mode) {
    case Mode::kPayoff:
      return run_payoff(config);
    case Mode::kCommit2p:
      return run_commit2p(config);
    case Mode::kSplit:
      return run_split(config);
    case Mode::kCommit3p:
      return run_commit3p(config);
    case Mode::kRegion2p:
      return run_region2p(config);
    case Mode::kRegion3p:
      return run_region3p(config);
    case Mode::kVerify:
      return run_verify(config);
  }
  throw UsageError("unknown mode");
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"General Lotto pre-commitment games: payoffs, best responses, "
               "region sweeps and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::map<std::string, std::optional<double>> values;
  for (const char* key : kParamKeys) {
    app.add_option(std::string("--") + key, values[key]);
  }
  std::optional<std::string> out_path;
  std::string format_name;
  app.add_option("--out", out_path, "Write the result to this file");
  app.add_option("--format", format_name, "csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.set_config("--config", "", "Flat key=value file mirroring the flags")
      ->envname(kConfigEnv);

  const std::pair<const char*, Mode> modes[] = {
      {"payoff", Mode::kPayoff},       {"commit2p", Mode::kCommit2p},
      {"split", Mode::kSplit},         {"commit3p", Mode::kCommit3p},
      {"region2p", Mode::kRegion2p},   {"region3p", Mode::kRegion3p},
      {"verify", Mode::kVerify}};
  std::map<CLI::App*, Mode> mode_of;
  std::string target;
  for (const auto& [name, mode] : modes) {
    CLI::App* sub = app.add_subcommand(name);
    mode_of[sub] = mode;
    if (mode == Mode::kVerify) {
      sub->add_option("target", target, "theorem1, theorem2 or oracle")
          ->required()
          ->check(CLI::IsMember({"theorem1", "theorem2", "oracle"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  SweepConfig cfg;
  cfg.mode = mode_of.at(app.get_subcommands().front());
  cfg.verify_target = target;
  for (const auto& [key, value] : values) {
    if (value) cfg.params[key] = *value;
  }
  cfg.out = out_path;
  if (format_name == "csv") cfg.format = OutputFormat::kCsv;
  if (format_name == "json") cfg.format = OutputFormat::kJson;
  if (format_name == "svg") cfg.format = OutputFormat::kSvg;

  RunResult result;
  try {
    result = run(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }

  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) {
      err << "usage error: cannot write " << *cfg.out << "\n";
      return kExitUsage;
    }
    file << result.payload;
  } else {
    out << result.payload;
  }
  return result.exit_code;
}

}  // namespace lotto
