// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "io.hpp"

using namespace msgadv;
using namespace msgadv::cli;

namespace {

void apply_params_file(const std::string& path, GenerateOptions& o, CLI::App& sub) {
  const json j = parse_json(read_text(path), path);
  auto take = [&](const char* key, const char* flag, auto& dst) {
    if (j.contains(key) && sub.count(flag) == 0) {
      try {
        dst = j[key].get<std::decay_t<decltype(dst)>>();
      } catch (const json::exception& e) {
        throw ParseError(path + ":" + key, e.what());
      }
    }
  };
  take("adversary", "--adversary", o.adversary);
  take("n", "--n", o.n);
  take("D", "--d", o.D);
  take("x", "--x", o.x);
  take("y", "--y", o.y);
  take("rgst", "--rgst", o.rgst);
  take("rsr", "--rsr", o.rsr);
  take("seed", "--seed", o.seed);
  take("spurious_root", "--spurious", o.spurious);
  take("consecutive_reappearances", "--consecutive", o.consecutive);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and checker for dynamic networks under message adversaries"};
  app.require_subcommand(1);

  GenerateOptions gen;
  std::string params_path;
  auto* g = app.add_subcommand("generate", "Generate a lasso from an adversary class");
  g->add_option("--adversary", gen.adversary, "estable, altestable or mad")
      ->check(CLI::IsMember({"estable", "altestable", "mad"}));
  g->add_option("--n", gen.n, "Number of processes");
  g->add_option("--d", gen.D, "Dynamic diameter D");
  g->add_option("--x", gen.x, "Safety parameter (mad)");
  g->add_option("--y", gen.y, "Liveness parameter (mad)");
  g->add_option("--rgst", gen.rgst, "Target rGST (default: rsr)");
  g->add_option("--rsr", gen.rsr, "Target rSR");
  g->add_option("--seed", gen.seed);
  g->add_flag("--spurious", gen.spurious, "Plant an earlier short-lived root (alt)");
  g->add_flag("--consecutive", gen.consecutive, "Re-appearances without gaps (alt)");
  g->add_option("--params", params_path, "JSON file with generator parameters");
  g->add_option("--out", gen.out, "Write the lasso JSON here");
  g->add_option("--cert-out", gen.cert_out, "Write the certificate JSON here");

  CheckOptions chk;
  auto* c = app.add_subcommand("check", "Check a lasso against an adversary predicate");
  c->add_option("lasso", chk.lasso, "Lasso JSON file, or - for stdin");
  c->add_option("--adversary", chk.adversary,
                "liveness, safety, estable, altliveness, altsafety, altestable, mad, vsrc");
  c->add_option("--d", chk.D, "Dynamic diameter D");
  c->add_option("--x", chk.x, "Safety parameter (default D)");
  c->add_option("--y", chk.y, "Liveness parameter (default D)");
  c->add_option("--window", chk.window, "VSRC window (default 4D)");
  c->add_option("--horizon", chk.horizon, "Rounds to inspect (default: automatic)");

  RunOptions run;
  auto* r = app.add_subcommand("run", "Run the consensus algorithm on a lasso");
  r->add_option("lasso", run.lasso, "Lasso JSON file, or - for stdin");
  r->add_option("--inputs", run.inputs, "Comma-separated inputs (default: all 0)")
      ->delimiter(',');
  r->add_option("--d", run.D, "Dynamic diameter D");
  r->add_option("--mode", run.mode, "full or bounded:K");
  r->add_option("--horizon", run.horizon, "Rounds to simulate (default: deadline+D+2)");
  r->add_option("--seed", run.seed);
  r->add_option("--trace-out", run.trace_out, "Write the JSON-lines trace here");
  r->add_option("--dot-out", run.dot_out, "Write per-round DOT graphs here");
  r->add_flag("--record-states", run.record_states, "Include full states in the trace");
  r->add_option("--mutation", run.mutation)->group("");

  ScenarioOptions sc;
  auto* s = app.add_subcommand("scenario", "Build a named scenario and check its claims");
  s->add_option("name", sc.name, "eps-pair, stab-not-enough, hop-fallacy, bounded-gap")
      ->required();
  s->add_option("--n", sc.n);
  s->add_option("--d", sc.D);
  s->add_option("--tau", sc.tau, "stab-not-enough: rounds p1 stays cut off");
  s->add_option("--prefix", sc.prefix, "eps-pair: alternating prefix length");
  s->add_option("--k", sc.k, "bounded-gap: history bound");
  s->add_option("--out-dir", sc.out_dir, "Write lassos and traces here");

  FuzzOptions fz;
  std::uint64_t replay = 0;
  auto* f = app.add_subcommand("fuzz", "Randomised campaign against the oracles");
  f->add_option("--adversary", fz.adversary, "estable or altestable")
      ->check(CLI::IsMember({"estable", "altestable"}));
  f->add_option("--trials", fz.trials)->check(CLI::PositiveNumber);
  f->add_option("--n-range", fz.n_range, "MIN MAX");
  f->add_option("--d-range", fz.d_range, "MIN MAX");
  f->add_option("--rsr-max", fz.rsr_max);
  f->add_option("--seed", fz.seed);
  f->add_option("--jobs", fz.jobs)->check(CLI::PositiveNumber);
  f->add_flag("--no-extra-checks", fz.no_extra_checks,
              "Skip bounded-history and containment checks");
  f->add_option("--report-out", fz.report_out, "Write per-trial results here");
  auto* replay_opt = f->add_option("--replay", replay, "Run the single trial with this seed");
  f->add_option("--trace-out", fz.trace_out, "With --replay: write the trace here");
  f->add_option("--mutation", fz.mutation)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (*g) {
      if (!params_path.empty()) apply_params_file(params_path, gen, *g);
      return cmd_generate(gen);
    }
    if (*c) return cmd_check(chk);
    if (*r) return cmd_run(run);
    if (*s) return cmd_scenario(sc);
    if (*f) {
      if (*replay_opt) fz.replay_seed = replay;
      return cmd_fuzz(fz);
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const GenerationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotSatisfied;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
