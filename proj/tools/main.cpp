// Copyright 2026 The pbij Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// pbij: batch verification over block families. Reports are JSON on stdout
// (or --out); exit 0 when every verdict passes, 2 when one fails, 1 on
// usage or input errors.

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pbij/error.hpp"

namespace {

using pbij::cli::Json;
using pbij::cli::Report;
using pbij::cli::RunConfig;

constexpr const char* kVersion = "1.0.0";

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::size_t parse_opens(const std::string& text) {
  const std::string prefix = "random:";
  const std::string count = text.rfind(prefix, 0) == 0 ? text.substr(prefix.size()) : text;
  std::size_t used = 0;
  std::size_t n = 0;
  try {
    n = std::stoul(count, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != count.size()) throw CLI::ValidationError("--opens", "expected random:N, got '" + text + "'");
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks partial-bijection semigroups generated by block families."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string out_path;
  bool quiet = false, trace = false;
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_flag("--quiet", quiet, "No summary on stderr");
  app.add_flag("--trace", trace, "Progress notes on stderr");

  std::function<Report(const RunConfig&)> run;
  auto family_opt = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--family", cfg.family_path, "Family JSON file");
    if (required) o->required();
  };
  auto seed_opt = [&](CLI::App* c) { c->add_option("--seed", cfg.seed, "Master seed"); };
  auto window_opt = [&](CLI::App* c) { c->add_option("--window", cfg.window, "Window size W"); };

  auto* family = app.add_subcommand("family", "Family files");
  family->require_subcommand(1);
  auto* check = family->add_subcommand("check", "Intersection matrix and almost-disjointness");
  family_opt(check, true);
  check->add_option("--csv", cfg.csv_path, "Also write the matrix as CSV");
  check->callback([&] { run = pbij::cli::family_check; });

  auto* closure = app.add_subcommand("closure", "Closure of windowed block groups");
  closure->require_subcommand(1);
  auto* closure_run = closure->add_subcommand("run", "Close and compare with the structural description");
  family_opt(closure_run, true);
  window_opt(closure_run);
  closure_run->add_option("--max-elements", cfg.max_elements, "Element budget");
  closure_run->add_flag("--allow-small-window", cfg.allow_small_window, "Skip the comparison without headroom");
  closure_run->callback([&] { run = pbij::cli::closure_run; });

  auto* chains = app.add_subcommand("chains", "P matrix and chain certificates");
  family_opt(chains, true);
  chains->add_option("--csv", cfg.csv_path, "Also write the P matrix as CSV");
  chains->callback([&] { run = pbij::cli::chains; });

  auto* factorize = app.add_subcommand("factorize", "Factor an element into block generators");
  family_opt(factorize, true);
  factorize->add_option("--element", cfg.elements, "Element literal, e.g. fin(1->7)")->required();
  factorize->callback([&] { run = pbij::cli::factorize; });

  auto* stratify = app.add_subcommand("stratify", "Stratum counts of the windowed semigroup");
  family_opt(stratify, true);
  window_opt(stratify);
  stratify->add_option("--n", cfg.n, "Use the displayed union with bound n instead of the generated semigroup");
  stratify->add_option("--max-elements", cfg.max_elements, "Element budget");
  stratify->callback([&] { run = pbij::cli::stratify; });

  auto* verify = app.add_subcommand("verify", "Theorem checks");
  verify->require_subcommand(1);

  auto* prop22 = verify->add_subcommand("prop22", "Closure of the displayed union iff intersections are at most n");
  family_opt(prop22, true);
  window_opt(prop22);
  prop22->add_option("--n", cfg.n, "Stratum bound")->required();
  prop22->add_option("--max-elements", cfg.max_elements, "Element budget");
  prop22->callback([&] { run = pbij::cli::verify_prop22; });

  auto* nonpp = verify->add_subcommand("nonpp", "Witnesses inside random basic opens");
  nonpp->add_option("--ideal", cfg.ideal, "empty, fin, or a descriptor");
  nonpp->add_option("--A,--a", cfg.a_set, "The set A");
  std::string opens;
  auto* opens_opt = nonpp->add_option("--opens", opens, "random:N random opens");
  auto* trials_opt = nonpp->add_option("--trials", cfg.trials, "Same as --opens random:N");
  opens_opt->excludes(trials_opt);
  seed_opt(nonpp);
  nonpp->callback([&] {
    if (!opens.empty()) cfg.trials = parse_opens(opens);
    run = pbij::cli::verify_nonpp;
  });

  auto* pettis = verify->add_subcommand("pettis-witness", "A^-1 A = {1_{0}} and its open neighbourhoods");
  family_opt(pettis, false);
  pettis->add_option("--trials", cfg.trials, "Number of random opens");
  seed_opt(pettis);
  pettis->callback([&] { run = pbij::cli::verify_pettis_witness; });

  auto* conv = verify->add_subcommand("convergence", "Pointwise convergence of a sequence schema");
  conv->add_option("--schema", cfg.schema, "block-identities, singleton-identities, growing-extensions, group-neighbors")
      ->required();
  conv->add_option("--limit", cfg.limit, "Claimed limit");
  conv->add_option("--base", cfg.base, "Base element for growing-extensions and group-neighbors");
  conv->add_option("--dom-pool", cfg.dom_pool, "Source pool for growing-extensions");
  conv->add_option("--im-pool", cfg.im_pool, "Target pool for growing-extensions");
  conv->add_option("--horizon", cfg.horizon, "Points checked");
  std::string expect = "converge";
  conv->add_option("--expect", expect, "converge or diverge")->check(CLI::IsMember({"converge", "diverge"}));
  conv->add_option("--trials", cfg.trials, "Random bases when --base is absent");
  seed_opt(conv);
  conv->callback([&] {
    cfg.expect_converge = expect == "converge";
    run = pbij::cli::verify_convergence;
  });

  auto* laws = verify->add_subcommand("sc-laws", "Algebraic laws of S(C) and S+(C)");
  laws->add_option("--collection", cfg.collection, "at-most:N, schreier, initial-segments, ideal:I, co-ideal:I, all")
      ->required();
  window_opt(laws);
  laws->add_option("--opens", cfg.trials, "Random opens for law (iii)");
  seed_opt(laws);
  laws->callback([&] { run = pbij::cli::verify_sc_laws; });

  auto* iso = verify->add_subcommand("isolated", "Isolation certificates");
  family_opt(iso, true);
  iso->add_option("--n", cfg.n, "Stratum bound (finite families)");
  iso->add_option("--element", cfg.elements, "Element literal; repeatable")->required();
  iso->add_option("--windows", cfg.windows, "Windows for the singleton re-check");
  iso->add_flag("--inverse-check", cfg.inverse_check, "Also check x^-1 x for isolated x");
  iso->callback([&] { run = pbij::cli::verify_isolated; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (trace) std::cerr << "[trace] dispatching\n";
    Report report = run(cfg);
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (trace) std::cerr << "[trace] " << report.command() << " finished in " << ms << " ms\n";
    Json meta{{"tool", "pbij"}, {"version", kVersion}, {"generated_at", utc_now()}, {"elapsed_ms", ms}};
    const std::string text = report.document(meta).dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw pbij::Error("cannot write " + out_path);
      out << text;
    }
    if (!quiet) {
      std::cerr << report.command() << ": " << (report.failed() ? "FAIL" : "PASS");
      for (const auto& v : report.verdicts()) std::cerr << "\n  " << pbij::cli::to_string(v.status) << "  " << v.name;
      std::cerr << "\n";
    }
    return report.exit_code();
  } catch (const pbij::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const pbij::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
