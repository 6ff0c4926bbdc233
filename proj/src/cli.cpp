// Copyright 2026 The qck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qck/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qck/batch.hpp"
#include "qck/document.hpp"

namespace qck {

namespace {

struct Tolerances {
  double psd = 1e-9;
  double affine = 1e-8;
  double cone = 1e-10;
};

void add_tolerances(CLI::App* cmd, Tolerances& tol) {
  cmd->add_option("--tol-psd", tol.psd, "CP/coCP and positivity tolerance")
      ->capture_default_str();
  cmd->add_option("--tol-affine", tol.affine, "affine residual tolerance")
      ->capture_default_str();
  cmd->add_option("--tol-cone", tol.cone, "cone residual tolerance")->capture_default_str();
}

Json read_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Seed resolve_seed(const std::optional<std::string>& flag) {
  if (flag) return parse_seed(*flag);
  if (const char* env = std::getenv("QCK_SEED"); env && *env) return parse_seed(env);
  return Seed{0};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

bool within(const DecompositionResiduals& r, const Tolerances& tol) {
  return r.affine <= tol.affine && r.cone >= -tol.cone;
}

int cmd_analyze(const std::string& input, const Tolerances& tol, const AnalyzeOptions& base,
                std::istream& in, std::ostream& out) {
  const Json doc = read_json(input, in);
  AnalyzeOptions opts = base;
  opts.psd_tol = tol.psd;
  opts.affine_tol = tol.affine;
  opts.cone_tol = tol.cone;

  auto one = [&](const Json& j) { return report_json(analyze_map(to_pi(parse_map_document(j)), opts)); };
  if (doc.is_array()) {
    // Parse everything first so a bad entry fails before any output.
    std::vector<PiMatrix> maps;
    for (const auto& j : doc) maps.push_back(to_pi(parse_map_document(j)));
    Json reports = Json::array();
    for (const auto& p : maps) reports.push_back(report_json(analyze_map(p, opts)));
    emit(out, reports);
  } else {
    emit(out, one(doc));
  }
  return kExitOk;
}

int cmd_decompose(const std::string& input, const Tolerances& tol, int max_iter,
                  std::istream& in, std::ostream& out, std::ostream& err) {
  const PiMatrix p = to_pi(parse_map_document(read_json(input, in)));
  DecomposeOptions opts;
  opts.tol = tol.cone;
  opts.positivity_tol = tol.psd;
  opts.max_iter = max_iter;
  try {
    const auto r = decompose_stormer(p, opts);
    emit(out, decomposition_json(r));
    if (!within(verify_decomposition(p, r), tol)) {
      err << "qck: decomposition did not converge within tolerance\n";
      return kExitNotConverged;
    }
    return kExitOk;
  } catch (const NotPositiveError& e) {
    const auto& pos = e.positivity();
    emit(out, {{"error", "not a positive map"},
               {"positivity", positivity_json(pos)},
               {"witness_direction", vector_json(pos.witness.tail<3>())}});
    err << "qck: not a positive map\n";
    return kExitNotPositive;
  }
}

int cmd_generate(const std::string& kind_name, const std::optional<std::string>& seed_flag,
                 int count, int n_terms, std::ostream& out) {
  const GenerateKind kind = parse_generate_kind(kind_name);
  if (count < 1) throw ParseError("--count must be >= 1");
  if (n_terms < 1) throw ParseError("--n-terms must be >= 1");
  const Seed seed = resolve_seed(seed_flag);
  Json items = Json::array();
  for (const auto& item : generate_batch(kind, seed, count, n_terms)) {
    items.push_back(generated_json(item));
  }
  emit(out, items);
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& decomposition, const Tolerances& tol,
               std::istream& in, std::ostream& out, std::ostream& err) {
  const PiMatrix p = to_pi(parse_map_document(read_json(input, in)));
  const ChoiPair pair = parse_decomposition(read_json(decomposition, in));
  const auto r = verify_decomposition(p, pair.d1, pair.d2);
  const bool ok = within(r, tol);
  emit(out, {{"affine_residual", r.affine}, {"cone_residual", r.cone}, {"within_tolerance", ok}});
  if (!ok) {
    err << "qck: residual breach\n";
    return kExitResidual;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Classify and decompose linear maps on 2x2 complex matrices", "qck"};
  app.require_subcommand(1);

  Tolerances tol;
  std::string input = "-";
  std::optional<std::string> seed_flag;
  int max_iter = 10000;

  auto* analyze = app.add_subcommand("analyze", "full classification report");
  AnalyzeOptions analyze_opts;
  bool no_decompose = false;
  analyze->add_option("input", input, "map document (or array of them); - for stdin");
  add_tolerances(analyze, tol);
  analyze->add_option("--seed", seed_flag, "seed for the Schwarz search (default $QCK_SEED)");
  analyze->add_option("--trials", analyze_opts.schwarz_trials, "random Schwarz trials")
      ->capture_default_str();
  analyze->add_option("--max-iter", max_iter, "decomposition iteration cap")
      ->capture_default_str();
  analyze->add_flag("--no-decompose", no_decompose, "skip the decomposition");

  auto* decompose = app.add_subcommand("decompose", "split S = L1 + L2 o t");
  decompose->add_option("input", input, "map document; - for stdin");
  add_tolerances(decompose, tol);
  decompose->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();

  auto* generate = app.add_subcommand("generate", "seeded random maps");
  std::string kind;
  int count = 1;
  int n_terms = 3;
  generate->add_option("kind", kind, "sl2 | unitary | positive | bistochastic | boundary")
      ->required();
  generate->add_option("--seed", seed_flag, "decimal or 0x-hex seed (default $QCK_SEED)");
  generate->add_option("--count", count, "number of items")->capture_default_str();
  generate->add_option("--n-terms", n_terms, "terms per positive map")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "recompute decomposition residuals");
  std::string decomposition;
  verify->add_option("input", input, "map document; - for stdin");
  verify->add_option("--decomposition", decomposition, "output of qck decompose")->required();
  add_tolerances(verify, tol);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      analyze_opts.decompose = !no_decompose;
      analyze_opts.max_iter = max_iter;
      analyze_opts.seed = resolve_seed(seed_flag);
      return cmd_analyze(input, tol, analyze_opts, in, out);
    }
    if (*decompose) return cmd_decompose(input, tol, max_iter, in, out, err);
    if (*generate) return cmd_generate(kind, seed_flag, count, n_terms, out);
    if (*verify) return cmd_verify(input, decomposition, tol, in, out, err);
  } catch (const std::exception& e) {
    // ParseError, DomainError and malformed seeds all land here.
    err << "qck: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qck
