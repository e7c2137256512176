// Copyright 2026 The numrad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// numrad: numerical radius, verification campaigns, gap tables, stress search.
//
// Exit codes: 0 all passed, 1 violation recorded, 2 usage or parse error,
// 3 numeric failure, 4 I/O failure.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "numrad/campaign.hpp"
#include "numrad/error.hpp"
#include "numrad/generators.hpp"
#include "numrad/inequalities.hpp"
#include "numrad/radius.hpp"
#include "numrad/report_io.hpp"

namespace {

using namespace numrad;

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kNumeric = 3, kIo = 4 };

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(start, end - start);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first != std::string::npos) out.push_back(item.substr(first, last - first + 1));
    start = end + 1;
  }
  return out;
}

struct CampaignArgs {
  std::string checks;
  std::string families;
  std::string sizes = "2,4";
  int trials = 10;
  std::uint64_t seed = 0;
  double tol = 1e-6;
  int quad_points = 64;
  int panels = 64;
  int theta_grid = 360;
  int radius_grid = 720;
  double golden_width = 1e-10;
  double scale = 1.0;
  std::string nilpotent_form = "rank_one";
  std::string normalize = "cap10";
  std::string pair = "independent";
  int threads = 1;
  std::string out;
  std::string format = "json";
  std::string dump_dir;
  std::string matrix;
  std::string matrix_b;
};

void add_campaign_options(CLI::App* cmd, CampaignArgs& a, const std::string& default_checks,
                          const std::string& default_families) {
  a.checks = default_checks;
  a.families = default_families;
  cmd->add_option("--checks", a.checks, "Comma-separated checker names")->capture_default_str();
  cmd->add_option("--families", a.families, "Comma-separated families")->capture_default_str();
  cmd->add_option("--sizes", a.sizes, "Comma-separated matrix sizes")->capture_default_str();
  cmd->add_option("--trials", a.trials, "Instances per checker/family/size")->capture_default_str();
  cmd->add_option("--seed", a.seed, "Campaign seed")->capture_default_str();
  cmd->add_option("--tol", a.tol, "Absolute slack tolerance")->capture_default_str();
  cmd->add_option("--quad-points", a.quad_points, "Gauss-Legendre points")->capture_default_str();
  cmd->add_option("--panels", a.panels, "Bracket panels")->capture_default_str();
  cmd->add_option("--theta-grid", a.theta_grid, "Rotation grid of the sup-over-theta check")
      ->capture_default_str();
  cmd->add_option("--radius-grid", a.radius_grid, "Angle grid of the numerical radius engine")
      ->capture_default_str();
  cmd->add_option("--golden-width", a.golden_width, "Absolute stopping width of the radius angle search")
      ->capture_default_str();
  cmd->add_option("--scale", a.scale, "Target spectral scale of generated matrices")
      ->capture_default_str();
  cmd->add_option("--nilpotent-form", a.nilpotent_form, "rank_one or block")->capture_default_str();
  cmd->add_option("--normalize", a.normalize, "cap10, unit or none")->capture_default_str();
  cmd->add_option("--pair", a.pair, "Second operand: independent or same")->capture_default_str();
  cmd->add_option("--threads", a.threads, "Worker threads")->capture_default_str();
  cmd->add_option("--out", a.out, "Output file (default: standard output)");
  cmd->add_option("--format", a.format, "json or csv")->capture_default_str();
}

CampaignConfig to_config(const CampaignArgs& a) {
  CampaignConfig c;
  c.checks = split_list(a.checks);
  for (const auto& name : split_list(a.families)) {
    const auto fam = parse_family(name);
    if (!fam) throw ParseError("unknown family '" + name + "'");
    FamilySpec spec;
    spec.family = *fam;
    spec.scale = a.scale;
    if (a.nilpotent_form == "block") spec.nilpotent_block = true;
    else if (a.nilpotent_form != "rank_one") throw ParseError("--nilpotent-form must be rank_one or block");
    c.families.push_back(spec);
  }
  for (const auto& s : split_list(a.sizes)) {
    std::size_t n = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), n);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw ParseError("--sizes: '" + s + "' is not a positive integer");
    }
    c.sizes.push_back(n);
  }
  c.trials = a.trials;
  c.seed = a.seed;
  c.tol = a.tol;
  c.quad_points = a.quad_points;
  c.bracket_panels = a.panels;
  c.theta_grid = a.theta_grid;
  c.radius.grid = a.radius_grid;
  c.radius.golden_width = a.golden_width;
  c.threads = a.threads;
  if (a.normalize == "cap10") c.normalize = Normalize::cap10;
  else if (a.normalize == "unit") c.normalize = Normalize::unit;
  else if (a.normalize == "none") c.normalize = Normalize::none;
  else throw ParseError("--normalize must be cap10, unit or none");
  if (a.pair == "independent") c.pair = PairMode::independent;
  else if (a.pair == "same") c.pair = PairMode::same;
  else throw ParseError("--pair must be independent or same");
  if (a.format != "json" && a.format != "csv") throw ParseError("--format must be json or csv");
  validate(c);
  return c;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text_file(out_path, text);
  }
}

int cmd_radius(const std::string& path, double tol, int grid) {
  const ComplexMatrix a = read_matrix_file(path);
  RadiusOptions opts;
  opts.grid = grid;
  const RadiusResult r = numerical_radius(a, tol, opts);
  const double norm = operator_norm(a, 1e-12);
  JsonWriter w;
  w.begin_object();
  w.key("omega").value(r.value);
  w.key("norm").value(norm);
  w.key("ratio").value(norm > 0.0 ? r.value / norm : std::nan(""));
  w.key("argmax_theta").value(r.argmax_theta);
  w.end_object();
  std::cout << w.str() << "\n";
  return kOk;
}

int cmd_verify(const CampaignArgs& a, CampaignMode mode) {
  const CampaignConfig config = to_config(a);
  const CampaignResult result = run_campaign(config, mode);
  emit(a.out, a.format == "csv" ? campaign_to_csv(result) : campaign_to_json(result));
  if (!a.out.empty() || a.format == "csv") std::cerr << summary_to_json(result.summary) << "\n";
  if (mode == CampaignMode::search && result.summary.failed > 0) {
    std::filesystem::path dir = a.dump_dir;
    if (dir.empty()) {
      dir = a.out.empty() ? std::filesystem::path(".")
                          : std::filesystem::absolute(a.out).parent_path();
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create dump directory " + dir.string());
    for (const auto& p : dump_failures(result, dir, config.tol)) std::cerr << "dumped " << p.string() << "\n";
  }
  return result.summary.failed == 0 ? kOk : kViolation;
}

int cmd_gap(const CampaignArgs& a) {
  std::vector<GapRow> rows;
  double tol = a.tol;
  if (!a.matrix.empty()) {
    // Fixed operands from files: one row per chain checker.
    CampaignArgs copy = a;
    copy.families = "general";
    const CampaignConfig config = to_config(copy);
    tol = config.tol;
    const ComplexMatrix m = read_matrix_file(a.matrix);
    const ComplexMatrix mb = a.matrix_b.empty() ? m : read_matrix_file(a.matrix_b);
    CheckOptions opts = check_options(config);
    CampaignResult r;
    for (const auto& name : config.checks) {
      const CheckerInfo* c = find_checker(name);
      if (!c->chain) throw ParseError("gap: '" + name + "' is not a chain checker");
      InstanceResult inst;
      inst.n = m.dim();
      inst.report = c->run(m, mb, opts);
      r.instances.push_back(std::move(inst));
    }
    rows = gap_rows(r);
    for (auto& row : rows) row.family = "file";
  } else {
    const CampaignConfig config = to_config(a);
    for (const auto& name : config.checks) {
      if (!find_checker(name)->chain) throw ParseError("gap: '" + name + "' is not a chain checker");
    }
    rows = gap_rows(run_campaign(config));
  }
  emit(a.out, gap_rows_to_csv(rows));
  for (const auto& row : rows)
    if (row.improvement < -tol || row.residual < -tol) return kViolation;
  return kOk;
}

constexpr const char* kDefaultFamilies = "general,hermitian,normal,unitary,nilpotent,scalar";

std::string all_checks() {
  std::string s;
  for (const auto& c : checker_registry()) {
    if (!s.empty()) s += ',';
    s += c.name;
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numrad: numerical radius and operator norm inequality verification"};
  app.require_subcommand(1);

  std::string matrix_path;
  double radius_tol = 1e-9;
  int radius_grid = 720;
  auto* radius = app.add_subcommand("radius", "omega, norm and maximizing angle of a matrix file");
  radius->add_option("--matrix", matrix_path, "Matrix JSON file")->required();
  radius->add_option("--tol", radius_tol, "Tolerance")->capture_default_str();
  radius->add_option("--radius-grid", radius_grid, "Angle grid")->capture_default_str();

  CampaignArgs verify_args, gap_args, search_args;
  auto* verify = app.add_subcommand("verify", "Run checkers over random families");
  add_campaign_options(verify, verify_args, all_checks(), kDefaultFamilies);

  auto* gap = app.add_subcommand("gap", "Sharpness table of the chain checkers (CSV)");
  add_campaign_options(gap, gap_args, "check_triangle_refinement", "general");
  gap->add_option("--matrix", gap_args.matrix, "First operand file instead of random families");
  gap->add_option("--matrix-b", gap_args.matrix_b, "Second operand file (default: same as --matrix)");

  auto* search = app.add_subcommand("search", "Stress run with failure dumps");
  add_campaign_options(search, search_args, all_checks(), kDefaultFamilies);
  search->add_option("--dump-dir", search_args.dump_dir, "Directory for failure dumps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (radius->parsed()) return cmd_radius(matrix_path, radius_tol, radius_grid);
    if (verify->parsed()) return cmd_verify(verify_args, CampaignMode::verify);
    if (gap->parsed()) return cmd_gap(gap_args);
    if (search->parsed()) return cmd_verify(search_args, CampaignMode::search);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const IoError& e) {
    std::cerr << "I/O failure: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
