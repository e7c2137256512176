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

// Verification campaigns: checkers x families x sizes x trials, each
// instance generated from a derived seed and reported independently.
//
// Instance seed: FNV-1a 64 over the campaign seed (8 bytes, little endian),
// the checker name, a zero byte, the family name, a zero byte, n and the
// trial index (8 bytes each). The first operand is generated from that seed,
// the second from seed ^ 0x9e3779b97f4a7c15.

#ifndef NUMRAD_CAMPAIGN_HPP
#define NUMRAD_CAMPAIGN_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "numrad/generators.hpp"
#include "numrad/inequalities.hpp"

namespace numrad {

enum class OutFormat { json, csv };

/// How operands are rescaled before checking.
enum class Normalize {
  cap10,  // shrink jointly so the largest operand norm is at most 10
  unit,   // each operand to norm 1
  none,
};

/// Second operand of two-operand checkers.
enum class PairMode {
  independent,  // drawn from the same family with its own seed
  same,         // B = A
};

struct CampaignConfig {
  std::vector<std::string> checks;
  /// Family templates; n and seed are filled per instance.
  std::vector<FamilySpec> families;
  std::vector<std::size_t> sizes;
  /// Instances per compatible (checker, family, size) combination.
  int trials = 10;
  std::uint64_t seed = 0;
  double tol = 1e-6;
  int quad_points = 64;
  int bracket_panels = 64;
  int theta_grid = 360;
  RadiusOptions radius;
  Normalize normalize = Normalize::cap10;
  PairMode pair = PairMode::independent;
  /// Worker threads; output does not depend on it.
  int threads = 1;
};

/// Throws DomainError describing the first invalid field.
void validate(const CampaignConfig& config);

CheckOptions check_options(const CampaignConfig& config);

std::uint64_t instance_seed(std::uint64_t campaign_seed, std::string_view check, Family family,
                            std::size_t n, std::uint64_t trial);

/// Whether a checker accepts a family at size n: the normal identity needs
/// a normal family, the square-zero equality needs the square-zero family,
/// the scalar seed runs at n = 1, and square-zero matrices need n >= 2.
bool compatible(const CheckerInfo& checker, Family family, std::size_t n);

struct InstanceResult {
  CheckReport report;
  Family family = Family::general;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  /// Stress variant (search mode), 0 otherwise.
  int variant = 0;
  ComplexMatrix a{1};
  std::optional<ComplexMatrix> b;
};

struct SlackRecord {
  double slack = 0.0;
  std::string inputs_digest;
};

struct GapStats {
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

struct CampaignSummary {
  long long total = 0;
  long long passed = 0;
  long long marginal = 0;
  long long failed = 0;
  std::map<std::string, SlackRecord> worst_slack_by_check;
  /// Statistics of each report's first-link slack.
  std::map<std::string, GapStats> gap_stats_by_check;
};

enum class CampaignMode {
  verify,
  /// Adds stress variants by trial index: 1 = B = A (pairs) or A scaled by
  /// 1e-6; 2 = B = -(1 + 1e-9) A or A scaled by 1e3; 3 = B = A + 1e-9 E with
  /// E Gaussian, or A scaled by 1e-8. Variant 0 is the plain instance.
  search,
};

struct CampaignResult {
  CampaignSummary summary;
  /// Sorted by (inputs_digest, check_name).
  std::vector<InstanceResult> instances;
};

/// Propagates ConvergenceError from the numerical engines.
CampaignResult run_campaign(const CampaignConfig& config, CampaignMode mode = CampaignMode::verify);

CampaignSummary summarize(const std::vector<InstanceResult>& instances);

std::string summary_to_json(const CampaignSummary& s);
/// {"summary": ..., "reports": [...]} with one report per line.
std::string campaign_to_json(const CampaignResult& r);
std::string campaign_to_csv(const CampaignResult& r);

struct GapRow {
  std::string check;
  std::size_t n = 0;
  std::string family;
  std::uint64_t seed = 0;
  double lhs = 0.0;
  double middle = 0.0;
  double rhs = 0.0;
  double improvement = 0.0;  // rhs - middle
  double residual = 0.0;     // middle - lhs
};

/// Rows for the chain checkers among the instances, in instance order.
std::vector<GapRow> gap_rows(const CampaignResult& r);
/// Header check,n,family,seed,lhs,middle,rhs,improvement,residual.
std::string gap_rows_to_csv(const std::vector<GapRow>& rows);

/// Writes <digest>.json (first operand) and, for two-operand checkers,
/// <digest>.b.json for every failed instance. Returns the files written.
std::vector<std::filesystem::path> dump_failures(const CampaignResult& r,
                                                 const std::filesystem::path& dir, double tol);

}  // namespace numrad

#endif  // NUMRAD_CAMPAIGN_HPP
