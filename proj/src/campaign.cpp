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

#include "numrad/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "numrad/error.hpp"
#include "numrad/report_io.hpp"

namespace numrad {

namespace {

constexpr std::uint64_t kSecondOperand = 0x9e3779b97f4a7c15ULL;

bool normal_family(Family f) {
  switch (f) {
    case Family::normal:
    case Family::hermitian:
    case Family::skew_hermitian:
    case Family::unitary:
    case Family::scalar:
      return true;
    default:
      return false;
  }
}

struct Task {
  const CheckerInfo* checker;
  FamilySpec spec;
  std::uint64_t trial;
};

void normalize(ComplexMatrix& a, std::optional<ComplexMatrix>& b, Normalize mode) {
  if (mode == Normalize::none) return;
  const double na = operator_norm(a, 1e-12);
  const double nb = b ? operator_norm(*b, 1e-12) : 0.0;
  if (mode == Normalize::unit) {
    if (na > 0.0) a = Complex(1.0 / na) * a;
    if (b && nb > 0.0) *b = Complex(1.0 / nb) * *b;
    return;
  }
  const double top = std::max(na, nb);
  if (top > 10.0) {
    const Complex f(10.0 / top);
    a = f * a;
    if (b) *b = f * *b;
  }
}

InstanceResult run_task(const Task& task, const CampaignConfig& config, const CheckOptions& base,
                        CampaignMode mode) {
  InstanceResult res;
  res.family = task.spec.family;
  res.n = task.spec.n;
  res.seed = task.spec.seed;
  res.trial = task.trial;
  res.variant = mode == CampaignMode::search ? static_cast<int>(task.trial % 4) : 0;

  const bool two = task.checker->arity != Arity::single;
  FamilySpec spec_b = task.spec;
  spec_b.seed = task.spec.seed ^ kSecondOperand;
  ComplexMatrix a = generate(task.spec);
  std::optional<ComplexMatrix> b;
  if (two) b = config.pair == PairMode::same ? a : generate(spec_b);

  switch (res.variant) {
    case 1:
      if (two) b = a;
      else a = Complex(1e-6) * a;
      break;
    case 2:
      if (two) b = Complex(-(1.0 + 1e-9)) * a;
      else a = Complex(1e3) * a;
      break;
    case 3:
      if (two) {
        FamilySpec noise{Family::general, task.spec.n, spec_b.seed, 1.0, false};
        b = a + Complex(1e-9) * generate(noise);
      } else {
        a = Complex(1e-8) * a;
      }
      break;
    default:
      break;
  }
  normalize(a, b, config.normalize);

  CheckOptions opts = base;
  opts.seed = task.spec.seed;
  res.report = task.checker->run(a, b ? *b : a, opts);
  res.a = std::move(a);
  res.b = std::move(b);
  return res;
}

}  // namespace

void validate(const CampaignConfig& config) {
  if (config.checks.empty()) throw DomainError("no checks selected");
  for (const auto& c : config.checks)
    if (!find_checker(c)) throw DomainError("unknown check '" + c + "'");
  if (config.families.empty()) throw DomainError("no families selected");
  for (const auto& f : config.families) {
    if (!(f.scale > 0.0) || !std::isfinite(f.scale)) throw DomainError("scale must be positive");
  }
  if (config.sizes.empty()) throw DomainError("no sizes selected");
  for (std::size_t n : config.sizes)
    if (n == 0) throw DomainError("sizes must be positive");
  if (config.trials < 1) throw DomainError("trials must be at least 1");
  if (!(config.tol > 0.0)) throw DomainError("tol must be positive");
  if (config.quad_points < 1 || config.quad_points > 512) {
    throw DomainError("quad-points must be in [1, 512]");
  }
  if (config.bracket_panels < 1) throw DomainError("panels must be positive");
  if (config.theta_grid < 8) throw DomainError("theta-grid must be at least 8");
  if (config.radius.grid < 4) throw DomainError("radius grid must be at least 4");
  if (config.threads < 1) throw DomainError("threads must be at least 1");
}

CheckOptions check_options(const CampaignConfig& config) {
  CheckOptions o;
  o.tol = config.tol;
  o.rule = gauss_legendre_rule(config.quad_points, config.bracket_panels);
  o.radius = config.radius;
  o.theta_grid = config.theta_grid;
  return o;
}

std::uint64_t instance_seed(std::uint64_t campaign_seed, std::string_view check, Family family,
                            std::size_t n, std::uint64_t trial) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto byte = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  auto word = [&byte](std::uint64_t w) {
    for (int i = 0; i < 8; ++i) byte(static_cast<unsigned char>(w >> (8 * i)));
  };
  auto text = [&byte](std::string_view s) {
    for (char c : s) byte(static_cast<unsigned char>(c));
    byte(0);
  };
  word(campaign_seed);
  text(check);
  text(to_string(family));
  word(n);
  word(trial);
  return h;
}

bool compatible(const CheckerInfo& checker, Family family, std::size_t n) {
  if (family == Family::nilpotent_square_zero && n < 2) return false;
  if (checker.arity == Arity::scalar_pair) return n == 1;
  if (checker.name == "check_normal_identity") return normal_family(family);
  if (checker.name == "check_nilpotent_equality") return family == Family::nilpotent_square_zero;
  return true;
}

CampaignResult run_campaign(const CampaignConfig& config, CampaignMode mode) {
  validate(config);
  const CheckOptions base = check_options(config);

  std::vector<Task> tasks;
  for (const auto& name : config.checks) {
    const CheckerInfo* checker = find_checker(name);
    for (const auto& tmpl : config.families) {
      for (std::size_t n : config.sizes) {
        if (!compatible(*checker, tmpl.family, n)) continue;
        for (int t = 0; t < config.trials; ++t) {
          FamilySpec spec = tmpl;
          spec.n = n;
          spec.seed = instance_seed(config.seed, checker->name, tmpl.family, n,
                                    static_cast<std::uint64_t>(t));
          tasks.push_back({checker, spec, static_cast<std::uint64_t>(t)});
        }
      }
    }
  }

  std::vector<std::optional<InstanceResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::size_t error_index = tasks.size();
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        slots[i] = run_task(tasks[i], config, base, mode);
      } catch (...) {
        // Keep the error of the lowest task index so the outcome does not
        // depend on scheduling.
        std::lock_guard<std::mutex> lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  const int nthreads = std::min<int>(config.threads, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  CampaignResult result;
  result.instances.reserve(slots.size());
  for (auto& s : slots) result.instances.push_back(std::move(*s));
  std::stable_sort(result.instances.begin(), result.instances.end(),
                   [](const InstanceResult& x, const InstanceResult& y) {
                     if (x.report.inputs_digest != y.report.inputs_digest)
                       return x.report.inputs_digest < y.report.inputs_digest;
                     return x.report.check_name < y.report.check_name;
                   });
  result.summary = summarize(result.instances);
  return result;
}

CampaignSummary summarize(const std::vector<InstanceResult>& instances) {
  CampaignSummary s;
  std::map<std::string, std::pair<double, long long>> sums;
  for (const auto& inst : instances) {
    const CheckReport& r = inst.report;
    ++s.total;
    if (r.passed) {
      ++s.passed;
      if (r.marginal()) ++s.marginal;
    } else {
      ++s.failed;
    }
    const double worst = r.worst_slack();
    auto it = s.worst_slack_by_check.find(r.check_name);
    if (it == s.worst_slack_by_check.end() || worst < it->second.slack) {
      s.worst_slack_by_check[r.check_name] = {worst, r.inputs_digest};
    }
    if (!r.links.empty()) {
      const double first = r.links.front().slack;
      auto [g, fresh] = s.gap_stats_by_check.try_emplace(r.check_name, GapStats{first, 0.0, first});
      if (!fresh) {
        g->second.min = std::min(g->second.min, first);
        g->second.max = std::max(g->second.max, first);
      }
      auto& acc = sums[r.check_name];
      acc.first += first;
      ++acc.second;
    }
  }
  for (auto& [name, g] : s.gap_stats_by_check) {
    g.mean = sums[name].first / static_cast<double>(sums[name].second);
  }
  return s;
}

std::string summary_to_json(const CampaignSummary& s) {
  JsonWriter w;
  w.begin_object();
  w.key("total").value(s.total);
  w.key("passed").value(s.passed);
  w.key("marginal").value(s.marginal);
  w.key("failed").value(s.failed);
  w.key("worst_slack_by_check").begin_object();
  for (const auto& [name, rec] : s.worst_slack_by_check) {
    w.key(name).begin_object();
    w.key("slack").value(rec.slack);
    w.key("inputs_digest").value(rec.inputs_digest);
    w.end_object();
  }
  w.end_object();
  w.key("gap_stats_by_check").begin_object();
  for (const auto& [name, g] : s.gap_stats_by_check) {
    w.key(name).begin_object();
    w.key("min").value(g.min);
    w.key("mean").value(g.mean);
    w.key("max").value(g.max);
    w.end_object();
  }
  w.end_object();
  w.end_object();
  return w.str();
}

std::string campaign_to_json(const CampaignResult& r) {
  JsonWriter w;
  w.begin_object();
  w.key("summary").raw(summary_to_json(r.summary));
  w.key("reports").begin_array();
  for (const auto& inst : r.instances) w.newline().raw(report_to_json(inst.report));
  w.newline();
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

std::string campaign_to_csv(const CampaignResult& r) {
  std::vector<CheckReport> reports;
  reports.reserve(r.instances.size());
  for (const auto& inst : r.instances) reports.push_back(inst.report);
  return reports_to_csv(reports);
}

std::vector<GapRow> gap_rows(const CampaignResult& r) {
  std::vector<GapRow> rows;
  for (const auto& inst : r.instances) {
    const CheckerInfo* c = find_checker(inst.report.check_name);
    if (!c || !c->chain || inst.report.links.size() < 2) continue;
    const ChainLink& first = inst.report.links[0];
    const ChainLink& second = inst.report.links[1];
    GapRow row;
    row.check = inst.report.check_name;
    row.n = inst.n;
    row.family = std::string(to_string(inst.family));
    row.seed = inst.seed;
    row.lhs = first.lhs;
    row.middle = first.rhs;
    row.rhs = second.rhs;
    row.improvement = second.slack;
    row.residual = first.slack;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string gap_rows_to_csv(const std::vector<GapRow>& rows) {
  std::string out = "check,n,family,seed,lhs,middle,rhs,improvement,residual\n";
  for (const auto& r : rows) {
    out += r.check + ',' + std::to_string(r.n) + ',' + r.family + ',' + std::to_string(r.seed) +
           ',' + format_double(r.lhs) + ',' + format_double(r.middle) + ',' +
           format_double(r.rhs) + ',' + format_double(r.improvement) + ',' +
           format_double(r.residual) + '\n';
  }
  return out;
}

std::vector<std::filesystem::path> dump_failures(const CampaignResult& r,
                                                 const std::filesystem::path& dir, double tol) {
  std::vector<std::filesystem::path> written;
  for (const auto& inst : r.instances) {
    if (inst.report.passed) continue;
    std::vector<std::pair<std::string, std::string>> meta{
        {"check", json_escape(inst.report.check_name)},
        {"seed", std::to_string(inst.seed)},
        {"tol", format_double(tol)},
        {"family", json_escape(to_string(inst.family))},
        {"trial", std::to_string(inst.trial)},
        {"variant", std::to_string(inst.variant)},
    };
    auto path = dir / (inst.report.inputs_digest + ".json");
    write_text_file(path, matrix_to_json(inst.a, meta));
    written.push_back(path);
    if (inst.b) {
      auto pb = dir / (inst.report.inputs_digest + ".b.json");
      write_text_file(pb, matrix_to_json(*inst.b, meta));
      written.push_back(pb);
    }
  }
  return written;
}

}  // namespace numrad
