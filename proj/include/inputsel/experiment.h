// Copyright 2026 The Authors.
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

#ifndef INPUTSEL_EXPERIMENT_H_
#define INPUTSEL_EXPERIMENT_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "inputsel/json_io.h"
#include "inputsel/metrics.h"
#include "inputsel/select.h"
#include "inputsel/sysmodel.h"

namespace inputsel {

inline constexpr char kVersion[] = "0.1.0";

struct ExperimentSpec {
  std::string id = "fig1";
  std::vector<int> n_values = {10, 20, 30, 40};
  double degree = 3.0;
  std::vector<int> k_values = {4, 6, 8, 10, 12, 14};
  int trials = 20;
  uint64_t seed = 1;
  MetricConfig metric;
  MetricKind metric_kind = MetricKind::kConvergence;
  int samples_per_estimate = 0;
  std::string out_dir = ".";

  void Validate() const;
  Json ToJson() const;
  // FNV-1a over the compact JSON form.
  uint64_t ConfigHash() const;

  static ExperimentSpec Fig1();
  static ExperimentSpec Fig2();
};

struct ExperimentRow {
  int x = 0;
  std::string method;
  int trial = 0;
  double value = 0.0;
  std::string status = "ok";
  uint64_t trial_seed = 0;
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<ExperimentRow> rows;
};

uint64_t Fnv1a(const std::string& text);
uint64_t TrialSeed(uint64_t seed, int x, int trial);

// Descending total degree, ties by index.
std::vector<int> DegreeOrder(const Graph& g);
std::vector<int> RandomOrder(int n, uint64_t seed);
// Shortest prefix of order (as states) whose certificate passes; -1 if none.
int BaselinePrefix(const DescriptorSystem& sys, const std::vector<int>& order,
                   const CertificateConfig& cfg = {});

GeometricConfig ExperimentNetworkConfig(int n, double degree, uint64_t seed);

ExperimentResult RunFig1(const ExperimentSpec& spec);
ExperimentResult RunFig2(const ExperimentSpec& spec);
ExperimentResult RunExperiment(const ExperimentSpec& spec);

// Mean value per (x, method) over trials in which every method succeeded.
std::map<std::pair<int, std::string>, double> Means(
    const std::vector<ExperimentRow>& rows);

std::string ToCsv(const ExperimentResult& result);
std::vector<ExperimentRow> RowsFromCsv(const std::string& csv);
// Means per (x, method) over rows whose status is ok.
std::string SvgFromCsv(const std::string& csv);
Json Metadata(const ExperimentResult& result);
// Writes <id>.csv, <id>.svg and <id>.meta.json.
void WriteArtifacts(const ExperimentResult& result);

}  // namespace inputsel

#endif  // INPUTSEL_EXPERIMENT_H_
