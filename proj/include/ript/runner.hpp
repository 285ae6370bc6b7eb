/* Copyright 2026 The RIPT-Sim Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef RIPT_RUNNER_HPP
#define RIPT_RUNNER_HPP

#include "ript/config.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ript {

struct RunOptions {
  std::filesystem::path output_dir = ".";
  int threads = 1;  // 0 = hardware concurrency
  bool validate = false;
  std::optional<long> seed;  // accepted, unused by the deterministic studies
};

// Output of one study, not yet on disk.
struct StudyOutput {
  std::string csv_name;  // "<study>.csv"
  std::string csv;
  std::string summary;
};

StudyOutput run_study(const ScenarioConfig& config, int threads);

// Writes every file to a temporary name first and renames once all of them
// are complete, so a failure leaves no partial outputs behind.
void write_outputs_atomically(const std::filesystem::path& dir,
                              const std::vector<std::pair<std::string, std::string>>& files);

struct ValidationCheck {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double low = 0.0;
  double high = 0.0;
  std::string unit;
  bool pass = false;
};

// Reference-link checks: extracted inductances of the 5-turn, 1 m coils,
// coupling, resonance frequencies and efficiency.
std::vector<ValidationCheck> run_reference_validation(int threads);

void print_validation(std::ostream& out, const std::vector<ValidationCheck>& checks);

// Thread count from the flag, else RIPT_SIM_THREADS, else 1.
int resolve_threads_option(std::optional<int> flag);

// Whole CLI flow. Returns the process exit status.
int run(const std::optional<std::string>& config_path, const RunOptions& options,
        std::ostream& out, std::ostream& err);

}  // namespace ript

#endif  // RIPT_RUNNER_HPP
