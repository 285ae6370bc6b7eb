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

#include "ript/runner.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Resonant inductive power transfer link simulator"};

  std::optional<std::string> config_path;
  std::string output_dir = ".";
  std::optional<int> threads;
  std::optional<long> seed;
  bool validate = false;

  app.add_option("config", config_path, "Scenario file");
  app.add_option("-o,--output-dir", output_dir, "Directory for <study>.csv and summary.txt");
  app.add_option("--threads", threads, "Worker threads, 0 = auto (default: $RIPT_SIM_THREADS or 1)");
  app.add_option("--seed", seed, "Reserved for stochastic studies");
  app.add_flag("--validate", validate, "Run the reference-link checks and report pass/fail");

  CLI11_PARSE(app, argc, argv);

  ript::RunOptions options;
  options.output_dir = output_dir;
  options.threads = ript::resolve_threads_option(threads);
  options.validate = validate;
  options.seed = seed;
  return ript::run(config_path, options, std::cout, std::cerr);
}
