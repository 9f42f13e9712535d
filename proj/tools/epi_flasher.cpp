// Copyright 2026 The epi-flasher Authors.
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

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <thread>

#include "epi/app.hpp"
#include "epi/error.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kBadInput = 2;

void print_process(const epi::ProcessSummary& s) {
  std::cout << "items processed: " << s.items << "\n"
            << "events stored: " << s.stored << "\n"
            << "events merged: " << s.merged << "\n"
            << "disease-without-location: " << s.disease_without_location << "\n";
  if (s.failed) std::cout << "items skipped (bad encoding): " << s.failed << "\n";
}

template <class F>
int repeat(double hours, F&& once) {
  for (;;) {
    const int rc = once();
    if (hours <= 0) return rc;
    std::this_thread::sleep_for(std::chrono::duration<double, std::ratio<3600>>(hours));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Urdu news outbreak detection pipeline"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  std::optional<std::string> data_dir;
  app.add_option("--config", config_path, "Settings and source list");
  app.add_option("--data-dir", data_dir, "Directory holding the item and event stores");

  auto* fetch = app.add_subcommand("fetch", "Poll every due source and store new items");
  bool force = false;
  double fetch_loop = 0;
  fetch->add_flag("--force", force, "Ignore poll intervals");
  fetch->add_option("--loop", fetch_loop, "Repeat every N hours")->check(CLI::NonNegativeNumber);

  auto* process = app.add_subcommand("process", "Extract events from every NEW item");
  double process_loop = 0;
  process->add_option("--loop", process_loop, "Repeat every N hours")->check(CLI::NonNegativeNumber);

  auto* serve = app.add_subcommand("serve", "Run the HTTP query API");
  std::optional<std::string> listen;
  serve->add_option("--listen", listen, "host:port, overrides LISTEN_ADDR");

  auto* eval = app.add_subcommand("eval", "Score pipeline stages against gold labels");
  epi::EvalArgs eval_args;
  std::optional<std::string> csv;
  eval->add_option("--gold", eval_args.gold, "Gold TSV")->required();
  eval->add_option("--items", eval_args.items, "RSS XML holding the labelled items")->required();
  eval->add_option("--stages", eval_args.stages, "all, or a comma-separated stage list");
  eval->add_option("--csv", csv, "Also write the report as CSV");

  auto* purge = app.add_subcommand("purge", "Delete events older than the retention window");
  auto* dump = app.add_subcommand("dump", "Print every event as one JSON object per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  epi::Config cfg;
  try {
    std::optional<std::filesystem::path> file;
    if (config_path) file = *config_path;
    cfg = epi::load_config(file);
    if (data_dir) cfg.data_dir = *data_dir;
    if (listen) {
      epi::parse_listen_addr(*listen);
      cfg.listen_addr = *listen;
    }
  } catch (const epi::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (*fetch) {
      return repeat(fetch_loop, [&] {
        const auto s = epi::cmd_fetch(cfg, std::cout, force);
        return s.all_failed() ? kFailure : kOk;
      });
    }
    if (*process) {
      return repeat(process_loop, [&] {
        print_process(epi::cmd_process(cfg, std::cerr));
        return kOk;
      });
    }
    if (*serve) {
      epi::cmd_serve(cfg, std::cerr);
      return kOk;
    }
    if (*eval) {
      if (csv) eval_args.csv = *csv;
      std::cout << epi::cmd_eval(cfg, eval_args);
      return kOk;
    }
    if (*purge) {
      std::cout << epi::cmd_purge(cfg) << " removed\n";
      return kOk;
    }
    if (*dump) {
      epi::cmd_dump(cfg, std::cout);
      return kOk;
    }
  } catch (const epi::LoadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const epi::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const epi::EmptyMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kBadInput;
}
