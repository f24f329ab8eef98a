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


#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace pbij::cli {

using Json = nlohmann::ordered_json;

/// Bad command-line input: missing options, out-of-range values.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string family_path;
  std::optional<std::size_t> window;
  bool allow_small_window = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> n;
  std::size_t max_elements = 2'000'000;
  std::string csv_path;

  std::string ideal = "fin";
  std::string a_set = "tail mod 2 residues [0]";
  std::vector<std::string> elements;
  std::string collection;
  std::string schema;
  std::string limit;
  std::string base;
  std::string dom_pool = "naturals";
  std::string im_pool = "naturals";
  std::size_t horizon = 64;
  bool expect_converge = true;
  std::vector<std::size_t> windows;
  bool inverse_check = false;
};

enum class Status { Pass, Fail, NotApplicable, NotChecked };

const char* to_string(Status status);

struct Verdict {
  std::string name;
  Status status = Status::NotChecked;
  std::string detail;
};

/// A command's outcome. Everything but the metadata is a function of the
/// inputs and the seed.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json inputs = Json::object();
  Json witnesses = Json::object();
  std::optional<std::uint64_t> seed;

  void verdict(std::string name, bool pass, std::string detail);
  void verdict(std::string name, Status status, std::string detail);
  const std::vector<Verdict>& verdicts() const { return verdicts_; }

  bool failed() const;
  /// 0 when no verdict failed, 2 otherwise.
  int exit_code() const { return failed() ? 2 : 0; }

  const std::string& command() const { return command_; }
  /// The report without metadata.
  Json body() const;
  Json document(const Json& metadata) const;

 private:
  std::string command_;
  std::vector<Verdict> verdicts_;
};

Report family_check(const RunConfig& cfg);
Report closure_run(const RunConfig& cfg);
Report chains(const RunConfig& cfg);
Report factorize(const RunConfig& cfg);
Report stratify(const RunConfig& cfg);
Report verify_prop22(const RunConfig& cfg);
Report verify_nonpp(const RunConfig& cfg);
Report verify_pettis_witness(const RunConfig& cfg);
Report verify_convergence(const RunConfig& cfg);
Report verify_sc_laws(const RunConfig& cfg);
Report verify_isolated(const RunConfig& cfg);

}  // namespace pbij::cli
