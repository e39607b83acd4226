#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hellylat::cli {

using json = nlohmann::json;

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr std::size_t kDefaultCap = 200'000;

enum class Status { pass, fail, skipped };
std::string status_name(Status s);

struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t cap = kDefaultCap;
};

struct Outcome {
  Status status = Status::pass;
  json witness = json::object();
};

struct SuiteInfo {
  std::string name;
  std::string theorem;  // short claim tag
  double budget_seconds = 0;
  std::function<Outcome(const SuiteConfig&)> run;
};

struct Report {
  std::string suite;
  std::string theorem;
  Status status = Status::pass;
  json witness;
  std::uint64_t seed = 0;
  std::int64_t millis = 0;
};

/// Registered suites, one per acceptance criterion, in canonical order.
const std::vector<SuiteInfo>& registry();
/// Throws InputError for unknown names.
const SuiteInfo& find_suite(const std::string& name);

/// Runs one suite; CapExceeded becomes a skipped report with the reason.
Report run_one(const SuiteInfo& s, const SuiteConfig& cfg);
/// "all" or a single suite name.
std::vector<Report> run_suite(const std::string& name, const SuiteConfig& cfg);

/// Report schema; with timing off, millis is written as 0 so output is
/// byte-identical across runs.
json to_json(const Report& r, bool timing = true);

struct LoopLength {
  double value = 0;
  double ratio_to_2pi = 0;
  bool less_than_2pi = false;
};

/// 2 acos(sqrt(14/25)) + 4 acos(sqrt(13/35)), the length of the loop in
/// the link whose length must stay below 2 pi.
LoopLength loop_length_value();

}  // namespace hellylat::cli
