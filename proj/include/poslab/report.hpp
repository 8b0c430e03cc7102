#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poslab/io.hpp"
#include "poslab/verdict.hpp"

namespace poslab {

std::string sha256_hex(std::string_view bytes);

// Machine-readable record of one CLI invocation. Serialization is a pure
// function of the inputs and seed unless wall time is recorded explicitly.
class Report {
 public:
  explicit Report(std::vector<std::string> command);

  void add_input(const std::string& role, const LoadedFile& file);
  void set_sampling(std::uint64_t seed, std::uint64_t samples);
  void add_verdict(const std::string& name, const Verdict& v, const GroundSet& ground);
  void set_top(const std::string& name, Status status);
  void set_wall_time_ms(double ms) { wall_time_ms_ = ms; }
  Json& details() { return details_; }

  std::optional<Status> top() const { return top_; }
  int exit_code() const { return top_ && *top_ == Status::Fail ? 1 : 0; }
  Json to_json() const;

 private:
  std::vector<std::string> command_;
  Json inputs_ = Json::array();
  std::optional<std::pair<std::uint64_t, std::uint64_t>> sampling_;
  Json verdicts_ = Json::array();
  std::string top_name_;
  std::optional<Status> top_;
  Json details_ = Json::object();
  std::optional<double> wall_time_ms_;
};

// One-line summary plus an indented witness line for failures.
std::string describe(const Verdict& v, const GroundSet& ground);

}  // namespace poslab
