#include "poslab/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "poslab/error.hpp"

namespace poslab {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::string out;
  char hex[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(hex, sizeof hex, "%02x", digest[i]);
    out += hex;
  }
  return out;
}

Report::Report(std::vector<std::string> command) : command_(std::move(command)) {}

void Report::add_input(const std::string& role, const LoadedFile& file) {
  inputs_.push_back({{"role", role}, {"path", file.path}, {"sha256", sha256_hex(file.bytes)}});
}

void Report::set_sampling(std::uint64_t seed, std::uint64_t samples) { sampling_ = {seed, samples}; }

void Report::add_verdict(const std::string& name, const Verdict& v, const GroundSet& ground) {
  Json entry{{"name", name}};
  entry.update(verdict_to_json(v, ground));
  verdicts_.push_back(entry);
}

void Report::set_top(const std::string& name, Status status) {
  top_name_ = name;
  top_ = status;
}

Json Report::to_json() const {
  Json out{{"command", command_}, {"inputs", inputs_}};
  if (sampling_) {
    out["seed"] = sampling_->first;
    out["samples"] = sampling_->second;
  }
  out["verdicts"] = verdicts_;
  if (!details_.empty()) out["details"] = details_;
  if (top_) out["verdict"] = {{"name", top_name_}, {"status", status_name(*top_)}};
  out["exit_code"] = exit_code();
  if (wall_time_ms_) out["wall_time_ms"] = *wall_time_ms_;
  return out;
}

std::string describe(const Verdict& v, const GroundSet& ground) {
  std::string out = v.check + ": " + status_name(v.status);
  if (v.status == Status::Fail) out += " (" + v.clause + ")";
  else out += " (" + v.certificate + ")";
  out += ", effort " + std::to_string(v.effort) + "\n";
  const Json j = verdict_to_json(v, ground);
  if (j.contains("witness")) out += "  witness: " + j.at("witness").dump() + "\n";
  return out;
}

}  // namespace poslab
