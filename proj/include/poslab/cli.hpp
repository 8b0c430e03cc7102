#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace poslab {

// Runs one CLI invocation; `args` excludes the program name. Returns the exit
// code: 0 pass (certified or sampled), 1 FAIL, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::vector<std::string> reproduce_names();

constexpr std::uint64_t kDefaultSeed = 1;

}  // namespace poslab
