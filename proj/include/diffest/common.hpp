#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diffest {

// Error taxonomy, mirrored by the CLI exit codes:
//   config_error -> 2, data_error -> 3, io_error -> 4.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Random-number pipeline identifier. Bump the version whenever the seed
// mixing, the engine, or the normal sampler changes; output files record it
// so archived results can be traced to the generator that produced them.
inline constexpr const char* kGeneratorId = "splitmix64-mt19937_64-icdf";
inline constexpr int kGeneratorVersion = 1;

std::string generator_tag();  // "splitmix64-mt19937_64-icdf@1"

}  // namespace diffest
