#pragma once

#include <cstdint>
#include <random>

#include "diffest/common.hpp"

namespace diffest {

/// Seed bookkeeping carried into every artifact produced from a stream.
struct SeedRecord {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// One reproducible substream of the master seed. Identical
/// (master_seed, stream_id) pairs replay bit-for-bit; distinct stream ids
/// land far apart in seed space via double avalanche mixing. Uniforms come
/// from the top 53 engine bits, normals through the pinned inverse-cdf
/// sampler, so the byte stream depends on nothing platform-specific.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  /// Uniform on the open interval (0, 1).
  double uniform01();
  /// Uniform on (a, b).
  double uniform(double a, double b);
  /// Standard normal draw.
  double normal();

  const SeedRecord& seed_record() const { return record_; }

 private:
  SeedRecord record_;
  std::mt19937_64 engine_;
};

}  // namespace diffest
