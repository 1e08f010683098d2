#include "diffest/rng.hpp"

#include "diffest/normal.hpp"

namespace diffest {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : record_{master_seed, stream_id},
      engine_(splitmix64(splitmix64(master_seed) ^ splitmix64(stream_id))) {}

double RngStream::uniform01() {
  // (k + 0.5) / 2^53 with k in [0, 2^53): strictly inside (0, 1), so the
  // inverse cdf never sees an endpoint.
  const std::uint64_t k = engine_() >> 11;
  return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) {
  return a + (b - a) * uniform01();
}

double RngStream::normal() { return normal_quantile(uniform01()); }

}  // namespace diffest
