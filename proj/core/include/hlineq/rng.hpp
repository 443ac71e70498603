#pragma once

#include <cstdint>
#include <random>

namespace hlineq {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed splitting rule shared by every randomized routine:
///   child(master, stream) = splitmix64(master ^ splitmix64(stream + 1)).
/// Streams are small integers (start index, sample index, cell index, ...),
/// so children of one master never depend on evaluation order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  return splitmix64(master ^ splitmix64(stream + 1));
}

// Stream tags for the places where one master seed feeds several consumers.
inline constexpr std::uint64_t kStreamNorm = 0x6e6f726dULL;     // "norm"
inline constexpr std::uint64_t kStreamSearch = 0x73726368ULL;   // "srch"
inline constexpr std::uint64_t kStreamSamples = 0x736d706cULL;  // "smpl"

}  // namespace hlineq
