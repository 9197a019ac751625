#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dct {

// Tensor or layer dimensions do not line up.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Training produced a non-finite loss or gradient.
struct DivergedError : std::runtime_error {
  int layer_index = -1;
  int epoch = -1;
  DivergedError(const std::string& msg, int layer, int ep = -1)
      : std::runtime_error(msg), layer_index(layer), epoch(ep) {}
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t splitmix64(std::uint64_t x);

// Derives an independent stream seed from a master seed and a component tag,
// so adding or removing one RNG consumer never shifts another's stream.
std::uint64_t sub_seed(std::uint64_t master, std::string_view tag);

std::uint64_t fnv1a64(std::string_view text);

// Text form that round-trips an IEEE double exactly.
std::string format_double(double v);

}  // namespace dct
