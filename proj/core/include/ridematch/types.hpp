#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace ridematch {

/// Simulation time and durations, in whole seconds.
using Seconds = std::int64_t;

template <typename Tag>
struct StrongId {
  std::int64_t value = 0;

  constexpr StrongId() = default;
  constexpr explicit StrongId(std::int64_t v) : value(v) {}

  friend constexpr auto operator<=>(StrongId, StrongId) = default;
};

struct NodeTag;
struct RequestTag;
struct VehicleTag;

using NodeId = StrongId<NodeTag>;
using RequestId = StrongId<RequestTag>;
using VehicleId = StrongId<VehicleTag>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ridematch

template <typename Tag>
struct std::hash<ridematch::StrongId<Tag>> {
  std::size_t operator()(ridematch::StrongId<Tag> id) const noexcept {
    return std::hash<std::int64_t>{}(id.value);
  }
};
