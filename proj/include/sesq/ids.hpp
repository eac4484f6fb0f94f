#pragma once

#include <compare>
#include <cstddef>
#include <functional>

namespace sesq {

// Dense integer handle; the tag keeps objects, morphisms and cells apart.
template <class Tag>
struct Id {
  int value = -1;

  constexpr Id() = default;
  constexpr explicit Id(int v) : value(v) {}

  constexpr bool valid() const { return value >= 0; }
  friend constexpr auto operator<=>(Id, Id) = default;
};

using ObjectId = Id<struct ObjectTag>;
using MorphismId = Id<struct MorphismTag>;
using CellId = Id<struct CellTag>;

}  // namespace sesq

template <class Tag>
struct std::hash<sesq::Id<Tag>> {
  std::size_t operator()(sesq::Id<Tag> id) const noexcept { return std::hash<int>{}(id.value); }
};
