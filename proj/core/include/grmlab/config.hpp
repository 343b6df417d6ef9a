#pragma once

#include <cstddef>
#include <cstdint>

namespace grmlab {

/// Search limits shared by all layers. Every randomized routine seeds its own
/// generator from `seed`, so results depend only on the inputs and the caps.
struct Caps {
  std::uint64_t max_enum_field_power = std::uint64_t{1} << 20;
  std::uint64_t max_hom_enum = std::uint64_t{1} << 16;
  std::size_t max_submodules = 20000;
  std::size_t random_attempts = 64;
  /// 0 selects the default ell + total dimension.
  std::size_t pd_cap = 0;
  std::uint64_t seed = 20240611;
};

}  // namespace grmlab
