#ifndef QUANDLEKIT_CAPS_HPP_
#define QUANDLEKIT_CAPS_HPP_

#include <cstddef>

namespace quandlekit {

// Desk-scale limits shared by every search in the library.
struct Caps {
  // Largest quandle handed to the automorphism search and to enumeration.
  std::size_t quandle_order = 8;
  // Largest finite group (also bounds quandle isomorphism tests).
  std::size_t group_order = 200;
  // Largest materialized permutation group.
  std::size_t elements = 1'000'000;
};

}  // namespace quandlekit

#endif  // QUANDLEKIT_CAPS_HPP_
