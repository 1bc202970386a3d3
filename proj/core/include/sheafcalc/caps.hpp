#pragma once

#include <cstddef>

namespace sheafcalc {

/// Guards for every exponential enumeration in the library.
struct Caps {
  std::size_t max_fanin = 16;       // arrows into one object (sieves are subsets of these)
  std::size_t max_enum_arrows = 5;  // total arrows for enumerate_topologies
  std::size_t max_frame = 12;       // frame elements for locale constructions
  std::size_t max_nucleus_frame = 8;
  std::size_t max_assignments = 1u << 22;
};

}  // namespace sheafcalc
