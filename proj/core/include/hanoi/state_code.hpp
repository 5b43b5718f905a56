#pragma once

#include <cstdint>

#include "hanoi/config.hpp"

namespace hanoi {

// Packed position: two bits per disk, disk d in bits [2(d-1), 2d), holding
// the zero-based peg index.  Stack order is not stored -- it is implied,
// since larger disks always sit below smaller ones on the same peg.
using StateCode = std::uint64_t;

// 32 disks x 2 bits fill the code exactly.
inline constexpr int kMaxCodedDisks = 32;

// Pre: c is valid and holds at most kMaxCodedDisks disks.
// Throws std::invalid_argument when the disk count does not fit.
StateCode encode_state(const Configuration& c);

// Inverse of encode_state for an n-disk code.
Configuration decode_state(int n, StateCode code);

}  // namespace hanoi
