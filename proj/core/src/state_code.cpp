#include "hanoi/state_code.hpp"

#include <stdexcept>

namespace hanoi {

StateCode encode_state(const Configuration& c) {
  if (c.disk_count() > kMaxCodedDisks)
    throw std::invalid_argument("encode_state: more than 32 disks");
  StateCode code = 0;
  for (PegId p = 1; p <= kPegCount; ++p) {
    const StateCode peg_bits = static_cast<StateCode>(p - 1);
    for (Disk d : c.peg(p))
      code |= peg_bits << (2 * (d - 1));
  }
  return code;
}

Configuration decode_state(int n, StateCode code) {
  if (n < 0 || n > kMaxCodedDisks)
    throw std::invalid_argument("decode_state: disk count out of range");
  Configuration c;
  // Largest first, so each stack comes out bottom-to-top.
  for (Disk d = n; d >= 1; --d) {
    const int p = static_cast<int>((code >> (2 * (d - 1))) & 3u);
    c.pegs[p].push_back(d);
  }
  return c;
}

}  // namespace hanoi
