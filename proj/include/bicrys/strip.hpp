#pragma once

#include <vector>

namespace bicrys {

// Submatrix [row_lo,row_hi] x [col_lo,col_hi] (1-based, inclusive) whose
// rank x rank minors vanish.
struct Strip {
  int row_lo;
  int row_hi;
  int col_lo;
  int col_hi;
  int rank;
  friend bool operator==(const Strip&, const Strip&) = default;
};

using ContiguousSpec = std::vector<Strip>;

}  // namespace bicrys
