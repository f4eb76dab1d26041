#pragma once

#include "dumont/dyck.hpp"
#include "dumont/objects.hpp"
#include "dumont/permutation.hpp"

namespace dumont {

// All maps validate their domains and throw std::invalid_argument naming the
// violated condition.

// Dumont-of-first-kind(132) <-> S_n(132): keep odd entries, halve (rounded up).
Permutation f1(const Permutation& p);
Permutation f1_inverse(const Permutation& sigma);

// Dumont-of-first-kind(231) <-> S_n(231): keep even entries, halve.
Permutation f2(const Permutation& p);
Permutation f2_inverse(const Permutation& sigma);

// Krattenthaler's bijection S_n(132) <-> D_n (path hugging the antidiagonal
// from the left of the dots).
DyckPath phi_krat(const Permutation& sigma);
Permutation phi_krat_inverse(const DyckPath& path);

// S_n(231) <-> D_n via reversal into S_n(132).
DyckPath phi_R(const Permutation& sigma);
Permutation phi_R_inverse(const DyckPath& path);

// Elizalde's bijection S_n(321) <-> D_n (running-maximum construction).
DyckPath psi_eli(const Permutation& sigma);
Permutation psi_eli_inverse(const DyckPath& path);

// Dumont-of-second-kind(321) of length 2n <-> D_n: g2^{-1} after psi_eli.
DyckPath d2_321_to_dyck(const Permutation& p);
Permutation d2_321_to_dyck_inverse(const DyckPath& path);

// Dumont-of-second-kind(3142) <-> E_n: halve the even-entry subsequence.
Permutation phi_even(const Permutation& p);
Permutation phi_even_inverse(const Permutation& sigma);

// Dumont-of-second-kind(3142) -> noncrossing partitions of [n]: cycle
// supports of phi_even(p).
NoncrossingPartition psi_nc(const Permutation& p);

struct BoardPair {
  Permutation upper;  // avoids 132, sigma(i) >= max(2i-1-n, 1)
  Permutation lower;  // avoids 213, sigma(i) <= min(2i-1, n)
  int n = 0;

  bool operator==(const BoardPair&) const = default;
};

// Dumont-of-second-kind(2143) of length 2n <-> pairs of boards: odd-position
// values minus n (upper) and even-position values (lower).
BoardPair split_boards(const Permutation& p);
Permutation merge_boards(const BoardPair& bp);

// Lower boards in S_n(213) <-> northwest paths (n,0) -> (ceil(n/2), n) on or
// above y = 2n - 2x.
NorthwestPath lower_board_to_path(const Permutation& lower);
Permutation path_to_lower_board(const NorthwestPath& path);

}  // namespace dumont
