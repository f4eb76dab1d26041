#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dumont/permutation.hpp"
#include "dumont/types.hpp"

namespace dumont {

// Set partition of [n]. Canonical form: blocks ordered by minimum element,
// elements inside a block descending, rendered as "641/32/5/87".
class NoncrossingPartition {
 public:
  NoncrossingPartition() = default;
  NoncrossingPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  int parts() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  std::string str() const;

  bool operator==(const NoncrossingPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// No a < b < c < d with a,c in one block and b,d in another.
bool is_noncrossing(const NoncrossingPartition& p);

void enumerate_nc(int n,
                  const std::function<bool(const NoncrossingPartition&)>& yield);
std::vector<NoncrossingPartition> all_nc(int n);

// N(n,k) = (1/n) C(n,k) C(n,k+1); requires 0 <= k <= n-1.
Int narayana(int n, int k);

// Block grammar sigma = (k, rc(sigma'), k + sigma'') with sigma' of size k-1
// and sigma'' of size n-k, rc = reverse-complement.
bool is_E(const Permutation& p);
std::vector<Permutation> enumerate_E(int n);

enum class BoardKind { upper, lower };

// Upper boards avoid 132 with sigma(i) >= max(2i-1-n, 1); lower boards avoid
// 213 with sigma(i) <= min(2i-1, n).
bool is_upper_board(const Permutation& p);
bool is_lower_board(const Permutation& p);

void enumerate_boards(int n, BoardKind kind,
                      const std::function<bool(const Permutation&)>& yield);
std::vector<Permutation> all_boards(int n, BoardKind kind);
Int count_boards(int n, BoardKind kind);

// Northeast paths from (0,0) to (n, floor(n/2)) on or below y = x/2.
Int count_ne_paths(int n);

// Path from (n,0) to (ceil(n/2), n) over steps N=(0,1), W=(-1,0), staying on
// or above the line y = 2n - 2x. Text format "n:NWNN...".
struct NorthwestPath {
  int n = 0;
  std::string steps;

  static NorthwestPath parse(std::string_view text);
  std::string str() const;

  bool operator==(const NorthwestPath&) const = default;
};

bool is_valid_nw(const NorthwestPath& p);

}  // namespace dumont
