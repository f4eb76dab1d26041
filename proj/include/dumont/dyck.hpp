#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace dumont {

// Lattice path of U=(1,1) and D=(1,-1) steps from the x-axis back to the
// x-axis, never dipping below it. Step indices are 1-based.
class DyckPath {
 public:
  DyckPath() = default;

  // Case-insensitive; rejects unbalanced or below-axis input, reporting the
  // shortest bad prefix.
  static DyckPath parse(std::string_view text);

  int semilength() const { return static_cast<int>(steps_.size()) / 2; }
  int length() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }

  char step(int i) const { return steps_[i - 1]; }
  const std::string& steps() const { return steps_; }

  std::string str() const { return steps_; }

  auto operator<=>(const DyckPath&) const = default;

 private:
  explicit DyckPath(std::string steps) : steps_(std::move(steps)) {}
  std::string steps_;

  friend DyckPath unchecked_path(std::string steps);
};

// Internal constructor for paths already known to be valid.
DyckPath unchecked_path(std::string steps);

int height(const DyckPath& p);
int peaks(const DyckPath& p);    // UD factors
int valleys(const DyckPath& p);  // DU factors

// Matched U/D pair together with the level of the horizontal segment joining
// their endpoints.
struct Tunnel {
  int left_index = 0;
  int right_index = 0;
  int level = 0;

  bool operator==(const Tunnel&) const = default;
};

// One tunnel per U step, ordered by left endpoint.
std::vector<Tunnel> tunnels(const DyckPath& p);

// Maximum over peaks of the peak height plus the number of tunnels passing
// strictly below the peak whose left endpoint sits at the bottom of a valley.
// Satisfies lambda_stat(p) == height(g1(p)).
int lambda_stat(const DyckPath& p);

// Doubling map: mark, for each valley, the U that follows it and that U's
// matching D; then U -> U, marked U -> UU, D -> DUD, marked D -> DD.
DyckPath g1(const DyckPath& p);
DyckPath g1_inverse(const DyckPath& p);  // throws if p is not a g1 image

// Doubling map: each D becomes UDD.
DyckPath g2(const DyckPath& p);
DyckPath g2_inverse(const DyckPath& p);  // throws if p is not a g2 image

// All C_n paths of semilength n in lexicographic order (U < D); the consumer
// returns false to stop early.
void enumerate_dyck(int n, const std::function<bool(const DyckPath&)>& yield);
std::vector<DyckPath> all_dyck(int n);

}  // namespace dumont
