#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dumont/permutation.hpp"
#include "dumont/types.hpp"

namespace dumont {

enum class DumontKind { first, second };

DumontKind parse_kind(std::string_view text);  // "d1"/"first", "d2"/"second"

// First kind: every even entry is followed by a descent; every odd entry is
// followed by an ascent or ends the word. Second kind: deficiencies at even
// positions, weak excedances at odd positions. Either way the length is even.
bool is_dumont(const Permutation& p, DumontKind kind);

// Emits the members of D_{2n}(avoid) in lexicographic order. The consumer
// returns false to stop early.
void generate(DumontKind kind, int n, const std::vector<Permutation>& avoid,
              const std::function<bool(const Permutation&)>& yield);

std::vector<Permutation> generate_all(DumontKind kind, int n,
                                      const std::vector<Permutation>& avoid = {});

Int count(DumontKind kind, int n, const std::vector<Permutation>& avoid = {});

// Unsigned Genocchi number G_m (even m >= 2) from the Seidel boustrophedon
// triangle; median Genocchi H_n from the opposite edge of the same triangle.
Int genocchi(int m);
Int median_genocchi(int n);

// Joint frequency table of the named statistics over D_{2n}(avoid).
// Statistic names are the StatRecord fields: fix, fix_minus1, exc, def, lis,
// lds, rlm, two_cycles.
std::map<std::vector<int>, Int> distribution(DumontKind kind, int n,
                                             const std::vector<Permutation>& avoid,
                                             const std::vector<std::string>& stats);

int stat_value(const StatRecord& s, const std::string& name);

}  // namespace dumont
