#include "dumont/bijections.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

#include "dumont/dumont_gen.hpp"

namespace dumont {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

void require_avoids(const Permutation& p, const char* pattern, const char* what) {
  require(avoids(p, Permutation::parse(pattern)), what);
}

Permutation to_perm(std::list<int> values) {
  return Permutation(std::vector<int>(values.begin(), values.end()));
}

}  // namespace

Permutation f1(const Permutation& p) {
  require(is_dumont(p, DumontKind::first), "input is not a Dumont permutation of the first kind");
  require_avoids(p, "132", "input does not avoid 132");
  std::vector<int> w;
  for (int v : p.word())
    if (v % 2 == 1) w.push_back((v + 1) / 2);
  return Permutation(std::move(w));
}

Permutation f1_inverse(const Permutation& sigma) {
  require_avoids(sigma, "132", "input does not avoid 132");
  const int n = sigma.size();
  std::list<int> seq;
  for (int v : sigma.word()) seq.push_back(2 * v - 1);
  for (int i = 1; i <= n; ++i) {
    const int odd = 2 * sigma(i) - 1;
    auto at = std::find(seq.begin(), seq.end(), odd);
    if (i < n && odd > 2 * sigma(i + 1) - 1) {
      seq.insert(std::next(at), odd + 1);
    } else {
      // after the rightmost larger element left of it, or at the front
      auto ins = seq.begin();
      for (auto it = seq.begin(); it != at; ++it)
        if (*it > odd) ins = std::next(it);
      seq.insert(ins, odd + 1);
    }
  }
  return to_perm(std::move(seq));
}

Permutation f2(const Permutation& p) {
  require(is_dumont(p, DumontKind::first), "input is not a Dumont permutation of the first kind");
  require_avoids(p, "231", "input does not avoid 231");
  std::vector<int> w;
  for (int v : p.word())
    if (v % 2 == 0) w.push_back(v / 2);
  return Permutation(std::move(w));
}

Permutation f2_inverse(const Permutation& sigma) {
  require_avoids(sigma, "231", "input does not avoid 231");
  const int n = sigma.size();
  std::list<int> seq;
  for (int v : sigma.word()) seq.push_back(2 * v);
  for (int i = 1; i <= n; ++i) {
    auto at = std::find(seq.begin(), seq.end(), 2 * i);
    auto ins = seq.end();
    for (auto it = std::next(at); it != seq.end(); ++it) {
      if (*it > 2 * i) {
        ins = it;
        break;
      }
    }
    seq.insert(ins, 2 * i - 1);
  }
  return to_perm(std::move(seq));
}

DyckPath phi_krat(const Permutation& sigma) {
  require_avoids(sigma, "132", "input does not avoid 132");
  const int n = sigma.size();
  std::string steps;
  int prev = n;
  for (int j = 1; j <= n; ++j) {
    int c = std::min({prev, n - j, sigma.position_of(j) - 1});
    steps.append(prev - c, 'U');
    steps.push_back('D');
    prev = c;
  }
  return unchecked_path(std::move(steps));
}

Permutation phi_krat_inverse(const DyckPath& path) {
  const int n = path.semilength();
  std::vector<int> word(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  int ups = 0, j = 0;
  for (int i = 1; i <= path.length(); ++i) {
    if (path.step(i) == 'U') {
      ++ups;
      continue;
    }
    ++j;
    int col = (n - ups) + 1;
    while (used[col]) ++col;
    used[col] = true;
    word[col] = j;
  }
  return Permutation(std::vector<int>(word.begin() + 1, word.end()));
}

DyckPath phi_R(const Permutation& sigma) {
  require_avoids(sigma, "231", "input does not avoid 231");
  return phi_krat(reverse(sigma));
}

Permutation phi_R_inverse(const DyckPath& path) {
  return reverse(phi_krat_inverse(path));
}

DyckPath psi_eli(const Permutation& sigma) {
  require_avoids(sigma, "321", "input does not avoid 321");
  const int n = sigma.size();
  std::string steps;
  int r = 0;
  for (int i = 1; i <= n; ++i) {
    int next = std::max({r, sigma(i), i});
    steps.append(next - r, 'U');
    steps.push_back('D');
    r = next;
  }
  return unchecked_path(std::move(steps));
}

Permutation psi_eli_inverse(const DyckPath& path) {
  const int n = path.semilength();
  std::vector<int> word(n + 1, 0);
  std::vector<bool> taken(n + 1, false);
  // positions with a strict running-maximum jump carry that maximum; the
  // remaining positions are filled with the unused values in increasing order
  int r = 0, i = 0, k = 1;
  while (k <= path.length()) {
    int run = 0;
    while (k <= path.length() && path.step(k) == 'U') {
      ++run;
      ++k;
    }
    ++i;
    ++k;  // consume the D
    if (run > 0) {
      r += run;
      word[i] = r;
      taken[r] = true;
    }
  }
  int next_free = 1;
  for (int pos = 1; pos <= n; ++pos) {
    if (word[pos] != 0) continue;
    while (taken[next_free]) ++next_free;
    word[pos] = next_free;
    taken[next_free] = true;
  }
  return Permutation(std::vector<int>(word.begin() + 1, word.end()));
}

DyckPath d2_321_to_dyck(const Permutation& p) {
  require(is_dumont(p, DumontKind::second), "input is not a Dumont permutation of the second kind");
  require_avoids(p, "321", "input does not avoid 321");
  return g2_inverse(psi_eli(p));
}

Permutation d2_321_to_dyck_inverse(const DyckPath& path) {
  return psi_eli_inverse(g2(path));
}

Permutation phi_even(const Permutation& p) {
  require(is_dumont(p, DumontKind::second), "input is not a Dumont permutation of the second kind");
  require_avoids(p, "3142", "input does not avoid 3142");
  std::vector<int> w;
  for (int v : p.word())
    if (v % 2 == 0) w.push_back(v / 2);
  return Permutation(std::move(w));
}

Permutation phi_even_inverse(const Permutation& sigma) {
  require(is_E(sigma), "input is not in the block-grammar class");
  const int n = sigma.size();
  std::list<int> seq;
  for (int v : sigma.word()) seq.push_back(2 * v);
  for (int i = 1; i <= n; ++i) {
    auto at = std::find(seq.begin(), seq.end(), 2 * sigma(i));
    if (sigma(i) < i)
      seq.insert(at, 2 * i - 1);
    else
      seq.insert(std::next(at), 2 * i - 1);
  }
  return to_perm(std::move(seq));
}

NoncrossingPartition psi_nc(const Permutation& p) {
  Permutation sigma = phi_even(p);  // validates the domain
  std::vector<std::vector<int>> blocks;
  for (const Cycle& c : cycle_decomposition(sigma)) blocks.push_back(c);
  return NoncrossingPartition(sigma.size(), std::move(blocks));
}

namespace {

void require_board_pair(const BoardPair& bp) {
  require(bp.upper.size() == bp.n && bp.lower.size() == bp.n,
          "board sizes disagree with n");
  require(is_upper_board(bp.upper), "upper board violates shape or avoidance");
  require(is_lower_board(bp.lower), "lower board violates shape or avoidance");
}

}  // namespace

BoardPair split_boards(const Permutation& p) {
  require(is_dumont(p, DumontKind::second), "input is not a Dumont permutation of the second kind");
  require_avoids(p, "2143", "input does not avoid 2143");
  const int n = p.size() / 2;
  std::vector<int> up, lo;
  for (int i = 1; i <= p.size(); ++i) {
    if (i % 2 == 1)
      up.push_back(p(i) - n);
    else
      lo.push_back(p(i));
  }
  BoardPair bp{Permutation(std::move(up)), Permutation(std::move(lo)), n};
  require_board_pair(bp);
  return bp;
}

Permutation merge_boards(const BoardPair& bp) {
  require_board_pair(bp);
  std::vector<int> w;
  w.reserve(2 * bp.n);
  for (int i = 1; i <= bp.n; ++i) {
    w.push_back(bp.upper(i) + bp.n);
    w.push_back(bp.lower(i));
  }
  return Permutation(std::move(w));
}

NorthwestPath lower_board_to_path(const Permutation& lower) {
  require(is_lower_board(lower), "input is not a lower board");
  const int n = lower.size();
  std::vector<int> c(n + 2, 0);
  for (int j = n; j >= 1; --j)
    c[j] = std::max({c[j + 1], lower.position_of(j), n - j / 2});
  std::string steps;
  int x = n;
  for (int j = 1; j <= n; ++j) {
    steps.append(x - c[j], 'W');
    x = c[j];
    steps.push_back('N');
  }
  steps.append(x - (n + 1) / 2, 'W');
  return NorthwestPath{n, std::move(steps)};
}

Permutation path_to_lower_board(const NorthwestPath& path) {
  require(is_valid_nw(path), "input is not a valid northwest path");
  const int n = path.n;
  std::vector<int> c(n + 1, 0);
  int x = n, j = 0;
  for (char s : path.steps) {
    if (s == 'W')
      --x;
    else
      c[++j] = x;
  }
  std::vector<int> word(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  for (int v = n; v >= 1; --v) {
    int col = c[v];
    while (used[col]) --col;
    used[col] = true;
    word[col] = v;
  }
  return Permutation(std::vector<int>(word.begin() + 1, word.end()));
}

}  // namespace dumont
