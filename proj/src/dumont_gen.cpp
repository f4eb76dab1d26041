#include "dumont/dumont_gen.hpp"

#include <algorithm>
#include <stdexcept>

namespace dumont {

DumontKind parse_kind(std::string_view text) {
  if (text == "d1" || text == "first" || text == "1") return DumontKind::first;
  if (text == "d2" || text == "second" || text == "2") return DumontKind::second;
  throw std::invalid_argument("unknown Dumont kind: " + std::string(text));
}

bool is_dumont(const Permutation& p, DumontKind kind) {
  const int n = p.size();
  if (n % 2 != 0) return false;
  if (kind == DumontKind::first) {
    for (int i = 1; i <= n; ++i) {
      if (p(i) % 2 == 0) {
        if (i == n || p(i) < p(i + 1)) return false;
      } else {
        if (i < n && p(i) > p(i + 1)) return false;
      }
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      if (i % 2 == 0 && p(i) >= i) return false;
      if (i % 2 == 1 && p(i) < i) return false;
    }
  }
  return true;
}

namespace {

struct Backtracker {
  DumontKind kind;
  int len;  // 2n
  const std::vector<Permutation>& avoid;
  const std::function<bool(const Permutation&)>& yield;
  std::vector<int> prefix;
  std::vector<bool> used;
  bool stopped = false;

  bool value_ok(int pos, int v) const {
    if (kind == DumontKind::second) {
      if (pos % 2 == 0) return v < pos;
      return v >= pos;
    }
    // First kind: the parity condition on position pos-1 becomes checkable
    // once position pos is placed; the last entry must be odd.
    if (pos > 1) {
      int prev = prefix[pos - 2];
      if (prev % 2 == 0 && prev < v) return false;
      if (prev % 2 == 1 && prev > v) return false;
    }
    if (pos == len && v % 2 == 0) return false;
    return true;
  }

  void run(int pos) {
    if (stopped) return;
    if (pos > len) {
      if (!yield(Permutation(prefix))) stopped = true;
      return;
    }
    for (int v = 1; v <= len && !stopped; ++v) {
      if (used[v] || !value_ok(pos, v)) continue;
      prefix.push_back(v);
      used[v] = true;
      if (sequence_avoids_all(prefix, avoid, /*anchor_last=*/true)) run(pos + 1);
      used[v] = false;
      prefix.pop_back();
    }
  }
};

}  // namespace

void generate(DumontKind kind, int n, const std::vector<Permutation>& avoid,
              const std::function<bool(const Permutation&)>& yield) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  Backtracker bt{kind, 2 * n, avoid, yield, {}, std::vector<bool>(2 * n + 1, false)};
  bt.prefix.reserve(2 * n);
  bt.run(1);
}

std::vector<Permutation> generate_all(DumontKind kind, int n,
                                      const std::vector<Permutation>& avoid) {
  std::vector<Permutation> out;
  generate(kind, n, avoid, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Int count(DumontKind kind, int n, const std::vector<Permutation>& avoid) {
  Int c = 0;
  generate(kind, n, avoid, [&](const Permutation&) {
    ++c;
    return true;
  });
  return c;
}

namespace {

// Seidel boustrophedon triangle: even rows accumulate right-to-left and keep
// the previous length, odd rows accumulate left-to-right and grow by one.
// G_{2n+2} is the last entry of row 2n+1; H_n is the first entry of row 2n.
std::vector<Int> seidel_row(int target_row) {
  std::vector<Int> row{1};
  for (int r = 2; r <= target_row; ++r) {
    std::vector<Int> next;
    if (r % 2 == 0) {
      next.assign(row.size(), 0);
      Int acc = 0;
      for (int k = static_cast<int>(row.size()) - 1; k >= 0; --k) {
        acc += row[k];
        next[k] = acc;
      }
    } else {
      next.assign(row.size() + 1, 0);
      Int acc = 0;
      for (size_t k = 0; k < next.size(); ++k) {
        if (k < row.size()) acc += row[k];
        next[k] = acc;
      }
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

Int genocchi(int m) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("genocchi requires even m >= 2");
  if (m == 2) return 1;
  return seidel_row(m - 1).back();
}

Int median_genocchi(int n) {
  if (n < 1) throw std::invalid_argument("median_genocchi requires n >= 1");
  return seidel_row(2 * n).front();
}

int stat_value(const StatRecord& s, const std::string& name) {
  if (name == "fix") return s.fix;
  if (name == "fix_minus1") return s.fix_minus1;
  if (name == "exc") return s.exc;
  if (name == "def") return s.def;
  if (name == "lis") return s.lis;
  if (name == "lds") return s.lds;
  if (name == "rlm") return s.rlm;
  if (name == "two_cycles") return s.two_cycles;
  throw std::invalid_argument("unknown statistic: " + name);
}

std::map<std::vector<int>, Int> distribution(DumontKind kind, int n,
                                             const std::vector<Permutation>& avoid,
                                             const std::vector<std::string>& stats) {
  for (const auto& s : stats) stat_value(StatRecord{}, s);  // validate names
  std::map<std::vector<int>, Int> table;
  generate(kind, n, avoid, [&](const Permutation& p) {
    StatRecord rec = statistics(p);
    std::vector<int> key;
    key.reserve(stats.size());
    for (const auto& s : stats) key.push_back(stat_value(rec, s));
    ++table[key];
    return true;
  });
  return table;
}

}  // namespace dumont
