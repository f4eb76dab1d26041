#include "dumont/objects.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dumont {

NoncrossingPartition::NoncrossingPartition(int n,
                                           std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(n + 1, false);
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end(), std::greater<int>());
    for (int v : b) {
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("blocks do not partition [n]");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("blocks do not partition [n]");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.back() < b.back();  // min element is last (descending)
            });
}

std::string NoncrossingPartition::str() const {
  std::string out;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '/';
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j && n_ > 9) out += ',';  // single digits are written contiguously
      out += std::to_string(blocks_[i][j]);
    }
  }
  return out;
}

bool is_noncrossing(const NoncrossingPartition& p) {
  std::vector<int> block_of(p.n() + 1, 0);
  for (size_t b = 0; b < p.blocks().size(); ++b)
    for (int v : p.blocks()[b]) block_of[v] = static_cast<int>(b);
  const int n = p.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          if (block_of[a] == block_of[c] && block_of[b] == block_of[d] &&
              block_of[a] != block_of[b])
            return false;
  return true;
}

namespace {

void nc_rec(int next, int n, std::vector<std::vector<int>>& blocks,
            const std::function<bool(const NoncrossingPartition&)>& yield,
            bool& stopped) {
  if (stopped) return;
  if (next > n) {
    NoncrossingPartition p(n, blocks);
    if (is_noncrossing(p) && !yield(p)) stopped = true;
    return;
  }
  for (size_t b = 0; b < blocks.size() && !stopped; ++b) {
    blocks[b].push_back(next);
    nc_rec(next + 1, n, blocks, yield, stopped);
    blocks[b].pop_back();
  }
  if (!stopped) {
    blocks.push_back({next});
    nc_rec(next + 1, n, blocks, yield, stopped);
    blocks.pop_back();
  }
}

}  // namespace

void enumerate_nc(int n,
                  const std::function<bool(const NoncrossingPartition&)>& yield) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<std::vector<int>> blocks;
  bool stopped = false;
  if (n == 0) {
    yield(NoncrossingPartition(0, {}));
    return;
  }
  nc_rec(1, n, blocks, yield, stopped);
}

std::vector<NoncrossingPartition> all_nc(int n) {
  std::vector<NoncrossingPartition> out;
  enumerate_nc(n, [&](const NoncrossingPartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

namespace {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

Int narayana(int n, int k) {
  if (n < 1 || k < 0 || k + 1 > n)
    throw std::invalid_argument("narayana requires 1 <= k+1 <= n");
  return binomial(n, k) * binomial(n, k + 1) / n;
}

namespace {

std::vector<int> rc_word(const std::vector<int>& w) {
  const int m = static_cast<int>(w.size());
  std::vector<int> out(m);
  for (int i = 0; i < m; ++i) out[i] = m + 1 - w[m - 1 - i];
  return out;
}

bool is_E_word(const std::vector<int>& w) {
  if (w.empty()) return true;
  const int n = static_cast<int>(w.size());
  const int k = w[0];
  // middle must use values {1..k-1}, tail must use {k+1..n}
  std::vector<int> mid(w.begin() + 1, w.begin() + k);
  for (int v : mid)
    if (v >= k) return false;
  std::vector<int> tail;
  for (int i = k; i < n; ++i) {
    if (w[i] <= k) return false;
    tail.push_back(w[i] - k);
  }
  return is_E_word(rc_word(mid)) && is_E_word(tail);
}

}  // namespace

bool is_E(const Permutation& p) { return is_E_word(p.word()); }

namespace {

std::vector<std::vector<int>> enumerate_E_words(int n) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= n; ++k) {
    auto left = enumerate_E_words(k - 1);
    auto right = enumerate_E_words(n - k);
    for (const auto& lp : left) {
      auto mid = rc_word(lp);
      for (const auto& rp : right) {
        std::vector<int> w;
        w.reserve(n);
        w.push_back(k);
        w.insert(w.end(), mid.begin(), mid.end());
        for (int v : rp) w.push_back(v + k);
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Permutation> enumerate_E(int n) {
  auto words = enumerate_E_words(n);
  std::vector<Permutation> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(std::move(w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool upper_value_ok(int i, int v, int n) { return v >= std::max(2 * i - 1 - n, 1); }
bool lower_value_ok(int i, int v, int n) { return v <= std::min(2 * i - 1, n); }

const Permutation& board_pattern(BoardKind kind) {
  static const Permutation p132 = Permutation::parse("132");
  static const Permutation p213 = Permutation::parse("213");
  return kind == BoardKind::upper ? p132 : p213;
}

}  // namespace

bool is_upper_board(const Permutation& p) {
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    if (!upper_value_ok(i, p(i), n)) return false;
  return avoids(p, board_pattern(BoardKind::upper));
}

bool is_lower_board(const Permutation& p) {
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    if (!lower_value_ok(i, p(i), n)) return false;
  return avoids(p, board_pattern(BoardKind::lower));
}

void enumerate_boards(int n, BoardKind kind,
                      const std::function<bool(const Permutation&)>& yield) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Permutation> avoid{board_pattern(kind)};
  std::vector<int> prefix;
  std::vector<bool> used(n + 1, false);
  bool stopped = false;
  auto rec = [&](auto&& self, int pos) -> void {
    if (stopped) return;
    if (pos > n) {
      if (!yield(Permutation(prefix))) stopped = true;
      return;
    }
    for (int v = 1; v <= n && !stopped; ++v) {
      if (used[v]) continue;
      bool ok = (kind == BoardKind::upper) ? upper_value_ok(pos, v, n)
                                           : lower_value_ok(pos, v, n);
      if (!ok) continue;
      prefix.push_back(v);
      used[v] = true;
      if (sequence_avoids_all(prefix, avoid, /*anchor_last=*/true)) self(self, pos + 1);
      used[v] = false;
      prefix.pop_back();
    }
  };
  rec(rec, 1);
}

std::vector<Permutation> all_boards(int n, BoardKind kind) {
  std::vector<Permutation> out;
  enumerate_boards(n, kind, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Int count_boards(int n, BoardKind kind) {
  Int c = 0;
  enumerate_boards(n, kind, [&](const Permutation&) {
    ++c;
    return true;
  });
  return c;
}

Int count_ne_paths(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const int top = n / 2;
  // f[y] = paths to (x,y); valid points satisfy 2y <= x
  std::vector<Int> f(top + 1, 0);
  f[0] = 1;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= std::min(top, x / 2); ++y) f[y] += f[y - 1];
  return f[top];
}

NorthwestPath NorthwestPath::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("northwest path format is n:steps");
  int n = 0;
  try {
    n = std::stoi(std::string(text.substr(0, colon)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad size in northwest path: " + std::string(text));
  }
  NorthwestPath p{n, std::string(text.substr(colon + 1))};
  for (char& c : p.steps) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (c != 'N' && c != 'W')
      throw std::invalid_argument("northwest path steps must be N or W");
  }
  if (!is_valid_nw(p))
    throw std::invalid_argument("not a valid northwest path: " + std::string(text));
  return p;
}

std::string NorthwestPath::str() const { return std::to_string(n) + ":" + steps; }

bool is_valid_nw(const NorthwestPath& p) {
  int x = p.n, y = 0;
  if (y < 2 * p.n - 2 * x) return false;
  for (char c : p.steps) {
    if (c == 'N')
      ++y;
    else
      --x;
    if (y < 2 * p.n - 2 * x) return false;
  }
  return y == p.n && x == (p.n + 1) / 2;
}

}  // namespace dumont
