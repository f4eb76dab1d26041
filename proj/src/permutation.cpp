#include "dumont/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dumont {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("word is not a rearrangement of {1..n}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos ||
      text.find(' ') != std::string_view::npos) {
    std::string item;
    std::istringstream in{std::string(text)};
    std::string norm(text);
    std::replace(norm.begin(), norm.end(), ',', ' ');
    std::istringstream in2(norm);
    int v;
    while (in2 >> v) w.push_back(v);
    if (!in2.eof())
      throw std::invalid_argument("malformed permutation text: " + std::string(text));
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("malformed permutation text: " + std::string(text));
      w.push_back(ch - '0');
    }
  }
  return Permutation(std::move(w));
}

int Permutation::position_of(int v) const {
  for (int i = 0; i < size(); ++i)
    if (word_[i] == v) return i + 1;
  throw std::invalid_argument("value not present");
}

std::string Permutation::str() const {
  const int n = size();
  bool compact = std::all_of(word_.begin(), word_.end(), [](int v) { return v <= 9; });
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (!compact && i) out += ',';
    if (compact)
      out += static_cast<char>('0' + word_[i]);
    else
      out += std::to_string(word_[i]);
  }
  return out;
}

Permutation reverse(const Permutation& p) {
  std::vector<int> w(p.word().rbegin(), p.word().rend());
  return Permutation(std::move(w));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n + 1 - p.word()[i];
  return Permutation(std::move(w));
}

Permutation reverse_complement(const Permutation& p) {
  return reverse(complement(p));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[p(i) - 1] = i;
  return Permutation(std::move(w));
}

Permutation apply_symmetry(const Permutation& p, Symmetry op) {
  switch (op) {
    case Symmetry::reverse: return reverse(p);
    case Symmetry::complement: return complement(p);
    case Symmetry::reverse_complement: return reverse_complement(p);
    case Symmetry::inverse: return inverse(p);
  }
  throw std::invalid_argument("unknown symmetry");
}

namespace {

// Depth-first occurrence search. chosen[j] = index in seq of the j-th pattern
// letter; order-isomorphism is maintained pairwise against earlier choices.
bool occurs_from(std::span<const int> seq, const Permutation& pat, int j,
                 int next_index, std::vector<int>& chosen, bool anchor_last) {
  const int k = pat.size();
  if (j == k) return true;
  const int n = static_cast<int>(seq.size());
  const bool last = (j == k - 1);
  int lo = next_index;
  int hi = last && anchor_last ? n - 1 : n - (k - j);
  if (last && anchor_last) lo = std::max(lo, n - 1);
  for (int i = lo; i <= hi; ++i) {
    bool ok = true;
    for (int t = 0; t < j && ok; ++t) {
      bool seq_less = seq[chosen[t]] < seq[i];
      bool pat_less = pat(t + 1) < pat(j + 1);
      if (seq_less != pat_less) ok = false;
    }
    if (!ok) continue;
    chosen[j] = i;
    if (occurs_from(seq, pat, j + 1, i + 1, chosen, anchor_last)) return true;
  }
  return false;
}

}  // namespace

bool sequence_contains(std::span<const int> seq, const Permutation& pattern,
                       bool anchor_last) {
  const int k = pattern.size();
  if (k == 0) return true;
  if (static_cast<int>(seq.size()) < k) return false;
  std::vector<int> chosen(k);
  return occurs_from(seq, pattern, 0, 0, chosen, anchor_last);
}

bool contains(const Permutation& perm, const Permutation& pattern) {
  return sequence_contains(perm.word(), pattern);
}

bool avoids(const Permutation& perm, const Permutation& pattern) {
  return !contains(perm, pattern);
}

bool avoids_all(const Permutation& perm, const std::vector<Permutation>& patterns) {
  return sequence_avoids_all(perm.word(), patterns);
}

bool sequence_avoids_all(std::span<const int> seq,
                         const std::vector<Permutation>& patterns,
                         bool anchor_last) {
  for (const auto& pat : patterns)
    if (sequence_contains(seq, pat, anchor_last)) return false;
  return true;
}

int longest_increasing(std::span<const int> seq) {
  std::vector<int> tails;
  for (int v : seq) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tails.size());
}

int longest_decreasing(std::span<const int> seq) {
  std::vector<int> neg(seq.begin(), seq.end());
  for (int& v : neg) v = -v;
  return longest_increasing(neg);
}

StatRecord statistics(const Permutation& p) {
  StatRecord s;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    int v = p(i);
    if (v == i) ++s.fix;
    if (v == i - 1) ++s.fix_minus1;
    if (v > i) ++s.exc;
    if (v < i) ++s.def;
  }
  s.lis = longest_increasing(p.word());
  s.lds = longest_decreasing(p.word());
  int min_so_far = n + 1;
  for (int i = n; i >= 1; --i) {
    if (p(i) < min_so_far) {
      ++s.rlm;
      min_so_far = p(i);
    }
  }
  for (int i = 1; i <= n; ++i)
    if (p(i) > i && p(p(i)) == i) ++s.two_cycles;
  return s;
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> seen(n + 1, false);
  std::vector<Cycle> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    Cycle c;
    int v = start;
    do {
      seen[v] = true;
      c.push_back(v);
      v = p(v);
    } while (v != start);
    // rotate so the cycle starts at its maximum
    auto mx = std::max_element(c.begin(), c.end());
    std::rotate(c.begin(), mx, c.end());
    cycles.push_back(std::move(c));
  }
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    return *std::min_element(a.begin(), a.end()) <
           *std::min_element(b.begin(), b.end());
  });
  return cycles;
}

std::string cycles_str(const std::vector<Cycle>& cycles) {
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

std::vector<int> even_subsequence(const Permutation& p) {
  std::vector<int> out;
  for (int v : p.word())
    if (v % 2 == 0) out.push_back(v);
  return out;
}

std::vector<int> odd_subsequence(const Permutation& p) {
  std::vector<int> out;
  for (int v : p.word())
    if (v % 2 == 1) out.push_back(v);
  return out;
}

}  // namespace dumont
