#include "dumont/dyck.hpp"

#include <cctype>
#include <stdexcept>

namespace dumont {

DyckPath unchecked_path(std::string steps) { return DyckPath(std::move(steps)); }

DyckPath DyckPath::parse(std::string_view text) {
  std::string steps;
  steps.reserve(text.size());
  int level = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (c != 'U' && c != 'D')
      throw std::invalid_argument("not a Dyck path: bad step at prefix index " +
                                  std::to_string(i + 1));
    level += (c == 'U') ? 1 : -1;
    if (level < 0)
      throw std::invalid_argument("not a Dyck path: below axis at prefix index " +
                                  std::to_string(i + 1));
    steps.push_back(c);
  }
  if (level != 0)
    throw std::invalid_argument("not a Dyck path: unbalanced at prefix index " +
                                std::to_string(text.size()));
  return DyckPath(std::move(steps));
}

int height(const DyckPath& p) {
  int level = 0, best = 0;
  for (char c : p.steps()) {
    level += (c == 'U') ? 1 : -1;
    best = std::max(best, level);
  }
  return best;
}

int peaks(const DyckPath& p) {
  int count = 0;
  for (int i = 1; i < p.length(); ++i)
    if (p.step(i) == 'U' && p.step(i + 1) == 'D') ++count;
  return count;
}

int valleys(const DyckPath& p) {
  int count = 0;
  for (int i = 1; i < p.length(); ++i)
    if (p.step(i) == 'D' && p.step(i + 1) == 'U') ++count;
  return count;
}

namespace {

// match[i] = index of the step paired with step i (1-based).
std::vector<int> matching(const DyckPath& p) {
  std::vector<int> match(p.length() + 1, 0);
  std::vector<int> stack;
  for (int i = 1; i <= p.length(); ++i) {
    if (p.step(i) == 'U') {
      stack.push_back(i);
    } else {
      match[i] = stack.back();
      match[stack.back()] = i;
      stack.pop_back();
    }
  }
  return match;
}

}  // namespace

std::vector<Tunnel> tunnels(const DyckPath& p) {
  auto match = matching(p);
  std::vector<Tunnel> out;
  int level = 0;
  for (int i = 1; i <= p.length(); ++i) {
    if (p.step(i) == 'U') out.push_back({i, match[i], level});
    level += (p.step(i) == 'U') ? 1 : -1;
  }
  return out;
}

int lambda_stat(const DyckPath& p) {
  auto tun = tunnels(p);
  int level = 0, best = 0;
  for (int k = 1; k <= p.length(); ++k) {
    level += (p.step(k) == 'U') ? 1 : -1;
    if (p.step(k) != 'U' || k == p.length() || p.step(k + 1) != 'D') continue;
    // peak after step k at height `level`
    int extra = 0;
    for (const Tunnel& t : tun) {
      if (t.left_index <= k && k <= t.right_index - 1 && t.level < level &&
          t.left_index > 1 && p.step(t.left_index - 1) == 'D')
        ++extra;
    }
    best = std::max(best, level + extra);
  }
  return best;
}

DyckPath g1(const DyckPath& p) {
  auto match = matching(p);
  std::vector<bool> marked(p.length() + 1, false);
  for (int i = 2; i <= p.length(); ++i) {
    if (p.step(i) == 'U' && p.step(i - 1) == 'D') {
      marked[i] = true;
      marked[match[i]] = true;
    }
  }
  std::string out;
  out.reserve(4 * p.length());
  for (int i = 1; i <= p.length(); ++i) {
    if (p.step(i) == 'U')
      out += marked[i] ? "UU" : "U";
    else
      out += marked[i] ? "DD" : "DUD";
  }
  return unchecked_path(std::move(out));
}

namespace {

// Recursive grammar for g1 images: C = A uu B dd | u A d u d | empty,
// sending AuuBdd -> g1inv(A) u g1inv(B) d and uAdud -> u g1inv(A) d.
std::string g1_inv_rec(std::string_view c) {
  if (c.empty()) return "";
  const int m = static_cast<int>(c.size());
  auto fail = [&] {
    throw std::invalid_argument("path is not a g1 image");
  };
  if (m < 4) fail();
  if (c[m - 2] == 'D' && c[m - 1] == 'D') {
    // locate the UU opening the final dd
    std::vector<int> match(m, -1);
    std::vector<int> stack;
    for (int i = 0; i < m; ++i) {
      if (c[i] == 'U') {
        stack.push_back(i);
      } else {
        if (stack.empty()) fail();
        match[i] = stack.back();
        stack.pop_back();
      }
    }
    int i = match[m - 1];
    if (i + 1 >= m || c[i] != 'U' || c[i + 1] != 'U' || match[m - 2] != i + 1) fail();
    std::string a = g1_inv_rec(c.substr(0, i));
    std::string b = g1_inv_rec(c.substr(i + 2, m - 2 - (i + 2)));
    return a + "U" + b + "D";
  }
  if (c[m - 2] == 'U' && c[m - 1] == 'D') {
    // prefix must be an elevated path u A d
    std::string_view pre = c.substr(0, m - 2);
    if (pre.size() < 2 || pre.front() != 'U' || pre.back() != 'D') fail();
    int level = 0;
    for (size_t i = 0; i + 1 < pre.size(); ++i) {
      level += (pre[i] == 'U') ? 1 : -1;
      if (level < 1) fail();
    }
    std::string a = g1_inv_rec(pre.substr(1, pre.size() - 2));
    return "U" + a + "D";
  }
  fail();
  return "";
}

}  // namespace

DyckPath g1_inverse(const DyckPath& p) {
  DyckPath result = unchecked_path(g1_inv_rec(p.steps()));
  if (g1(result).steps() != p.steps())
    throw std::invalid_argument("path is not a g1 image");
  return result;
}

DyckPath g2(const DyckPath& p) {
  std::string out;
  out.reserve(2 * p.length());
  for (char c : p.steps()) {
    if (c == 'U')
      out += 'U';
    else
      out += "UDD";
  }
  return unchecked_path(std::move(out));
}

DyckPath g2_inverse(const DyckPath& p) {
  const std::string& s = p.steps();
  std::string out;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == 'U' && i + 2 < s.size() && s[i + 1] == 'D' && s[i + 2] == 'D') {
      out += 'D';
      i += 3;
    } else if (s[i] == 'U') {
      out += 'U';
      ++i;
    } else {
      throw std::invalid_argument("path is not a g2 image");
    }
  }
  DyckPath result = unchecked_path(std::move(out));
  if (g2(result).steps() != s) throw std::invalid_argument("path is not a g2 image");
  return result;
}

namespace {

void enum_rec(std::string& cur, int ups, int downs, int n,
              const std::function<bool(const DyckPath&)>& yield, bool& stopped) {
  if (stopped) return;
  if (static_cast<int>(cur.size()) == 2 * n) {
    if (!yield(unchecked_path(cur))) stopped = true;
    return;
  }
  if (ups < n) {
    cur.push_back('U');
    enum_rec(cur, ups + 1, downs, n, yield, stopped);
    cur.pop_back();
  }
  if (downs < ups && !stopped) {
    cur.push_back('D');
    enum_rec(cur, ups, downs + 1, n, yield, stopped);
    cur.pop_back();
  }
}

}  // namespace

void enumerate_dyck(int n, const std::function<bool(const DyckPath&)>& yield) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::string cur;
  cur.reserve(2 * n);
  bool stopped = false;
  enum_rec(cur, 0, 0, n, yield, stopped);
}

std::vector<DyckPath> all_dyck(int n) {
  std::vector<DyckPath> out;
  enumerate_dyck(n, [&](const DyckPath& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace dumont
