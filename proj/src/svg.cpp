#include "dumont/svg.hpp"

#include <algorithm>

#include "dumont/bijections.hpp"
#include "dumont/objects.hpp"

namespace dumont {

namespace {

constexpr int kUnit = 20;
constexpr int kMargin = 10;

std::string header(int width, int height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\">\n";
}

std::string line(int x1, int y1, int x2, int y2, const char* stroke,
                 int stroke_width) {
  return "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) +
         "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y2) +
         "\" stroke=\"" + stroke + "\" stroke-width=\"" +
         std::to_string(stroke_width) + "\"/>\n";
}

std::string rect(int x, int y, int w, int h, const char* fill) {
  return "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
         "\" width=\"" + std::to_string(w) + "\" height=\"" +
         std::to_string(h) + "\" fill=\"" + fill + "\"/>\n";
}

std::string circle(int cx, int cy, int r, const char* fill) {
  return "<circle cx=\"" + std::to_string(cx) + "\" cy=\"" +
         std::to_string(cy) + "\" r=\"" + std::to_string(r) + "\" fill=\"" +
         fill + "\"/>\n";
}

}  // namespace

std::string svg_dyck(const DyckPath& path) {
  const int len = path.length();
  const int h = std::max(height(path), 1);
  const int width = 2 * kMargin + std::max(len, 1) * kUnit;
  const int hgt = 2 * kMargin + h * kUnit;
  auto px = [&](int x) { return kMargin + x * kUnit; };
  auto py = [&](int y) { return hgt - kMargin - y * kUnit; };

  std::string out = header(width, hgt);
  for (int y = 0; y <= h; ++y)
    out += line(px(0), py(y), px(len), py(y), "#dddddd", 1);
  for (int x = 0; x <= len; ++x)
    out += line(px(x), py(0), px(x), py(h), "#dddddd", 1);
  int x = 0, y = 0;
  for (int i = 1; i <= len; ++i) {
    int ny = y + (path.step(i) == 'U' ? 1 : -1);
    out += line(px(x), py(y), px(x + 1), py(ny), "#000000", 2);
    x += 1;
    y = ny;
  }
  out += "</svg>\n";
  return out;
}

std::string svg_board(const Permutation& p) {
  const int n = std::max(p.size(), 1);
  const int side = 2 * kMargin + n * kUnit;
  // column i from the left, row v from the bottom
  auto px = [&](int col) { return kMargin + (col - 1) * kUnit; };
  auto py = [&](int row) { return side - kMargin - row * kUnit; };

  const bool lower = p.size() > 0 && is_lower_board(p);
  const bool upper = p.size() > 0 && is_upper_board(p);

  std::string out = header(side, side);
  if (lower || upper) {
    for (int i = 1; i <= p.size(); ++i) {
      for (int v = 1; v <= p.size(); ++v) {
        bool allowed = lower ? v <= std::min(2 * i - 1, p.size())
                             : v >= std::max(2 * i - 1 - p.size(), 1);
        if (allowed) out += rect(px(i), py(v), kUnit, kUnit, "#f2e8c9");
      }
    }
  }
  for (int g = 0; g <= n; ++g) {
    out += line(px(1), py(g), px(1) + n * kUnit, py(g), "#999999", 1);
    out += line(px(1 + g), py(0), px(1 + g), py(n), "#999999", 1);
  }
  for (int i = 1; i <= p.size(); ++i)
    out += circle(px(i) + kUnit / 2, py(p(i)) + kUnit / 2, kUnit / 4, "#000000");
  if (lower) {
    NorthwestPath path = lower_board_to_path(p);
    int x = path.n, y = 0;
    for (char s : path.steps) {
      int nx = x, ny = y;
      if (s == 'N')
        ++ny;
      else
        --nx;
      out += line(px(1) + x * kUnit, py(y), px(1) + nx * kUnit, py(ny),
                  "#b03030", 2);
      x = nx;
      y = ny;
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace dumont
