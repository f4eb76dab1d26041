#include "dumont/series.hpp"

#include <algorithm>
#include <cmath>

namespace dumont {

namespace {

std::string rat_to_str(const Rat& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1)
    s += "/" + boost::multiprecision::denominator(r).str();
  return s;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

RatSeries from_coeffs(const std::vector<Rat>& coeffs, int order) {
  RatSeries s(order);
  for (int i = 0; i <= order && i < static_cast<int>(coeffs.size()); ++i)
    s.at(i) = coeffs[i];
  return s;
}

}  // namespace

std::string series_str(const RatSeries& s) {
  std::string out;
  for (int i = 0; i <= s.order(); ++i) {
    if (i) out += ", ";
    out += rat_to_str(s[i]);
  }
  return out;
}

std::string series_str(const QTSeries& s) {
  std::string out;
  for (int i = 0; i <= s.order(); ++i) {
    if (i) out += ", ";
    out += s[i].str();
  }
  return out;
}

RatSeries rational_fn(const std::vector<Rat>& num, const std::vector<Rat>& den,
                      int order) {
  return from_coeffs(num, order) / from_coeffs(den, order);
}

RatSeries catalan_series(int order) {
  RatSeries inner = RatSeries::constant(1, order + 1) -
                    RatSeries::x(order + 1).scaled(4);
  RatSeries num = RatSeries::constant(1, order + 1) - inner.sqrt1();
  return num.shift_down(1).scaled(Rat(1, 2));
}

RatSeries schroder_s(int order) {
  // the numerator 1 + x - sqrt(1-6x+x^2) starts at 4x, so the quotient that
  // actually produces 1, 1, 3, 11, 45, ... divides by 4x, not 2x
  RatSeries x = RatSeries::x(order + 1);
  RatSeries inner = RatSeries::constant(1, order + 1) - x.scaled(6) + x * x;
  RatSeries num = RatSeries::constant(1, order + 1) + x - inner.sqrt1();
  return num.shift_down(1).scaled(Rat(1, 4));
}

RatSeries ternary_f(int order) {
  RatSeries f = RatSeries::constant(1, order);
  RatSeries x = RatSeries::x(order);
  for (int i = 0; i <= order; ++i)
    f = RatSeries::constant(1, order) + x * f * f * f;
  return f;
}

Int a_seq(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n % 2 == 0) {
    int m = n / 2;
    return binomial(3 * m, m) / (2 * m + 1);
  }
  int m = (n - 1) / 2;
  return binomial(3 * m + 1, m + 1) / (2 * m + 1);
}

Int b_seq(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Int> b(n + 1);
  b[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Int acc = 0;
    if (k % 2 == 0) {
      int m = k / 2;
      for (int i = 0; i <= m - 1; ++i) acc += b[2 * i] * b[2 * m - 2 * i - 1];
    } else {
      int m = (k - 1) / 2;
      for (int i = 0; i <= m; ++i) acc += b[2 * i] * b[2 * m - 2 * i];
    }
    b[k] = acc;
  }
  return b[n];
}

Int large_schroder(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) return 1;
  Rat c = schroder_s(n)[n];
  return 2 * boost::multiprecision::numerator(c);
}

Int generalized_catalan_C2(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Int acc = 0;
  Int pow2 = 1;
  for (int m = 0; m <= n - 1; ++m) {
    acc += Int(n - m) * binomial(n - 1 + m, m) * pow2;
    pow2 *= 2;
  }
  return acc / n;
}

Int pair_b(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0 || n == 1) return 1;
  Int prev2 = 1, prev1 = 3;  // b_1, b_2
  if (n == 2) return 3;
  for (int k = 3; k <= n; ++k) {
    Int cur = 3 * prev1 + 2 * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

Rat bernoulli(int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  std::vector<Rat> b(m + 1);
  b[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Rat acc = 0;
    for (int j = 0; j < k; ++j) acc += Rat(binomial(k + 1, j)) * b[j];
    b[k] = -acc / Rat(k + 1);
  }
  return b[m];
}

QTPoly fix2143_formula(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const int order = n + 1;
  RatSeries f = ternary_f(order);
  QTSeries fx2(order);  // f(x^2)
  for (int k = 0; 2 * k <= order; ++k) fx2.at(2 * k) = QTPoly(f[k]);
  QTSeries one = QTSeries::constant(QTPoly(1), order);
  QTSeries left = (one - fx2.shift_up(1)).inverted();
  QTSeries right =
      (one - (fx2 * fx2).shift_up(2).scaled(QTPoly::q())).inverted();
  return (left * right)[n + 1] * QTPoly(a_seq(n));
}

RatSeries L_k_series(int k, int order) {
  if (k < -1) throw std::invalid_argument("k must be at least -1");
  RatSeries prev2 = RatSeries::constant(0, order);  // L_{-1}
  RatSeries prev1 = RatSeries::constant(1, order);  // L_0
  if (k == -1) return prev2;
  if (k == 0) return prev1;
  RatSeries z = RatSeries::x(order);
  RatSeries one = RatSeries::constant(1, order);
  for (int i = 1; i <= k; ++i) {
    RatSeries cur = one + (z * prev1) / (one - z * prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

QTPoly chebyshev_U(int r) {
  if (r == -1) return QTPoly(0);
  if (r < -1) return QTPoly(0) - chebyshev_U(-r - 2);
  QTPoly prev2(1);  // U_0
  if (r == 0) return prev2;
  QTPoly two_t = QTPoly::t().scaled(2);
  QTPoly prev1 = two_t;  // U_1
  for (int i = 2; i <= r; ++i) {
    QTPoly cur = two_t * prev1 - prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

double chebyshev_U_eval(int r, double t_value) {
  if (r == -1) return 0.0;
  if (r < -1) return -chebyshev_U_eval(-r - 2, t_value);
  double prev2 = 1.0;
  if (r == 0) return prev2;
  double prev1 = 2.0 * t_value;
  for (int i = 2; i <= r; ++i) {
    double cur = 2.0 * t_value * prev1 - prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

QTSeries A_qtx_fixpoint(int order) {
  const QTPoly q = QTPoly::q(), t = QTPoly::t();
  QTSeries one = QTSeries::constant(QTPoly(1), order);
  QTSeries a = one;
  for (int i = 0; i <= order; ++i) {
    QTSeries inv = (one - a.scaled(q).shift_up(1)).inverted();
    QTSeries factor = inv + QTSeries::constant(t - QTPoly(1), order);
    a = one + (factor * a).shift_up(1);
  }
  return a;
}

QTSeries A_qtx_closed(int order) {
  const QTPoly q = QTPoly::q(), t = QTPoly::t();
  const int ord = order + 1;
  QTSeries one = QTSeries::constant(QTPoly(1), ord);
  QTSeries x = QTSeries::x(ord).scaled(QTPoly(1));
  QTPoly qt = q + t;
  // 1 - 2x(q+t) + x^2((q+t)^2 - 4q)
  QTSeries radicand = one - x.scaled(qt.scaled(2)) +
                      (x * x).scaled(qt * qt - q.scaled(4));
  QTSeries num = one + x.scaled(q - t) - radicand.sqrt1();
  QTSeries shifted = num.shift_down(1);  // exact: the constant term cancels
  QTSeries halved(shifted.order());
  for (int k = 0; k <= shifted.order(); ++k)
    halved.at(k) = shifted[k].div_monomial(1, 0, 2);  // divide by 2q
  QTSeries den = QTSeries::constant(QTPoly(1), halved.order()) +
                 QTSeries::x(halved.order()).scaled(QTPoly(1) - t);
  return (halved / den).truncated(order);
}

QTSeries A_qtx(int order) {
  QTSeries fix = A_qtx_fixpoint(order);
  QTSeries closed = A_qtx_closed(order);
  if (!(fix == closed))
    throw std::logic_error("fixpoint and closed-form evaluations disagree");
  return fix;
}

bool is_decreasing_decomposable(const Permutation& p) {
  const int n = p.size();
  int min_prefix = n + 1;
  for (int k = 1; k < n; ++k) {
    min_prefix = std::min(min_prefix, p(k));
    int max_suffix = 0;
    for (int j = k + 1; j <= n; ++j) max_suffix = std::max(max_suffix, p(j));
    if (min_prefix > max_suffix) return true;
  }
  return false;
}

bool is_increasing_decomposable(const Permutation& p) {
  return is_decreasing_decomposable(reverse(complement(p)));
}

namespace {

Permutation subword(const Permutation& p, int from, int to) {
  std::vector<int> w;
  for (int i = from; i <= to; ++i) w.push_back(p(i));
  return Permutation(std::move(w));
}

// (1 + x(1 - g) - sqrt((1 + x(1 - g))^2 - 4x)) / (2x)
RatSeries sqrt_quotient(const RatSeries& g, int order) {
  RatSeries one = RatSeries::constant(1, order + 1);
  RatSeries x = RatSeries::x(order + 1);
  // g only multiplies x, so knowing it to `order` determines the quotient to
  // `order` after the division below; widen it to keep that precision.
  RatSeries wide(order + 1);
  for (int k = 0; k <= std::min(order, g.order()); ++k) wide.at(k) = g[k];
  RatSeries base = one + x * (one - wide);
  RatSeries num = base - (base * base - x.scaled(4)).sqrt1();
  return num.shift_down(1).scaled(Rat(1, 2));
}

}  // namespace

RatSeries A_tau(const Permutation& tau, int order) {
  const int l = tau.size();
  const auto& w = tau.word();
  if (l == 0) throw std::invalid_argument("no applicable theorem");
  if (l == 1 || w == std::vector<int>{2, 1}) return RatSeries::constant(1, order);
  if (w == std::vector<int>{1, 2})
    return RatSeries::constant(1, order) + RatSeries::x(order);
  if (w == std::vector<int>{1, 3, 4, 2} || w == std::vector<int>{1, 4, 2, 3})
    return schroder_s(order);
  RatSeries one = RatSeries::constant(1, order);
  RatSeries x = RatSeries::x(order);
  if (l >= 3 && tau(l - 1) == l - 1 && tau(l) == l) {
    RatSeries inner = A_tau(subword(tau, 1, l - 1), order);
    RatSeries tail = A_tau(subword(tau, 1, l - 2), order);
    return one + (x * inner * inner) / (one - x * tail);
  }
  if (l >= 3 && tau(l - 1) == l && tau(l) == l - 1)
    return sqrt_quotient(A_tau(subword(tau, 1, l - 2), order), order);
  if (!is_decreasing_decomposable(tau) && tau(1) != l && tau(l - 1) != l &&
      tau(l) != l)
    return schroder_s(order);
  if (tau(l) == l) {
    RatSeries inner = A_tau(subword(tau, 1, l - 1), order);
    return one + (x * inner * inner) / (one - x * inner);
  }
  if (tau(1) == l && tau(l) != l - 1) {
    Permutation rest = subword(tau, 2, l);
    if (!is_decreasing_decomposable(rest))
      return (one + x - (x * A_tau(rest, order)).scaled(2)).inverted();
  }
  throw std::invalid_argument("no applicable theorem");
}

RatSeries B_tau(const Permutation& tau, int order) {
  const int l = tau.size();
  const auto& w = tau.word();
  if (l == 0) throw std::invalid_argument("no applicable theorem");
  if (l == 1 || w == std::vector<int>{2, 1}) return RatSeries::constant(1, order);
  if (w == std::vector<int>{1, 2})
    return RatSeries::constant(1, order) + RatSeries::x(order);
  RatSeries one = RatSeries::constant(1, order);
  RatSeries x = RatSeries::x(order);
  if (l >= 3 && tau(1) == l && tau(l) == l - 1)
    return sqrt_quotient(B_tau(subword(tau, 2, l - 1), order), order);
  if (tau(1) == l && tau(l) != l - 1)
    return (one + x - (x * B_tau(subword(tau, 2, l), order)).scaled(2)).inverted();
  throw std::invalid_argument("no applicable theorem");
}

namespace {

bool is_increasing_word(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) != i) return false;
  return true;
}

bool is_decreasing_word(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) != p.size() + 1 - i) return false;
  return true;
}

}  // namespace

RatSeries C_tau(const Permutation& tau, int order) {
  const int l = tau.size();
  RatSeries one = RatSeries::constant(1, order);
  RatSeries x = RatSeries::x(order);
  if (l >= 1 && is_increasing_word(tau)) {
    // C_{12...k}: the index-0 entry is the empty pattern, avoided by nothing
    std::vector<RatSeries> c{RatSeries::constant(0, order), one, one + x};
    for (int k = 3; k <= l; ++k) {
      RatSeries acc = RatSeries::constant(0, order);
      for (int j = 1; j <= k - 1; ++j) acc = acc + (c[j] - c[j - 1]) * c[k - j];
      c.push_back(one + (x * acc) / (one - x * c[k - 2]));
    }
    return c[l];
  }
  if (l >= 1 && is_decreasing_word(tau)) {
    std::vector<RatSeries> c{RatSeries::constant(0, order), one, one};
    for (int k = 3; k <= l; ++k) {
      RatSeries acc = RatSeries::constant(0, order);
      for (int j = 2; j <= k - 1; ++j)
        acc = acc + (c[j] - c[j - 1]) * c[k + 1 - j];
      c.push_back((one + x * acc) / (one - x * c[k - 1]));
    }
    return c[l];
  }
  throw std::invalid_argument("no applicable theorem");
}

RatSeries A_closed_form(const std::string& tau, int order) {
  RatSeries one = RatSeries::constant(1, order);
  RatSeries x = RatSeries::x(order);
  if (tau == "1234")
    return one + rational_fn({0, 0, 0, 0, 0, 4, 4, 1},
                             {1, -3, 2, 1, -1}, order);  // x^5(x+2)^2 / ((1-x)^2(1-x-x^2))
  if (tau == "1243") {
    RatSeries inv = rational_fn({1}, {1, 0, -1}, order);  // 1/(1-x^2)
    RatSeries inner = (x * inv * inv).truncated(order);
    return inv * catalan_series(order).compose(inner);
  }
  if (tau == "1324") {
    RatSeries c = catalan_series(order);
    return one + x * c * c * c;
  }
  if (tau == "1342" || tau == "1423" || tau == "1432") return schroder_s(order);
  if (tau == "2134") return one + rational_fn({0, 1}, {1, -3, 3, -1}, order);
  if (tau == "2143") return catalan_series(order);
  throw std::invalid_argument("no tabulated closed form for " + tau);
}

RatSeries C_closed_form(const std::string& tau, int order) {
  if (tau == "123") return rational_fn({1, 0, 2}, {1, -1}, order);
  // (1-x+x^2+6x^3-x^4) / ((1-x)(1-x-x^2)), the solved form of the increasing
  // recurrence at k = 4
  if (tau == "1234")
    return rational_fn({1, -1, 1, 6, -1}, {1, -2, 0, 1}, order);
  if (tau == "321") return rational_fn({1}, {1, -1}, order);
  if (tau == "4321") return rational_fn({1, -1, 1}, {1, -2}, order);
  throw std::invalid_argument("no tabulated closed form for " + tau);
}

double cba_closed_form(int k, double x_value) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (!(x_value > 0 && x_value < 0.125))
    throw std::invalid_argument("x must lie in (0, 1/8)");
  const double s = std::sqrt(2.0 * x_value);
  const double T = (1.0 + x_value) / (2.0 * s);
  const double num = chebyshev_U_eval(k - 1, T) - s * chebyshev_U_eval(k - 2, T);
  const double den = s * (chebyshev_U_eval(k, T) - s * chebyshev_U_eval(k - 1, T));
  return num / den;
}

double lbb_iteration(double u, double v, double r, int m) {
  double a = r;
  for (int i = 1; i <= m; ++i) a = 1.0 / (u - v * a);
  return a;
}

double lbb_closed_form(double u, double v, double r, int m) {
  const double sv = std::sqrt(v);
  const double T = u / (2.0 * sv);
  const double num = chebyshev_U_eval(m - 1, T) - r * sv * chebyshev_U_eval(m - 2, T);
  const double den = sv * (chebyshev_U_eval(m, T) - r * sv * chebyshev_U_eval(m - 1, T));
  return num / den;
}

}  // namespace dumont
