#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dumont/permutation.hpp"
#include "dumont/qt_poly.hpp"
#include "dumont/types.hpp"

namespace dumont {

// Power series truncated at x^order with exact coefficient arithmetic.
// Binary operations truncate to the smaller operand order.
template <typename C>
class Series {
 public:
  explicit Series(int order) : c_(order + 1) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
  }

  static Series constant(const C& v, int order) {
    Series s(order);
    s.c_[0] = v;
    return s;
  }

  static Series x(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = C(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const C& operator[](int k) const { return c_.at(k); }
  C& at(int k) { return c_.at(k); }

  Series operator+(const Series& o) const {
    Series r(std::min(order(), o.order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
  }

  Series operator-(const Series& o) const {
    Series r(std::min(order(), o.order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
  }

  Series operator*(const Series& o) const {
    Series r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (c_[i] == C(0)) continue;
      for (int j = 0; i + j <= r.order(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
  }

  Series scaled(const C& v) const {
    Series r = *this;
    for (auto& coeff : r.c_) coeff = coeff * v;
    return r;
  }

  // 1/this; the constant term must be exactly 1.
  Series inverted() const {
    if (!(c_[0] == C(1)))
      throw std::invalid_argument("inversion requires unit constant term");
    Series r(order());
    r.c_[0] = C(1);
    for (int n = 1; n <= order(); ++n) {
      C acc = C(0);
      for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
      r.c_[n] = C(0) - acc;
    }
    return r;
  }

  Series operator/(const Series& o) const { return *this * o.inverted(); }

  // Substitution; the inner series must have zero constant term.
  Series compose(const Series& inner) const {
    if (!(inner.c_[0] == C(0)))
      throw std::invalid_argument("composition requires zero inner constant term");
    const int ord = std::min(order(), inner.order());
    Series r = Series::constant(c_[order()], ord);
    for (int k = order() - 1; k >= 0; --k)
      r = r * inner + Series::constant(c_[k], ord);
    return r;
  }

  // Square root with constant term 1.
  Series sqrt1() const {
    if (!(c_[0] == C(1)))
      throw std::invalid_argument("sqrt requires constant term 1");
    Series r(order());
    r.c_[0] = C(1);
    const C half = C(Rat(1, 2));
    for (int n = 1; n <= order(); ++n) {
      C acc = c_[n];
      for (int k = 1; k < n; ++k) acc = acc - r.c_[k] * r.c_[n - k];
      r.c_[n] = acc * half;
    }
    return r;
  }

  // Division by x^k; the low-order coefficients must vanish. The order drops.
  Series shift_down(int k) const {
    for (int i = 0; i < k; ++i)
      if (!(c_[i] == C(0)))
        throw std::invalid_argument("series is not divisible by x^k");
    Series r(order() - k);
    for (int i = 0; i + k <= order(); ++i) r.c_[i] = c_[i + k];
    return r;
  }

  Series shift_up(int k) const {
    Series r(order());
    for (int i = k; i <= order(); ++i) r.c_[i] = c_[i - k];
    return r;
  }

  Series truncated(int new_order) const {
    Series r(std::min(new_order, order()));
    for (int i = 0; i <= r.order(); ++i) r.c_[i] = c_[i];
    return r;
  }

  bool operator==(const Series&) const = default;

 private:
  std::vector<C> c_;
};

using RatSeries = Series<Rat>;
using QTSeries = Series<QTPoly>;

std::string series_str(const RatSeries& s);
std::string series_str(const QTSeries& s);

RatSeries rational_fn(const std::vector<Rat>& num, const std::vector<Rat>& den,
                      int order);

RatSeries catalan_series(int order);  // (1 - sqrt(1-4x)) / (2x)
RatSeries schroder_s(int order);      // (1 + x - sqrt(1-6x+x^2)) / (2x)
RatSeries ternary_f(int order);       // f = 1 + x f^3

Int a_seq(int n);  // a_{2m} = C(3m,m)/(2m+1), a_{2m+1} = C(3m+1,m+1)/(2m+1)
Int b_seq(int n);  // convolution recurrences with b_0 = 1
Int large_schroder(int n);          // r_0 = 1, r_n = 2 s_{n+1}
Int generalized_catalan_C2(int n);  // sum_{m<n} ((n-m)/n) C(n-1+m,m) 2^m
Int pair_b(int n);                  // 1, 1, 3, then b_n = 3b_{n-1} + 2b_{n-2}
Rat bernoulli(int m);

// a_n * [x^{n+1}] 1/((1 - x f(x^2)) (1 - q x^2 f(x^2)^2)) as a polynomial in q.
QTPoly fix2143_formula(int n);

// L_{-1} = 0, L_0 = 1, L_k = 1 + z L_{k-1} / (1 - z L_{k-2}).
RatSeries L_k_series(int k, int order);

// Chebyshev polynomial of the second kind, in the marker t; negative indices
// via the reversed recurrence (U_{-1} = 0, U_{-2} = -1).
QTPoly chebyshev_U(int r);
double chebyshev_U_eval(int r, double t_value);

// Joint (fixed points, 2-cycles) generating function; computed both by
// fixpoint iteration and by the closed form, which must agree.
QTSeries A_qtx(int order);
QTSeries A_qtx_fixpoint(int order);
QTSeries A_qtx_closed(int order);

bool is_decreasing_decomposable(const Permutation& p);
bool is_increasing_decomposable(const Permutation& p);

// Generating functions for Dumont permutations of the first kind avoiding
// {1342,1423,tau} / {2341,2413,tau} / {1342,2413,tau}; dispatch picks the
// applicable structure theorem or throws "no applicable theorem".
RatSeries A_tau(const Permutation& tau, int order);
RatSeries B_tau(const Permutation& tau, int order);
RatSeries C_tau(const Permutation& tau, int order);

// Closed forms as printed, for cross-checking the recurrences.
RatSeries A_closed_form(const std::string& tau, int order);
RatSeries C_closed_form(const std::string& tau, int order);

// Chebyshev quotient for B over the decreasing pattern (k+2)...21, evaluated
// numerically at 0 < x < 1/8.
double cba_closed_form(int k, double x_value);

double lbb_iteration(double u, double v, double r, int m);
double lbb_closed_form(double u, double v, double r, int m);

}  // namespace dumont
