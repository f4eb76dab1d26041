#pragma once

#include <map>
#include <string>
#include <utility>

#include "dumont/types.hpp"

namespace dumont {

// Sparse bivariate polynomial in the formal markers q and t with rational
// coefficients. Zero terms are never stored.
class QTPoly {
 public:
  QTPoly() = default;
  QTPoly(int value);            // NOLINT: implicit by design
  QTPoly(const Rat& value);     // NOLINT
  QTPoly(const Int& value);     // NOLINT

  static QTPoly q();
  static QTPoly t();
  static QTPoly monomial(int q_exp, int t_exp, const Rat& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  Rat coeff(int q_exp, int t_exp) const;
  const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }

  QTPoly operator-() const;
  QTPoly operator+(const QTPoly& o) const;
  QTPoly operator-(const QTPoly& o) const;
  QTPoly operator*(const QTPoly& o) const;
  QTPoly& operator+=(const QTPoly& o);
  QTPoly& operator-=(const QTPoly& o);
  QTPoly& operator*=(const QTPoly& o);

  bool operator==(const QTPoly&) const = default;

  QTPoly scaled(const Rat& r) const;

  // Exact division by coeff * q^a * t^b; throws if any term is not divisible.
  QTPoly div_monomial(int q_exp, int t_exp, const Rat& coeff) const;

  Rat eval(const Rat& q_value, const Rat& t_value) const;
  double eval(double q_value, double t_value) const;

  // Constant term first, then terms by monomial string in lexicographic
  // order: "1 + q", "t", "q + t^2".
  std::string str() const;

 private:
  std::map<std::pair<int, int>, Rat> terms_;
  void set(int q_exp, int t_exp, Rat value);
};

}  // namespace dumont
