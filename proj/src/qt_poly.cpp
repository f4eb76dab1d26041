#include "dumont/qt_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dumont {

QTPoly::QTPoly(int value) {
  if (value != 0) terms_[{0, 0}] = value;
}

QTPoly::QTPoly(const Rat& value) {
  if (value != 0) terms_[{0, 0}] = value;
}

QTPoly::QTPoly(const Int& value) {
  if (value != 0) terms_[{0, 0}] = Rat(value);
}

QTPoly QTPoly::q() { return monomial(1, 0); }
QTPoly QTPoly::t() { return monomial(0, 1); }

QTPoly QTPoly::monomial(int q_exp, int t_exp, const Rat& coeff) {
  QTPoly p;
  if (coeff != 0) p.terms_[{q_exp, t_exp}] = coeff;
  return p;
}

bool QTPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == std::pair<int, int>{0, 0});
}

Rat QTPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

Rat QTPoly::coeff(int q_exp, int t_exp) const {
  auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? Rat(0) : it->second;
}

void QTPoly::set(int q_exp, int t_exp, Rat value) {
  if (value == 0)
    terms_.erase({q_exp, t_exp});
  else
    terms_[{q_exp, t_exp}] = std::move(value);
}

QTPoly QTPoly::operator-() const {
  QTPoly r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
  for (const auto& [mono, c] : o.terms_) set(mono.first, mono.second, coeff(mono.first, mono.second) + c);
  return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
  for (const auto& [mono, c] : o.terms_) set(mono.first, mono.second, coeff(mono.first, mono.second) - c);
  return *this;
}

QTPoly QTPoly::operator+(const QTPoly& o) const {
  QTPoly r = *this;
  r += o;
  return r;
}

QTPoly QTPoly::operator-(const QTPoly& o) const {
  QTPoly r = *this;
  r -= o;
  return r;
}

QTPoly QTPoly::operator*(const QTPoly& o) const {
  QTPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      r.set(m1.first + m2.first, m1.second + m2.second,
            r.coeff(m1.first + m2.first, m1.second + m2.second) + c1 * c2);
  return r;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) {
  *this = *this * o;
  return *this;
}

QTPoly QTPoly::scaled(const Rat& r) const {
  QTPoly out;
  if (r == 0) return out;
  for (const auto& [mono, c] : terms_) out.terms_[mono] = c * r;
  return out;
}

QTPoly QTPoly::div_monomial(int q_exp, int t_exp, const Rat& coeff) const {
  if (coeff == 0) throw std::invalid_argument("division by zero monomial");
  QTPoly out;
  for (const auto& [mono, c] : terms_) {
    int qe = mono.first - q_exp, te = mono.second - t_exp;
    if (qe < 0 || te < 0)
      throw std::invalid_argument("polynomial is not divisible by monomial");
    out.terms_[{qe, te}] = c / coeff;
  }
  return out;
}

Rat QTPoly::eval(const Rat& q_value, const Rat& t_value) const {
  Rat sum = 0;
  for (const auto& [mono, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < mono.first; ++i) term *= q_value;
    for (int i = 0; i < mono.second; ++i) term *= t_value;
    sum += term;
  }
  return sum;
}

double QTPoly::eval(double q_value, double t_value) const {
  double sum = 0;
  for (const auto& [mono, c] : terms_)
    sum += static_cast<double>(c) * std::pow(q_value, mono.first) *
           std::pow(t_value, mono.second);
  return sum;
}

namespace {

std::string mono_str(int qe, int te) {
  std::string s;
  if (qe > 0) {
    s += 'q';
    if (qe > 1) s += "^" + std::to_string(qe);
  }
  if (te > 0) {
    s += 't';
    if (te > 1) s += "^" + std::to_string(te);
  }
  return s;
}

std::string rat_str(const Rat& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1)
    s += "/" + boost::multiprecision::denominator(r).str();
  return s;
}

}  // namespace

std::string QTPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::string, Rat>> parts;
  for (const auto& [mono, c] : terms_) parts.emplace_back(mono_str(mono.first, mono.second), c);
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.first.empty() != b.first.empty()) return a.first.empty();  // constant first
    return a.first < b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : parts) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty() || mag != 1) out += rat_str(mag);
    out += mono;
  }
  return out;
}

}  // namespace dumont
