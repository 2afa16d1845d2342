#include "toric/divisor.hpp"

#include <algorithm>
#include <cassert>

namespace toric {

bool ToricDivisor::is_integral() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& q) { return toric::is_integral(q); });
}

bool ToricDivisor::is_effective() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& q) { return q >= 0; });
}

ToricDivisor& ToricDivisor::operator+=(const ToricDivisor& o) {
  assert(o.size() == size());
  for (std::size_t i = 0; i < size(); ++i) coefficients[i] += o.coefficients[i];
  return *this;
}

ToricDivisor& ToricDivisor::operator-=(const ToricDivisor& o) {
  assert(o.size() == size());
  for (std::size_t i = 0; i < size(); ++i) coefficients[i] -= o.coefficients[i];
  return *this;
}

ToricDivisor& ToricDivisor::operator*=(const Rational& k) {
  for (auto& c : coefficients) c *= k;
  return *this;
}

}  // namespace toric
