#include "cohstab/klattice.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cohstab {

std::ostream& operator<<(std::ostream& os, const ClassVector& v) {
  return os << '(' << v.r << ',' << v.d << ',' << v.n << ')';
}

std::ostream& operator<<(std::ostream& os, const QuotientClass& q) {
  return os << '(' << q.a << ',' << q.c << ')';
}

Genus::Genus(int g) : g_(g) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1, got " + std::to_string(g));
}

EulerMatrix euler_matrix(Genus genus) {
  const std::int64_t g = genus.value();
  return {{{1 - g, 1, 0}, {-1, 0, 0}, {g - 1, -1, 1}}};
}

std::int64_t euler_pairing(const ClassVector& v1, const ClassVector& v2, Genus g) {
  const EulerMatrix m = euler_matrix(g);
  const std::array<std::int64_t, 3> a{v1.r, v1.d, v1.n};
  const std::array<std::int64_t, 3> b{v2.r, v2.d, v2.n};
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) sum += a[i] * m[i][j] * b[j];
  }
  return sum;
}

std::int64_t content(const ClassVector& v) {
  return std::gcd(std::gcd(v.r, v.d), v.n);
}

ClassVector primitive(const ClassVector& v) {
  const std::int64_t k = content(v);
  if (k == 0) return v;
  return {v.r / k, v.d / k, v.n / k};
}

bool proportional(const ClassVector& a, const ClassVector& b) {
  return a.d * b.n - a.n * b.d == 0 && a.n * b.r - a.r * b.n == 0 && a.r * b.d - a.d * b.r == 0;
}

}  // namespace cohstab
