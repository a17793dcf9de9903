#pragma once

// Numerical K-theory of the category of coherent systems on a curve: the
// lattice Z^3 of classes (rank, degree, dim V), its Euler pairing, and the
// rank-two quotient by the class of the trigonal exceptional objects.

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>

namespace cohstab {

/// Class (r, d, n) = (rank of the sheaf, its degree, dimension of the vector
/// space). Entries are unconstrained integers: shifts negate every entry.
struct ClassVector {
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::int64_t n = 0;

  friend constexpr bool operator==(const ClassVector&, const ClassVector&) = default;
  /// Lexicographic by (r, d, n); the canonical enumeration order.
  friend constexpr auto operator<=>(const ClassVector&, const ClassVector&) = default;

  constexpr ClassVector operator-() const { return {-r, -d, -n}; }
  constexpr ClassVector& operator+=(const ClassVector& o) {
    r += o.r;
    d += o.d;
    n += o.n;
    return *this;
  }
  constexpr ClassVector& operator-=(const ClassVector& o) {
    r -= o.r;
    d -= o.d;
    n -= o.n;
    return *this;
  }
  friend constexpr ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend constexpr ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
  friend constexpr ClassVector operator*(std::int64_t k, const ClassVector& v) {
    return {k * v.r, k * v.d, k * v.n};
  }

  constexpr bool is_zero() const { return r == 0 && d == 0 && n == 0; }
};

std::ostream& operator<<(std::ostream& os, const ClassVector& v);

/// Genus of the curve, g >= 1.
class Genus {
 public:
  /// Throws std::invalid_argument for g < 1.
  explicit Genus(int g);
  int value() const { return g_; }

 private:
  int g_;
};

using EulerMatrix = std::array<std::array<std::int64_t, 3>, 3>;

/// Rows ((1-g, 1, 0), (-1, 0, 0), (g-1, -1, 1)).
EulerMatrix euler_matrix(Genus g);

/// chi(v1, v2) = v1 * M * v2^T.
std::int64_t euler_pairing(const ClassVector& v1, const ClassVector& v2, Genus g);

/// Class of the Brill-Noether exceptional object of a trigonal line bundle on
/// a general genus-4 curve: (1, 3, 2). Generates the kernel of the quotient.
inline constexpr ClassVector kTrigonalClass{1, 3, 2};

/// Element of Z^3 / Z(1,3,2), in the coordinates (a, c) = (d - 3r, n - 2r).
struct QuotientClass {
  std::int64_t a = 0;
  std::int64_t c = 0;

  friend constexpr bool operator==(const QuotientClass&, const QuotientClass&) = default;
  friend constexpr auto operator<=>(const QuotientClass&, const QuotientClass&) = default;
};

std::ostream& operator<<(std::ostream& os, const QuotientClass& q);

/// (r, d, n) -> (d - 3r, n - 2r). Surjective, kernel exactly Z(1,3,2), and the
/// identity on rank-zero classes.
constexpr QuotientClass project_mod_kernel(const ClassVector& v) {
  return {v.d - 3 * v.r, v.n - 2 * v.r};
}

/// True iff v = k(1,3,2) for some integer k (k = 0 included).
constexpr bool is_trigonal_multiple(const ClassVector& v) {
  return v.d == 3 * v.r && v.n == 2 * v.r;
}

/// gcd of the absolute values of the entries; 0 for the zero class.
std::int64_t content(const ClassVector& v);

/// v divided by its content. The zero class is returned unchanged.
ClassVector primitive(const ClassVector& v);

/// True iff the two classes are linearly dependent over Q (cross product
/// vanishes). The zero class is proportional to everything.
bool proportional(const ClassVector& a, const ClassVector& b);

}  // namespace cohstab
