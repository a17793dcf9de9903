#pragma once

// The weak stability condition at (b, w) = (3, 2) and its descent to the
// rank-two lattice Z^3 / Z(1,3,2). Downstairs the lattice has rank two, so no
// support-form check is needed there and none is performed.

#include <string>
#include <vector>

#include "cohstab/charge.hpp"
#include "cohstab/klattice.hpp"

namespace cohstab {

/// (3, 2): the degenerate boundary point of the genus-4 family.
inline const ChargeParams kWeakPoint{Rational(3), Rational(2)};

/// Z_{3,2} through the quotient: (a, c) -> -c + i a.
ChargeValue descended_charge(const QuotientClass& qc);

/// v1 - v2 in Z(1,3,2).
bool s_equivalent(const ClassVector& v1, const ClassVector& v2);

enum class WeakClass { positive, phase1, kernel, violation };

std::string to_string(WeakClass c);

/// Classification of Z_{3,2}(v): Im > 0 positive; Im = 0 with Re < 0 phase1;
/// Z = 0 kernel; anything else cannot be the class of a heart object.
WeakClass weak_classify(const ClassVector& v);

/// Classes of the S-equivalence relation, in order of first appearance. Each
/// class lists its canonical representative first: the member minimizing
/// (|r|, |d|, |n|) lexicographically, ties to the smaller signed vector.
/// The remaining members keep input order; duplicates are kept.
std::vector<std::vector<ClassVector>> sequiv_classes(const std::vector<ClassVector>& vs);

}  // namespace cohstab
