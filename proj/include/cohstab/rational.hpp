#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cohstab {

/// Exact rational number. Expression templates are disabled so that `auto`
/// always holds a value, never a lazy expression.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Raised when an operation is called outside its documented regime. Kept
/// distinct from std::invalid_argument so callers can tell "the question was
/// ill-posed" apart from malformed data.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "p/q", "p", or a finite decimal such as "-1.9" / ".25" exactly.
/// Decimal input is converted digit by digit; binary floating point is never
/// involved. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Lossy decimal rendering for plotting output only.
double to_double(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Converts an integral Integer to int64, throwing std::overflow_error when
/// it does not fit.
std::int64_t to_int64(const Integer& z);

/// 2^k as a rational, k may be negative.
Rational pow2(int k);

}  // namespace cohstab
