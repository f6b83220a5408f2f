#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cubeiso
{

using Integer = mpz_class;
/// Library functions expect canonical values (as produced by parse_rational
/// and GMP arithmetic); construct from a num/den pair via make_rational.
using Rational = mpq_class;

/// Extended precision real (x87 80-bit on x86-64). Every transcendental
/// quantity in the library is carried in this type.
using Real = long double;

/// Default slack for "inequality holds" comparisons on real quantities.
inline constexpr Real kDefaultTolerance = 1e-9L;

/*! \brief Parses an exact rational.

  Accepts "num/den", a plain integer, or a finite decimal such as "0.25".
  Throws std::invalid_argument on anything else (including a zero
  denominator).
*/
Rational parse_rational( std::string_view text );

/// num/den reduced to lowest terms; den must be nonzero.
Rational make_rational( long num, unsigned long den );

/// Always "num/den", also for integers ("2/1").
std::string format_rational( const Rational& q );

Real to_real( const Integer& z );
Real to_real( const Rational& q );

/// Natural logarithm of a positive integer or rational, accurate to the
/// 64-bit mantissa of Real even when numerator and denominator are huge.
Real ln( const Integer& z );
Real ln( const Rational& q );

Rational power( const Rational& base, unsigned exponent );

/// Throws std::domain_error unless 0 < p < 1.
void require_open_unit( const Rational& p, const char* what = "p" );

} // namespace cubeiso
