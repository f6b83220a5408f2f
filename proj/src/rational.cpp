#include "cubeiso/rational.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cubeiso
{

namespace
{

bool all_digits( std::string_view s )
{
  if ( s.empty() )
  {
    return false;
  }
  for ( char c : s )
  {
    if ( !std::isdigit( static_cast<unsigned char>( c ) ) )
    {
      return false;
    }
  }
  return true;
}

Integer parse_integer( std::string_view s )
{
  bool negative = false;
  if ( !s.empty() && ( s.front() == '-' || s.front() == '+' ) )
  {
    negative = s.front() == '-';
    s.remove_prefix( 1 );
  }
  if ( !all_digits( s ) )
  {
    throw std::invalid_argument( "not an integer: '" + std::string( s ) + "'" );
  }
  Integer z( std::string( s ), 10 );
  return negative ? Integer( -z ) : z;
}

/// Splits |z| into (top, shift) with |z| = top * 2^shift (up to truncation)
/// and top holding at most 64 significant bits.
std::pair<unsigned long, long> top_bits( const Integer& z )
{
  const auto bits = static_cast<long>( mpz_sizeinbase( z.get_mpz_t(), 2 ) );
  if ( bits <= 64 )
  {
    Integer a = abs( z );
    return { a.get_ui(), 0 };
  }
  const long shift = bits - 64;
  Integer top;
  mpz_tdiv_q_2exp( top.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>( shift ) );
  top = abs( top );
  return { top.get_ui(), shift };
}

} // namespace

Rational parse_rational( std::string_view text )
{
  if ( text.empty() )
  {
    throw std::invalid_argument( "empty rational" );
  }
  if ( const auto slash = text.find( '/' ); slash != std::string_view::npos )
  {
    Integer num = parse_integer( text.substr( 0, slash ) );
    auto den_text = text.substr( slash + 1 );
    if ( !all_digits( den_text ) )
    {
      throw std::invalid_argument( "bad denominator in '" + std::string( text ) + "'" );
    }
    Integer den( std::string( den_text ), 10 );
    if ( den == 0 )
    {
      throw std::invalid_argument( "zero denominator in '" + std::string( text ) + "'" );
    }
    Rational q( num, den );
    q.canonicalize();
    return q;
  }
  if ( const auto dot = text.find( '.' ); dot != std::string_view::npos )
  {
    auto whole = text.substr( 0, dot );
    auto frac = text.substr( dot + 1 );
    bool negative = false;
    if ( !whole.empty() && ( whole.front() == '-' || whole.front() == '+' ) )
    {
      negative = whole.front() == '-';
      whole.remove_prefix( 1 );
    }
    if ( !all_digits( whole ) || !all_digits( frac ) )
    {
      throw std::invalid_argument( "malformed decimal '" + std::string( text ) + "'" );
    }
    Integer num( std::string( whole ) + std::string( frac ), 10 );
    Integer den;
    mpz_ui_pow_ui( den.get_mpz_t(), 10, frac.size() );
    Rational q( negative ? Integer( -num ) : num, den );
    q.canonicalize();
    return q;
  }
  return Rational( parse_integer( text ) );
}

Rational make_rational( long num, unsigned long den )
{
  if ( den == 0 )
  {
    throw std::invalid_argument( "zero denominator" );
  }
  Rational q( num, den );
  q.canonicalize();
  return q;
}

std::string format_rational( const Rational& q )
{
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Real to_real( const Integer& z )
{
  const auto [top, shift] = top_bits( z );
  const Real magnitude = std::ldexp( static_cast<Real>( top ), static_cast<int>( shift ) );
  return sgn( z ) < 0 ? -magnitude : magnitude;
}

Real to_real( const Rational& q )
{
  if ( q == 0 )
  {
    return 0;
  }
  const auto [num_top, num_shift] = top_bits( q.get_num() );
  const auto [den_top, den_shift] = top_bits( q.get_den() );
  const Real magnitude = std::ldexp( static_cast<Real>( num_top ) / static_cast<Real>( den_top ),
                                     static_cast<int>( num_shift - den_shift ) );
  return sgn( q ) < 0 ? -magnitude : magnitude;
}

Real ln( const Integer& z )
{
  if ( sgn( z ) <= 0 )
  {
    throw std::domain_error( "logarithm of a non-positive integer" );
  }
  const auto [top, shift] = top_bits( z );
  return std::log( static_cast<Real>( top ) ) + static_cast<Real>( shift ) * std::numbers::ln2_v<Real>;
}

Real ln( const Rational& q )
{
  if ( sgn( q ) <= 0 )
  {
    throw std::domain_error( "logarithm of a non-positive rational" );
  }
  // Close to 1 the difference of two large logarithms cancels badly.
  const Real approx = to_real( q );
  if ( approx > 0.5L && approx < 2.0L )
  {
    return std::log1p( to_real( Rational( q - 1 ) ) );
  }
  return ln( q.get_num() ) - ln( q.get_den() );
}

Rational power( const Rational& base, unsigned exponent )
{
  Rational result;
  mpz_pow_ui( result.get_num_mpz_t(), base.get_num_mpz_t(), exponent );
  mpz_pow_ui( result.get_den_mpz_t(), base.get_den_mpz_t(), exponent );
  result.canonicalize();
  return result;
}

void require_open_unit( const Rational& p, const char* what )
{
  if ( p <= 0 || p >= 1 )
  {
    throw std::domain_error( std::string( what ) + " must lie in (0,1), got " + format_rational( p ) );
  }
}

} // namespace cubeiso
