#include "cubeiso/iso.hpp"

#include <stdexcept>

namespace cubeiso
{

namespace
{

void check_family_parameters( int n, int t, int s )
{
  if ( s < 2 || t < 1 || n < t + s || n > kMaxDimension )
  {
    throw std::invalid_argument( "sharpness family needs s >= 2, t >= 1, t + s <= n <= 24" );
  }
}

/// {x_j = 1 for j in [last] minus {zero}, x_zero = 0}; zero = 0 pins nothing to 0.
BooleanFunction cylinder( int n, int last, int zero )
{
  auto c = BooleanFunction::ones( n );
  for ( int j = 1; j <= last; ++j )
  {
    c &= j == zero ? antidictatorship( n, j ) : dictatorship( n, j );
  }
  return c;
}

} // namespace

BooleanFunction family_A( int n, int t, int s )
{
  check_family_parameters( n, t, s );
  const auto head = cylinder( n, t, 0 );
  const auto added = cylinder( n, t + s, t );
  const auto removed = cylinder( n, t + s, t + 1 );
  return ( head | added ) & ~removed;
}

BooleanFunction family_B( int n, int t, int s )
{
  check_family_parameters( n, t, s );
  return cylinder( n, t, 0 ) | cylinder( n, t + s, t );
}

SharpnessFormulas family_A_formulas( int n, int t, int s, const Rational& p )
{
  check_family_parameters( n, t, s );
  require_open_unit( p );
  const Rational q = 1 - p;
  const auto ut = static_cast<unsigned>( t );
  const auto us = static_cast<unsigned>( s );
  const Rational head = power( p, ut - 1 );
  const Rational deep = power( p, ut + us - 2 );
  SharpnessFormulas r;
  r.mu = power( p, ut );
  for ( int i = 1; i <= n; ++i )
  {
    if ( i <= t - 1 )
      r.influences.push_back( head );
    else if ( i == t )
      r.influences.push_back( ( 1 - power( p, us - 1 ) ) * head );
    else if ( i == t + 1 )
      r.influences.push_back( deep );
    else if ( i <= t + s )
      r.influences.push_back( 2 * q * deep );
    else
      r.influences.push_back( 0 );
  }
  r.total_influence = head * ( t + 2 * ( s - 1 ) * q * power( p, us - 1 ) );
  return r;
}

SharpnessFormulas family_B_formulas( int n, int t, int s, const Rational& p )
{
  check_family_parameters( n, t, s );
  require_open_unit( p );
  const Rational q = 1 - p;
  const auto ut = static_cast<unsigned>( t );
  const auto us = static_cast<unsigned>( s );
  const Rational head = power( p, ut - 1 );
  const Rational deep = power( p, ut + us - 2 );
  SharpnessFormulas r;
  r.mu = power( p, ut ) * ( 1 + q * power( p, us - 1 ) );
  for ( int i = 1; i <= n; ++i )
  {
    if ( i <= t - 1 )
      r.influences.push_back( head + q * deep );
    else if ( i == t )
      r.influences.push_back( ( 1 - power( p, us ) ) * head );
    else if ( i <= t + s )
      r.influences.push_back( q * deep );
    else
      r.influences.push_back( 0 );
  }
  r.total_influence = head * ( t + ( ( t + s ) * q - 1 ) * power( p, us - 1 ) );
  return r;
}

Rational family_A_epsilon( int s, const Rational& p )
{
  if ( s < 2 )
  {
    throw std::invalid_argument( "family_A_epsilon needs s >= 2" );
  }
  require_open_unit( p );
  return 2 * ( s - 1 ) * ( 1 - p ) * power( p, static_cast<unsigned>( s - 1 ) );
}

} // namespace cubeiso
