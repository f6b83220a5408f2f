#include "cubeiso/iso.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cubeiso
{

FullIsoResult full_iso_check( const BooleanFunction& f )
{
  FullIsoResult r;
  r.boundary = boundary_size( f );
  r.lex_boundary = boundary_size( lex_family( f.dimension(), f.count() ) );
  r.ok = r.boundary >= r.lex_boundary;
  return r;
}

std::uint64_t brute_force_min_boundary( int n, std::uint64_t m )
{
  if ( n < 1 || n > kBruteForceMaxDimension )
  {
    throw std::invalid_argument( "brute_force_min_boundary: n must lie in [1, 4]" );
  }
  const std::uint64_t points = std::uint64_t{ 1 } << n;
  if ( m > points )
  {
    throw std::out_of_range( "brute_force_min_boundary: m exceeds 2^n" );
  }
  if ( m == 0 || m == points )
  {
    return 0;
  }
  const std::uint64_t limit = std::uint64_t{ 1 } << points;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  // Gosper's hack walks the m-subsets of the 2^n points in increasing order.
  for ( std::uint64_t set = ( std::uint64_t{ 1 } << m ) - 1; set < limit; )
  {
    std::uint64_t edges = 0;
    for ( std::uint64_t x = 0; x < points; ++x )
    {
      if ( !( ( set >> x ) & 1u ) )
        continue;
      for ( int i = 0; i < n; ++i )
      {
        const std::uint64_t y = x ^ ( std::uint64_t{ 1 } << i );
        if ( !( ( set >> y ) & 1u ) )
          ++edges;
      }
    }
    best = std::min( best, edges );
    const std::uint64_t low = set & ( ~set + 1 );
    const std::uint64_t ripple = set + low;
    set = ( ( ( ripple ^ set ) >> 2 ) / low ) | ripple;
  }
  return best;
}

MonotoneFullResult monotone_full_check( const BooleanFunction& f, const Rational& p, int depth )
{
  require_open_unit( p );
  if ( !is_monotone( f ) )
  {
    throw std::invalid_argument( "monotone_full_check needs a monotone function" );
  }
  MonotoneFullResult r;
  r.lhs = total_influence( f, p );
  const Rational m = mu( f, p );
  if ( m == 0 || m == 1 )
  {
    r.ok = true;
    return r;
  }
  auto solution = lambda_from_measure( m, p, depth );
  const auto limit = limit_lex_influence( solution.expansion, p );
  r.rhs = limit.value;
  r.tail = limit.tail_bound;
  r.ok = r.lhs >= r.rhs - r.tail;
  r.lambda = std::move( solution.expansion );
  r.residual = std::move( solution.residual );
  return r;
}

CheckOutcome lex_measure_domination_check( const BooleanFunction& f, const BinaryExpansion& b, const Rational& p,
                                           const Rational& q )
{
  require_open_unit( p );
  require_open_unit( q, "q" );
  if ( !( q < p ) )
  {
    throw std::invalid_argument( "lex_measure_domination_check needs q < p" );
  }
  if ( !is_monotone( f ) || mu( f, p ) > limit_lex_measure( b, p ).value )
  {
    return CheckOutcome::HypothesisNotMet;
  }
  return mu( f, q ) <= limit_lex_measure( b, q ).value ? CheckOutcome::Holds : CheckOutcome::Fails;
}

BooleanFunction monotonize_step( const BooleanFunction& f, int i )
{
  const auto up = f.flipped( i );
  // Points with x_i = 0 are exactly where the antidictatorship is 1.
  const auto moved = f & antidictatorship( f.dimension(), i ) & ~up;
  return ( f & ~moved ) | moved.flipped( i );
}

BooleanFunction monotonize( const BooleanFunction& f )
{
  BooleanFunction current = f;
  for ( ;; )
  {
    BooleanFunction next = current;
    for ( int i = f.dimension(); i >= 1; --i )
    {
      next = monotonize_step( next, i );
    }
    if ( next == current )
      return current;
    current = std::move( next );
  }
}

} // namespace cubeiso
