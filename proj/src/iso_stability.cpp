#include "cubeiso/iso.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cubeiso
{

SubcubeCatalog::SubcubeCatalog( int n, bool monotone_only )
    : n_( n ), monotone_only_( monotone_only ), subcubes_( enumerate_subcubes( n, monotone_only ) )
{
  indicators_.reserve( subcubes_.size() );
  for ( const auto& c : subcubes_ )
  {
    indicators_.push_back( subcube_indicator( c ) );
  }
}

StabilityRecord nearest_subcube( const BooleanFunction& f, const Rational& p, bool monotone_only )
{
  return nearest_subcube( f, PointWeights( f.dimension(), p ), SubcubeCatalog( f.dimension(), monotone_only ) );
}

StabilityRecord nearest_subcube( const BooleanFunction& f, const PointWeights& weights, const SubcubeCatalog& catalog )
{
  if ( catalog.dimension() != f.dimension() || weights.dimension() != f.dimension() )
  {
    throw std::invalid_argument( "nearest_subcube: dimension mismatch" );
  }
  const Integer mass = weights.evaluate_scaled( weight_profile( f ) );
  if ( mass == 0 )
  {
    throw std::domain_error( "nearest_subcube: mu_p(f) = 0" );
  }

  const auto& cubes = catalog.subcubes();
  const auto& indicators = catalog.indicators();
  std::size_t best = 0;
  Integer best_distance;
  int best_fixed = 0;
  bool unique = true;
  for ( std::size_t k = 0; k < cubes.size(); ++k )
  {
    Integer d = weights.evaluate_scaled( weight_profile( f ^ indicators[k] ) );
    const int fixed = cubes[k].fixed_count();
    if ( k == 0 )
    {
      best_distance = std::move( d );
      best_fixed = fixed;
      continue;
    }
    const int order = ::cmp( d, best_distance );
    if ( order < 0 || ( order == 0 && fixed < best_fixed ) )
    {
      unique = order < 0;
      best = k;
      best_distance = std::move( d );
      best_fixed = fixed;
    }
    else if ( order == 0 )
    {
      unique = false;
    }
  }

  StabilityRecord r;
  r.best_subcube = cubes[best];
  r.distance = Rational( best_distance, weights.denominator() );
  r.distance.canonicalize();
  r.delta_exact = Rational( best_distance, mass );
  r.delta_exact.canonicalize();
  r.delta = to_real( r.delta_exact );
  r.unique = unique;
  return r;
}

namespace
{

StabilityRecord attach_ratio( StabilityRecord r, Real epsilon_prime )
{
  r.epsilon_prime = epsilon_prime;
  if ( r.delta_exact == 0 )
  {
    r.ratio = 0;
  }
  else if ( epsilon_prime > 0 && epsilon_prime < 1 )
  {
    r.ratio = r.delta * std::log( 1 / epsilon_prime ) / epsilon_prime;
  }
  else
  {
    r.ratio = std::numeric_limits<Real>::quiet_NaN();
    r.applicable = false;
  }
  return r;
}

} // namespace

StabilityRecord stability_ratio( const BooleanFunction& f, const Rational& p, bool monotone_only )
{
  return stability_ratio( f, PointWeights( f.dimension(), p ), SubcubeCatalog( f.dimension(), monotone_only ) );
}

StabilityRecord stability_ratio( const BooleanFunction& f, const PointWeights& weights, const SubcubeCatalog& catalog )
{
  const auto deficit = weak_biased_check( f, weights );
  if ( deficit.mu == 0 )
  {
    StabilityRecord r;
    r.applicable = false;
    r.ratio = std::numeric_limits<Real>::quiet_NaN();
    return r;
  }
  return attach_ratio( nearest_subcube( f, weights, catalog ), deficit.epsilon_prime );
}

} // namespace cubeiso
