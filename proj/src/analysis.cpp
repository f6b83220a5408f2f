#include "cubeiso/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cubeiso
{

namespace
{

void check_grid( int grid_size )
{
  if ( grid_size < 2 )
  {
    throw std::invalid_argument( "grid_size must be at least 2" );
  }
}

void check_bias( Real p )
{
  if ( !( p > 0 && p < 1 ) )
  {
    throw std::domain_error( "p must lie in (0,1)" );
  }
}

Real log_base( Real value, Real p )
{
  return std::log( value ) / std::log( p );
}

const Real kInverseESquared = std::exp( -2.0L );

} // namespace

Real x_log_base( Real x, Real p )
{
  return x == 0 ? Real( 0 ) : x * log_base( x, p );
}

LemmaValues eval_lemma_functions( const LemmaPoint& pt )
{
  const auto [x, y, p] = pt;
  const Real common = p * x_log_base( x, p ) + ( 1 - p ) * x_log_base( y, p );
  return { common + p * x - p * y, x_log_base( p * x + ( 1 - p ) * y, p ), common + p * y - p * x };
}

Real eval_K( Real p )
{
  return p - x_log_base( 1 - p, p );
}

Real eval_alpha( Real p )
{
  return -p * std::log( p ) + ( 1 - p ) * std::log1p( -p );
}

Real alpha_third_derivative( Real x )
{
  return 1 / ( x * x ) + 1 / ( ( 1 - x ) * ( 1 - x ) );
}

LemmaPartials eval_partials( const LemmaPoint& pt )
{
  const auto [x, y, p] = pt;
  const Real lnp = std::log( p );
  const Real mix = p * x + ( 1 - p ) * y;
  return { p * log_base( p * x, p ) + p / lnp, p * log_base( mix, p ) + p / lnp,
           ( 1 - p ) * log_base( y, p ) + p + ( 1 - p ) / lnp, ( 1 - p ) * log_base( mix, p ) + ( 1 - p ) / lnp };
}

std::size_t ScanReport::contract_violations() const
{
  return static_cast<std::size_t>( std::count_if( violations.begin(), violations.end(), [this]( const auto& v ) {
    return std::find( advisory_branches.begin(), advisory_branches.end(), v.branch ) == advisory_branches.end();
  } ) );
}

ScanReport scan_lemma21( Real p, int grid_size, Real tol )
{
  check_bias( p );
  check_grid( grid_size );
  ScanReport report;
  if ( p > 0.5L )
    report.advisory_branches.push_back( 2 );
  const Real step = Real( 1 ) / ( grid_size - 1 );
  for ( int a = 0; a < grid_size; ++a )
  {
    for ( int b = 0; b < grid_size; ++b )
    {
      const Real x = a * step, y = b * step;
      const auto v = eval_lemma_functions( { x, y, p } );
      if ( a >= b )
      {
        ++report.points_checked;
        if ( const Real slack = v.F - v.G; slack < -tol )
          report.violations.push_back( { 1, x, y, slack } );
      }
      if ( b >= a )
      {
        ++report.points_checked;
        if ( const Real slack = v.H - v.G; slack < -tol )
          report.violations.push_back( { 2, x, y, slack } );
      }
    }
  }
  return report;
}

ScanReport scan_basic_functions( Real p, int grid_size, Real tol )
{
  check_bias( p );
  check_grid( grid_size );
  ScanReport report;
  const bool branch2 = p <= 0.5L;
  const bool branch3 = p <= kInverseESquared;
  const Real step = Real( 1 ) / ( grid_size - 1 );
  for ( int a = 0; a < grid_size; ++a )
  {
    for ( int b = 0; b < grid_size; ++b )
    {
      const Real x = a * step, y = b * step;
      const auto v = eval_lemma_functions( { x, y, p } );
      const Real mix = p * x + ( 1 - p ) * y;
      if ( a >= b )
      {
        ++report.points_checked;
        // x = y = 0 makes both sides vanish.
        const Real bound = a == b ? Real( 0 ) : p * ( x - y ) * log_base( p * x / mix, p );
        if ( const Real slack = ( v.F - v.G ) - bound; slack < -tol )
          report.violations.push_back( { 1, x, y, slack } );
      }
      if ( b >= a && branch2 )
      {
        ++report.points_checked;
        const Real bound = a == b ? Real( 0 ) : ( 1 - p ) * ( y - x ) * log_base( ( 1 - p ) * y / mix, p );
        if ( const Real slack = ( v.H - v.G ) - bound; slack < -tol )
          report.violations.push_back( { 2, x, y, slack } );
      }
      if ( b >= a && branch3 )
      {
        ++report.points_checked;
        if ( const Real slack = ( v.H - v.G ) - p * ( y - x ) / 2; slack < -tol )
          report.violations.push_back( { 3, x, y, slack } );
      }
    }
  }
  return report;
}

PartialsReport check_partials( Real p, int grid_size )
{
  check_bias( p );
  check_grid( grid_size );
  constexpr Real h = 1e-6L;
  PartialsReport report;
  report.min_dF_minus_dG = std::numeric_limits<Real>::infinity();
  const Real step = Real( 1 ) / ( grid_size + 1 );
  for ( int a = 1; a <= grid_size; ++a )
  {
    for ( int b = 1; b <= grid_size; ++b )
    {
      const Real x = a * step, y = b * step;
      const auto closed = eval_partials( { x, y, p } );
      const auto xp = eval_lemma_functions( { x + h, y, p } );
      const auto xm = eval_lemma_functions( { x - h, y, p } );
      const auto yp = eval_lemma_functions( { x, y + h, p } );
      const auto ym = eval_lemma_functions( { x, y - h, p } );
      const Real errors[] = {
          std::fabs( ( xp.F - xm.F ) / ( 2 * h ) - closed.dF_dx ),
          std::fabs( ( xp.G - xm.G ) / ( 2 * h ) - closed.dG_dx ),
          std::fabs( ( yp.H - ym.H ) / ( 2 * h ) - closed.dH_dy ),
          std::fabs( ( yp.G - ym.G ) / ( 2 * h ) - closed.dG_dy ),
      };
      report.max_error = std::max( report.max_error, *std::max_element( std::begin( errors ), std::end( errors ) ) );
      report.min_dF_minus_dG = std::min( report.min_dF_minus_dG, closed.dF_dx - closed.dG_dx );
      ++report.points_checked;
    }
    if ( const Real t = a * step / 2; !( alpha_third_derivative( t ) > 0 ) )
    {
      report.alpha_third_positive = false;
    }
  }
  return report;
}

KScanReport scan_K_nonnegative( int points, Real tol )
{
  KScanReport report;
  report.min_slack = std::numeric_limits<Real>::infinity();
  for ( int k = 1; k <= points; ++k )
  {
    const Real p = Real( k ) / ( 2 * Real( points ) );
    const Real slack = eval_K( p );
    report.min_slack = std::min( report.min_slack, slack );
    if ( slack < -tol )
      ++report.violations;
    ++report.points_checked;
  }
  return report;
}

KScanReport scan_K_half_p( int points, Real tol )
{
  KScanReport report;
  report.min_slack = std::numeric_limits<Real>::infinity();
  for ( int k = 1; k <= points; ++k )
  {
    const Real p = Real( k ) * kInverseESquared / Real( points );
    const Real slack = eval_K( p ) - p / 2;
    report.min_slack = std::min( report.min_slack, slack );
    if ( slack < -tol )
      ++report.violations;
    ++report.points_checked;
  }
  return report;
}

} // namespace cubeiso
