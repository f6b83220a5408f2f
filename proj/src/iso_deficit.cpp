#include "cubeiso/analysis.hpp"
#include "cubeiso/iso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cubeiso
{

namespace
{

DeficitReport make_deficit( Rational mu_value, Rational inf_value, const Rational& p )
{
  DeficitReport r;
  r.mu = std::move( mu_value );
  r.total_influence = std::move( inf_value );
  const Real ln_inv_p = -ln( p );
  const Rational p_inf = p * r.total_influence;
  r.lhs = to_real( p_inf ) * ln_inv_p;
  if ( r.mu > 0 )
  {
    const Real ln_mu = ln( r.mu );
    r.rhs = -to_real( r.mu ) * ln_mu;
    // log_p mu = ln(1/mu) / ln(1/p)
    r.epsilon = to_real( Rational( p_inf / r.mu ) ) - ( -ln_mu ) / ln_inv_p;
  }
  r.epsilon_prime = r.epsilon * ln_inv_p;
  return r;
}

/// Smallest c with a <= c b (b >= 0).
Real required_constant( Real a, Real b, Real tol )
{
  if ( a <= tol )
    return 0;
  if ( b <= 0 )
    return std::numeric_limits<Real>::infinity();
  return a / b;
}

} // namespace

DeficitReport weak_biased_check( const BooleanFunction& f, const Rational& p )
{
  return weak_biased_check( f, PointWeights( f.dimension(), p ) );
}

DeficitReport weak_biased_check( const BooleanFunction& f, const PointWeights& weights )
{
  const auto& p = weights.bias();
  auto r = make_deficit( weights.evaluate( weight_profile( f ) ), weights.evaluate( boundary_profile( f ) ), p );
  r.advisory = p > Rational( 1, 2 ) && !is_monotone( f );
  return r;
}

Real scaled_excess( const Rational& mu_value, const Rational& total_inf, const Rational& p )
{
  const Real p_inf = to_real( Rational( p * total_inf ) );
  if ( mu_value == 0 )
    return p_inf;
  return p_inf - to_real( mu_value ) * ln( mu_value ) / ln( p );
}

bool RestrictionStats::measure_split_exact() const
{
  return p * mu_plus + ( 1 - p ) * mu_minus == mu;
}

bool RestrictionStats::influence_split_exact() const
{
  return inf_i + p * inf_plus + ( 1 - p ) * inf_minus == total_influence;
}

RestrictionStats restriction_stats( const BooleanFunction& f, int i, const Rational& p )
{
  require_open_unit( p );
  const auto lower = restrict( f, i, false );
  const auto upper = restrict( f, i, true );
  RestrictionStats s;
  s.coordinate = i;
  s.p = p;
  s.mu = cubeiso::mu( f, p );
  s.total_influence = cubeiso::total_influence( f, p );
  s.mu_minus = cubeiso::mu( lower, p );
  s.mu_plus = cubeiso::mu( upper, p );
  s.inf_i = influence( f, i, p );
  s.inf_minus = cubeiso::total_influence( lower, p );
  s.inf_plus = cubeiso::total_influence( upper, p );

  s.epsilon = make_deficit( s.mu, s.total_influence, p ).epsilon;
  s.eps_minus = make_deficit( s.mu_minus, s.inf_minus, p ).epsilon;
  s.eps_plus = make_deficit( s.mu_plus, s.inf_plus, p ).epsilon;

  const Real pr = to_real( p );
  s.eps_i_prime = scaled_excess( s.mu, s.total_influence, p ) - pr * scaled_excess( s.mu_plus, s.inf_plus, p ) -
                  ( 1 - pr ) * scaled_excess( s.mu_minus, s.inf_minus, p );

  s.uses_F = s.mu_minus <= s.mu_plus;
  const auto v = eval_lemma_functions( { to_real( s.mu_plus ), to_real( s.mu_minus ), pr } );
  const Rational gap = abs( s.mu_plus - s.mu_minus );
  const Real closed_form = ( s.uses_F ? v.F : v.H ) - v.G + to_real( Rational( p * ( s.inf_i - gap ) ) );
  s.identity_residual = s.eps_i_prime - closed_form;
  return s;
}

const char* to_string( DichotomyRegime regime )
{
  switch ( regime )
  {
  case DichotomyRegime::ModerateBias:
    return "moderate-bias";
  case DichotomyRegime::SmallBias:
    return "small-bias";
  case DichotomyRegime::Monotone:
    return "monotone";
  case DichotomyRegime::None:
    return "none";
  }
  return "?";
}

const char* to_string( DichotomyCase c )
{
  switch ( c )
  {
  case DichotomyCase::SmallInfluence:
    return "case-1";
  case DichotomyCase::SmallRestriction:
    return "case-2";
  case DichotomyCase::Both:
    return "both";
  case DichotomyCase::Neither:
    return "neither";
  }
  return "?";
}

Real DichotomyReport::required_c2() const
{
  Real worst = 0;
  for ( const auto& c : coordinates )
  {
    worst = std::max( worst, std::min( c.required_case1, c.required_case2 ) );
  }
  return worst;
}

DichotomyReport coordinate_dichotomy( const BooleanFunction& f, const Rational& p, Real c2, Real tol )
{
  require_open_unit( p );
  DichotomyReport report;
  const Real pr = to_real( p );
  const Real ln_inv_p = -ln( p );
  if ( pr <= std::exp( -2.0L ) )
    report.regime = DichotomyRegime::SmallBias;
  else if ( p <= Rational( 1, 2 ) )
    report.regime = DichotomyRegime::ModerateBias;
  else if ( is_monotone( f ) )
    report.regime = DichotomyRegime::Monotone;
  else
    report.regime = DichotomyRegime::None;

  const auto deficit = weak_biased_check( f, p );
  report.epsilon = deficit.epsilon;
  if ( report.regime == DichotomyRegime::None || f.dimension() < 2 )
  {
    return report;
  }
  const Real eps = std::max<Real>( deficit.epsilon, 0 );
  const Real mu_r = to_real( deficit.mu );

  for ( int i = 1; i <= f.dimension(); ++i )
  {
    const auto s = restriction_stats( f, i, p );
    const Real eps_i = std::max<Real>( s.eps_i_prime, 0 );
    const Real inf_i = to_real( s.inf_i );
    const Real mu_minus = to_real( s.mu_minus );
    CoordinateClass c;
    c.coordinate = i;
    if ( report.regime == DichotomyRegime::ModerateBias )
    {
      const Real low = std::min( mu_minus, to_real( s.mu_plus ) );
      // Case (1): I_i <= c eps_i'  and  min(mu-, mu+) >= (1 - c eps) mu
      c.required_case1 = std::max( required_constant( inf_i, eps_i, tol ), required_constant( mu_r - low, eps * mu_r, tol ) );
      // Case (2): min(mu-, mu+) <= c eps_i'  and  I_i >= (1 - c eps) mu
      c.required_case2 = std::max( required_constant( low, eps_i, tol ), required_constant( mu_r - inf_i, eps * mu_r, tol ) );
    }
    else
    {
      const Real scaled_i = eps_i * ln_inv_p;
      const Real scaled = eps * ln_inv_p;
      // Case (1): p I_i <= c eps_i' ln(1/p)  and  mu- >= (1 - c eps ln(1/p)) mu
      c.required_case1 = std::max( required_constant( pr * inf_i, scaled_i, tol ),
                                   required_constant( mu_r - mu_minus, scaled * mu_r, tol ) );
      // Case (2): mu- <= c eps_i' ln(1/p)  and  p I_i >= (1 - c eps ln(1/p)) mu
      c.required_case2 = std::max( required_constant( mu_minus, scaled_i, tol ),
                                   required_constant( mu_r - pr * inf_i, scaled * mu_r, tol ) );
    }
    const bool case1 = c.required_case1 <= c2;
    const bool case2 = c.required_case2 <= c2;
    c.classification = case1 && case2 ? DichotomyCase::Both
                       : case1        ? DichotomyCase::SmallInfluence
                       : case2        ? DichotomyCase::SmallRestriction
                                      : DichotomyCase::Neither;
    report.coordinates.push_back( c );
  }
  return report;
}

} // namespace cubeiso
