#include "cubeiso/iso.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace cubeiso;

TEST_CASE( "weak biased check: dictatorship is an equality case" )
{
  const auto r = weak_biased_check( dictatorship( 3, 1 ), Rational( 1, 3 ) );
  CHECK( r.mu == Rational( 1, 3 ) );
  CHECK( r.total_influence == 1 );
  CHECK( std::fabs( r.epsilon ) < 1e-15L );
  CHECK( std::fabs( r.lhs - r.rhs ) < 1e-15L );
  CHECK_FALSE( r.advisory );
}

TEST_CASE( "weak biased check: antidictatorship has positive slack" )
{
  const Rational p( 1, 3 );
  const auto r = weak_biased_check( antidictatorship( 2, 1 ), p );
  // p I = 1/3 against (2/3) log_{1/3}(2/3)
  const Real rhs_log = ( 2.0L / 3 ) * std::log( 2.0L / 3 ) / std::log( 1.0L / 3 );
  CHECK( rhs_log == doctest::Approx( 0.24602 ).epsilon( 1e-4 ) );
  CHECK( r.epsilon > 0 );
  CHECK( std::fabs( r.epsilon - ( ( 1.0L / 3 ) - rhs_log ) / ( 2.0L / 3 ) ) < 1e-15L );
  CHECK( weak_biased_check( antidictatorship( 2, 1 ), Rational( 2, 3 ) ).advisory );
}

TEST_CASE( "weak biased check: constants" )
{
  const auto zero = weak_biased_check( BooleanFunction::zeros( 3 ), Rational( 1, 4 ) );
  CHECK( zero.epsilon == 0 );
  CHECK( zero.rhs == 0 );
  const auto one = weak_biased_check( BooleanFunction::ones( 3 ), Rational( 1, 4 ) );
  CHECK( std::fabs( one.epsilon ) < 1e-15L );
}

TEST_CASE( "family A at (t, s, p) = (2, 3, 1/4): epsilon is 3/16" )
{
  const Rational p( 1, 4 );
  const auto a = family_A( 5, 2, 3 );
  const auto r = weak_biased_check( a, p );
  CHECK( r.mu == Rational( 1, 16 ) );
  CHECK( r.total_influence == Rational( 35, 64 ) );
  CHECK( p * r.total_influence == Rational( 35, 256 ) );
  CHECK( std::fabs( r.epsilon - 0.1875L ) < 1e-15L );
  CHECK( family_A_epsilon( 3, p ) == Rational( 3, 16 ) );
}

TEST_CASE( "restriction stats on the worked examples" )
{
  const Rational p( 1, 3 );
  const auto d = dictatorship( 3, 1 );
  const auto s2 = restriction_stats( d, 2, p );
  CHECK( s2.mu_minus == s2.mu );
  CHECK( s2.mu_plus == s2.mu );
  CHECK( s2.inf_i == 0 );
  CHECK( std::fabs( s2.eps_i_prime ) < 1e-15L );

  const auto s1 = restriction_stats( d, 1, p );
  CHECK( s1.mu_minus == 0 );
  CHECK( s1.mu_plus == 1 );
  CHECK( s1.inf_i == 1 );
  CHECK( std::fabs( s1.eps_i_prime ) < 1e-15L );

  const auto m = restriction_stats( majority( 3 ), 1, Rational( 1, 2 ) );
  CHECK( m.mu_minus == Rational( 1, 4 ) );
  CHECK( m.mu_plus == Rational( 3, 4 ) );
  CHECK( m.inf_i == Rational( 1, 2 ) );
  CHECK( m.measure_split_exact() );
  CHECK( m.influence_split_exact() );
  CHECK( std::fabs( m.identity_residual ) < 1e-9L );
  CHECK( m.uses_F );  // mu- < mu+ selects the F form
}

TEST_CASE( "coordinate dichotomy on subcubes" )
{
  const Rational p( 1, 3 );
  const auto d = coordinate_dichotomy( dictatorship( 3, 1 ), p, 1 );
  CHECK( d.regime == DichotomyRegime::ModerateBias );
  REQUIRE( d.coordinates.size() == 3 );
  CHECK( d.coordinates[0].classification == DichotomyCase::SmallRestriction );
  CHECK( d.coordinates[1].classification == DichotomyCase::SmallInfluence );
  CHECK( d.coordinates[2].classification == DichotomyCase::SmallInfluence );

  const auto c = coordinate_dichotomy( dictatorship( 4, 1 ) & dictatorship( 4, 2 ), p, 1 );
  CHECK( c.coordinates[0].classification == DichotomyCase::SmallRestriction );
  CHECK( c.coordinates[1].classification == DichotomyCase::SmallRestriction );
  CHECK( c.coordinates[2].classification == DichotomyCase::SmallInfluence );
  CHECK( c.coordinates[3].classification == DichotomyCase::SmallInfluence );
  CHECK( c.required_c2() == 0 );

  CHECK( coordinate_dichotomy( majority( 3 ), Rational( 1, 10 ), 1 ).regime == DichotomyRegime::SmallBias );
  CHECK( coordinate_dichotomy( majority( 3 ), Rational( 2, 3 ), 1 ).regime == DichotomyRegime::Monotone );
  const auto none = coordinate_dichotomy( antidictatorship( 3, 1 ), Rational( 2, 3 ), 1 );
  CHECK( none.regime == DichotomyRegime::None );
  CHECK( none.coordinates.empty() );
}

TEST_CASE( "nearest subcube: worked examples and tie-breaking" )
{
  const auto d = nearest_subcube( dictatorship( 3, 1 ), Rational( 1, 3 ) );
  CHECK( d.delta_exact == 0 );
  CHECK( d.best_subcube.to_string() == "1**" );
  CHECK( d.unique );

  // A(1,2) on 3 coordinates is {100, 110, 111, 011} (x1 x2 x3)
  const auto a = family_A( 3, 1, 2 );
  CHECK( a.to_bits() == "01010011" );
  const auto r = nearest_subcube( a, Rational( 1, 2 ) );
  CHECK( r.distance == Rational( 1, 4 ) );
  CHECK( r.delta_exact == Rational( 1, 2 ) );
  // 1** and *1* are both at distance 1/4; the pattern order picks 1**
  CHECK( r.best_subcube.to_string() == "1**" );
  CHECK_FALSE( r.unique );

  const auto a5 = nearest_subcube( family_A( 5, 2, 3 ), Rational( 1, 4 ) );
  CHECK( a5.delta_exact == Rational( 3, 32 ) );
  CHECK( a5.best_subcube.to_string() == "11***" );

  CHECK_THROWS_AS( nearest_subcube( BooleanFunction::zeros( 3 ), Rational( 1, 2 ) ), std::domain_error );
}

TEST_CASE( "nearest subcube agrees with an independent exhaustive oracle" )
{
  const Rational p( 1, 3 );
  for ( std::uint64_t w = 1; w < 256; ++w )
  {
    const auto f = BooleanFunction::from_word( 3, w );
    Rational best = 2;
    for ( const auto& c : enumerate_subcubes( 3 ) )
      best = std::min( best, oracle::mu( f ^ subcube_indicator( c ), p ) );
    const auto r = nearest_subcube( f, p );
    REQUIRE( r.distance == best );
    REQUIRE( r.delta_exact == best / oracle::mu( f, p ) );
  }
}

TEST_CASE( "stability ratio" )
{
  const Rational p( 1, 4 );
  const auto sub = stability_ratio( dictatorship( 4, 2 ) & dictatorship( 4, 3 ), p );
  CHECK( sub.ratio == 0 );
  CHECK( sub.applicable );

  const auto a = stability_ratio( family_A( 5, 2, 3 ), p );
  const Real eps_prime = 0.1875L * std::log( 4.0L );
  CHECK( std::fabs( a.epsilon_prime - eps_prime ) < 1e-15L );
  CHECK( std::fabs( a.ratio - ( 3.0L / 32 ) * std::log( 1 / eps_prime ) / eps_prime ) < 1e-15L );
  CHECK( a.ratio == doctest::Approx( 0.48595 ).epsilon( 1e-4 ) );
  // normalized lower bound ln(1/eps') / (2 ln(2/eps'))
  CHECK( a.ratio >= std::log( 1 / eps_prime ) / ( 2 * std::log( 2 / eps_prime ) ) );

  const auto empty = stability_ratio( BooleanFunction::zeros( 3 ), p );
  CHECK_FALSE( empty.applicable );
}

TEST_CASE( "full edge-isoperimetric check and brute-force minimum" )
{
  const auto x3 = dictatorship( 3, 3 );
  const auto r = full_iso_check( x3 );
  CHECK( r.boundary == 4 );
  CHECK( r.lex_boundary == 4 );
  CHECK( r.ok );

  const auto pair = BooleanFunction::from_bits( 2, "1001" );
  const auto q = full_iso_check( pair );
  CHECK( q.boundary == 4 );
  CHECK( q.lex_boundary == 2 );
  CHECK( q.ok );

  CHECK( brute_force_min_boundary( 3, 3 ) == 5 );
  CHECK( brute_force_min_boundary( 3, 4 ) == 4 );
  CHECK( brute_force_min_boundary( 2, 0 ) == 0 );
  CHECK( brute_force_min_boundary( 4, 16 ) == 0 );
  CHECK_THROWS_AS( brute_force_min_boundary( 5, 3 ), std::invalid_argument );
  for ( int n = 1; n <= 4; ++n )
    for ( std::uint64_t m = 0; m <= ( std::uint64_t{ 1 } << n ); ++m )
      REQUIRE( brute_force_min_boundary( n, m ) == oracle::edge_count( oracle::lex_family( n, m ) ) );
}

TEST_CASE( "monotone full check on the worked examples" )
{
  for ( const Rational& p : { Rational( 1, 3 ), Rational( 1, 2 ), Rational( 2, 3 ) } )
  {
    const auto u = dictatorship( 4, 1 ) | dictatorship( 4, 2 );
    const auto r = monotone_full_check( u, p );
    REQUIRE( r.lambda.has_value() );
    CHECK( r.lambda->digits() == std::vector<int>{ 1, 2 } );
    CHECK( r.residual == 0 );
    CHECK( r.lhs == 2 * ( 1 - p ) );
    CHECK( r.lhs == r.rhs );
    CHECK( r.ok );
  }
  const auto m = monotone_full_check( majority( 3 ), Rational( 1, 2 ) );
  CHECK( m.lhs == Rational( 3, 2 ) );
  CHECK( m.rhs == 1 );
  CHECK( m.ok );
  CHECK( monotone_full_check( BooleanFunction::ones( 3 ), Rational( 1, 2 ) ).ok );
  CHECK_THROWS_AS( monotone_full_check( antidictatorship( 3, 1 ), Rational( 1, 2 ) ), std::invalid_argument );
}

TEST_CASE( "lex measure domination" )
{
  const Rational p( 1, 2 ), q( 1, 3 );
  const auto b = BinaryExpansion::parse( "1,3" );
  CHECK( lex_measure_domination_check( realize( b, 4 ), b, p, q ) == CheckOutcome::Holds );
  const auto and12 = dictatorship( 3, 1 ) & dictatorship( 3, 2 );
  CHECK( lex_measure_domination_check( and12, BinaryExpansion::parse( "2" ), p, q ) == CheckOutcome::Holds );
  CHECK( mu( and12, q ) == limit_lex_measure( BinaryExpansion::parse( "2" ), q ).value );
  CHECK( lex_measure_domination_check( majority( 3 ), BinaryExpansion::parse( "2" ), p, q ) ==
         CheckOutcome::HypothesisNotMet );
  CHECK_THROWS_AS( lex_measure_domination_check( and12, b, q, p ), std::invalid_argument );

  // exhaustive n = 3 over digit sets within depth 4
  std::size_t met = 0;
  for ( const auto& f : enumerate_monotone( 3 ) )
  {
    for ( std::uint64_t s = 1; s < 16; ++s )
    {
      const auto lam = BinaryExpansion::from_dyadic( Rational( s, 16 ) );
      for ( const Rational& low : { Rational( 1, 4 ), Rational( 1, 3 ) } )
      {
        const auto outcome = lex_measure_domination_check( f, lam, p, low );
        REQUIRE( outcome != CheckOutcome::Fails );
        met += outcome == CheckOutcome::Holds;
      }
    }
  }
  CHECK( met > 0 );
}

TEST_CASE( "monotonization" )
{
  // {00, 01} -> {10, 11} on n = 2 (x1 x2)
  const auto a = antidictatorship( 2, 1 );
  CHECK( monotonize_step( a, 1 ) == dictatorship( 2, 1 ) );
  CHECK( monotonize( a ) == dictatorship( 2, 1 ) );
  CHECK( monotonize( majority( 3 ) ) == majority( 3 ) );
  for ( std::uint64_t w = 0; w < 256; ++w )
  {
    const auto f = BooleanFunction::from_word( 3, w );
    const auto g = monotonize( f );
    REQUIRE( g.count() == f.count() );
    REQUIRE( is_monotone( g ) );
    REQUIRE( total_influence( g, Rational( 1, 2 ) ) <= total_influence( f, Rational( 1, 2 ) ) );
    for ( int i = 1; i <= 3; ++i )
    {
      const auto h = monotonize_step( f, i );
      REQUIRE( h.count() == f.count() );
      for ( int j = 1; j <= 3; ++j )
        REQUIRE( influence( h, j, Rational( 1, 2 ) ) <= influence( f, j, Rational( 1, 2 ) ) );
    }
  }
}

TEST_CASE( "sharpness families against their closed forms" )
{
  CHECK_THROWS_AS( family_A( 4, 2, 3 ), std::invalid_argument );
  CHECK_THROWS_AS( family_B( 5, 2, 1 ), std::invalid_argument );

  const Rational biases[] = { Rational( 1, 4 ), Rational( 1, 3 ), Rational( 1, 2 ), Rational( 2, 3 ) };
  for ( auto [t, s] : { std::pair{ 1, 2 }, std::pair{ 2, 2 }, std::pair{ 2, 3 }, std::pair{ 1, 4 }, std::pair{ 3, 2 } } )
  {
    for ( int n = t + s; n <= t + s + 1; ++n )
    {
      for ( const auto& p : biases )
      {
        const auto a = family_A( n, t, s );
        const auto fa = family_A_formulas( n, t, s, p );
        REQUIRE( oracle::mu( a, p ) == fa.mu );
        REQUIRE( oracle::total_influence( a, p ) == fa.total_influence );
        const auto b = family_B( n, t, s );
        const auto fb = family_B_formulas( n, t, s, p );
        REQUIRE( oracle::mu( b, p ) == fb.mu );
        REQUIRE( oracle::total_influence( b, p ) == fb.total_influence );
        for ( int i = 1; i <= n; ++i )
        {
          REQUIRE( oracle::influence( a, i, p ) == fa.influences[i - 1] );
          REQUIRE( oracle::influence( b, i, p ) == fb.influences[i - 1] );
        }
      }
    }
  }
  CHECK( mu( family_B( 3, 1, 2 ), Rational( 1, 2 ) ) == Rational( 5, 8 ) );
  CHECK( is_monotone( family_B( 5, 2, 3 ) ) );
  CHECK_FALSE( is_monotone( family_A( 5, 2, 3 ) ) );
}
