// Randomized and exhaustive invariants. Generators are seeded, so every run
// checks the same cases.

#include "cubeiso/iso.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace cubeiso;

namespace
{
const Rational kLow[] = { Rational( 1, 5 ), Rational( 1, 4 ), Rational( 1, 3 ), Rational( 1, 2 ) };
const Rational kHigh[] = { Rational( 3, 5 ), Rational( 2, 3 ), Rational( 3, 4 ) };
constexpr Real kTol = 1e-9L;
} // namespace

TEST_CASE( "property: restriction splits of measure and influence are exact" )
{
  std::mt19937_64 rng( 101 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    const int n = 2 + trial % 6;
    const auto f = oracle::random_function( n, rng, 0.2 + 0.01 * trial );
    const Rational p = make_rational( 1 + trial % 9, 10 );
    for ( int i = 1; i <= n; ++i )
    {
      const auto s = restriction_stats( f, i, p );
      REQUIRE( s.measure_split_exact() );
      REQUIRE( s.influence_split_exact() );
      REQUIRE( std::fabs( s.identity_residual ) < kTol );
    }
  }
}

TEST_CASE( "property: excess of restrictions and eps_i' are nonnegative for p <= 1/2" )
{
  std::mt19937_64 rng( 103 );
  for ( int trial = 0; trial < 80; ++trial )
  {
    const int n = 2 + trial % 5;
    const auto f = oracle::random_function( n, rng, 0.15 + 0.008 * trial );
    const auto& p = kLow[trial % 4];
    for ( int i = 1; i <= n; ++i )
    {
      const auto s = restriction_stats( f, i, p );
      REQUIRE( s.eps_minus >= -kTol );
      REQUIRE( s.eps_plus >= -kTol );
      REQUIRE( s.eps_i_prime >= -kTol );
    }
  }
}

TEST_CASE( "property: weak biased inequality on random functions" )
{
  std::mt19937_64 rng( 107 );
  for ( int trial = 0; trial < 200; ++trial )
  {
    const int n = 1 + trial % 9;
    const auto f = oracle::random_function( n, rng, 0.05 + 0.0045 * trial );
    for ( const auto& p : kLow )
      REQUIRE( weak_biased_check( f, p ).epsilon >= -kTol );
    const auto g = oracle::random_monotone( n, rng );
    for ( const auto& p : kHigh )
    {
      const auto r = weak_biased_check( g, p );
      REQUIRE_FALSE( r.advisory );
      REQUIRE( r.epsilon >= -kTol );
    }
  }
}

TEST_CASE( "property: complement and dual transform measure and influence" )
{
  std::mt19937_64 rng( 109 );
  for ( int trial = 0; trial < 40; ++trial )
  {
    const int n = 1 + trial % 8;
    const auto f = oracle::random_function( n, rng );
    for ( const auto& p : kLow )
    {
      const auto c = complement( f );
      REQUIRE( mu( c, p ) == 1 - mu( f, p ) );
      REQUIRE( total_influence( c, p ) == total_influence( f, p ) );
      const auto d = dual( f );
      REQUIRE( mu( d, p ) == 1 - mu( f, 1 - p ) );
      REQUIRE( total_influence( d, p ) == total_influence( f, 1 - p ) );
      REQUIRE( dual( d ) == f );
    }
  }
}

TEST_CASE( "property: uniform influence counts boundary edges" )
{
  std::mt19937_64 rng( 113 );
  for ( int trial = 0; trial < 40; ++trial )
  {
    const int n = 1 + trial % 10;
    const auto f = oracle::random_function( n, rng );
    Rational expected( static_cast<unsigned long>( oracle::edge_count( f ) ), 1ul );
    expected /= Rational( std::uint64_t{ 1 } << ( n - 1 ) );
    REQUIRE( total_influence( f, Rational( 1, 2 ) ) == expected );
  }
}

TEST_CASE( "property: Margulis-Russo on random monotone functions" )
{
  std::mt19937_64 rng( 127 );
  for ( int trial = 0; trial < 40; ++trial )
  {
    const auto f = oracle::random_monotone( 3 + trial % 6, rng );
    REQUIRE( margulis_russo_residual( f ).is_zero() );
  }
}

TEST_CASE( "property: full edge-isoperimetric inequality on 10^5 random families at n = 4" )
{
  std::mt19937_64 rng( 131 );
  std::uniform_int_distribution<std::uint64_t> word( 0, 0xffff );
  for ( int trial = 0; trial < 100000; ++trial )
  {
    const auto f = BooleanFunction::from_word( 4, word( rng ) );
    REQUIRE( full_iso_check( f ).ok );
  }
  // and exhaustively at n = 3
  for ( std::uint64_t w = 0; w < 256; ++w )
  {
    const auto f = BooleanFunction::from_word( 3, w );
    const auto r = full_iso_check( f );
    REQUIRE( r.ok );
    REQUIRE( r.boundary == oracle::edge_count( f ) );
    REQUIRE( r.lex_boundary == brute_force_min_boundary( 3, f.count() ) );
  }
}

TEST_CASE( "property: equality cases at p = 1/3 are exactly constants and monotone subcubes" )
{
  const Rational p( 1, 3 );
  for ( int n = 1; n <= 3; ++n )
  {
    std::vector<BooleanFunction> expected = { BooleanFunction::zeros( n ) };
    for ( const auto& c : enumerate_subcubes( n, true ) )
      expected.push_back( subcube_indicator( c ) );
    for ( std::uint64_t w = 0; w < ( std::uint64_t{ 1 } << ( 1u << n ) ); ++w )
    {
      const auto f = BooleanFunction::from_word( n, w );
      const bool zero_excess = std::fabs( weak_biased_check( f, p ).epsilon ) < kTol;
      const bool listed = std::find( expected.begin(), expected.end(), f ) != expected.end();
      CAPTURE( f.to_bits() );
      REQUIRE( zero_excess == listed );
    }
  }
}

TEST_CASE( "property: monotone full inequality on random monotone functions" )
{
  std::mt19937_64 rng( 137 );
  const Rational biases[] = { Rational( 1, 5 ), Rational( 1, 3 ), Rational( 1, 2 ), Rational( 2, 3 ), Rational( 4, 5 ) };
  for ( int trial = 0; trial < 60; ++trial )
  {
    const auto f = oracle::random_monotone( 4 + trial % 4, rng );
    for ( const auto& p : biases )
    {
      const auto r = monotone_full_check( f, p );
      REQUIRE( r.ok );
      if ( r.lambda && r.residual == 0 )
        REQUIRE( r.tail == 0 );
    }
  }
}

TEST_CASE( "property: monotonization preserves size and reaches a monotone function" )
{
  std::mt19937_64 rng( 139 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    const int n = 2 + trial % 6;
    const auto f = oracle::random_function( n, rng );
    const auto g = monotonize( f );
    REQUIRE( g.count() == f.count() );
    REQUIRE( is_monotone( g ) );
    REQUIRE( boundary_size( g ) <= boundary_size( f ) );
    // a single pass M_1 ... M_n already gives a monotone function
    auto once = f;
    for ( int i = n; i >= 1; --i )
      once = monotonize_step( once, i );
    REQUIRE( is_monotone( once ) );
  }
}
