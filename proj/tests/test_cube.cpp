#include "cubeiso/cube.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

using namespace cubeiso;

TEST_CASE( "coordinate i is bit i-1 of the index" )
{
  const auto d = dictatorship( 3, 1 );
  CHECK( d.to_bits() == "01010101" );
  CHECK( dictatorship( 3, 3 ).to_bits() == "00001111" );
  CHECK( antidictatorship( 3, 2 ).to_bits() == "11001100" );
  CHECK( majority( 3 ).to_bits() == "00010111" );
  CHECK( d.count() == 4 );
}

TEST_CASE( "construction guards" )
{
  CHECK_THROWS_AS( BooleanFunction::zeros( 0 ), std::invalid_argument );
  CHECK_THROWS_AS( BooleanFunction::zeros( 25 ), std::invalid_argument );
  CHECK_THROWS_AS( BooleanFunction::from_word( 2, 0x1f ), std::invalid_argument );
  CHECK_THROWS_AS( BooleanFunction::from_bits( 2, "010" ), std::invalid_argument );
  CHECK_THROWS_AS( BooleanFunction::from_bits( 2, "01x0" ), std::invalid_argument );
  CHECK_THROWS_AS( dictatorship( 3, 4 ), std::out_of_range );
  CHECK_THROWS_AS( restrict( dictatorship( 1, 1 ), 1, true ), std::invalid_argument );
  CHECK_THROWS( dictatorship( 3, 1 ) & dictatorship( 4, 1 ) );
}

TEST_CASE( "flipped matches pointwise definition across word boundaries" )
{
  std::mt19937_64 rng( 7 );
  for ( int n : { 1, 3, 6, 7, 9 } )
  {
    const auto f = oracle::random_function( n, rng );
    for ( int i = 1; i <= n; ++i )
    {
      const auto g = f.flipped( i );
      for ( std::uint64_t x = 0; x < f.num_points(); ++x )
        REQUIRE( g( x ) == f( x ^ ( std::uint64_t{ 1 } << ( i - 1 ) ) ) );
    }
  }
}

TEST_CASE( "restrict drops the coordinate and shifts the rest down" )
{
  std::mt19937_64 rng( 11 );
  for ( int n : { 2, 4, 7, 8 } )
  {
    const auto f = oracle::random_function( n, rng );
    for ( int i = 1; i <= n; ++i )
    {
      for ( bool b : { false, true } )
      {
        const auto g = restrict( f, i, b );
        REQUIRE( g.dimension() == n - 1 );
        for ( std::uint64_t y = 0; y < g.num_points(); ++y )
        {
          const std::uint64_t low = y & ( ( std::uint64_t{ 1 } << ( i - 1 ) ) - 1 );
          const std::uint64_t high = ( y >> ( i - 1 ) ) << i;
          const std::uint64_t x = low | high | ( std::uint64_t( b ) << ( i - 1 ) );
          REQUIRE( g( y ) == f( x ) );
        }
      }
    }
  }
}

TEST_CASE( "complement and dual are involutions; dual swaps on complemented points" )
{
  std::mt19937_64 rng( 3 );
  for ( int n = 1; n <= 8; ++n )
  {
    const auto f = oracle::random_function( n, rng );
    CHECK( complement( complement( f ) ) == f );
    CHECK( dual( dual( f ) ) == f );
    const auto d = dual( f );
    const auto mask = f.num_points() - 1;
    for ( std::uint64_t x = 0; x < f.num_points(); ++x )
      REQUIRE( d( x ) == !f( x ^ mask ) );
  }
  CHECK( dual( majority( 3 ) ) == majority( 3 ) );
}

TEST_CASE( "is_monotone agrees with the quadratic oracle" )
{
  for ( std::uint64_t w = 0; w < 256; ++w )
  {
    const auto f = BooleanFunction::from_word( 3, w );
    REQUIRE( is_monotone( f ) == oracle::monotone( f ) );
  }
  std::mt19937_64 rng( 5 );
  for ( int trial = 0; trial < 50; ++trial )
  {
    const auto f = oracle::random_monotone( 7, rng );
    REQUIRE( is_monotone( f ) );
    REQUIRE( is_monotone( f ) == oracle::monotone( f ) );
  }
}

TEST_CASE( "monotone enumeration sizes are the Dedekind numbers" )
{
  const std::uint64_t expected[] = { 3, 6, 20, 168, 7581 };
  for ( int n = 1; n <= 5; ++n )
  {
    const auto all = enumerate_monotone( n );
    CHECK( all.size() == expected[n - 1] );
    std::set<std::uint64_t> seen;
    for ( const auto& f : all )
    {
      REQUIRE( oracle::monotone( f ) );
      seen.insert( f.word() );
    }
    CHECK( seen.size() == all.size() );
  }
  // n = 3 cross-check against filtering all 256 tables
  std::size_t count = 0;
  for ( std::uint64_t w = 0; w < 256; ++w )
    count += oracle::monotone( BooleanFunction::from_word( 3, w ) );
  CHECK( count == 20 );
}

TEST_CASE( "subcubes: patterns, indicators, enumeration order" )
{
  const auto c = parse_subcube( "1*0" );
  CHECK( c.fixed_count() == 2 );
  CHECK( c.ones() == 1 );
  CHECK( c.zeros() == 1 );
  CHECK_FALSE( c.is_monotone() );
  CHECK( c.to_string() == "1*0" );
  const auto ind = subcube_indicator( c );
  for ( std::uint64_t x = 0; x < 8; ++x )
    CHECK( ind( x ) == ( oracle::coord( x, 1 ) && !oracle::coord( x, 3 ) ) );

  const auto all = enumerate_subcubes( 3 );
  CHECK( all.size() == 27 );
  CHECK( all.front().to_string() == "000" );
  CHECK( all[1].to_string() == "001" );
  CHECK( all.back().to_string() == "***" );
  CHECK( enumerate_subcubes( 4, true ).size() == 16 );
  for ( const auto& s : enumerate_subcubes( 4, true ) )
    CHECK( s.is_monotone() );
  CHECK_THROWS_AS( parse_subcube( "1x" ), std::invalid_argument );
}

TEST_CASE( "truth-table text round trip" )
{
  CHECK( format_truth_table( majority( 3 ) ) == "n=3\n8e\n" );
  CHECK( parse_truth_table( "n=3\n8e\n" ) == majority( 3 ) );
  std::mt19937_64 rng( 13 );
  for ( int n = 1; n <= 10; ++n )
  {
    const auto f = oracle::random_function( n, rng );
    REQUIRE( parse_truth_table( format_truth_table( f ) ) == f );
  }
  CHECK_THROWS_AS( parse_truth_table( "n=3\n8" ), std::invalid_argument );
  CHECK_THROWS_AS( parse_truth_table( "n=3\n8g\n" ), std::invalid_argument );
  CHECK_THROWS_AS( parse_truth_table( "m=3\n8e\n" ), std::invalid_argument );
  CHECK_THROWS_AS( parse_truth_table( "n=1\n4\n" ), std::invalid_argument );
  CHECK_THROWS_AS( parse_truth_table( "n=3\n8e\nextra\n" ), std::invalid_argument );
}
