#include "cubeiso/commands.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace cubeiso;

namespace
{
CommandOptions options( int n, Rational p, unsigned jobs = 1 )
{
  CommandOptions o;
  o.n = n;
  o.p = std::move( p );
  o.jobs = jobs;
  return o;
}
} // namespace

TEST_CASE( "verify-weak scopes" )
{
  const auto all = run_command( "verify-weak", options( 4, Rational( 1, 3 ) ) );
  CHECK( all.passed );
  CHECK( all.counters.at( "cases" ) == 65536 );
  CHECK( all.counters.at( "violations" ) == 0 );

  auto o = options( 4, Rational( 2, 3 ) );
  o.scope = "monotone";
  const auto mono = run_command( "verify-weak", o );
  CHECK( mono.passed );
  CHECK( mono.counters.at( "cases" ) == 168 );
  CHECK( mono.counters.at( "advisory_cases" ) == 0 );

  CHECK_THROWS_AS( run_command( "verify-weak", options( 5, Rational( 1, 3 ) ) ), CommandError );
  o.scope = "everything";
  CHECK_THROWS_AS( run_command( "verify-weak", o ), CommandError );
  o.scope = "file";
  o.input = "/nonexistent/table.txt";
  CHECK_THROWS_AS( run_command( "verify-weak", o ), CommandError );
}

TEST_CASE( "verify-weak reads a truth-table file" )
{
  const std::string path = "verify_weak_input.txt";
  {
    std::ofstream out( path );
    out << "n=3\n8e\n";
  }
  auto o = options( 0, Rational( 1, 3 ) );
  o.scope = "file";
  o.input = path;
  const auto r = run_command( "verify-weak", o );
  CHECK( r.passed );
  CHECK( r.counters.at( "cases" ) == 1 );
  CHECK( r.parameters.at( "n" ) == 3 );
  {
    std::ofstream out( path );
    out << "n=3\nzz\n";
  }
  CHECK_THROWS_AS( run_command( "verify-weak", o ), CommandError );
  std::remove( path.c_str() );
}

TEST_CASE( "kk, russo, full-iso counts" )
{
  auto o = options( 5, Rational( 1, 2 ) );
  o.k = 2;
  const auto kk = run_command( "kk", o );
  CHECK( kk.passed );
  CHECK( kk.counters.at( "families" ) == 1024 );

  const auto russo = run_command( "russo", options( 4, Rational( 1, 2 ) ) );
  CHECK( russo.passed );
  CHECK( russo.counters.at( "families" ) == 168 );
  CHECK( russo.counters.at( "nonzero_residuals" ) == 0 );

  const auto full = run_command( "full-iso", options( 3, Rational( 1, 2 ) ) );
  CHECK( full.passed );
  CHECK( full.counters.at( "families" ) == 256 );
  CHECK( full.extrema.at( "min_boundary_by_size" ) == nlohmann::json( { 0, 3, 4, 5, 4, 5, 4, 3, 0 } ) );

  o.k = 5;
  CHECK_THROWS_AS( run_command( "kk", o ), CommandError );
  CHECK_THROWS_AS( run_command( "full-iso", options( 5, Rational( 1, 2 ) ) ), CommandError );
  CHECK_THROWS_AS( run_command( "no-such-command", o ), CommandError );
}

TEST_CASE( "sharpness report carries the exact values" )
{
  auto o = options( 0, Rational( 1, 4 ) );
  o.t = 2;
  o.s = 3;
  const auto r = run_command( "sharpness", o );
  CHECK( r.passed );
  CHECK( r.extrema.at( "A_mu" ) == "1/16" );
  CHECK( r.extrema.at( "A_total_influence" ) == "35/64" );
  CHECK( r.extrema.at( "A_epsilon" ) == "3/16" );
  CHECK( r.extrema.at( "A_delta" ) == "3/32" );
  CHECK( r.notes.size() >= 6 );
}

TEST_CASE( "every command is deterministic across job counts" )
{
  struct Case
  {
    const char* name;
    CommandOptions o;
  };
  std::vector<Case> cases;
  cases.push_back( { "verify-weak", options( 3, Rational( 1, 4 ) ) } );
  cases.push_back( { "full-iso", options( 3, Rational( 1, 2 ) ) } );
  auto kk = options( 5, Rational( 1, 2 ) );
  kk.k = 2;
  cases.push_back( { "kk", kk } );
  cases.push_back( { "monotone-full", options( 4, Rational( 2, 3 ) ) } );
  cases.push_back( { "stability-scan", options( 3, Rational( 1, 4 ) ) } );
  auto sharp = options( 0, Rational( 1, 4 ) );
  sharp.t = 2;
  sharp.s = 3;
  cases.push_back( { "sharpness", sharp } );
  auto lemma = options( 0, Rational( 1, 3 ) );
  lemma.grid = 40;
  cases.push_back( { "lemma-scan", lemma } );
  cases.push_back( { "russo", options( 4, Rational( 1, 2 ) ) } );
  cases.push_back( { "dichotomy-scan", options( 3, Rational( 1, 4 ) ) } );
  for ( auto& c : cases )
  {
    CAPTURE( c.name );
    const auto first = run_command( c.name, c.o );
    c.o.jobs = 3;
    const auto second = run_command( c.name, c.o );
    REQUIRE( first.canonical_dump() == second.canonical_dump() );
  }
}
