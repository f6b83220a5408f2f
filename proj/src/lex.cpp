#include "cubeiso/lex.hpp"

#include "cubeiso/measure.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace cubeiso
{

namespace
{

std::uint64_t reverse_bits( std::uint64_t x, int n )
{
  std::uint64_t r = 0;
  for ( int b = 0; b < n; ++b )
  {
    r = ( r << 1 ) | ( ( x >> b ) & 1u );
  }
  return r;
}

std::uint64_t binomial_u64( int n, int k )
{
  if ( k < 0 || k > n )
    return 0;
  Integer out;
  mpz_bin_uiui( out.get_mpz_t(), static_cast<unsigned long>( n ), static_cast<unsigned long>( k ) );
  return out.get_ui();
}

/// Largest-digit family size s with lambda = s / 2^d, d = max digit.
Integer dyadic_numerator( const BinaryExpansion& b, int d )
{
  Integer s = 0;
  for ( int digit : b.digits() )
  {
    Integer term;
    mpz_ui_pow_ui( term.get_mpz_t(), 2, static_cast<unsigned long>( d - digit ) );
    s += term;
  }
  return s;
}

/// Below this largest digit, the influence is read off an explicit truth table.
constexpr int kTruthTableDigitLimit = 16;

} // namespace

bool lex_greater( std::uint64_t s, std::uint64_t t )
{
  const auto diff = s ^ t;
  return diff != 0 && ( s & ( diff & -diff ) ) != 0;
}

BooleanFunction lex_family( int n, std::uint64_t m )
{
  auto f = BooleanFunction::zeros( n );
  if ( m > f.num_points() )
  {
    throw std::out_of_range( "lex family size " + std::to_string( m ) + " exceeds 2^" + std::to_string( n ) );
  }
  // With coordinate 1 read as the most significant bit, the order is numeric.
  for ( std::uint64_t r = f.num_points() - m; r < f.num_points(); ++r )
  {
    f.set( reverse_bits( r, n ), true );
  }
  return f;
}

KUniformFamily make_k_uniform( int n, int k, std::vector<std::uint32_t> members )
{
  if ( n < 1 || n > 31 || k < 0 || k > n )
  {
    throw std::invalid_argument( "k-uniform family needs 0 <= k <= n <= 31" );
  }
  const std::uint32_t universe = n == 32 ? ~0u : ( ( 1u << n ) - 1 );
  for ( auto m : members )
  {
    if ( ( m & ~universe ) != 0 || std::popcount( m ) != k )
    {
      throw std::invalid_argument( "member is not a " + std::to_string( k ) + "-subset of [" + std::to_string( n ) + "]" );
    }
  }
  std::sort( members.begin(), members.end() );
  members.erase( std::unique( members.begin(), members.end() ), members.end() );
  return { n, k, std::move( members ) };
}

KUniformFamily upper_shadow( const KUniformFamily& a )
{
  if ( a.k >= a.n )
  {
    throw std::invalid_argument( "upper shadow of an n-uniform family would overflow the ground set" );
  }
  std::vector<std::uint32_t> out;
  for ( auto m : a.members )
  {
    for ( int e = 0; e < a.n; ++e )
    {
      const auto bit = 1u << e;
      if ( !( m & bit ) )
        out.push_back( m | bit );
    }
  }
  std::sort( out.begin(), out.end() );
  out.erase( std::unique( out.begin(), out.end() ), out.end() );
  return { a.n, a.k + 1, std::move( out ) };
}

KUniformFamily iterated_upper_shadow( const KUniformFamily& a, int i )
{
  if ( i < 0 || a.k + i > a.n )
  {
    throw std::invalid_argument( "iterated upper shadow needs k + i <= n" );
  }
  auto out = a;
  for ( int step = 0; step < i; ++step )
  {
    out = upper_shadow( out );
  }
  return out;
}

KUniformFamily lex_layer_segment( int n, int k, std::uint64_t m )
{
  if ( n < 1 || n > 31 || k < 0 || k > n )
  {
    throw std::invalid_argument( "lex layer segment needs 0 <= k <= n <= 31" );
  }
  if ( m > binomial_u64( n, k ) )
  {
    throw std::out_of_range( "segment size exceeds C(n,k)" );
  }
  std::vector<std::uint32_t> layer;
  for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << n ); ++x )
  {
    if ( std::popcount( x ) == k )
      layer.push_back( static_cast<std::uint32_t>( x ) );
  }
  std::sort( layer.begin(), layer.end(), []( auto s, auto t ) { return lex_greater( s, t ); } );
  layer.resize( m );
  return make_k_uniform( n, k, std::move( layer ) );
}

std::uint64_t kk_min_upper_shadow( int n, int k, std::uint64_t m )
{
  if ( k >= n )
  {
    throw std::invalid_argument( "Kruskal-Katona needs k < n" );
  }
  return upper_shadow( lex_layer_segment( n, k, m ) ).size();
}

BinaryExpansion BinaryExpansion::from_digits( std::vector<int> digits, bool exact )
{
  if ( digits.empty() )
  {
    throw std::invalid_argument( "binary expansion needs at least one digit" );
  }
  for ( std::size_t j = 0; j < digits.size(); ++j )
  {
    if ( digits[j] < 1 || ( j > 0 && digits[j] <= digits[j - 1] ) )
    {
      throw std::invalid_argument( "binary digits must be strictly increasing positive integers" );
    }
  }
  BinaryExpansion b;
  b.digits_ = std::move( digits );
  b.exact_ = exact;
  return b;
}

BinaryExpansion BinaryExpansion::from_dyadic( const Rational& value )
{
  Rational lambda = value;
  lambda.canonicalize();
  if ( lambda <= 0 || lambda >= 1 )
  {
    throw std::domain_error( "lambda must lie in (0,1)" );
  }
  const Integer& den = lambda.get_den();
  if ( mpz_popcount( den.get_mpz_t() ) != 1 )
  {
    throw std::invalid_argument( "lambda " + format_rational( lambda ) + " is not dyadic" );
  }
  const int d = static_cast<int>( mpz_scan1( den.get_mpz_t(), 0 ) );
  const Integer& s = lambda.get_num();
  std::vector<int> digits;
  for ( int i = 1; i <= d; ++i )
  {
    if ( mpz_tstbit( s.get_mpz_t(), static_cast<mp_bitcnt_t>( d - i ) ) )
      digits.push_back( i );
  }
  return from_digits( std::move( digits ), true );
}

BinaryExpansion BinaryExpansion::parse( std::string_view text )
{
  std::vector<int> digits;
  std::string item;
  std::istringstream in{ std::string( text ) };
  while ( std::getline( in, item, ',' ) )
  {
    if ( item.empty() || !std::all_of( item.begin(), item.end(), []( char c ) { return c >= '0' && c <= '9'; } ) ||
         item.size() > 9 )
    {
      throw std::invalid_argument( "malformed digit list '" + std::string( text ) + "'" );
    }
    digits.push_back( std::stoi( item ) );
  }
  return from_digits( std::move( digits ), true );
}

Rational BinaryExpansion::value() const
{
  Rational lambda = 0;
  for ( int digit : digits_ )
  {
    Rational term( 1 );
    mpz_mul_2exp( term.get_den_mpz_t(), term.get_den_mpz_t(), static_cast<mp_bitcnt_t>( digit ) );
    lambda += term;
  }
  return lambda;
}

std::string BinaryExpansion::to_string() const
{
  std::string s;
  for ( std::size_t j = 0; j < digits_.size(); ++j )
  {
    if ( j )
      s += ",";
    s += std::to_string( digits_[j] );
  }
  return s;
}

BooleanFunction realize( const BinaryExpansion& b, int n )
{
  if ( n < b.max_digit() )
  {
    throw std::invalid_argument( "realize needs n >= largest digit" );
  }
  Integer s = dyadic_numerator( b, n );
  return lex_family( n, s.get_ui() );
}

LimitValue limit_lex_measure( const BinaryExpansion& b, const Rational& p )
{
  require_open_unit( p );
  const Rational q = 1 - p;
  Rational value = 0;
  const auto& digits = b.digits();
  for ( std::size_t j = 1; j <= digits.size(); ++j )
  {
    const auto i = static_cast<unsigned>( digits[j - 1] );
    value += power( p, i - static_cast<unsigned>( j ) + 1 ) * power( q, static_cast<unsigned>( j ) - 1 );
  }
  Rational tail = 0;
  if ( !b.exact() )
  {
    // Every later cylinder sits inside {x_(digits) = 0, other x_k = 1, k <= i_J}.
    const auto depth = static_cast<unsigned>( b.depth() );
    tail = power( p, static_cast<unsigned>( b.max_digit() ) - depth ) * power( q, depth );
  }
  return { value, tail };
}

std::pair<Rational, Rational> finite_lex_measure_and_influence( const BinaryExpansion& b, const Rational& p )
{
  require_open_unit( p );
  const Rational q = 1 - p;
  const int d = b.max_digit();
  // Members are the points whose reversed index is >= tau = 2^d - s.
  Integer full;
  mpz_ui_pow_ui( full.get_mpz_t(), 2, static_cast<unsigned long>( d ) );
  const Integer tau = full - dyadic_numerator( b, d );
  auto threshold_bit = [&]( int k ) { return mpz_tstbit( tau.get_mpz_t(), static_cast<mp_bitcnt_t>( d - k ) ) != 0; };

  // suffix[k]: probability that positions k+1..d compare >= the threshold.
  std::vector<Rational> suffix( d + 1 );
  suffix[d] = 1;
  for ( int k = d; k >= 1; --k )
  {
    suffix[k - 1] = threshold_bit( k ) ? Rational( p * suffix[k] ) : Rational( p + q * suffix[k] );
  }
  // Coordinate i is pivotal iff the prefix matches the threshold and the
  // suffix comparison disagrees with the threshold digit at i.
  Rational prefix = 1;
  Rational total = 0;
  for ( int i = 1; i <= d; ++i )
  {
    const bool t = threshold_bit( i );
    total += prefix * ( t ? suffix[i] : Rational( 1 - suffix[i] ) );
    prefix *= t ? p : q;
  }
  return { suffix[0], total };
}

LimitValue limit_lex_influence( const BinaryExpansion& b, const Rational& p )
{
  require_open_unit( p );
  Rational value;
  if ( b.max_digit() <= kTruthTableDigitLimit )
  {
    value = total_influence( realize( b, b.max_digit() ), p );
  }
  else
  {
    value = finite_lex_measure_and_influence( b, p ).second;
  }
  Rational tail = 0;
  if ( !b.exact() )
  {
    // Later cylinders c_j = p^(a_j) q^(j-1) have a_j >= a; bound the sum of
    // |d c_j / dp| = |a_j p^(a_j-1) q^(j-1) - (j-1) p^(a_j) q^(j-2)|.
    const Rational q = 1 - p;
    const long depth = b.depth();
    const long a = b.max_digit() - depth + 1;
    // a' p^(a'-1) decreases once a' >= p/q.
    Rational ratio = p / q;
    Integer ceil_ratio;
    mpz_cdiv_q( ceil_ratio.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t() );
    const long a_eff = std::max( a, static_cast<long>( ceil_ratio.get_si() ) );
    // sum_{j>J} a_eff p^(a_eff-1) q^(j-1)         = a_eff p^(a_eff-2) q^J
    // sum_{j>J} (j-1) p^a q^(j-2)                  = p^(a-2) q^(J-1) (J p + q)
    auto p_pow = [&]( long e ) { return e >= 0 ? power( p, static_cast<unsigned>( e ) ) : Rational( 1 / power( p, static_cast<unsigned>( -e ) ) ); };
    tail = Rational( a_eff ) * p_pow( a_eff - 2 ) * power( q, static_cast<unsigned>( depth ) ) +
           p_pow( a - 2 ) * power( q, static_cast<unsigned>( depth - 1 ) ) * ( Rational( depth ) * p + q );
  }
  return { value, tail };
}

LambdaSolution lambda_from_measure( const Rational& target, const Rational& p, int max_depth )
{
  require_open_unit( p );
  require_open_unit( target, "target measure" );
  if ( max_depth < 1 )
  {
    throw std::invalid_argument( "max_depth must be at least 1" );
  }
  const Rational q = 1 - p;
  Rational remaining = target;
  std::vector<int> digits;
  int i = 1;
  Rational cylinder = p;  // p^(i - j + 1) (1-p)^(j-1) with j = digits + 1
  while ( remaining > 0 && static_cast<int>( digits.size() ) < max_depth )
  {
    if ( cylinder <= remaining )
    {
      digits.push_back( i );
      remaining -= cylinder;
      cylinder *= q;
    }
    else
    {
      cylinder *= p;
    }
    ++i;
  }
  const bool exact = remaining == 0;
  return { BinaryExpansion::from_digits( std::move( digits ), exact ), remaining };
}

std::uint64_t lex_layer_size( const BinaryExpansion& b, int n, int k )
{
  if ( n < b.max_digit() )
  {
    throw std::invalid_argument( "layer size needs n >= largest digit" );
  }
  std::uint64_t total = 0;
  const auto& digits = b.digits();
  for ( std::size_t j = 1; j <= digits.size(); ++j )
  {
    const int fixed_ones = digits[j - 1] - static_cast<int>( j ) + 1;
    total += binomial_u64( n - digits[j - 1], k - fixed_ones );
  }
  return total;
}

const char* to_string( CheckOutcome outcome )
{
  switch ( outcome )
  {
  case CheckOutcome::Holds:
    return "holds";
  case CheckOutcome::Fails:
    return "fails";
  case CheckOutcome::HypothesisNotMet:
    return "hypothesis-not-met";
  }
  return "?";
}

CheckOutcome layer_domination_check( const BooleanFunction& f, const BinaryExpansion& b, int k0, int k )
{
  const int n = f.dimension();
  const int j = b.max_digit();
  if ( !( n > k0 && k0 > k && k >= j && j >= 1 && n - k0 >= j ) || !is_monotone( f ) )
  {
    return CheckOutcome::HypothesisNotMet;
  }
  const auto layers = weight_profile( f );
  if ( layers[k0] > lex_layer_size( b, n, k0 ) )
  {
    return CheckOutcome::HypothesisNotMet;
  }
  return layers[k] <= lex_layer_size( b, n, k ) ? CheckOutcome::Holds : CheckOutcome::Fails;
}

} // namespace cubeiso
