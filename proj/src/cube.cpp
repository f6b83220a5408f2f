#include "cubeiso/cube.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cubeiso
{

namespace
{

/// Positions k (within a 64-bit word) whose bit i-1 is zero, i = 1..6.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull };

void check_dimension( int n )
{
  if ( n < 1 || n > kMaxDimension )
  {
    throw std::invalid_argument( "dimension must lie in [1," + std::to_string( kMaxDimension ) +
                                 "], got " + std::to_string( n ) );
  }
}

void check_coordinate( int n, int i )
{
  if ( i < 1 || i > n )
  {
    throw std::out_of_range( "coordinate " + std::to_string( i ) + " outside [1," + std::to_string( n ) + "]" );
  }
}

std::size_t word_count( int n )
{
  return n >= 6 ? ( std::size_t{ 1 } << ( n - 6 ) ) : 1;
}

std::uint64_t valid_mask( int n )
{
  return n >= 6 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << n ) ) - 1 );
}

} // namespace

BooleanFunction BooleanFunction::zeros( int n )
{
  check_dimension( n );
  return BooleanFunction( n, std::vector<std::uint64_t>( word_count( n ), 0 ) );
}

BooleanFunction BooleanFunction::ones( int n )
{
  check_dimension( n );
  return BooleanFunction( n, std::vector<std::uint64_t>( word_count( n ), valid_mask( n ) ) );
}

BooleanFunction BooleanFunction::from_word( int n, std::uint64_t word )
{
  check_dimension( n );
  if ( n > 6 )
  {
    throw std::invalid_argument( "from_word requires n <= 6" );
  }
  if ( word & ~valid_mask( n ) )
  {
    throw std::invalid_argument( "word has bits beyond 2^n" );
  }
  return BooleanFunction( n, { word } );
}

BooleanFunction BooleanFunction::from_bits( int n, std::string_view bits )
{
  check_dimension( n );
  if ( bits.size() != ( std::size_t{ 1 } << n ) )
  {
    throw std::invalid_argument( "table length " + std::to_string( bits.size() ) + " does not match 2^" +
                                 std::to_string( n ) );
  }
  auto f = zeros( n );
  for ( std::size_t k = 0; k < bits.size(); ++k )
  {
    if ( bits[k] != '0' && bits[k] != '1' )
    {
      throw std::invalid_argument( "table characters must be '0' or '1'" );
    }
    f.set( k, bits[k] == '1' );
  }
  return f;
}

std::uint64_t BooleanFunction::count() const noexcept
{
  std::uint64_t total = 0;
  for ( auto w : words_ )
  {
    total += static_cast<std::uint64_t>( std::popcount( w ) );
  }
  return total;
}

bool BooleanFunction::is_zero() const noexcept
{
  return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0; } );
}

BooleanFunction BooleanFunction::flipped( int i ) const
{
  check_coordinate( n_, i );
  std::vector<std::uint64_t> out( words_.size() );
  if ( i <= 6 )
  {
    const auto shift = std::uint64_t{ 1 } << ( i - 1 );
    const auto low = kLowHalf[i - 1];
    for ( std::size_t j = 0; j < words_.size(); ++j )
    {
      const auto w = words_[j];
      out[j] = ( ( w >> shift ) & low ) | ( ( w & low ) << shift );
    }
  }
  else
  {
    const std::size_t stride = std::size_t{ 1 } << ( i - 7 );
    for ( std::size_t j = 0; j < words_.size(); ++j )
    {
      out[j] = words_[j ^ stride];
    }
  }
  return BooleanFunction( n_, std::move( out ) );
}

std::string BooleanFunction::to_bits() const
{
  std::string s( num_points(), '0' );
  for ( std::uint64_t k = 0; k < num_points(); ++k )
  {
    if ( ( *this )( k ) )
      s[k] = '1';
  }
  return s;
}

BooleanFunction BooleanFunction::operator~() const
{
  auto out = *this;
  const auto mask = valid_mask( n_ );
  for ( auto& w : out.words_ )
  {
    w = ~w & mask;
  }
  return out;
}

void BooleanFunction::check_same_dimension( const BooleanFunction& other ) const
{
  if ( n_ != other.n_ )
  {
    throw std::invalid_argument( "dimension mismatch: " + std::to_string( n_ ) + " vs " + std::to_string( other.n_ ) );
  }
}

BooleanFunction& BooleanFunction::operator&=( const BooleanFunction& other )
{
  check_same_dimension( other );
  for ( std::size_t j = 0; j < words_.size(); ++j )
    words_[j] &= other.words_[j];
  return *this;
}

BooleanFunction& BooleanFunction::operator|=( const BooleanFunction& other )
{
  check_same_dimension( other );
  for ( std::size_t j = 0; j < words_.size(); ++j )
    words_[j] |= other.words_[j];
  return *this;
}

BooleanFunction& BooleanFunction::operator^=( const BooleanFunction& other )
{
  check_same_dimension( other );
  for ( std::size_t j = 0; j < words_.size(); ++j )
    words_[j] ^= other.words_[j];
  return *this;
}

bool BooleanFunction::implies( const BooleanFunction& other ) const
{
  check_same_dimension( other );
  for ( std::size_t j = 0; j < words_.size(); ++j )
  {
    if ( words_[j] & ~other.words_[j] )
      return false;
  }
  return true;
}

std::ostream& operator<<( std::ostream& os, const BooleanFunction& f )
{
  return os << "n=" << f.dimension() << ":" << f.to_bits();
}

BooleanFunction make_function( int n, const std::vector<bool>& table )
{
  check_dimension( n );
  if ( table.size() != ( std::size_t{ 1 } << n ) )
  {
    throw std::invalid_argument( "table length " + std::to_string( table.size() ) + " does not match 2^" +
                                 std::to_string( n ) );
  }
  auto f = BooleanFunction::zeros( n );
  for ( std::size_t k = 0; k < table.size(); ++k )
  {
    f.set( k, table[k] );
  }
  return f;
}

std::uint64_t popcount_index( std::uint64_t index ) noexcept
{
  return static_cast<std::uint64_t>( std::popcount( index ) );
}

BooleanFunction dictatorship( int n, int i )
{
  check_dimension( n );
  check_coordinate( n, i );
  return ~antidictatorship( n, i );
}

BooleanFunction antidictatorship( int n, int i )
{
  check_dimension( n );
  check_coordinate( n, i );
  auto f = BooleanFunction::zeros( n );
  const auto bit = std::uint64_t{ 1 } << ( i - 1 );
  for ( std::uint64_t k = 0; k < f.num_points(); ++k )
  {
    if ( !( k & bit ) )
      f.set( k, true );
  }
  return f;
}

BooleanFunction majority( int n )
{
  auto f = BooleanFunction::zeros( n );
  for ( std::uint64_t k = 0; k < f.num_points(); ++k )
  {
    f.set( k, 2 * popcount_index( k ) > static_cast<std::uint64_t>( n ) );
  }
  return f;
}

BooleanFunction restrict( const BooleanFunction& f, int i, bool b )
{
  const int n = f.dimension();
  check_coordinate( n, i );
  if ( n == 1 )
  {
    throw std::invalid_argument( "cannot restrict a function of one coordinate" );
  }
  auto g = BooleanFunction::zeros( n - 1 );
  const std::uint64_t low_mask = ( std::uint64_t{ 1 } << ( i - 1 ) ) - 1;
  const std::uint64_t fixed = static_cast<std::uint64_t>( b ) << ( i - 1 );
  for ( std::uint64_t y = 0; y < g.num_points(); ++y )
  {
    const auto x = ( y & low_mask ) | fixed | ( ( y & ~low_mask ) << 1 );
    g.set( y, f( x ) );
  }
  return g;
}

BooleanFunction complement( const BooleanFunction& f )
{
  return ~f;
}

BooleanFunction dual( const BooleanFunction& f )
{
  auto g = f;
  for ( int i = 1; i <= f.dimension(); ++i )
  {
    g = g.flipped( i );
  }
  return ~g;
}

bool is_monotone( const BooleanFunction& f )
{
  for ( int i = 1; i <= f.dimension(); ++i )
  {
    // A 1-point with x_i = 0 whose upper neighbour is a 0-point.
    const auto lower_ones = f & antidictatorship( f.dimension(), i );
    if ( !lower_ones.implies( f.flipped( i ) ) )
      return false;
  }
  return true;
}

std::vector<BooleanFunction> enumerate_monotone( int n )
{
  check_dimension( n );
  if ( n > 6 )
  {
    throw std::invalid_argument( "monotone enumeration is limited to n <= 6" );
  }
  std::vector<std::uint64_t> level = { 0, 1 };
  for ( int m = 1; m <= n; ++m )
  {
    const auto half = std::uint64_t{ 1 } << ( m - 1 );
    std::vector<std::uint64_t> next;
    for ( auto lower : level )
    {
      for ( auto upper : level )
      {
        if ( ( lower & ~upper ) == 0 )
          next.push_back( lower | ( upper << half ) );
      }
    }
    level = std::move( next );
  }
  std::sort( level.begin(), level.end() );
  std::vector<BooleanFunction> out;
  out.reserve( level.size() );
  for ( auto w : level )
  {
    out.push_back( BooleanFunction::from_word( n, w ) );
  }
  return out;
}

int Subcube::fixed_count() const
{
  return static_cast<int>( std::count_if( pattern.begin(), pattern.end(), []( Symbol s ) { return s != Symbol::Free; } ) );
}

int Subcube::ones() const
{
  return static_cast<int>( std::count( pattern.begin(), pattern.end(), Symbol::One ) );
}

int Subcube::zeros() const
{
  return static_cast<int>( std::count( pattern.begin(), pattern.end(), Symbol::Zero ) );
}

std::string Subcube::to_string() const
{
  std::string s;
  for ( auto sym : pattern )
  {
    s.push_back( sym == Symbol::Zero ? '0' : sym == Symbol::One ? '1' : '*' );
  }
  return s;
}

Subcube parse_subcube( std::string_view pattern )
{
  Subcube c;
  c.n = static_cast<int>( pattern.size() );
  check_dimension( c.n );
  for ( char ch : pattern )
  {
    switch ( ch )
    {
    case '0':
      c.pattern.push_back( Symbol::Zero );
      break;
    case '1':
      c.pattern.push_back( Symbol::One );
      break;
    case '*':
      c.pattern.push_back( Symbol::Free );
      break;
    default:
      throw std::invalid_argument( "subcube pattern characters are '0', '1', '*'" );
    }
  }
  return c;
}

BooleanFunction subcube_indicator( const Subcube& c )
{
  check_dimension( c.n );
  if ( c.pattern.size() != static_cast<std::size_t>( c.n ) )
  {
    throw std::invalid_argument( "subcube pattern length does not match n" );
  }
  auto f = BooleanFunction::ones( c.n );
  for ( int i = 1; i <= c.n; ++i )
  {
    switch ( c.pattern[i - 1] )
    {
    case Symbol::Zero:
      f &= antidictatorship( c.n, i );
      break;
    case Symbol::One:
      f &= dictatorship( c.n, i );
      break;
    case Symbol::Free:
      break;
    }
  }
  return f;
}

void for_each_subcube( int n, bool monotone_only, const std::function<void( const Subcube& )>& visit )
{
  check_dimension( n );
  const std::vector<Symbol> alphabet = monotone_only ? std::vector<Symbol>{ Symbol::One, Symbol::Free }
                                                     : std::vector<Symbol>{ Symbol::Zero, Symbol::One, Symbol::Free };
  Subcube c{ n, std::vector<Symbol>( n, alphabet.front() ) };
  std::vector<std::size_t> digit( n, 0 );
  while ( true )
  {
    visit( c );
    // Odometer with coordinate n as the fastest digit.
    int pos = n - 1;
    while ( pos >= 0 && digit[pos] + 1 == alphabet.size() )
    {
      digit[pos] = 0;
      c.pattern[pos] = alphabet.front();
      --pos;
    }
    if ( pos < 0 )
      return;
    ++digit[pos];
    c.pattern[pos] = alphabet[digit[pos]];
  }
}

std::vector<Subcube> enumerate_subcubes( int n, bool monotone_only )
{
  if ( n > 12 )
  {
    throw std::invalid_argument( "enumerate_subcubes materializes 3^n patterns; use for_each_subcube" );
  }
  std::vector<Subcube> out;
  for_each_subcube( n, monotone_only, [&out]( const Subcube& c ) { out.push_back( c ); } );
  return out;
}

std::string format_truth_table( const BooleanFunction& f )
{
  static constexpr char kHex[] = "0123456789abcdef";
  const auto digits = ( f.num_points() + 3 ) / 4;
  std::string hex;
  hex.reserve( digits );
  for ( std::uint64_t d = 0; d < digits; ++d )
  {
    unsigned nibble = 0;
    for ( unsigned b = 0; b < 4; ++b )
    {
      const auto k = 4 * d + b;
      if ( k < f.num_points() && f( k ) )
        nibble |= 1u << b;
    }
    hex.push_back( kHex[nibble] );
  }
  return "n=" + std::to_string( f.dimension() ) + "\n" + hex + "\n";
}

BooleanFunction parse_truth_table( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string header, hex, rest;
  if ( !std::getline( in, header ) || !std::getline( in, hex ) )
  {
    throw std::invalid_argument( "truth table needs two lines: n=<int> and a hex table" );
  }
  auto trim = []( std::string& s ) {
    while ( !s.empty() && ( s.back() == '\r' || s.back() == ' ' || s.back() == '\t' ) )
      s.pop_back();
  };
  trim( header );
  trim( hex );
  while ( std::getline( in, rest ) )
  {
    trim( rest );
    if ( !rest.empty() )
      throw std::invalid_argument( "unexpected content after the truth table" );
  }
  if ( header.rfind( "n=", 0 ) != 0 || header.size() == 2 ||
       !std::all_of( header.begin() + 2, header.end(), []( char c ) { return c >= '0' && c <= '9'; } ) ||
       header.size() > 4 )
  {
    throw std::invalid_argument( "malformed header '" + header + "'" );
  }
  const int n = std::stoi( header.substr( 2 ) );
  check_dimension( n );
  auto f = BooleanFunction::zeros( n );
  const auto digits = ( f.num_points() + 3 ) / 4;
  if ( hex.size() != digits )
  {
    throw std::invalid_argument( "expected " + std::to_string( digits ) + " hex digits, got " +
                                 std::to_string( hex.size() ) );
  }
  for ( std::uint64_t d = 0; d < digits; ++d )
  {
    const char c = hex[d];
    unsigned nibble;
    if ( c >= '0' && c <= '9' )
      nibble = static_cast<unsigned>( c - '0' );
    else if ( c >= 'a' && c <= 'f' )
      nibble = static_cast<unsigned>( c - 'a' + 10 );
    else if ( c >= 'A' && c <= 'F' )
      nibble = static_cast<unsigned>( c - 'A' + 10 );
    else
      throw std::invalid_argument( std::string( "bad hex digit '" ) + c + "'" );
    for ( unsigned b = 0; b < 4; ++b )
    {
      if ( !( nibble >> b & 1u ) )
        continue;
      const auto k = 4 * d + b;
      if ( k >= f.num_points() )
        throw std::invalid_argument( "hex table sets bits beyond 2^n" );
      f.set( k, true );
    }
  }
  return f;
}

BooleanFunction read_truth_table_file( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw std::runtime_error( "cannot open '" + path + "'" );
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_truth_table( buffer.str() );
}

} // namespace cubeiso
