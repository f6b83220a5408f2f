#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubeiso
{

inline constexpr int kMaxDimension = 24;

/*! \brief A Boolean function on {0,1}^n stored as a dense truth table.

  Point x = (x_1, ..., x_n) lives at index k = sum_i x_i 2^(i-1), so
  coordinate 1 is the least significant bit.  Bits of the last word beyond
  2^n are always zero.
*/
class BooleanFunction
{
public:
  BooleanFunction() = default;

  static BooleanFunction zeros( int n );
  static BooleanFunction ones( int n );
  /// Low 2^n bits of `word` become the table; requires n <= 6.
  static BooleanFunction from_word( int n, std::uint64_t word );
  /// Character k of `bits` ('0'/'1') is f at index k.
  static BooleanFunction from_bits( int n, std::string_view bits );

  int dimension() const noexcept { return n_; }
  std::uint64_t num_points() const noexcept { return std::uint64_t{ 1 } << n_; }

  bool operator()( std::uint64_t index ) const noexcept
  {
    return ( words_[index >> 6] >> ( index & 63 ) ) & 1u;
  }
  void set( std::uint64_t index, bool value ) noexcept
  {
    const auto bit = std::uint64_t{ 1 } << ( index & 63 );
    if ( value )
      words_[index >> 6] |= bit;
    else
      words_[index >> 6] &= ~bit;
  }

  std::uint64_t count() const noexcept;
  bool is_zero() const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  /// The whole table for n <= 6.
  std::uint64_t word() const noexcept { return words_.front(); }

  /// x -> f(x xor e_i), i is 1-based.
  BooleanFunction flipped( int i ) const;

  std::string to_bits() const;

  BooleanFunction operator~() const;
  BooleanFunction& operator&=( const BooleanFunction& other );
  BooleanFunction& operator|=( const BooleanFunction& other );
  BooleanFunction& operator^=( const BooleanFunction& other );
  friend BooleanFunction operator&( BooleanFunction a, const BooleanFunction& b ) { return a &= b; }
  friend BooleanFunction operator|( BooleanFunction a, const BooleanFunction& b ) { return a |= b; }
  friend BooleanFunction operator^( BooleanFunction a, const BooleanFunction& b ) { return a ^= b; }

  friend bool operator==( const BooleanFunction&, const BooleanFunction& ) = default;

  /// Pointwise f <= g.
  bool implies( const BooleanFunction& other ) const;

private:
  BooleanFunction( int n, std::vector<std::uint64_t> words ) : n_( n ), words_( std::move( words ) ) {}
  void check_same_dimension( const BooleanFunction& other ) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<( std::ostream& os, const BooleanFunction& f );

/// Throws std::invalid_argument on n outside [1,24] or a length mismatch.
BooleanFunction make_function( int n, const std::vector<bool>& table );

std::uint64_t popcount_index( std::uint64_t index ) noexcept;

BooleanFunction dictatorship( int n, int i );
BooleanFunction antidictatorship( int n, int i );
BooleanFunction majority( int n );

/// g(y) = f(x) with x_i = b; coordinates above i shift down by one.
BooleanFunction restrict( const BooleanFunction& f, int i, bool b );
BooleanFunction complement( const BooleanFunction& f );
/// f*(x) = 1 - f(complement of x).
BooleanFunction dual( const BooleanFunction& f );
bool is_monotone( const BooleanFunction& f );

/// Every monotone increasing function on n <= 6 coordinates, in increasing
/// order of table word. Sizes 3, 6, 20, 168, 7581, 7828354.
std::vector<BooleanFunction> enumerate_monotone( int n );

enum class Symbol : std::uint8_t
{
  Zero,
  One,
  Free
};

struct Subcube
{
  int n = 0;
  std::vector<Symbol> pattern;

  int fixed_count() const;
  int ones() const;
  int zeros() const;
  /// Monotone increasing iff no coordinate is pinned to 0.
  bool is_monotone() const { return zeros() == 0; }
  /// e.g. "1*0" for (One, Free, Zero).
  std::string to_string() const;

  friend bool operator==( const Subcube&, const Subcube& ) = default;
};

Subcube parse_subcube( std::string_view pattern );
BooleanFunction subcube_indicator( const Subcube& c );

/// Subcubes in lexicographic pattern order (coordinate 1 first,
/// Zero < One < Free). With monotone_only, only patterns over {One, Free}.
void for_each_subcube( int n, bool monotone_only, const std::function<void( const Subcube& )>& visit );
std::vector<Subcube> enumerate_subcubes( int n, bool monotone_only = false );

/*! \brief Truth-table text format.

  Line 1 is "n=<int>", line 2 a hex string of ceil(2^n/4) digits with the
  least significant digit first; bit k of the table is bit k of that value.
*/
std::string format_truth_table( const BooleanFunction& f );
BooleanFunction parse_truth_table( std::string_view text );
BooleanFunction read_truth_table_file( const std::string& path );

} // namespace cubeiso
