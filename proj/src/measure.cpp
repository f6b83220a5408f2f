#include "cubeiso/measure.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace cubeiso
{

namespace
{

using WeightMasks = std::array<std::array<std::uint64_t, 7>, 7>;

/// masks[n][w]: positions k < 2^n with popcount(k) = w, for n <= 6.
const WeightMasks& small_weight_masks()
{
  static const WeightMasks masks = [] {
    WeightMasks m{};
    for ( int n = 0; n <= 6; ++n )
    {
      for ( std::uint64_t k = 0; k < ( std::uint64_t{ 1 } << n ); ++k )
      {
        m[n][std::popcount( k )] |= std::uint64_t{ 1 } << k;
      }
    }
    return m;
  }();
  return masks;
}

void accumulate_profile( const BooleanFunction& f, std::vector<std::uint64_t>& profile )
{
  const int n = f.dimension();
  if ( n <= 6 )
  {
    const auto& masks = small_weight_masks()[n];
    const auto w = f.word();
    for ( int weight = 0; weight <= n; ++weight )
    {
      profile[weight] += static_cast<std::uint64_t>( std::popcount( w & masks[weight] ) );
    }
    return;
  }
  const auto words = f.words();
  for ( std::size_t j = 0; j < words.size(); ++j )
  {
    // Weight of the word index bits is shared by the whole word.
    const int base = std::popcount( static_cast<std::uint64_t>( j ) );
    const auto& masks = small_weight_masks()[6];
    for ( int weight = 0; weight <= 6; ++weight )
    {
      profile[base + weight] += static_cast<std::uint64_t>( std::popcount( words[j] & masks[weight] ) );
    }
  }
}

Integer binomial( unsigned n, unsigned k )
{
  Integer out;
  mpz_bin_uiui( out.get_mpz_t(), n, k );
  return out;
}

} // namespace

std::vector<std::uint64_t> weight_profile( const BooleanFunction& f )
{
  std::vector<std::uint64_t> profile( f.dimension() + 1, 0 );
  accumulate_profile( f, profile );
  return profile;
}

std::vector<std::uint64_t> boundary_profile( const BooleanFunction& f )
{
  std::vector<std::uint64_t> profile( f.dimension() + 1, 0 );
  for ( int i = 1; i <= f.dimension(); ++i )
  {
    accumulate_profile( f ^ f.flipped( i ), profile );
  }
  return profile;
}

PointWeights::PointWeights( int n, const Rational& p ) : n_( n ), p_( p )
{
  require_open_unit( p );
  if ( n < 0 || n > kMaxDimension )
  {
    throw std::invalid_argument( "PointWeights dimension out of range" );
  }
  // p = a/b:  p^w (1-p)^(n-w) = a^w (b-a)^(n-w) / b^n
  const Integer a = p.get_num();
  const Integer b = p.get_den();
  const Integer c = b - a;
  numerators_.resize( n + 1 );
  for ( int w = 0; w <= n; ++w )
  {
    Integer aw, cw;
    mpz_pow_ui( aw.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>( w ) );
    mpz_pow_ui( cw.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>( n - w ) );
    numerators_[w] = aw * cw;
  }
  mpz_pow_ui( denominator_.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>( n ) );
}

Rational PointWeights::weight( int w ) const
{
  Rational q( numerators_.at( w ), denominator_ );
  q.canonicalize();
  return q;
}

Integer PointWeights::evaluate_scaled( std::span<const std::uint64_t> profile ) const
{
  if ( profile.size() != numerators_.size() )
  {
    throw std::invalid_argument( "profile length does not match dimension" );
  }
  Integer total = 0;
  for ( std::size_t w = 0; w < profile.size(); ++w )
  {
    if ( profile[w] != 0 )
    {
      Integer count;
      mpz_set_ui( count.get_mpz_t(), profile[w] );
      total += count * numerators_[w];
    }
  }
  return total;
}

Rational PointWeights::evaluate( std::span<const std::uint64_t> profile ) const
{
  Rational q( evaluate_scaled( profile ), denominator_ );
  q.canonicalize();
  return q;
}

Rational mu( const BooleanFunction& f, const Rational& p )
{
  return PointWeights( f.dimension(), p ).evaluate( weight_profile( f ) );
}

Rational influence( const BooleanFunction& f, int i, const Rational& p )
{
  return PointWeights( f.dimension(), p ).evaluate( weight_profile( f ^ f.flipped( i ) ) );
}

Rational total_influence( const BooleanFunction& f, const Rational& p )
{
  return PointWeights( f.dimension(), p ).evaluate( boundary_profile( f ) );
}

std::vector<Rational> influences( const BooleanFunction& f, const Rational& p )
{
  const PointWeights weights( f.dimension(), p );
  std::vector<Rational> out;
  for ( int i = 1; i <= f.dimension(); ++i )
  {
    out.push_back( weights.evaluate( weight_profile( f ^ f.flipped( i ) ) ) );
  }
  return out;
}

EdgeSet edge_boundary( const BooleanFunction& f )
{
  EdgeSet out{ f.dimension(), {} };
  for ( int i = 1; i <= f.dimension(); ++i )
  {
    const auto bit = std::uint64_t{ 1 } << ( i - 1 );
    for ( std::uint64_t x = 0; x < f.num_points(); ++x )
    {
      if ( !( x & bit ) && f( x ) != f( x | bit ) )
        out.edges.push_back( { x, i } );
    }
  }
  return out;
}

Rational boundary_measure( const EdgeSet& e, const Rational& p )
{
  if ( e.n < 1 )
  {
    throw std::invalid_argument( "edge set without a dimension" );
  }
  std::vector<std::uint64_t> profile( e.n, 0 );
  for ( const auto& edge : e.edges )
  {
    // x_i = 0, so the weight over j != i is just |x|.
    ++profile[popcount_index( edge.point )];
  }
  return PointWeights( e.n - 1, p ).evaluate( profile );
}

std::uint64_t boundary_size( const BooleanFunction& f )
{
  std::uint64_t total = 0;
  for ( int i = 1; i <= f.dimension(); ++i )
  {
    total += ( f ^ f.flipped( i ) ).count();
  }
  return total / 2;
}

MeasurePolynomial::MeasurePolynomial( std::vector<Integer> coefficients ) : coefficients_( std::move( coefficients ) )
{
  trim();
}

void MeasurePolynomial::trim()
{
  while ( !coefficients_.empty() && coefficients_.back() == 0 )
  {
    coefficients_.pop_back();
  }
}

Rational MeasurePolynomial::evaluate( const Rational& p ) const
{
  Rational acc = 0;
  for ( auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it )
  {
    acc = acc * p + Rational( *it );
  }
  return acc;
}

MeasurePolynomial MeasurePolynomial::derivative() const
{
  std::vector<Integer> out;
  for ( std::size_t k = 1; k < coefficients_.size(); ++k )
  {
    out.push_back( coefficients_[k] * static_cast<unsigned long>( k ) );
  }
  return MeasurePolynomial( std::move( out ) );
}

std::string MeasurePolynomial::to_string() const
{
  if ( is_zero() )
  {
    return "0";
  }
  std::string s;
  for ( std::size_t k = 0; k < coefficients_.size(); ++k )
  {
    const auto& c = coefficients_[k];
    if ( c == 0 )
      continue;
    const Integer magnitude = abs( c );
    if ( s.empty() )
      s += sgn( c ) < 0 ? "-" : "";
    else
      s += sgn( c ) < 0 ? " - " : " + ";
    if ( k == 0 || magnitude != 1 )
      s += magnitude.get_str();
    if ( k >= 1 )
      s += "p";
    if ( k >= 2 )
      s += "^" + std::to_string( k );
  }
  return s;
}

MeasurePolynomial operator+( const MeasurePolynomial& a, const MeasurePolynomial& b )
{
  std::vector<Integer> out( std::max( a.coefficients_.size(), b.coefficients_.size() ), 0 );
  for ( std::size_t k = 0; k < a.coefficients_.size(); ++k )
    out[k] += a.coefficients_[k];
  for ( std::size_t k = 0; k < b.coefficients_.size(); ++k )
    out[k] += b.coefficients_[k];
  return MeasurePolynomial( std::move( out ) );
}

MeasurePolynomial operator-( const MeasurePolynomial& a, const MeasurePolynomial& b )
{
  std::vector<Integer> out( std::max( a.coefficients_.size(), b.coefficients_.size() ), 0 );
  for ( std::size_t k = 0; k < a.coefficients_.size(); ++k )
    out[k] += a.coefficients_[k];
  for ( std::size_t k = 0; k < b.coefficients_.size(); ++k )
    out[k] -= b.coefficients_[k];
  return MeasurePolynomial( std::move( out ) );
}

MeasurePolynomial MeasurePolynomial::from_weight_profile( int n, std::span<const std::uint64_t> profile )
{
  if ( profile.size() != static_cast<std::size_t>( n ) + 1 )
  {
    throw std::invalid_argument( "profile length does not match dimension" );
  }
  std::vector<Integer> coefficients( n + 1, 0 );
  for ( int w = 0; w <= n; ++w )
  {
    if ( profile[w] == 0 )
      continue;
    Integer count;
    mpz_set_ui( count.get_mpz_t(), profile[w] );
    // p^w (1-p)^(n-w) = sum_j (-1)^j C(n-w, j) p^(w+j)
    for ( int j = 0; j <= n - w; ++j )
    {
      const Integer term = count * binomial( static_cast<unsigned>( n - w ), static_cast<unsigned>( j ) );
      if ( j % 2 == 0 )
        coefficients[w + j] += term;
      else
        coefficients[w + j] -= term;
    }
  }
  return MeasurePolynomial( std::move( coefficients ) );
}

MeasurePolynomial measure_polynomial( const BooleanFunction& f )
{
  return MeasurePolynomial::from_weight_profile( f.dimension(), weight_profile( f ) );
}

MeasurePolynomial influence_polynomial( const BooleanFunction& f )
{
  return MeasurePolynomial::from_weight_profile( f.dimension(), boundary_profile( f ) );
}

MeasurePolynomial margulis_russo_residual( const BooleanFunction& f )
{
  if ( !is_monotone( f ) )
  {
    throw std::invalid_argument( "the Margulis-Russo identity is only claimed for monotone functions" );
  }
  return measure_polynomial( f ).derivative() - influence_polynomial( f );
}

} // namespace cubeiso
