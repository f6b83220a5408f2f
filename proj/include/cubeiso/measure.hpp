#pragma once

#include "cubeiso/cube.hpp"
#include "cubeiso/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cubeiso
{

/// Number of points of each Hamming weight 0..n on which f is 1.
std::vector<std::uint64_t> weight_profile( const BooleanFunction& f );

/// Number of ordered pairs (x, i) of each weight |x| with f(x) != f(x xor e_i).
std::vector<std::uint64_t> boundary_profile( const BooleanFunction& f );

/*! \brief p^w (1-p)^(n-w) for w = 0..n, kept as integers over a common
  denominator so that weighted sums stay integral until the final division.
*/
class PointWeights
{
public:
  PointWeights( int n, const Rational& p );

  int dimension() const noexcept { return n_; }
  const Rational& bias() const noexcept { return p_; }
  Rational weight( int w ) const;
  /// sum_w profile[w] * p^w (1-p)^(n-w)
  Rational evaluate( std::span<const std::uint64_t> profile ) const;
  /// Same sum, scaled by the common denominator.
  Integer evaluate_scaled( std::span<const std::uint64_t> profile ) const;
  const Integer& denominator() const noexcept { return denominator_; }

private:
  int n_;
  Rational p_;
  std::vector<Integer> numerators_;
  Integer denominator_;
};

Rational mu( const BooleanFunction& f, const Rational& p );
Rational influence( const BooleanFunction& f, int i, const Rational& p );
Rational total_influence( const BooleanFunction& f, const Rational& p );
std::vector<Rational> influences( const BooleanFunction& f, const Rational& p );

struct Edge
{
  std::uint64_t point;  ///< endpoint with x_i = 0
  int coordinate;       ///< i, 1-based
  friend bool operator==( const Edge&, const Edge& ) = default;
};

struct EdgeSet
{
  int n = 0;
  std::vector<Edge> edges;
  std::size_t size() const noexcept { return edges.size(); }
};

/// Edges {x, x xor e_i} with f(x) != f(x xor e_i), ordered by (coordinate, point).
EdgeSet edge_boundary( const BooleanFunction& f );
/// sum over edges of p^s (1-p)^(n-1-s), s = sum_{j != i} x_j.
Rational boundary_measure( const EdgeSet& e, const Rational& p );
std::uint64_t boundary_size( const BooleanFunction& f );

/// Dense integer polynomial in p; coefficient k multiplies p^k.
class MeasurePolynomial
{
public:
  MeasurePolynomial() = default;
  explicit MeasurePolynomial( std::vector<Integer> coefficients );

  const std::vector<Integer>& coefficients() const noexcept { return coefficients_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>( coefficients_.size() ) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }

  Rational evaluate( const Rational& p ) const;
  MeasurePolynomial derivative() const;
  std::string to_string() const;

  friend MeasurePolynomial operator+( const MeasurePolynomial& a, const MeasurePolynomial& b );
  friend MeasurePolynomial operator-( const MeasurePolynomial& a, const MeasurePolynomial& b );
  friend bool operator==( const MeasurePolynomial& a, const MeasurePolynomial& b )
  {
    return a.coefficients_ == b.coefficients_;
  }

  /// sum_w profile[w] p^w (1-p)^(n-w) expanded in the monomial basis.
  static MeasurePolynomial from_weight_profile( int n, std::span<const std::uint64_t> profile );

private:
  void trim();
  std::vector<Integer> coefficients_;
};

MeasurePolynomial measure_polynomial( const BooleanFunction& f );
MeasurePolynomial influence_polynomial( const BooleanFunction& f );

/// d/dp mu_p(f) - I^p[f]; zero for every monotone f. Throws
/// std::invalid_argument on non-monotone input.
MeasurePolynomial margulis_russo_residual( const BooleanFunction& f );

} // namespace cubeiso
