#pragma once

#include "cubeiso/cube.hpp"
#include "cubeiso/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cubeiso
{

/// S > T iff min(S xor T) lies in S; sets are bitmasks with element i at bit i-1.
bool lex_greater( std::uint64_t s, std::uint64_t t );

/// The m largest subsets of [n] in lexicographic order, as an indicator.
BooleanFunction lex_family( int n, std::uint64_t m );

struct KUniformFamily
{
  int n = 0;
  int k = 0;
  std::vector<std::uint32_t> members;  ///< sorted, unique
  std::size_t size() const noexcept { return members.size(); }
};

/// Validates that every member is a k-subset of [n]; sorts and deduplicates.
KUniformFamily make_k_uniform( int n, int k, std::vector<std::uint32_t> members );

KUniformFamily upper_shadow( const KUniformFamily& a );
KUniformFamily iterated_upper_shadow( const KUniformFamily& a, int i );

/// The m largest k-subsets of [n] in lexicographic order.
KUniformFamily lex_layer_segment( int n, int k, std::uint64_t m );
/// |upper_shadow(lex_layer_segment(n, k, m))|, the Kruskal-Katona minimum.
std::uint64_t kk_min_upper_shadow( int n, int k, std::uint64_t m );

/*! \brief A finite prefix i_1 < i_2 < ... of the binary digits of some
  lambda in (0,1), lambda = sum_j 2^(-i_j).

  `exact` marks the complete (terminating) expansion. A truncated expansion
  still names a concrete finite family: the union of its stored cylinders.
*/
class BinaryExpansion
{
public:
  BinaryExpansion() = default;
  static BinaryExpansion from_digits( std::vector<int> digits, bool exact = true );
  /// lambda = s / 2^d in (0,1); always exact.
  static BinaryExpansion from_dyadic( const Rational& lambda );
  /// "1,2" -> digits {1, 2}, exact.
  static BinaryExpansion parse( std::string_view text );

  const std::vector<int>& digits() const noexcept { return digits_; }
  bool exact() const noexcept { return exact_; }
  int depth() const noexcept { return static_cast<int>( digits_.size() ); }
  int max_digit() const noexcept { return digits_.back(); }
  /// Sum of the stored digits' weights.
  Rational value() const;
  std::string to_string() const;

  friend bool operator==( const BinaryExpansion&, const BinaryExpansion& ) = default;

private:
  std::vector<int> digits_;
  bool exact_ = true;
};

/// The family of the stored digits on n >= max_digit coordinates.
BooleanFunction realize( const BinaryExpansion& b, int n );

struct LimitValue
{
  Rational value;
  Rational tail_bound;  ///< 0 for exact expansions
};

/// Sum of the cylinder measures p^(i_j - j + 1) (1-p)^(j-1).
LimitValue limit_lex_measure( const BinaryExpansion& b, const Rational& p );
/// Total influence of the stored cylinders' family, plus a bound on the
/// distance to the limit family's influence when truncated.
LimitValue limit_lex_influence( const BinaryExpansion& b, const Rational& p );

/// Exact p-biased measure and total influence of the digits' finite family,
/// by a pivotality recursion over the digit positions (any max digit).
std::pair<Rational, Rational> finite_lex_measure_and_influence( const BinaryExpansion& b, const Rational& p );

inline constexpr int kDefaultLambdaDepth = 64;

struct LambdaSolution
{
  BinaryExpansion expansion;
  Rational residual;  ///< target minus the measure of the stored cylinders
};

/// Greedy digit selection; throws std::domain_error unless 0 < target < 1.
LambdaSolution lambda_from_measure( const Rational& target, const Rational& p, int max_depth = kDefaultLambdaDepth );

/// |L^(k)| for the digits' family on n coordinates.
std::uint64_t lex_layer_size( const BinaryExpansion& b, int n, int k );

enum class CheckOutcome
{
  Holds,
  Fails,
  HypothesisNotMet
};

const char* to_string( CheckOutcome outcome );

/// Layer domination between a monotone family and the digits' lex family:
/// |F^(k0)| <= |L^(k0)| forces |F^(k)| <= |L^(k)| whenever
/// n > k0 > k >= j >= 1 and n - k0 >= j, j the largest digit.
CheckOutcome layer_domination_check( const BooleanFunction& f, const BinaryExpansion& b, int k0, int k );

} // namespace cubeiso
