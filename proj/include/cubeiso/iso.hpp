#pragma once

#include "cubeiso/cube.hpp"
#include "cubeiso/lex.hpp"
#include "cubeiso/measure.hpp"
#include "cubeiso/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cubeiso
{

// ---------------------------------------------------------------------------
// Weak biased inequality  p I^p[f] >= mu_p(f) log_p mu_p(f)
// ---------------------------------------------------------------------------

struct DeficitReport
{
  Rational mu;
  Rational total_influence;
  Real lhs = 0;            ///< p I ln(1/p)
  Real rhs = 0;            ///< mu ln(1/mu)
  Real epsilon = 0;        ///< p I / mu - log_p mu, 0 when mu = 0
  Real epsilon_prime = 0;  ///< epsilon ln(1/p)
  /// p > 1/2 and f not monotone: no inequality is claimed.
  bool advisory = false;

  bool holds( Real tol = kDefaultTolerance ) const { return epsilon >= -tol; }
};

DeficitReport weak_biased_check( const BooleanFunction& f, const Rational& p );
/// Sweep form; `weights` must match f's dimension.
DeficitReport weak_biased_check( const BooleanFunction& f, const PointWeights& weights );

/// mu * epsilon = p I - mu log_p mu, well defined at mu = 0.
Real scaled_excess( const Rational& mu, const Rational& total_influence, const Rational& p );

struct RestrictionStats
{
  int coordinate = 0;
  Rational p;
  Rational mu;
  Rational total_influence;
  Rational mu_minus;   ///< mu_p(f_{i->0})
  Rational mu_plus;    ///< mu_p(f_{i->1})
  Rational inf_i;      ///< I_i^p[f]
  Rational inf_minus;  ///< I^p[f_{i->0}]
  Rational inf_plus;   ///< I^p[f_{i->1}]
  Real epsilon = 0;
  Real eps_minus = 0;
  Real eps_plus = 0;
  /// mu eps - p mu+ eps+ - (1-p) mu- eps-
  Real eps_i_prime = 0;
  /// eps_i_prime minus [F or H](mu+, mu-) - G(mu+, mu-) + p (I_i - |mu+ - mu-|)
  Real identity_residual = 0;
  /// true when mu- <= mu+ and the F form applies
  bool uses_F = true;

  /// p mu+ + (1-p) mu- == mu, exactly.
  bool measure_split_exact() const;
  /// I == I_i + p I+ + (1-p) I-, exactly.
  bool influence_split_exact() const;
};

RestrictionStats restriction_stats( const BooleanFunction& f, int i, const Rational& p );

// ---------------------------------------------------------------------------
// Coordinate dichotomy: each coordinate looks like a fixed or a free
// coordinate of a subcube, up to a constant c2.
// ---------------------------------------------------------------------------

enum class DichotomyRegime
{
  ModerateBias,  ///< e^-2 < p <= 1/2, any f: bounds on I_i and min(mu-, mu+)
  SmallBias,     ///< p <= e^-2, any f: bounds on p I_i and mu-
  Monotone,      ///< p > 1/2, monotone f: bounds on p I_i and mu-
  None           ///< p > 1/2, non-monotone f: nothing is claimed
};

enum class DichotomyCase
{
  SmallInfluence,    ///< Case (1)
  SmallRestriction,  ///< Case (2)
  Both,
  Neither
};

const char* to_string( DichotomyRegime regime );
const char* to_string( DichotomyCase c );

struct CoordinateClass
{
  int coordinate = 0;
  DichotomyCase classification = DichotomyCase::Neither;
  Real required_case1 = 0;  ///< smallest c2 for which Case (1) holds
  Real required_case2 = 0;  ///< smallest c2 for which Case (2) holds
};

struct DichotomyReport
{
  DichotomyRegime regime = DichotomyRegime::None;
  Real epsilon = 0;
  std::vector<CoordinateClass> coordinates;

  /// Smallest c2 making every coordinate fall into some case.
  Real required_c2() const;
};

DichotomyReport coordinate_dichotomy( const BooleanFunction& f, const Rational& p, Real c2,
                                      Real tol = kDefaultTolerance );

// ---------------------------------------------------------------------------
// Stability: distance to the nearest subcube.
// ---------------------------------------------------------------------------

struct StabilityRecord
{
  Subcube best_subcube;
  Rational distance;     ///< mu_p(f xor 1_S)
  Rational delta_exact;  ///< distance / mu_p(f)
  Real delta = 0;
  Real epsilon_prime = 0;
  /// delta ln(1/eps') / eps'; 0 for subcubes, NaN when not applicable
  Real ratio = 0;
  bool unique = true;  ///< the minimum distance is attained once
  bool applicable = true;
};

/// Subcube indicators of one dimension, in tie-break order.
class SubcubeCatalog
{
public:
  SubcubeCatalog( int n, bool monotone_only );
  int dimension() const noexcept { return n_; }
  bool monotone_only() const noexcept { return monotone_only_; }
  const std::vector<Subcube>& subcubes() const noexcept { return subcubes_; }
  const std::vector<BooleanFunction>& indicators() const noexcept { return indicators_; }

private:
  int n_;
  bool monotone_only_;
  std::vector<Subcube> subcubes_;
  std::vector<BooleanFunction> indicators_;
};

/// Exhaustive minimization of mu_p(f xor 1_S); ties go to fewer fixed
/// coordinates, then to the lexicographically smallest pattern.
/// Throws std::domain_error when mu_p(f) = 0.
StabilityRecord nearest_subcube( const BooleanFunction& f, const Rational& p, bool monotone_only = false );
StabilityRecord nearest_subcube( const BooleanFunction& f, const PointWeights& weights, const SubcubeCatalog& catalog );

/// nearest_subcube plus the empirical stability constant. Not applicable
/// unless delta = 0 or 0 < eps' < 1.
StabilityRecord stability_ratio( const BooleanFunction& f, const Rational& p, bool monotone_only = false );
StabilityRecord stability_ratio( const BooleanFunction& f, const PointWeights& weights, const SubcubeCatalog& catalog );

// ---------------------------------------------------------------------------
// Full edge-isoperimetric inequality and its biased monotone analogue.
// ---------------------------------------------------------------------------

struct FullIsoResult
{
  std::uint64_t boundary = 0;
  std::uint64_t lex_boundary = 0;
  bool ok = false;
};

FullIsoResult full_iso_check( const BooleanFunction& f );

inline constexpr int kBruteForceMaxDimension = 4;

/// Minimum |edge boundary| over all families of size m, by enumerating every
/// m-subset of the cube. Throws std::invalid_argument for n > 4.
std::uint64_t brute_force_min_boundary( int n, std::uint64_t m );

struct MonotoneFullResult
{
  Rational lhs;   ///< I^p[f]
  Rational rhs;   ///< I^p of the lex family at the solved lambda
  Rational tail;  ///< allowance for a truncated lambda
  bool ok = false;
  /// Empty for constant functions, where both sides vanish.
  std::optional<BinaryExpansion> lambda;
  Rational residual;
};

/// Throws std::invalid_argument on non-monotone input.
MonotoneFullResult monotone_full_check( const BooleanFunction& f, const Rational& p,
                                        int depth = kDefaultLambdaDepth );

/// mu_p(f) <= mu_p(L) implies mu_q(f) <= mu_q(L) for monotone f and q < p.
/// Throws std::invalid_argument unless 0 < q < p < 1.
CheckOutcome lex_measure_domination_check( const BooleanFunction& f, const BinaryExpansion& b, const Rational& p,
                                           const Rational& q );

/// Moves every 1-point x with x_i = 0 to x xor e_i when that point is a 0-point.
BooleanFunction monotonize_step( const BooleanFunction& f, int i );
/// Applies steps n, n-1, ..., 1 and repeats until nothing moves.
BooleanFunction monotonize( const BooleanFunction& f );

// ---------------------------------------------------------------------------
// Families showing the stability bounds are sharp.
// ---------------------------------------------------------------------------

/// {x_[t] = 1} u {x_([t+s]\{t}) = 1, x_t = 0} \ {x_([t+s]\{t+1}) = 1, x_(t+1) = 0}
BooleanFunction family_A( int n, int t, int s );
/// {x_[t] = 1} u {x_([t+s]\{t}) = 1, x_t = 0}
BooleanFunction family_B( int n, int t, int s );

struct SharpnessFormulas
{
  Rational mu;
  Rational total_influence;
  std::vector<Rational> influences;  ///< coordinates 1..n
};

/// Closed forms for family A: mu = p^t and the per-coordinate table.
SharpnessFormulas family_A_formulas( int n, int t, int s, const Rational& p );
/// Closed forms for family B.
SharpnessFormulas family_B_formulas( int n, int t, int s, const Rational& p );
/// 2 (s-1) (1-p) p^(s-1), the excess of family A.
Rational family_A_epsilon( int s, const Rational& p );

} // namespace cubeiso
