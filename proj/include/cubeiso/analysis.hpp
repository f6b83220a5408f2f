#pragma once

#include "cubeiso/rational.hpp"

#include <vector>

namespace cubeiso
{

/// x log_p x with the convention 0 log_p 0 = 0.
Real x_log_base( Real x, Real p );

struct LemmaPoint
{
  Real x = 0;
  Real y = 0;
  Real p = 0;
};

struct LemmaValues
{
  Real F = 0;  ///< p x log_p x + (1-p) y log_p y + p x - p y
  Real G = 0;  ///< (p x + (1-p) y) log_p (p x + (1-p) y)
  Real H = 0;  ///< p x log_p x + (1-p) y log_p y + p y - p x
};

LemmaValues eval_lemma_functions( const LemmaPoint& pt );

/// K(p) = p - (1-p) log_p (1-p)
Real eval_K( Real p );
/// alpha(p) = K(p) ln(1/p) = -p ln p + (1-p) ln(1-p)
Real eval_alpha( Real p );
/// Third derivative of alpha: 1/x^2 + 1/(1-x)^2.
Real alpha_third_derivative( Real x );

/// Closed-form partial derivatives at an interior point.
struct LemmaPartials
{
  Real dF_dx = 0;  ///< p log_p(p x) + p / ln p
  Real dG_dx = 0;  ///< p log_p(p x + (1-p) y) + p / ln p
  Real dH_dy = 0;  ///< (1-p) log_p y + p + (1-p) / ln p
  Real dG_dy = 0;  ///< (1-p) log_p(p x + (1-p) y) + (1-p) / ln p
};

LemmaPartials eval_partials( const LemmaPoint& pt );

struct LemmaViolation
{
  int branch = 0;
  Real x = 0;
  Real y = 0;
  Real slack = 0;
};

struct ScanReport
{
  std::size_t points_checked = 0;
  std::vector<LemmaViolation> violations;
  /// Branches evaluated outside their claimed parameter range; their
  /// violations are informational only.
  std::vector<int> advisory_branches;

  /// Violations on branches that carry a claim.
  std::size_t contract_violations() const;
};

/*! \brief Grid check of F >= G (branch 1, x >= y) and H >= G (branch 2,
  y >= x, claimed for p <= 1/2).

  The grid is {0, 1/(g-1), ..., 1}^2. With p > 1/2 branch 2 still runs but
  is marked advisory.
*/
ScanReport scan_lemma21( Real p, int grid_size, Real tol = kDefaultTolerance );

/*! \brief Grid check of the three lower bounds on F - G and H - G.

  Branch 1 (x >= y, any p):      F - G >= p (x-y) log_p(px / (px + (1-p)y))
  Branch 2 (y >= x, p <= 1/2):   H - G >= (1-p)(y-x) log_p((1-p)y / (px + (1-p)y))
  Branch 3 (y >= x, p <= e^-2):  H - G >= p (y-x) / 2
  Branches outside their range of p are skipped.
*/
ScanReport scan_basic_functions( Real p, int grid_size, Real tol = kDefaultTolerance );

struct PartialsReport
{
  std::size_t points_checked = 0;
  Real max_error = 0;              ///< closed form vs central differences
  Real min_dF_minus_dG = 0;        ///< min over the grid of dF/dx - dG/dx
  bool alpha_third_positive = true;  ///< on the interior grid of (0, 1/2)
};

/// Interior grid {1/(g+1), ..., g/(g+1)}^2, central differences with step 1e-6.
PartialsReport check_partials( Real p, int grid_size );

struct KScanReport
{
  std::size_t points_checked = 0;
  Real min_slack = 0;
  std::size_t violations = 0;
};

/// K(p) >= 0 on {k/(2m) : k = 1..m}.
KScanReport scan_K_nonnegative( int points, Real tol = kDefaultTolerance );
/// K(p) >= p/2 on {k e^-2 / m : k = 1..m}.
KScanReport scan_K_half_p( int points, Real tol = kDefaultTolerance );

} // namespace cubeiso
