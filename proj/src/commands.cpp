#include "cubeiso/commands.hpp"

#include "cubeiso/analysis.hpp"
#include "cubeiso/cube.hpp"
#include "cubeiso/iso.hpp"
#include "cubeiso/lex.hpp"
#include "cubeiso/measure.hpp"
#include "cubeiso/parallel.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace cubeiso
{

namespace
{

constexpr Real kInfinity = std::numeric_limits<Real>::infinity();

void require_dimension( int n, int low, int high, const char* scope )
{
  if ( n < low )
  {
    throw CommandError( "n must be at least " + std::to_string( low ) );
  }
  if ( n > high )
  {
    throw CommandError( std::string( "scope too large: " ) + scope + " needs n <= " + std::to_string( high ) );
  }
}

void require_bias( const Rational& p )
{
  if ( p <= 0 || p >= 1 )
  {
    throw CommandError( "p must lie strictly between 0 and 1" );
  }
}

std::uint64_t all_functions_count( int n )
{
  return std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << n );
}

/// Common-ones and common-zeros test: f is the indicator of a subcube.
bool is_subcube( const BooleanFunction& f, bool monotone_only )
{
  const std::uint64_t count = f.count();
  if ( count == 0 )
    return false;
  const int n = f.dimension();
  std::uint64_t all_one = ( std::uint64_t{ 1 } << n ) - 1, all_zero = all_one;
  for ( std::uint64_t x = 0; x < f.num_points(); ++x )
  {
    if ( f( x ) )
    {
      all_one &= x;
      all_zero &= ~x;
    }
  }
  if ( monotone_only && all_zero != 0 )
    return false;
  const int fixed = std::popcount( all_one ) + std::popcount( all_zero );
  return count == ( std::uint64_t{ 1 } << ( n - fixed ) );
}

/// Keeps the smallest value and the first index attaining it.
struct MinTracker
{
  Real value = kInfinity;
  std::uint64_t index = 0;

  void offer( Real v, std::uint64_t i )
  {
    if ( v < value || ( v == value && i < index ) )
    {
      value = v;
      index = i;
    }
  }
  void merge( const MinTracker& other ) { offer( other.value, other.index ); }
};

struct MaxTracker
{
  Real value = -kInfinity;
  std::uint64_t index = 0;

  void offer( Real v, std::uint64_t i )
  {
    if ( v > value || ( v == value && i < index ) )
    {
      value = v;
      index = i;
    }
  }
  void merge( const MaxTracker& other ) { offer( other.value, other.index ); }
};

std::string format_real( Real v, int precision = 12 )
{
  std::ostringstream out;
  out << std::setprecision( precision ) << static_cast<double>( v );
  return out.str();
}

// ---------------------------------------------------------------------------

struct WeakAccumulator
{
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::uint64_t advisory_cases = 0;
  std::uint64_t advisory_violations = 0;
  std::uint64_t equality_candidates = 0;
  Real max_equality_abs_epsilon = 0;
  MinTracker min_epsilon;

  void merge( const WeakAccumulator& o )
  {
    cases += o.cases;
    violations += o.violations;
    advisory_cases += o.advisory_cases;
    advisory_violations += o.advisory_violations;
    equality_candidates += o.equality_candidates;
    max_equality_abs_epsilon = std::max( max_equality_abs_epsilon, o.max_equality_abs_epsilon );
    min_epsilon.merge( o.min_epsilon );
  }

  void add( const BooleanFunction& f, const PointWeights& weights, std::uint64_t index, Real tol )
  {
    const auto r = weak_biased_check( f, weights );
    ++cases;
    if ( r.advisory )
    {
      ++advisory_cases;
      if ( !r.holds( tol ) )
        ++advisory_violations;
      return;
    }
    if ( !r.holds( tol ) )
      ++violations;
    min_epsilon.offer( r.epsilon, index );
    // Subcubes (monotone ones unless p = 1/2) and the empty set are the equality cases.
    const bool any_subcube = weights.bias() == Rational( 1, 2 );
    if ( f.is_zero() || is_subcube( f, !any_subcube ) )
    {
      ++equality_candidates;
      max_equality_abs_epsilon = std::max( max_equality_abs_epsilon, std::fabs( r.epsilon ) );
    }
  }
};

} // namespace

Report cmd_verify_weak( int n, const Rational& p, const std::string& scope, const std::string& input, unsigned jobs,
                        Real tol )
{
  require_bias( p );
  Report report;
  report.check_name = "verify-weak";
  report.set_rational_parameter( "p", p );
  report.set_parameter( "scope", scope );
  report.set_parameter( "tol", real_to_json( tol ) );

  WeakAccumulator acc;
  std::vector<BooleanFunction> listed;
  if ( scope == "all" )
  {
    require_dimension( n, 1, 4, "scope=all" );
    const PointWeights weights( n, p );
    acc = parallel_reduce(
        all_functions_count( n ), jobs, WeakAccumulator{},
        [&]( WeakAccumulator& a, std::size_t begin, std::size_t end ) {
          for ( std::size_t idx = begin; idx < end; ++idx )
            a.add( BooleanFunction::from_word( n, idx ), weights, idx, tol );
        },
        []( WeakAccumulator& a, WeakAccumulator&& b ) { a.merge( b ); } );
  }
  else if ( scope == "monotone" || scope == "file" )
  {
    if ( scope == "monotone" )
    {
      require_dimension( n, 1, 5, "scope=monotone" );
      listed = enumerate_monotone( n );
    }
    else
    {
      if ( input.empty() )
        throw CommandError( "scope=file needs --input" );
      try
      {
        listed.push_back( read_truth_table_file( input ) );
      }
      catch ( const std::exception& e )
      {
        throw CommandError( std::string( "malformed input file: " ) + e.what() );
      }
      n = listed.front().dimension();
    }
    const PointWeights weights( n, p );
    acc = parallel_reduce(
        listed.size(), jobs, WeakAccumulator{},
        [&]( WeakAccumulator& a, std::size_t begin, std::size_t end ) {
          for ( std::size_t idx = begin; idx < end; ++idx )
            a.add( listed[idx], weights, idx, tol );
        },
        []( WeakAccumulator& a, WeakAccumulator&& b ) { a.merge( b ); } );
  }
  else
  {
    throw CommandError( "unknown scope '" + scope + "' (all|monotone|file)" );
  }
  report.set_parameter( "n", n );

  report.counters["cases"] = acc.cases;
  report.counters["violations"] = acc.violations;
  report.counters["advisory_cases"] = acc.advisory_cases;
  report.counters["advisory_violations"] = acc.advisory_violations;
  report.counters["equality_candidates"] = acc.equality_candidates;
  report.set_extremum( "max_abs_epsilon_equality_candidates", acc.max_equality_abs_epsilon );
  if ( acc.min_epsilon.value < kInfinity )
  {
    report.set_extremum( "min_epsilon", acc.min_epsilon.value );
    const auto f = scope == "all" ? BooleanFunction::from_word( n, acc.min_epsilon.index )
                                  : listed[acc.min_epsilon.index];
    report.set_extremum( "min_epsilon_table", f.to_bits() );
  }
  report.passed = acc.violations == 0;
  return report;
}

Report cmd_full_iso( int n, unsigned jobs )
{
  require_dimension( n, 1, 4, "full-iso" );
  Report report;
  report.check_name = "full-iso";
  report.set_parameter( "n", n );

  const std::uint64_t points = std::uint64_t{ 1 } << n;
  std::vector<std::uint64_t> lex_boundary( points + 1 );
  for ( std::uint64_t m = 0; m <= points; ++m )
    lex_boundary[m] = boundary_size( lex_family( n, m ) );

  struct Acc
  {
    std::uint64_t families = 0, violations = 0, equality = 0;
  };
  const auto acc = parallel_reduce(
      all_functions_count( n ), jobs, Acc{},
      [&]( Acc& a, std::size_t begin, std::size_t end ) {
        for ( std::size_t idx = begin; idx < end; ++idx )
        {
          const auto f = BooleanFunction::from_word( n, idx );
          const auto r = full_iso_check( f );
          ++a.families;
          if ( !r.ok || r.lex_boundary != lex_boundary[f.count()] )
            ++a.violations;
          if ( r.boundary == r.lex_boundary )
            ++a.equality;
        }
      },
      []( Acc& a, Acc&& b ) {
        a.families += b.families;
        a.violations += b.violations;
        a.equality += b.equality;
      } );

  std::uint64_t mismatches = 0;
  nlohmann::json minima = nlohmann::json::array();
  for ( std::uint64_t m = 0; m <= points; ++m )
  {
    const auto brute = brute_force_min_boundary( n, m );
    minima.push_back( brute );
    if ( brute != lex_boundary[m] )
      ++mismatches;
  }
  report.counters["families"] = acc.families;
  report.counters["violations"] = acc.violations;
  report.counters["equality_cases"] = acc.equality;
  report.counters["brute_force_mismatches"] = mismatches;
  report.set_extremum( "min_boundary_by_size", minima );
  report.passed = acc.violations == 0 && mismatches == 0;
  return report;
}

Report cmd_kk( int n, int k, unsigned jobs )
{
  require_dimension( n, 1, 20, "kk" );
  if ( k < 0 || k >= n )
    throw CommandError( "kk needs 0 <= k < n" );
  std::vector<std::uint32_t> layer;
  for ( std::uint32_t x = 0; x < ( 1u << n ); ++x )
  {
    if ( std::popcount( x ) == k )
      layer.push_back( x );
  }
  if ( layer.size() > 20 )
    throw CommandError( "scope too large: kk enumerates 2^C(n,k) families, needs C(n,k) <= 20" );

  Report report;
  report.check_name = "kk";
  report.set_parameter( "n", n );
  report.set_parameter( "k", k );

  std::vector<std::uint64_t> minimum( layer.size() + 1 );
  for ( std::size_t m = 0; m <= layer.size(); ++m )
    minimum[m] = kk_min_upper_shadow( n, k, m );

  struct Acc
  {
    std::uint64_t families = 0, violations = 0, equality = 0;
  };
  const auto acc = parallel_reduce(
      std::size_t{ 1 } << layer.size(), jobs, Acc{},
      [&]( Acc& a, std::size_t begin, std::size_t end ) {
        for ( std::size_t mask = begin; mask < end; ++mask )
        {
          std::vector<std::uint32_t> members;
          for ( std::size_t j = 0; j < layer.size(); ++j )
          {
            if ( ( mask >> j ) & 1u )
              members.push_back( layer[j] );
          }
          const auto m = members.size();
          const auto shadow = upper_shadow( make_k_uniform( n, k, std::move( members ) ) ).size();
          ++a.families;
          if ( shadow < minimum[m] )
            ++a.violations;
          if ( shadow == minimum[m] )
            ++a.equality;
        }
      },
      []( Acc& a, Acc&& b ) {
        a.families += b.families;
        a.violations += b.violations;
        a.equality += b.equality;
      } );

  report.counters["families"] = acc.families;
  report.counters["violations"] = acc.violations;
  report.counters["equality_cases"] = acc.equality;
  report.set_extremum( "min_upper_shadow_by_size", minimum );
  report.passed = acc.violations == 0;
  return report;
}

Report cmd_monotone_full( int n, const Rational& p, int depth, unsigned jobs )
{
  require_dimension( n, 1, 5, "monotone-full" );
  require_bias( p );
  if ( depth < 1 )
    throw CommandError( "depth must be at least 1" );
  Report report;
  report.check_name = "monotone-full";
  report.set_parameter( "n", n );
  report.set_rational_parameter( "p", p );
  report.set_parameter( "depth", depth );

  const auto family = enumerate_monotone( n );
  struct Acc
  {
    std::uint64_t families = 0, violations = 0, exact = 0, truncated = 0, equality = 0;
    MinTracker min_slack;
    Real max_tail = 0;
  };
  const auto acc = parallel_reduce(
      family.size(), jobs, Acc{},
      [&]( Acc& a, std::size_t begin, std::size_t end ) {
        for ( std::size_t idx = begin; idx < end; ++idx )
        {
          const auto r = monotone_full_check( family[idx], p, depth );
          ++a.families;
          if ( !r.ok )
            ++a.violations;
          if ( !r.lambda || r.residual == 0 )
            ++a.exact;
          else
            ++a.truncated;
          if ( r.lhs == r.rhs )
            ++a.equality;
          a.min_slack.offer( to_real( Rational( r.lhs - r.rhs + r.tail ) ), idx );
          a.max_tail = std::max( a.max_tail, to_real( r.tail ) );
        }
      },
      []( Acc& a, Acc&& b ) {
        a.families += b.families;
        a.violations += b.violations;
        a.exact += b.exact;
        a.truncated += b.truncated;
        a.equality += b.equality;
        a.min_slack.merge( b.min_slack );
        a.max_tail = std::max( a.max_tail, b.max_tail );
      } );

  report.counters["families"] = acc.families;
  report.counters["violations"] = acc.violations;
  report.counters["exact_lambda"] = acc.exact;
  report.counters["truncated_lambda"] = acc.truncated;
  report.counters["equality_cases"] = acc.equality;
  report.set_extremum( "min_slack", acc.min_slack.value );
  report.set_extremum( "min_slack_table", family[acc.min_slack.index].to_bits() );
  report.set_extremum( "max_tail", acc.max_tail );

  std::uint64_t union_failures = 0;
  if ( n >= 2 )
  {
    const auto r = monotone_full_check( dictatorship( n, 1 ) | dictatorship( n, 2 ), p, depth );
    if ( !( r.residual == 0 && r.lhs == r.rhs ) )
      ++union_failures;
    report.set_extremum( "two_dictator_union_lambda", r.lambda ? r.lambda->to_string() : std::string() );
  }
  report.counters["two_dictator_union_failures"] = union_failures;
  report.passed = acc.violations == 0 && union_failures == 0;
  return report;
}

Report cmd_stability_scan( int n, const Rational& p, Real eps_max, bool monotone_only, unsigned jobs, Real tol )
{
  require_bias( p );
  if ( monotone_only )
    require_dimension( n, 1, 5, "stability-scan --monotone-only" );
  else
    require_dimension( n, 1, 4, "stability-scan" );
  if ( !( eps_max > 0 ) )
    throw CommandError( "eps-max must be positive" );

  Report report;
  report.check_name = "stability-scan";
  report.set_parameter( "n", n );
  report.set_rational_parameter( "p", p );
  report.set_parameter( "eps_max", real_to_json( eps_max ) );
  report.set_parameter( "monotone_only", monotone_only );

  std::vector<BooleanFunction> listed;
  if ( monotone_only )
    listed = enumerate_monotone( n );
  const std::uint64_t count = monotone_only ? listed.size() : all_functions_count( n );
  auto function_at = [&]( std::uint64_t idx ) {
    return monotone_only ? listed[idx] : BooleanFunction::from_word( n, idx );
  };

  const PointWeights weights( n, p );
  const SubcubeCatalog catalog( n, monotone_only );
  // The direction claim for near-extremal functions is stated for p bounded away from 1/2.
  const bool direction_scan = p <= Rational( 3, 10 );

  struct Acc
  {
    std::uint64_t functions = 0, in_window = 0, nonunique = 0, nonfinite = 0;
    std::uint64_t monotone_nearest = 0, nonmonotone_nearest = 0;
    MaxTracker max_ratio;
    Real max_delta = 0;
  };
  const auto acc = parallel_reduce(
      count, jobs, Acc{},
      [&]( Acc& a, std::size_t begin, std::size_t end ) {
        for ( std::size_t idx = begin; idx < end; ++idx )
        {
          const auto f = function_at( idx );
          ++a.functions;
          if ( f.is_zero() )
            continue;
          const auto deficit = weak_biased_check( f, weights );
          if ( !( deficit.epsilon_prime > tol && deficit.epsilon_prime <= eps_max ) )
            continue;
          ++a.in_window;
          const auto r = stability_ratio( f, weights, catalog );
          if ( !std::isfinite( r.ratio ) )
          {
            ++a.nonfinite;
            continue;
          }
          a.max_ratio.offer( r.ratio, idx );
          a.max_delta = std::max( a.max_delta, r.delta );
          if ( !r.unique )
            ++a.nonunique;
          else if ( direction_scan && r.best_subcube.fixed_count() > 0 )
          {
            if ( r.best_subcube.is_monotone() )
              ++a.monotone_nearest;
            else
              ++a.nonmonotone_nearest;
          }
        }
      },
      []( Acc& a, Acc&& b ) {
        a.functions += b.functions;
        a.in_window += b.in_window;
        a.nonunique += b.nonunique;
        a.nonfinite += b.nonfinite;
        a.monotone_nearest += b.monotone_nearest;
        a.nonmonotone_nearest += b.nonmonotone_nearest;
        a.max_ratio.merge( b.max_ratio );
        a.max_delta = std::max( a.max_delta, b.max_delta );
      } );

  report.counters["functions"] = acc.functions;
  report.counters["in_window"] = acc.in_window;
  report.counters["nonunique_nearest"] = acc.nonunique;
  report.counters["nonfinite_ratios"] = acc.nonfinite;
  if ( direction_scan )
  {
    report.counters["unique_proper_nearest_monotone"] = acc.monotone_nearest;
    report.counters["unique_proper_nearest_nonmonotone"] = acc.nonmonotone_nearest;
  }
  if ( acc.in_window > acc.nonfinite )
  {
    const auto f = function_at( acc.max_ratio.index );
    const auto best = stability_ratio( f, weights, catalog );
    report.set_extremum( "max_ratio", acc.max_ratio.value );
    report.set_extremum( "max_ratio_table", f.to_bits() );
    report.set_extremum( "max_ratio_subcube", best.best_subcube.to_string() );
    report.set_extremum( "max_ratio_epsilon_prime", best.epsilon_prime );
    report.set_extremum( "max_delta", acc.max_delta );
  }
  report.passed = acc.nonfinite == 0;
  return report;
}

Report cmd_sharpness( int t, int s, const Rational& p, int n, Real tol )
{
  require_bias( p );
  if ( s < 2 || t < 1 )
    throw CommandError( "sharpness needs s >= 2 and t >= 1" );
  if ( n == 0 )
    n = t + s;
  if ( n < t + s )
    throw CommandError( "sharpness needs n >= t + s" );
  require_dimension( n, 1, 8, "sharpness" );

  Report report;
  report.check_name = "sharpness";
  report.set_parameter( "t", t );
  report.set_parameter( "s", s );
  report.set_parameter( "n", n );
  report.set_rational_parameter( "p", p );

  const Real ln_inv_p = -ln( p );
  std::uint64_t mismatches = 0;
  std::uint64_t bound_violations = 0;

  // Family A: mu = p^t, so log_p mu = t and the excess is rational.
  const auto a = family_A( n, t, s );
  const auto fa = family_A_formulas( n, t, s, p );
  const Rational mu_a = mu( a, p );
  const Rational inf_a = total_influence( a, p );
  const auto infl_a = influences( a, p );
  mismatches += mu_a != fa.mu;
  mismatches += inf_a != fa.total_influence;
  for ( int i = 0; i < n; ++i )
    mismatches += infl_a[i] != fa.influences[i];
  const Rational eps_a = p * inf_a / mu_a - t;
  const Rational eps_a_formula = family_A_epsilon( s, p );
  mismatches += eps_a != eps_a_formula;
  const auto near_a = nearest_subcube( a, p );
  const Rational delta_formula = eps_a_formula / ( s - 1 );
  mismatches += near_a.delta_exact != delta_formula;

  const Real eps_prime = to_real( eps_a ) * ln_inv_p;
  const Real delta = near_a.delta;
  const Real ratio = eps_prime > 0 && eps_prime < 1 ? delta * std::log( 1 / eps_prime ) / eps_prime
                                                     : std::numeric_limits<Real>::quiet_NaN();
  const Real lower_bound = eps_prime / ( 2 * std::log( 2 / eps_prime ) );
  const Real normalized_bound = std::log( 1 / eps_prime ) / ( 2 * std::log( 2 / eps_prime ) );
  // The lower bound on delta is derived for p <= 1/2.
  const bool bound_claimed = p <= Rational( 1, 2 );
  if ( bound_claimed && delta < lower_bound - tol )
    ++bound_violations;

  report.set_rational_extremum( "A_mu", mu_a );
  report.set_rational_extremum( "A_total_influence", inf_a );
  nlohmann::json table = nlohmann::json::array();
  for ( const auto& v : infl_a )
    table.push_back( format_rational( v ) );
  report.set_extremum( "A_influences", table );
  report.set_rational_extremum( "A_epsilon", eps_a );
  report.set_extremum( "A_epsilon_prime", eps_prime );
  report.set_rational_extremum( "A_delta", near_a.delta_exact );
  report.set_extremum( "A_nearest_subcube", near_a.best_subcube.to_string() );
  report.set_extremum( "A_ratio", ratio );
  report.set_extremum( "A_delta_lower_bound", lower_bound );
  report.set_extremum( "A_ratio_lower_bound", normalized_bound );

  // Family B.
  const auto b = family_B( n, t, s );
  const auto fb = family_B_formulas( n, t, s, p );
  const Rational mu_b = mu( b, p );
  const Rational inf_b = total_influence( b, p );
  const auto infl_b = influences( b, p );
  mismatches += mu_b != fb.mu;
  mismatches += inf_b != fb.total_influence;
  for ( int i = 0; i < n; ++i )
    mismatches += infl_b[i] != fb.influences[i];
  const auto near_b = nearest_subcube( b, p );
  const Rational delta_b_bound = ( 1 - p ) * power( p, static_cast<unsigned>( s - 1 ) ) / 2;
  bound_violations += near_b.delta_exact < delta_b_bound;
  const auto deficit_b = weak_biased_check( b, p );

  report.set_rational_extremum( "B_mu", mu_b );
  report.set_rational_extremum( "B_total_influence", inf_b );
  report.set_extremum( "B_epsilon", deficit_b.epsilon );
  report.set_extremum( "B_epsilon_prime", deficit_b.epsilon_prime );
  report.set_rational_extremum( "B_delta", near_b.delta_exact );
  report.set_rational_extremum( "B_delta_bound", delta_b_bound );
  report.set_extremum( "B_nearest_subcube", near_b.best_subcube.to_string() );

  report.counters["formula_mismatches"] = mismatches;
  report.counters["bound_violations"] = bound_violations;
  report.passed = mismatches == 0 && bound_violations == 0;

  report.notes.push_back( "family A (t=" + std::to_string( t ) + ", s=" + std::to_string( s ) +
                          ", n=" + std::to_string( n ) + ", p=" + format_rational( p ) + ")" );
  report.notes.push_back( "  eps    = " + format_rational( eps_a ) + "  (" + format_real( to_real( eps_a ) ) + ")" );
  report.notes.push_back( "  eps'   = " + format_real( eps_prime ) );
  report.notes.push_back( "  delta  = " + format_rational( near_a.delta_exact ) + "  at S = " +
                          near_a.best_subcube.to_string() );
  report.notes.push_back( "  ratio  = " + format_real( ratio ) + "  (delta ln(1/eps') / eps')" );
  report.notes.push_back( "  delta >= eps' / (2 ln(2/eps')) = " + format_real( lower_bound ) +
                          ( bound_claimed ? ( delta >= lower_bound - tol ? "  holds" : "  FAILS" ) : "  (p > 1/2)" ) );
  report.notes.push_back( "family B: mu = " + format_rational( mu_b ) + ", I = " + format_rational( inf_b ) +
                          ", delta = " + format_rational( near_b.delta_exact ) + " >= " +
                          format_rational( delta_b_bound ) );
  return report;
}

Report cmd_lemma_scan( const Rational& p, int grid, Real tol )
{
  require_bias( p );
  if ( grid < 2 )
    throw CommandError( "grid must be at least 2" );
  if ( grid > 4000 )
    throw CommandError( "scope too large: grid needs <= 4000" );
  const Real pr = to_real( p );
  Report report;
  report.check_name = "lemma-scan";
  report.set_rational_parameter( "p", p );
  report.set_parameter( "grid", grid );
  report.set_parameter( "tol", real_to_json( tol ) );

  constexpr Real kDerivativeTolerance = 1e-5L;
  constexpr int kKPoints = 10000;
  const auto lemma = scan_lemma21( pr, grid, tol );
  const auto basic = scan_basic_functions( pr, grid, tol );
  const auto partials = check_partials( pr, grid );
  const auto k_nonneg = scan_K_nonnegative( kKPoints, tol );
  const auto k_half = scan_K_half_p( kKPoints, tol );

  const auto contract = lemma.contract_violations() + basic.contract_violations();
  const auto advisory = lemma.violations.size() + basic.violations.size() - contract;
  report.counters["lemma_points"] = lemma.points_checked;
  report.counters["basic_points"] = basic.points_checked;
  report.counters["partials_points"] = partials.points_checked;
  report.counters["k_points"] = k_nonneg.points_checked + k_half.points_checked;
  report.counters["violations"] = contract;
  report.counters["advisory_violations"] = advisory;
  report.counters["k_violations"] = k_nonneg.violations + k_half.violations;
  report.set_extremum( "max_derivative_error", partials.max_error );
  report.set_extremum( "min_dF_minus_dG", partials.min_dF_minus_dG );
  report.set_extremum( "alpha_third_positive", nlohmann::json( partials.alpha_third_positive ) );
  report.set_extremum( "min_K", k_nonneg.min_slack );
  report.set_extremum( "min_K_minus_half_p", k_half.min_slack );
  report.passed = contract == 0 && k_nonneg.violations == 0 && k_half.violations == 0 &&
                  partials.max_error <= kDerivativeTolerance && partials.alpha_third_positive;
  return report;
}

Report cmd_russo( int n, unsigned jobs )
{
  require_dimension( n, 1, 5, "russo" );
  Report report;
  report.check_name = "russo";
  report.set_parameter( "n", n );
  const auto family = enumerate_monotone( n );
  struct Acc
  {
    std::uint64_t families = 0, nonzero = 0;
  };
  const auto acc = parallel_reduce(
      family.size(), jobs, Acc{},
      [&]( Acc& a, std::size_t begin, std::size_t end ) {
        for ( std::size_t idx = begin; idx < end; ++idx )
        {
          ++a.families;
          if ( !margulis_russo_residual( family[idx] ).is_zero() )
            ++a.nonzero;
        }
      },
      []( Acc& a, Acc&& b ) {
        a.families += b.families;
        a.nonzero += b.nonzero;
      } );
  report.counters["families"] = acc.families;
  report.counters["nonzero_residuals"] = acc.nonzero;
  report.passed = acc.nonzero == 0;
  return report;
}

Report cmd_dichotomy_scan( int n, const Rational& p, Real eps_max, unsigned jobs, Real tol )
{
  require_dimension( n, 2, 4, "dichotomy-scan" );
  require_bias( p );
  Report report;
  report.check_name = "dichotomy-scan";
  report.set_parameter( "n", n );
  report.set_rational_parameter( "p", p );
  report.set_parameter( "eps_max", real_to_json( eps_max ) );

  const PointWeights weights( n, p );
  struct Acc
  {
    std::uint64_t functions = 0, in_window = 0, no_claim = 0;
    MaxTracker required;
  };
  const auto acc = parallel_reduce(
      all_functions_count( n ), jobs, Acc{},
      [&]( Acc& a, std::size_t begin, std::size_t end ) {
        for ( std::size_t idx = begin; idx < end; ++idx )
        {
          const auto f = BooleanFunction::from_word( n, idx );
          ++a.functions;
          if ( weak_biased_check( f, weights ).epsilon_prime > eps_max )
            continue;
          ++a.in_window;
          const auto r = coordinate_dichotomy( f, p, kInfinity, tol );
          if ( r.regime == DichotomyRegime::None )
          {
            ++a.no_claim;
            continue;
          }
          a.required.offer( r.required_c2(), idx );
        }
      },
      []( Acc& a, Acc&& b ) {
        a.functions += b.functions;
        a.in_window += b.in_window;
        a.no_claim += b.no_claim;
        a.required.merge( b.required );
      } );

  report.counters["functions"] = acc.functions;
  report.counters["in_window"] = acc.in_window;
  report.counters["regime_without_claim"] = acc.no_claim;
  if ( acc.in_window > acc.no_claim )
  {
    const auto f = BooleanFunction::from_word( n, acc.required.index );
    report.set_extremum( "min_universal_c2", acc.required.value );
    report.set_extremum( "min_universal_c2_table", f.to_bits() );
    report.set_extremum( "regime", to_string( coordinate_dichotomy( f, p, kInfinity, tol ).regime ) );
  }
  report.passed = true;
  return report;
}

const std::vector<std::string>& command_names()
{
  static const std::vector<std::string> names = { "verify-weak",     "full-iso",  "kk",          "monotone-full",
                                                  "stability-scan", "sharpness", "lemma-scan", "russo",
                                                  "dichotomy-scan" };
  return names;
}

Report run_command( const std::string& name, const CommandOptions& o )
{
  const auto start = std::chrono::steady_clock::now();
  Report r;
  if ( name == "verify-weak" )
    r = cmd_verify_weak( o.n, o.p, o.scope, o.input, o.jobs, o.tol );
  else if ( name == "full-iso" )
    r = cmd_full_iso( o.n, o.jobs );
  else if ( name == "kk" )
    r = cmd_kk( o.n, o.k, o.jobs );
  else if ( name == "monotone-full" )
    r = cmd_monotone_full( o.n, o.p, o.depth, o.jobs );
  else if ( name == "stability-scan" )
    r = cmd_stability_scan( o.n, o.p, o.eps_max, o.monotone_only, o.jobs, o.tol );
  else if ( name == "sharpness" )
    r = cmd_sharpness( o.t, o.s, o.p, o.n, o.tol );
  else if ( name == "lemma-scan" )
    r = cmd_lemma_scan( o.p, o.grid, o.tol );
  else if ( name == "russo" )
    r = cmd_russo( o.n, o.jobs );
  else if ( name == "dichotomy-scan" )
    r = cmd_dichotomy_scan( o.n, o.p, o.eps_max, o.jobs, o.tol );
  else
    throw CommandError( "unknown command '" + name + "'" );
  r.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>( std::chrono::steady_clock::now() - start ).count();
  return r;
}

} // namespace cubeiso
