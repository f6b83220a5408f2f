#pragma once

#include "cubeiso/rational.hpp"
#include "cubeiso/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cubeiso
{

/// A guard or input problem that stops a command before it runs.
class CommandError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct CommandOptions
{
  int n = 0;
  Rational p{ 1, 2 };
  int k = 0;
  int t = 0;
  int s = 0;
  int depth = 64;
  Real eps_max = 0.2L;
  int grid = 200;
  std::string scope = "all";
  std::string input;
  bool monotone_only = false;
  unsigned jobs = 0;  ///< 0 = hardware concurrency
  Real tol = kDefaultTolerance;
};

/// Weak biased inequality over every function (n <= 4), every monotone
/// function (n <= 5), or one function read from a truth-table file.
Report cmd_verify_weak( int n, const Rational& p, const std::string& scope, const std::string& input, unsigned jobs,
                        Real tol );
/// Every family on n <= 4 points against its lex family, plus the brute-force minimum for each size.
Report cmd_full_iso( int n, unsigned jobs );
/// Every family of k-sets of [n] (at most 20 k-sets) against the Kruskal-Katona minimum.
Report cmd_kk( int n, int k, unsigned jobs );
/// Every monotone function on n <= 5 against the limit lex family of equal measure.
Report cmd_monotone_full( int n, const Rational& p, int depth, unsigned jobs );
/// Empirical stability constant over functions with 0 < eps' <= eps_max.
Report cmd_stability_scan( int n, const Rational& p, Real eps_max, bool monotone_only, unsigned jobs, Real tol );
/// Families A and B on n >= t + s coordinates (n = 0 means t + s), with their closed forms.
Report cmd_sharpness( int t, int s, const Rational& p, int n, Real tol );
/// Grid scans of the real-variable lemmas at bias p.
Report cmd_lemma_scan( const Rational& p, int grid, Real tol );
/// d/dp mu_p = I^p for every monotone function on n <= 5.
Report cmd_russo( int n, unsigned jobs );
/// Smallest constant making the coordinate dichotomy hold for every function with eps' <= eps_max.
Report cmd_dichotomy_scan( int n, const Rational& p, Real eps_max, unsigned jobs, Real tol );

/// Subcommand names in help order.
const std::vector<std::string>& command_names();
/// Dispatches by subcommand name and fills runtime_ms. Throws CommandError
/// on guards and unknown names.
Report run_command( const std::string& name, const CommandOptions& options );

} // namespace cubeiso
