#include "cubeiso/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace
{

struct RawOptions
{
  int n = 0;
  std::string p = "1/2";
  int k = 0;
  int t = 0;
  int s = 0;
  int depth = 64;
  double eps_max = 0.2;
  int grid = 200;
  std::string scope = "all";
  std::string input;
  bool monotone_only = false;
  unsigned jobs = 0;
  double tol = 1e-9;
};

void add_options( CLI::App& sub, RawOptions& o )
{
  sub.add_option( "--n", o.n, "dimension" );
  sub.add_option( "--p", o.p, "bias as NUM/DEN or a finite decimal" )->capture_default_str();
  sub.add_option( "--k", o.k, "layer (kk)" );
  sub.add_option( "--t", o.t, "family parameter t (sharpness)" );
  sub.add_option( "--s", o.s, "family parameter s (sharpness)" );
  sub.add_option( "--depth", o.depth, "lambda solver depth" )->capture_default_str();
  sub.add_option( "--eps-max", o.eps_max, "largest eps' scanned" )->capture_default_str();
  sub.add_option( "--grid", o.grid, "grid points per axis" )->capture_default_str();
  sub.add_option( "--scope", o.scope, "all|monotone|file" )->capture_default_str();
  sub.add_option( "--input", o.input, "truth-table file for --scope file" );
  sub.add_flag( "--monotone-only", o.monotone_only, "monotone functions and subcubes only" );
  sub.add_option( "--jobs", o.jobs, "worker threads (0 = all cores)" )->capture_default_str();
  sub.add_option( "--tol", o.tol, "slack for real comparisons" )->capture_default_str();
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Exhaustive checks of edge-isoperimetric inequalities on the discrete cube" };
  app.require_subcommand( 1 );
  RawOptions raw;
  const std::map<std::string, std::string> help = {
      { "verify-weak", "weak biased inequality over a scope of functions" },
      { "full-iso", "edge boundary against lex families, exhaustive" },
      { "kk", "Kruskal-Katona upper shadows, exhaustive" },
      { "monotone-full", "monotone biased inequality against limit lex families" },
      { "stability-scan", "empirical stability constant" },
      { "sharpness", "closed forms of the sharpness families A and B" },
      { "lemma-scan", "grid scans of the real-variable lemmas" },
      { "russo", "Margulis-Russo identity for monotone functions" },
      { "dichotomy-scan", "smallest universal coordinate dichotomy constant" },
  };
  for ( const auto& name : cubeiso::command_names() )
  {
    add_options( *app.add_subcommand( name, help.at( name ) ), raw );
  }
  CLI11_PARSE( app, argc, argv );

  const std::string name = app.get_subcommands().front()->get_name();
  try
  {
    cubeiso::CommandOptions o;
    o.n = raw.n;
    o.p = cubeiso::parse_rational( raw.p );
    o.k = raw.k;
    o.t = raw.t;
    o.s = raw.s;
    o.depth = raw.depth;
    o.eps_max = raw.eps_max;
    o.grid = raw.grid;
    o.scope = raw.scope;
    o.input = raw.input;
    o.monotone_only = raw.monotone_only;
    o.jobs = raw.jobs;
    o.tol = raw.tol;

    const auto report = cubeiso::run_command( name, o );
    std::cout << report.to_json().dump() << "\n";
    for ( const auto& line : report.notes )
      std::cerr << line << "\n";
    std::cerr << report.summary() << "\n";
    return report.passed ? 0 : 1;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "cube-iso " << name << ": error: " << e.what() << "\n";
    return 2;
  }
}
