// sensbench: sensitivity / block sensitivity workbench.
//
//   sensbench measures f.tt
//   sensbench props g.dnf --check block,mixing,transitive
//   sensbench witness g.dnf --proc onesbound
//   sensbench family as --n 2 --expand
//   sensbench reconstruct ball.txt --s 2
//   sensbench verify block-4s2 --seed 7

#include <sensbench/compact_form.hpp>
#include <sensbench/dnf.hpp>
#include <sensbench/dnf_stats.hpp>
#include <sensbench/error.hpp>
#include <sensbench/families.hpp>
#include <sensbench/io.hpp>
#include <sensbench/lowsens.hpp>
#include <sensbench/measures.hpp>
#include <sensbench/render.hpp>
#include <sensbench/verify.hpp>
#include <sensbench/witness.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace sensbench;

namespace
{

struct global_options
{
  caps limits;
  std::uint64_t seed = 1u;
  std::string format = "text";

  bool json_lines() const { return format == "json-lines"; }
};

void emit( const global_options& g, const json& j )
{
  if ( g.json_lines() )
  {
    std::cout << j.dump() << "\n";
  }
  else
  {
    std::cout << to_text( j );
  }
}

struct loaded_function
{
  std::optional<dnf> formula;
  truth_table table; // empty when the formula is beyond n-max
  bool has_table = false;
};

loaded_function load_function( const std::string& path, const caps& limits, bool need_table )
{
  const auto text = read_file( path );
  loaded_function out;
  switch ( detect_format( text ) )
  {
  case file_format::truth_table:
    out.table = read_truth_table( text );
    out.has_table = true;
    return out;
  case file_format::dnf:
    out.formula = read_dnf( text );
    if ( need_table || out.formula->arity() <= limits.n_max )
    {
      out.table = to_truth_table( *out.formula, limits );
      out.has_table = true;
    }
    return out;
  default:
    throw error( error_kind::parse, path + ": expected a 'tt' or 'dnf' header" );
  }
}

dnf require_formula( const loaded_function& in, std::string_view what )
{
  if ( !in.formula )
  {
    throw error( error_kind::usage, std::string( what ) + " needs a dnf file" );
  }
  return *in.formula;
}

/* "1,2;3;4,5": blocks separated by ';', variables by ',' */
block_family parse_blocks( const std::string& text, unsigned n )
{
  std::vector<var_set> blocks;
  std::stringstream in( text );
  std::string block;
  while ( std::getline( in, block, ';' ) )
  {
    var_set b;
    std::stringstream vars( block );
    std::string v;
    while ( std::getline( vars, v, ',' ) )
    {
      try
      {
        std::size_t used = 0u;
        const auto idx = std::stoul( v, &used );
        if ( used != v.size() || idx < 1u || idx > n )
        {
          throw std::invalid_argument( v );
        }
        b.insert( static_cast<unsigned>( idx ) );
      }
      catch ( const std::logic_error& )
      {
        throw error( error_kind::usage, "bad variable '" + v + "' in --blocks" );
      }
    }
    blocks.push_back( b );
  }
  return block_family( std::move( blocks ), n );
}

std::vector<std::string> split_list( const std::string& text )
{
  std::vector<std::string> out;
  std::stringstream in( text );
  std::string item;
  while ( std::getline( in, item, ',' ) )
  {
    if ( !item.empty() )
    {
      out.push_back( item );
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct measures_args
{
  std::string file;
  unsigned ell = 0u;
  bool sensitivity_only = false;
};

int cmd_measures( const global_options& g, const measures_args& a )
{
  const auto in = load_function( a.file, g.limits, true );
  const auto& f = in.table;
  auto j = to_json( a.sensitivity_only ? sensitivity_report( f, g.limits ) : measure( f, g.limits ) );
  if ( a.ell )
  {
    j["bs_" + std::to_string( a.ell )] = bs_capped( f, a.ell, g.limits );
  }
  emit( g, j );
  return 0;
}

struct props_args
{
  std::string file;
  std::string checks;
  unsigned t = 0u;
  unsigned ell = 2u;
  bool normalize = false;
};

int cmd_props( const global_options& g, const props_args& a )
{
  const auto in = load_function( a.file, g.limits, false );
  dnf d;
  std::optional<normalization_result> norm;
  if ( in.formula )
  {
    d = *in.formula;
  }
  else if ( a.normalize )
  {
    norm = normalize( in.table, g.limits );
    d = norm->formula;
  }
  else
  {
    throw error( error_kind::usage, "props needs a dnf file, or --normalize for a tt file" );
  }

  const auto st = stats( d );
  json j{ { "arity", d.arity() }, { "stats", to_json( st ) } };
  if ( norm )
  {
    j["shift"] = to_bitstring( norm->shift, d.arity() );
    j["polarity"] = norm->polarity ? 1 : 0;
  }

  std::optional<compact_form_report> cf;
  std::optional<bounds_check> bounds;
  if ( d.arity() <= g.limits.bs_max )
  {
    cf = check_compact_form( d, g.limits );
    j["compact_form"] = to_json( *cf, d.arity() );
    bounds = bounds_report( d, to_truth_table( d, g.limits ), g.limits );
    j["bounds"] = to_json( *bounds );
  }
  else
  {
    j["compact_form"] = "skipped (arity above bs-max)";
  }

  bool all_ok = true;
  if ( !a.checks.empty() )
  {
    json checks = json::object();
    for ( const auto& name : split_list( a.checks ) )
    {
      bool ok = false;
      if ( name == "block" )
      {
        ok = st.block;
      }
      else if ( name == "t-block" || name == "tblock" )
      {
        if ( !a.t )
        {
          throw error( error_kind::usage, "the t-block check needs --t" );
        }
        ok = st.has_t_block( a.t );
      }
      else if ( name == "mixing" )
      {
        ok = st.has_mixing( a.ell );
      }
      else if ( name == "transitive" )
      {
        ok = st.transitive;
      }
      else if ( name == "zero-false" )
      {
        ok = zero_is_false( d );
      }
      else if ( name == "compact" || name == "normalized" || name == "bounds" )
      {
        if ( !cf )
        {
          throw error( error_kind::capacity, "check '" + name + "' needs arity <= bs-max" );
        }
        ok = name == "compact" ? cf->compact() : name == "normalized" ? cf->normalized : bounds->ok();
      }
      else
      {
        throw error( error_kind::usage, "unknown check '" + name +
                                            "' (block, t-block, mixing, transitive, zero-false, compact, normalized, bounds)" );
      }
      checks[name] = ok;
      all_ok = all_ok && ok;
    }
    j["checks"] = checks;
    j["ok"] = all_ok;
  }

  if ( norm )
  {
    if ( g.json_lines() )
    {
      j["formula"] = write_dnf( d );
    }
    else
    {
      std::cout << write_dnf( d ) << "\n";
    }
  }
  emit( g, j );
  return all_ok ? 0 : 1;
}

struct witness_args
{
  std::string file;
  std::string proc = "block";
  unsigned t = 0u;
  std::string x;
  std::string blocks;
  double c = 4.0;
};

int cmd_witness( const global_options& g, const witness_args& a )
{
  const auto in = load_function( a.file, g.limits, false );
  if ( a.proc == "solve" )
  {
    const auto n = in.formula ? in.formula->arity() : in.table.arity();
    const auto x = a.x.empty() ? input_t{ 0 } : parse_bitstring( a.x, n );
    block_family blocks;
    if ( !a.blocks.empty() )
    {
      blocks = parse_blocks( a.blocks, n );
    }
    else
    {
      std::vector<var_set> singletons;
      for ( auto v = 1u; v <= n; ++v )
      {
        singletons.push_back( var_set{ v } );
      }
      blocks = block_family( std::move( singletons ), n );
    }
    const auto r = in.formula ? solve_sensitivity_problem( *in.formula, x, blocks, a.c, g.limits )
                              : solve_sensitivity_problem( in.table, x, blocks, a.c, g.limits );
    auto j = to_json( r, n );
    j["x"] = to_bitstring( x, n );
    emit( g, j );
    return 0;
  }

  const auto d = require_formula( in, "witness --proc " + a.proc );
  witness_result w;
  if ( a.proc == "block" )
  {
    w = zero_witness_block( d );
  }
  else if ( a.proc == "onesbound" )
  {
    w = witness_onesbound( d );
  }
  else if ( a.proc == "tblock" )
  {
    w = zero_witness_tblock( d, a.t ? a.t : stats( d ).t_min );
  }
  else if ( a.proc == "mixing" )
  {
    w = witness_2mixing_components( d );
  }
  else
  {
    throw error( error_kind::usage, "unknown procedure '" + a.proc + "' (block, onesbound, tblock, mixing, solve)" );
  }
  emit( g, to_json( w, d.arity() ) );
  return 0;
}

struct family_args
{
  std::string name;
  unsigned n = 1u;
  unsigned p = 2u;
  unsigned q = 2u;
  bool expand = false;
  std::string emit = "report";
};

int cmd_family( const global_options& g, const family_args& a )
{
  if ( a.name == "proposition" )
  {
    const auto pp = proposition_pair( a.p, a.q, g.limits );
    if ( a.emit == "f" || a.emit == "g" )
    {
      std::cout << write_truth_table( a.emit == "f" ? pp.f : pp.g );
      return 0;
    }
    if ( a.emit != "report" )
    {
      throw error( error_kind::usage, "proposition emits report, f or g" );
    }
    emit( g, to_json( pp ) );
    return 0;
  }

  if ( a.name == "onesbound-tight" )
  {
    const auto d = onesbound_tight( a.n );
    if ( a.emit == "dnf" )
    {
      std::cout << write_dnf( d );
      return 0;
    }
    if ( a.emit != "report" )
    {
      throw error( error_kind::usage, "onesbound-tight emits report or dnf" );
    }
    json j{ { "family", "onesbound-tight" }, { "n", a.n }, { "stats", to_json( stats( d ) ) } };
    j["measures"] = to_json( sensitivity_report( to_truth_table( d, g.limits ), g.limits ) );
    j["ceil_width_half"] = ceil_div( d.width(), 2u );
    if ( g.json_lines() )
    {
      j["g"] = write_dnf( d );
      emit( g, j );
    }
    else
    {
      emit( g, j );
      std::cout << "\n" << write_dnf( d );
    }
    return 0;
  }

  family_instance fi;
  const bool expand = a.expand || a.emit == "expanded";
  if ( a.name == "rubinstein" )
  {
    fi = rubinstein( a.n, expand, g.limits );
  }
  else if ( a.name == "virza" )
  {
    fi = virza( a.n, expand, g.limits );
  }
  else if ( a.name == "as" || a.name == "ambainis-sun" )
  {
    fi = ambainis_sun( a.n, expand, g.limits );
  }
  else
  {
    throw error( error_kind::usage, "unknown family '" + a.name +
                                        "' (rubinstein, virza, as, onesbound-tight, proposition)" );
  }

  if ( a.emit == "dnf" )
  {
    std::cout << write_dnf( fi.g );
    return 0;
  }
  if ( a.emit == "expanded" )
  {
    std::cout << write_dnf( *fi.expanded );
    return 0;
  }
  if ( a.emit != "report" )
  {
    throw error( error_kind::usage, "families emit report, dnf or expanded" );
  }
  auto j = to_json( fi );
  if ( g.json_lines() )
  {
    j["g"] = write_dnf( fi.g );
    if ( fi.expanded )
    {
      j["expanded"] = write_dnf( *fi.expanded );
    }
    emit( g, j );
  }
  else
  {
    emit( g, j );
    std::cout << "\n" << write_dnf( fi.g );
    if ( fi.expanded )
    {
      std::cout << "\n" << write_dnf( *fi.expanded );
    }
  }
  return 0;
}

struct reconstruct_args
{
  std::string file;
  unsigned s = 0u;
  bool monotone = false;
};

int cmd_reconstruct( const global_options& g, const reconstruct_args& a )
{
  const auto ball = read_ball( read_file( a.file ) );
  const auto f = a.monotone ? reconstruct_monotone( ball, a.s, g.limits ) : reconstruct_majority( ball, a.s, g.limits );
  if ( g.json_lines() )
  {
    emit( g, json{ { "arity", f.arity() }, { "method", a.monotone ? "monotone" : "majority" }, { "table", to_hex( f ) } } );
  }
  else
  {
    std::cout << write_truth_table( f );
  }
  return 0;
}

struct ball_args
{
  std::string file;
  std::string center;
  unsigned radius = 0u;
};

int cmd_ball( const global_options& g, const ball_args& a )
{
  const auto in = load_function( a.file, g.limits, true );
  const auto n = in.table.arity();
  const auto center = a.center.empty() ? input_t{ 0 } : parse_bitstring( a.center, n );
  std::cout << write_ball( ball_values::from_function( in.table, center, a.radius ) );
  return 0;
}

struct verify_args
{
  std::string suite;
  std::size_t count = 0u;
  std::string replay;
  unsigned t = 0u;
  bool failures_only = false;
};

void print_suite( const global_options& g, const verify_args& a, const suite_report& rep )
{
  for ( const auto& r : rep.results )
  {
    if ( a.failures_only && r.passed )
    {
      continue;
    }
    if ( g.json_lines() )
    {
      auto j = to_json( r );
      j["suite"] = rep.name;
      std::cout << j.dump() << "\n";
      continue;
    }
    std::cout << ( r.passed ? "PASS " : "FAIL " ) << rep.name << "/" << r.group << " #" << r.id << " " << r.instance
              << ": " << r.detail << "\n";
    if ( !r.passed )
    {
      std::istringstream lines( r.counterexample );
      std::string line;
      std::cout << "  counterexample:\n";
      while ( std::getline( lines, line ) )
      {
        std::cout << "    " << line << "\n";
      }
    }
  }
  if ( g.json_lines() )
  {
    std::cout << json{ { "suite", rep.name }, { "seed", rep.seed }, { "instances", rep.results.size() },
                       { "failures", rep.failures() }, { "passed", rep.passed() } }
                     .dump()
              << "\n";
  }
  else
  {
    std::cout << "summary " << rep.name << " seed=" << rep.seed << " instances=" << rep.results.size()
              << " failures=" << rep.failures() << ( rep.passed() ? " PASS" : " FAIL" ) << "\n";
  }
}

int cmd_verify( const global_options& g, const verify_args& a )
{
  suite_options o;
  o.seed = g.seed;
  o.limits = g.limits;
  o.count = a.count;
  if ( !a.replay.empty() )
  {
    const auto rep = replay_instance( a.suite, read_file( a.replay ), o, a.t );
    print_suite( g, a, rep );
    return rep.passed() ? 0 : 1;
  }
  std::vector<std::string> names;
  if ( a.suite == "all" )
  {
    names = suite_names();
  }
  else
  {
    names.push_back( a.suite );
  }
  bool ok = true;
  for ( const auto& name : names )
  {
    const auto rep = run_suite( name, o );
    print_suite( g, a, rep );
    ok = ok && rep.passed();
  }
  return ok ? 0 : 1;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Sensitivity and block sensitivity of Boolean functions given as truth tables or DNFs.\n"
                "Exit codes: 0 ok, 1 check failed, 2 usage, 3 capacity, 4 inconsistent data." };
  app.require_subcommand( 1 );
  app.fallthrough();

  global_options g;
  app.add_option( "--n-max", g.limits.n_max, "Largest arity for full enumeration" )->capture_default_str()->check( CLI::Range( 1u, 30u ) );
  app.add_option( "--bs-max", g.limits.bs_max, "Largest arity for exact block sensitivity" )->capture_default_str()->check( CLI::Range( 1u, 30u ) );
  app.add_option( "--expand-max", g.limits.expand_max, "Largest arity of an expanded family" )->capture_default_str()->check( CLI::Range( 1u, 64u ) );
  app.add_option( "--seed", g.seed, "Seed for verify suites" )->capture_default_str();
  app.add_option( "--format", g.format, "Output format" )->capture_default_str()->check( CLI::IsMember( { "text", "json-lines" } ) );

  measures_args ma;
  auto* measures = app.add_subcommand( "measures", "s, s0, s1, bs, bs0, bs1 with witnesses" );
  measures->add_option( "file", ma.file, "tt or dnf file ('-' for stdin)" )->required();
  measures->add_option( "--ell", ma.ell, "Also report bs_ell (blocks of size <= ell)" );
  measures->add_flag( "--sensitivity-only", ma.sensitivity_only, "Skip block sensitivity" );

  props_args pa;
  auto* props = app.add_subcommand( "props", "Structural DNF properties, compact form and gamma bounds" );
  props->add_option( "file", pa.file, "dnf file, or tt file with --normalize" )->required();
  props->add_option( "--check", pa.checks, "Comma list that must hold: block,t-block,mixing,transitive,zero-false,compact,normalized,bounds" );
  props->add_option( "--t", pa.t, "t for the t-block check" );
  props->add_option( "--ell", pa.ell, "l for the mixing check" )->capture_default_str();
  props->add_flag( "--normalize", pa.normalize, "Normalize a tt file into a compact DNF first" );

  witness_args wa;
  auto* witness = app.add_subcommand( "witness", "Sensitive inputs from the DNF structure" );
  witness->add_option( "file", wa.file, "dnf file (tt allowed for solve)" )->required();
  witness->add_option( "--proc", wa.proc, "block, onesbound, tblock, mixing or solve" )->capture_default_str();
  witness->add_option( "--t", wa.t, "t for tblock (default: smallest valid)" );
  witness->add_option( "--x", wa.x, "solve: input x as a bitstring (default 0^n)" );
  witness->add_option( "--blocks", wa.blocks, "solve: blocks like 1,2;3 (default singletons)" );
  witness->add_option( "--c", wa.c, "solve: constant c" )->capture_default_str();

  family_args fa;
  auto* family = app.add_subcommand( "family", "Separating families and their predicted measures" );
  family->add_option( "name", fa.name, "rubinstein, virza, as, onesbound-tight or proposition" )->required();
  family->add_option( "--n", fa.n, "Family parameter" )->capture_default_str()->check( CLI::Range( 1u, 64u ) );
  family->add_option( "--p", fa.p, "proposition: p" )->capture_default_str();
  family->add_option( "--q", fa.q, "proposition: q" )->capture_default_str();
  family->add_flag( "--expand", fa.expand, "Also build the explicit OR of all copies" );
  family->add_option( "--emit", fa.emit, "report, dnf, expanded (families) or f, g (proposition)" )->capture_default_str();

  reconstruct_args ra;
  auto* reconstruct = app.add_subcommand( "reconstruct", "Rebuild a low-sensitivity function from ball values" );
  reconstruct->add_option( "file", ra.file, "ball file" )->required();
  reconstruct->add_option( "--s", ra.s, "Sensitivity bound" )->required();
  reconstruct->add_flag( "--monotone", ra.monotone, "Monotone completion from the ball at 0^n" );

  ball_args ba;
  auto* ball = app.add_subcommand( "ball", "Write the values of a function on a Hamming ball" );
  ball->add_option( "file", ba.file, "tt or dnf file" )->required();
  ball->add_option( "--center", ba.center, "Center bitstring (default 0^n)" );
  ball->add_option( "--radius", ba.radius, "Radius" )->required();

  verify_args va;
  auto* verify = app.add_subcommand( "verify", "Run an invariant suite" );
  verify->add_option( "suite", va.suite, "Suite name or 'all'" )->required();
  verify->add_option( "--count", va.count, "Random instances per group (default: suite's own)" );
  verify->add_option( "--replay", va.replay, "Re-run the suite's checks on a saved counterexample" );
  verify->add_option( "--t", va.t, "t for tblock replay (default: smallest valid)" );
  verify->add_flag( "--failures-only", va.failures_only, "Print failing instances only" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::CallForAllHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return 2;
  }

  try
  {
    if ( *measures )
    {
      return cmd_measures( g, ma );
    }
    if ( *props )
    {
      return cmd_props( g, pa );
    }
    if ( *witness )
    {
      return cmd_witness( g, wa );
    }
    if ( *family )
    {
      return cmd_family( g, fa );
    }
    if ( *reconstruct )
    {
      return cmd_reconstruct( g, ra );
    }
    if ( *ball )
    {
      return cmd_ball( g, ba );
    }
    if ( *verify )
    {
      return cmd_verify( g, va );
    }
  }
  catch ( const error& e )
  {
    std::cerr << "error (" << to_string( e.kind() ) << "): " << e.what() << "\n";
    return exit_code( e.kind() );
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
