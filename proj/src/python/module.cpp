#include <sensbench/compact_form.hpp>
#include <sensbench/dnf.hpp>
#include <sensbench/dnf_stats.hpp>
#include <sensbench/error.hpp>
#include <sensbench/families.hpp>
#include <sensbench/io.hpp>
#include <sensbench/lowsens.hpp>
#include <sensbench/measures.hpp>
#include <sensbench/render.hpp>
#include <sensbench/truth_table.hpp>
#include <sensbench/verify.hpp>
#include <sensbench/witness.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

namespace py = pybind11;
using namespace sensbench;

namespace
{

using function = std::variant<truth_table, dnf>;

py::object to_python( const json& j )
{
  switch ( j.type() )
  {
  case json::value_t::null:
    return py::none();
  case json::value_t::boolean:
    return py::bool_( j.get<bool>() );
  case json::value_t::number_integer:
    return py::int_( j.get<std::int64_t>() );
  case json::value_t::number_unsigned:
    return py::int_( j.get<std::uint64_t>() );
  case json::value_t::number_float:
    return py::float_( j.get<double>() );
  case json::value_t::string:
    return py::str( j.get<std::string>() );
  case json::value_t::array:
  {
    py::list out;
    for ( const auto& v : j )
    {
      out.append( to_python( v ) );
    }
    return out;
  }
  default:
  {
    py::dict out;
    for ( const auto& [k, v] : j.items() )
    {
      out[py::str( k )] = to_python( v );
    }
    return out;
  }
  }
}

unsigned arity_of( const function& f )
{
  return std::visit( []( const auto& g ) { return g.arity(); }, f );
}

truth_table table_of( const function& f, const caps& limits )
{
  if ( const auto* d = std::get_if<dnf>( &f ) )
  {
    return to_truth_table( *d, limits );
  }
  return std::get<truth_table>( f );
}

input_t input_of( const py::object& x, unsigned n )
{
  if ( py::isinstance<py::str>( x ) )
  {
    return parse_bitstring( x.cast<std::string>(), n );
  }
  const auto v = x.cast<input_t>();
  if ( v > all_ones( n ) )
  {
    throw error( error_kind::usage, "input index out of range" );
  }
  return v;
}

block_family blocks_of( const std::optional<std::vector<std::vector<unsigned>>>& blocks, unsigned n )
{
  std::vector<var_set> out;
  if ( !blocks )
  {
    for ( auto v = 1u; v <= n; ++v )
    {
      out.push_back( var_set{ v } );
    }
  }
  else
  {
    for ( const auto& b : *blocks )
    {
      var_set s;
      for ( const auto v : b )
      {
        if ( v < 1u || v > n )
        {
          throw error( error_kind::usage, "variable " + std::to_string( v ) + " outside 1.." + std::to_string( n ) );
        }
        s.insert( v );
      }
      out.push_back( s );
    }
  }
  return block_family( std::move( out ), n );
}

json suite_json( const suite_report& rep )
{
  json results = json::array();
  for ( const auto& r : rep.results )
  {
    results.push_back( to_json( r ) );
  }
  return { { "suite", rep.name },
           { "seed", rep.seed },
           { "instances", rep.results.size() },
           { "failures", rep.failures() },
           { "passed", rep.passed() },
           { "results", std::move( results ) } };
}

} // namespace

PYBIND11_MODULE( _core, m )
{
  m.doc() = "Sensitivity and block sensitivity of Boolean functions";

  // never destroyed: the translator may run until interpreter shutdown
  static const auto* exc = new py::exception<error>( m, "Error", PyExc_ValueError );
  py::register_exception_translator( []( std::exception_ptr p ) {
    try
    {
      if ( p )
      {
        std::rethrow_exception( p );
      }
    }
    catch ( const error& e )
    {
      py::object instance = py::handle( exc->ptr() )( e.what() );
      instance.attr( "kind" ) = to_string( e.kind() );
      instance.attr( "exit_code" ) = exit_code( e.kind() );
      PyErr_SetObject( exc->ptr(), instance.ptr() );
    }
  } );

  py::class_<caps>( m, "Caps" )
      .def( py::init( []( unsigned n_max, unsigned bs_max, unsigned expand_max ) {
              return caps{ n_max, bs_max, expand_max };
            } ),
            py::arg( "n_max" ) = 20u, py::arg( "bs_max" ) = 14u, py::arg( "expand_max" ) = 32u )
      .def_readwrite( "n_max", &caps::n_max )
      .def_readwrite( "bs_max", &caps::bs_max )
      .def_readwrite( "expand_max", &caps::expand_max );

  py::class_<truth_table>( m, "TruthTable" )
      .def( py::init( []( unsigned arity, const std::string& hex ) { return from_hex( arity, hex ); } ),
            py::arg( "arity" ), py::arg( "hex" ) )
      .def_static( "parse", []( const std::string& text ) { return read_truth_table( text ); } )
      .def_static( "parse_all", []( const std::string& text ) { return read_truth_tables( text ); } )
      .def_property_readonly( "arity", &truth_table::arity )
      .def_property_readonly( "hex", []( const truth_table& f ) { return to_hex( f ); } )
      .def( "text", []( const truth_table& f ) { return write_truth_table( f ); } )
      .def( "__call__", []( const truth_table& f, const py::object& x ) { return f[input_of( x, f.arity() )]; } )
      .def( "__eq__", []( const truth_table& a, const truth_table& b ) { return a == b; } )
      .def( "__repr__", []( const truth_table& f ) {
        return "TruthTable(" + std::to_string( f.arity() ) + ", '" + to_hex( f ) + "')";
      } );

  py::class_<dnf>( m, "Dnf" )
      .def_static( "parse", []( const std::string& text ) { return read_dnf( text ); } )
      .def_property_readonly( "arity", &dnf::arity )
      .def_property_readonly( "size", &dnf::size )
      .def_property_readonly( "width", &dnf::width )
      .def( "text", []( const dnf& d ) { return write_dnf( d ); } )
      .def( "truth_table", []( const dnf& d, const caps& limits ) { return to_truth_table( d, limits ); },
            py::arg( "limits" ) = caps{} )
      .def( "__call__", []( const dnf& d, const py::object& x ) { return d( input_of( x, d.arity() ) ); } )
      .def( "__eq__", []( const dnf& a, const dnf& b ) { return a == b; } )
      .def( "__repr__", []( const dnf& d ) { return "Dnf.parse(" + py::repr( py::str( write_dnf( d ) ) ).cast<std::string>() + ")"; } );

  m.def(
      "load",
      []( const std::string& text ) -> py::object {
        switch ( detect_format( text ) )
        {
        case file_format::truth_table:
          return py::cast( read_truth_table( text ) );
        case file_format::dnf:
          return py::cast( read_dnf( text ) );
        default:
          throw error( error_kind::parse, "expected a 'tt' or 'dnf' header" );
        }
      },
      py::arg( "text" ), "TruthTable or Dnf from file contents." );

  m.def(
      "measures",
      []( const function& f, std::optional<unsigned> ell, bool sensitivity_only, const caps& limits ) {
        const auto tt = table_of( f, limits );
        auto j = to_json( sensitivity_only ? sensitivity_report( tt, limits ) : measure( tt, limits ) );
        if ( ell )
        {
          j["bs_ell"] = bs_capped( tt, *ell, limits );
        }
        return to_python( j );
      },
      py::arg( "f" ), py::arg( "ell" ) = py::none(), py::arg( "sensitivity_only" ) = false,
      py::arg( "limits" ) = caps{}, "s, s0, s1, bs, bs0, bs1 with witnesses." );

  m.def(
      "props",
      []( const dnf& d, const caps& limits ) {
        json j{ { "arity", d.arity() }, { "stats", to_json( stats( d ) ) } };
        if ( d.arity() <= limits.bs_max )
        {
          j["compact_form"] = to_json( check_compact_form( d, limits ), d.arity() );
          j["bounds"] = to_json( bounds_report( d, to_truth_table( d, limits ), limits ) );
        }
        return to_python( j );
      },
      py::arg( "d" ), py::arg( "limits" ) = caps{},
      "Structural statistics, compact-form flags and the gamma bounds check." );

  m.def(
      "normalize",
      []( const truth_table& f, const caps& limits ) {
        const auto r = normalize( f, limits );
        return py::make_tuple( r.formula, to_bitstring( r.shift, f.arity() ), r.polarity );
      },
      py::arg( "f" ), py::arg( "limits" ) = caps{}, "(dnf, shift, polarity)" );

  m.def(
      "witness",
      []( const dnf& d, const std::string& proc, unsigned t ) {
        witness_result w;
        if ( proc == "block" )
        {
          w = zero_witness_block( d );
        }
        else if ( proc == "onesbound" )
        {
          w = witness_onesbound( d );
        }
        else if ( proc == "tblock" )
        {
          w = zero_witness_tblock( d, t ? t : stats( d ).t_min );
        }
        else if ( proc == "mixing" )
        {
          w = witness_2mixing_components( d );
        }
        else
        {
          throw error( error_kind::usage, "unknown procedure '" + proc + "'" );
        }
        return to_python( to_json( w, d.arity() ) );
      },
      py::arg( "d" ), py::arg( "proc" ) = "block", py::arg( "t" ) = 0u );

  m.def(
      "solve",
      []( const function& f, const py::object& x, const std::optional<std::vector<std::vector<unsigned>>>& blocks,
          double c, const caps& limits ) {
        const auto n = arity_of( f );
        const auto in = input_of( x, n );
        const auto b = blocks_of( blocks, n );
        const auto r = std::visit(
            [&]( const auto& g ) { return solve_sensitivity_problem( g, in, b, c, limits ); }, f );
        auto j = to_json( r, n );
        j["x"] = to_bitstring( in, n );
        return to_python( j );
      },
      py::arg( "f" ), py::arg( "x" ) = py::int_( 0 ), py::arg( "blocks" ) = py::none(), py::arg( "c" ) = 4.0,
      py::arg( "limits" ) = caps{}, "y with s(f,y)^2 * c >= bs(f,x,blocks); singleton blocks by default." );

  m.def(
      "family",
      []( const std::string& name, unsigned n, bool expand, const caps& limits ) {
        family_instance fi;
        if ( name == "rubinstein" )
        {
          fi = rubinstein( n, expand, limits );
        }
        else if ( name == "virza" )
        {
          fi = virza( n, expand, limits );
        }
        else if ( name == "as" || name == "ambainis-sun" )
        {
          fi = ambainis_sun( n, expand, limits );
        }
        else
        {
          throw error( error_kind::usage, "unknown family '" + name + "'" );
        }
        auto out = to_python( to_json( fi ) ).cast<py::dict>();
        out["g_dnf"] = fi.g;
        out["expanded_dnf"] = fi.expanded ? py::cast( *fi.expanded ) : py::none();
        return out;
      },
      py::arg( "name" ), py::arg( "n" ) = 1u, py::arg( "expand" ) = false, py::arg( "limits" ) = caps{} );

  m.def( "onesbound_tight", &onesbound_tight, py::arg( "n" ) );

  m.def(
      "proposition_pair",
      []( unsigned p, unsigned q, const caps& limits ) {
        const auto pp = proposition_pair( p, q, limits );
        auto out = to_python( to_json( pp ) ).cast<py::dict>();
        out["f_table"] = pp.f;
        out["g_table"] = pp.g;
        return out;
      },
      py::arg( "p" ), py::arg( "q" ), py::arg( "limits" ) = caps{} );

  m.def(
      "ball",
      []( const truth_table& f, const py::object& center, unsigned radius ) {
        return write_ball( ball_values::from_function( f, input_of( center, f.arity() ), radius ) );
      },
      py::arg( "f" ), py::arg( "center" ) = py::int_( 0 ), py::arg( "radius" ), "Ball file text." );

  m.def(
      "reconstruct",
      []( const std::string& ball_text, unsigned s, bool monotone, const caps& limits ) {
        const auto b = read_ball( ball_text );
        return monotone ? reconstruct_monotone( b, s, limits ) : reconstruct_majority( b, s, limits );
      },
      py::arg( "ball" ), py::arg( "s" ), py::arg( "monotone" ) = false, py::arg( "limits" ) = caps{} );

  m.def(
      "one_set_components",
      []( const truth_table& f, const caps& limits ) {
        return to_python( to_json( one_set_components( f, limits ), f.arity() ) );
      },
      py::arg( "f" ), py::arg( "limits" ) = caps{} );

  m.def( "hypercubes_to_dnf", &hypercubes_to_dnf, py::arg( "f" ), py::arg( "limits" ) = caps{} );

  m.def( "suite_names", &suite_names );

  m.def(
      "verify",
      []( const std::string& suite, std::uint64_t seed, std::size_t count, const caps& limits ) {
        suite_options o;
        o.seed = seed;
        o.count = count;
        o.limits = limits;
        suite_report rep;
        {
          py::gil_scoped_release release;
          rep = run_suite( suite, o );
        }
        return to_python( suite_json( rep ) );
      },
      py::arg( "suite" ), py::arg( "seed" ) = 1u, py::arg( "count" ) = 0u, py::arg( "limits" ) = caps{},
      "Runs a sampled suite; count 0 uses its default size." );

  m.def(
      "replay",
      []( const std::string& suite, const std::string& text, unsigned t, const caps& limits ) {
        suite_options o;
        o.limits = limits;
        return to_python( suite_json( replay_instance( suite, text, o, t ) ) );
      },
      py::arg( "suite" ), py::arg( "text" ), py::arg( "t" ) = 0u, py::arg( "limits" ) = caps{},
      "Re-runs a suite's checks on a saved instance." );
}
