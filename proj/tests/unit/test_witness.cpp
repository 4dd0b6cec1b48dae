#include "oracles.hpp"

#include <sensbench/compact_form.hpp>
#include <sensbench/dnf_stats.hpp>
#include <sensbench/error.hpp>
#include <sensbench/families.hpp>
#include <sensbench/measures.hpp>
#include <sensbench/sampling.hpp>
#include <sensbench/witness.hpp>

#include <doctest.h>

#include <cmath>

using namespace sensbench;
using namespace sensbench::functions;

namespace
{

const dnf or3 = read_dnf( "dnf 3\n+1\n+2\n+3\n" );

block_family singletons( unsigned n )
{
  std::vector<var_set> b;
  for ( auto v = 1u; v <= n; ++v )
  {
    b.push_back( var_set{ v } );
  }
  return block_family( b, n );
}

block_family random_family( rng_t& rng, unsigned n )
{
  std::vector<var_set> blocks;
  var_set used;
  for ( auto k = uniform( rng, 0u, n ); k > 0u; --k )
  {
    var_set b;
    for ( auto v = 1u; v <= n; ++v )
    {
      if ( !used.contains( v ) && coin( rng, 0.3 ) )
      {
        b.insert( v );
      }
    }
    if ( !b.empty() )
    {
      blocks.push_back( b );
      used = used | b;
    }
  }
  return block_family( blocks, n );
}

bool conflict_free( const dnf& d, const std::vector<std::size_t>& gates, unsigned t )
{
  for ( const auto i : gates )
  {
    for ( const auto j : gates )
    {
      if ( i == j )
      {
        continue;
      }
      if ( d[i].neg.intersects( d[j].pos ) )
      {
        return false;
      }
      if ( t > 1u && d[i].pos.intersects( d[j].pos ) )
      {
        return false;
      }
    }
  }
  return true;
}

} // namespace

TEST_SUITE( "witness" )
{

TEST_CASE( "greedy gate selection examples" )
{
  const auto o = greedy_independent_gates( or3 );
  CHECK( o.gates.size() == 3u );
  CHECK( o.bound == 3u );

  const auto a = greedy_independent_gates( ambainis_sun_inner( 1u ) );
  CHECK( a.gates.size() >= 1u );
  CHECK( a.bound == 1u );

  const auto d = read_dnf( "dnf 5\n+2\n+4\n+1 +3 +5 -2 -4\n" );
  const gate_graph graph( d );
  CHECK( graph.out[2] == std::vector<std::size_t>{ 0u, 1u } );
  CHECK( graph.out[0].empty() );
  const auto sel = greedy_independent_gates( d );
  CHECK( sel.bound == 1u );
  CHECK( std::find( sel.gates.begin(), sel.gates.end(), 0u ) != sel.gates.end() );
}

TEST_CASE( "greedy_bound arithmetic" )
{
  CHECK( greedy_bound( 3u, 1u, 1u ) == 3u );
  CHECK( greedy_bound( 2u, 2u, 2u ) == 1u );
  CHECK( greedy_bound( 3u, 5u, 1u ) == 1u );
  CHECK( greedy_bound( 15u, 5u, 1u ) == 2u );
  for ( auto size = 1u; size < 30u; ++size )
  {
    for ( auto width = 1u; width < 8u; ++width )
    {
      CHECK( greedy_bound( size, width, 1u ) == ceil_div( size, 2u * width - 1u ) );
    }
  }
}

TEST_CASE( "property: greedy gates are conflict-free and meet the counting bound" )
{
  rng_t rng( 31u );
  for ( auto i = 0; i < 100; ++i )
  {
    const auto t = uniform( rng, 1u, 3u );
    const auto d = t == 1u ? random_block_dnf( rng, 1u, 14u ) : random_t_block_dnf( rng, 2u, 14u, t );
    const auto sel = greedy_independent_gates( d, t );
    CHECK( conflict_free( d, sel.gates, t ) );
    CHECK( sel.gates.size() >= greedy_bound( d.size(), d.width(), t ) );
  }
}

TEST_CASE( "zero_witness_block examples" )
{
  const auto o = zero_witness_block( or3 );
  CHECK( o.input == 0u );
  CHECK( o.measured == 3u );
  CHECK( o.guaranteed_bound == 3u );

  const auto r = zero_witness_block( rubinstein_inner( 2u ) );
  CHECK_FALSE( rubinstein_inner( 2u )( r.input ) );
  CHECK( r.measured >= 1u );

  const auto big = *ambainis_sun( 1u, true ).expanded;
  CHECK( big.arity() == 30u );
  const auto w = zero_witness_block( big );
  CHECK_FALSE( big( w.input ) );
  CHECK( w.lemma_bound == 2u );
  CHECK( sensitivity_at( big, w.input ) >= 2u );
}

TEST_CASE( "witness_onesbound examples" )
{
  const auto o = witness_onesbound( or3 );
  CHECK( o.input == parse_bitstring( "100", 3u ) );
  CHECK( o.measured == 1u );

  const auto t = witness_onesbound( onesbound_tight( 2u ) );
  CHECK( t.measured == 3u );

  const auto a = witness_onesbound( ambainis_sun_inner( 1u ) );
  CHECK( a.input == parse_bitstring( "001100", 6u ) );
  CHECK( a.measured == 5u );
}

TEST_CASE( "zero_witness_tblock examples" )
{
  const auto o = zero_witness_tblock( or3, 1u );
  CHECK( o.input == 0u );
  CHECK( o.guaranteed_bound == 3u );
  CHECK( o.measured == 3u );

  const auto d = read_dnf( "dnf 3\n+1 +2\n+2 +3\n" );
  const auto w = zero_witness_tblock( d, 2u );
  CHECK( w.lemma_bound == 1u );
  CHECK_FALSE( d( w.input ) );
  CHECK( w.measured >= 1u );
  CHECK_THROWS_AS( zero_witness_tblock( d, 1u ), error );
}

TEST_CASE( "witness_2mixing_components examples" )
{
  const auto o = witness_2mixing_components( or3 );
  CHECK( o.input == 0u );
  CHECK( o.guaranteed_bound == 3u );

  const auto a = witness_2mixing_components( ambainis_sun_inner( 1u ) );
  CHECK( a.guaranteed_bound == 1u );
  CHECK( a.input == parse_bitstring( "001000", 6u ) );
  CHECK_FALSE( ambainis_sun_inner( 1u )( a.input ) );
  CHECK( a.measured >= 1u );

  // two disjoint copies of a pair conflicting on exactly two variables
  const auto pair = read_dnf( "dnf 8\n+1 +2 -3\n+3 +4 -1\n+5 +6 -7\n+7 +8 -5\n" );
  const auto st = stats( pair );
  REQUIRE( st.block );
  REQUIRE( st.transitive );
  REQUIRE( st.mixing_max == 2u );
  const auto w = witness_2mixing_components( pair );
  CHECK( w.guaranteed_bound == 4u );
  CHECK_FALSE( pair( w.input ) );
  CHECK( sensitivity_at( pair, w.input ) >= 4u );

  CHECK_THROWS_AS( witness_2mixing_components( read_dnf( "dnf 3\n+1 +2\n+2 +3\n" ) ), error );
}

TEST_CASE( "property: witnesses on block-property formulas meet their bounds" )
{
  rng_t rng( 41u );
  for ( auto i = 0; i < 100; ++i )
  {
    const auto d = random_block_dnf( rng, 1u, 12u );
    const auto naive = oracle::of( d );
    const auto w0 = zero_witness_block( d );
    CHECK_FALSE( naive( w0.input ) );
    CHECK( oracle::sensitivity( naive, d.arity(), w0.input ) >= ceil_div( d.size(), 2u * d.width() - 1u ) );
    const auto w1 = witness_onesbound( d );
    CHECK( oracle::sensitivity( naive, d.arity(), w1.input ) >= ceil_div( d.width(), 2u ) );
  }
}

TEST_CASE( "solve_sensitivity_problem examples" )
{
  const auto maj = majority( 3u );
  const auto x = parse_bitstring( "110", 3u );
  const auto m = solve_sensitivity_problem( maj, x, block_family( { var_set{ 1u }, var_set{ 2u } }, 3u ), 1.0 );
  CHECK( m.y == x );
  CHECK( m.procedure == witness_procedure::monotone_echo );
  CHECK( m.sensitivity * m.sensitivity >= 2u );

  const auto o = solve_sensitivity_problem( or3, 0u, singletons( 3u ), 4.0 );
  CHECK( o.sensitivity == 3u );

  const auto as = ambainis_sun_inner( 1u );
  std::vector<var_set> tops;
  for ( const auto& t : as.terms() )
  {
    tops.push_back( t.pos );
  }
  const auto a = solve_sensitivity_problem( as, 0u, block_family( tops, 6u ), 4.0 );
  CHECK( a.block_count == 3u );
  CHECK( a.y == parse_bitstring( "001100", 6u ) );
  CHECK( a.sensitivity == 5u );
}

TEST_CASE( "monotone inputs that are not sensitive enough are not echoed" )
{
  // OR_2 at 11: s = 0 but the block {1,2} is sensitive
  const auto r = solve_sensitivity_problem( or_n( 2u ), 0b11u, block_family( { var_set{ 1u, 2u } }, 2u ), 1.0 );
  CHECK( r.y != 0b11u );
  CHECK( r.sensitivity >= 1u );
}

TEST_CASE( "property: the solver never violates s(f,y)^2 * c >= bs(f,x,B)" )
{
  rng_t rng( 51u );
  for ( auto i = 0; i < 200; ++i )
  {
    const double c = std::vector<double>{ 1.0, 2.0, 4.0, 9.0 }[uniform( rng, 0u, 3u )];
    if ( i % 2 )
    {
      const auto d = random_block_dnf( rng, 1u, 10u );
      const auto x = std::uniform_int_distribution<input_t>( 0u, all_ones( d.arity() ) )( rng );
      const auto blocks = random_family( rng, d.arity() );
      const auto r = solve_sensitivity_problem( d, x, blocks, c );
      const auto k = block_sensitivity_for( to_truth_table( d ), x, blocks );
      const auto s = oracle::sensitivity( oracle::of( d ), d.arity(), r.y );
      CHECK( s * s * c >= k );
    }
    else
    {
      const auto n = uniform( rng, 1u, 8u );
      const auto f = random_mixed_function( rng, n );
      const auto x = std::uniform_int_distribution<input_t>( 0u, all_ones( n ) )( rng );
      const auto blocks = random_family( rng, n );
      const auto r = solve_sensitivity_problem( f, x, blocks, c );
      const auto k = block_sensitivity_for( f, x, blocks );
      const auto s = oracle::sensitivity( oracle::of( f ), n, r.y );
      CHECK( s * s * c >= k );
    }
  }
}

TEST_CASE( "solver errors" )
{
  caps small;
  small.n_max = 6u;
  // no structured dispatch for a non-block formula beyond the enumeration cap
  const auto d = read_dnf( "dnf 8\n+1 +2\n+2 +3\n" );
  try
  {
    solve_sensitivity_problem( d, 0u, block_family( { var_set{ 1u, 2u } }, 8u ), 4.0, small );
    FAIL( "expected a capacity error" );
  }
  catch ( const error& e )
  {
    CHECK( e.kind() == error_kind::capacity );
  }
}

} // TEST_SUITE
