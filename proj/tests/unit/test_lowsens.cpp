#include "oracles.hpp"

#include <sensbench/dnf_stats.hpp>
#include <sensbench/error.hpp>
#include <sensbench/families.hpp>
#include <sensbench/lowsens.hpp>
#include <sensbench/measures.hpp>
#include <sensbench/sampling.hpp>
#include <sensbench/witness.hpp>

#include <doctest.h>

#include <set>

using namespace sensbench;
using namespace sensbench::functions;

namespace
{

error_kind kind_of( auto&& fn )
{
  try
  {
    fn();
  }
  catch ( const error& e )
  {
    return e.kind();
  }
  FAIL( "no error thrown" );
  return error_kind::invariant;
}

std::set<std::pair<std::uint64_t, std::uint64_t>> term_set( const dnf& d )
{
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for ( const auto& t : d.terms() )
  {
    out.emplace( t.pos.mask(), t.neg.mask() );
  }
  return out;
}

} // namespace

TEST_SUITE( "lowsens" )
{

TEST_CASE( "ball sizes and file format" )
{
  CHECK( ball_size( 4u, 0u ) == 1u );
  CHECK( ball_size( 4u, 1u ) == 5u );
  CHECK( ball_size( 4u, 4u ) == 16u );
  const auto b = ball_values::from_function( majority( 3u ), 0b101u, 1u );
  CHECK( b.size() == 4u );
  CHECK( b.value( 0b101u ) == true );
  CHECK_FALSE( b.value( 0b010u ).has_value() );
  const auto text = write_ball( b );
  const auto back = read_ball( text );
  CHECK( back.values() == b.values() );
  CHECK( back.center() == b.center() );
  CHECK( back.radius() == 1u );
}

TEST_CASE( "ball validation" )
{
  CHECK( kind_of( [] { ball_values( 2u, 0u, 1u, { { 0u, false }, { 1u, true } } ); } ) == error_kind::usage ); // missing 01
  CHECK( kind_of( [] { ball_values( 2u, 0u, 0u, { { 0u, false }, { 3u, true } } ); } ) == error_kind::usage ); // outside
  CHECK( kind_of( [] { ball_values( 2u, 0u, 0u, { { 0u, false }, { 0u, true } } ); } ) == error_kind::usage ); // twice
  CHECK( kind_of( [] { read_ball( "ball 2 00 1\n00 0\n10 1\n" ); } ) == error_kind::parse );
  CHECK( kind_of( [] { read_ball( "ball 2 00 0\n00 0\n11 1\n" ); } ) == error_kind::parse );
  CHECK( kind_of( [] { read_ball( "ball 2 00 0\n00 2\n" ); } ) == error_kind::parse );
  CHECK( kind_of( [] { read_ball( "ball 2 0 0\n" ); } ) == error_kind::parse );
  CHECK_NOTHROW( read_ball( "# ball of radius 0\nball 2 00 0\n00 1 # center\n" ) );
}

TEST_CASE( "agreement radius" )
{
  const auto f = majority( 3u );
  CHECK( agreement_radius( f, f, 0u ) == 3u );
  const auto pp = proposition_pair( 2u, 2u );
  CHECK( agreement_radius( pp.f, pp.g, parse_bitstring( "0011", 4u ) ) == 3u );
  CHECK_FALSE( agreement_radius( f, ~f, 0u ).has_value() );
  CHECK( kind_of( [] { agreement_radius( or_n( 2u ), or_n( 3u ), 0u ); } ) == error_kind::arity_mismatch );
}

TEST_CASE( "majority reconstruction examples" )
{
  const auto f = pad_variables( and_n( 2u ), 6u );
  CHECK( reconstruct_majority( ball_values::from_function( f, 0u, 4u ), 2u ) == f );

  const auto zero = truth_table::constant( 3u, false );
  CHECK( reconstruct_majority( ball_values::from_function( zero, 0b110u, 0u ), 0u ) == zero );

  // xor has s = 4; claiming s <= 1 is detected
  CHECK( kind_of( [] { reconstruct_majority( ball_values::from_function( xor_n( 4u ), 0u, 2u ), 1u ); } ) ==
         error_kind::inconsistent_data );
  // radius below 2s
  CHECK( kind_of( [] { reconstruct_majority( ball_values::from_function( majority( 5u ), 0u, 2u ), 2u ); } ) ==
         error_kind::usage );
}

TEST_CASE( "monotone reconstruction examples" )
{
  CHECK( reconstruct_monotone( ball_values::from_function( majority( 3u ), 0u, 2u ), 2u ) == majority( 3u ) );
  CHECK( reconstruct_monotone( ball_values::from_function( or_n( 3u ), 0u, 1u ), 3u ) == or_n( 3u ) );
  const auto zero = truth_table::constant( 4u, false );
  CHECK( reconstruct_monotone( ball_values::from_function( zero, 0u, 0u ), 0u ) == zero );
  CHECK( kind_of( [] { reconstruct_monotone( ball_values::from_function( or_n( 3u ), 1u, 3u ), 3u ); } ) ==
         error_kind::usage );
  // non-monotone ball data
  CHECK( kind_of( [] { reconstruct_monotone( ball_values::from_function( xor_n( 3u ), 0u, 3u ), 3u ); } ) ==
         error_kind::inconsistent_data );
}

TEST_CASE( "property: reconstruction round trips" )
{
  rng_t rng( 61u );
  for ( auto i = 0; i < 40; ++i )
  {
    const auto n = uniform( rng, 1u, 9u );
    const auto f = random_mixed_function( rng, n );
    const auto s = sensitivity_report( f ).s;
    const auto center = std::uniform_int_distribution<input_t>( 0u, all_ones( n ) )( rng );
    CHECK( reconstruct_majority( ball_values::from_function( f, center, std::min( 2u * s, n ) ), s ) == f );

    const auto g = random_monotone_function( rng, n );
    const auto sg = sensitivity_report( g ).s;
    CHECK( reconstruct_monotone( ball_values::from_function( g, 0u, std::min( sg, n ) ), sg ) == g );
  }
}

TEST_CASE( "property: agreement radius at least s(f)+s(g) forces f = g" )
{
  rng_t rng( 62u );
  auto applicable = 0;
  for ( auto i = 0; i < 300; ++i )
  {
    const auto n = uniform( rng, 2u, 7u );
    const auto f = random_mixed_function( rng, n );
    auto g = f;
    const auto x = std::uniform_int_distribution<input_t>( 0u, all_ones( n ) )( rng );
    g.set( x, !g[x] );
    const auto sum = sensitivity_report( f ).s + sensitivity_report( g ).s;
    for ( input_t c = 0u; c <= all_ones( n ); ++c )
    {
      const auto r = agreement_radius( f, g, c );
      if ( r && *r >= sum )
      {
        ++applicable;
        CHECK( f == g );
      }
    }
  }
  CHECK( applicable == 0 );
}

TEST_CASE( "one-set components" )
{
  const auto r = one_set_components( to_truth_table( rubinstein_inner( 2u ) ) );
  REQUIRE( r.components.size() == 2u );
  CHECK( r.components[0].free.empty() );
  CHECK( r.components[1].free.empty() );
  CHECK( r.min_distance == 4u );
  CHECK( r.all_subcubes );
  CHECK( r.hypothesis );

  const auto a = one_set_components( to_truth_table( ambainis_sun_inner( 1u ) ) );
  REQUIRE( a.components.size() == 3u );
  for ( const auto& c : a.components )
  {
    CHECK( c.free.size() == 1u );
    CHECK( c.is_subcube );
  }

  const auto one = one_set_components( truth_table::constant( 3u, true ) );
  REQUIRE( one.components.size() == 1u );
  CHECK( one.components[0].free.size() == 3u );
  CHECK_FALSE( one.min_distance.has_value() );
}

TEST_CASE( "hypercubes_to_dnf" )
{
  const auto r = hypercubes_to_dnf( to_truth_table( rubinstein_inner( 2u ) ) );
  CHECK( term_set( r ) == term_set( rubinstein_inner( 2u ) ) );

  const auto a = hypercubes_to_dnf( to_truth_table( ambainis_sun_inner( 1u ) ) );
  CHECK( term_set( a ) == term_set( ambainis_sun_inner( 1u ) ) );

  const auto single = truth_table::from_function( 3u, []( input_t x ) { return bit( x, 1u ) && !bit( x, 2u ); } );
  const auto s = hypercubes_to_dnf( single );
  REQUIRE( s.size() == 1u );
  CHECK( s[0].pos == var_set{ 1u } );
  CHECK( s[0].neg == var_set{ 2u } );

  CHECK( kind_of( [] { hypercubes_to_dnf( or_n( 3u ) ); } ) == error_kind::hypothesis_violation );
}

TEST_CASE( "property: s0 = 1 functions decompose into far-apart subcubes" )
{
  rng_t rng( 63u );
  for ( auto i = 0; i < 30; ++i )
  {
    const auto n = uniform( rng, 3u, 9u );
    const auto f = random_s0_one_function( rng, n );
    REQUIRE( oracle::all_measures( oracle::of( f ), n, false ).s0 == 1u );
    const auto a = one_set_components( f );
    CHECK( a.all_subcubes );
    if ( a.min_distance )
    {
      CHECK( *a.min_distance >= 3u );
    }
    const auto d = hypercubes_to_dnf( f );
    const auto st = stats( d );
    CHECK( st.block );
    CHECK( st.transitive );
    CHECK( st.has_mixing( 3u ) );
    CHECK( block_sensitivity_report( to_truth_table( d ) ).bs0 == block_sensitivity_report( f ).bs0 );
  }
}

} // TEST_SUITE
