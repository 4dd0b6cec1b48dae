#include "oracles.hpp"

#include <sensbench/compact_form.hpp>
#include <sensbench/dnf.hpp>
#include <sensbench/dnf_stats.hpp>
#include <sensbench/error.hpp>
#include <sensbench/families.hpp>
#include <sensbench/measures.hpp>
#include <sensbench/sampling.hpp>

#include <doctest.h>

#include <string>

using namespace sensbench;
using namespace sensbench::functions;

namespace
{

const dnf or3 = read_dnf( "dnf 3\n+1\n+2\n+3\n" );

std::string message_of( auto&& fn )
{
  try
  {
    fn();
  }
  catch ( const error& e )
  {
    return e.what();
  }
  return {};
}

} // namespace

TEST_SUITE( "dnf" )
{

TEST_CASE( "term evaluation examples" )
{
  const auto single = read_dnf( "dnf 2\n+1 +2\n" );
  CHECK( single( 0b11u ) );
  CHECK_FALSE( or3( 0u ) );
  const auto g = ambainis_sun_inner( 1u );
  CHECK( g( parse_bitstring( "001100", 6u ) ) );
  CHECK( g[0].pos == var_set{ 3u, 4u } );
  CHECK( g[0].neg == var_set{ 1u, 2u, 5u } );
  CHECK( g[0].satisfied_by( parse_bitstring( "001100", 6u ) ) );
}

TEST_CASE( "to_truth_table examples" )
{
  CHECK( to_truth_table( dnf( 3u ) ) == truth_table::constant( 3u, false ) );
  const auto t = to_truth_table( or3 );
  CHECK_FALSE( t[0u] );
  CHECK( t.count_ones() == 7u );
  const auto r = to_truth_table( rubinstein_inner( 2u ) );
  CHECK( r.count_ones() == 2u );
  CHECK( r[parse_bitstring( "1100", 4u )] );
  CHECK( r[parse_bitstring( "0011", 4u )] );
}

TEST_CASE( "file format" )
{
  const auto d = read_dnf( "# comment\ndnf 5\n+3 +4 -1   # trailing\n\n*\n" );
  CHECK( d.arity() == 5u );
  CHECK( d.size() == 2u );
  CHECK( d[1].width() == 0u );
  CHECK( read_dnf( write_dnf( d ) ) == d );
}

TEST_CASE( "parse errors carry positions" )
{
  const auto msg = message_of( [] { read_dnf( "dnf 3\n+1 +x\n" ); } );
  CHECK( msg.find( "line 2" ) != std::string::npos );
  CHECK( msg.find( "column 4" ) != std::string::npos );
  CHECK( message_of( [] { read_dnf( "+1\n" ); } ).find( "header" ) != std::string::npos );
  CHECK( message_of( [] { read_dnf( "dnf 2\n+3\n" ); } ).find( "line 2" ) != std::string::npos );
  CHECK( message_of( [] { read_dnf( "dnf 2\n+1 -1\n" ); } ).find( "line 2" ) != std::string::npos );
}

TEST_CASE( "property: serialize/parse round trip preserves the function" )
{
  rng_t rng( 4u );
  for ( auto i = 0; i < 50; ++i )
  {
    const auto d = random_dnf( rng, 1u, 10u );
    CHECK( to_truth_table( read_dnf( write_dnf( d ) ) ) == to_truth_table( d ) );
  }
}

TEST_CASE( "to_truth_table agrees with direct evaluation" )
{
  rng_t rng( 6u );
  for ( auto i = 0; i < 30; ++i )
  {
    const auto d = random_dnf( rng, 1u, 8u );
    const auto f = to_truth_table( d );
    const auto naive = oracle::of( d );
    for ( input_t x = 0u; x < f.num_rows(); ++x )
    {
      REQUIRE( f[x] == naive( x ) );
      CHECK( sensitivity_at( d, x ) == sensitivity_at( f, x ) );
    }
  }
}

TEST_CASE( "compact form examples" )
{
  const auto r = check_compact_form( or3 );
  CHECK( r.compact() );
  CHECK( r.normalized );

  const auto sub = read_dnf( "dnf 2\n+1\n+1 +2\n" );
  const auto s = check_compact_form( sub );
  CHECK( s.cond_a );
  CHECK_FALSE( s.cond_c );
  CHECK( s.private_assignments[0].has_value() );
  CHECK_FALSE( s.private_assignments[1].has_value() );

  const auto a = check_compact_form( ambainis_sun_inner( 1u ) );
  CHECK( a.cond_a );
  CHECK( a.cond_b );
  CHECK( a.cond_c );
}

TEST_CASE( "cond_c: literal-fixing search agrees with a full scan up to arity 10" )
{
  rng_t rng( 10u );
  for ( auto i = 0; i < 80; ++i )
  {
    const auto d = random_dnf( rng, 1u, 10u );
    for ( std::size_t t = 0; t < d.size(); ++t )
    {
      const auto fast = private_assignment( d, t );
      const auto slow = oracle::private_assignment( d, t );
      REQUIRE( fast.has_value() == slow.has_value() );
      if ( fast )
      {
        CHECK( d[t].satisfied_by( *fast ) );
        for ( std::size_t j = 0; j < d.size(); ++j )
        {
          CHECK( ( j == t || !d[j].satisfied_by( *fast ) ) );
        }
      }
    }
  }
}

TEST_CASE( "normalize examples" )
{
  const auto not_or3 = ~or_n( 3u );
  const auto n1 = normalize( not_or3 );
  CHECK( n1.shift == 0u );
  CHECK( n1.polarity );
  CHECK( n1.function == or_n( 3u ) );

  const auto n2 = normalize( or_n( 3u ) );
  CHECK( n2.shift == 0u );
  CHECK_FALSE( n2.polarity );
  CHECK( to_truth_table( n2.formula ) == or_n( 3u ) );

  const auto n3 = normalize( and_n( 2u ) );
  CHECK( n3.shift == 0b11u );
  CHECK( n3.polarity );
  CHECK( n3.function == or_n( 2u ) );

  CHECK_THROWS_AS( normalize( truth_table::constant( 3u, true ) ), error );
}

TEST_CASE( "property: normalize yields all compact-form flags and keeps s, bs" )
{
  rng_t rng( 12u );
  for ( auto i = 0; i < 40; ++i )
  {
    const auto f = random_mixed_function( rng, uniform( rng, 1u, 9u ) );
    if ( f.is_constant() )
    {
      continue;
    }
    const auto r = normalize( f );
    CHECK( r.report.compact() );
    CHECK( r.report.normalized );
    CHECK( to_truth_table( r.formula ) == r.function );
    const auto before = measure( f );
    const auto after = measure( r.function );
    CHECK( before.s == after.s );
    CHECK( before.bs == after.bs );
    // independent check of (c)
    for ( std::size_t t = 0; t < r.formula.size(); ++t )
    {
      CHECK( oracle::private_assignment( r.formula, t ).has_value() );
    }
  }
}

TEST_CASE( "irredundant prime cover represents f with prime terms" )
{
  rng_t rng( 13u );
  for ( auto i = 0; i < 30; ++i )
  {
    const auto n = uniform( rng, 1u, 7u );
    const auto f = random_mixed_function( rng, n );
    const auto d = irredundant_prime_cover( f );
    REQUIRE( to_truth_table( d ) == f );
    for ( const auto& t : d.terms() )
    {
      // dropping any literal leaves the on-set
      for ( const auto v : t.vars() )
      {
        term weaker = t;
        weaker.pos.erase( v );
        weaker.neg.erase( v );
        bool covered = true;
        for ( input_t x = 0u; x < f.num_rows() && covered; ++x )
        {
          covered = !weaker.satisfied_by( x ) || f[x];
        }
        CHECK_FALSE( covered );
      }
    }
  }
}

TEST_CASE( "stats examples" )
{
  const auto o = stats( or3 );
  CHECK( o.size == 3u );
  CHECK( o.width == 1u );
  CHECK( o.gamma == 0u );
  CHECK( o.t_min == 1u );
  CHECK( o.block );
  CHECK_FALSE( o.mixing_max.has_value() );
  CHECK( o.transitive );

  const auto r = stats( rubinstein_inner( 2u ) );
  CHECK( r.block );
  CHECK( r.transitive );
  CHECK( r.mixing_max == 4u );

  const auto a = stats( ambainis_sun_inner( 1u ) );
  CHECK( a.block );
  CHECK( a.transitive );
  CHECK( a.mixing_max == 3u );
}

TEST_CASE( "property violations name the offending terms" )
{
  const auto d = read_dnf( "dnf 3\n+1 +2\n+2 +3\n" );
  const auto msg = message_of( [&] { require_block_property( d ); } );
  CHECK( msg.find( "terms 1 and 2" ) != std::string::npos );
  CHECK( msg.find( "x2" ) != std::string::npos );
  CHECK_NOTHROW( require_t_block_property( d, 2u ) );
  CHECK( message_of( [] { require_zero_is_false( read_dnf( "dnf 2\n+1\n-2\n" ) ); } ).find( "term 2" ) != std::string::npos );
}

TEST_CASE( "gamma bound examples" )
{
  const auto a = bounds_report( ambainis_sun_inner( 1u ), to_truth_table( ambainis_sun_inner( 1u ) ) );
  CHECK( a.width == 5u );
  CHECK( a.gamma == 0u );
  CHECK( a.s1 == 5u );
  CHECK( a.ok() );
  const auto o = bounds_report( or3, to_truth_table( or3 ) );
  CHECK( o.s1 == 1u );
  const auto and2 = read_dnf( "dnf 2\n+1 +2\n" );
  const auto b = bounds_report( and2, to_truth_table( and2 ) );
  CHECK( b.width == 2u );
  CHECK( b.s1 == 2u );
  const auto bad = read_dnf( "dnf 2\n+1\n+1 +2\n" );
  CHECK_FALSE( bounds_report( bad, to_truth_table( bad ) ).checked );
}

TEST_CASE( "property: width - gamma <= s1 <= width on compact formulas; 2-mixing gives s1 = width" )
{
  rng_t rng( 14u );
  auto checked = 0;
  for ( auto i = 0; i < 200 && checked < 40; ++i )
  {
    const auto raw = i % 2 ? random_mixing_dnf( rng, 2u, 10u, 2u ) : random_dnf( rng, 2u, 10u );
    const auto d = compact_repair( raw );
    if ( !d )
    {
      continue;
    }
    ++checked;
    const auto b = bounds_report( *d, to_truth_table( *d ) );
    REQUIRE( b.checked );
    const auto s1 = oracle::all_measures( oracle::of( *d ), d->arity(), false ).s1;
    CHECK( b.s1 == s1 );
    CHECK( s1 + b.gamma >= b.width );
    CHECK( s1 <= b.width );
    if ( stats( *d ).has_mixing( 2u ) )
    {
      CHECK( b.gamma == 0u );
      CHECK( s1 == b.width );
    }
  }
  CHECK( checked >= 20 );
}

} // TEST_SUITE
