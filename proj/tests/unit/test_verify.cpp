#include <sensbench/error.hpp>
#include <sensbench/families.hpp>
#include <sensbench/io.hpp>
#include <sensbench/render.hpp>
#include <sensbench/verify.hpp>

#include <doctest.h>

using namespace sensbench;

namespace
{

suite_options small( std::uint64_t seed = 1u )
{
  suite_options o;
  o.seed = seed;
  o.count = 4u;
  return o;
}

std::vector<std::tuple<std::string, bool, std::string, std::string>> flatten( const suite_report& r )
{
  std::vector<std::tuple<std::string, bool, std::string, std::string>> out;
  for ( const auto& c : r.results )
  {
    out.emplace_back( c.group, c.passed, c.detail, c.counterexample );
  }
  return out;
}

} // namespace

TEST_SUITE( "verify" )
{

TEST_CASE( "format detection and multi-table files" )
{
  CHECK( detect_format( "# x\n\ntt 2\n8\n" ) == file_format::truth_table );
  CHECK( detect_format( "dnf 3\n+1\n" ) == file_format::dnf );
  CHECK( detect_format( "ball 2 00 0\n00 0\n" ) == file_format::ball );
  CHECK( detect_format( "hello\n" ) == file_format::unknown );
  const auto tables = read_truth_tables( "tt 2\n8\ntt 3\nfe\n" );
  REQUIRE( tables.size() == 2u );
  CHECK( tables[0].arity() == 2u );
  CHECK( tables[1].arity() == 3u );
}

TEST_CASE( "text rendering flattens nested values" )
{
  const json j{ { "a", 1 }, { "b", { { "c", "x" } } }, { "blocks", { { 1, 2 }, { 3 } } }, { "none", nullptr } };
  const auto text = to_text( j );
  CHECK( text.find( "b.c" ) != std::string::npos );
  CHECK( text.find( "{1,2} {3}" ) != std::string::npos );
  CHECK( text.find( "none    -" ) != std::string::npos );
}

TEST_CASE( "every suite is deterministic for a seed" )
{
  for ( const auto& name : suite_names() )
  {
    if ( name == "families" )
    {
      continue; // fixed instances, covered by the acceptance run
    }
    const auto a = run_suite( name, small( 9u ) );
    const auto b = run_suite( name, small( 9u ) );
    CHECK_MESSAGE( flatten( a ) == flatten( b ), name );
    CHECK( a.results.size() > 0u );
  }
}

TEST_CASE( "different seeds sample different instances" )
{
  const auto a = run_suite( "block-4s2", small( 1u ) );
  const auto b = run_suite( "block-4s2", small( 2u ) );
  CHECK( flatten( a ) != flatten( b ) );
}

TEST_CASE( "unknown suite" )
{
  CHECK_THROWS_AS( run_suite( "nope" ), error );
  CHECK_THROWS_AS( replay_instance( "nope", "dnf 1\n+1\n" ), error );
}

TEST_CASE( "saved counterexamples re-trigger the same failure" )
{
  // the pointwise monotone check has genuine counterexamples (AND_2 at 00)
  const auto rep = run_suite( "monotone-nisan", small() );
  std::size_t replayed = 0u;
  for ( const auto& r : rep.results )
  {
    const auto again = replay_instance( rep.name, r.counterexample, small() );
    std::size_t fails = 0u;
    for ( const auto& x : again.results )
    {
      if ( x.group == r.group )
      {
        fails += x.passed ? 0u : 1u;
      }
    }
    CHECK( ( fails > 0u ) == !r.passed );
    replayed += r.passed ? 0u : 1u;
  }
  CHECK( replayed > 0u );
  const auto and2 = replay_instance( "monotone-nisan", "tt 2\n8\n" );
  CHECK( and2.failures( "nisan" ) == 1u );
  CHECK( and2.failures( "nisan-global" ) == 0u );
}

TEST_CASE( "passing instances replay as passing" )
{
  for ( const auto& name : suite_names() )
  {
    if ( name == "families" )
    {
      continue;
    }
    const auto rep = run_suite( name, small( 3u ) );
    for ( const auto& r : rep.results )
    {
      if ( !r.passed || r.group == "ambainis-sun" || r.group == "families" || r.counterexample.empty() )
      {
        continue;
      }
      const auto again = replay_instance( name, r.counterexample, small( 3u ) );
      CHECK_MESSAGE( again.count( r.group ) > 0u, name << "/" << r.group );
      CHECK_MESSAGE( again.failures( r.group ) == 0u, name << "/" << r.group << " #" << r.id << ": " << r.counterexample );
    }
  }
}

TEST_CASE( "replay rejects instances outside the suite's hypotheses" )
{
  try
  {
    replay_instance( "block-4s2", "dnf 3\n+1 +2\n+2 +3\n" );
    FAIL( "expected an error" );
  }
  catch ( const error& e )
  {
    CHECK( e.kind() == error_kind::usage );
  }
  CHECK_THROWS_AS( replay_instance( "families", "dnf 1\n+1\n" ), error );
  CHECK_THROWS_AS( replay_instance( "gamma-bounds", "tt 1\n2\n" ), error );
}

} // TEST_SUITE
