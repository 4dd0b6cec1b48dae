// One line per acceptance criterion; exit status 0 iff all pass.

#include <sensbench/dnf_stats.hpp>
#include <sensbench/families.hpp>
#include <sensbench/lowsens.hpp>
#include <sensbench/measures.hpp>
#include <sensbench/verify.hpp>
#include <sensbench/witness.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace sensbench;

namespace
{

struct outcome
{
  bool passed = true;
  std::string detail;

  void require( bool ok, const std::string& what )
  {
    passed = passed && ok;
    detail += ( detail.empty() ? "" : "; " ) + ( ok ? what : "!" + what );
  }
};

using clock_type = std::chrono::steady_clock;

double seconds_since( clock_type::time_point start )
{
  return std::chrono::duration<double>( clock_type::now() - start ).count();
}

/* "group k/n" with the first failing instance appended */
void suite_group( outcome& out, const suite_report& rep, const std::string& group, std::size_t expected )
{
  const auto total = rep.count( group );
  const auto bad = rep.failures( group );
  std::ostringstream os;
  os << group << " " << ( total - bad ) << "/" << total;
  if ( expected && total != expected )
  {
    os << " (expected " << expected << " instances)";
  }
  for ( const auto& r : rep.results )
  {
    if ( r.group == group && !r.passed )
    {
      os << " first failure #" << r.id << " [" << r.instance << "] " << r.detail;
      break;
    }
  }
  out.require( bad == 0u && ( !expected || total == expected ), os.str() );
}

std::string str( unsigned v ) { return std::to_string( v ); }

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Acceptance criteria" };
  std::uint64_t seed = 1u;
  app.add_option( "--seed", seed, "Seed for the sampled suites" )->capture_default_str();
  CLI11_PARSE( app, argc, argv );

  suite_options options;
  options.seed = seed;

  std::map<std::string, suite_report> cache;
  const auto suite = [&]( const std::string& name ) -> const suite_report& {
    if ( !cache.count( name ) )
    {
      cache.emplace( name, run_suite( name, options ) );
    }
    return cache.at( name );
  };

  struct criterion
  {
    std::string title;
    double time_limit; // seconds, 0 for none
    std::function<void( outcome& )> body;
  };

  const std::vector<criterion> criteria{
      { "Ambainis-Sun equality bs = (2s^2 - s)/3", 1.0,
        []( outcome& o ) {
          const std::pair<unsigned, unsigned> want[] = { { 5u, 15u }, { 8u, 40u } };
          for ( auto n = 1u; n <= 2u; ++n )
          {
            const auto fi = ambainis_sun( n );
            const auto s = fi.predicted.s;
            const auto bs = fi.predicted.bs;
            o.require( s == want[n - 1u].first && bs == want[n - 1u].second && 3u * bs == 2u * s * s - s,
                       "n=" + str( n ) + " s=" + str( s ) + " bs=" + str( bs ) );
          }
        } },
      { "Rubinstein bs = s^2/2 (16-variable table) and Virza bs = (s^2 + s)/2", 30.0,
        []( outcome& o ) {
          caps limits;
          limits.bs_max = 16u;
          const auto r = rubinstein( 2u, true, limits );
          o.require( r.predicted.s == 4u && r.predicted.bs == 8u && 2u * r.predicted.bs == r.predicted.s * r.predicted.s,
                     "rubinstein n=2 s=" + str( r.predicted.s ) + " bs=" + str( r.predicted.bs ) );
          const auto m = measure( to_truth_table( *r.expanded, limits ), limits );
          const auto& p = r.predicted;
          o.require( m.s == p.s && m.bs == p.bs && m.s0 == p.s0 && m.s1 == p.s1 && m.bs0 == p.bs0 && m.bs1 == p.bs1,
                     "expanded " + str( m.arity ) + "-variable table s=" + str( m.s ) + " bs=" + str( m.bs ) );
          const auto v = virza( 2u );
          o.require( v.predicted.s == 5u && v.predicted.bs == 15u &&
                         2u * v.predicted.bs == v.predicted.s * v.predicted.s + v.predicted.s,
                     "virza n=2 s=" + str( v.predicted.s ) + " bs=" + str( v.predicted.bs ) );
        } },
      { "random block-property compact DNFs: bs0 = d_or, bs0 <= 4s^2, both sensitivity bounds", 120.0,
        [&]( outcome& o ) { suite_group( o, suite( "block-4s2" ), "theorem", 200u ); } },
      { "witness guarantees and the sensitivity problem with c = 4", 0.0,
        [&]( outcome& o ) { suite_group( o, suite( "block-4s2" ), "witness", 200u ); } },
      { "t-block bounds and the eps corollary", 0.0,
        [&]( outcome& o ) {
          const auto& rep = suite( "tblock" );
          suite_group( o, rep, "tblock", 100u );
          std::size_t corollary = 0u;
          for ( const auto& r : rep.results )
          {
            corollary += r.detail.find( "[eps=" ) != std::string::npos ? 1u : 0u;
          }
          o.require( corollary > 0u, str( static_cast<unsigned>( corollary ) ) + " instances exercise the corollary" );
        } },
      { "Kenyon-Kutin bs_l <= e/(l-1)! s^l", 0.0,
        [&]( outcome& o ) { suite_group( o, suite( "kenyon-kutin" ), "kenyon-kutin", 100u ); } },
      { "gamma bounds width - gamma <= s1 <= width, 2-mixing gives gamma = 0", 0.0,
        [&]( outcome& o ) {
          const auto& rep = suite( "gamma-bounds" );
          suite_group( o, rep, "gamma", 100u );
          std::size_t mixing = 0u;
          for ( const auto& r : rep.results )
          {
            mixing += r.detail.find( "gamma(2-mixing)" ) != std::string::npos ? 1u : 0u;
          }
          o.require( mixing > 0u, str( static_cast<unsigned>( mixing ) ) + " instances are 2-mixing" );
        } },
      { "onesbound tightness s0 = s1 = ceil(d_and/2) = n+1", 0.0,
        []( outcome& o ) {
          for ( auto n = 1u; n <= 3u; ++n )
          {
            const auto d = onesbound_tight( n );
            const auto m = sensitivity_report( to_truth_table( d ) );
            o.require( m.s0 == n + 1u && m.s1 == n + 1u && ceil_div( d.width(), 2u ) == n + 1u,
                       "n=" + str( n ) + " s0=" + str( m.s0 ) + " s1=" + str( m.s1 ) );
          }
        } },
      { "reconstruction round trips and pointwise s(f,x) = bs(f,x) for monotone f", 0.0,
        [&]( outcome& o ) {
          const auto& rep = suite( "reconstruction" );
          suite_group( o, rep, "majority", 50u );
          suite_group( o, rep, "monotone", 50u );
          suite_group( o, suite( "monotone-nisan" ), "nisan", 50u );
          suite_group( o, suite( "monotone-nisan" ), "nisan-global", 50u );
        } },
      { "proposition pairs: s(f)=p, s(g)=q, f != g, agreement radius p+q-1", 0.0,
        []( outcome& o ) {
          for ( auto p = 2u; p <= 4u; ++p )
          {
            for ( auto q = p; q <= 4u; ++q )
            {
              const auto pp = proposition_pair( p, q );
              const auto sf = sensitivity_report( pp.f ).s;
              const auto sg = sensitivity_report( pp.g ).s;
              const auto radius = agreement_radius( pp.f, pp.g, pp.a ^ all_ones( p + q ) );
              o.require( sf == p && sg == q && pp.f != pp.g && radius == p + q - 1u,
                         "(" + str( p ) + "," + str( q ) + ") radius " + ( radius ? str( *radius ) : "-" ) );
            }
          }
        } },
      { "s0 = 1: 1-set components are far-apart subcubes, DNF keeps bs0", 0.0,
        [&]( outcome& o ) {
          const auto& rep = suite( "hypercube" );
          suite_group( o, rep, "families", 5u );
          suite_group( o, rep, "synthetic", 50u );
        } },
      { "bs <= (2s^2 - s)/3 on normalized block transitive 2-mixing DNFs; 8s^3 >= n", 0.0,
        [&]( outcome& o ) {
          const auto& rep = suite( "mixing-AS" );
          suite_group( o, rep, "ambainis-sun", 2u );
          suite_group( o, rep, "theorem", 100u );
          suite_group( o, suite( "senslower" ), "corollary", 100u );
        } } };

  bool all = true;
  for ( std::size_t i = 0; i < criteria.size(); ++i )
  {
    const auto& c = criteria[i];
    outcome o;
    const auto start = clock_type::now();
    try
    {
      c.body( o );
    }
    catch ( const std::exception& e )
    {
      o.require( false, std::string( "error: " ) + e.what() );
    }
    const auto elapsed = seconds_since( start );
    if ( c.time_limit > 0.0 )
    {
      char buf[64];
      std::snprintf( buf, sizeof buf, "runtime %.2fs < %.0fs", elapsed, c.time_limit );
      o.require( elapsed < c.time_limit, buf );
    }
    all = all && o.passed;
    std::printf( "criterion %2zu %s  %s: %s (%.2fs)\n", i + 1u, o.passed ? "PASS" : "FAIL", c.title.c_str(),
                 o.detail.c_str(), elapsed );
    std::fflush( stdout );
  }
  std::printf( "acceptance: %s\n", all ? "all criteria pass" : "some criteria fail" );
  return all ? 0 : 1;
}
