#include <sensbench/compact_form.hpp>
#include <sensbench/dnf_stats.hpp>
#include <sensbench/error.hpp>
#include <sensbench/families.hpp>
#include <sensbench/io.hpp>
#include <sensbench/lowsens.hpp>
#include <sensbench/measures.hpp>
#include <sensbench/sampling.hpp>
#include <sensbench/verify.hpp>
#include <sensbench/witness.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace sensbench
{

std::size_t suite_report::failures() const
{
  return static_cast<std::size_t>( std::count_if( results.begin(), results.end(), []( const auto& r ) { return !r.passed; } ) );
}

std::size_t suite_report::count( std::string_view group ) const
{
  return static_cast<std::size_t>(
      std::count_if( results.begin(), results.end(), [&]( const auto& r ) { return r.group == group; } ) );
}

std::size_t suite_report::failures( std::string_view group ) const
{
  return static_cast<std::size_t>(
      std::count_if( results.begin(), results.end(), [&]( const auto& r ) { return r.group == group && !r.passed; } ) );
}

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{ "gamma-bounds", "block-4s2", "tblock",  "kenyon-kutin", "mixing-AS",
                                               "families",     "reconstruction", "monotone-nisan", "hypercube", "senslower" };
  return names;
}

namespace
{

template<typename T>
std::string show( const T& v )
{
  std::ostringstream os;
  os.precision( 6 );
  os << v;
  return os.str();
}

class checker
{
public:
  void holds( bool ok, const std::string& text ) { add( ok, text ); }

  template<typename A, typename B>
  void at_least( std::string_view name, const A& measured, const B& bound )
  {
    add( measured >= bound, std::string( name ) + "=" + show( measured ) + ">=" + show( bound ) );
  }

  template<typename A, typename B>
  void at_most( std::string_view name, const A& measured, const B& bound )
  {
    add( measured <= bound, std::string( name ) + "=" + show( measured ) + "<=" + show( bound ) );
  }

  template<typename A, typename B>
  void equal( std::string_view name, const A& measured, const B& expected )
  {
    add( measured == expected, std::string( name ) + "=" + show( measured ) + "==" + show( expected ) );
  }

  void note( const std::string& text ) { parts_.push_back( text ); }

  bool ok() const { return ok_; }

  std::string detail() const
  {
    std::string out;
    for ( const auto& p : parts_ )
    {
      out += ( out.empty() ? "" : "; " ) + p;
    }
    return out;
  }

private:
  void add( bool ok, std::string text )
  {
    ok_ = ok_ && ok;
    parts_.push_back( ok ? std::move( text ) : "!" + text );
  }

  bool ok_ = true;
  std::vector<std::string> parts_;
};

template<typename Fn>
void add_case( suite_report& rep, std::string group, Fn&& body )
{
  check_result r;
  r.group = std::move( group );
  r.id = rep.results.size() + 1u;
  checker c;
  try
  {
    body( r, c );
    r.passed = c.ok();
    r.detail = c.detail();
  }
  catch ( const std::exception& e )
  {
    r.passed = false;
    const auto before = c.detail();
    r.detail = before + ( before.empty() ? "" : "; " ) + "!error: " + e.what();
  }
  rep.results.push_back( std::move( r ) );
}

rng_t suite_rng( std::uint64_t seed, std::string_view name )
{
  std::uint64_t h = 1469598103934665603u;
  for ( const auto ch : name )
  {
    h = ( h ^ static_cast<unsigned char>( ch ) ) * 1099511628211u;
  }
  std::seed_seq seq{ static_cast<std::uint32_t>( seed ), static_cast<std::uint32_t>( seed >> 32 ),
                     static_cast<std::uint32_t>( h ), static_cast<std::uint32_t>( h >> 32 ) };
  return rng_t( seq );
}

template<typename Gen>
dnf sample_compact( Gen&& gen, const caps& limits )
{
  for ( auto attempt = 0u; attempt < 10000u; ++attempt )
  {
    if ( auto d = compact_repair( gen(), limits ) )
    {
      return *d;
    }
  }
  throw error( error_kind::invariant, "sampler found no compact-form instance" );
}

std::string describe( const dnf& d ) { return "n=" + std::to_string( d.arity() ) + " d_or=" + std::to_string( d.size() ) + " d_and=" + std::to_string( d.width() ); }

std::size_t count_or( const suite_options& o, std::size_t fallback ) { return o.count ? o.count : fallback; }

/* s(f, y)^2 * c >= k */
bool meets_target( unsigned s, unsigned k, double c ) { return static_cast<double>( s ) * s * c >= static_cast<double>( k ); }

block_family random_blocks( rng_t& rng, unsigned n )
{
  std::vector<var_set> blocks;
  var_set current;
  for ( auto v = 1u; v <= n; ++v )
  {
    const auto roll = uniform( rng, 0u, 3u );
    if ( roll == 0u )
    {
      continue;
    }
    current.insert( v );
    if ( roll == 1u || v == n )
    {
      blocks.push_back( current );
      current = {};
    }
  }
  if ( !current.empty() )
  {
    blocks.push_back( current );
  }
  return block_family( std::move( blocks ), n );
}

block_family singleton_blocks( unsigned n )
{
  std::vector<var_set> blocks;
  for ( auto v = 1u; v <= n; ++v )
  {
    blocks.push_back( var_set{ v } );
  }
  return block_family( std::move( blocks ), n );
}

using query_list = std::vector<std::pair<input_t, block_family>>;

// ---------------------------------------------------------------------------
// per-instance checks, shared by sampling runs and replay

void check_gamma( checker& c, const dnf& d, const caps& limits )
{
  const auto b = bounds_report( d, to_truth_table( d, limits ), limits );
  c.holds( b.checked, "compact form" );
  c.at_least( "s1+gamma", b.s1 + b.gamma, b.width );
  c.at_most( "s1", b.s1, b.width );
  if ( b.mixing_applies )
  {
    c.equal( "gamma(2-mixing)", b.gamma, 0u );
    c.equal( "s1(2-mixing)", b.s1, b.width );
  }
}

void check_block_theorem( checker& c, const dnf& d, const truth_table& f, const caps& limits )
{
  const auto m = measure( f, limits );
  c.equal( "bs0", m.bs0, d.size() );
  c.at_most( "bs0", m.bs0, 4u * m.s * m.s );
  c.at_least( "s", m.s, ceil_div( d.size(), 2u * d.width() - 1u ) );
  c.at_least( "s", m.s, ceil_div( d.width(), 2u ) );
}

void check_block_witnesses( checker& c, const dnf& d, const truth_table& f, const query_list& queries,
                            const caps& limits )
{
  const auto w0 = zero_witness_block( d );
  c.holds( !f[w0.input], "f(block witness)=0" );
  c.at_least( "s(block witness)", sensitivity_at( f, w0.input ), ceil_div( d.size(), 2u * d.width() - 1u ) );
  const auto w1 = witness_onesbound( d );
  c.holds( f[w1.input] == w1.value, "onesbound side" );
  c.at_least( "s(onesbound witness)", sensitivity_at( f, w1.input ), ceil_div( d.width(), 2u ) );
  std::size_t misses = 0u;
  std::string first;
  for ( const auto& [x, blocks] : queries )
  {
    const auto sol = solve_sensitivity_problem( d, x, blocks, 4.0, limits );
    const auto k = block_sensitivity_for( f, x, blocks );
    const auto s = sensitivity_at( f, sol.y );
    if ( !meets_target( s, k, 4.0 ) && misses++ == 0u )
    {
      first = " (first miss x=" + to_bitstring( x, d.arity() ) + " k=" + std::to_string( k ) + " s=" +
              std::to_string( s ) + " [" + to_string( sol.procedure ) + "])";
    }
  }
  c.holds( misses == 0u, "4*s(f,y)^2>=k for " + std::to_string( queries.size() ) + " queries" + first );
}

void check_tblock( checker& c, const dnf& d, unsigned t, const caps& limits )
{
  require_t_block_property( d, t );
  const auto f = to_truth_table( d, limits );
  const auto m = measure( f, limits );
  c.at_most( "bs0", m.bs0, d.size() );
  const auto w = zero_witness_tblock( d, t );
  c.holds( !f[w.input], "f(t-block witness)=0" );
  c.at_least( "s(t-block witness)", sensitivity_at( f, w.input ), greedy_bound( d.size(), d.width(), t ) );
  for ( const double eps : { 0.5, 1.0 } )
  {
    if ( static_cast<double>( t ) <= d.size() / std::pow( d.width(), 1.0 + eps ) )
    {
      const auto bound = t * std::pow( 3.0 * m.s, 1.0 + 1.0 / eps );
      c.at_most( "bs0[eps=" + show( eps ) + "]", static_cast<double>( m.bs0 ), bound );
    }
  }
}

void check_kenyon_kutin( checker& c, const truth_table& f, const caps& limits )
{
  const auto s = sensitivity_report( f, limits ).s;
  c.equal( "bs_1", bs_capped( f, 1u, limits ), s );
  double factorial = 1.0;
  for ( auto ell = 2u; ell <= s; ++ell )
  {
    factorial *= ell - 1u;
    const auto bound = std::numbers::e / factorial * std::pow( static_cast<double>( s ), ell );
    c.at_most( "bs_" + std::to_string( ell ), static_cast<double>( bs_capped( f, ell, limits ) ), bound );
  }
}

/* empty string when d satisfies the hypotheses of the mixing theorem */
std::string mixing_precondition( const dnf& d, const truth_table& f, const caps& limits )
{
  const auto st = stats( d );
  if ( !st.block )
  {
    return "not a block-property DNF";
  }
  if ( !st.transitive )
  {
    return "not transitive";
  }
  if ( !st.has_mixing( 2u ) )
  {
    return "not 2-mixing";
  }
  if ( relevant_variables( f ).size() < 2u )
  {
    return "fewer than 2 relevant variables";
  }
  if ( !check_compact_form( d, limits ).normalized )
  {
    return "not normalized";
  }
  return {};
}

void check_mixing_theorem( checker& c, const dnf& d, const truth_table& f, const caps& limits )
{
  const auto m = measure( f, limits );
  c.at_most( "3bs", 3u * m.bs, 2u * m.s * m.s - m.s );
  const auto w = witness_2mixing_components( d );
  c.holds( !f[w.input], "f(mixing witness)=0" );
  c.at_least( "s(mixing witness)", sensitivity_at( f, w.input ), w.guaranteed_bound );
}

void check_majority( checker& c, const truth_table& f, const std::vector<input_t>& centers, const caps& limits )
{
  const auto n = f.arity();
  const auto s = sensitivity_report( f, limits ).s;
  const auto radius = std::min( 2u * s, n );
  std::size_t misses = 0u;
  std::string first;
  for ( const auto center : centers )
  {
    std::string why;
    try
    {
      if ( reconstruct_majority( ball_values::from_function( f, center, radius ), s, limits ) != f )
      {
        why = "differs";
      }
    }
    catch ( const std::exception& e )
    {
      why = e.what();
    }
    if ( !why.empty() && misses++ == 0u )
    {
      first = " (first miss center " + to_bitstring( center, n ) + ": " + why + ")";
    }
  }
  c.holds( misses == 0u, "radius " + std::to_string( radius ) + " round trip at " + std::to_string( centers.size() ) +
                             " centers" + first );
}

void check_monotone_reconstruction( checker& c, const truth_table& f, const caps& limits )
{
  const auto s = sensitivity_report( f, limits ).s;
  const auto ball = ball_values::from_function( f, 0u, std::min( s, f.arity() ) );
  c.holds( reconstruct_monotone( ball, s, limits ) == f, "radius " + std::to_string( s ) + " round trip" );
}

void check_uniqueness( checker& c, const truth_table& f, const truth_table& g, const std::vector<input_t>& centers,
                       const caps& limits )
{
  const auto sum = sensitivity_report( f, limits ).s + sensitivity_report( g, limits ).s;
  std::size_t applicable = 0u;
  std::optional<input_t> bad;
  for ( const auto center : centers )
  {
    const auto radius = agreement_radius( f, g, center, limits );
    if ( radius && *radius >= sum )
    {
      ++applicable;
      if ( f != g && !bad )
      {
        bad = center;
      }
    }
  }
  c.holds( !bad, "agreement radius >=s(f)+s(g)=" + std::to_string( sum ) + " implies f=g (" +
                     std::to_string( applicable ) + " of " + std::to_string( centers.size() ) + " centers apply)" +
                     ( bad ? " fails at center " + to_bitstring( *bad, f.arity() ) : "" ) );
}

void check_xor( checker& c, const truth_table& f, const truth_table& g, const caps& limits )
{
  const auto mf = measure( f, limits );
  const auto mg = measure( g, limits );
  const auto mx = measure( xor_tt( f, g ), limits );
  c.at_most( "s(f^g)", mx.s, mf.s + mg.s );
  c.at_most( "bs(f^g)", mx.bs, mf.bs + mg.bs );
}

void check_nisan( checker& c, const truth_table& f, const caps& limits )
{
  c.holds( is_monotone( f, limits ), "monotone" );
  const auto prof = sensitivity_profile( f, limits );
  std::size_t mismatches = 0u;
  std::optional<input_t> first;
  for ( input_t x = 0u; x < f.num_rows(); ++x )
  {
    if ( block_sensitivity_at( f, x, limits ).count != prof[x] )
    {
      ++mismatches;
      first = first.value_or( x );
    }
  }
  c.holds( mismatches == 0u, "s(f,x)=bs(f,x) at all " + std::to_string( f.num_rows() ) + " inputs" +
                                 ( first ? " (first mismatch " + to_bitstring( *first, f.arity() ) + ")" : "" ) );
}

void check_nisan_global( checker& c, const truth_table& f, const caps& limits )
{
  c.holds( is_monotone( f, limits ), "monotone" );
  const auto m = measure( f, limits );
  c.equal( "s", m.s, m.bs );
}

void check_hypercubes( checker& c, const truth_table& f, const caps& limits )
{
  const auto a = one_set_components( f, limits );
  c.holds( a.hypothesis, "s0=1" );
  c.holds( a.all_subcubes, std::to_string( a.components.size() ) + " components are subcubes" );
  if ( a.min_distance )
  {
    c.at_least( "min distance", *a.min_distance, 3u );
  }
  const auto d = hypercubes_to_dnf( f, limits );
  const auto st = stats( d );
  c.holds( st.block, "block" );
  c.holds( st.transitive, "transitive" );
  c.holds( st.has_mixing( 3u ), "mixing_max>=3" );
  const auto before = block_sensitivity_report( f, limits ).bs0;
  const auto after = block_sensitivity_report( to_truth_table( d, limits ), limits ).bs0;
  c.equal( "bs0(dnf)", after, before );
}

void check_senslower( checker& c, const dnf& d, const caps& limits )
{
  const auto f = to_truth_table( d, limits );
  const auto n = relevant_variables( f ).size();
  const auto s = sensitivity_report( f, limits ).s;
  c.at_least( "8s^3", 8u * s * s * s, n );
}

void check_family( checker& c, const family_instance& fi )
{
  c.equal( "s", fi.predicted.s, fi.expected_s );
  c.equal( "bs", fi.predicted.bs, fi.expected_bs );
  const auto st = stats( fi.g );
  c.holds( st.block, "block" );
}

// ---------------------------------------------------------------------------
// sampled suites

suite_report gamma_bounds( const suite_options& o )
{
  suite_report rep;
  auto rng = suite_rng( o.seed, "gamma-bounds" );
  for ( std::size_t i = 0; i < count_or( o, 100u ); ++i )
  {
    add_case( rep, "gamma", [&]( check_result& r, checker& c ) {
      const auto kind = i % 3u;
      const auto d = sample_compact(
          [&] {
            if ( kind == 0u )
            {
              return random_dnf( rng, 2u, 12u );
            }
            if ( kind == 1u )
            {
              return random_mixing_dnf( rng, 2u, 12u, 2u );
            }
            return random_block_dnf( rng, 2u, 12u );
          },
          o.limits );
      r.instance = describe( d );
      r.counterexample = write_dnf( d );
      check_gamma( c, d, o.limits );
    } );
  }
  return rep;
}

suite_report block_4s2( const suite_options& o )
{
  suite_report rep;
  auto rng = suite_rng( o.seed, "block-4s2" );
  for ( std::size_t i = 0; i < count_or( o, 200u ); ++i )
  {
    dnf d;
    std::string failure;
    try
    {
      d = sample_compact( [&] { return random_block_dnf( rng, 2u, 12u ); }, o.limits );
    }
    catch ( const std::exception& e )
    {
      failure = e.what();
    }
    const auto header = [&]( check_result& r ) {
      if ( !failure.empty() )
      {
        throw error( error_kind::invariant, failure );
      }
      r.instance = describe( d );
      r.counterexample = write_dnf( d );
    };
    const auto f = failure.empty() ? to_truth_table( d, o.limits ) : truth_table{};
    add_case( rep, "theorem", [&]( check_result& r, checker& c ) {
      header( r );
      check_block_theorem( c, d, f, o.limits );
    } );
    add_case( rep, "witness", [&]( check_result& r, checker& c ) {
      header( r );
      const query_list queries{
          { 0u, block_sensitivity_at( f, 0u, o.limits ).blocks },
          { std::uniform_int_distribution<input_t>( 0u, all_ones( d.arity() ) )( rng ), random_blocks( rng, d.arity() ) } };
      check_block_witnesses( c, d, f, queries, o.limits );
    } );
  }
  return rep;
}

suite_report tblock( const suite_options& o )
{
  suite_report rep;
  auto rng = suite_rng( o.seed, "tblock" );
  for ( std::size_t i = 0; i < count_or( o, 100u ); ++i )
  {
    add_case( rep, "tblock", [&]( check_result& r, checker& c ) {
      const auto t = uniform( rng, 2u, 3u );
      const auto d = sample_compact( [&] { return random_t_block_dnf( rng, 4u, 12u, t ); }, o.limits );
      r.instance = describe( d ) + " t=" + std::to_string( t );
      r.counterexample = write_dnf( d );
      check_tblock( c, d, t, o.limits );
    } );
  }
  return rep;
}

suite_report kenyon_kutin( const suite_options& o )
{
  suite_report rep;
  auto rng = suite_rng( o.seed, "kenyon-kutin" );
  for ( std::size_t i = 0; i < count_or( o, 100u ); ++i )
  {
    add_case( rep, "kenyon-kutin", [&]( check_result& r, checker& c ) {
      const auto n = uniform( rng, 2u, 10u );
      const auto f = random_mixed_function( rng, n );
      r.instance = "n=" + std::to_string( n );
      r.counterexample = write_truth_table( f );
      check_kenyon_kutin( c, f, o.limits );
    } );
  }
  return rep;
}

suite_report mixing_as( const suite_options& o )
{
  suite_report rep;
  auto rng = suite_rng( o.seed, "mixing-AS" );
  for ( auto n = 1u; n <= 2u; ++n )
  {
    add_case( rep, "ambainis-sun", [&]( check_result& r, checker& c ) {
      const auto fi = ambainis_sun( n, false, o.limits );
      r.instance = "ambainis-sun n=" + std::to_string( n );
      r.counterexample = write_dnf( fi.g );
      const auto s = fi.predicted.s;
      c.equal( "3bs", 3u * fi.predicted.bs, 2u * s * s - s );
    } );
  }
  for ( std::size_t i = 0; i < count_or( o, 100u ); ++i )
  {
    add_case( rep, "theorem", [&]( check_result& r, checker& c ) {
      dnf d;
      truth_table f;
      for ( auto attempt = 0u;; ++attempt )
      {
        if ( attempt == 10000u )
        {
          throw error( error_kind::invariant, "sampler found no normalized instance" );
        }
        const auto cand = compact_repair( random_transitive_mixing_dnf( rng, 2u, 12u ), o.limits );
        if ( !cand )
        {
          continue;
        }
        f = to_truth_table( *cand, o.limits );
        if ( mixing_precondition( *cand, f, o.limits ).empty() )
        {
          d = *cand;
          break;
        }
      }
      r.instance = describe( d );
      r.counterexample = write_dnf( d );
      check_mixing_theorem( c, d, f, o.limits );
    } );
  }
  return rep;
}

suite_report families( const suite_options& o )
{
  suite_report rep;
  for ( auto n = 1u; n <= 3u; ++n )
  {
    add_case( rep, "rubinstein", [&]( check_result& r, checker& c ) {
      const auto fi = rubinstein( n, false, o.limits );
      r.instance = "rubinstein n=" + std::to_string( n );
      r.counterexample = write_dnf( fi.g );
      check_family( c, fi );
      c.equal( "2bs", 2u * fi.predicted.bs, fi.predicted.s * fi.predicted.s );
      c.holds( stats( fi.g ).has_mixing( 4u ), "4-mixing" );
    } );
  }
  for ( auto n = 1u; n <= 3u; ++n )
  {
    add_case( rep, "virza", [&]( check_result& r, checker& c ) {
      const auto fi = virza( n, false, o.limits );
      r.instance = "virza n=" + std::to_string( n );
      r.counterexample = write_dnf( fi.g );
      check_family( c, fi );
      c.equal( "2bs", 2u * fi.predicted.bs, fi.predicted.s * fi.predicted.s + fi.predicted.s );
      c.holds( stats( fi.g ).has_mixing( 3u ), "3-mixing" );
    } );
  }
  for ( auto n = 1u; n <= 2u; ++n )
  {
    add_case( rep, "ambainis-sun", [&]( check_result& r, checker& c ) {
      const auto fi = ambainis_sun( n, false, o.limits );
      r.instance = "ambainis-sun n=" + std::to_string( n );
      r.counterexample = write_dnf( fi.g );
      check_family( c, fi );
      const auto s = fi.predicted.s;
      c.equal( "3bs", 3u * fi.predicted.bs, 2u * s * s - s );
      const auto st = stats( fi.g );
      c.holds( st.transitive, "transitive" );
      c.equal( "mixing_max", st.mixing_max.value_or( 0u ), 3u );
    } );
  }
  add_case( rep, "expanded", [&]( check_result& r, checker& c ) {
    auto limits = o.limits;
    limits.bs_max = std::max( limits.bs_max, 16u );
    const auto fi = rubinstein( 2u, true, limits );
    r.instance = "rubinstein n=2 expanded to 16 variables";
    r.counterexample = write_dnf( *fi.expanded );
    const auto f = to_truth_table( *fi.expanded, limits );
    const auto m = measure( f, limits );
    const auto& p = fi.predicted;
    c.equal( "s", m.s, p.s );
    c.equal( "s0", m.s0, p.s0 );
    c.equal( "s1", m.s1, p.s1 );
    c.equal( "bs", m.bs, p.bs );
    c.equal( "bs0", m.bs0, p.bs0 );
    c.equal( "bs1", m.bs1, p.bs1 );
    c.equal( "s(composed witness)", sensitivity_at( f, *p.witness_s ), p.s );
    c.equal( "bs(composed witness)", block_sensitivity_for( f, p.witness_bs->input, p.witness_bs->blocks ), p.bs );
  } );
  add_case( rep, "expanded", [&]( check_result& r, checker& c ) {
    const auto fi = ambainis_sun( 1u, true, o.limits );
    const auto& d = *fi.expanded;
    r.instance = "ambainis-sun n=1 expanded to 30 variables";
    r.counterexample = write_dnf( d );
    const auto w0 = zero_witness_block( d );
    c.holds( !d( w0.input ), "f(block witness)=0" );
    c.at_least( "s(block witness)", sensitivity_at( d, w0.input ), ceil_div( d.size(), 2u * d.width() - 1u ) );
    const auto w1 = witness_onesbound( d );
    c.at_least( "s(onesbound witness)", sensitivity_at( d, w1.input ), ceil_div( d.width(), 2u ) );
    c.equal( "s(composed witness)", sensitivity_at( d, *fi.predicted.witness_s ), fi.predicted.s );
    const auto& wb = *fi.predicted.witness_bs;
    unsigned k = 0u;
    for ( const auto& b : wb.blocks )
    {
      k += d( flip( wb.input, b ) ) != d( wb.input ) ? 1u : 0u;
    }
    c.equal( "bs(composed witness)", k, fi.predicted.bs );
  } );
  for ( auto n = 1u; n <= 3u; ++n )
  {
    add_case( rep, "onesbound-tight", [&]( check_result& r, checker& c ) {
      const auto d = onesbound_tight( n );
      r.instance = "onesbound-tight n=" + std::to_string( n );
      r.counterexample = write_dnf( d );
      const auto m = sensitivity_report( to_truth_table( d, o.limits ), o.limits );
      c.holds( stats( d ).block, "block" );
      c.equal( "s0", m.s0, n + 1u );
      c.equal( "s1", m.s1, n + 1u );
      c.equal( "ceil(d_and/2)", ceil_div( d.width(), 2u ), n + 1u );
    } );
  }
  for ( auto p = 2u; p <= 4u; ++p )
  {
    for ( auto q = p; q <= 4u; ++q )
    {
      add_case( rep, "proposition", [&]( check_result& r, checker& c ) {
        r.instance = "proposition pair p=" + std::to_string( p ) + " q=" + std::to_string( q );
        const auto pp = proposition_pair( p, q, o.limits );
        r.counterexample = write_truth_table( pp.f ) + write_truth_table( pp.g );
        c.equal( "s(f)", sensitivity_report( pp.f, o.limits ).s, p );
        c.equal( "s(g)", sensitivity_report( pp.g, o.limits ).s, q );
        c.holds( pp.f != pp.g, "f!=g" );
        const auto radius = agreement_radius( pp.f, pp.g, pp.a ^ all_ones( p + q ), o.limits );
        c.equal( "radius", radius.value_or( 0u ), p + q - 1u );
      } );
    }
  }
  return rep;
}

suite_report reconstruction( const suite_options& o )
{
  suite_report rep;
  auto rng = suite_rng( o.seed, "reconstruction" );
  const auto count = count_or( o, 50u );
  const auto random_center = [&]( unsigned n ) { return std::uniform_int_distribution<input_t>( 0u, all_ones( n ) )( rng ); };
  for ( std::size_t i = 0; i < count; ++i )
  {
    add_case( rep, "majority", [&]( check_result& r, checker& c ) {
      const auto n = uniform( rng, 2u, 10u );
      const auto f = random_mixed_function( rng, n );
      r.instance = "n=" + std::to_string( n ) + " s=" + std::to_string( sensitivity_report( f, o.limits ).s );
      r.counterexample = write_truth_table( f );
      check_majority( c, f, { 0u, random_center( n ), random_center( n ), random_center( n ) }, o.limits );
    } );
  }
  for ( std::size_t i = 0; i < count; ++i )
  {
    add_case( rep, "monotone", [&]( check_result& r, checker& c ) {
      const auto n = uniform( rng, 2u, 10u );
      const auto f = random_monotone_function( rng, n );
      r.instance = "monotone n=" + std::to_string( n ) + " s=" + std::to_string( sensitivity_report( f, o.limits ).s );
      r.counterexample = write_truth_table( f );
      check_monotone_reconstruction( c, f, o.limits );
    } );
  }
  for ( std::size_t i = 0; i < count; ++i )
  {
    add_case( rep, "uniqueness", [&]( check_result& r, checker& c ) {
      const auto n = uniform( rng, 2u, 10u );
      const auto f = random_mixed_function( rng, n );
      auto g = f;
      if ( coin( rng, 0.5 ) )
      {
        const auto x = random_center( n );
        g.set( x, !g[x] );
      }
      const auto center = random_center( n );
      r.instance = "n=" + std::to_string( n ) + " center " + to_bitstring( center, n );
      r.counterexample = write_truth_table( f ) + write_truth_table( g );
      check_uniqueness( c, f, g, { center }, o.limits );
    } );
  }
  for ( std::size_t i = 0; i < count; ++i )
  {
    add_case( rep, "xor-lemma", [&]( check_result& r, checker& c ) {
      const auto n = uniform( rng, 2u, 8u );
      const auto f = random_mixed_function( rng, n );
      const auto g = random_mixed_function( rng, n );
      r.instance = "n=" + std::to_string( n );
      r.counterexample = write_truth_table( f ) + write_truth_table( g );
      check_xor( c, f, g, o.limits );
    } );
  }
  return rep;
}

suite_report monotone_nisan( const suite_options& o )
{
  suite_report rep;
  auto rng = suite_rng( o.seed, "monotone-nisan" );
  for ( std::size_t i = 0; i < count_or( o, 50u ); ++i )
  {
    const auto n = uniform( rng, 2u, 10u );
    const auto f = random_monotone_function( rng, n );
    for ( const auto* group : { "nisan", "nisan-global" } )
    {
      add_case( rep, group, [&]( check_result& r, checker& c ) {
        r.instance = "monotone n=" + std::to_string( n );
        r.counterexample = write_truth_table( f );
        if ( std::string_view( group ) == "nisan" )
        {
          check_nisan( c, f, o.limits );
        }
        else
        {
          check_nisan_global( c, f, o.limits );
        }
      } );
    }
  }
  return rep;
}

suite_report hypercube( const suite_options& o )
{
  suite_report rep;
  auto rng = suite_rng( o.seed, "hypercube" );
  const std::vector<std::pair<std::string, dnf>> inner{
      { "rubinstein n=1", rubinstein_inner( 1u ) },     { "rubinstein n=2", rubinstein_inner( 2u ) },
      { "rubinstein n=3", rubinstein_inner( 3u ) },     { "ambainis-sun n=1", ambainis_sun_inner( 1u ) },
      { "ambainis-sun n=2", ambainis_sun_inner( 2u ) } };
  for ( const auto& [name, g] : inner )
  {
    add_case( rep, "families", [&]( check_result& r, checker& c ) {
      r.instance = name;
      r.counterexample = write_dnf( g );
      check_hypercubes( c, to_truth_table( g, o.limits ), o.limits );
    } );
  }
  for ( std::size_t i = 0; i < count_or( o, 50u ); ++i )
  {
    add_case( rep, "synthetic", [&]( check_result& r, checker& c ) {
      const auto n = uniform( rng, 3u, 10u );
      const auto f = random_s0_one_function( rng, n, o.limits );
      r.instance = "s0=1 n=" + std::to_string( n );
      r.counterexample = write_truth_table( f );
      check_hypercubes( c, f, o.limits );
    } );
  }
  return rep;
}

suite_report senslower( const suite_options& o )
{
  suite_report rep;
  auto rng = suite_rng( o.seed, "senslower" );
  for ( std::size_t i = 0; i < count_or( o, 100u ); ++i )
  {
    add_case( rep, "corollary", [&]( check_result& r, checker& c ) {
      const auto d = random_block_dnf( rng, 1u, 12u );
      r.instance = describe( d );
      r.counterexample = write_dnf( d );
      check_senslower( c, d, o.limits );
    } );
  }
  return rep;
}

// ---------------------------------------------------------------------------
// replay

dnf replay_dnf( std::string_view suite, std::string_view text )
{
  if ( detect_format( text ) != file_format::dnf )
  {
    throw error( error_kind::usage, std::string( suite ) + " replays a dnf file" );
  }
  return read_dnf( text );
}

truth_table replay_table( std::string_view text, const caps& limits )
{
  switch ( detect_format( text ) )
  {
  case file_format::dnf:
    return to_truth_table( read_dnf( text ), limits );
  case file_format::truth_table:
    return read_truth_table( text );
  default:
    throw error( error_kind::usage, "expected a tt or dnf file" );
  }
}

std::vector<input_t> all_inputs( unsigned n )
{
  std::vector<input_t> out( std::size_t{ 1 } << n );
  std::iota( out.begin(), out.end(), input_t{ 0 } );
  return out;
}

void require_precondition( bool ok, std::string_view what )
{
  if ( !ok )
  {
    throw error( error_kind::usage, "instance is " + std::string( what ) );
  }
}

} // namespace

suite_report run_suite( std::string_view name, const suite_options& options )
{
  using runner = suite_report ( * )( const suite_options& );
  static const std::vector<std::pair<std::string_view, runner>> table{
      { "gamma-bounds", gamma_bounds }, { "block-4s2", block_4s2 },           { "tblock", tblock },
      { "kenyon-kutin", kenyon_kutin }, { "mixing-AS", mixing_as },           { "families", families },
      { "reconstruction", reconstruction }, { "monotone-nisan", monotone_nisan }, { "hypercube", hypercube },
      { "senslower", senslower } };
  for ( const auto& [key, fn] : table )
  {
    if ( key == name )
    {
      auto rep = fn( options );
      rep.name = std::string( name );
      rep.seed = options.seed;
      return rep;
    }
  }
  throw error( error_kind::usage, "unknown suite '" + std::string( name ) + "'" );
}

suite_report replay_instance( std::string_view suite, std::string_view text, const suite_options& o, unsigned t )
{
  if ( std::find( suite_names().begin(), suite_names().end(), suite ) == suite_names().end() )
  {
    throw error( error_kind::usage, "unknown suite '" + std::string( suite ) + "'" );
  }
  const auto& limits = o.limits;
  suite_report rep;
  rep.name = std::string( suite );
  rep.seed = o.seed;
  const auto instance = [&]( check_result& r, const std::string& description ) {
    r.instance = "replay " + description;
    r.counterexample = std::string( text );
  };

  if ( suite == "gamma-bounds" || suite == "senslower" )
  {
    const auto d = replay_dnf( suite, text );
    add_case( rep, suite == "senslower" ? "corollary" : "gamma", [&]( check_result& r, checker& c ) {
      instance( r, describe( d ) );
      if ( suite == "senslower" )
      {
        require_precondition( stats( d ).block, "not a block-property DNF" );
        check_senslower( c, d, limits );
      }
      else
      {
        check_gamma( c, d, limits );
      }
    } );
  }
  else if ( suite == "block-4s2" )
  {
    const auto d = replay_dnf( suite, text );
    require_precondition( stats( d ).block, "not a block-property DNF" );
    const auto f = to_truth_table( d, limits );
    add_case( rep, "theorem", [&]( check_result& r, checker& c ) {
      instance( r, describe( d ) );
      check_block_theorem( c, d, f, limits );
    } );
    add_case( rep, "witness", [&]( check_result& r, checker& c ) {
      instance( r, describe( d ) );
      const auto top = measure( f, limits );
      query_list queries{ { 0u, block_sensitivity_at( f, 0u, limits ).blocks } };
      if ( top.witness_bs )
      {
        queries.emplace_back( top.witness_bs->input, top.witness_bs->blocks );
      }
      const auto singletons = singleton_blocks( d.arity() );
      for ( const auto x : all_inputs( d.arity() ) )
      {
        queries.emplace_back( x, singletons );
      }
      check_block_witnesses( c, d, f, queries, limits );
    } );
  }
  else if ( suite == "tblock" )
  {
    const auto d = replay_dnf( suite, text );
    const auto tt = t ? t : stats( d ).t_min;
    add_case( rep, "tblock", [&]( check_result& r, checker& c ) {
      instance( r, describe( d ) + " t=" + std::to_string( tt ) );
      check_tblock( c, d, tt, limits );
    } );
  }
  else if ( suite == "kenyon-kutin" )
  {
    const auto f = replay_table( text, limits );
    add_case( rep, "kenyon-kutin", [&]( check_result& r, checker& c ) {
      instance( r, "n=" + std::to_string( f.arity() ) );
      check_kenyon_kutin( c, f, limits );
    } );
  }
  else if ( suite == "mixing-AS" )
  {
    const auto d = replay_dnf( suite, text );
    const auto f = to_truth_table( d, limits );
    const auto why = mixing_precondition( d, f, limits );
    require_precondition( why.empty(), why );
    add_case( rep, "theorem", [&]( check_result& r, checker& c ) {
      instance( r, describe( d ) );
      check_mixing_theorem( c, d, f, limits );
    } );
  }
  else if ( suite == "reconstruction" )
  {
    const auto tables = detect_format( text ) == file_format::dnf
                            ? std::vector<truth_table>{ to_truth_table( read_dnf( text ), limits ) }
                            : read_truth_tables( text );
    if ( tables.size() == 1u )
    {
      const auto& f = tables[0];
      require_enumerable( f.arity(), limits, "replay" );
      add_case( rep, "majority", [&]( check_result& r, checker& c ) {
        instance( r, "n=" + std::to_string( f.arity() ) + " every center" );
        check_majority( c, f, all_inputs( f.arity() ), limits );
      } );
      if ( is_monotone( f, limits ) )
      {
        add_case( rep, "monotone", [&]( check_result& r, checker& c ) {
          instance( r, "monotone n=" + std::to_string( f.arity() ) );
          check_monotone_reconstruction( c, f, limits );
        } );
      }
    }
    else if ( tables.size() == 2u )
    {
      const auto& f = tables[0];
      const auto& g = tables[1];
      if ( f.arity() != g.arity() )
      {
        throw error( error_kind::usage, "the two tables have different arity" );
      }
      add_case( rep, "uniqueness", [&]( check_result& r, checker& c ) {
        instance( r, "n=" + std::to_string( f.arity() ) + " every center" );
        check_uniqueness( c, f, g, all_inputs( f.arity() ), limits );
      } );
      add_case( rep, "xor-lemma", [&]( check_result& r, checker& c ) {
        instance( r, "n=" + std::to_string( f.arity() ) );
        check_xor( c, f, g, limits );
      } );
    }
    else
    {
      throw error( error_kind::usage, "reconstruction replays one or two tables" );
    }
  }
  else if ( suite == "monotone-nisan" )
  {
    const auto f = replay_table( text, limits );
    require_precondition( is_monotone( f, limits ), "not monotone" );
    add_case( rep, "nisan", [&]( check_result& r, checker& c ) {
      instance( r, "monotone n=" + std::to_string( f.arity() ) );
      check_nisan( c, f, limits );
    } );
    add_case( rep, "nisan-global", [&]( check_result& r, checker& c ) {
      instance( r, "monotone n=" + std::to_string( f.arity() ) );
      check_nisan_global( c, f, limits );
    } );
  }
  else if ( suite == "hypercube" )
  {
    const auto f = replay_table( text, limits );
    add_case( rep, "synthetic", [&]( check_result& r, checker& c ) {
      instance( r, "n=" + std::to_string( f.arity() ) );
      check_hypercubes( c, f, limits );
    } );
  }
  else
  {
    throw error( error_kind::usage, std::string( suite ) + " has fixed instances; run the suite instead" );
  }
  return rep;
}

} // namespace sensbench
