#include <sensbench/dnf_stats.hpp>
#include <sensbench/error.hpp>
#include <sensbench/lowsens.hpp>
#include <sensbench/measures.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <sstream>

namespace sensbench
{

std::uint64_t ball_size( unsigned n, unsigned r )
{
  std::uint64_t total = 0u, binom = 1u;
  for ( auto k = 0u; k <= std::min( n, r ); ++k )
  {
    total += binom;
    binom = binom * ( n - k ) / ( k + 1u );
  }
  return total;
}

ball_values::ball_values( unsigned arity, input_t center, unsigned radius, std::vector<std::pair<input_t, bool>> values )
    : arity_( arity ), center_( center ), radius_( radius ), values_( std::move( values ) )
{
  if ( arity > max_vars )
  {
    throw error( error_kind::capacity, "ball arity above 64" );
  }
  if ( radius > arity )
  {
    throw error( error_kind::usage, "ball radius " + std::to_string( radius ) + " exceeds arity " + std::to_string( arity ) );
  }
  if ( center & ~all_ones( arity ) )
  {
    throw error( error_kind::usage, "ball center outside {0,1}^n" );
  }
  std::sort( values_.begin(), values_.end(), []( const auto& a, const auto& b ) { return a.first < b.first; } );
  for ( std::size_t k = 0; k < values_.size(); ++k )
  {
    const auto x = values_[k].first;
    if ( k > 0 && values_[k - 1].first == x )
    {
      throw error( error_kind::usage, "ball point " + to_bitstring( x, arity ) + " given twice" );
    }
    if ( ( x & ~all_ones( arity ) ) || hamming_distance( x, center ) > radius )
    {
      throw error( error_kind::usage, "extra point " + to_bitstring( x, arity ) + " outside the ball" );
    }
  }
  const auto expected = ball_size( arity, radius );
  if ( values_.size() != expected )
  {
    throw error( error_kind::usage, "ball has " + std::to_string( values_.size() ) + " points, expected " +
                                        std::to_string( expected ) + " (missing points)" );
  }
}

ball_values ball_values::from_function( const truth_table& f, input_t center, unsigned radius )
{
  std::vector<std::pair<input_t, bool>> values;
  for ( input_t x = 0u; x < f.num_rows(); ++x )
  {
    if ( hamming_distance( x, center ) <= radius )
    {
      values.emplace_back( x, f[x] );
    }
  }
  return ball_values( f.arity(), center, std::min( radius, f.arity() ), std::move( values ) );
}

std::optional<bool> ball_values::value( input_t x ) const
{
  const auto it = std::lower_bound( values_.begin(), values_.end(), x,
                                    []( const auto& p, input_t key ) { return p.first < key; } );
  if ( it == values_.end() || it->first != x )
  {
    return std::nullopt;
  }
  return it->second;
}

std::string write_ball( const ball_values& ball )
{
  std::string out = "ball " + std::to_string( ball.arity() ) + " " + to_bitstring( ball.center(), ball.arity() ) + " " +
                    std::to_string( ball.radius() ) + "\n";
  for ( const auto& [x, v] : ball.values() )
  {
    out += to_bitstring( x, ball.arity() ) + ( v ? " 1\n" : " 0\n" );
  }
  return out;
}

ball_values read_ball( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string line;
  unsigned line_no = 0u;
  bool have_header = false;
  unsigned arity = 0u, radius = 0u;
  input_t center = 0u;
  std::vector<std::pair<input_t, bool>> values;

  const auto fail = [&]( const std::string& msg ) {
    throw error( error_kind::parse, "line " + std::to_string( line_no ) + ": " + msg );
  };

  while ( std::getline( in, line ) )
  {
    ++line_no;
    if ( const auto hash = line.find( '#' ); hash != std::string::npos )
    {
      line.erase( hash );
    }
    std::istringstream fields( line );
    std::string a, b, c, d, extra;
    fields >> a;
    if ( a.empty() )
    {
      continue;
    }
    if ( !have_header )
    {
      fields >> b >> c >> d;
      if ( a != "ball" || d.empty() || ( fields >> extra ) )
      {
        fail( "expected header \"ball <arity> <center> <radius>\"" );
      }
      try
      {
        std::size_t used = 0u;
        const auto n = std::stoul( b, &used );
        if ( used != b.size() || n > max_vars )
        {
          fail( "bad arity '" + b + "'" );
        }
        arity = static_cast<unsigned>( n );
        const auto r = std::stoul( d, &used );
        if ( used != d.size() || r > arity )
        {
          fail( "bad radius '" + d + "'" );
        }
        radius = static_cast<unsigned>( r );
      }
      catch ( const std::logic_error& )
      {
        fail( "bad number in header" );
      }
      try
      {
        center = parse_bitstring( c, arity );
      }
      catch ( const error& e )
      {
        fail( std::string( "center: " ) + e.what() );
      }
      have_header = true;
      continue;
    }
    fields >> b;
    if ( b.empty() || ( fields >> extra ) || ( b != "0" && b != "1" ) )
    {
      fail( "expected \"<input> <0|1>\"" );
    }
    input_t x = 0u;
    try
    {
      x = parse_bitstring( a, arity );
    }
    catch ( const error& e )
    {
      fail( e.what() );
    }
    if ( hamming_distance( x, center ) > radius )
    {
      fail( "extra point " + a + " outside the ball" );
    }
    values.emplace_back( x, b == "1" );
  }
  if ( !have_header )
  {
    throw error( error_kind::parse, "missing \"ball\" header" );
  }
  try
  {
    return ball_values( arity, center, radius, std::move( values ) );
  }
  catch ( const error& e )
  {
    throw error( error_kind::parse, e.what() );
  }
}

std::optional<unsigned> agreement_radius( const truth_table& f, const truth_table& g, input_t center, const caps& limits )
{
  require_enumerable( f.arity(), limits, "agreement radius" );
  const auto diff = f ^ g;
  auto best = f.arity() + 1u;
  const auto words = diff.words();
  for ( std::size_t w = 0; w < words.size(); ++w )
  {
    for ( auto rest = words[w]; rest; rest &= rest - 1u )
    {
      const auto x = ( input_t{ w } << 6 ) | static_cast<input_t>( std::countr_zero( rest ) );
      best = std::min( best, hamming_distance( x, center ) );
    }
  }
  if ( best == 0u )
  {
    return std::nullopt;
  }
  return std::min( best - 1u, f.arity() );
}

namespace
{

/* rows grouped by distance from the center */
std::vector<std::vector<input_t>> layers( unsigned n, input_t center )
{
  std::vector<std::vector<input_t>> out( n + 1u );
  for ( input_t x = 0u; x < ( input_t{ 1 } << n ); ++x )
  {
    out[hamming_distance( x, center )].push_back( x );
  }
  return out;
}

truth_table ball_table( const ball_values& ball )
{
  truth_table f( ball.arity() );
  for ( const auto& [x, v] : ball.values() )
  {
    f.set( x, v );
  }
  return f;
}

void check_sensitivity_bound( const truth_table& f, unsigned s_bound, const caps& limits )
{
  const auto report = sensitivity_report( f, limits );
  if ( report.s > s_bound )
  {
    throw error( error_kind::inconsistent_data,
                 "sensitivity bound violated: completion has s = " + std::to_string( report.s ) + " at " +
                     to_bitstring( *report.witness_s, f.arity() ) + " > " + std::to_string( s_bound ) );
  }
}

} // namespace

truth_table reconstruct_majority( const ball_values& ball, unsigned s_bound, const caps& limits )
{
  const auto n = ball.arity();
  require_enumerable( n, limits, "majority reconstruction" );
  if ( ball.radius() < std::min( 2u * s_bound, n ) )
  {
    throw error( error_kind::usage, "insufficient radius: " + std::to_string( ball.radius() ) + " < 2*" +
                                        std::to_string( s_bound ) );
  }
  auto f = ball_table( ball );
  const auto by_layer = layers( n, ball.center() );
  for ( auto d = ball.radius() + 1u; d <= n; ++d )
  {
    for ( auto x : by_layer[d] )
    {
      unsigned ones = 0u;
      for ( auto rest = x ^ ball.center(); rest; rest &= rest - 1u )
      {
        ones += f[x ^ ( rest & ( ~rest + 1u ) )] ? 1u : 0u;
      }
      const auto zeros = d - ones;
      if ( ones == zeros )
      {
        throw error( error_kind::inconsistent_data, "sensitivity bound violated: majority tie at " + to_bitstring( x, n ) );
      }
      if ( std::min( ones, zeros ) > s_bound )
      {
        throw error( error_kind::inconsistent_data, "sensitivity bound violated: " + std::to_string( std::min( ones, zeros ) ) +
                                                        " disagreeing neighbors at " + to_bitstring( x, n ) );
      }
      f.set( x, ones > zeros );
    }
  }
  check_sensitivity_bound( f, s_bound, limits );
  return f;
}

truth_table reconstruct_monotone( const ball_values& ball, unsigned s_bound, const caps& limits )
{
  const auto n = ball.arity();
  require_enumerable( n, limits, "monotone reconstruction" );
  if ( ball.center() != 0u )
  {
    throw error( error_kind::usage, "monotone reconstruction needs a ball centered at 0^n" );
  }
  auto f = ball_table( ball );
  const auto by_layer = layers( n, 0u );
  for ( auto d = ball.radius() + 1u; d <= n; ++d )
  {
    for ( auto x : by_layer[d] )
    {
      bool any = false;
      for ( auto rest = x; rest && !any; rest &= rest - 1u )
      {
        any = f[x ^ ( rest & ( ~rest + 1u ) )];
      }
      f.set( x, any );
    }
  }
  if ( !is_monotone( f, limits ) )
  {
    throw error( error_kind::inconsistent_data, "completion is not monotone" );
  }
  check_sensitivity_bound( f, s_bound, limits );
  return f;
}

namespace
{

one_set_analysis analyze( const truth_table& f, const caps& limits, std::vector<std::int32_t>& ids )
{
  require_enumerable( f.arity(), limits, "1-set components" );
  const auto n = f.arity();
  const auto full = all_ones( n );
  one_set_analysis r;
  ids.assign( f.num_rows(), -1 );

  for ( input_t start = 0u; start < f.num_rows(); ++start )
  {
    if ( !f[start] || ids[start] >= 0 )
    {
      continue;
    }
    const auto id = static_cast<std::int32_t>( r.components.size() );
    subcube_component c;
    std::deque<input_t> queue{ start };
    ids[start] = id;
    while ( !queue.empty() )
    {
      const auto x = queue.front();
      queue.pop_front();
      c.members.push_back( x );
      for ( auto v = 0u; v < n; ++v )
      {
        const auto y = x ^ ( input_t{ 1 } << v );
        if ( f[y] && ids[y] < 0 )
        {
          ids[y] = id;
          queue.push_back( y );
        }
      }
    }
    std::sort( c.members.begin(), c.members.end() );
    input_t all_and = full, all_or = 0u;
    for ( auto x : c.members )
    {
      all_and &= x;
      all_or |= x;
    }
    c.fixed = var_set( ( all_and | ~all_or ) & full );
    c.free = var_set( full ) - c.fixed;
    c.fixed_values = all_and;
    c.is_subcube = c.members.size() == ( std::uint64_t{ 1 } << c.free.size() );
    r.all_subcubes = r.all_subcubes && c.is_subcube;
    r.components.push_back( std::move( c ) );
  }

  const auto k = r.components.size();
  r.distances.assign( k, std::vector<unsigned>( k, 0u ) );
  for ( std::size_t i = 0; i < k; ++i )
  {
    for ( std::size_t j = i + 1; j < k; ++j )
    {
      const auto& a = r.components[i];
      const auto& b = r.components[j];
      unsigned dist = 0u;
      if ( a.is_subcube && b.is_subcube )
      {
        dist = ( ( a.fixed & b.fixed ) & var_set( a.fixed_values ^ b.fixed_values ) ).size();
      }
      else
      {
        dist = n;
        for ( auto x : a.members )
        {
          for ( auto y : b.members )
          {
            dist = std::min( dist, hamming_distance( x, y ) );
          }
        }
      }
      r.distances[i][j] = r.distances[j][i] = dist;
      r.min_distance = r.min_distance ? std::min( *r.min_distance, dist ) : dist;
    }
  }

  if ( !f.is_constant() )
  {
    r.hypothesis = sensitivity_report( f, limits ).s0 == 1u;
  }
  if ( r.hypothesis && ( !r.all_subcubes || ( r.min_distance && *r.min_distance < 3u ) ) )
  {
    throw error( error_kind::invariant, "s0 = 1 but the 1-set components are not subcubes at distance >= 3" );
  }
  return r;
}

} // namespace

one_set_analysis one_set_components( const truth_table& f, const caps& limits )
{
  std::vector<std::int32_t> ids;
  return analyze( f, limits, ids );
}

dnf hypercubes_to_dnf( const truth_table& f, const caps& limits )
{
  require_bs_enumerable( f.arity(), limits, "hypercubes to DNF" );
  if ( f.is_constant() )
  {
    throw error( error_kind::hypothesis_violation, "function is constant" );
  }
  const auto report = measure( f, limits );
  if ( report.s0 != 1u )
  {
    throw error( error_kind::hypothesis_violation, "s0 = " + std::to_string( report.s0 ) + ", expected 1" );
  }
  if ( f[0] )
  {
    throw error( error_kind::hypothesis_violation, "f(0^n) = 1" );
  }
  const auto at_zero = block_sensitivity_at( f, 0u, limits );
  if ( at_zero.count != report.bs0 )
  {
    throw error( error_kind::hypothesis_violation, "bs0 is not attained at 0^n" );
  }

  std::vector<std::int32_t> ids;
  const auto analysis = analyze( f, limits, ids );
  dnf out( f.arity() );
  for ( const auto& block : at_zero.blocks )
  {
    const auto& c = analysis.components[static_cast<std::size_t>( ids[indicator( block )] )];
    if ( c.ones() != block )
    {
      throw error( error_kind::invariant, "optimal block " + to_string( block ) + " does not match its subcube" );
    }
    out.add_term( { c.ones(), c.zeros() } );
  }

  const auto st = stats( out );
  if ( !st.block || !st.transitive || !st.has_mixing( 3u ) )
  {
    throw error( error_kind::invariant, "subcube DNF misses the block, transitive or 3-mixing property" );
  }
  return out;
}

} // namespace sensbench
