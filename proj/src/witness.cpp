#include <sensbench/dnf_stats.hpp>
#include <sensbench/error.hpp>
#include <sensbench/measures.hpp>
#include <sensbench/witness.hpp>

#include <algorithm>
#include <array>

namespace sensbench
{

const char* to_string( witness_procedure p )
{
  switch ( p )
  {
  case witness_procedure::block_greedy:
    return "block-greedy";
  case witness_procedure::onesbound:
    return "onesbound";
  case witness_procedure::t_block:
    return "t-block";
  case witness_procedure::mixing_components:
    return "mixing-components";
  case witness_procedure::monotone_echo:
    return "monotone-echo";
  case witness_procedure::exhaustive:
    return "exhaustive";
  }
  return "unknown";
}

gate_graph::gate_graph( const dnf& d ) : out( d.size() ), neighbors( d.size() )
{
  for ( std::size_t i = 0; i < d.size(); ++i )
  {
    for ( std::size_t j = 0; j < d.size(); ++j )
    {
      if ( i != j && d[i].neg.intersects( d[j].pos ) )
      {
        out[i].push_back( j );
      }
      if ( i != j && ( d[i].neg.intersects( d[j].pos ) || d[j].neg.intersects( d[i].pos ) ) )
      {
        neighbors[i].push_back( j );
      }
    }
  }
}

unsigned greedy_bound( unsigned size, unsigned width, unsigned t )
{
  if ( size == 0u )
  {
    return 0u;
  }
  const auto denom = 3u * t * width - 2u * t - width + 1u;
  return ceil_div( size, std::max( denom, 1u ) );
}

gate_selection greedy_independent_gates( const dnf& d, unsigned t )
{
  if ( t <= 1u )
  {
    require_block_property( d );
  }
  else
  {
    require_t_block_property( d, t );
  }
  require_zero_is_false( d );

  const gate_graph g( d );
  const auto m = d.size();
  std::vector<bool> alive( m, true );
  std::size_t remaining = m;

  gate_selection sel;
  sel.bound = greedy_bound( m, d.width(), std::max( t, 1u ) );

  const auto kill = [&]( std::size_t v ) {
    if ( alive[v] )
    {
      alive[v] = false;
      --remaining;
    }
  };

  while ( remaining > 0u )
  {
    std::size_t best = m;
    std::size_t best_degree = m + 1u;
    for ( std::size_t v = 0; v < m; ++v )
    {
      if ( !alive[v] )
      {
        continue;
      }
      const auto deg = static_cast<std::size_t>(
          std::count_if( g.neighbors[v].begin(), g.neighbors[v].end(), [&]( auto u ) { return alive[u]; } ) );
      if ( deg < best_degree )
      {
        best = v;
        best_degree = deg;
      }
    }
    sel.gates.push_back( best );
    kill( best );
    for ( auto u : g.neighbors[best] )
    {
      kill( u );
    }
    if ( t > 1u )
    {
      for ( std::size_t u = 0; u < m; ++u )
      {
        if ( d[u].pos.intersects( d[best].pos ) )
        {
          kill( u );
        }
      }
    }
  }

  if ( sel.gates.size() < sel.bound )
  {
    throw error( error_kind::invariant, "greedy selection is smaller than its guaranteed bound" );
  }
  return sel;
}

namespace
{

void check_zero_side( const dnf& d, const witness_result& r, const char* what )
{
  if ( d( r.input ) || r.measured < r.guaranteed_bound )
  {
    throw error( error_kind::invariant, std::string( what ) + ": constructed input misses its guarantee" );
  }
}

} // namespace

witness_result zero_witness_block( const dnf& d )
{
  const auto sel = greedy_independent_gates( d, 1u );
  var_set p;
  for ( auto i : sel.gates )
  {
    auto part = d[i].pos;
    part.erase( part.max() );
    p |= part;
  }
  witness_result r;
  r.input = indicator( p );
  r.value = false;
  r.gates = sel.gates;
  r.guaranteed_bound = static_cast<unsigned>( sel.gates.size() );
  r.lemma_bound = sel.bound;
  r.measured = sensitivity_at( d, r.input );
  r.procedure = witness_procedure::block_greedy;
  check_zero_side( d, r, "block witness" );
  return r;
}

witness_result witness_onesbound( const dnf& d )
{
  require_block_property( d );
  require_zero_is_false( d );
  if ( d.size() == 0u )
  {
    throw error( error_kind::degenerate_input, "formula has no terms" );
  }
  std::size_t widest = 0u;
  for ( std::size_t i = 1; i < d.size(); ++i )
  {
    if ( d[i].width() > d[widest].width() )
    {
      widest = i;
    }
  }
  const auto& t = d[widest];
  const auto width = d.width();

  witness_result r;
  r.procedure = witness_procedure::onesbound;
  r.gates = { widest };
  r.lemma_bound = ceil_div( width, 2u );

  const auto a = indicator( t.pos );
  const auto s_a = sensitivity_at( d, a );
  const auto threshold = ceil_div( width + 1u, 2u );
  if ( s_a >= threshold )
  {
    r.input = a;
    r.value = true;
    r.guaranteed_bound = threshold;
    r.measured = s_a;
    if ( !d( a ) )
    {
      throw error( error_kind::invariant, "onesbound witness: widest term not satisfied by its positive part" );
    }
    return r;
  }

  unsigned flips_to_one = 0u;
  for ( auto p : t.neg )
  {
    flips_to_one += d( flip( a, p ) ) ? 1u : 0u;
  }
  r.input = flip( a, t.pos.min() );
  r.value = false;
  r.guaranteed_bound = flips_to_one + 1u;
  r.measured = sensitivity_at( d, r.input );
  check_zero_side( d, r, "onesbound witness" );
  if ( r.guaranteed_bound < r.lemma_bound )
  {
    throw error( error_kind::invariant, "onesbound witness: fallback bound below the lemma bound" );
  }
  return r;
}

witness_result zero_witness_tblock( const dnf& d, unsigned t )
{
  const auto sel = greedy_independent_gates( d, std::max( t, 1u ) );
  var_set a_union;
  for ( auto i : sel.gates )
  {
    a_union |= d[i].pos;
  }
  input_t a = 0u;
  for ( bool changed = true; changed; )
  {
    changed = false;
    for ( auto v : a_union )
    {
      if ( !bit( a, v ) && !d( flip( a, v ) ) )
      {
        a = flip( a, v );
        changed = true;
      }
    }
  }
  witness_result r;
  r.input = a;
  r.value = false;
  r.gates = sel.gates;
  r.guaranteed_bound = static_cast<unsigned>( sel.gates.size() );
  r.lemma_bound = sel.bound;
  r.measured = sensitivity_at( d, a );
  r.procedure = witness_procedure::t_block;
  check_zero_side( d, r, "t-block witness" );
  return r;
}

witness_result witness_2mixing_components( const dnf& d )
{
  require_block_property( d );
  require_zero_is_false( d );
  const auto st = stats( d );
  if ( !st.transitive )
  {
    throw error( error_kind::property_violation, "transitive property violated" );
  }
  if ( !st.has_mixing( 2u ) )
  {
    throw error( error_kind::property_violation, "2-mixing property violated" );
  }

  witness_result r;
  r.procedure = witness_procedure::mixing_components;
  input_t a = 0u;
  for ( const auto& comp : st.components )
  {
    unsigned ell = 3u;
    std::size_t j1 = comp.front(), j2 = comp.front();
    if ( comp.size() > 1u )
    {
      ell = ~0u;
      for ( std::size_t x = 0; x < comp.size(); ++x )
      {
        for ( std::size_t y = x + 1; y < comp.size(); ++y )
        {
          const auto c = d[comp[x]].conflicts_with( d[comp[y]] );
          if ( c < ell )
          {
            ell = c;
            j1 = comp[x];
            j2 = comp[y];
          }
        }
      }
    }
    r.gates.push_back( comp.front() );

    if ( ell >= 3u )
    {
      auto part = d[comp.front()].pos;
      part.erase( part.max() );
      a |= indicator( part );
      r.guaranteed_bound += 1u;
      continue;
    }

    const auto& t1 = d[j1];
    const auto& t2 = d[j2];
    const auto conflict = ( t1.pos & t2.neg ) | ( t2.pos & t1.neg );
    const auto p = conflict.min();
    const auto q = conflict.max();
    const auto base = indicator( ( t1.pos | t2.pos ) - conflict );
    bool found = false;
    for ( auto setting = 0u; setting < 4u && !found; ++setting )
    {
      auto cand = base;
      if ( setting & 1u )
      {
        cand = flip( cand, p );
      }
      if ( setting & 2u )
      {
        cand = flip( cand, q );
      }
      const std::array<std::pair<unsigned, unsigned>, 2> roles{ { { p, q }, { q, p } } };
      for ( const auto& [u, w] : roles )
      {
        if ( !t1.satisfied_by( cand ) && !t2.satisfied_by( cand ) && t1.satisfied_by( flip( cand, u ) ) &&
             t2.satisfied_by( flip( cand, w ) ) )
        {
          a |= cand;
          found = true;
          break;
        }
      }
    }
    if ( !found )
    {
      throw error( error_kind::invariant, "mixing witness: no setting of the two conflict variables works" );
    }
    r.guaranteed_bound += 2u;
  }
  r.input = a;
  r.value = false;
  r.lemma_bound = r.guaranteed_bound;
  r.measured = sensitivity_at( d, a );
  check_zero_side( d, r, "mixing witness" );
  return r;
}

namespace
{

bool meets_target( unsigned s, unsigned k, double c ) { return static_cast<double>( s ) * s * c >= static_cast<double>( k ); }

void check_block_arity( const block_family& blocks, unsigned arity )
{
  if ( !blocks.support().subset_of( var_set( all_ones( arity ) ) ) )
  {
    throw error( error_kind::usage, "block family mentions variables beyond the arity" );
  }
}

sensitivity_problem_result exhaustive( const truth_table& f, unsigned k, double c, const caps& limits )
{
  const auto prof = sensitivity_profile( f, limits );
  input_t best = 0u;
  for ( input_t y = 1u; y < f.num_rows(); ++y )
  {
    if ( prof[y] > prof[best] )
    {
      best = y;
    }
  }
  if ( !meets_target( prof[best], k, c ) )
  {
    throw error( error_kind::no_solution, "no input reaches sensitivity sqrt(" + std::to_string( k ) + "/c)" );
  }
  sensitivity_problem_result r;
  r.y = best;
  r.sensitivity = prof[best];
  r.block_count = k;
  r.constant = c;
  r.procedure = witness_procedure::exhaustive;
  r.warning = true;
  return r;
}

void recheck( const sensitivity_problem_result& r, unsigned measured )
{
  if ( measured != r.sensitivity || !meets_target( measured, r.block_count, r.constant ) )
  {
    throw error( error_kind::invariant, "sensitivity-problem answer fails its re-check" );
  }
}

void check_constant( double c )
{
  if ( !( c > 0.0 ) )
  {
    throw error( error_kind::usage, "the constant c must be positive" );
  }
}

} // namespace

sensitivity_problem_result solve_sensitivity_problem( const dnf& d, input_t x, const block_family& blocks, double c,
                                                      const caps& limits )
{
  check_constant( c );
  check_block_arity( blocks, d.arity() );
  const auto fx = d( x );
  unsigned k = 0u;
  for ( const auto& b : blocks )
  {
    k += d( flip( x, b ) ) != fx ? 1u : 0u;
  }

  sensitivity_problem_result r;
  r.block_count = k;
  r.constant = c;

  if ( c >= 1.0 && is_syntactically_monotone( d ) && meets_target( sensitivity_at( d, x ), k, c ) )
  {
    r.y = x;
    r.sensitivity = sensitivity_at( d, x );
    r.procedure = witness_procedure::monotone_echo;
    recheck( r, sensitivity_at( d, r.y ) );
    return r;
  }

  const auto st = stats( d );
  if ( c >= 4.0 && st.block && zero_is_false( d ) && d.size() > 0u )
  {
    const auto w0 = zero_witness_block( d );
    const auto w1 = witness_onesbound( d );
    const auto& w = w1.measured > w0.measured ? w1 : w0;
    if ( meets_target( w.measured, k, c ) )
    {
      r.y = w.input;
      r.sensitivity = w.measured;
      r.procedure = w.procedure;
      recheck( r, sensitivity_at( d, r.y ) );
      return r;
    }
    if ( k <= d.size() )
    {
      throw error( error_kind::invariant, "block witnesses fall short of sqrt(d_or / 4)" );
    }
  }

  if ( d.arity() > limits.n_max )
  {
    throw error( error_kind::capacity, "no efficient procedure applies and arity " + std::to_string( d.arity() ) +
                                           " exceeds n-max " + std::to_string( limits.n_max ) );
  }
  r = exhaustive( to_truth_table( d, limits ), k, c, limits );
  recheck( r, sensitivity_at( d, r.y ) );
  return r;
}

sensitivity_problem_result solve_sensitivity_problem( const truth_table& f, input_t x, const block_family& blocks,
                                                      double c, const caps& limits )
{
  check_constant( c );
  check_block_arity( blocks, f.arity() );
  require_enumerable( f.arity(), limits, "sensitivity problem" );
  const auto k = block_sensitivity_for( f, x, blocks );
  if ( c >= 1.0 && is_monotone( f, limits ) && meets_target( sensitivity_at( f, x ), k, c ) )
  {
    sensitivity_problem_result r;
    r.y = x;
    r.sensitivity = sensitivity_at( f, x );
    r.block_count = k;
    r.constant = c;
    r.procedure = witness_procedure::monotone_echo;
    recheck( r, sensitivity_at( f, x ) );
    return r;
  }
  auto r = exhaustive( f, k, c, limits );
  recheck( r, sensitivity_at( f, r.y ) );
  return r;
}

} // namespace sensbench
