#include <sensbench/compact_form.hpp>
#include <sensbench/measures.hpp>
#include <sensbench/sampling.hpp>

#include <algorithm>
#include <array>
#include <numeric>

namespace sensbench
{

unsigned uniform( rng_t& rng, unsigned lo, unsigned hi ) { return std::uniform_int_distribution<unsigned>( lo, hi )( rng ); }

bool coin( rng_t& rng, double p ) { return std::bernoulli_distribution( p )( rng ); }

namespace
{

std::vector<unsigned> shuffled_vars( rng_t& rng, unsigned n )
{
  std::vector<unsigned> vars( n );
  std::iota( vars.begin(), vars.end(), 1u );
  std::shuffle( vars.begin(), vars.end(), rng );
  return vars;
}

var_set random_subset( rng_t& rng, var_set from, double p )
{
  var_set out;
  for ( auto v : from )
  {
    if ( coin( rng, p ) )
    {
      out.insert( v );
    }
  }
  return out;
}

var_set pick( rng_t& rng, std::vector<unsigned> pool, unsigned k )
{
  std::shuffle( pool.begin(), pool.end(), rng );
  var_set out;
  for ( auto i = 0u; i < k && i < pool.size(); ++i )
  {
    out.insert( pool[i] );
  }
  return out;
}

constexpr std::array<double, 4> negative_rates{ 0.0, 0.1, 0.25, 0.5 };

double negative_rate( rng_t& rng ) { return negative_rates[uniform( rng, 0u, negative_rates.size() - 1u )]; }

} // namespace

truth_table random_function( rng_t& rng, unsigned n, double density )
{
  truth_table f( n );
  for ( input_t x = 0u; x < f.num_rows(); ++x )
  {
    f.set( x, coin( rng, density ) );
  }
  return f;
}

truth_table random_decision_tree( rng_t& rng, unsigned n, unsigned depth )
{
  struct node
  {
    unsigned var = 0u; // 0 for a leaf
    bool leaf_value = false;
    std::size_t low = 0u, high = 0u;
  };
  std::vector<node> nodes;
  const auto grow = [&]( auto&& self, unsigned left, var_set used ) -> std::size_t {
    const auto id = nodes.size();
    nodes.emplace_back();
    if ( left == 0u || used.size() == n || coin( rng, 0.2 ) )
    {
      nodes[id].leaf_value = coin( rng, 0.5 );
      return id;
    }
    std::vector<unsigned> pool;
    for ( auto v = 1u; v <= n; ++v )
    {
      if ( !used.contains( v ) )
      {
        pool.push_back( v );
      }
    }
    const auto v = pool[uniform( rng, 0u, static_cast<unsigned>( pool.size() ) - 1u )];
    auto next = used;
    next.insert( v );
    const auto low = self( self, left - 1u, next );
    const auto high = self( self, left - 1u, next );
    nodes[id].var = v;
    nodes[id].low = low;
    nodes[id].high = high;
    return id;
  };
  grow( grow, depth, var_set{} );
  return truth_table::from_function( n, [&]( input_t x ) {
    std::size_t at = 0u;
    while ( nodes[at].var != 0u )
    {
      at = bit( x, nodes[at].var ) ? nodes[at].high : nodes[at].low;
    }
    return nodes[at].leaf_value;
  } );
}

truth_table random_monotone_function( rng_t& rng, unsigned n )
{
  std::vector<input_t> seeds( uniform( rng, 1u, std::max( 1u, 2u * n ) ) );
  for ( auto& p : seeds )
  {
    p = indicator( pick( rng, shuffled_vars( rng, n ), uniform( rng, 1u, std::max( 1u, n ) ) ) );
  }
  return truth_table::from_function(
      n, [&]( input_t x ) { return std::any_of( seeds.begin(), seeds.end(), [&]( input_t p ) { return ( x & p ) == p; } ); } );
}

truth_table random_mixed_function( rng_t& rng, unsigned n )
{
  switch ( uniform( rng, 0u, 3u ) )
  {
  case 0u:
    return random_function( rng, n, 0.5 );
  case 1u:
  {
    constexpr std::array<double, 4> biases{ 0.05, 0.15, 0.85, 0.95 };
    return random_function( rng, n, biases[uniform( rng, 0u, 3u )] );
  }
  case 2u:
    return random_decision_tree( rng, n, uniform( rng, 1u, 3u ) );
  default:
  {
    const auto k = std::min( n, uniform( rng, 1u, 3u ) );
    const auto inner = random_function( rng, k, 0.5 );
    const auto vars = shuffled_vars( rng, n );
    return truth_table::from_function( n, [&]( input_t x ) {
      input_t y = 0u;
      for ( auto i = 0u; i < k; ++i )
      {
        y |= input_t{ bit( x, vars[i] ) } << i;
      }
      return inner[y];
    } );
  }
  }
}

dnf random_block_dnf( rng_t& rng, unsigned min_arity, unsigned max_arity )
{
  const auto n = uniform( rng, min_arity, max_arity );
  const auto vars = shuffled_vars( rng, n );
  const auto rate = negative_rate( rng );
  const auto target = uniform( rng, 1u, std::min( n, 6u ) );
  const auto all = var_set::range( 1u, n );
  dnf d( n );
  std::size_t next = 0u;
  while ( d.size() < target && next < vars.size() )
  {
    var_set pos;
    for ( auto k = uniform( rng, 1u, 3u ); k > 0u && next < vars.size(); --k )
    {
      pos.insert( vars[next++] );
    }
    d.add_term( { pos, random_subset( rng, all - pos, rate ) } );
  }
  return d;
}

dnf random_t_block_dnf( rng_t& rng, unsigned min_arity, unsigned max_arity, unsigned t )
{
  const auto n = uniform( rng, min_arity, max_arity );
  const auto rate = negative_rate( rng );
  const auto max_pos = uniform( rng, 1u, 3u );
  const auto target = uniform( rng, 2u, std::min( 2u * n, 12u ) );
  const auto all = var_set::range( 1u, n );
  std::vector<unsigned> uses( n + 1u, 0u );
  dnf d( n );
  for ( auto attempt = 0u; attempt < 4u * target && d.size() < target; ++attempt )
  {
    std::vector<unsigned> pool;
    for ( auto v = 1u; v <= n; ++v )
    {
      if ( uses[v] < t )
      {
        pool.push_back( v );
      }
    }
    if ( pool.empty() )
    {
      break;
    }
    const auto pos = pick( rng, pool, uniform( rng, 1u, max_pos ) );
    const term cand{ pos, random_subset( rng, all - pos, rate ) };
    if ( std::find( d.terms().begin(), d.terms().end(), cand ) != d.terms().end() )
    {
      continue;
    }
    for ( auto v : pos )
    {
      ++uses[v];
    }
    d.add_term( cand );
  }
  return d;
}

dnf random_dnf( rng_t& rng, unsigned min_arity, unsigned max_arity )
{
  const auto n = uniform( rng, min_arity, max_arity );
  const auto rate = negative_rate( rng );
  const auto all = var_set::range( 1u, n );
  dnf d( n );
  for ( auto m = uniform( rng, 1u, 6u ); m > 0u; --m )
  {
    const auto pos = pick( rng, shuffled_vars( rng, n ), uniform( rng, 1u, std::min( n, 3u ) ) );
    d.add_term( { pos, random_subset( rng, all - pos, rate ) } );
  }
  return d;
}

dnf random_mixing_dnf( rng_t& rng, unsigned min_arity, unsigned max_arity, unsigned ell )
{
  const auto n = uniform( rng, min_arity, max_arity );
  const auto rate = coin( rng, 0.5 ) ? 0.3 : 0.5;
  const auto target = uniform( rng, 2u, 6u );
  const auto all = var_set::range( 1u, n );
  dnf d( n );
  for ( auto attempt = 0u; attempt < 50u && d.size() < target; ++attempt )
  {
    const auto pos = pick( rng, shuffled_vars( rng, n ), uniform( rng, 1u, std::min( n, 3u ) ) );
    const term cand{ pos, random_subset( rng, all - pos, rate ) };
    const bool fits = std::all_of( d.terms().begin(), d.terms().end(), [&]( const term& t ) {
      return !t.vars().intersects( cand.vars() ) || t.conflicts_with( cand ) >= ell;
    } );
    if ( fits )
    {
      d.add_term( cand );
    }
  }
  return d;
}

dnf random_transitive_mixing_dnf( rng_t& rng, unsigned min_arity, unsigned max_arity )
{
  const auto n = uniform( rng, min_arity, max_arity );
  const auto vars = shuffled_vars( rng, n );
  std::vector<term> terms;
  std::size_t next = 0u;
  while ( next < vars.size() )
  {
    const auto size = std::min<std::size_t>( uniform( rng, 1u, 6u ), vars.size() - next );
    const std::vector<unsigned> group( vars.begin() + static_cast<std::ptrdiff_t>( next ),
                                       vars.begin() + static_cast<std::ptrdiff_t>( next + size ) );
    next += size;

    std::vector<term> local;
    std::size_t used = 0u;
    for ( auto k = uniform( rng, 1u, 3u ); k > 0u && used < group.size(); --k )
    {
      var_set pos;
      for ( auto w = uniform( rng, 1u, 2u ); w > 0u && used < group.size(); --w )
      {
        pos.insert( group[used++] );
      }
      local.push_back( { pos, {} } );
    }
    for ( std::size_t i = 0; i < local.size(); ++i )
    {
      for ( std::size_t j = i + 1; j < local.size(); ++j )
      {
        while ( local[i].conflicts_with( local[j] ) < 2u )
        {
          const auto free_i = local[j].pos - local[i].neg;
          const auto free_j = local[i].pos - local[j].neg;
          const bool into_i = free_j.empty() || ( !free_i.empty() && coin( rng, 0.5 ) );
          const auto from = ( into_i ? free_i : free_j ).to_vector();
          const auto v = from[uniform( rng, 0u, static_cast<unsigned>( from.size() ) - 1u )];
          ( into_i ? local[i] : local[j] ).neg.insert( v );
        }
      }
    }
    var_set spare;
    for ( auto i = used; i < group.size(); ++i )
    {
      spare.insert( group[i] );
    }
    for ( auto& t : local )
    {
      t.neg |= random_subset( rng, spare, 0.3 );
      terms.push_back( t );
    }
  }
  std::shuffle( terms.begin(), terms.end(), rng );
  return dnf( n, std::move( terms ) );
}

truth_table random_s0_one_function( rng_t& rng, unsigned n, const caps& limits )
{
  struct cube
  {
    input_t care;
    input_t values;
  };
  std::vector<cube> cubes;
  const auto target = uniform( rng, 1u, 4u );
  for ( auto attempt = 0u; attempt < 40u && cubes.size() < target; ++attempt )
  {
    const auto care = indicator( pick( rng, shuffled_vars( rng, n ), uniform( rng, 1u, n ) ) );
    const auto values = care & std::uniform_int_distribution<input_t>()( rng );
    const bool far = std::all_of( cubes.begin(), cubes.end(), [&]( const cube& c ) {
      return hamming_weight( c.care & care & ( c.values ^ values ) ) >= 3u;
    } );
    if ( far )
    {
      cubes.push_back( { care, values } );
    }
  }
  const auto f = truth_table::from_function( n, [&]( input_t x ) {
    return std::any_of( cubes.begin(), cubes.end(), [&]( const cube& c ) { return ( x & c.care ) == c.values; } );
  } );
  const auto report = block_sensitivity_report( f, limits );
  return shift_inputs( f, report.witness_bs0->input );
}

std::optional<dnf> compact_repair( const dnf& d, const caps& limits )
{
  if ( d.size() == 0u || d( 0u ) )
  {
    return std::nullopt;
  }
  auto repaired = drop_redundant_terms( d, limits );
  if ( !check_compact_form( repaired, limits ).compact() )
  {
    return std::nullopt;
  }
  return repaired;
}

} // namespace sensbench
