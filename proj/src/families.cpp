#include <sensbench/error.hpp>
#include <sensbench/families.hpp>
#include <sensbench/lowsens.hpp>

#include <algorithm>

namespace sensbench
{

namespace
{

var_set shift_set( var_set s, unsigned offset ) { return var_set( s.mask() << offset ); }

/* copy 0 gets `first`, every other copy gets `rest` */
input_t tile( input_t first, input_t rest, unsigned arity, unsigned m )
{
  input_t x = first;
  for ( auto c = 1u; c < m; ++c )
  {
    x |= rest << ( c * arity );
  }
  return x;
}

block_witness tile_blocks( const block_witness& first, input_t rest, unsigned arity, unsigned m, bool every_copy )
{
  std::vector<var_set> blocks;
  for ( auto c = 0u; c < ( every_copy ? m : 1u ); ++c )
  {
    for ( const auto& b : first.blocks )
    {
      blocks.push_back( shift_set( b, c * arity ) );
    }
  }
  const auto input = every_copy ? tile( first.input, first.input, arity, m ) : tile( first.input, rest, arity, m );
  return { input, block_family( std::move( blocks ), arity * m ) };
}

} // namespace

measure_report disjoint_or_compose( const measure_report& g, unsigned m )
{
  if ( m == 0u )
  {
    throw error( error_kind::usage, "composition needs at least one copy" );
  }
  if ( m == 1u )
  {
    return g;
  }
  if ( !g.has_zero_input )
  {
    throw error( error_kind::degenerate_input, "composition of a constant-1 function" );
  }
  const auto n = g.arity;
  measure_report f;
  f.arity = n * m;
  f.has_zero_input = true;
  f.has_one_input = g.has_one_input;
  const bool witnesses = f.arity <= max_vars;

  if ( g.has_sensitivity )
  {
    f.has_sensitivity = true;
    f.s0 = m * g.s0;
    f.s1 = g.s1;
    f.s = std::max( f.s1, f.s0 );
    if ( witnesses )
    {
      f.witness_s0 = tile( *g.witness_s0, *g.witness_s0, n, m );
      if ( g.has_one_input )
      {
        f.witness_s1 = tile( *g.witness_s1, *g.witness_s0, n, m );
      }
      f.witness_s = f.s0 >= f.s1 ? f.witness_s0 : f.witness_s1;
    }
  }
  if ( g.has_block_sensitivity )
  {
    f.has_block_sensitivity = true;
    f.bs0 = m * g.bs0;
    f.bs1 = g.bs1;
    f.bs = std::max( f.bs0, f.bs1 );
    if ( witnesses )
    {
      const auto zero = g.witness_bs0->input;
      f.witness_bs0 = tile_blocks( *g.witness_bs0, zero, n, m, true );
      if ( g.has_one_input )
      {
        f.witness_bs1 = tile_blocks( *g.witness_bs1, zero, n, m, false );
      }
      f.witness_bs = f.bs0 >= f.bs1 ? f.witness_bs0 : f.witness_bs1;
    }
  }
  return f;
}

dnf explicit_or_expand( const dnf& d, unsigned m, const caps& limits )
{
  if ( m == 0u )
  {
    throw error( error_kind::usage, "expansion needs at least one copy" );
  }
  const auto arity = d.arity() * m;
  if ( arity > limits.expand_max || arity > max_vars )
  {
    throw error( error_kind::capacity, "expanded arity " + std::to_string( arity ) + " exceeds the expansion cap " +
                                           std::to_string( std::min( limits.expand_max, max_vars ) ) );
  }
  dnf out( arity );
  for ( auto c = 0u; c < m; ++c )
  {
    for ( const auto& t : d.terms() )
    {
      out.add_term( { shift_set( t.pos, c * d.arity() ), shift_set( t.neg, c * d.arity() ) } );
    }
  }
  return out;
}

dnf rubinstein_inner( unsigned n )
{
  const auto all = var_set::range( 1u, 2u * n );
  dnf g( 2u * n );
  for ( auto j = 1u; j <= n; ++j )
  {
    const var_set pos{ 2u * j - 1u, 2u * j };
    g.add_term( { pos, all - pos } );
  }
  return g;
}

dnf virza_inner( unsigned n )
{
  const auto all = var_set::range( 1u, 2u * n + 1u );
  dnf g( 2u * n + 1u );
  for ( auto j = 1u; j <= n; ++j )
  {
    const var_set pos{ 2u * j - 1u, 2u * j };
    g.add_term( { pos, all - pos } );
  }
  const var_set last{ 2u * n + 1u };
  g.add_term( { last, all - last } );
  return g;
}

dnf ambainis_sun_inner( unsigned n )
{
  const auto size = 4u * n + 2u;
  var_set ones, zeros;
  for ( auto p = 1u; p <= size; ++p )
  {
    if ( p <= 2u * n )
    {
      zeros.insert( p );
    }
    else if ( p <= 2u * n + 2u )
    {
      ones.insert( p );
    }
    else if ( ( p - 2u * n - 2u ) % 2u == 1u )
    {
      zeros.insert( p );
    }
  }
  const auto rotate = [&]( var_set s, unsigned r ) {
    var_set out;
    for ( auto p : s )
    {
      out.insert( ( p - 1u + 2u * r ) % size + 1u );
    }
    return out;
  };
  dnf g( size );
  for ( auto r = 0u; r <= 2u * n; ++r )
  {
    g.add_term( { rotate( ones, r ), rotate( zeros, r ) } );
  }
  return g;
}

namespace
{

family_instance make_instance( std::string name, unsigned n, dnf g, unsigned copies, unsigned s, unsigned bs, bool expand,
                               const caps& limits )
{
  if ( n == 0u )
  {
    throw error( error_kind::usage, "family parameter n must be at least 1" );
  }
  family_instance fi;
  fi.name = std::move( name );
  fi.n = n;
  fi.copies = copies;
  fi.expected_s = s;
  fi.expected_bs = bs;
  fi.inner = measure( to_truth_table( g, limits ), limits );
  fi.predicted = disjoint_or_compose( fi.inner, copies );
  if ( expand )
  {
    fi.expanded = explicit_or_expand( g, copies, limits );
  }
  fi.g = std::move( g );
  return fi;
}

void require_positive( unsigned n )
{
  if ( n == 0u )
  {
    throw error( error_kind::usage, "family parameter n must be at least 1" );
  }
}

} // namespace

family_instance rubinstein( unsigned n, bool expand, const caps& limits )
{
  require_positive( n );
  const auto s = 2u * n;
  return make_instance( "rubinstein", n, rubinstein_inner( n ), 2u * n, s, s * s / 2u, expand, limits );
}

family_instance virza( unsigned n, bool expand, const caps& limits )
{
  require_positive( n );
  const auto s = 2u * n + 1u;
  return make_instance( "virza", n, virza_inner( n ), 2u * n + 1u, s, ( s * s + s ) / 2u, expand, limits );
}

family_instance ambainis_sun( unsigned n, bool expand, const caps& limits )
{
  require_positive( n );
  const auto s = 3u * n + 2u;
  return make_instance( "ambainis-sun", n, ambainis_sun_inner( n ), 3u * n + 2u, s, ( 2u * s * s - s ) / 3u, expand,
                        limits );
}

dnf onesbound_tight( unsigned n )
{
  if ( n == 0u )
  {
    throw error( error_kind::usage, "onesbound_tight needs n >= 1" );
  }
  dnf d( 2u * n + 1u );
  var_set odd, even;
  for ( auto i = 1u; i <= n; ++i )
  {
    d.add_term( { var_set{ 2u * i }, var_set{} } );
    even.insert( 2u * i );
  }
  for ( auto i = 1u; i <= n + 1u; ++i )
  {
    odd.insert( 2u * i - 1u );
  }
  d.add_term( { odd, even } );
  return d;
}

proposition_pair_result proposition_pair( unsigned p, unsigned q, const caps& limits )
{
  if ( p < 2u || p > q )
  {
    throw error( error_kind::usage, "proposition pair needs 2 <= p <= q" );
  }
  const auto n = p + q;
  require_enumerable( n, limits, "proposition pair" );

  proposition_pair_result r;
  r.p = p;
  r.q = q;
  for ( auto i = 1u; i <= n; ++i )
  {
    if ( i == 1u || i > 2u * p || ( i % 2u == 0u && i != 2u * p ) )
    {
      r.a = flip( r.a, i );
    }
  }
  const auto head = all_ones( 2u * p );
  r.f = truth_table::from_function( n, [&]( input_t x ) {
    const auto w = hamming_weight( x & head );
    if ( w != p )
    {
      return w > p;
    }
    unsigned index_sum = 0u;
    for ( auto v : var_set( x & head ) )
    {
      index_sum += v;
    }
    return index_sum % 2u == 1u;
  } );
  r.g = r.f;
  r.g.set( r.a, false );

  r.s_f = sensitivity_report( r.f, limits ).s;
  r.s_g = sensitivity_report( r.g, limits ).s;
  const auto radius = agreement_radius( r.f, r.g, r.a ^ all_ones( n ), limits );
  r.radius = radius.value_or( 0u );
  if ( r.s_f != p || r.s_g != q || r.f[r.a] == r.g[r.a] || !radius || *radius != n - 1u )
  {
    throw error( error_kind::invariant, "proposition pair (" + std::to_string( p ) + "," + std::to_string( q ) +
                                            ") fails its brute-force checks" );
  }
  return r;
}

} // namespace sensbench
