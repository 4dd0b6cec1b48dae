#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library algorithms; only usable on tiny arities.

#include <sensbench/dnf.hpp>
#include <sensbench/truth_table.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace oracle
{

using sensbench::input_t;
using eval_fn = std::function<bool( input_t )>;

inline eval_fn of( const sensbench::truth_table& f )
{
  return [f]( input_t x ) { return f[x]; };
}

inline unsigned sensitivity( const eval_fn& f, unsigned n, input_t x )
{
  unsigned s = 0u;
  for ( auto i = 0u; i < n; ++i )
  {
    s += f( x ^ ( input_t{ 1 } << i ) ) != f( x ) ? 1u : 0u;
  }
  return s;
}

/* max packing of pairwise-disjoint sensitive subsets of size <= cap, over every subset */
inline unsigned block_sensitivity( const eval_fn& f, unsigned n, input_t x, unsigned cap = 64u )
{
  std::vector<input_t> sensitive;
  for ( input_t b = 1u; b < ( input_t{ 1 } << n ); ++b )
  {
    if ( static_cast<unsigned>( __builtin_popcountll( b ) ) <= cap && f( x ^ b ) != f( x ) )
    {
      sensitive.push_back( b );
    }
  }
  std::map<input_t, unsigned> memo;
  std::function<unsigned( input_t )> best = [&]( input_t avail ) -> unsigned {
    if ( avail == 0u )
    {
      return 0u;
    }
    if ( const auto it = memo.find( avail ); it != memo.end() )
    {
      return it->second;
    }
    const auto low = avail & ( ~avail + 1u );
    auto value = best( avail & ~low ); // lowest coordinate unused
    for ( const auto b : sensitive )
    {
      if ( ( b & low ) && ( b & ~avail ) == 0u )
      {
        value = std::max( value, 1u + best( avail & ~b ) );
      }
    }
    memo[avail] = value;
    return value;
  };
  return best( ( input_t{ 1 } << n ) - 1u );
}

struct measures
{
  unsigned s = 0u, s0 = 0u, s1 = 0u, bs = 0u, bs0 = 0u, bs1 = 0u;
};

inline measures all_measures( const eval_fn& f, unsigned n, bool with_bs = true )
{
  measures m;
  for ( input_t x = 0u; x < ( input_t{ 1 } << n ); ++x )
  {
    const auto s = sensitivity( f, n, x );
    const auto bs = with_bs ? block_sensitivity( f, n, x ) : 0u;
    auto& ms = f( x ) ? m.s1 : m.s0;
    auto& mb = f( x ) ? m.bs1 : m.bs0;
    ms = std::max( ms, s );
    mb = std::max( mb, bs );
  }
  m.s = std::max( m.s0, m.s1 );
  m.bs = std::max( m.bs0, m.bs1 );
  return m;
}

/* some input satisfying term i and no other, by scanning all of {0,1}^n */
inline std::optional<input_t> private_assignment( const sensbench::dnf& d, std::size_t i )
{
  for ( input_t x = 0u; x < ( input_t{ 1 } << d.arity() ); ++x )
  {
    bool ok = d[i].satisfied_by( x );
    for ( std::size_t j = 0; ok && j < d.size(); ++j )
    {
      ok = j == i || !d[j].satisfied_by( x );
    }
    if ( ok )
    {
      return x;
    }
  }
  return std::nullopt;
}

inline bool is_monotone( const eval_fn& f, unsigned n )
{
  for ( input_t x = 0u; x < ( input_t{ 1 } << n ); ++x )
  {
    for ( input_t y = x;; y = ( y + 1u ) | x )
    {
      if ( f( x ) && !f( y ) )
      {
        return false;
      }
      if ( y == ( input_t{ 1 } << n ) - 1u )
      {
        break;
      }
    }
  }
  return true;
}

/* directly evaluated, without the library's term evaluation */
inline eval_fn of( const sensbench::dnf& d )
{
  return [d]( input_t x ) {
    for ( const auto& t : d.terms() )
    {
      bool sat = true;
      for ( const auto v : t.pos )
      {
        sat = sat && ( ( x >> ( v - 1u ) ) & 1u );
      }
      for ( const auto v : t.neg )
      {
        sat = sat && !( ( x >> ( v - 1u ) ) & 1u );
      }
      if ( sat )
      {
        return true;
      }
    }
    return false;
  };
}

} // namespace oracle
