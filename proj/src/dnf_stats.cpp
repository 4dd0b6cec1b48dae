#include <sensbench/dnf_stats.hpp>
#include <sensbench/error.hpp>
#include <sensbench/measures.hpp>

#include <algorithm>
#include <numeric>

namespace sensbench
{

dnf_stats stats( const dnf& d )
{
  dnf_stats st;
  const auto m = d.size();
  st.size = m;
  st.width = d.width();
  st.gamma_per_term.assign( m, 0u );

  std::vector<std::size_t> parent( m );
  std::iota( parent.begin(), parent.end(), 0u );
  const auto find = [&]( std::size_t i ) {
    while ( parent[i] != i )
    {
      i = parent[i] = parent[parent[i]];
    }
    return i;
  };

  for ( std::size_t i = 0; i < m; ++i )
  {
    for ( std::size_t j = i + 1; j < m; ++j )
    {
      const auto conflicts = d[i].conflicts_with( d[j] );
      if ( conflicts == 1u )
      {
        ++st.gamma_per_term[i];
        ++st.gamma_per_term[j];
      }
      if ( d[i].vars().intersects( d[j].vars() ) )
      {
        st.mixing_max = st.mixing_max ? std::min( *st.mixing_max, conflicts ) : conflicts;
        parent[find( i )] = find( j );
      }
    }
  }
  st.gamma = m ? *std::max_element( st.gamma_per_term.begin(), st.gamma_per_term.end() ) : 0u;

  for ( auto v = 1u; v <= d.arity(); ++v )
  {
    unsigned count = 0u;
    for ( const auto& t : d.terms() )
    {
      count += t.pos.contains( v ) ? 1u : 0u;
    }
    st.t_min = std::max( st.t_min, count );
  }
  st.block = st.t_min == 1u;

  std::vector<std::size_t> slot( m, m );
  for ( std::size_t i = 0; i < m; ++i )
  {
    const auto root = find( i );
    if ( slot[root] == m )
    {
      slot[root] = st.components.size();
      st.components.emplace_back();
    }
    st.components[slot[root]].push_back( i );
  }
  for ( const auto& comp : st.components )
  {
    for ( std::size_t a = 0; a < comp.size() && st.transitive; ++a )
    {
      for ( std::size_t b = a + 1; b < comp.size(); ++b )
      {
        if ( !d[comp[a]].vars().intersects( d[comp[b]].vars() ) )
        {
          st.transitive = false;
          break;
        }
      }
    }
  }
  return st;
}

bool zero_is_false( const dnf& d )
{
  return std::none_of( d.terms().begin(), d.terms().end(), []( const term& t ) { return t.pos.empty(); } );
}

void require_zero_is_false( const dnf& d )
{
  for ( std::size_t i = 0; i < d.size(); ++i )
  {
    if ( d[i].pos.empty() )
    {
      throw error( error_kind::property_violation,
                   "term " + std::to_string( i + 1 ) + " has no positive literal, so f(0^n) = 1" );
    }
  }
}

void require_block_property( const dnf& d )
{
  for ( std::size_t i = 0; i < d.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < d.size(); ++j )
    {
      const auto shared = d[i].pos & d[j].pos;
      if ( !shared.empty() )
      {
        throw error( error_kind::property_violation, "block property violated: terms " + std::to_string( i + 1 ) + " and " +
                                                         std::to_string( j + 1 ) + " both contain x" +
                                                         std::to_string( shared.min() ) + " positively" );
      }
    }
  }
}

void require_t_block_property( const dnf& d, unsigned t )
{
  if ( t < 1u )
  {
    throw error( error_kind::usage, "t-block property needs t >= 1" );
  }
  for ( auto v = 1u; v <= d.arity(); ++v )
  {
    std::vector<std::size_t> holders;
    for ( std::size_t i = 0; i < d.size(); ++i )
    {
      if ( d[i].pos.contains( v ) )
      {
        holders.push_back( i + 1 );
      }
    }
    if ( holders.size() > t )
    {
      std::string list;
      for ( auto h : holders )
      {
        list += ( list.empty() ? "" : "," ) + std::to_string( h );
      }
      throw error( error_kind::property_violation, std::to_string( t ) + "-block property violated: x" + std::to_string( v ) +
                                                       " is positive in terms " + list );
    }
  }
}

bounds_check bounds_report( const dnf& d, const truth_table& f, const caps& limits )
{
  if ( to_truth_table( d, limits ) != f )
  {
    throw error( error_kind::usage, "bounds report: the truth table does not match the formula" );
  }
  bounds_check r;
  r.compact_form = check_compact_form( d, limits );
  if ( !r.compact_form.compact() )
  {
    return r;
  }
  const auto st = stats( d );
  const auto report = sensitivity_report( f, limits );
  r.checked = true;
  r.width = st.width;
  r.gamma = st.gamma;
  r.s1 = report.s1;
  r.lower_ok = r.s1 + r.gamma >= r.width;
  r.upper_ok = r.s1 <= r.width;
  r.mixing_applies = st.has_mixing( 2u );
  r.mixing_ok = !r.mixing_applies || ( r.gamma == 0u && r.s1 == r.width );
  return r;
}

} // namespace sensbench
