#include <sensbench/compact_form.hpp>
#include <sensbench/error.hpp>

#include <bit>

namespace sensbench
{

namespace
{

class private_search
{
public:
  private_search( const dnf& d, std::size_t i ) : d_( d ), i_( i )
  {
    assigned_ = d[i].vars().mask();
    values_ = d[i].pos.mask();
  }

  std::optional<input_t> run()
  {
    if ( search() )
    {
      return values_;
    }
    return std::nullopt;
  }

private:
  /* term j is falsified by the current partial assignment */
  bool falsified( const term& t ) const
  {
    return ( t.pos.mask() & assigned_ & ~values_ ) || ( t.neg.mask() & assigned_ & values_ );
  }

  bool search()
  {
    for ( std::size_t j = 0; j < d_.size(); ++j )
    {
      if ( j == i_ || falsified( d_[j] ) )
      {
        continue;
      }
      const auto open = d_[j].vars().mask() & ~assigned_;
      // every literal of term j already holds
      if ( open == 0u )
      {
        return false;
      }
      for ( auto rest = open; rest; rest &= rest - 1u )
      {
        const auto v = rest & ( ~rest + 1u );
        assigned_ |= v;
        if ( d_[j].neg.mask() & v )
        {
          values_ |= v;
        }
        if ( search() )
        {
          return true;
        }
        assigned_ &= ~v;
        values_ &= ~v;
      }
      return false;
    }
    return true;
  }

  const dnf& d_;
  std::size_t i_;
  std::uint64_t assigned_ = 0u;
  std::uint64_t values_ = 0u;
};

/* enumerates all points of a cube: fixed bits `base`, free coordinates `free` */
template<typename Fn>
bool for_each_point( input_t base, std::uint64_t free, Fn&& fn )
{
  std::uint64_t sub = 0u;
  do
  {
    if ( !fn( base | sub ) )
    {
      return false;
    }
    sub = ( sub - free ) & free;
  } while ( sub != 0u );
  return true;
}

} // namespace

std::optional<input_t> private_assignment( const dnf& d, std::size_t i )
{
  return private_search( d, i ).run();
}

compact_form_report check_compact_form( const dnf& d, const caps& limits )
{
  require_bs_enumerable( d.arity(), limits, "compact-form check" );
  compact_form_report r;
  r.cond_a = !d( 0u );

  r.cond_c = true;
  for ( std::size_t i = 0; i < d.size(); ++i )
  {
    r.private_assignments.push_back( private_assignment( d, i ) );
    r.cond_c = r.cond_c && r.private_assignments.back().has_value();
  }

  const auto f = to_truth_table( d, limits );
  const auto report = block_sensitivity_report( f, limits );
  r.bs_at_zero = block_sensitivity_at( f, 0u, limits ).count;
  r.bs0 = report.bs0;
  r.bs = report.bs;
  r.cond_b = r.cond_a && r.bs_at_zero == r.bs0;
  r.normalized = r.cond_a && r.cond_b && r.cond_c && r.bs == r.bs_at_zero;
  return r;
}

dnf irredundant_prime_cover( const truth_table& f, const caps& limits )
{
  require_enumerable( f.arity(), limits, "prime cover" );
  const auto n = f.arity();
  const auto full = all_ones( n );

  struct cube
  {
    std::uint64_t care;
    input_t values;
  };
  std::vector<cube> cubes;
  std::vector<std::uint32_t> cover_count( f.num_rows(), 0u );

  const auto inside = [&]( const cube& c ) {
    return for_each_point( c.values, full & ~c.care, [&]( input_t x ) { return f[x]; } );
  };

  for ( input_t m = 0u; m < f.num_rows(); ++m )
  {
    if ( !f[m] || cover_count[m] != 0u )
    {
      continue;
    }
    cube c{ full, m };
    for ( auto v = 0u; v < n; ++v )
    {
      const auto bitv = std::uint64_t{ 1 } << v;
      cube wider{ c.care & ~bitv, c.values & ~bitv };
      if ( inside( wider ) )
      {
        c = wider;
      }
    }
    for_each_point( c.values, full & ~c.care, [&]( input_t x ) {
      ++cover_count[x];
      return true;
    } );
    cubes.push_back( c );
  }

  std::vector<bool> keep( cubes.size(), true );
  for ( auto k = cubes.size(); k-- > 0; )
  {
    const auto& c = cubes[k];
    const bool redundant = for_each_point( c.values, full & ~c.care, [&]( input_t x ) { return cover_count[x] >= 2u; } );
    if ( redundant )
    {
      keep[k] = false;
      for_each_point( c.values, full & ~c.care, [&]( input_t x ) {
        --cover_count[x];
        return true;
      } );
    }
  }

  dnf out( n );
  for ( std::size_t k = 0; k < cubes.size(); ++k )
  {
    if ( keep[k] )
    {
      out.add_term( { var_set( cubes[k].care & cubes[k].values ), var_set( cubes[k].care & ~cubes[k].values ) } );
    }
  }
  return out;
}

dnf drop_redundant_terms( const dnf& d, const caps& limits )
{
  require_enumerable( d.arity(), limits, "redundant-term removal" );
  const auto full = all_ones( d.arity() );
  std::vector<std::uint32_t> cover_count( std::size_t{ 1 } << d.arity(), 0u );
  for ( const auto& t : d.terms() )
  {
    for_each_point( t.pos.mask(), full & ~t.vars().mask(), [&]( input_t x ) {
      ++cover_count[x];
      return true;
    } );
  }
  std::vector<bool> keep( d.size(), true );
  for ( auto k = d.size(); k-- > 0; )
  {
    const auto& t = d[k];
    const auto free = full & ~t.vars().mask();
    if ( for_each_point( t.pos.mask(), free, [&]( input_t x ) { return cover_count[x] >= 2u; } ) )
    {
      keep[k] = false;
      for_each_point( t.pos.mask(), free, [&]( input_t x ) {
        --cover_count[x];
        return true;
      } );
    }
  }
  dnf out( d.arity() );
  for ( std::size_t k = 0; k < d.size(); ++k )
  {
    if ( keep[k] )
    {
      out.add_term( d[k] );
    }
  }
  return out;
}

normalization_result normalize( const truth_table& f, const caps& limits )
{
  require_bs_enumerable( f.arity(), limits, "normalization" );
  if ( f.is_constant() )
  {
    throw error( error_kind::degenerate_input, "cannot normalize a constant function" );
  }
  const auto report = block_sensitivity_report( f, limits );
  normalization_result r;
  r.shift = report.witness_bs->input;
  r.polarity = f[r.shift];
  r.function = truth_table::from_function( f.arity(), [&]( input_t x ) { return r.polarity != f[x ^ r.shift]; } );
  r.formula = irredundant_prime_cover( r.function, limits );
  r.report = check_compact_form( r.formula, limits );
  if ( !r.report.compact() || !r.report.normalized )
  {
    throw error( error_kind::invariant, "normalized formula fails the compact-form check" );
  }
  return r;
}

} // namespace sensbench
