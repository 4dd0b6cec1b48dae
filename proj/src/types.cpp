#include <sensbench/error.hpp>
#include <sensbench/types.hpp>

#include <algorithm>

namespace sensbench
{

const char* to_string( error_kind kind )
{
  switch ( kind )
  {
  case error_kind::capacity:
    return "capacity";
  case error_kind::usage:
    return "usage";
  case error_kind::parse:
    return "parse";
  case error_kind::arity_mismatch:
    return "arity-mismatch";
  case error_kind::degenerate_input:
    return "degenerate-input";
  case error_kind::property_violation:
    return "property-violation";
  case error_kind::hypothesis_violation:
    return "hypothesis-violation";
  case error_kind::inconsistent_data:
    return "inconsistent-data";
  case error_kind::no_solution:
    return "no-solution";
  case error_kind::invariant:
    return "invariant";
  }
  return "unknown";
}

std::string to_string( var_set s )
{
  std::string out = "{";
  bool first = true;
  for ( auto v : s )
  {
    if ( !first )
    {
      out += ',';
    }
    out += std::to_string( v );
    first = false;
  }
  return out + "}";
}

std::string to_bitstring( input_t x, unsigned n )
{
  std::string out( n, '0' );
  for ( auto i = 0u; i < n; ++i )
  {
    if ( ( x >> i ) & 1u )
    {
      out[i] = '1';
    }
  }
  return out;
}

input_t parse_bitstring( std::string_view text, unsigned n )
{
  if ( text.size() != n )
  {
    throw error( error_kind::parse, "bitstring '" + std::string( text ) + "' has length " + std::to_string( text.size() ) +
                                        ", expected " + std::to_string( n ) );
  }
  input_t x = 0u;
  for ( auto i = 0u; i < n; ++i )
  {
    if ( text[i] == '1' )
    {
      x |= input_t{ 1 } << i;
    }
    else if ( text[i] != '0' )
    {
      throw error( error_kind::parse, "bitstring '" + std::string( text ) + "' has a non-binary character at position " +
                                          std::to_string( i + 1 ) );
    }
  }
  return x;
}

block_family::block_family( std::vector<var_set> blocks, unsigned arity ) : blocks_( std::move( blocks ) )
{
  const var_set universe( all_ones( arity ) );
  var_set seen;
  for ( const auto& b : blocks_ )
  {
    if ( b.empty() )
    {
      throw error( error_kind::usage, "block family contains an empty block" );
    }
    if ( !b.subset_of( universe ) )
    {
      throw error( error_kind::usage, "block " + to_string( b ) + " is not a subset of [" + std::to_string( arity ) + "]" );
    }
    if ( b.intersects( seen ) )
    {
      throw error( error_kind::usage, "block " + to_string( b ) + " overlaps an earlier block" );
    }
    seen |= b;
  }
  std::sort( blocks_.begin(), blocks_.end(), []( var_set a, var_set b ) { return lex_less( a, b ); } );
}

var_set block_family::support() const
{
  var_set s;
  for ( const auto& b : blocks_ )
  {
    s |= b;
  }
  return s;
}

bool lex_less( const block_family& a, const block_family& b )
{
  return std::lexicographical_compare( a.begin(), a.end(), b.begin(), b.end(),
                                       []( var_set x, var_set y ) { return lex_less( x, y ); } );
}

std::string to_string( const block_family& family )
{
  std::string out = "[";
  for ( std::size_t i = 0; i < family.size(); ++i )
  {
    if ( i )
    {
      out += ' ';
    }
    out += to_string( family[i] );
  }
  return out + "]";
}

void require_enumerable( unsigned arity, const caps& limits, std::string_view what )
{
  if ( arity > limits.n_max )
  {
    throw error( error_kind::capacity, std::string( what ) + ": arity " + std::to_string( arity ) +
                                           " exceeds n-max " + std::to_string( limits.n_max ) );
  }
}

void require_bs_enumerable( unsigned arity, const caps& limits, std::string_view what )
{
  if ( arity > limits.bs_max || arity > limits.n_max )
  {
    throw error( error_kind::capacity, std::string( what ) + ": arity " + std::to_string( arity ) +
                                           " exceeds bs-max " + std::to_string( std::min( limits.bs_max, limits.n_max ) ) );
  }
}

} // namespace sensbench
