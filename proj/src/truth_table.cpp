#include <sensbench/error.hpp>
#include <sensbench/truth_table.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace sensbench
{

truth_table::truth_table( unsigned arity ) : arity_( arity )
{
  if ( arity > max_table_arity )
  {
    throw error( error_kind::capacity, "truth table arity " + std::to_string( arity ) + " exceeds the storage limit " +
                                           std::to_string( max_table_arity ) );
  }
  words_.assign( arity >= 6u ? std::size_t{ 1 } << ( arity - 6u ) : 1u, 0u );
}

truth_table truth_table::constant( unsigned arity, bool value )
{
  truth_table tt( arity );
  if ( value )
  {
    std::fill( tt.words_.begin(), tt.words_.end(), tt.word_mask() );
  }
  return tt;
}

std::uint64_t truth_table::count_ones() const
{
  std::uint64_t n = 0u;
  for ( auto w : words_ )
  {
    n += static_cast<std::uint64_t>( std::popcount( w ) );
  }
  return n;
}

bool truth_table::is_constant() const
{
  const auto ones = count_ones();
  return ones == 0u || ones == num_rows();
}

truth_table truth_table::operator~() const
{
  truth_table r( arity_ );
  const auto m = word_mask();
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    r.words_[i] = ~words_[i] & m;
  }
  return r;
}

void truth_table::check_same_arity( const truth_table& other ) const
{
  if ( arity_ != other.arity_ )
  {
    throw error( error_kind::arity_mismatch, "truth tables have arities " + std::to_string( arity_ ) + " and " +
                                                 std::to_string( other.arity_ ) );
  }
}

truth_table truth_table::operator^( const truth_table& other ) const
{
  check_same_arity( other );
  truth_table r( arity_ );
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    r.words_[i] = words_[i] ^ other.words_[i];
  }
  return r;
}

truth_table truth_table::operator&( const truth_table& other ) const
{
  check_same_arity( other );
  truth_table r( arity_ );
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    r.words_[i] = words_[i] & other.words_[i];
  }
  return r;
}

truth_table truth_table::operator|( const truth_table& other ) const
{
  check_same_arity( other );
  truth_table r( arity_ );
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    r.words_[i] = words_[i] | other.words_[i];
  }
  return r;
}

truth_table shift_inputs( const truth_table& f, input_t a )
{
  return truth_table::from_function( f.arity(), [&]( input_t x ) { return f[x ^ a]; } );
}

truth_table pad_variables( const truth_table& f, unsigned arity )
{
  if ( arity < f.arity() )
  {
    throw error( error_kind::usage, "cannot pad to a smaller arity" );
  }
  const auto low = all_ones( f.arity() );
  return truth_table::from_function( arity, [&]( input_t x ) { return f[x & low]; } );
}

std::string to_hex( const truth_table& f )
{
  const auto digits = std::max<std::uint64_t>( 1u, f.num_rows() / 4u );
  std::string out;
  out.reserve( digits );
  for ( std::uint64_t d = 0; d < digits; ++d )
  {
    unsigned v = 0u;
    for ( unsigned b = 0; b < 4u; ++b )
    {
      const auto row = d * 4u + b;
      if ( row < f.num_rows() && f[row] )
      {
        v |= 1u << b;
      }
    }
    out += "0123456789abcdef"[v];
  }
  return out;
}

truth_table from_hex( unsigned arity, std::string_view hex )
{
  truth_table f( arity );
  const auto digits = std::max<std::uint64_t>( 1u, f.num_rows() / 4u );
  if ( hex.size() != digits )
  {
    throw error( error_kind::parse, "hex table has " + std::to_string( hex.size() ) + " digits, expected " +
                                        std::to_string( digits ) + " for arity " + std::to_string( arity ) );
  }
  for ( std::uint64_t d = 0; d < digits; ++d )
  {
    const auto c = static_cast<char>( std::tolower( static_cast<unsigned char>( hex[d] ) ) );
    unsigned v;
    if ( c >= '0' && c <= '9' )
    {
      v = static_cast<unsigned>( c - '0' );
    }
    else if ( c >= 'a' && c <= 'f' )
    {
      v = static_cast<unsigned>( c - 'a' ) + 10u;
    }
    else
    {
      throw error( error_kind::parse, "hex table: invalid digit '" + std::string( 1, hex[d] ) + "' at position " +
                                          std::to_string( d + 1 ) );
    }
    for ( unsigned b = 0; b < 4u; ++b )
    {
      const auto row = d * 4u + b;
      if ( ( v >> b ) & 1u )
      {
        if ( row >= f.num_rows() )
        {
          throw error( error_kind::parse, "hex table: bit set beyond row " + std::to_string( f.num_rows() - 1u ) );
        }
        f.set( row, true );
      }
    }
  }
  return f;
}

std::string write_truth_table( const truth_table& f )
{
  return "tt " + std::to_string( f.arity() ) + "\n" + to_hex( f ) + "\n";
}

truth_table read_truth_table( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string line;
  unsigned line_no = 0;
  std::vector<std::pair<unsigned, std::string>> lines;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    const auto hash = line.find( '#' );
    if ( hash != std::string::npos )
    {
      line.erase( hash );
    }
    const auto first = line.find_first_not_of( " \t\r" );
    if ( first == std::string::npos )
    {
      continue;
    }
    const auto last = line.find_last_not_of( " \t\r" );
    lines.emplace_back( line_no, line.substr( first, last - first + 1 ) );
  }
  if ( lines.size() != 2u )
  {
    throw error( error_kind::parse, "truth table file: expected a header and one hex line, found " +
                                        std::to_string( lines.size() ) + " non-empty lines" );
  }
  std::istringstream header( lines[0].second );
  std::string tag;
  long long arity = -1;
  std::string extra;
  if ( !( header >> tag >> arity ) || tag != "tt" || ( header >> extra ) || arity < 0 )
  {
    throw error( error_kind::parse, "line " + std::to_string( lines[0].first ) + ": expected header 'tt <arity>'" );
  }
  if ( arity > static_cast<long long>( max_table_arity ) )
  {
    throw error( error_kind::capacity, "line " + std::to_string( lines[0].first ) + ": arity " + std::to_string( arity ) +
                                           " exceeds the storage limit" );
  }
  try
  {
    return from_hex( static_cast<unsigned>( arity ), lines[1].second );
  }
  catch ( const error& e )
  {
    throw error( e.kind(), "line " + std::to_string( lines[1].first ) + ": " + e.what() );
  }
}

namespace functions
{

truth_table or_n( unsigned n )
{
  return truth_table::from_function( n, []( input_t x ) { return x != 0u; } );
}

truth_table and_n( unsigned n )
{
  return truth_table::from_function( n, [n]( input_t x ) { return x == all_ones( n ); } );
}

truth_table xor_n( unsigned n )
{
  return truth_table::from_function( n, []( input_t x ) { return std::popcount( x ) & 1; } );
}

truth_table majority( unsigned n )
{
  return truth_table::from_function( n, [n]( input_t x ) { return 2u * hamming_weight( x ) > n; } );
}

} // namespace functions

} // namespace sensbench
