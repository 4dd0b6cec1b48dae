#pragma once

#include <sensbench/types.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sensbench
{

/* Tables are materialized; beyond this the storage alone is impractical. */
inline constexpr unsigned max_table_arity = 30u;

/*! \brief Explicit function {0,1}^n -> {0,1} stored as 2^n packed bits.

  Row k holds f(x) for the input whose bit i-1 is x_i. Tables with fewer
  than 64 rows use a single word whose unused high bits are always zero.
*/
class truth_table
{
public:
  truth_table() : truth_table( 0u ) {}
  explicit truth_table( unsigned arity );

  template<typename Fn>
  static truth_table from_function( unsigned arity, Fn&& fn )
  {
    truth_table tt( arity );
    for ( input_t x = 0u; x < tt.num_rows(); ++x )
    {
      if ( fn( x ) )
      {
        tt.set( x, true );
      }
    }
    return tt;
  }

  static truth_table constant( unsigned arity, bool value );

  unsigned arity() const { return arity_; }
  std::uint64_t num_rows() const { return std::uint64_t{ 1 } << arity_; }

  bool get( input_t x ) const { return ( words_[x >> 6] >> ( x & 63u ) ) & 1u; }
  bool operator[]( input_t x ) const { return get( x ); }
  void set( input_t x, bool value )
  {
    const auto m = std::uint64_t{ 1 } << ( x & 63u );
    if ( value )
    {
      words_[x >> 6] |= m;
    }
    else
    {
      words_[x >> 6] &= ~m;
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::uint64_t count_ones() const;
  bool is_constant() const;

  truth_table operator~() const;
  truth_table operator^( const truth_table& other ) const;
  truth_table operator&( const truth_table& other ) const;
  truth_table operator|( const truth_table& other ) const;
  bool operator==( const truth_table& ) const = default;

  /* mask of the valid bits in each word */
  std::uint64_t word_mask() const { return arity_ >= 6u ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << ( 1u << arity_ ) ) - 1u; }

private:
  void check_same_arity( const truth_table& other ) const;

  unsigned arity_;
  std::vector<std::uint64_t> words_;
};

/*! \brief x -> f(x xor a). */
truth_table shift_inputs( const truth_table& f, input_t a );

/*! \brief f with dummy variables appended up to `arity`. */
truth_table pad_variables( const truth_table& f, unsigned arity );

/*! \brief Hex digits of the table, least-significant digit first. */
std::string to_hex( const truth_table& f );
truth_table from_hex( unsigned arity, std::string_view hex );

/*! \brief "tt <arity>" header followed by the hex line. */
std::string write_truth_table( const truth_table& f );
truth_table read_truth_table( std::string_view text );

namespace functions
{

truth_table or_n( unsigned n );
truth_table and_n( unsigned n );
truth_table xor_n( unsigned n );
truth_table majority( unsigned n );

} // namespace functions

} // namespace sensbench
