#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace sensbench
{

/*! \brief An assignment to the variables x_1..x_n.

  Variable i (1-based) is bit i-1. The same encoding is used for truth-table
  row indices, so a row index and an input are interchangeable.
*/
using input_t = std::uint64_t;

inline constexpr unsigned max_vars = 64u;

/*! \brief Set of 1-based variable indices, backed by a 64-bit mask. */
class var_set
{
public:
  class iterator
  {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = unsigned;
    using difference_type = std::ptrdiff_t;
    using pointer = const unsigned*;
    using reference = unsigned;

    constexpr iterator() = default;
    constexpr explicit iterator( std::uint64_t rest ) : rest_( rest ) {}

    constexpr unsigned operator*() const { return static_cast<unsigned>( std::countr_zero( rest_ ) ) + 1u; }
    constexpr iterator& operator++()
    {
      rest_ &= rest_ - 1u;
      return *this;
    }
    constexpr iterator operator++( int )
    {
      auto copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==( const iterator& ) const = default;

  private:
    std::uint64_t rest_ = 0u;
  };

  constexpr var_set() = default;
  constexpr explicit var_set( std::uint64_t mask ) : mask_( mask ) {}
  constexpr var_set( std::initializer_list<unsigned> vars )
  {
    for ( auto v : vars )
    {
      insert( v );
    }
  }

  /*! \brief All variables first..last (inclusive, 1-based). Empty if first > last. */
  static constexpr var_set range( unsigned first, unsigned last )
  {
    var_set s;
    for ( auto v = first; v <= last; ++v )
    {
      s.insert( v );
    }
    return s;
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool contains( unsigned var ) const { return ( mask_ >> ( var - 1u ) ) & 1u; }
  constexpr void insert( unsigned var ) { mask_ |= std::uint64_t{ 1 } << ( var - 1u ); }
  constexpr void erase( unsigned var ) { mask_ &= ~( std::uint64_t{ 1 } << ( var - 1u ) ); }
  constexpr unsigned size() const { return static_cast<unsigned>( std::popcount( mask_ ) ); }
  constexpr bool empty() const { return mask_ == 0u; }
  constexpr bool intersects( var_set other ) const { return ( mask_ & other.mask_ ) != 0u; }
  constexpr bool subset_of( var_set other ) const { return ( mask_ & ~other.mask_ ) == 0u; }

  /* smallest / largest member; the set must be non-empty */
  constexpr unsigned min() const { return static_cast<unsigned>( std::countr_zero( mask_ ) ) + 1u; }
  constexpr unsigned max() const { return 64u - static_cast<unsigned>( std::countl_zero( mask_ ) ); }

  constexpr iterator begin() const { return iterator{ mask_ }; }
  constexpr iterator end() const { return iterator{}; }

  std::vector<unsigned> to_vector() const { return { begin(), end() }; }

  constexpr var_set operator|( var_set o ) const { return var_set( mask_ | o.mask_ ); }
  constexpr var_set operator&( var_set o ) const { return var_set( mask_ & o.mask_ ); }
  constexpr var_set operator^( var_set o ) const { return var_set( mask_ ^ o.mask_ ); }
  /* set difference */
  constexpr var_set operator-( var_set o ) const { return var_set( mask_ & ~o.mask_ ); }
  constexpr var_set& operator|=( var_set o )
  {
    mask_ |= o.mask_;
    return *this;
  }
  constexpr var_set& operator&=( var_set o )
  {
    mask_ &= o.mask_;
    return *this;
  }
  constexpr var_set& operator-=( var_set o )
  {
    mask_ &= ~o.mask_;
    return *this;
  }
  constexpr bool operator==( const var_set& ) const = default;

private:
  std::uint64_t mask_ = 0u;
};

/*! \brief Lexicographic order on the sorted index lists of two sets. */
constexpr bool lex_less( var_set a, var_set b )
{
  auto ia = a.begin(), ib = b.begin();
  for ( ; ia != a.end() && ib != b.end(); ++ia, ++ib )
  {
    if ( *ia != *ib )
    {
      return *ia < *ib;
    }
  }
  return ia == a.end() && ib != b.end();
}

/* x with every coordinate of `block` flipped */
constexpr input_t flip( input_t x, var_set block ) { return x ^ block.mask(); }
constexpr input_t flip( input_t x, unsigned var ) { return x ^ ( input_t{ 1 } << ( var - 1u ) ); }
constexpr bool bit( input_t x, unsigned var ) { return ( x >> ( var - 1u ) ) & 1u; }
constexpr unsigned hamming_weight( input_t x ) { return static_cast<unsigned>( std::popcount( x ) ); }
constexpr unsigned hamming_distance( input_t x, input_t y ) { return hamming_weight( x ^ y ); }
constexpr input_t all_ones( unsigned n ) { return n >= 64u ? ~input_t{ 0 } : ( input_t{ 1 } << n ) - 1u; }
constexpr input_t indicator( var_set s ) { return s.mask(); }

std::string to_string( var_set s );

/*! \brief Renders x as n characters, x_1 first ("001100" sets x_3, x_4). */
std::string to_bitstring( input_t x, unsigned n );

/*! \brief Inverse of to_bitstring; throws a parse error on bad length or characters. */
input_t parse_bitstring( std::string_view text, unsigned n );

/*! \brief Pairwise-disjoint, non-empty blocks over [n].

  The blocks are kept in lexicographic order, so two families with the same
  blocks compare equal.
*/
class block_family
{
public:
  block_family() = default;
  block_family( std::vector<var_set> blocks, unsigned arity );

  const std::vector<var_set>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  auto begin() const { return blocks_.begin(); }
  auto end() const { return blocks_.end(); }
  const var_set& operator[]( std::size_t i ) const { return blocks_[i]; }

  var_set support() const;

  bool operator==( const block_family& ) const = default;

private:
  std::vector<var_set> blocks_;
};

bool lex_less( const block_family& a, const block_family& b );

std::string to_string( const block_family& family );

/*! \brief Enumeration limits.

  `n_max` bounds every operation that walks all 2^n inputs; `bs_max` bounds
  exact block sensitivity over all inputs, which is the expensive one.
*/
struct caps
{
  unsigned n_max = 20u;
  unsigned bs_max = 14u;
  unsigned expand_max = 32u;
};

void require_enumerable( unsigned arity, const caps& limits, std::string_view what );
void require_bs_enumerable( unsigned arity, const caps& limits, std::string_view what );

} // namespace sensbench
