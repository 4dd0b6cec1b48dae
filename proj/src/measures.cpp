#include <sensbench/error.hpp>
#include <sensbench/measures.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

namespace sensbench
{

namespace
{

/* positions p in a word whose bit b is clear */
constexpr std::array<std::uint64_t, 6> low_masks = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };

/* exchanges the bits at positions p and p ^ 2^b */
inline std::uint64_t swap_within( std::uint64_t w, unsigned b )
{
  const auto s = 1u << b;
  const auto m = low_masks[b];
  return ( ( w >> s ) & m ) | ( ( w & m ) << s );
}

/*! Sensitive-block table and packing search for one function.

  `load(x)` builds, bit-parallel over all 2^n subsets B, the table of
  sensitive blocks f(x^B) != f(x), closes it upwards, and keeps the minimal
  elements. `solve()` then finds a maximum disjoint packing.
*/
class packing_engine
{
public:
  explicit packing_engine( const truth_table& f )
      : f_( f ), n_( f.arity() ), num_words_( f.words().size() ),
        sens_( num_words_ ), up_( num_words_ ), strict_( num_words_ ), by_low_( std::max( n_, 1u ) )
  {
    if ( n_ <= dense_memo_limit )
    {
      stamp_.assign( std::size_t{ 1 } << n_, 0u );
      value_.assign( std::size_t{ 1 } << n_, 0u );
    }
  }

  void load( input_t x, unsigned max_size )
  {
    const auto fx = f_[x];
    const auto mask = f_.word_mask();
    const auto high = n_ > 6u ? static_cast<std::size_t>( x >> 6 ) : 0u;
    const auto low = x & 63u;
    const auto in_word = std::min( n_, 6u );
    const auto words = f_.words();

    for ( std::size_t j = 0; j < num_words_; ++j )
    {
      auto w = words[j ^ high];
      for ( auto b = 0u; b < in_word; ++b )
      {
        if ( ( low >> b ) & 1u )
        {
          w = swap_within( w, b );
        }
      }
      sens_[j] = ( fx ? ~w : w ) & mask;
    }

    up_ = sens_;
    std::fill( strict_.begin(), strict_.end(), 0u );
    for ( auto b = 0u; b < n_; ++b )
    {
      shift_up( up_, up_, b );
    }
    for ( auto b = 0u; b < n_; ++b )
    {
      shift_up( up_, strict_, b );
    }

    for ( auto& bucket : by_low_ )
    {
      bucket.clear();
    }
    num_blocks_ = 0u;
    relevant_ = 0u;
    min_size_ = n_ + 1u;
    for ( std::size_t j = 0; j < num_words_; ++j )
    {
      auto minimal = sens_[j] & ~strict_[j];
      while ( minimal )
      {
        const auto p = static_cast<unsigned>( std::countr_zero( minimal ) );
        minimal &= minimal - 1u;
        const auto block = ( static_cast<std::uint64_t>( j ) << 6 ) | p;
        const auto size = static_cast<unsigned>( std::popcount( block ) );
        if ( max_size != 0u && size > max_size )
        {
          continue;
        }
        by_low_[std::countr_zero( block )].push_back( block );
        relevant_ |= block;
        min_size_ = std::min( min_size_, size );
        ++num_blocks_;
      }
    }
    for ( auto& bucket : by_low_ )
    {
      std::sort( bucket.begin(), bucket.end(),
                 []( std::uint64_t a, std::uint64_t b ) { return lex_less( var_set( a ), var_set( b ) ); } );
    }
  }

  /* cheap bound on the packing size */
  unsigned upper_bound() const
  {
    if ( num_blocks_ == 0u )
    {
      return 0u;
    }
    return std::min<unsigned>( num_blocks_, static_cast<unsigned>( std::popcount( relevant_ ) ) / min_size_ );
  }

  std::vector<var_set> blocks() const
  {
    std::vector<var_set> out;
    for ( const auto& bucket : by_low_ )
    {
      for ( auto b : bucket )
      {
        out.emplace_back( b );
      }
    }
    std::sort( out.begin(), out.end(), []( var_set a, var_set b ) { return lex_less( a, b ); } );
    return out;
  }

  unsigned solve()
  {
    next_generation();
    return best( relevant_ );
  }

  /* lexicographically smallest optimal family; call after solve() */
  block_family family()
  {
    std::vector<var_set> chosen;
    auto mask = relevant_;
    while ( mask )
    {
      const auto e = std::countr_zero( mask );
      const auto target = best( mask );
      bool used = false;
      for ( auto b : by_low_[e] )
      {
        if ( ( b & ~mask ) == 0u && 1u + best( mask & ~b ) == target )
        {
          chosen.emplace_back( b );
          mask &= ~b;
          used = true;
          break;
        }
      }
      if ( !used )
      {
        mask &= mask - 1u;
      }
    }
    return block_family( std::move( chosen ), n_ );
  }

private:
  static constexpr unsigned dense_memo_limit = 22u;

  /* dst[B | b] |= src[B] for every B without b */
  void shift_up( const std::vector<std::uint64_t>& src, std::vector<std::uint64_t>& dst, unsigned b ) const
  {
    if ( b < 6u )
    {
      const auto s = 1u << b;
      for ( std::size_t j = 0; j < num_words_; ++j )
      {
        dst[j] |= ( src[j] & low_masks[b] ) << s;
      }
    }
    else
    {
      const auto stride = std::size_t{ 1 } << ( b - 6u );
      for ( std::size_t j = 0; j < num_words_; ++j )
      {
        if ( !( j & stride ) )
        {
          dst[j | stride] |= src[j];
        }
      }
    }
  }

  void next_generation()
  {
    if ( !stamp_.empty() )
    {
      if ( ++generation_ == 0u )
      {
        std::fill( stamp_.begin(), stamp_.end(), 0u );
        generation_ = 1u;
      }
    }
    else
    {
      sparse_memo_.clear();
    }
  }

  unsigned best( std::uint64_t mask )
  {
    if ( mask == 0u )
    {
      return 0u;
    }
    if ( !stamp_.empty() )
    {
      if ( stamp_[mask] == generation_ )
      {
        return value_[mask];
      }
    }
    else if ( auto it = sparse_memo_.find( mask ); it != sparse_memo_.end() )
    {
      return it->second;
    }

    const auto e = std::countr_zero( mask );
    auto result = best( mask & ( mask - 1u ) );
    for ( auto b : by_low_[e] )
    {
      if ( ( b & ~mask ) == 0u )
      {
        result = std::max( result, 1u + best( mask & ~b ) );
      }
    }

    if ( !stamp_.empty() )
    {
      stamp_[mask] = generation_;
      value_[mask] = static_cast<std::uint8_t>( result );
    }
    else
    {
      sparse_memo_.emplace( mask, result );
    }
    return result;
  }

  const truth_table& f_;
  unsigned n_;
  std::size_t num_words_;
  std::vector<std::uint64_t> sens_, up_, strict_;
  std::vector<std::vector<std::uint64_t>> by_low_;
  unsigned num_blocks_ = 0u;
  std::uint64_t relevant_ = 0u;
  unsigned min_size_ = 1u;

  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint8_t> value_;
  std::uint32_t generation_ = 0u;
  std::unordered_map<std::uint64_t, unsigned> sparse_memo_;
};

struct side_best
{
  bool seen = false;
  unsigned value = 0u;
  block_witness witness;
};

} // namespace

unsigned sensitivity_at( const truth_table& f, input_t x )
{
  return sensitive_coordinates( f, x ).size();
}

var_set sensitive_coordinates( const truth_table& f, input_t x )
{
  var_set out;
  const auto fx = f[x];
  for ( auto i = 1u; i <= f.arity(); ++i )
  {
    if ( f[flip( x, i )] != fx )
    {
      out.insert( i );
    }
  }
  return out;
}

std::vector<std::uint8_t> sensitivity_profile( const truth_table& f, const caps& limits )
{
  require_enumerable( f.arity(), limits, "sensitivity" );
  const auto n = f.arity();
  const auto words = f.words();
  const auto num_words = words.size();
  const auto planes = static_cast<unsigned>( std::bit_width( n ) );
  const auto mask = f.word_mask();

  // counter[k * num_words + j] holds bit k of the per-row count for rows of word j
  std::vector<std::uint64_t> counter( std::max( planes, 1u ) * num_words, 0u );
  for ( auto b = 0u; b < n; ++b )
  {
    for ( std::size_t j = 0; j < num_words; ++j )
    {
      const auto other = b < 6u ? swap_within( words[j], b ) : words[j ^ ( std::size_t{ 1 } << ( b - 6u ) )];
      auto carry = ( words[j] ^ other ) & mask;
      for ( auto k = 0u; k < planes && carry; ++k )
      {
        auto& c = counter[k * num_words + j];
        const auto t = c & carry;
        c ^= carry;
        carry = t;
      }
    }
  }

  std::vector<std::uint8_t> profile( f.num_rows(), 0u );
  const auto rows_per_word = std::min<std::uint64_t>( 64u, f.num_rows() );
  for ( std::size_t j = 0; j < num_words; ++j )
  {
    for ( auto k = 0u; k < planes; ++k )
    {
      auto c = counter[k * num_words + j];
      while ( c )
      {
        const auto p = static_cast<unsigned>( std::countr_zero( c ) );
        c &= c - 1u;
        if ( p < rows_per_word )
        {
          profile[( j << 6 ) + p] = static_cast<std::uint8_t>( profile[( j << 6 ) + p] + ( 1u << k ) );
        }
      }
    }
  }
  return profile;
}

measure_report sensitivity_report( const truth_table& f, const caps& limits )
{
  const auto profile = sensitivity_profile( f, limits );
  measure_report r;
  r.arity = f.arity();
  r.has_sensitivity = true;
  for ( input_t x = 0u; x < f.num_rows(); ++x )
  {
    const unsigned v = profile[x];
    if ( f[x] )
    {
      if ( !r.has_one_input || v > r.s1 )
      {
        r.s1 = v;
        r.witness_s1 = x;
      }
      r.has_one_input = true;
    }
    else
    {
      if ( !r.has_zero_input || v > r.s0 )
      {
        r.s0 = v;
        r.witness_s0 = x;
      }
      r.has_zero_input = true;
    }
  }
  // lowest index among the two side witnesses when the maxima tie
  if ( r.has_zero_input && ( !r.has_one_input || r.s0 > r.s1 || ( r.s0 == r.s1 && *r.witness_s0 < *r.witness_s1 ) ) )
  {
    r.s = r.s0;
    r.witness_s = r.witness_s0;
  }
  else
  {
    r.s = r.s1;
    r.witness_s = r.witness_s1;
  }
  return r;
}

std::vector<var_set> minimal_sensitive_blocks( const truth_table& f, input_t x, const caps& limits )
{
  require_enumerable( f.arity(), limits, "minimal sensitive blocks" );
  packing_engine engine( f );
  engine.load( x, 0u );
  return engine.blocks();
}

block_sensitivity_result block_sensitivity_at( const truth_table& f, input_t x, const caps& limits,
                                               unsigned max_block_size )
{
  require_enumerable( f.arity(), limits, "block sensitivity" );
  if ( x >= f.num_rows() )
  {
    throw error( error_kind::usage, "input " + std::to_string( x ) + " out of range for arity " + std::to_string( f.arity() ) );
  }
  packing_engine engine( f );
  engine.load( x, max_block_size );
  block_sensitivity_result r;
  r.count = engine.solve();
  r.blocks = engine.family();
  return r;
}

namespace
{

void fill_block_report( const truth_table& f, unsigned max_block_size, measure_report& r )
{
  packing_engine engine( f );
  side_best sides[2];
  for ( input_t x = 0u; x < f.num_rows(); ++x )
  {
    auto& side = sides[f[x] ? 1 : 0];
    engine.load( x, max_block_size );
    if ( side.seen && engine.upper_bound() <= side.value )
    {
      continue;
    }
    const auto v = engine.solve();
    if ( !side.seen || v > side.value )
    {
      side.seen = true;
      side.value = v;
      side.witness = { x, engine.family() };
    }
  }
  r.has_block_sensitivity = true;
  r.has_zero_input = sides[0].seen;
  r.has_one_input = sides[1].seen;
  r.bs0 = sides[0].value;
  r.bs1 = sides[1].value;
  if ( sides[0].seen )
  {
    r.witness_bs0 = sides[0].witness;
  }
  if ( sides[1].seen )
  {
    r.witness_bs1 = sides[1].witness;
  }
  const bool zero_wins = sides[0].seen && ( !sides[1].seen || sides[0].value > sides[1].value ||
                                            ( sides[0].value == sides[1].value &&
                                              sides[0].witness.input < sides[1].witness.input ) );
  r.bs = zero_wins ? r.bs0 : r.bs1;
  r.witness_bs = zero_wins ? r.witness_bs0 : r.witness_bs1;
}

} // namespace

measure_report block_sensitivity_report( const truth_table& f, const caps& limits )
{
  require_bs_enumerable( f.arity(), limits, "block sensitivity report" );
  measure_report r;
  r.arity = f.arity();
  fill_block_report( f, 0u, r );
  return r;
}

measure_report measure( const truth_table& f, const caps& limits )
{
  auto r = sensitivity_report( f, limits );
  require_bs_enumerable( f.arity(), limits, "block sensitivity report" );
  fill_block_report( f, 0u, r );
  return r;
}

unsigned bs_capped( const truth_table& f, unsigned ell, const caps& limits )
{
  if ( ell < 1u || ell > std::max( f.arity(), 1u ) )
  {
    throw error( error_kind::usage, "block size cap " + std::to_string( ell ) + " outside 1.." + std::to_string( f.arity() ) );
  }
  require_bs_enumerable( f.arity(), limits, "capped block sensitivity" );
  measure_report r;
  fill_block_report( f, ell, r );
  return r.bs;
}

unsigned block_sensitivity_for( const truth_table& f, input_t x, const block_family& blocks )
{
  unsigned count = 0u;
  for ( const auto& b : blocks )
  {
    if ( f[flip( x, b )] != f[x] )
    {
      ++count;
    }
  }
  return count;
}

truth_table xor_tt( const truth_table& f, const truth_table& g )
{
  return f ^ g;
}

bool is_monotone( const truth_table& f, const caps& limits )
{
  require_enumerable( f.arity(), limits, "monotonicity check" );
  const auto words = f.words();
  for ( auto b = 0u; b < f.arity(); ++b )
  {
    if ( b < 6u )
    {
      const auto s = 1u << b;
      for ( auto w : words )
      {
        // a 1 at p (bit b clear) above a 0 at p + 2^b
        if ( ( w & low_masks[b] ) & ~( ( w >> s ) & low_masks[b] ) )
        {
          return false;
        }
      }
    }
    else
    {
      const auto stride = std::size_t{ 1 } << ( b - 6u );
      for ( std::size_t j = 0; j < words.size(); ++j )
      {
        if ( !( j & stride ) && ( words[j] & ~words[j | stride] ) )
        {
          return false;
        }
      }
    }
  }
  return true;
}

var_set relevant_variables( const truth_table& f )
{
  var_set out;
  const auto words = f.words();
  for ( auto b = 0u; b < f.arity(); ++b )
  {
    for ( std::size_t j = 0; j < words.size(); ++j )
    {
      const auto other = b < 6u ? swap_within( words[j], b ) : words[j ^ ( std::size_t{ 1 } << ( b - 6u ) )];
      if ( words[j] != other )
      {
        out.insert( b + 1u );
        break;
      }
    }
  }
  return out;
}

} // namespace sensbench
