#pragma once

#include <sensbench/truth_table.hpp>
#include <sensbench/types.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace sensbench
{

struct block_witness
{
  input_t input = 0u;
  block_family blocks;

  bool operator==( const block_witness& ) const = default;
};

/*! \brief Sensitivity and block-sensitivity values with witnesses.

  The maximum over an empty side (e.g. s1 of the constant-0 function) is
  reported as 0 with the corresponding `has_*_input` flag cleared and no
  witness. Ties are broken by the lowest input index, then by the
  lexicographically smallest block family.
*/
struct measure_report
{
  unsigned arity = 0u;
  bool has_zero_input = false;
  bool has_one_input = false;

  bool has_sensitivity = false;
  unsigned s = 0u, s0 = 0u, s1 = 0u;
  std::optional<input_t> witness_s, witness_s0, witness_s1;

  bool has_block_sensitivity = false;
  unsigned bs = 0u, bs0 = 0u, bs1 = 0u;
  std::optional<block_witness> witness_bs, witness_bs0, witness_bs1;

  bool operator==( const measure_report& ) const = default;
};

struct block_sensitivity_result
{
  unsigned count = 0u;
  block_family blocks;
};

/*! \brief s(f, x): number of coordinates whose flip changes f at x. */
unsigned sensitivity_at( const truth_table& f, input_t x );

/*! \brief Coordinates i with f(x) != f(x^i). */
var_set sensitive_coordinates( const truth_table& f, input_t x );

/*! \brief s(f, x) for every row, computed with bit-sliced counters. */
std::vector<std::uint8_t> sensitivity_profile( const truth_table& f, const caps& limits = {} );

measure_report sensitivity_report( const truth_table& f, const caps& limits = {} );

/*! \brief Minimal sensitive blocks at x.

  A block B is sensitive when f(x) != f(x^B) and minimal when no proper
  subset is sensitive. Returned in lexicographic order.
*/
std::vector<var_set> minimal_sensitive_blocks( const truth_table& f, input_t x, const caps& limits = {} );

/*! \brief bs(f, x) with one optimal block family.

  Exact: maximum disjoint packing of the minimal sensitive blocks, searched
  with memoization over the mask of remaining coordinates. When
  `max_block_size` is non-zero only blocks up to that size are used, which
  gives bs_l(f, x).
*/
block_sensitivity_result block_sensitivity_at( const truth_table& f, input_t x, const caps& limits = {},
                                               unsigned max_block_size = 0u );

/*! \brief bs, bs0, bs1 over all inputs with witnesses. */
measure_report block_sensitivity_report( const truth_table& f, const caps& limits = {} );

/*! \brief Both sensitivity and block-sensitivity fields. */
measure_report measure( const truth_table& f, const caps& limits = {} );

/*! \brief bs_l(f): block sensitivity with blocks of size at most `ell`. */
unsigned bs_capped( const truth_table& f, unsigned ell, const caps& limits = {} );

/*! \brief bs(f, x, B_1..B_k): number of given blocks whose flip changes f(x). */
unsigned block_sensitivity_for( const truth_table& f, input_t x, const block_family& blocks );

truth_table xor_tt( const truth_table& f, const truth_table& g );

/*! \brief f(x) <= f(y) whenever x <= y coordinatewise. */
bool is_monotone( const truth_table& f, const caps& limits = {} );

/*! \brief Variables f depends on. */
var_set relevant_variables( const truth_table& f );

} // namespace sensbench
