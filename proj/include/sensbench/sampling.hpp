#pragma once

#include <sensbench/dnf.hpp>
#include <sensbench/truth_table.hpp>
#include <sensbench/types.hpp>

#include <optional>
#include <random>

namespace sensbench
{

using rng_t = std::mt19937_64;

/* inclusive bounds */
unsigned uniform( rng_t& rng, unsigned lo, unsigned hi );
bool coin( rng_t& rng, double p );

truth_table random_function( rng_t& rng, unsigned n, double density = 0.5 );

/*! \brief Function of a random decision tree of depth <= depth, so s <= depth. */
truth_table random_decision_tree( rng_t& rng, unsigned n, unsigned depth );

/*! \brief Upward closure of a few random points. */
truth_table random_monotone_function( rng_t& rng, unsigned n );

/*! \brief Mix of dense, biased, and low-sensitivity functions on n variables. */
truth_table random_mixed_function( rng_t& rng, unsigned n );

/*! \brief Block-property DNF: disjoint positive parts of size 1..3, random negatives. */
dnf random_block_dnf( rng_t& rng, unsigned min_arity, unsigned max_arity );

/*! \brief Every variable positive in at most t terms. */
dnf random_t_block_dnf( rng_t& rng, unsigned min_arity, unsigned max_arity, unsigned t );

/*! \brief Unrestricted DNF with non-empty positive parts. */
dnf random_dnf( rng_t& rng, unsigned min_arity, unsigned max_arity );

/*! \brief Terms that share a variable conflict on at least ell variables. */
dnf random_mixing_dnf( rng_t& rng, unsigned min_arity, unsigned max_arity, unsigned ell );

/*! \brief Block, transitive and 2-mixing: groups of terms on disjoint
  variables, each group a clique of pairwise conflicts >= 2.
*/
dnf random_transitive_mixing_dnf( rng_t& rng, unsigned min_arity, unsigned max_arity );

/*! \brief s0 = 1 function: union of subcubes at pairwise distance >= 3,
  shifted so that f(0^n) = 0 and bs0 is attained at 0^n.
*/
truth_table random_s0_one_function( rng_t& rng, unsigned n, const caps& limits = {} );

/*! \brief Drops redundant terms; returns the result when it is in compact form. */
std::optional<dnf> compact_repair( const dnf& d, const caps& limits = {} );

} // namespace sensbench
