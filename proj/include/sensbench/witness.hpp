#pragma once

#include <sensbench/dnf.hpp>
#include <sensbench/truth_table.hpp>
#include <sensbench/types.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace sensbench
{

enum class witness_procedure
{
  block_greedy,
  onesbound,
  t_block,
  mixing_components,
  monotone_echo,
  exhaustive
};

const char* to_string( witness_procedure p );

/*! \brief Conflict graph over the terms of a DNF.

  Directed edge i -> j iff some variable is negative in term i and positive
  in term j. `neighbors` is the undirected shadow without multi-edges.
*/
struct gate_graph
{
  explicit gate_graph( const dnf& d );

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> neighbors;
};

struct gate_selection
{
  std::vector<std::size_t> gates; // 0-based term indices, in selection order
  unsigned bound = 0u;            // size guaranteed by the counting argument
};

/*! \brief ceil(a / b) for b > 0. */
constexpr unsigned ceil_div( unsigned a, unsigned b ) { return ( a + b - 1u ) / b; }

/*! \brief Greedy conflict-free term selection.

  Repeatedly takes a vertex of smallest degree in the remaining undirected
  graph (lowest index on ties) and deletes it with all its in- and
  out-neighbors. With t > 1, terms whose positive part meets the chosen
  one are deleted as well. The result has
  |E| >= ceil(d_or / (2 d_and - 1)) for t = 1 and
  |E| >= ceil(d_or / (3 t d_and - 2t - d_and + 1)) in general.
*/
gate_selection greedy_independent_gates( const dnf& d, unsigned t = 1u );

/*! \brief Lower bound ceil(d_or / (3 t d_and - 2t - d_and + 1)); 0 for an empty formula. */
unsigned greedy_bound( unsigned size, unsigned width, unsigned t );

struct witness_result
{
  input_t input = 0u;
  bool value = false;             // f(input): false means the input is 0-sensitive
  unsigned guaranteed_bound = 0u; // bound the construction proves for this instance
  unsigned lemma_bound = 0u;      // the closed-form bound in d_or, d_and (and t)
  unsigned measured = 0u;         // s(f, input), by neighbor evaluation
  witness_procedure procedure = witness_procedure::block_greedy;
  std::vector<std::size_t> gates;
};

/*! \brief 0-input of sensitivity >= |E| for a block-property DNF.

  Sets, for every selected term, all but its largest positive variable.
*/
witness_result zero_witness_block( const dnf& d );

/*! \brief Input of sensitivity >= ceil(d_and / 2) for a block-property DNF.

  Takes the widest term's positive part a; returns a itself when it is
  sensitive enough, otherwise a with its smallest positive variable cleared.
*/
witness_result witness_onesbound( const dnf& d );

/*! \brief 0-input of sensitivity >= |E| for a t-block DNF, by saturating
  the union of the selected positive parts from 0^n upward while f stays 0.
*/
witness_result zero_witness_tblock( const dnf& d, unsigned t );

/*! \brief 0-input built component by component for a block, transitive,
  2-mixing DNF; guarantees sum I(l_i) with I(2) = 2 and I(l) = 1 otherwise.
*/
witness_result witness_2mixing_components( const dnf& d );

struct sensitivity_problem_result
{
  input_t y = 0u;
  unsigned sensitivity = 0u;
  unsigned block_count = 0u; // bs(f, x, B_1..B_k)
  double constant = 0.0;
  witness_procedure procedure = witness_procedure::exhaustive;
  bool warning = false;      // fell back to exhaustive search
};

/*! \brief Finds y with s(f, y) >= sqrt(bs(f, x, blocks) / c).

  Monotone functions (c >= 1) return x when x itself is sensitive enough;
  s(f, x) can be below bs(f, x) even for monotone f (OR_2 at 11), in which
  case the later dispatches run. Block-property DNFs with f(0^n) = 0
  and c >= 4 return the better of zero_witness_block and witness_onesbound.
  Everything else is searched exhaustively within the n-max cap. The answer
  is re-checked before it is returned.
*/
sensitivity_problem_result solve_sensitivity_problem( const dnf& d, input_t x, const block_family& blocks, double c,
                                                      const caps& limits = {} );
sensitivity_problem_result solve_sensitivity_problem( const truth_table& f, input_t x, const block_family& blocks,
                                                      double c, const caps& limits = {} );

} // namespace sensbench
