#pragma once

#include <sensbench/dnf.hpp>
#include <sensbench/measures.hpp>
#include <sensbench/truth_table.hpp>

#include <optional>
#include <vector>

namespace sensbench
{

/*! \brief Result of checking the compact-form conditions.

  (a) f(0^n) = 0; (b) bs0(f) is attained at 0^n; (c) every term has a
  private satisfying assignment, i.e. one that falsifies all other terms.
  `normalized` additionally requires bs(f) = bs(f, 0^n). Attainment at 0^n
  is enough for (b); other inputs may tie.
*/
struct compact_form_report
{
  bool cond_a = false;
  bool cond_b = false;
  bool cond_c = false;
  bool normalized = false;

  unsigned bs_at_zero = 0u;
  unsigned bs0 = 0u;
  unsigned bs = 0u;

  /* evidence for (c): one private assignment per term, nullopt if covered */
  std::vector<std::optional<input_t>> private_assignments;

  bool compact() const { return cond_a && cond_b && cond_c; }
};

/*! \brief An input satisfying term i and no other term.

  Fixes term i's literals and backtracks over the remaining variables,
  branching on the literals of the first term that is not yet falsified.
  Unconstrained variables are left at 0.
*/
std::optional<input_t> private_assignment( const dnf& d, std::size_t i );

compact_form_report check_compact_form( const dnf& d, const caps& limits = {} );

struct normalization_result
{
  input_t shift = 0u;
  bool polarity = false;
  truth_table function;
  dnf formula;
  compact_form_report report;
};

/*! \brief Moves the maximal block sensitivity of f to 0^n.

  With a the lowest input attaining bs(f), builds f'(x) = f(a) xor f(x xor a)
  and an irredundant prime cover of f'. The result satisfies all compact-form
  conditions and is normalized; s and bs are unchanged.
*/
normalization_result normalize( const truth_table& f, const caps& limits = {} );

/*! \brief Irredundant cover of f by prime implicants.

  Primes come from expanding each uncovered minterm (ascending) by dropping
  literals in variable order; afterwards terms whose points are all covered
  by other terms are removed, last term first.
*/
dnf irredundant_prime_cover( const truth_table& f, const caps& limits = {} );

/*! \brief Removes terms whose satisfying set is covered by the other terms.

  Scans from the last term to the first and keeps the order of the rest.
*/
dnf drop_redundant_terms( const dnf& d, const caps& limits = {} );

} // namespace sensbench
