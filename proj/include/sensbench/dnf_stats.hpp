#pragma once

#include <sensbench/compact_form.hpp>
#include <sensbench/dnf.hpp>

#include <optional>
#include <vector>

namespace sensbench
{

/*! \brief Syntactic structure of a DNF.

  - gamma_per_term[i] counts terms j that conflict with term i on exactly
    one variable; gamma is the maximum.
  - t_min is the largest number of terms in which one variable appears
    positively (at least 1); the block property is t_min == 1.
  - mixing_max is the smallest conflict count over pairs of terms sharing
    a variable, or nullopt when no two terms share a variable (the mixing
    condition then holds for every l).
  - components groups terms under the "shares a variable" relation;
    transitive holds when every component is a clique.
*/
struct dnf_stats
{
  unsigned size = 0u;
  unsigned width = 0u;
  std::vector<unsigned> gamma_per_term;
  unsigned gamma = 0u;
  unsigned t_min = 1u;
  std::optional<unsigned> mixing_max;
  bool transitive = true;
  bool block = true;
  std::vector<std::vector<std::size_t>> components;

  bool has_mixing( unsigned ell ) const { return !mixing_max || *mixing_max >= ell; }
  bool has_t_block( unsigned t ) const { return t_min <= t; }
};

dnf_stats stats( const dnf& d );

/*! \brief Every term has a non-empty positive part, i.e. f(0^n) = 0. */
bool zero_is_false( const dnf& d );

/* Throw a property-violation error naming the offending terms/variable. */
void require_block_property( const dnf& d );
void require_t_block_property( const dnf& d, unsigned t );
void require_zero_is_false( const dnf& d );

/*! \brief Measured s1 against the bounds width - gamma <= s1 <= width.

  When the formula is 2-mixing (or no terms share a variable) gamma is 0
  and s1 must equal the width.
*/
struct bounds_check
{
  compact_form_report compact_form;
  bool checked = false;
  unsigned width = 0u;
  unsigned gamma = 0u;
  unsigned s1 = 0u;
  bool lower_ok = false;
  bool upper_ok = false;
  bool mixing_applies = false;
  bool mixing_ok = true;

  bool ok() const { return checked && lower_ok && upper_ok && mixing_ok; }
};

bounds_check bounds_report( const dnf& d, const truth_table& f, const caps& limits = {} );

} // namespace sensbench
