#pragma once

#include <sensbench/dnf.hpp>
#include <sensbench/measures.hpp>
#include <sensbench/truth_table.hpp>
#include <sensbench/types.hpp>

#include <optional>
#include <string>

namespace sensbench
{

/*! \brief Report of f = OR of m variable-disjoint copies of g.

  s1 and bs1 carry over from g, s0 and bs0 scale by m, s = max(s1, m s0)
  and bs = max(m bs0, bs1). Witnesses are composed copy by copy when the
  composed arity fits in 64 variables; they need not be the lowest-index
  ones. Needs m >= 1 and, for m > 1, a g that is not constant 1.
*/
measure_report disjoint_or_compose( const measure_report& g, unsigned m );

/*! \brief OR of m copies of d; copy c uses variables c*n+1 .. (c+1)*n. */
dnf explicit_or_expand( const dnf& d, unsigned m, const caps& limits = {} );

struct family_instance
{
  std::string name;
  unsigned n = 0u;
  dnf g;
  unsigned copies = 0u;
  measure_report inner;     // brute force on g
  measure_report predicted; // composed
  unsigned expected_s = 0u; // closed forms in s for the family
  unsigned expected_bs = 0u;
  std::optional<dnf> expanded;
};

/* expand: also build the explicit OR of all copies (within the expansion cap) */
family_instance rubinstein( unsigned n, bool expand = false, const caps& limits = {} );
family_instance virza( unsigned n, bool expand = false, const caps& limits = {} );
family_instance ambainis_sun( unsigned n, bool expand = false, const caps& limits = {} );

dnf rubinstein_inner( unsigned n );
dnf virza_inner( unsigned n );
dnf ambainis_sun_inner( unsigned n );

/*! \brief Terms A_i = {x_2i} for i in [n], and A_{n+1} = odd variables with
  the even variables negated; 2n+1 variables, s0 = s1 = n+1.
*/
dnf onesbound_tight( unsigned n );

struct proposition_pair_result
{
  unsigned p = 0u, q = 0u;
  truth_table f, g;
  input_t a = 0u;
  unsigned s_f = 0u, s_g = 0u;
  unsigned radius = 0u; // agreement radius around a xor 1^n
};

/*! \brief Two functions of sensitivity p and q that agree on a ball of
  radius p+q-1 and differ at its boundary. Checked by brute force.
*/
proposition_pair_result proposition_pair( unsigned p, unsigned q, const caps& limits = {} );

} // namespace sensbench
