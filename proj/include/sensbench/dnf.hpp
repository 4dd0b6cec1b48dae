#pragma once

#include <sensbench/truth_table.hpp>
#include <sensbench/types.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace sensbench
{

/*! \brief Conjunction of literals: variables in `pos` must be 1, those in `neg` 0. */
struct term
{
  var_set pos;
  var_set neg;

  var_set vars() const { return pos | neg; }
  unsigned width() const { return pos.size() + neg.size(); }
  bool satisfied_by( input_t x ) const { return ( x & pos.mask() ) == pos.mask() && ( x & neg.mask() ) == 0u; }

  /* |pos_i & neg_j| + |pos_j & neg_i| */
  unsigned conflicts_with( const term& other ) const { return ( pos & other.neg ).size() + ( other.pos & neg ).size(); }

  bool operator==( const term& ) const = default;
};

/*! \brief OR of terms over x_1..x_n.

  No term contains a variable and its negation. The formula without terms is
  the constant-0 function.
*/
class dnf
{
public:
  dnf() = default;
  explicit dnf( unsigned arity );
  dnf( unsigned arity, std::vector<term> terms );

  unsigned arity() const { return arity_; }
  const std::vector<term>& terms() const { return terms_; }
  const term& operator[]( std::size_t i ) const { return terms_[i]; }

  /* d_or: number of terms */
  unsigned size() const { return static_cast<unsigned>( terms_.size() ); }
  /* d_and: largest term width */
  unsigned width() const;

  void add_term( term t );

  bool operator()( input_t x ) const;

  bool operator==( const dnf& ) const = default;

private:
  void check_term( const term& t ) const;

  unsigned arity_ = 0u;
  std::vector<term> terms_;
};

bool eval_dnf( const dnf& d, input_t x );

truth_table to_truth_table( const dnf& d, const caps& limits = {} );

/*! \brief s(f, x) by n direct neighbor evaluations; works for any arity. */
unsigned sensitivity_at( const dnf& d, input_t x );
var_set sensitive_coordinates( const dnf& d, input_t x );

/*! \brief No negative literals anywhere, hence a monotone function. */
bool is_syntactically_monotone( const dnf& d );

std::string to_string( const term& t );

/*! \brief File format: "dnf <arity>" then one term per line as signed
  1-based indices ("+3 +4 -1"). A term without literals is written "*".
*/
std::string write_dnf( const dnf& d );
dnf read_dnf( std::string_view text );

} // namespace sensbench
