#pragma once

#include <sensbench/dnf.hpp>
#include <sensbench/truth_table.hpp>
#include <sensbench/types.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sensbench
{

/*! \brief Values of a function on a closed Hamming ball.

  The domain is exactly the ball: every input within `radius` of `center`
  appears once. Points are kept sorted by input index.
*/
class ball_values
{
public:
  ball_values() = default;
  ball_values( unsigned arity, input_t center, unsigned radius, std::vector<std::pair<input_t, bool>> values );

  static ball_values from_function( const truth_table& f, input_t center, unsigned radius );

  unsigned arity() const { return arity_; }
  input_t center() const { return center_; }
  unsigned radius() const { return radius_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<std::pair<input_t, bool>>& values() const { return values_; }

  /* nullopt outside the ball */
  std::optional<bool> value( input_t x ) const;

private:
  unsigned arity_ = 0u;
  input_t center_ = 0u;
  unsigned radius_ = 0u;
  std::vector<std::pair<input_t, bool>> values_;
};

/*! \brief Number of inputs within distance r of a point in {0,1}^n. */
std::uint64_t ball_size( unsigned n, unsigned r );

/*! \brief "ball <arity> <center> <radius>" then "<input> <bit>" per point. */
std::string write_ball( const ball_values& ball );
ball_values read_ball( std::string_view text );

/*! \brief Largest r with f = g on the closed ball of radius r around center.

  Returns n when f = g and nullopt when they already differ at the center.
*/
std::optional<unsigned> agreement_radius( const truth_table& f, const truth_table& g, input_t center,
                                          const caps& limits = {} );

/*! \brief Completes ball data of a function with s <= s_bound.

  Layers beyond the radius take the strict majority of their neighbors one
  step closer to the center. Needs radius >= 2 s_bound (or the whole cube).
  Throws inconsistent_data on a tie, on a layer where more than s_bound
  neighbors disagree, or when the completion has sensitivity above s_bound.
*/
truth_table reconstruct_majority( const ball_values& ball, unsigned s_bound, const caps& limits = {} );

/*! \brief Completes ball data at 0^n of a monotone function with s <= s_bound.

  Beyond the radius f(x) is the OR of its lower neighbors. The completion
  must be monotone with sensitivity at most s_bound. Radius >= s_bound makes
  the completion unique; smaller radii are accepted and still checked (every
  minimal 1-input of a monotone f has weight at most s(f)).
*/
truth_table reconstruct_monotone( const ball_values& ball, unsigned s_bound, const caps& limits = {} );

struct subcube_component
{
  var_set fixed;
  input_t fixed_values = 0u; // bits of the fixed coordinates; free bits are 0
  var_set free;
  std::vector<input_t> members; // ascending
  bool is_subcube = false;

  var_set ones() const { return var_set( fixed_values ) & fixed; }
  var_set zeros() const { return fixed - var_set( fixed_values ); }
};

struct one_set_analysis
{
  std::vector<subcube_component> components; // ordered by smallest member
  std::vector<std::vector<unsigned>> distances; // pairwise minimum Hamming distance
  bool all_subcubes = true;
  std::optional<unsigned> min_distance;         // nullopt with fewer than two components
  bool hypothesis = false;                      // s0 = 1 and f non-constant
};

/*! \brief Connected components of the subgraph of the cube induced by f^-1(1).

  Under the hypothesis s0 = 1 (f non-constant) every component must be a
  subcube and components must be at distance >= 3; a violation throws an
  invariant error.
*/
one_set_analysis one_set_components( const truth_table& f, const caps& limits = {} );

/*! \brief DNF from the subcubes of a function with s0 = 1.

  Requires f(0^n) = 0 and bs0 attained at 0^n. One term per block of an
  optimal family at 0^n: the subcube containing the block's indicator, with
  its 1-coordinates positive and its 0-coordinates negative.
*/
dnf hypercubes_to_dnf( const truth_table& f, const caps& limits = {} );

} // namespace sensbench
