#pragma once

#include <sensbench/types.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sensbench
{

struct check_result
{
  std::string group;          // which property family the instance exercises
  std::size_t id = 0u;
  std::string instance;       // short description
  bool passed = false;
  std::string detail;         // measured vs bounded values; failing checks start with '!'
  std::string counterexample; // instance in dnf / tt / ball file format
};

struct suite_report
{
  std::string name;
  std::uint64_t seed = 0u;
  std::vector<check_result> results;

  std::size_t failures() const;
  bool passed() const { return failures() == 0u; }

  /* restricted to one group */
  std::size_t count( std::string_view group ) const;
  std::size_t failures( std::string_view group ) const;
};

struct suite_options
{
  std::uint64_t seed = 1u;
  caps limits;
  std::size_t count = 0u; // 0: the suite's default instance count
};

/*! \brief gamma-bounds, block-4s2, tblock, kenyon-kutin, mixing-AS,
  families, reconstruction, monotone-nisan, hypercube, senslower.
*/
const std::vector<std::string>& suite_names();

/*! \brief Runs one suite. Deterministic for a given seed and caps. */
suite_report run_suite( std::string_view name, const suite_options& options = {} );

/*! \brief Re-runs a suite's checks on one saved counterexample.

  `text` is a dnf or tt file, or two concatenated tt files for the pair checks
  of the reconstruction suite. Where the suite samples centers or query
  inputs, replay uses all of {0,1}^n, so a failing sample fails again.
  t = 0 picks the smallest t the formula satisfies. The families suite has
  no replay.
*/
suite_report replay_instance( std::string_view suite, std::string_view text, const suite_options& options = {},
                              unsigned t = 0u );

} // namespace sensbench
