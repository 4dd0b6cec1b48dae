#pragma once

#include <sensbench/truth_table.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace sensbench
{

enum class file_format
{
  truth_table,
  dnf,
  ball,
  unknown
};

/*! \brief Format named by the first header token ("tt", "dnf", "ball"). */
file_format detect_format( std::string_view text );

/*! \brief Several "tt" files concatenated; each header starts a new table. */
std::vector<truth_table> read_truth_tables( std::string_view text );

/*! \brief Whole file, or standard input for "-". Throws a usage error if unreadable. */
std::string read_file( const std::string& path );

} // namespace sensbench
