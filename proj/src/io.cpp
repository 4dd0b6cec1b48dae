#include <sensbench/error.hpp>
#include <sensbench/io.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace sensbench
{

namespace
{

std::string_view first_token( std::string_view line )
{
  if ( const auto hash = line.find( '#' ); hash != std::string_view::npos )
  {
    line = line.substr( 0, hash );
  }
  const auto begin = line.find_first_not_of( " \t\r" );
  if ( begin == std::string_view::npos )
  {
    return {};
  }
  line.remove_prefix( begin );
  return line.substr( 0, line.find_first_of( " \t\r" ) );
}

} // namespace

file_format detect_format( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string line;
  while ( std::getline( in, line ) )
  {
    const auto tok = first_token( line );
    if ( tok.empty() )
    {
      continue;
    }
    if ( tok == "tt" )
    {
      return file_format::truth_table;
    }
    if ( tok == "dnf" )
    {
      return file_format::dnf;
    }
    if ( tok == "ball" )
    {
      return file_format::ball;
    }
    return file_format::unknown;
  }
  return file_format::unknown;
}

std::vector<truth_table> read_truth_tables( std::string_view text )
{
  std::vector<std::string> chunks;
  std::istringstream in{ std::string( text ) };
  std::string line;
  while ( std::getline( in, line ) )
  {
    if ( first_token( line ) == "tt" || chunks.empty() )
    {
      chunks.emplace_back();
    }
    chunks.back() += line + "\n";
  }
  std::vector<truth_table> out;
  for ( const auto& c : chunks )
  {
    if ( detect_format( c ) != file_format::unknown || !first_token( c ).empty() )
    {
      out.push_back( read_truth_table( c ) );
    }
  }
  return out;
}

std::string read_file( const std::string& path )
{
  std::ostringstream buf;
  if ( path == "-" )
  {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw error( error_kind::usage, "cannot read '" + path + "'" );
  }
  buf << in.rdbuf();
  return buf.str();
}

} // namespace sensbench
