#pragma once

#include <stdexcept>
#include <string>

namespace sensbench
{

enum class error_kind
{
  capacity,            // arity beyond the configured enumeration caps
  usage,               // malformed arguments
  parse,               // malformed file contents
  arity_mismatch,
  degenerate_input,    // e.g. normalizing a constant function
  property_violation,  // a structural DNF property required by a procedure does not hold
  hypothesis_violation,
  inconsistent_data,   // ball data contradicting the claimed sensitivity bound
  no_solution,
  invariant            // an internal postcondition failed
};

class error : public std::runtime_error
{
public:
  error( error_kind kind, const std::string& message )
      : std::runtime_error( message ), kind_( kind )
  {
  }

  error_kind kind() const noexcept { return kind_; }

private:
  error_kind kind_;
};

/*! \brief Process exit code for an error kind.

  0 ok, 1 check failed, 2 usage, 3 capacity, 4 inconsistent data.
*/
inline int exit_code( error_kind kind )
{
  switch ( kind )
  {
  case error_kind::capacity:
    return 3;
  case error_kind::usage:
  case error_kind::parse:
  case error_kind::arity_mismatch:
    return 2;
  case error_kind::inconsistent_data:
    return 4;
  default:
    return 1;
  }
}

const char* to_string( error_kind kind );

} // namespace sensbench
