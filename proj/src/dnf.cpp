#include <sensbench/dnf.hpp>
#include <sensbench/error.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sensbench
{

dnf::dnf( unsigned arity ) : arity_( arity )
{
  if ( arity > max_vars )
  {
    throw error( error_kind::capacity, "DNF arity " + std::to_string( arity ) + " exceeds " + std::to_string( max_vars ) );
  }
}

dnf::dnf( unsigned arity, std::vector<term> terms ) : dnf( arity )
{
  for ( auto& t : terms )
  {
    add_term( t );
  }
}

unsigned dnf::width() const
{
  unsigned w = 0u;
  for ( const auto& t : terms_ )
  {
    w = std::max( w, t.width() );
  }
  return w;
}

void dnf::check_term( const term& t ) const
{
  if ( t.pos.intersects( t.neg ) )
  {
    throw error( error_kind::usage, "term " + to_string( t ) + " contains a variable and its negation" );
  }
  if ( !t.vars().subset_of( var_set( all_ones( arity_ ) ) ) )
  {
    throw error( error_kind::usage, "term " + to_string( t ) + " uses a variable outside [" + std::to_string( arity_ ) + "]" );
  }
}

void dnf::add_term( term t )
{
  check_term( t );
  terms_.push_back( t );
}

bool dnf::operator()( input_t x ) const
{
  return std::any_of( terms_.begin(), terms_.end(), [x]( const term& t ) { return t.satisfied_by( x ); } );
}

bool eval_dnf( const dnf& d, input_t x )
{
  return d( x );
}

truth_table to_truth_table( const dnf& d, const caps& limits )
{
  require_enumerable( d.arity(), limits, "DNF expansion" );
  return truth_table::from_function( d.arity(), d );
}

var_set sensitive_coordinates( const dnf& d, input_t x )
{
  var_set out;
  const auto fx = d( x );
  for ( auto i = 1u; i <= d.arity(); ++i )
  {
    if ( d( flip( x, i ) ) != fx )
    {
      out.insert( i );
    }
  }
  return out;
}

unsigned sensitivity_at( const dnf& d, input_t x )
{
  return sensitive_coordinates( d, x ).size();
}

bool is_syntactically_monotone( const dnf& d )
{
  return std::all_of( d.terms().begin(), d.terms().end(), []( const term& t ) { return t.neg.empty(); } );
}

std::string to_string( const term& t )
{
  if ( t.pos.empty() && t.neg.empty() )
  {
    return "*";
  }
  std::string out;
  for ( auto v : t.pos )
  {
    out += ( out.empty() ? "+" : " +" ) + std::to_string( v );
  }
  for ( auto v : t.neg )
  {
    out += ( out.empty() ? "-" : " -" ) + std::to_string( v );
  }
  return out;
}

std::string write_dnf( const dnf& d )
{
  std::string out = "dnf " + std::to_string( d.arity() ) + "\n";
  for ( const auto& t : d.terms() )
  {
    out += to_string( t ) + "\n";
  }
  return out;
}

namespace
{

[[noreturn]] void parse_failure( unsigned line, std::size_t column, const std::string& message )
{
  throw error( error_kind::parse, "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + message );
}

} // namespace

dnf read_dnf( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string line;
  unsigned line_no = 0u;
  bool have_header = false;
  dnf result;

  while ( std::getline( in, line ) )
  {
    ++line_no;
    if ( const auto hash = line.find( '#' ); hash != std::string::npos )
    {
      line.erase( hash );
    }

    // tokens with their 1-based columns
    std::vector<std::pair<std::string, std::size_t>> tokens;
    for ( std::size_t i = 0; i < line.size(); )
    {
      if ( line[i] == ' ' || line[i] == '\t' || line[i] == '\r' )
      {
        ++i;
        continue;
      }
      const auto start = i;
      while ( i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' )
      {
        ++i;
      }
      tokens.emplace_back( line.substr( start, i - start ), start + 1 );
    }
    if ( tokens.empty() )
    {
      continue;
    }

    if ( !have_header )
    {
      if ( tokens.size() != 2u || tokens[0].first != "dnf" )
      {
        parse_failure( line_no, tokens[0].second, "expected header 'dnf <arity>'" );
      }
      unsigned arity = 0u;
      const auto& tok = tokens[1].first;
      const auto [ptr, ec] = std::from_chars( tok.data(), tok.data() + tok.size(), arity );
      if ( ec != std::errc{} || ptr != tok.data() + tok.size() )
      {
        parse_failure( line_no, tokens[1].second, "invalid arity '" + tok + "'" );
      }
      if ( arity > max_vars )
      {
        throw error( error_kind::capacity, "line " + std::to_string( line_no ) + ": arity " + tok + " exceeds " +
                                               std::to_string( max_vars ) );
      }
      result = dnf( arity );
      have_header = true;
      continue;
    }

    term t;
    if ( tokens.size() == 1u && tokens[0].first == "*" )
    {
      result.add_term( t );
      continue;
    }
    for ( const auto& [tok, column] : tokens )
    {
      if ( tok.size() < 2u || ( tok[0] != '+' && tok[0] != '-' ) )
      {
        parse_failure( line_no, column, "expected a signed variable index, got '" + tok + "'" );
      }
      unsigned var = 0u;
      const auto [ptr, ec] = std::from_chars( tok.data() + 1, tok.data() + tok.size(), var );
      if ( ec != std::errc{} || ptr != tok.data() + tok.size() )
      {
        parse_failure( line_no, column, "invalid variable index '" + tok + "'" );
      }
      if ( var < 1u || var > result.arity() )
      {
        parse_failure( line_no, column, "variable " + std::to_string( var ) + " outside 1.." + std::to_string( result.arity() ) );
      }
      if ( t.pos.contains( var ) || t.neg.contains( var ) )
      {
        parse_failure( line_no, column, "variable " + std::to_string( var ) + " repeated in the term" );
      }
      ( tok[0] == '+' ? t.pos : t.neg ).insert( var );
    }
    result.add_term( t );
  }

  if ( !have_header )
  {
    throw error( error_kind::parse, "line " + std::to_string( std::max( line_no, 1u ) ) + ": missing 'dnf <arity>' header" );
  }
  return result;
}

} // namespace sensbench
