#include <sensbench/render.hpp>

#include <algorithm>

namespace sensbench
{

namespace
{

json var_list( var_set s )
{
  return json( s.to_vector() );
}

json input_or_null( const std::optional<input_t>& x, unsigned n )
{
  return x ? json( to_bitstring( *x, n ) ) : json( nullptr );
}

json block_witness_or_null( const std::optional<block_witness>& w, unsigned n )
{
  if ( !w )
  {
    return nullptr;
  }
  return { { "input", to_bitstring( w->input, n ) }, { "blocks", to_json( w->blocks ) } };
}

std::string scalar_text( const json& j )
{
  if ( j.is_null() )
  {
    return "-";
  }
  if ( j.is_string() )
  {
    return j.get<std::string>();
  }
  return j.dump();
}

bool all_scalars( const json& arr )
{
  return std::all_of( arr.begin(), arr.end(), []( const json& e ) { return !e.is_structured(); } );
}

bool is_set_list( const json& arr )
{
  return std::all_of( arr.begin(), arr.end(), []( const json& e ) { return e.is_array() && all_scalars( e ); } );
}

void flatten( const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out )
{
  if ( j.is_object() )
  {
    for ( const auto& [k, v] : j.items() )
    {
      flatten( v, prefix.empty() ? k : prefix + "." + k, out );
    }
    return;
  }
  if ( j.is_array() )
  {
    if ( all_scalars( j ) )
    {
      std::string line;
      for ( const auto& e : j )
      {
        line += ( line.empty() ? "" : " " ) + scalar_text( e );
      }
      out.emplace_back( prefix, line );
      return;
    }
    if ( is_set_list( j ) )
    {
      std::string line;
      for ( const auto& e : j )
      {
        std::string set;
        for ( const auto& v : e )
        {
          set += ( set.empty() ? "" : "," ) + scalar_text( v );
        }
        line += ( line.empty() ? "{" : " {" ) + set + "}";
      }
      out.emplace_back( prefix, line );
      return;
    }
    for ( std::size_t i = 0; i < j.size(); ++i )
    {
      flatten( j[i], prefix + "." + std::to_string( i ), out );
    }
    return;
  }
  out.emplace_back( prefix, scalar_text( j ) );
}

} // namespace

json to_json( const block_family& blocks )
{
  auto out = json::array();
  for ( const auto& b : blocks )
  {
    out.push_back( var_list( b ) );
  }
  return out;
}

json to_json( const measure_report& m )
{
  const auto n = m.arity;
  json j{ { "arity", n } };
  if ( m.has_sensitivity )
  {
    j["s"] = m.s;
    j["s0"] = m.has_zero_input ? json( m.s0 ) : json( nullptr );
    j["s1"] = m.has_one_input ? json( m.s1 ) : json( nullptr );
    j["witness_s"] = input_or_null( m.witness_s, n );
    j["witness_s0"] = input_or_null( m.witness_s0, n );
    j["witness_s1"] = input_or_null( m.witness_s1, n );
  }
  if ( m.has_block_sensitivity )
  {
    j["bs"] = m.bs;
    j["bs0"] = m.has_zero_input ? json( m.bs0 ) : json( nullptr );
    j["bs1"] = m.has_one_input ? json( m.bs1 ) : json( nullptr );
    j["witness_bs"] = block_witness_or_null( m.witness_bs, n );
    j["witness_bs0"] = block_witness_or_null( m.witness_bs0, n );
    j["witness_bs1"] = block_witness_or_null( m.witness_bs1, n );
  }
  return j;
}

json to_json( const dnf_stats& st )
{
  json components = json::array();
  for ( const auto& c : st.components )
  {
    json ids = json::array();
    for ( const auto i : c )
    {
      ids.push_back( i + 1u );
    }
    components.push_back( ids );
  }
  return { { "size", st.size },
           { "width", st.width },
           { "gamma", st.gamma },
           { "gamma_per_term", st.gamma_per_term },
           { "t_min", st.t_min },
           { "block", st.block },
           { "mixing_max", st.mixing_max ? json( *st.mixing_max ) : json( "inf" ) },
           { "transitive", st.transitive },
           { "components", components } };
}

json to_json( const compact_form_report& r, unsigned arity )
{
  json priv = json::array();
  for ( const auto& p : r.private_assignments )
  {
    priv.push_back( input_or_null( p, arity ) );
  }
  return { { "zero_is_false", r.cond_a },
           { "bs0_at_zero", r.cond_b },
           { "private_assignments_exist", r.cond_c },
           { "compact", r.compact() },
           { "normalized", r.normalized },
           { "bs_at_zero", r.bs_at_zero },
           { "bs0", r.bs0 },
           { "bs", r.bs },
           { "private_assignments", priv } };
}

json to_json( const bounds_check& b )
{
  return { { "checked", b.checked },        { "width", b.width },          { "gamma", b.gamma },
           { "s1", b.s1 },                  { "lower_ok", b.lower_ok },    { "upper_ok", b.upper_ok },
           { "mixing_applies", b.mixing_applies }, { "mixing_ok", b.mixing_ok }, { "ok", b.ok() } };
}

json to_json( const witness_result& w, unsigned arity )
{
  json gates = json::array();
  for ( const auto g : w.gates )
  {
    gates.push_back( g + 1u );
  }
  return { { "procedure", to_string( w.procedure ) },
           { "input", to_bitstring( w.input, arity ) },
           { "value", w.value ? 1 : 0 },
           { "guaranteed", w.guaranteed_bound },
           { "lemma_bound", w.lemma_bound },
           { "measured", w.measured },
           { "gates", gates } };
}

json to_json( const sensitivity_problem_result& r, unsigned arity )
{
  return { { "procedure", to_string( r.procedure ) },
           { "y", to_bitstring( r.y, arity ) },
           { "sensitivity", r.sensitivity },
           { "block_count", r.block_count },
           { "c", r.constant },
           { "warning", r.warning } };
}

json to_json( const family_instance& fi )
{
  json j{ { "family", fi.name },
          { "n", fi.n },
          { "g_arity", fi.g.arity() },
          { "g_terms", fi.g.size() },
          { "copies", fi.copies },
          { "arity", fi.g.arity() * fi.copies },
          { "inner", to_json( fi.inner ) },
          { "predicted", to_json( fi.predicted ) },
          { "expected_s", fi.expected_s },
          { "expected_bs", fi.expected_bs } };
  // the composed witnesses live on g.arity() * copies variables
  j["predicted"]["arity"] = fi.g.arity() * fi.copies;
  return j;
}

json to_json( const proposition_pair_result& pp )
{
  const auto n = pp.f.arity();
  return { { "p", pp.p },
           { "q", pp.q },
           { "arity", n },
           { "a", to_bitstring( pp.a, n ) },
           { "s_f", pp.s_f },
           { "s_g", pp.s_g },
           { "radius", pp.radius },
           { "f", to_hex( pp.f ) },
           { "g", to_hex( pp.g ) } };
}

json to_json( const one_set_analysis& a, unsigned arity )
{
  json comps = json::array();
  for ( const auto& c : a.components )
  {
    comps.push_back( { { "ones", var_list( c.ones() ) },
                       { "zeros", var_list( c.zeros() ) },
                       { "free", var_list( c.free ) },
                       { "size", c.members.size() },
                       { "first", to_bitstring( c.members.front(), arity ) },
                       { "subcube", c.is_subcube } } );
  }
  return { { "hypothesis", a.hypothesis },
           { "all_subcubes", a.all_subcubes },
           { "min_distance", a.min_distance ? json( *a.min_distance ) : json( nullptr ) },
           { "components", comps } };
}

json to_json( const check_result& r )
{
  return { { "group", r.group },   { "id", r.id },         { "instance", r.instance },
           { "passed", r.passed }, { "detail", r.detail }, { "counterexample", r.passed ? json( nullptr ) : json( r.counterexample ) } };
}

std::string to_text( const json& j )
{
  std::vector<std::pair<std::string, std::string>> rows;
  flatten( j, "", rows );
  std::size_t width = 0u;
  for ( const auto& [k, v] : rows )
  {
    width = std::max( width, k.size() );
  }
  std::string out;
  for ( const auto& [k, v] : rows )
  {
    out += k + std::string( width - k.size() + 2u, ' ' ) + v + "\n";
  }
  return out;
}

} // namespace sensbench
