#pragma once

#include <sensbench/compact_form.hpp>
#include <sensbench/dnf_stats.hpp>
#include <sensbench/families.hpp>
#include <sensbench/lowsens.hpp>
#include <sensbench/measures.hpp>
#include <sensbench/verify.hpp>
#include <sensbench/witness.hpp>

#include <json.hpp>

#include <string>

namespace sensbench
{

using json = nlohmann::ordered_json;

/* Inputs render as bitstrings (x1 first), blocks and variable sets as 1-based index lists. */
json to_json( const block_family& blocks );
json to_json( const measure_report& m );
json to_json( const dnf_stats& st );
json to_json( const compact_form_report& r, unsigned arity );
json to_json( const bounds_check& b );
json to_json( const witness_result& w, unsigned arity );
json to_json( const sensitivity_problem_result& r, unsigned arity );
json to_json( const family_instance& fi );
json to_json( const proposition_pair_result& pp );
json to_json( const one_set_analysis& a, unsigned arity );
json to_json( const check_result& r );

/*! \brief Aligned "key value" lines; nested objects use dotted keys. */
std::string to_text( const json& j );

} // namespace sensbench
