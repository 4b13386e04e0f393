/*!
  \file io.hpp
  \brief JSON reading/writing of networks and bindings, and DOT export.

  Network file:
  \code
  { "edges":    [ {"id": "x", "type": {"kind": "real"}}, ... ],
    "vertices": [ {"name": "v", "params": [...], "ins": [...], "outs": [...], "func": {...}}, ... ],
    "priout":   [ "d" ] }
  \endcode
  Types: {"kind":"real"}, {"kind":"bool"}, {"kind":"pm1"},
  {"kind":"fixed","total":T,"frac":F,"signed":true}.
  Functions: {"kind":"dot","arity":n,"bias":false}, {"kind":"relu"},
  {"kind":"sigmoid"}, {"kind":"full_adder"}, {"kind":"identity"},
  {"kind":"truth_table","arity":K,"bits":"0110"} (an array of bit strings
  for several outputs), {"kind":"bnn","w":[1,-1],"c":0},
  {"kind":"const","value":v} or {"kind":"const","values":[...]}.
  Values: numbers for real, true/false for bool, -1/+1 for pm1, and
  {"raw":k} for fixed (a plain number is quantised onto the format).
*/

#pragma once

#include "error.hpp"
#include "fixed_point.hpp"
#include "network.hpp"
#include "truth_table.hpp"
#include "types.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace boolnet
{

using json = nlohmann::ordered_json;

namespace detail
{

[[noreturn]] inline void bad( std::string const& what )
{
  throw error( errc::parse_error, what );
}

inline json const& field( json const& j, char const* key, std::string const& where )
{
  if ( !j.is_object() || !j.contains( key ) )
  {
    bad( where + ": missing field '" + key + "'" );
  }
  return j.at( key );
}

template<typename T>
T get_as( json const& j, std::string const& where )
{
  try
  {
    return j.get<T>();
  }
  catch ( nlohmann::json::exception const& )
  {
    bad( where + ": unexpected value " + j.dump() );
  }
}

inline std::vector<std::string> id_list( json const& j, char const* key, std::string const& where )
{
  if ( !j.contains( key ) )
  {
    return {};
  }
  return get_as<std::vector<std::string>>( j.at( key ), where + "." + key );
}

} // namespace detail

inline data_type type_from_json( json const& j )
{
  auto const kind = detail::get_as<std::string>( detail::field( j, "kind", "type" ), "type.kind" );
  if ( kind == "real" )
  {
    return data_type::real();
  }
  if ( kind == "bool" )
  {
    return data_type::boolean();
  }
  if ( kind == "pm1" )
  {
    return data_type::pm1();
  }
  if ( kind == "fixed" )
  {
    fixed_format f;
    f.total_bits = detail::get_as<unsigned>( detail::field( j, "total", "fixed type" ), "fixed.total" );
    f.frac_bits = detail::get_as<unsigned>( detail::field( j, "frac", "fixed type" ), "fixed.frac" );
    f.is_signed = j.contains( "signed" ) ? detail::get_as<bool>( j.at( "signed" ), "fixed.signed" ) : true;
    if ( !f.valid() )
    {
      detail::bad( "invalid fixed-point format " + f.str() + " (need 0 <= frac <= total <= 32, total >= 1)" );
    }
    return data_type::fixed( f );
  }
  detail::bad( "unknown type kind '" + kind + "'" );
}

inline json to_json( data_type const& t )
{
  switch ( t.kind )
  {
  case type_kind::real: return { { "kind", "real" } };
  case type_kind::boolean: return { { "kind", "bool" } };
  case type_kind::pm1: return { { "kind", "pm1" } };
  case type_kind::fixed:
    return { { "kind", "fixed" }, { "total", t.format.total_bits }, { "frac", t.format.frac_bits }, { "signed", t.format.is_signed } };
  }
  return {};
}

inline value value_from_json( json const& j, data_type const& t, std::string const& where )
{
  switch ( t.kind )
  {
  case type_kind::real:
    if ( !j.is_number() )
    {
      detail::bad( where + ": expected a number" );
    }
    return j.get<double>();
  case type_kind::boolean:
    if ( j.is_boolean() )
    {
      return j.get<bool>();
    }
    if ( j.is_number_integer() && ( j.get<int>() == 0 || j.get<int>() == 1 ) )
    {
      return j.get<int>() == 1;
    }
    detail::bad( where + ": expected a Boolean" );
  case type_kind::pm1:
    if ( j.is_number_integer() && ( j.get<int>() == 1 || j.get<int>() == -1 ) )
    {
      return pm1_value{ j.get<int>() };
    }
    detail::bad( where + ": expected -1 or +1" );
  case type_kind::fixed:
    if ( j.is_object() && j.contains( "raw" ) )
    {
      fixed_value v{ t.format, detail::get_as<std::int64_t>( j.at( "raw" ), where + ".raw" ) };
      if ( !v.in_range() )
      {
        detail::bad( where + ": raw value " + std::to_string( v.raw ) + " outside " + t.format.str() );
      }
      return v;
    }
    if ( j.is_number() )
    {
      return quantize_value( t.format, j.get<double>() );
    }
    detail::bad( where + ": expected {\"raw\": k} or a number" );
  }
  detail::bad( where + ": unknown type" );
}

inline json to_json( value const& v )
{
  switch ( kind_of( v ) )
  {
  case type_kind::real: return std::get<double>( v );
  case type_kind::boolean: return std::get<bool>( v );
  case type_kind::pm1: return std::get<pm1_value>( v ).v;
  case type_kind::fixed: return { { "raw", std::get<fixed_value>( v ).raw } };
  }
  return {};
}

/* `out_types` are needed to read constants */
inline function_ref func_from_json( json const& j, std::vector<data_type> const& out_types, std::string const& where )
{
  auto const kind = detail::get_as<std::string>( detail::field( j, "kind", where ), where + ".kind" );
  if ( kind == "dot" )
  {
    auto const n = detail::get_as<unsigned>( detail::field( j, "arity", where ), where + ".arity" );
    auto const bias = j.contains( "bias" ) && detail::get_as<bool>( j.at( "bias" ), where + ".bias" );
    return function_ref::dot( n, bias );
  }
  if ( kind == "relu" )
  {
    return function_ref::relu();
  }
  if ( kind == "sigmoid" )
  {
    return function_ref::sigmoid();
  }
  if ( kind == "full_adder" )
  {
    return function_ref::full_adder();
  }
  if ( kind == "identity" )
  {
    return function_ref::identity();
  }
  if ( kind == "truth_table" )
  {
    auto const k = detail::get_as<unsigned>( detail::field( j, "arity", where ), where + ".arity" );
    auto const& bits = detail::field( j, "bits", where );
    std::vector<std::string> strings;
    if ( bits.is_string() )
    {
      strings.push_back( bits.get<std::string>() );
    }
    else
    {
      strings = detail::get_as<std::vector<std::string>>( bits, where + ".bits" );
    }
    std::vector<truth_table> tables;
    for ( auto const& s : strings )
    {
      try
      {
        tables.push_back( truth_table::from_string( k, s ) );
      }
      catch ( error const& e )
      {
        detail::bad( where + ": " + e.what() );
      }
    }
    auto f = function_ref::tables_of( std::move( tables ) );
    f.arity = k;
    return f;
  }
  if ( kind == "bnn" )
  {
    auto const w = detail::get_as<std::vector<int>>( detail::field( j, "w", where ), where + ".w" );
    auto const c = detail::get_as<int>( detail::field( j, "c", where ), where + ".c" );
    auto const n = static_cast<int>( w.size() );
    for ( auto wi : w )
    {
      if ( wi != 1 && wi != -1 )
      {
        detail::bad( where + ": BNN weights must be -1 or +1" );
      }
    }
    if ( c < -n || c > n )
    {
      detail::bad( where + ": BNN threshold " + std::to_string( c ) + " outside [-" + std::to_string( n ) + ", " +
                   std::to_string( n ) + "]" );
    }
    return function_ref::bnn( w, c );
  }
  if ( kind == "const" )
  {
    std::vector<json> raw;
    if ( j.contains( "values" ) )
    {
      raw = detail::get_as<std::vector<json>>( j.at( "values" ), where + ".values" );
    }
    else
    {
      raw.push_back( detail::field( j, "value", where ) );
    }
    if ( raw.size() != out_types.size() )
    {
      detail::bad( where + ": " + std::to_string( raw.size() ) + " constants for " + std::to_string( out_types.size() ) +
                   " outputs" );
    }
    std::vector<value> vs;
    for ( std::size_t k = 0; k < raw.size(); ++k )
    {
      vs.push_back( value_from_json( raw[k], out_types[k], where + ".value" ) );
    }
    return function_ref::constants_of( std::move( vs ) );
  }
  detail::bad( where + ": unknown function kind '" + kind + "'" );
}

inline json to_json( function_ref const& f )
{
  switch ( f.kind )
  {
  case func_kind::dot: return { { "kind", "dot" }, { "arity", f.arity }, { "bias", f.bias } };
  case func_kind::relu: return { { "kind", "relu" } };
  case func_kind::sigmoid: return { { "kind", "sigmoid" } };
  case func_kind::full_adder: return { { "kind", "full_adder" } };
  case func_kind::identity: return { { "kind", "identity" } };
  case func_kind::table: {
    json j{ { "kind", "truth_table" }, { "arity", f.arity } };
    if ( f.tables.size() == 1 )
    {
      j["bits"] = f.tables[0].str();
    }
    else
    {
      j["bits"] = json::array();
      for ( auto const& t : f.tables )
      {
        j["bits"].push_back( t.str() );
      }
    }
    return j;
  }
  case func_kind::bnn: return { { "kind", "bnn" }, { "w", f.weights }, { "c", f.threshold } };
  case func_kind::constant: {
    json j{ { "kind", "const" } };
    if ( f.constants.size() == 1 )
    {
      j["value"] = to_json( f.constants[0] );
    }
    else
    {
      j["values"] = json::array();
      for ( auto const& v : f.constants )
      {
        j["values"].push_back( to_json( v ) );
      }
    }
    return j;
  }
  }
  return {};
}

/*! \brief Reads a network; structural problems are left to validate(). */
inline network network_from_json( json const& j )
{
  if ( !j.is_object() )
  {
    detail::bad( "network: expected a JSON object" );
  }
  network net;
  std::map<std::string, data_type> types;
  for ( auto const& e : detail::field( j, "edges", "network" ) )
  {
    auto const id = detail::get_as<std::string>( detail::field( e, "id", "edge" ), "edge.id" );
    auto const t = type_from_json( detail::field( e, "type", "edge '" + id + "'" ) );
    net.add_edge( id, t );
    types.emplace( id, t );
  }
  for ( auto const& v : detail::field( j, "vertices", "network" ) )
  {
    auto const name = detail::get_as<std::string>( detail::field( v, "name", "vertex" ), "vertex.name" );
    auto const where = "vertex '" + name + "'";
    vertex x{ name, detail::id_list( v, "params", where ), detail::id_list( v, "ins", where ),
              detail::id_list( v, "outs", where ), {} };
    std::vector<data_type> out_types;
    for ( auto const& o : x.outs )
    {
      auto it = types.find( o );
      out_types.push_back( it == types.end() ? data_type::real() : it->second );
    }
    x.func = func_from_json( detail::field( v, "func", where ), out_types, where + ".func" );
    net.add_vertex( std::move( x ) );
  }
  net.priout = detail::id_list( j, "priout", "network" );
  return net;
}

inline json to_json( network const& net )
{
  json j;
  j["edges"] = json::array();
  for ( auto const& e : net.edges )
  {
    j["edges"].push_back( { { "id", e.id }, { "type", to_json( e.type ) } } );
  }
  j["vertices"] = json::array();
  for ( auto const& v : net.vertices )
  {
    j["vertices"].push_back(
        { { "name", v.name }, { "params", v.params }, { "ins", v.ins }, { "outs", v.outs }, { "func", to_json( v.func ) } } );
  }
  j["priout"] = net.priout;
  return j;
}

inline json parse_json( std::string const& text, std::string const& where )
{
  try
  {
    return json::parse( text );
  }
  catch ( nlohmann::json::exception const& e )
  {
    detail::bad( where + ": " + e.what() );
  }
}

inline std::string read_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    detail::bad( "cannot open '" + path + "'" );
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline network read_network( std::string const& path )
{
  return network_from_json( parse_json( read_file( path ), path ) );
}

inline std::string network_to_string( network const& net )
{
  return to_json( net ).dump( 2 ) + "\n";
}

/*! \brief A binding for edges of `net`; ids unknown to `net` are rejected. */
inline binding binding_from_json( json const& j, network const& net )
{
  if ( !j.is_object() )
  {
    detail::bad( "binding: expected a JSON object" );
  }
  binding b;
  for ( auto const& [id, v] : j.items() )
  {
    auto idx = net.edge_index( id );
    if ( !idx )
    {
      detail::bad( "binding names unknown edge '" + id + "'" );
    }
    b.emplace( id, value_from_json( v, net.edges[*idx].type, "binding '" + id + "'" ) );
  }
  return b;
}

inline json to_json( binding const& b )
{
  json j = json::object();
  for ( auto const& [id, v] : b )
  {
    j[id] = to_json( v );
  }
  return j;
}

inline std::string dot_escape( std::string const& s )
{
  std::string r;
  for ( auto c : s )
  {
    if ( c == '"' || c == '\\' )
    {
      r += '\\';
    }
    r += c;
  }
  return r;
}

/*! \brief Graphviz view: vertices are boxes, free edges are input ellipses, priout edges end in output nodes. */
inline std::string to_dot( network const& net )
{
  std::ostringstream s;
  s << "digraph network {\n  rankdir=LR;\n";
  std::map<std::string, std::string> driver;
  for ( std::size_t i = 0; i < net.vertices.size(); ++i )
  {
    auto const& v = net.vertices[i];
    s << "  v" << i << " [shape=box,label=\"" << dot_escape( v.name ) << "\\n" << dot_escape( v.func.name() ) << "\"];\n";
    for ( auto const& o : v.outs )
    {
      driver[o] = "v" + std::to_string( i );
    }
  }
  std::map<std::string, std::string> source;
  std::size_t k = 0;
  for ( auto const& e : net.edges )
  {
    if ( driver.count( e.id ) )
    {
      source[e.id] = driver[e.id];
      continue;
    }
    auto const node = "e" + std::to_string( k++ );
    s << "  " << node << " [shape=ellipse,label=\"" << dot_escape( e.id ) << "\"];\n";
    source[e.id] = node;
  }
  for ( std::size_t i = 0; i < net.vertices.size(); ++i )
  {
    auto const& v = net.vertices[i];
    for ( auto const* list : { &v.params, &v.ins } )
    {
      for ( auto const& id : *list )
      {
        if ( source.count( id ) )
        {
          s << "  " << source[id] << " -> v" << i << " [label=\"" << dot_escape( id ) << "\""
            << ( list == &v.params ? ",style=dashed" : "" ) << "];\n";
        }
      }
    }
  }
  for ( std::size_t i = 0; i < net.priout.size(); ++i )
  {
    auto const& id = net.priout[i];
    s << "  o" << i << " [shape=doublecircle,label=\"" << dot_escape( id ) << "\"];\n";
    if ( source.count( id ) )
    {
      s << "  " << source[id] << " -> o" << i << ";\n";
    }
  }
  s << "}\n";
  return s.str();
}

} // namespace boolnet
