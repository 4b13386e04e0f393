/*!
  \file network.hpp
  \brief Typed acyclic dataflow networks: edges, vertices, validation and ordering.

  A network is a list of typed edge declarations, a list of vertices
  `(params, ins, outs, func)` referring to edges by id, and an ordered list
  of primary outputs.  Parameters of the network are the edges appearing
  in some params list; inputs are the declared edges that are neither
  parameters nor driven by any vertex, in declaration order.  An input
  that no vertex reads is still an input of the implemented function.
*/

#pragma once

#include "error.hpp"
#include "truth_table.hpp"
#include "types.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace boolnet
{

enum class func_kind
{
  dot,         /* (w_1..w_n [, b]; x_1..x_n) -> sum w_i x_i [+ b] */
  relu,
  sigmoid,     /* x -> 2/(1+exp(-x)) - 1 */
  full_adder,  /* (a, b, c) -> (sum, carry) */
  table,       /* one truth table per output, shared inputs */
  bnn,         /* x -> +1 iff w.x >= c, on {-1,+1} or Boolean edges */
  identity,
  constant     /* one value per output; inputs ignored */
};

struct function_ref
{
  func_kind kind{ func_kind::identity };
  unsigned arity{ 1 };                /* dot, bnn */
  bool bias{ false };                 /* dot */
  std::vector<truth_table> tables;    /* table */
  std::vector<int> weights;           /* bnn */
  int threshold{ 0 };                 /* bnn */
  std::vector<value> constants;       /* constant */

  static function_ref dot( unsigned n, bool with_bias = false )
  {
    function_ref f;
    f.kind = func_kind::dot;
    f.arity = n;
    f.bias = with_bias;
    return f;
  }
  static function_ref relu() { return of( func_kind::relu ); }
  static function_ref sigmoid() { return of( func_kind::sigmoid ); }
  static function_ref full_adder() { return of( func_kind::full_adder ); }
  static function_ref identity() { return of( func_kind::identity ); }

  static function_ref table( truth_table t ) { return tables_of( { std::move( t ) } ); }
  static function_ref tables_of( std::vector<truth_table> ts )
  {
    function_ref f;
    f.kind = func_kind::table;
    f.arity = ts.empty() ? 0 : ts.front().arity();
    f.tables = std::move( ts );
    return f;
  }

  static function_ref bnn( std::vector<int> w, int c )
  {
    function_ref f;
    f.kind = func_kind::bnn;
    f.arity = static_cast<unsigned>( w.size() );
    f.weights = std::move( w );
    f.threshold = c;
    return f;
  }

  static function_ref constant( value v ) { return constants_of( { std::move( v ) } ); }
  static function_ref constants_of( std::vector<value> vs )
  {
    function_ref f;
    f.kind = func_kind::constant;
    f.arity = 0;
    f.constants = std::move( vs );
    return f;
  }

  std::size_t num_params() const { return kind == func_kind::dot ? arity + ( bias ? 1 : 0 ) : 0; }

  /* nullopt: any number of inputs is accepted */
  std::optional<std::size_t> num_ins() const
  {
    switch ( kind )
    {
    case func_kind::dot:
    case func_kind::bnn:
    case func_kind::table: return arity;
    case func_kind::full_adder: return 3;
    case func_kind::constant: return std::nullopt;
    default: return 1;
    }
  }

  std::size_t num_outs() const
  {
    switch ( kind )
    {
    case func_kind::full_adder: return 2;
    case func_kind::table: return tables.size();
    case func_kind::constant: return constants.size();
    default: return 1;
    }
  }

  std::string name() const
  {
    switch ( kind )
    {
    case func_kind::dot: return "dot" + std::to_string( arity ) + ( bias ? "+b" : "" );
    case func_kind::relu: return "relu";
    case func_kind::sigmoid: return "sigmoid";
    case func_kind::full_adder: return "fa";
    case func_kind::identity: return "id";
    case func_kind::table: {
      std::string s = "tt";
      for ( auto const& t : tables )
      {
        s += ":" + t.str();
      }
      return s;
    }
    case func_kind::bnn: {
      std::string s = "bnn(";
      for ( auto i = 0u; i < weights.size(); ++i )
      {
        s += ( i ? "," : "" ) + std::string( weights[i] > 0 ? "+1" : "-1" );
      }
      return s + ";" + std::to_string( threshold ) + ")";
    }
    case func_kind::constant: {
      std::string s = "const";
      for ( auto const& v : constants )
      {
        s += ":" + to_string( v );
      }
      return s;
    }
    }
    return "?";
  }

  bool operator==( function_ref const& ) const = default;

private:
  static function_ref of( func_kind k )
  {
    function_ref f;
    f.kind = k;
    return f;
  }
};

struct edge_decl
{
  std::string id;
  data_type type;
};

struct vertex
{
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> ins;
  std::vector<std::string> outs;
  function_ref func;
};

struct network
{
  std::vector<edge_decl> edges;
  std::vector<vertex> vertices;
  std::vector<std::string> priout;

  network& add_edge( std::string id, data_type type )
  {
    edges.push_back( { std::move( id ), type } );
    return *this;
  }

  network& add_vertex( vertex v )
  {
    vertices.push_back( std::move( v ) );
    return *this;
  }

  std::optional<std::size_t> edge_index( std::string const& id ) const
  {
    for ( std::size_t i = 0; i < edges.size(); ++i )
    {
      if ( edges[i].id == id )
      {
        return i;
      }
    }
    return std::nullopt;
  }

  data_type const& edge_type( std::string const& id ) const
  {
    auto const i = edge_index( id );
    if ( !i )
    {
      throw error( errc::invalid_network, "undeclared edge '" + id + "'" );
    }
    return edges[*i].type;
  }

  /*! \brief Edges appearing in any params list, in declaration order. */
  std::vector<std::string> parameters() const
  {
    std::set<std::string> used;
    for ( auto const& v : vertices )
    {
      used.insert( v.params.begin(), v.params.end() );
    }
    std::vector<std::string> result;
    for ( auto const& e : edges )
    {
      if ( used.count( e.id ) )
      {
        result.push_back( e.id );
      }
    }
    return result;
  }

  /*! \brief Declared edges that are neither parameters nor driven, in declaration order. */
  std::vector<std::string> inputs() const
  {
    std::set<std::string> excluded;
    for ( auto const& v : vertices )
    {
      excluded.insert( v.params.begin(), v.params.end() );
      excluded.insert( v.outs.begin(), v.outs.end() );
    }
    std::vector<std::string> result;
    for ( auto const& e : edges )
    {
      if ( !excluded.count( e.id ) )
      {
        result.push_back( e.id );
      }
    }
    return result;
  }
};

struct validation_report
{
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
};

namespace detail
{

/* static type rules of each leaf kind; returns a message on mismatch */
inline std::optional<std::string> check_leaf_types( vertex const& v, network const& net )
{
  auto type_of = [&]( std::string const& id ) { return net.edge_type( id ); };
  auto all_kind = [&]( std::vector<std::string> const& ids, type_kind k ) {
    return std::all_of( ids.begin(), ids.end(), [&]( auto const& id ) { return type_of( id ).kind == k; } );
  };
  auto const& f = v.func;
  switch ( f.kind )
  {
  case func_kind::full_adder:
  case func_kind::table:
    if ( !all_kind( v.ins, type_kind::boolean ) || !all_kind( v.outs, type_kind::boolean ) )
    {
      return "needs Boolean edges";
    }
    break;
  case func_kind::bnn: {
    bool const bool_io = all_kind( v.ins, type_kind::boolean ) && all_kind( v.outs, type_kind::boolean );
    bool const pm1_io = all_kind( v.ins, type_kind::pm1 ) && all_kind( v.outs, type_kind::pm1 );
    if ( !bool_io && !pm1_io )
    {
      return "needs all-Boolean or all-pm1 edges";
    }
    break;
  }
  case func_kind::dot: {
    std::vector<std::string> all = v.params;
    all.insert( all.end(), v.ins.begin(), v.ins.end() );
    all.insert( all.end(), v.outs.begin(), v.outs.end() );
    if ( !all_kind( all, type_kind::real ) && !all_kind( all, type_kind::fixed ) )
    {
      return "needs all-real or all-fixed edges";
    }
    break;
  }
  case func_kind::relu:
  case func_kind::identity: {
    auto const in = type_of( v.ins[0] ).kind;
    auto const out = type_of( v.outs[0] ).kind;
    if ( in != out || ( f.kind == func_kind::relu && in != type_kind::real && in != type_kind::fixed ) )
    {
      return "input/output types do not match";
    }
    break;
  }
  case func_kind::sigmoid:
    if ( !all_kind( v.ins, type_kind::real ) || !all_kind( v.outs, type_kind::real ) )
    {
      return "needs real edges";
    }
    break;
  case func_kind::constant:
    for ( std::size_t i = 0; i < v.outs.size(); ++i )
    {
      if ( !type_checks( f.constants[i], type_of( v.outs[i] ) ) )
      {
        return "constant does not type-check against '" + v.outs[i] + "'";
      }
    }
    break;
  }
  return std::nullopt;
}

} // namespace detail

/*! \brief Checks every structural rule; violations are returned as data. */
inline validation_report validate( network const& net )
{
  validation_report report;
  auto violation = [&]( std::string s ) { report.violations.push_back( std::move( s ) ); };

  std::set<std::string> declared;
  for ( auto const& e : net.edges )
  {
    if ( !declared.insert( e.id ).second )
    {
      violation( "duplicate edge: " + e.id );
    }
    if ( e.type.kind == type_kind::fixed && !e.type.format.valid() )
    {
      violation( "invalid fixed format: " + e.id );
    }
  }

  std::map<std::string, std::vector<std::string>> drivers;
  std::set<std::string> param_edges, consumed;
  std::set<std::string> names;
  bool refs_ok = true;
  for ( auto const& v : net.vertices )
  {
    if ( !names.insert( v.name ).second )
    {
      violation( "duplicate vertex: " + v.name );
    }
    for ( auto const* list : { &v.params, &v.ins, &v.outs } )
    {
      for ( auto const& id : *list )
      {
        if ( !declared.count( id ) )
        {
          violation( "undeclared edge: " + id + " (vertex " + v.name + ")" );
          refs_ok = false;
        }
      }
    }
    if ( v.outs.empty() )
    {
      violation( "no outputs: " + v.name );
    }
    for ( auto const& id : v.outs )
    {
      drivers[id].push_back( v.name );
    }
    param_edges.insert( v.params.begin(), v.params.end() );
    consumed.insert( v.ins.begin(), v.ins.end() );
    consumed.insert( v.params.begin(), v.params.end() );
  }

  for ( auto const& id : param_edges )
  {
    if ( drivers.count( id ) )
    {
      violation( "param driven: " + id );
    }
  }
  for ( auto const& [id, ds] : drivers )
  {
    if ( ds.size() > 1 )
    {
      violation( "multiple drivers: " + id );
    }
  }
  std::set<std::string> observed;
  for ( auto const& id : net.priout )
  {
    if ( !observed.insert( id ).second )
    {
      violation( "duplicate priout: " + id );
    }
    if ( !drivers.count( id ) )
    {
      violation( "priout undriven: " + id );
    }
  }

  /* signatures */
  for ( auto const& v : net.vertices )
  {
    auto const& f = v.func;
    bool sig_ok = v.params.size() == f.num_params() && ( !f.num_ins() || v.ins.size() == *f.num_ins() ) &&
                  v.outs.size() == f.num_outs();
    if ( f.kind == func_kind::table )
    {
      for ( auto const& t : f.tables )
      {
        sig_ok = sig_ok && t.arity() == f.arity;
      }
    }
    if ( f.kind == func_kind::bnn && f.weights.size() != f.arity )
    {
      sig_ok = false;
    }
    if ( !sig_ok )
    {
      violation( "arity mismatch: " + v.name + " (" + f.name() + ")" );
      continue;
    }
    if ( f.kind == func_kind::bnn )
    {
      auto const n = static_cast<int>( f.arity );
      if ( f.threshold < -n || f.threshold > n )
      {
        violation( "bnn threshold out of range: " + v.name );
      }
      for ( auto w : f.weights )
      {
        if ( w != 1 && w != -1 )
        {
          violation( "bnn weight not +-1: " + v.name );
          break;
        }
      }
    }
    if ( refs_ok )
    {
      if ( auto msg = detail::check_leaf_types( v, net ) )
      {
        violation( "type mismatch: " + v.name + " " + *msg );
      }
    }
  }

  /* acyclicity */
  if ( refs_ok )
  {
    std::unordered_map<std::string, std::size_t> driver_of;
    for ( std::size_t i = 0; i < net.vertices.size(); ++i )
    {
      for ( auto const& id : net.vertices[i].outs )
      {
        driver_of.emplace( id, i );
      }
    }
    std::vector<int> state( net.vertices.size(), 0 );
    std::function<bool( std::size_t )> dfs = [&]( std::size_t i ) {
      state[i] = 1;
      for ( auto const& id : net.vertices[i].ins )
      {
        auto it = driver_of.find( id );
        if ( it == driver_of.end() )
        {
          continue;
        }
        if ( state[it->second] == 1 || ( state[it->second] == 0 && dfs( it->second ) ) )
        {
          return true;
        }
      }
      state[i] = 2;
      return false;
    };
    for ( std::size_t i = 0; i < net.vertices.size(); ++i )
    {
      if ( state[i] == 0 && dfs( i ) )
      {
        violation( "cycle through vertex: " + net.vertices[i].name );
        break;
      }
    }
  }

  for ( auto const& e : net.edges )
  {
    bool const driven = drivers.count( e.id ) > 0;
    if ( driven && !consumed.count( e.id ) && !observed.count( e.id ) )
    {
      report.warnings.push_back( "unobserved edge: " + e.id );
    }
    if ( !driven && !consumed.count( e.id ) )
    {
      report.warnings.push_back( "unused edge: " + e.id );
    }
  }
  return report;
}

inline void require_valid( network const& net )
{
  auto const report = validate( net );
  if ( !report.ok() )
  {
    throw error( report.violations.front().rfind( "cycle", 0 ) == 0 ? errc::cyclic_network : errc::invalid_network,
                 report.violations.front() );
  }
}

/*! \brief Vertex indices in dependency order, ties broken by declaration order. */
inline std::vector<std::size_t> topo_sort( network const& net )
{
  std::unordered_map<std::string, std::vector<std::size_t>> driver_of;
  for ( std::size_t i = 0; i < net.vertices.size(); ++i )
  {
    for ( auto const& id : net.vertices[i].outs )
    {
      driver_of[id].push_back( i );
    }
  }
  std::vector<std::vector<std::size_t>> fanout( net.vertices.size() );
  std::vector<std::size_t> pending( net.vertices.size(), 0 );
  for ( std::size_t i = 0; i < net.vertices.size(); ++i )
  {
    for ( auto const& id : net.vertices[i].ins )
    {
      if ( auto it = driver_of.find( id ); it != driver_of.end() )
      {
        for ( auto d : it->second )
        {
          fanout[d].push_back( i );
          ++pending[i];
        }
      }
    }
  }

  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for ( std::size_t i = 0; i < net.vertices.size(); ++i )
  {
    if ( pending[i] == 0 )
    {
      ready.push( i );
    }
  }
  std::vector<std::size_t> order;
  order.reserve( net.vertices.size() );
  while ( !ready.empty() )
  {
    auto const i = ready.top();
    ready.pop();
    order.push_back( i );
    for ( auto j : fanout[i] )
    {
      if ( --pending[j] == 0 )
      {
        ready.push( j );
      }
    }
  }
  if ( order.size() != net.vertices.size() )
  {
    for ( std::size_t i = 0; i < net.vertices.size(); ++i )
    {
      if ( pending[i] != 0 )
      {
        throw error( errc::cyclic_network, "cycle through vertex '" + net.vertices[i].name + "'" );
      }
    }
  }
  return order;
}

} // namespace boolnet
