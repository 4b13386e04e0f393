/*!
  \file simplify.hpp
  \brief Constant propagation and dead-vertex elimination on Boolean netlists.
*/

#pragma once

#include "error.hpp"
#include "evaluate.hpp"
#include "network.hpp"
#include "truth_table.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace boolnet
{

struct simplify_stats
{
  std::size_t vertices_before{ 0 };
  std::size_t vertices_after{ 0 };
  std::size_t constants_found{ 0 };
  std::size_t wires_found{ 0 };
};

namespace detail
{

/* vertices wider than this after cofactoring are only renamed, never re-tabulated */
inline constexpr unsigned max_simplify_fanin = 12;

} // namespace detail

/*! \brief Semantics-preserving cleanup of a Boolean netlist.

  Vertices are visited in topological order.  Constant and duplicated
  inputs are cofactored away; an output that becomes constant, or a copy
  of one of the vertex inputs, is substituted into its consumers.  A
  touched vertex is rebuilt as one truth-table vertex over its remaining
  inputs (or one constant vertex), keeping only outputs still consumed or
  observed.  Finally every vertex not reaching a primary output is
  removed.  Input edges stay declared so the input signature is unchanged.
*/
inline network simplify( network const& g3, simplify_stats* stats = nullptr )
{
  require_valid( g3 );
  for ( auto const& e : g3.edges )
  {
    if ( e.type.kind != type_kind::boolean )
    {
      throw error( errc::not_boolean, "edge '" + e.id + "' is not Boolean" );
    }
  }
  std::set<std::string> const observed( g3.priout.begin(), g3.priout.end() );
  std::map<std::string, bool> constant;
  std::map<std::string, std::string> alias;
  simplify_stats st;
  st.vertices_before = g3.vertices.size();

  auto resolve = [&]( std::string const& id ) {
    auto it = alias.find( id );
    return it == alias.end() ? id : it->second;
  };

  std::vector<vertex> rebuilt;
  for ( auto vi : topo_sort( g3 ) )
  {
    auto const& v = g3.vertices[vi];
    std::vector<std::string> free;
    std::vector<int> slot; /* per input: index into free, or -1 / -2 for constant false / true */
    bool touched = false;
    for ( auto const& in : v.ins )
    {
      auto const r = resolve( in );
      touched |= r != in;
      if ( auto c = constant.find( r ); c != constant.end() )
      {
        slot.push_back( c->second ? -2 : -1 );
        touched = true;
        continue;
      }
      auto const pos = static_cast<std::size_t>( std::distance( free.begin(), std::find( free.begin(), free.end(), r ) ) );
      if ( pos < free.size() )
      {
        touched = true;
      }
      else
      {
        free.push_back( r );
      }
      slot.push_back( static_cast<int>( pos ) );
    }

    if ( free.size() > detail::max_simplify_fanin )
    {
      auto copy = v;
      for ( auto& in : copy.ins )
      {
        in = resolve( in );
      }
      rebuilt.push_back( std::move( copy ) );
      continue;
    }

    /* cofactor tables over the free inputs */
    auto const k = static_cast<unsigned>( free.size() );
    std::vector<truth_table> outs( v.outs.size(), truth_table( k ) );
    std::vector<data_type> const out_types( v.outs.size(), data_type::boolean() );
    std::vector<value> ins( v.ins.size() );
    for ( std::uint64_t i = 0; i < ( std::uint64_t{ 1 } << k ); ++i )
    {
      for ( std::size_t j = 0; j < slot.size(); ++j )
      {
        ins[j] = slot[j] < 0 ? slot[j] == -2 : static_cast<bool>( ( i >> slot[j] ) & 1u );
      }
      auto const ys = apply_leaf( v.func, {}, ins, out_types );
      for ( std::size_t o = 0; o < ys.size(); ++o )
      {
        outs[o].set( i, std::get<bool>( ys[o] ) );
      }
    }

    std::vector<bool> trivial( v.outs.size(), false );
    for ( std::size_t o = 0; o < v.outs.size(); ++o )
    {
      auto const& t = outs[o];
      if ( t.is_const() )
      {
        constant[v.outs[o]] = t.get( 0 );
        trivial[o] = true;
        ++st.constants_found;
        continue;
      }
      for ( unsigned j = 0; j < k; ++j )
      {
        truth_table proj( k );
        for ( std::uint64_t i = 0; i < proj.num_rows(); ++i )
        {
          proj.set( i, ( i >> j ) & 1u );
        }
        if ( t == proj )
        {
          alias[v.outs[o]] = free[j];
          trivial[o] = true;
          ++st.wires_found;
          break;
        }
      }
    }

    bool keep_verbatim = !touched;
    for ( std::size_t o = 0; o < v.outs.size(); ++o )
    {
      if ( trivial[o] && !observed.count( v.outs[o] ) )
      {
        keep_verbatim = false;
      }
    }
    if ( keep_verbatim )
    {
      rebuilt.push_back( v );
      continue;
    }

    vertex nv{ v.name, {}, {}, {}, {} };
    std::vector<truth_table> kept_tables;
    std::vector<value> kept_constants;
    bool all_constant = true;
    for ( std::size_t o = 0; o < v.outs.size(); ++o )
    {
      if ( trivial[o] && !observed.count( v.outs[o] ) )
      {
        continue;
      }
      nv.outs.push_back( v.outs[o] );
      kept_tables.push_back( outs[o] );
      kept_constants.push_back( value{ outs[o].get( 0 ) } );
      all_constant &= outs[o].is_const();
    }
    if ( nv.outs.empty() )
    {
      continue;
    }
    if ( all_constant )
    {
      nv.func = function_ref::constants_of( kept_constants );
    }
    else
    {
      nv.ins = free;
      nv.func = function_ref::tables_of( kept_tables );
    }
    rebuilt.push_back( std::move( nv ) );
  }

  /* dead-vertex elimination, backwards from the primary outputs */
  std::set<std::string> needed( g3.priout.begin(), g3.priout.end() );
  std::vector<bool> live( rebuilt.size(), false );
  for ( auto i = rebuilt.size(); i-- > 0; )
  {
    for ( auto const& o : rebuilt[i].outs )
    {
      if ( needed.count( o ) )
      {
        live[i] = true;
      }
    }
    if ( live[i] )
    {
      needed.insert( rebuilt[i].ins.begin(), rebuilt[i].ins.end() );
    }
  }

  /* declaration order of the original network is kept */
  std::map<std::string, std::size_t> order;
  for ( std::size_t i = 0; i < g3.vertices.size(); ++i )
  {
    order[g3.vertices[i].name] = i;
  }
  std::vector<vertex> kept;
  for ( std::size_t i = 0; i < rebuilt.size(); ++i )
  {
    if ( live[i] )
    {
      kept.push_back( std::move( rebuilt[i] ) );
    }
  }
  std::sort( kept.begin(), kept.end(),
             [&]( vertex const& a, vertex const& b ) { return order.at( a.name ) < order.at( b.name ); } );

  std::set<std::string> declared;
  for ( auto const& id : g3.inputs() )
  {
    declared.insert( id );
  }
  for ( auto const& id : g3.parameters() )
  {
    declared.insert( id );
  }
  for ( auto const& v : kept )
  {
    declared.insert( v.outs.begin(), v.outs.end() );
  }

  network out;
  for ( auto const& e : g3.edges )
  {
    if ( declared.count( e.id ) )
    {
      out.edges.push_back( e );
    }
  }
  out.vertices = std::move( kept );
  out.priout = g3.priout;
  st.vertices_after = out.vertices.size();
  if ( stats )
  {
    *stats = st;
  }
  return out;
}

} // namespace boolnet
