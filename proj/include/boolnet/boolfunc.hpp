/*!
  \file boolfunc.hpp
  \brief Exhaustive tabulation of Boolean networks.
*/

#pragma once

#include "error.hpp"
#include "evaluate.hpp"
#include "network.hpp"
#include "parallel.hpp"
#include "truth_table.hpp"

#include <cstdint>
#include <vector>

namespace boolnet
{

/*! \brief A Boolean function B^n -> B^m as one output word per input index.

  Bit `j` of `rows[i]` is output `j` for the input assignment of index `i`.
*/
struct tabulated_function
{
  unsigned num_inputs{ 0 };
  unsigned num_outputs{ 0 };
  std::vector<std::uint64_t> rows;

  bool operator==( tabulated_function const& ) const = default;

  static tabulated_function from_tables( std::vector<truth_table> const& tables, unsigned num_inputs )
  {
    if ( tables.size() > 64 )
    {
      throw error( errc::too_wide, "more than 64 outputs" );
    }
    tabulated_function f{ num_inputs, static_cast<unsigned>( tables.size() ), {} };
    f.rows.assign( std::uint64_t{ 1 } << num_inputs, 0u );
    for ( unsigned j = 0; j < tables.size(); ++j )
    {
      if ( tables[j].arity() != num_inputs )
      {
        throw error( errc::arity_mismatch, "tables disagree on arity" );
      }
      for ( std::uint64_t i = 0; i < f.rows.size(); ++i )
      {
        f.rows[i] |= std::uint64_t{ tables[j].get( i ) } << j;
      }
    }
    return f;
  }

  std::vector<truth_table> to_tables() const
  {
    std::vector<truth_table> tables( num_outputs, truth_table( num_inputs ) );
    for ( std::uint64_t i = 0; i < rows.size(); ++i )
    {
      for ( unsigned j = 0; j < num_outputs; ++j )
      {
        tables[j].set( i, ( rows[i] >> j ) & 1u );
      }
    }
    return tables;
  }
};

inline constexpr unsigned max_tabulation_inputs = 24;

/*! \brief Tabulates a compiled all-Boolean network over every input assignment. */
inline tabulated_function tabulate_function( compiled_network const& cn, binding const& params = {},
                                             unsigned jobs = 1 )
{
  if ( !cn.all_boolean() )
  {
    throw error( errc::not_boolean, "tabulation needs every edge to be Boolean" );
  }
  auto const& ins = cn.input_slots();
  auto const& outs = cn.output_slots();
  if ( ins.size() > max_tabulation_inputs )
  {
    throw error( errc::too_wide, std::to_string( ins.size() ) + " input bits exceed the tabulation limit of " +
                                     std::to_string( max_tabulation_inputs ) );
  }
  if ( outs.size() > 64 )
  {
    throw error( errc::too_wide, "more than 64 outputs" );
  }

  std::vector<char> base( cn.num_slots(), 0 );
  for ( auto s : cn.param_slots() )
  {
    auto const& id = cn.net().edges[s].id;
    auto it = params.find( id );
    if ( it == params.end() )
    {
      throw error( errc::missing_binding, "no value for parameter '" + id + "'" );
    }
    if ( !std::holds_alternative<bool>( it->second ) )
    {
      throw error( errc::type_mismatch, "parameter '" + id + "' expects bool" );
    }
    base[s] = std::get<bool>( it->second );
  }

  tabulated_function f{ static_cast<unsigned>( ins.size() ), static_cast<unsigned>( outs.size() ), {} };
  f.rows.assign( std::uint64_t{ 1 } << ins.size(), 0u );
  parallel_chunks( f.rows.size(), jobs, [&]( unsigned, std::size_t begin, std::size_t end ) {
    auto values = base;
    for ( auto i = begin; i < end; ++i )
    {
      for ( std::size_t j = 0; j < ins.size(); ++j )
      {
        values[ins[j]] = ( i >> j ) & 1u;
      }
      cn.run_bool( values );
      std::uint64_t row = 0;
      for ( std::size_t j = 0; j < outs.size(); ++j )
      {
        row |= std::uint64_t( values[outs[j]] != 0 ) << j;
      }
      f.rows[i] = row;
    }
  } );
  return f;
}

inline tabulated_function tabulate_function( network const& net, binding const& params = {}, unsigned jobs = 1 )
{
  return tabulate_function( compiled_network( net ), params, jobs );
}

/*! \brief One truth table per primary output, over the network inputs in declaration order. */
inline std::vector<truth_table> tabulate( network const& net, binding const& params = {} )
{
  return tabulate_function( net, params ).to_tables();
}

/*! \brief Single-vertex network realising `t`, inputs x0..x{K-1}, output y. */
inline network table_network( truth_table const& t )
{
  network net;
  vertex v{ "f", {}, {}, { "y" }, function_ref::table( t ) };
  for ( unsigned j = 0; j < t.arity(); ++j )
  {
    auto id = "x" + std::to_string( j );
    net.add_edge( id, data_type::boolean() );
    v.ins.push_back( id );
  }
  net.add_edge( "y", data_type::boolean() );
  net.add_vertex( std::move( v ) );
  net.priout = { "y" };
  return net;
}

} // namespace boolnet
