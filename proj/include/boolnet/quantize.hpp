/*!
  \file quantize.hpp
  \brief Real-to-fixed-point quantisation of networks.
*/

#pragma once

#include "error.hpp"
#include "evaluate.hpp"
#include "fixed_point.hpp"
#include "network.hpp"

#include <map>
#include <string>
#include <utility>

namespace boolnet
{

struct quantized_network
{
  network net;
  binding params;
};

inline bool is_quantisable( function_ref const& f )
{
  return f.kind == func_kind::dot || f.kind == func_kind::relu || f.kind == func_kind::constant ||
         f.kind == func_kind::identity;
}

/*! \brief Retypes every edge to its fixed-point format and quantises parameters and constants.

  Leaf functions keep their kind; on fixed-point edges they take their
  fixed-point meaning (exact dot product, one rounding at the output).
  Each parameter is quantised independently to its own edge's format.
*/
inline quantized_network quantize_network( network const& g1, std::map<std::string, fixed_format> const& formats,
                                           binding const& params )
{
  require_valid( g1 );
  quantized_network q;
  q.net = g1;
  for ( auto& e : q.net.edges )
  {
    if ( e.type.kind != type_kind::real )
    {
      throw error( errc::type_mismatch, "edge '" + e.id + "' is not real" );
    }
    auto it = formats.find( e.id );
    if ( it == formats.end() )
    {
      throw error( errc::missing_format, "no fixed-point format for edge '" + e.id + "'" );
    }
    check_format( it->second );
    e.type = data_type::fixed( it->second );
  }
  for ( auto& v : q.net.vertices )
  {
    if ( !is_quantisable( v.func ) )
    {
      throw error( errc::unsupported_leaf, "vertex '" + v.name + "' computes " + v.func.name() +
                                               ", outside the quantisable basis {dot, relu, const, identity}" );
    }
    if ( v.func.kind == func_kind::constant )
    {
      for ( std::size_t k = 0; k < v.outs.size(); ++k )
      {
        v.func.constants[k] = quantize_value( formats.at( v.outs[k] ), as_real( v.func.constants[k] ) );
      }
    }
  }
  for ( auto const& id : g1.parameters() )
  {
    auto it = params.find( id );
    if ( it == params.end() )
    {
      throw error( errc::missing_binding, "no value for parameter '" + id + "'" );
    }
    if ( !std::holds_alternative<double>( it->second ) )
    {
      throw error( errc::type_mismatch, "parameter '" + id + "' is not real" );
    }
    q.params.emplace( id, quantize_value( formats.at( id ), std::get<double>( it->second ) ) );
  }
  return q;
}

/*! \brief Same format on every edge. */
inline quantized_network quantize_network( network const& g1, fixed_format const& fmt, binding const& params )
{
  std::map<std::string, fixed_format> formats;
  for ( auto const& e : g1.edges )
  {
    formats.emplace( e.id, fmt );
  }
  return quantize_network( g1, formats, params );
}

/*! \brief Quantises real input values onto the formats of a fixed-point network's input edges. */
inline binding quantize_inputs( network const& g2, binding const& real_inputs )
{
  binding out;
  for ( auto const& id : g2.inputs() )
  {
    auto it = real_inputs.find( id );
    if ( it == real_inputs.end() )
    {
      throw error( errc::missing_binding, "no value for input '" + id + "'" );
    }
    out.emplace( id, quantize_value( g2.edge_type( id ).format, as_real( it->second ) ) );
  }
  return out;
}

} // namespace boolnet
