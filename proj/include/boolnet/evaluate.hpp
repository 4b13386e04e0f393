/*!
  \file evaluate.hpp
  \brief Leaf semantics and evaluation of networks.
*/

#pragma once

#include "error.hpp"
#include "network.hpp"
#include "types.hpp"

#include <cmath>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace boolnet
{

using binding = std::map<std::string, value>;

namespace detail
{

inline void expect_count( std::size_t got, std::size_t want, char const* what, function_ref const& f )
{
  if ( got != want )
  {
    throw error( errc::arity_mismatch, f.name() + " expects " + std::to_string( want ) + " " + what + ", got " +
                                           std::to_string( got ) );
  }
}

inline bool get_bool( value const& v, function_ref const& f )
{
  if ( !std::holds_alternative<bool>( v ) )
  {
    throw error( errc::type_mismatch, f.name() + " expects Boolean inputs" );
  }
  return std::get<bool>( v );
}

inline double get_real( value const& v, function_ref const& f )
{
  if ( !std::holds_alternative<double>( v ) )
  {
    throw error( errc::type_mismatch, f.name() + " expects real inputs" );
  }
  return std::get<double>( v );
}

inline fixed_value const& get_fixed( value const& v, function_ref const& f )
{
  if ( !std::holds_alternative<fixed_value>( v ) )
  {
    throw error( errc::type_mismatch, f.name() + " expects fixed-point inputs" );
  }
  return std::get<fixed_value>( v );
}

inline fixed_format const& fixed_out( std::span<const data_type> out_types, function_ref const& f )
{
  if ( out_types.size() != 1 || out_types[0].kind != type_kind::fixed )
  {
    throw error( errc::type_mismatch, f.name() + " on fixed-point inputs needs a fixed-point output edge" );
  }
  return out_types[0].format;
}

inline int bnn_sum( function_ref const& f, std::span<const value> ins )
{
  int sum = 0;
  for ( std::size_t i = 0; i < ins.size(); ++i )
  {
    int x;
    if ( std::holds_alternative<bool>( ins[i] ) )
    {
      x = std::get<bool>( ins[i] ) ? 1 : -1;
    }
    else if ( std::holds_alternative<pm1_value>( ins[i] ) )
    {
      x = std::get<pm1_value>( ins[i] ).v;
    }
    else
    {
      throw error( errc::type_mismatch, f.name() + " expects Boolean or +-1 inputs" );
    }
    sum += f.weights[i] * x;
  }
  return sum;
}

} // namespace detail

/*! \brief Applies a leaf function.

  `out_types` are the types of the vertex's output edges; fixed-point
  results are rounded (ties to even) and saturated onto that grid, and
  BNN outputs are produced as Booleans or +-1 values to match it.
  Inside a fixed-point dot product all products and sums are exact.
*/
inline std::vector<value> apply_leaf( function_ref const& f, std::span<const value> params, std::span<const value> ins,
                                      std::span<const data_type> out_types )
{
  using detail::expect_count;
  expect_count( params.size(), f.num_params(), "parameters", f );
  if ( auto n = f.num_ins() )
  {
    expect_count( ins.size(), *n, "inputs", f );
  }
  expect_count( out_types.size(), f.num_outs(), "outputs", f );

  switch ( f.kind )
  {
  case func_kind::dot: {
    if ( !ins.empty() && std::holds_alternative<fixed_value>( ins[0] ) )
    {
      auto const& fmt = detail::fixed_out( out_types, f );
      unsigned frac = 0;
      for ( std::size_t i = 0; i < f.arity; ++i )
      {
        frac = std::max( frac, detail::get_fixed( params[i], f ).format.frac_bits +
                                   detail::get_fixed( ins[i], f ).format.frac_bits );
      }
      if ( f.bias )
      {
        frac = std::max( frac, detail::get_fixed( params[f.arity], f ).format.frac_bits );
      }
      __int128 acc = 0;
      for ( std::size_t i = 0; i < f.arity; ++i )
      {
        auto const& w = std::get<fixed_value>( params[i] );
        auto const& x = std::get<fixed_value>( ins[i] );
        __int128 const p = __int128{ w.raw } * x.raw;
        acc += p << ( frac - w.format.frac_bits - x.format.frac_bits );
      }
      if ( f.bias )
      {
        auto const& b = std::get<fixed_value>( params[f.arity] );
        acc += __int128{ b.raw } << ( frac - b.format.frac_bits );
      }
      return { rescale( acc, frac, fmt ) };
    }
    double acc = 0.0;
    for ( std::size_t i = 0; i < f.arity; ++i )
    {
      acc += detail::get_real( params[i], f ) * detail::get_real( ins[i], f );
    }
    if ( f.bias )
    {
      acc += detail::get_real( params[f.arity], f );
    }
    return { acc };
  }
  case func_kind::relu:
    if ( std::holds_alternative<fixed_value>( ins[0] ) )
    {
      auto const& x = std::get<fixed_value>( ins[0] );
      return { rescale( std::max<std::int64_t>( x.raw, 0 ), x.format.frac_bits, detail::fixed_out( out_types, f ) ) };
    }
    return { std::max( 0.0, detail::get_real( ins[0], f ) ) };
  case func_kind::sigmoid:
    return { 2.0 / ( 1.0 + std::exp( -detail::get_real( ins[0], f ) ) ) - 1.0 };
  case func_kind::full_adder: {
    bool const a = detail::get_bool( ins[0], f );
    bool const b = detail::get_bool( ins[1], f );
    bool const c = detail::get_bool( ins[2], f );
    return { value{ a != ( b != c ) }, value{ ( a && b ) || ( c && ( a || b ) ) } };
  }
  case func_kind::table: {
    std::uint64_t index = 0;
    for ( std::size_t j = 0; j < ins.size(); ++j )
    {
      index |= std::uint64_t{ detail::get_bool( ins[j], f ) } << j;
    }
    std::vector<value> out;
    out.reserve( f.tables.size() );
    for ( auto const& t : f.tables )
    {
      out.emplace_back( t.get( index ) );
    }
    return out;
  }
  case func_kind::bnn: {
    bool const fires = detail::bnn_sum( f, ins ) >= f.threshold;
    if ( out_types[0].kind == type_kind::pm1 )
    {
      return { pm1_value{ fires ? 1 : -1 } };
    }
    return { value{ fires } };
  }
  case func_kind::identity:
    if ( std::holds_alternative<fixed_value>( ins[0] ) && out_types[0].kind == type_kind::fixed )
    {
      return { rescale( std::get<fixed_value>( ins[0] ), out_types[0].format ) };
    }
    return { ins[0] };
  case func_kind::constant:
    return f.constants;
  }
  throw error( errc::unsupported_leaf, "unknown leaf kind" );
}

/*! \brief A validated network with resolved edge slots, ready for repeated evaluation.

  Evaluation never mutates the object, so one instance may be shared by
  concurrent callers.
*/
class compiled_network
{
public:
  explicit compiled_network( network net ) : net_( std::move( net ) )
  {
    require_valid( net_ );
    for ( std::size_t i = 0; i < net_.edges.size(); ++i )
    {
      slot_.emplace( net_.edges[i].id, i );
      types_.push_back( net_.edges[i].type );
    }
    for ( auto vi : topo_sort( net_ ) )
    {
      auto const& v = net_.vertices[vi];
      step s{ &v.func, slots( v.params ), slots( v.ins ), slots( v.outs ), {} };
      for ( auto o : s.outs )
      {
        s.out_types.push_back( types_[o] );
      }
      steps_.push_back( std::move( s ) );
    }
    for ( auto const& id : net_.inputs() )
    {
      inputs_.push_back( slot_.at( id ) );
    }
    for ( auto const& id : net_.parameters() )
    {
      params_.push_back( slot_.at( id ) );
    }
    outputs_ = slots( net_.priout );
    boolean_ = std::all_of( types_.begin(), types_.end(), []( auto const& t ) { return t.kind == type_kind::boolean; } );
  }

  network const& net() const { return net_; }
  std::vector<std::size_t> const& input_slots() const { return inputs_; }
  std::vector<std::size_t> const& param_slots() const { return params_; }
  std::vector<std::size_t> const& output_slots() const { return outputs_; }
  data_type const& slot_type( std::size_t slot ) const { return types_[slot]; }
  std::size_t slot_of( std::string const& id ) const { return slot_.at( id ); }
  std::size_t num_slots() const { return types_.size(); }
  bool all_boolean() const { return boolean_; }

  /*! \brief Runs every vertex in order over a full slot vector. */
  void run( std::vector<value>& values ) const
  {
    std::vector<value> p, x;
    for ( auto const& s : steps_ )
    {
      p.clear();
      x.clear();
      for ( auto i : s.params )
      {
        p.push_back( values[i] );
      }
      for ( auto i : s.ins )
      {
        x.push_back( values[i] );
      }
      auto out = apply_leaf( *s.func, p, x, s.out_types );
      for ( std::size_t k = 0; k < s.outs.size(); ++k )
      {
        if ( !type_checks( out[k], s.out_types[k] ) )
        {
          throw error( errc::type_mismatch, "value produced on '" + net_.edges[s.outs[k]].id + "' is not of type " +
                                                s.out_types[k].str() );
        }
        values[s.outs[k]] = std::move( out[k] );
      }
    }
  }

  /*! \brief Boolean-only fast path over a byte-per-slot vector. */
  void run_bool( std::vector<char>& values ) const
  {
    for ( auto const& s : steps_ )
    {
      auto const& f = *s.func;
      switch ( f.kind )
      {
      case func_kind::full_adder: {
        bool const a = values[s.ins[0]], b = values[s.ins[1]], c = values[s.ins[2]];
        values[s.outs[0]] = a != ( b != c );
        values[s.outs[1]] = ( a && b ) || ( c && ( a || b ) );
        break;
      }
      case func_kind::table: {
        std::uint64_t index = 0;
        for ( std::size_t j = 0; j < s.ins.size(); ++j )
        {
          index |= std::uint64_t( values[s.ins[j]] != 0 ) << j;
        }
        for ( std::size_t k = 0; k < s.outs.size(); ++k )
        {
          values[s.outs[k]] = f.tables[k].get( index );
        }
        break;
      }
      case func_kind::bnn: {
        int sum = 0;
        for ( std::size_t j = 0; j < s.ins.size(); ++j )
        {
          sum += f.weights[j] * ( values[s.ins[j]] ? 1 : -1 );
        }
        values[s.outs[0]] = sum >= f.threshold;
        break;
      }
      case func_kind::identity:
        values[s.outs[0]] = values[s.ins[0]];
        break;
      case func_kind::constant:
        for ( std::size_t k = 0; k < s.outs.size(); ++k )
        {
          values[s.outs[k]] = std::get<bool>( f.constants[k] );
        }
        break;
      default:
        throw error( errc::not_boolean, f.name() + " is not a Boolean leaf" );
      }
    }
  }

  /*! \brief Evaluates with named bindings and returns the primary outputs. */
  binding evaluate( binding const& params, binding const& inputs ) const
  {
    std::vector<value> values( types_.size() );
    load( params, params_, "parameter", values );
    load( inputs, inputs_, "input", values );
    run( values );
    binding result;
    for ( auto o : outputs_ )
    {
      result.emplace( net_.edges[o].id, values[o] );
    }
    return result;
  }

private:
  struct step
  {
    function_ref const* func;
    std::vector<std::size_t> params, ins, outs;
    std::vector<data_type> out_types;
  };

  std::vector<std::size_t> slots( std::vector<std::string> const& ids ) const
  {
    std::vector<std::size_t> r;
    r.reserve( ids.size() );
    for ( auto const& id : ids )
    {
      r.push_back( slot_.at( id ) );
    }
    return r;
  }

  void load( binding const& b, std::vector<std::size_t> const& wanted, char const* what, std::vector<value>& values ) const
  {
    for ( auto s : wanted )
    {
      auto const& id = net_.edges[s].id;
      auto it = b.find( id );
      if ( it == b.end() )
      {
        throw error( errc::missing_binding, std::string( "no value for " ) + what + " '" + id + "'" );
      }
      if ( !type_checks( it->second, types_[s] ) )
      {
        throw error( errc::type_mismatch, std::string( what ) + " '" + id + "' expects " + types_[s].str() );
      }
      values[s] = it->second;
    }
    if ( b.size() != wanted.size() )
    {
      for ( auto const& [id, _] : b )
      {
        auto it = slot_.find( id );
        if ( it == slot_.end() || std::find( wanted.begin(), wanted.end(), it->second ) == wanted.end() )
        {
          throw error( errc::arity_mismatch, std::string( "binding names '" ) + id + "', which is not a network " + what );
        }
      }
    }
  }

  network net_;
  std::unordered_map<std::string, std::size_t> slot_;
  std::vector<data_type> types_;
  std::vector<step> steps_;
  std::vector<std::size_t> inputs_, params_, outputs_;
  bool boolean_{ false };
};

/*! \brief The implemented function of `net` at the given parameters and inputs, restricted to priout. */
inline binding evaluate( network const& net, binding const& params, binding const& inputs )
{
  return compiled_network( net ).evaluate( params, inputs );
}

} // namespace boolnet
