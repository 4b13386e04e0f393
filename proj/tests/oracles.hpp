// Independent reference implementations used as test oracles.  None of
// these call into the library's evaluation, tabulation or metric code.

#pragma once

#include <boolnet/evaluate.hpp>
#include <boolnet/network.hpp>
#include <boolnet/types.hpp>

#include <boost/rational.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle
{

using q = boost::rational<long long>;

inline q value_of( boolnet::fixed_value const& v )
{
  return q( v.raw, 1LL << v.format.frac_bits );
}

// round half to even onto the grid of `fmt`, then clamp
inline boolnet::fixed_value to_grid( q const& x, boolnet::fixed_format const& fmt )
{
  q const s = x * q( 1LL << fmt.frac_bits );
  long long fl = s.numerator() / s.denominator();
  if ( q( fl ) > s )
  {
    --fl;
  }
  q const rest = s - q( fl );
  long long k = fl;
  if ( rest > q( 1, 2 ) || ( rest == q( 1, 2 ) && ( fl % 2 != 0 ) ) )
  {
    k = fl + 1;
  }
  k = std::max<long long>( fmt.min_raw(), std::min<long long>( fmt.max_raw(), k ) );
  return { fmt, k };
}

// Demand-driven recursive interpreter over named edges.
class reference_interpreter
{
public:
  reference_interpreter( boolnet::network const& net, boolnet::binding params, boolnet::binding inputs )
      : net_( net ), known_( std::move( params ) )
  {
    for ( auto& [k, v] : inputs )
    {
      known_[k] = v;
    }
  }

  boolnet::value edge( std::string const& id )
  {
    if ( auto it = known_.find( id ); it != known_.end() )
    {
      return it->second;
    }
    for ( auto const& v : net_.vertices )
    {
      for ( std::size_t k = 0; k < v.outs.size(); ++k )
      {
        if ( v.outs[k] == id )
        {
          fire( v );
          return known_.at( id );
        }
      }
    }
    throw std::runtime_error( "unbound edge " + id );
  }

private:
  void fire( boolnet::vertex const& v )
  {
    using boolnet::func_kind;
    std::vector<boolnet::value> p, x;
    for ( auto const& id : v.params )
    {
      p.push_back( edge( id ) );
    }
    for ( auto const& id : v.ins )
    {
      x.push_back( edge( id ) );
    }
    auto const& out_type = net_.edge_type( v.outs[0] );
    auto const& f = v.func;
    std::vector<boolnet::value> y;
    switch ( f.kind )
    {
    case func_kind::dot:
      if ( out_type.kind == boolnet::type_kind::fixed )
      {
        q acc( 0 );
        for ( std::size_t i = 0; i < f.arity; ++i )
        {
          acc += value_of( std::get<boolnet::fixed_value>( p[i] ) ) * value_of( std::get<boolnet::fixed_value>( x[i] ) );
        }
        if ( f.bias )
        {
          acc += value_of( std::get<boolnet::fixed_value>( p[f.arity] ) );
        }
        y.push_back( to_grid( acc, out_type.format ) );
      }
      else
      {
        double acc = 0;
        for ( std::size_t i = 0; i < f.arity; ++i )
        {
          acc += std::get<double>( p[i] ) * std::get<double>( x[i] );
        }
        if ( f.bias )
        {
          acc += std::get<double>( p[f.arity] );
        }
        y.push_back( acc );
      }
      break;
    case func_kind::relu:
      if ( out_type.kind == boolnet::type_kind::fixed )
      {
        auto const a = value_of( std::get<boolnet::fixed_value>( x[0] ) );
        y.push_back( to_grid( a < 0 ? q( 0 ) : a, out_type.format ) );
      }
      else
      {
        auto const a = std::get<double>( x[0] );
        y.push_back( a > 0 ? a : 0.0 );
      }
      break;
    case func_kind::sigmoid:
      y.push_back( 2.0 / ( 1.0 + std::exp( -std::get<double>( x[0] ) ) ) - 1.0 );
      break;
    case func_kind::identity:
      if ( out_type.kind == boolnet::type_kind::fixed )
      {
        y.push_back( to_grid( value_of( std::get<boolnet::fixed_value>( x[0] ) ), out_type.format ) );
      }
      else
      {
        y.push_back( x[0] );
      }
      break;
    case func_kind::full_adder: {
      int const s = std::get<bool>( x[0] ) + std::get<bool>( x[1] ) + std::get<bool>( x[2] );
      y.push_back( s % 2 == 1 );
      y.push_back( s >= 2 );
      break;
    }
    case func_kind::table: {
      std::uint64_t index = 0;
      for ( std::size_t j = 0; j < x.size(); ++j )
      {
        index += std::uint64_t( std::get<bool>( x[j] ) ) << j;
      }
      for ( auto const& t : f.tables )
      {
        y.push_back( t.str()[index] == '1' );
      }
      break;
    }
    case func_kind::bnn: {
      int sum = 0;
      for ( std::size_t j = 0; j < x.size(); ++j )
      {
        int const xj = x[j].index() == 1 ? ( std::get<bool>( x[j] ) ? 1 : -1 ) : std::get<boolnet::pm1_value>( x[j] ).v;
        sum += f.weights[j] * xj;
      }
      bool const fire = sum >= f.threshold;
      if ( out_type.kind == boolnet::type_kind::pm1 )
      {
        y.push_back( boolnet::pm1_value{ fire ? 1 : -1 } );
      }
      else
      {
        y.push_back( fire );
      }
      break;
    }
    case func_kind::constant:
      y = f.constants;
      break;
    }
    for ( std::size_t k = 0; k < v.outs.size(); ++k )
    {
      known_[v.outs[k]] = y[k];
    }
  }

  boolnet::network const& net_;
  boolnet::binding known_;
};

inline boolnet::binding reference_eval( boolnet::network const& net, boolnet::binding const& params,
                                        boolnet::binding const& inputs )
{
  reference_interpreter r( net, params, inputs );
  boolnet::binding out;
  for ( auto const& id : net.priout )
  {
    out[id] = r.edge( id );
  }
  return out;
}

// Output string of a Boolean network over all assignments of its inputs
// (input j = bit j of the row index); one string per primary output.
inline std::vector<std::string> brute_tabulate( boolnet::network const& net )
{
  auto const ins = net.inputs();
  std::vector<std::string> out( net.priout.size() );
  for ( std::uint64_t i = 0; i < ( std::uint64_t{ 1 } << ins.size() ); ++i )
  {
    boolnet::binding b;
    for ( std::size_t j = 0; j < ins.size(); ++j )
    {
      b[ins[j]] = bool( ( i >> j ) & 1u );
    }
    auto const y = reference_eval( net, {}, b );
    for ( std::size_t k = 0; k < net.priout.size(); ++k )
    {
      out[k] += std::get<bool>( y.at( net.priout[k] ) ) ? '1' : '0';
    }
  }
  return out;
}

// True iff output depends on input j somewhere, reading bits as a string.
inline bool depends_on( std::string const& bits, unsigned j )
{
  for ( std::size_t i = 0; i < bits.size(); ++i )
  {
    if ( bits[i] != bits[i ^ ( std::size_t{ 1 } << j )] )
    {
      return true;
    }
  }
  return false;
}

// All K-input tables (as strings) depending on every input.
inline std::vector<std::string> brute_nondegenerate( unsigned k )
{
  std::vector<std::string> r;
  std::size_t const rows = std::size_t{ 1 } << k;
  for ( std::uint64_t m = 0; m < ( std::uint64_t{ 1 } << rows ); ++m )
  {
    std::string s;
    for ( std::size_t i = 0; i < rows; ++i )
    {
      s += ( ( m >> i ) & 1u ) ? '1' : '0';
    }
    bool all = true;
    for ( unsigned j = 0; j < k; ++j )
    {
      all &= depends_on( s, j );
    }
    if ( all )
    {
      r.push_back( s );
    }
  }
  std::sort( r.begin(), r.end() );
  return r;
}

inline std::uint64_t gray( std::uint64_t v )
{
  return v ^ ( v >> 1 );
}

// Brute-force max of e/d over unordered pairs of a function on integers
// given as a table `f` over domain indices, with caller-supplied distances.
inline std::optional<q> brute_lipschitz( std::size_t n, std::function<long long( std::size_t, std::size_t )> d,
                                         std::function<long long( std::size_t, std::size_t )> e )
{
  q best( 0 );
  for ( std::size_t a = 0; a < n; ++a )
  {
    for ( std::size_t b = a + 1; b < n; ++b )
    {
      auto const dd = d( a, b ), ee = e( a, b );
      if ( dd == 0 )
      {
        if ( ee > 0 )
        {
          return std::nullopt;
        }
        continue;
      }
      best = std::max( best, q( ee, dd ) );
    }
  }
  return best;
}

} // namespace oracle
