/*!
  \file estimate.hpp
  \brief Sampled distance between two functions, and a worst-case bound on
         the error introduced by quantising a real network.
*/

#pragma once

#include "error.hpp"
#include "evaluate.hpp"
#include "fixed_point.hpp"
#include "network.hpp"
#include "quantize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace boolnet
{

/*! \brief A function R^n -> R^m seen through real vectors. */
struct evaluable
{
  std::size_t in_arity{ 0 };
  std::size_t out_arity{ 0 };
  std::function<std::vector<double>( std::vector<double> const& )> fn;
};

enum class loss_kind
{
  abs_diff, /* sum of |y_j - y'_j| */
  zero_one  /* 1 iff any output differs */
};

struct interval
{
  double lo{ 0.0 };
  double hi{ 0.0 };

  double magnitude() const { return std::max( std::abs( lo ), std::abs( hi ) ); }
};

struct sample_spec
{
  std::size_t count{ 1000 };
  std::uint64_t seed{ 0 };
  bool bit_patterns{ false }; /* inputs uniform over {0, 1} instead of the box */
  bool exhaustive{ false };   /* every bit pattern once; ignores count and seed */
  std::vector<interval> box;  /* one range per input, or a single range for all */
};

inline double loss( loss_kind kind, std::vector<double> const& a, std::vector<double> const& b )
{
  if ( kind == loss_kind::zero_one )
  {
    return a == b ? 0.0 : 1.0;
  }
  double s = 0.0;
  for ( std::size_t j = 0; j < a.size(); ++j )
  {
    s += std::abs( a[j] - b[j] );
  }
  return s;
}

/*! \brief The sample points of `spec` for `n` inputs, in generation order. */
inline std::vector<std::vector<double>> draw_samples( sample_spec const& spec, std::size_t n )
{
  std::vector<std::vector<double>> xs;
  if ( spec.exhaustive )
  {
    if ( n > 24 )
    {
      throw error( errc::too_wide, "exhaustive sampling limited to 24 inputs" );
    }
    for ( std::uint64_t i = 0; i < ( std::uint64_t{ 1 } << n ); ++i )
    {
      std::vector<double> x( n );
      for ( std::size_t j = 0; j < n; ++j )
      {
        x[j] = static_cast<double>( ( i >> j ) & 1u );
      }
      xs.push_back( std::move( x ) );
    }
    return xs;
  }
  if ( !spec.bit_patterns && spec.box.size() != 1 && spec.box.size() != n )
  {
    throw error( errc::signature_mismatch, "sample box has " + std::to_string( spec.box.size() ) + " ranges for " +
                                               std::to_string( n ) + " inputs" );
  }
  std::mt19937_64 rng( spec.seed );
  std::uniform_real_distribution<double> unit( 0.0, 1.0 );
  for ( std::size_t s = 0; s < spec.count; ++s )
  {
    std::vector<double> x( n );
    for ( std::size_t j = 0; j < n; ++j )
    {
      if ( spec.bit_patterns )
      {
        x[j] = static_cast<double>( rng() & 1u );
      }
      else
      {
        auto const& r = spec.box.size() == 1 ? spec.box[0] : spec.box[j];
        x[j] = r.lo + ( r.hi - r.lo ) * unit( rng );
      }
    }
    xs.push_back( std::move( x ) );
  }
  return xs;
}

/*! \brief Mean loss between fa and fb over the samples of `spec`. */
inline double estimate_metric( evaluable const& fa, evaluable const& fb, loss_kind kind, sample_spec const& spec )
{
  if ( fa.in_arity != fb.in_arity || fa.out_arity != fb.out_arity )
  {
    throw error( errc::signature_mismatch, "functions differ in signature (" + std::to_string( fa.in_arity ) + " -> " +
                                               std::to_string( fa.out_arity ) + " vs " + std::to_string( fb.in_arity ) +
                                               " -> " + std::to_string( fb.out_arity ) + ")" );
  }
  auto const xs = draw_samples( spec, fa.in_arity );
  if ( xs.empty() )
  {
    return 0.0;
  }
  double sum = 0.0;
  for ( auto const& x : xs )
  {
    sum += loss( kind, fa.fn( x ), fb.fn( x ) );
  }
  return sum / static_cast<double>( xs.size() );
}

namespace detail
{

inline std::vector<double> outputs_as_reals( network const& net, binding const& out )
{
  std::vector<double> y;
  for ( auto const& id : net.priout )
  {
    y.push_back( as_real( out.at( id ) ) );
  }
  return y;
}

} // namespace detail

/*! \brief Real network; inputs in declaration order, outputs in priout order. */
inline evaluable real_evaluable( network const& g1, binding params )
{
  auto cn = std::make_shared<compiled_network>( g1 );
  auto const ids = g1.inputs();
  return { ids.size(), g1.priout.size(), [cn, ids, params = std::move( params )]( std::vector<double> const& x ) {
            binding in;
            for ( std::size_t j = 0; j < ids.size(); ++j )
            {
              in.emplace( ids[j], x[j] );
            }
            return detail::outputs_as_reals( cn->net(), cn->evaluate( params, in ) );
          } };
}

/*! \brief Fixed-point network fed through quantize_value on each input. */
inline evaluable fixed_evaluable( network const& g2, binding qparams )
{
  auto cn = std::make_shared<compiled_network>( g2 );
  auto const ids = g2.inputs();
  return { ids.size(), g2.priout.size(), [cn, ids, qparams = std::move( qparams )]( std::vector<double> const& x ) {
            binding in;
            for ( std::size_t j = 0; j < ids.size(); ++j )
            {
              in.emplace( ids[j], quantize_value( cn->net().edge_type( ids[j] ).format, x[j] ) );
            }
            return detail::outputs_as_reals( cn->net(), cn->evaluate( qparams, in ) );
          } };
}

/*! \brief Boolean network; an input is true iff it is at least 1/2, outputs are 0 or 1. */
inline evaluable boolean_evaluable( network const& net )
{
  auto cn = std::make_shared<compiled_network>( net );
  auto const ids = net.inputs();
  return { ids.size(), net.priout.size(), [cn, ids]( std::vector<double> const& x ) {
            binding in;
            for ( std::size_t j = 0; j < ids.size(); ++j )
            {
              in.emplace( ids[j], x[j] >= 0.5 );
            }
            return detail::outputs_as_reals( cn->net(), cn->evaluate( {}, in ) );
          } };
}

/*! \brief Bound on |[[G2]](x) - [[G1]](x)| per output, for x in `box` (one range per input).

  Real ranges of every edge are propagated by interval arithmetic through
  G1.  Each edge's error bound combines the error of its operands with
  half an ulp of rounding at the edge and any saturation excess.  A
  parameter or input contributes half an ulp of its format (the worst case
  over all values), so the bound depends on the data only through ranges.
*/
inline std::vector<double> worst_case_error_bound( network const& g1, std::map<std::string, fixed_format> const& formats,
                                                   binding const& params, std::vector<interval> const& box )
{
  require_valid( g1 );
  auto const ids = g1.inputs();
  if ( box.size() != ids.size() && box.size() != 1 )
  {
    throw error( errc::signature_mismatch, "box has " + std::to_string( box.size() ) + " ranges for " +
                                               std::to_string( ids.size() ) + " inputs" );
  }
  auto fmt = [&]( std::string const& id ) -> fixed_format const& {
    auto it = formats.find( id );
    if ( it == formats.end() )
    {
      throw error( errc::missing_format, "no fixed-point format for edge '" + id + "'" );
    }
    return it->second;
  };
  /* error of clamping a value range into the format's range */
  auto excess = []( interval const& r, fixed_format const& f ) {
    auto const lo = f.min_raw() * f.ulp(), hi = f.max_raw() * f.ulp();
    return std::max( { 0.0, r.hi - hi, lo - r.lo } );
  };

  std::map<std::string, interval> range;
  std::map<std::string, double> err;
  for ( std::size_t j = 0; j < ids.size(); ++j )
  {
    auto const& r = box.size() == 1 ? box[0] : box[j];
    auto const& f = fmt( ids[j] );
    range[ids[j]] = r;
    err[ids[j]] = f.ulp() / 2 + excess( r, f );
  }
  for ( auto const& id : g1.parameters() )
  {
    auto it = params.find( id );
    if ( it == params.end() )
    {
      throw error( errc::missing_binding, "no value for parameter '" + id + "'" );
    }
    auto const p = as_real( it->second );
    auto const& f = fmt( id );
    range[id] = { p, p };
    err[id] = f.ulp() / 2 + excess( { p, p }, f );
  }

  for ( auto vi : topo_sort( g1 ) )
  {
    auto const& v = g1.vertices[vi];
    auto const& f = v.func;
    switch ( f.kind )
    {
    case func_kind::dot: {
      interval acc{ 0.0, 0.0 };
      double e = 0.0;
      for ( std::size_t i = 0; i < f.arity; ++i )
      {
        auto const& w = range.at( v.params[i] );
        auto const& x = range.at( v.ins[i] );
        auto const ew = err.at( v.params[i] ), ex = err.at( v.ins[i] );
        auto const c = { w.lo * x.lo, w.lo * x.hi, w.hi * x.lo, w.hi * x.hi };
        acc.lo += std::min( c );
        acc.hi += std::max( c );
        /* |w'x' - wx| <= |w| ex + |x| ew + ew ex */
        e += w.magnitude() * ex + x.magnitude() * ew + ew * ex;
      }
      if ( f.bias )
      {
        auto const& b = range.at( v.params[f.arity] );
        acc.lo += b.lo;
        acc.hi += b.hi;
        e += err.at( v.params[f.arity] );
      }
      auto const& out = fmt( v.outs[0] );
      range[v.outs[0]] = acc;
      err[v.outs[0]] = e + out.ulp() / 2 + excess( acc, out );
      break;
    }
    case func_kind::relu:
    case func_kind::identity: {
      auto const& x = range.at( v.ins[0] );
      auto const& out = fmt( v.outs[0] );
      interval r = f.kind == func_kind::relu ? interval{ std::max( 0.0, x.lo ), std::max( 0.0, x.hi ) } : x;
      auto const rounding = fmt( v.ins[0] ).frac_bits > out.frac_bits ? out.ulp() / 2 : 0.0;
      range[v.outs[0]] = r;
      err[v.outs[0]] = err.at( v.ins[0] ) + rounding + excess( r, out );
      break;
    }
    case func_kind::constant:
      for ( std::size_t k = 0; k < v.outs.size(); ++k )
      {
        auto const c = as_real( f.constants[k] );
        auto const& out = fmt( v.outs[k] );
        range[v.outs[k]] = { c, c };
        err[v.outs[k]] = out.ulp() / 2 + excess( { c, c }, out );
      }
      break;
    default:
      throw error( errc::unsupported_leaf, "vertex '" + v.name + "' computes " + f.name() +
                                               ", outside the quantisable basis {dot, relu, const, identity}" );
    }
  }
  std::vector<double> bound;
  for ( auto const& id : g1.priout )
  {
    bound.push_back( err.at( id ) );
  }
  return bound;
}

} // namespace boolnet
