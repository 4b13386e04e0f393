/*!
  \file synth.hpp
  \brief Core generation of fixed-point networks into Boolean netlists, and
         exhaustive checking that the two commute through the bit encodings.

  Each fixed-point edge `e` of T bits becomes T Boolean edges `e[0]`
  (least significant) .. `e[T-1]`, carrying the raw integer in two's
  complement (signed formats) or plain binary (unsigned formats).
  Netlist inputs are the words of the network inputs, in input order;
  primary outputs are the words of the primary outputs, in priout order.
*/

#pragma once

#include "coding.hpp"
#include "error.hpp"
#include "evaluate.hpp"
#include "fixed_point.hpp"
#include "netlist_builder.hpp"
#include "network.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace boolnet
{

/*! \brief Bit-level view of one fixed-point edge in a netlist. */
struct port
{
  std::string edge;
  fixed_format format;
  std::vector<std::string> bits; /* LSB first */

  encoding code() const
  {
    return format.is_signed ? encoding::twos_complement( format.total_bits ) : encoding::std_binary( format.total_bits );
  }
};

struct synth_result
{
  network netlist;
  std::vector<port> inputs;
  std::vector<port> outputs;

  unsigned input_width() const
  {
    unsigned w = 0;
    for ( auto const& p : inputs )
    {
      w += p.format.total_bits;
    }
    return w;
  }
};

inline std::string bit_name( std::string const& edge, unsigned i )
{
  return edge + "[" + std::to_string( i ) + "]";
}

/*! \brief Ports of a netlist that follows the `edge[i]` naming convention for `g2`'s inputs and outputs. */
inline std::pair<std::vector<port>, std::vector<port>> ports_by_name( network const& g2 )
{
  auto make = [&]( std::string const& id ) {
    auto const& t = g2.edge_type( id );
    if ( t.kind != type_kind::fixed )
    {
      throw error( errc::type_mismatch, "edge '" + id + "' is not fixed-point" );
    }
    port p{ id, t.format, {} };
    for ( unsigned i = 0; i < t.format.total_bits; ++i )
    {
      p.bits.push_back( bit_name( id, i ) );
    }
    return p;
  };
  std::vector<port> ins, outs;
  for ( auto const& id : g2.inputs() )
  {
    ins.push_back( make( id ) );
  }
  for ( auto const& id : g2.priout )
  {
    outs.push_back( make( id ) );
  }
  return { ins, outs };
}

namespace detail
{

/* a fixed-point quantity as bits: value = word * 2^-frac */
struct fword
{
  std::vector<std::string> bits; /* LSB first */
  bool is_signed{ true };
  unsigned frac{ 0 };

  std::size_t width() const { return bits.size(); }
};

class core_generator
{
public:
  explicit core_generator( netlist_builder& b ) : b_( b ) {}

  fword constant( fixed_value const& v )
  {
    fword w{ {}, v.format.is_signed, v.format.frac_bits };
    auto const raw = static_cast<std::uint64_t>( v.raw );
    for ( unsigned i = 0; i < v.format.total_bits; ++i )
    {
      w.bits.push_back( b_.constant( ( raw >> i ) & 1u ) );
    }
    return w;
  }

  fword extend( fword w, std::size_t width )
  {
    auto const fill = w.is_signed ? w.bits.back() : b_.constant( false );
    while ( w.bits.size() < width )
    {
      w.bits.push_back( fill );
    }
    return w;
  }

  /* unsigned -> signed by one leading zero */
  fword make_signed( fword w )
  {
    if ( !w.is_signed )
    {
      w.bits.push_back( b_.constant( false ) );
      w.is_signed = true;
    }
    return w;
  }

  fword align( fword w, unsigned frac )
  {
    if ( frac > w.frac )
    {
      std::vector<std::string> low( frac - w.frac, b_.constant( false ) );
      w.bits.insert( w.bits.begin(), low.begin(), low.end() );
      w.frac = frac;
    }
    return w;
  }

  /* shift-add array multiplier, exact */
  fword multiply( fword a, fword c )
  {
    if ( a.is_signed != c.is_signed )
    {
      a = make_signed( a );
      c = make_signed( c );
    }
    auto const width = a.width() + c.width();
    a = extend( a, width );
    c = extend( c, width );
    fword acc{ {}, a.is_signed, a.frac + c.frac };
    for ( std::size_t j = 0; j < width; ++j )
    {
      acc.bits.push_back( b_.and_( a.bits[j], c.bits[0] ) );
    }
    for ( std::size_t i = 1; i < width; ++i )
    {
      /* partial product i is (a << i) & c_i, truncated to `width` bits */
      netlist_builder::word hi( acc.bits.begin() + i, acc.bits.end() ), pp;
      for ( std::size_t j = 0; j + i < width; ++j )
      {
        pp.push_back( b_.and_( a.bits[j], c.bits[i] ) );
      }
      auto sum = b_.ripple_add( hi, pp, b_.constant( false ) );
      std::copy( sum.begin(), sum.end() - 1, acc.bits.begin() + i );
    }
    return acc;
  }

  fword add( fword a, fword c )
  {
    if ( a.is_signed != c.is_signed )
    {
      a = make_signed( a );
      c = make_signed( c );
    }
    auto const frac = std::max( a.frac, c.frac );
    a = align( a, frac );
    c = align( c, frac );
    auto const width = std::max( a.width(), c.width() ) + 1;
    a = extend( a, width );
    c = extend( c, width );
    auto sum = b_.ripple_add( a.bits, c.bits, b_.constant( false ) );
    sum.pop_back();
    return { sum, a.is_signed, frac };
  }

  /* round half to even onto `fmt`'s grid, then saturate */
  std::vector<std::string> round_to( fword x, fixed_format const& fmt )
  {
    if ( x.frac > fmt.frac_bits )
    {
      auto const s = x.frac - fmt.frac_bits;
      x = extend( x, s + 1 );
      auto const guard = x.bits[s - 1];
      auto const sticky = b_.or_tree( std::vector<std::string>( x.bits.begin(), x.bits.begin() + ( s - 1 ) ) );
      fword kept{ std::vector<std::string>( x.bits.begin() + s, x.bits.end() ), x.is_signed, fmt.frac_bits };
      auto const round_up = b_.and_( guard, b_.or_( sticky, kept.bits[0] ) );
      kept = extend( kept, kept.width() + 1 );
      netlist_builder::word zero( kept.width(), b_.constant( false ) );
      auto sum = b_.ripple_add( kept.bits, zero, round_up );
      sum.pop_back();
      x = { sum, kept.is_signed, fmt.frac_bits };
    }
    else
    {
      x = align( x, fmt.frac_bits );
    }
    return saturate( x, fmt );
  }

  std::vector<std::string> saturate( fword x, fixed_format const& fmt )
  {
    auto const t = fmt.total_bits;
    std::vector<std::string> out;
    if ( fmt.is_signed )
    {
      x = extend( make_signed( x ), t );
      if ( x.width() == t )
      {
        return x.bits;
      }
      auto const sign = x.bits.back();
      std::vector<std::string> differs;
      for ( auto i = t - 1; i + 1 < x.width(); ++i )
      {
        differs.push_back( b_.xor_( x.bits[i], sign ) );
      }
      auto const overflow = b_.or_tree( differs );
      auto const not_sign = b_.not_( sign );
      for ( unsigned i = 0; i < t; ++i )
      {
        out.push_back( b_.mux( overflow, i + 1 == t ? sign : not_sign, x.bits[i] ) );
      }
      return out;
    }
    if ( x.is_signed )
    {
      x = extend( x, t + 1 );
      auto const negative = x.bits.back();
      auto const too_big = b_.or_tree( std::vector<std::string>( x.bits.begin() + t, x.bits.end() - 1 ) );
      auto const keep = b_.not_( negative );
      for ( unsigned i = 0; i < t; ++i )
      {
        out.push_back( b_.and_( keep, b_.or_( too_big, x.bits[i] ) ) );
      }
      return out;
    }
    x = extend( x, t );
    if ( x.width() == t )
    {
      return x.bits;
    }
    auto const too_big = b_.or_tree( std::vector<std::string>( x.bits.begin() + t, x.bits.end() ) );
    for ( unsigned i = 0; i < t; ++i )
    {
      out.push_back( b_.or_( too_big, x.bits[i] ) );
    }
    return out;
  }

private:
  netlist_builder& b_;
};

} // namespace detail

/*! \brief Expands each fixed-point vertex into a Boolean sub-network.

  Parameters are fixed to the values in `qparams` and enter as constants.
  Adders are ripple-carry, multipliers shift-add arrays, ReLU masks the
  word with the inverted sign bit, and every vertex output rounds (ties to
  even) and saturates exactly as the fixed-point semantics does.
*/
inline synth_result core_generate( network const& g2, binding const& qparams )
{
  require_valid( g2 );
  for ( auto const& e : g2.edges )
  {
    if ( e.type.kind != type_kind::fixed )
    {
      throw error( errc::type_mismatch, "core generation needs fixed-point edges; '" + e.id + "' is " + e.type.str() );
    }
  }
  netlist_builder b( "n" );
  detail::core_generator gen( b );
  std::map<std::string, detail::fword> words;

  synth_result result;
  for ( auto const& id : g2.inputs() )
  {
    auto const& fmt = g2.edge_type( id ).format;
    port p{ id, fmt, {} };
    detail::fword w{ {}, fmt.is_signed, fmt.frac_bits };
    for ( unsigned i = 0; i < fmt.total_bits; ++i )
    {
      p.bits.push_back( b.input( bit_name( id, i ) ) );
    }
    w.bits = p.bits;
    words.emplace( id, w );
    result.inputs.push_back( std::move( p ) );
  }
  for ( auto const& id : g2.parameters() )
  {
    auto it = qparams.find( id );
    if ( it == qparams.end() )
    {
      throw error( errc::missing_binding, "no value for parameter '" + id + "'" );
    }
    if ( !type_checks( it->second, g2.edge_type( id ) ) )
    {
      throw error( errc::type_mismatch, "parameter '" + id + "' expects " + g2.edge_type( id ).str() );
    }
    words.emplace( id, gen.constant( std::get<fixed_value>( it->second ) ) );
  }

  auto as_word = [&]( std::vector<std::string> bits, fixed_format const& fmt ) {
    return detail::fword{ std::move( bits ), fmt.is_signed, fmt.frac_bits };
  };

  for ( auto vi : topo_sort( g2 ) )
  {
    auto const& v = g2.vertices[vi];
    auto const& f = v.func;
    auto const& out_fmt = g2.edge_type( v.outs[0] ).format;
    switch ( f.kind )
    {
    case func_kind::dot: {
      std::optional<detail::fword> acc;
      for ( std::size_t i = 0; i < f.arity; ++i )
      {
        auto p = gen.multiply( words.at( v.params[i] ), words.at( v.ins[i] ) );
        acc = acc ? gen.add( *acc, p ) : p;
      }
      if ( f.bias )
      {
        auto const& bias = words.at( v.params[f.arity] );
        acc = acc ? gen.add( *acc, bias ) : bias;
      }
      if ( !acc )
      {
        acc = gen.constant( fixed_value{ out_fmt, 0 } );
      }
      words[v.outs[0]] = as_word( gen.round_to( *acc, out_fmt ), out_fmt );
      break;
    }
    case func_kind::relu: {
      auto x = words.at( v.ins[0] );
      if ( x.is_signed )
      {
        auto const keep = b.not_( x.bits.back() );
        for ( auto& bit : x.bits )
        {
          bit = b.and_( keep, bit );
        }
      }
      words[v.outs[0]] = as_word( gen.round_to( x, out_fmt ), out_fmt );
      break;
    }
    case func_kind::identity:
      words[v.outs[0]] = as_word( gen.round_to( words.at( v.ins[0] ), out_fmt ), out_fmt );
      break;
    case func_kind::constant:
      for ( std::size_t k = 0; k < v.outs.size(); ++k )
      {
        words[v.outs[k]] = gen.constant( std::get<fixed_value>( f.constants[k] ) );
      }
      break;
    default:
      throw error( errc::unsupported_leaf, "no core for " + f.name() + " at vertex '" + v.name + "'" );
    }
  }

  for ( auto const& id : g2.priout )
  {
    auto const& fmt = g2.edge_type( id ).format;
    port p{ id, fmt, {} };
    auto const& w = words.at( id );
    for ( unsigned i = 0; i < fmt.total_bits; ++i )
    {
      p.bits.push_back( b.output_as( w.bits[i], bit_name( id, i ) ) );
    }
    result.outputs.push_back( std::move( p ) );
  }
  result.netlist = b.take();
  return result;
}

struct commute_result
{
  bool ok{ true };
  std::optional<std::uint64_t> counterexample; /* input assignment index of the netlist */
  std::uint64_t assignments{ 0 };
};

inline constexpr unsigned max_commute_inputs = 20;

/*! \brief Checks phi_o . [[g3]] = [[g2]] . phi_i on every input word.

  Assignment index `i` packs the netlist inputs in port order, LSB first.
  The counterexample is the smallest failing index regardless of `jobs`.
*/
inline commute_result check_commute( network const& g2, binding const& qparams, network const& g3,
                                     std::vector<port> const& inputs, std::vector<port> const& outputs,
                                     unsigned jobs = 1 )
{
  unsigned width = 0;
  for ( auto const& p : inputs )
  {
    width += static_cast<unsigned>( p.bits.size() );
  }
  if ( width > max_commute_inputs )
  {
    throw error( errc::too_wide, std::to_string( width ) + " input bits exceed the exhaustive limit of " +
                                     std::to_string( max_commute_inputs ) );
  }
  compiled_network const c2( g2 ), c3( g3 );
  if ( !c3.all_boolean() )
  {
    throw error( errc::not_boolean, "netlist must be all-Boolean" );
  }
  if ( c3.input_slots().size() != width )
  {
    throw error( errc::signature_mismatch, "netlist has " + std::to_string( c3.input_slots().size() ) +
                                               " inputs, ports describe " + std::to_string( width ) );
  }
  if ( outputs.size() != g2.priout.size() )
  {
    throw error( errc::signature_mismatch, "output ports do not match the network outputs" );
  }
  std::vector<std::size_t> in_slots, out_slots;
  for ( auto const& p : inputs )
  {
    for ( auto const& bit : p.bits )
    {
      in_slots.push_back( c3.slot_of( bit ) );
    }
  }
  for ( auto const& p : outputs )
  {
    for ( auto const& bit : p.bits )
    {
      out_slots.push_back( c3.slot_of( bit ) );
    }
  }

  commute_result result;
  result.assignments = std::uint64_t{ 1 } << width;
  std::vector<std::optional<std::uint64_t>> first( std::max( 1u, jobs ) );
  parallel_chunks( result.assignments, jobs, [&]( unsigned chunk, std::size_t begin, std::size_t end ) {
    std::vector<char> bits( c3.num_slots(), 0 );
    for ( auto i = begin; i < end; ++i )
    {
      /* phi_i: bits -> fixed values */
      binding in;
      unsigned offset = 0;
      for ( std::size_t k = 0; k < inputs.size(); ++k )
      {
        auto const& p = inputs[k];
        auto const w = p.format.total_bits;
        auto const word = ( i >> offset ) & ( ( std::uint64_t{ 1 } << w ) - 1 );
        for ( unsigned j = 0; j < w; ++j )
        {
          bits[in_slots[offset + j]] = ( word >> j ) & 1u;
        }
        offset += w;
        auto const raw = detail::decode_scalar( p.code(), word );
        in.emplace( p.edge, fixed_value{ p.format, *raw } );
      }
      auto const expected = c2.evaluate( qparams, in );
      c3.run_bool( bits );
      /* phi_o: output bits -> fixed values */
      std::size_t pos = 0;
      bool agree = true;
      for ( auto const& p : outputs )
      {
        std::uint64_t word = 0;
        for ( unsigned j = 0; j < p.format.total_bits; ++j )
        {
          word |= std::uint64_t( bits[out_slots[pos++]] != 0 ) << j;
        }
        auto const raw = *detail::decode_scalar( p.code(), word );
        if ( std::get<fixed_value>( expected.at( p.edge ) ).raw != raw )
        {
          agree = false;
        }
      }
      if ( !agree )
      {
        first[chunk] = i;
        return;
      }
    }
  } );
  for ( auto const& f : first )
  {
    if ( f )
    {
      result.ok = false;
      result.counterexample = f;
      break;
    }
  }
  return result;
}

inline commute_result check_commute( network const& g2, binding const& qparams, synth_result const& g3, unsigned jobs = 1 )
{
  return check_commute( g2, qparams, g3.netlist, g3.inputs, g3.outputs, jobs );
}

} // namespace boolnet
