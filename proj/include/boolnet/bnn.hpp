/*!
  \file bnn.hpp
  \brief Binarised neurons, the {AND, OR, NOT} gadgets, compilation of
         Boolean circuits and truth tables to BNN networks, and lowering of
         a neuron to an XNOR / popcount / compare netlist.

  Booleans and {-1, +1} correspond by false -> -1, true -> +1.
*/

#pragma once

#include "boolfunc.hpp"
#include "error.hpp"
#include "netlist_builder.hpp"
#include "network.hpp"
#include "truth_table.hpp"

#include <bit>
#include <span>
#include <string>
#include <vector>

namespace boolnet
{

/*! \brief x -> +1 iff w.x >= c, with w in {-1,+1}^n and c in [-n, n]. */
struct bnn_node
{
  std::vector<int> w;
  int c{ 0 };

  std::size_t n() const { return w.size(); }
  bool operator==( bnn_node const& ) const = default;

  function_ref func() const { return function_ref::bnn( w, c ); }
};

inline void check_bnn( bnn_node const& node )
{
  auto const n = static_cast<int>( node.n() );
  for ( auto wi : node.w )
  {
    if ( wi != 1 && wi != -1 )
    {
      throw error( errc::type_mismatch, "BNN weights must be -1 or +1" );
    }
  }
  if ( node.c < -n || node.c > n )
  {
    throw error( errc::type_mismatch, "BNN threshold " + std::to_string( node.c ) + " outside [-" + std::to_string( n ) +
                                          ", " + std::to_string( n ) + "]" );
  }
}

inline int bnn_eval( bnn_node const& node, std::span<const int> x )
{
  check_bnn( node );
  if ( x.size() != node.n() )
  {
    throw error( errc::arity_mismatch, "BNN node of fan-in " + std::to_string( node.n() ) + " applied to " +
                                           std::to_string( x.size() ) + " inputs" );
  }
  int sum = 0;
  for ( std::size_t i = 0; i < x.size(); ++i )
  {
    if ( x[i] != 1 && x[i] != -1 )
    {
      throw error( errc::type_mismatch, "BNN inputs must be -1 or +1" );
    }
    sum += node.w[i] * x[i];
  }
  return sum >= node.c ? 1 : -1;
}

inline int bnn_eval( bnn_node const& node, std::vector<int> const& x )
{
  return bnn_eval( node, std::span<const int>( x ) );
}

/*! \brief Truth table of a node read through false -> -1, true -> +1. */
inline truth_table bnn_table( bnn_node const& node )
{
  truth_table t( static_cast<unsigned>( node.n() ) );
  std::vector<int> x( node.n() );
  for ( std::uint64_t i = 0; i < t.num_rows(); ++i )
  {
    for ( std::size_t j = 0; j < x.size(); ++j )
    {
      x[j] = ( ( i >> j ) & 1u ) ? 1 : -1;
    }
    t.set( i, bnn_eval( node, x ) > 0 );
  }
  return t;
}

enum class gadget_kind
{
  and_,
  or_,
  not_,
  const_true
};

inline bnn_node gadget( gadget_kind kind )
{
  switch ( kind )
  {
  case gadget_kind::and_: return { { +1, +1 }, +2 };
  case gadget_kind::or_: return { { +1, +1 }, 0 };
  case gadget_kind::not_: return { { -1 }, +1 };
  case gadget_kind::const_true: return { {}, 0 };
  }
  return {};
}

/*! \brief Single-vertex Boolean network x0..x{n-1} -> y running `node`. */
inline network bnn_network( bnn_node const& node )
{
  check_bnn( node );
  network net;
  vertex v{ "bnn", {}, {}, { "y" }, node.func() };
  for ( std::size_t j = 0; j < node.n(); ++j )
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

/*! \brief Replaces each {AND, OR, NOT, buffer, constant} vertex by its BNN gadget.

  Edge ids are kept.  A constant false becomes NOT of a constant-true
  node, through a fresh edge `<out>.t`.
*/
inline network circuit_to_bnn( network const& net )
{
  require_valid( net );
  for ( auto const& e : net.edges )
  {
    if ( e.type.kind != type_kind::boolean )
    {
      throw error( errc::not_boolean, "edge '" + e.id + "' is not Boolean" );
    }
  }
  network out;
  out.edges = net.edges;
  out.priout = net.priout;
  auto node_vertex = [&]( std::string name, std::vector<std::string> ins, std::string o, gadget_kind k ) {
    out.add_vertex( { std::move( name ), {}, std::move( ins ), { std::move( o ) }, gadget( k ).func() } );
  };

  for ( auto const& v : net.vertices )
  {
    auto const& f = v.func;
    if ( f.kind == func_kind::table && f.tables.size() == 1 )
    {
      auto const& t = f.tables[0];
      if ( t == tables::and2() )
      {
        node_vertex( v.name, v.ins, v.outs[0], gadget_kind::and_ );
        continue;
      }
      if ( t == tables::or2() )
      {
        node_vertex( v.name, v.ins, v.outs[0], gadget_kind::or_ );
        continue;
      }
      if ( t == tables::not1() )
      {
        node_vertex( v.name, v.ins, v.outs[0], gadget_kind::not_ );
        continue;
      }
      if ( t == tables::buf1() )
      {
        out.add_vertex( { v.name, {}, v.ins, v.outs, function_ref::bnn( { +1 }, +1 ) } );
        continue;
      }
    }
    else if ( f.kind == func_kind::identity )
    {
      out.add_vertex( { v.name, {}, v.ins, v.outs, function_ref::bnn( { +1 }, +1 ) } );
      continue;
    }
    else if ( f.kind == func_kind::constant )
    {
      for ( std::size_t k = 0; k < v.outs.size(); ++k )
      {
        auto const name = v.outs.size() > 1 ? v.name + "." + std::to_string( k ) : v.name;
        if ( std::get<bool>( f.constants[k] ) )
        {
          node_vertex( name, {}, v.outs[k], gadget_kind::const_true );
        }
        else
        {
          auto const helper = v.outs[k] + ".t";
          out.add_edge( helper, data_type::boolean() );
          node_vertex( name + ".t", {}, helper, gadget_kind::const_true );
          node_vertex( name, { helper }, v.outs[k], gadget_kind::not_ );
        }
      }
      continue;
    }
    throw error( errc::unsupported_leaf, "vertex '" + v.name + "' computes " + f.name() +
                                             ", which is outside {AND, OR, NOT, constants}" );
  }
  return out;
}

inline constexpr unsigned max_tt_to_bnn_arity = 8;

/*! \brief Sum-of-products circuit over {AND, OR, NOT} for `t`: inputs x0.., output y. */
inline network sum_of_products( truth_table const& t )
{
  netlist_builder b( "p" );
  std::vector<netlist_builder::signal> x, nx;
  for ( unsigned j = 0; j < t.arity(); ++j )
  {
    x.push_back( b.input( "x" + std::to_string( j ) ) );
  }
  for ( unsigned j = 0; j < t.arity(); ++j )
  {
    nx.push_back( b.not_( x[j] ) );
  }
  std::vector<netlist_builder::signal> terms;
  for ( std::uint64_t i = 0; i < t.num_rows(); ++i )
  {
    if ( !t.get( i ) )
    {
      continue;
    }
    std::vector<netlist_builder::signal> lits;
    for ( unsigned j = 0; j < t.arity(); ++j )
    {
      lits.push_back( ( ( i >> j ) & 1u ) ? x[j] : nx[j] );
    }
    if ( lits.empty() )
    {
      terms.push_back( b.constant( true ) );
      continue;
    }
    while ( lits.size() > 1 )
    {
      std::vector<netlist_builder::signal> next;
      for ( std::size_t k = 0; k + 1 < lits.size(); k += 2 )
      {
        next.push_back( b.and_( lits[k], lits[k + 1] ) );
      }
      if ( lits.size() % 2 )
      {
        next.push_back( lits.back() );
      }
      lits = std::move( next );
    }
    terms.push_back( lits.front() );
  }
  auto y = b.or_tree( terms );
  b.output_as( y, "y" );
  return b.take();
}

inline network tt_to_bnn( truth_table const& t )
{
  if ( t.arity() > max_tt_to_bnn_arity )
  {
    throw error( errc::too_wide, "tt_to_bnn is limited to arity " + std::to_string( max_tt_to_bnn_arity ) );
  }
  return circuit_to_bnn( sum_of_products( t ) );
}

/*! \brief XNOR / full-adder-tree popcount / compare netlist for one neuron.

  With pop = number of inputs agreeing with their weight, w.x = 2 pop - n,
  so the neuron fires iff pop >= ceil((n + c) / 2).  The comparison adds
  the m-bit two's complement of that constant and keeps the carry out.
*/
inline network bnn_to_netlist( bnn_node const& node )
{
  check_bnn( node );
  auto const n = static_cast<int>( node.n() );
  if ( n < 1 )
  {
    throw error( errc::arity_mismatch, "lowering needs fan-in >= 1" );
  }
  netlist_builder b( "l" );
  std::vector<std::vector<netlist_builder::signal>> columns( 1 );
  std::vector<netlist_builder::signal> x;
  for ( int j = 0; j < n; ++j )
  {
    x.push_back( b.input( "x" + std::to_string( j ) ) );
  }
  for ( int j = 0; j < n; ++j )
  {
    columns[0].push_back( b.xnor_( x[j], b.constant( node.w[j] > 0 ) ) );
  }

  /* full-adder tree: compress each column to a single bit */
  for ( std::size_t col = 0; col < columns.size(); ++col )
  {
    while ( columns[col].size() > 1 )
    {
      auto& bits = columns[col];
      auto a = bits[0], c1 = bits[1];
      auto c2 = bits.size() >= 3 ? bits[2] : b.constant( false );
      bits.erase( bits.begin(), bits.begin() + std::min<std::size_t>( 3, bits.size() ) );
      auto [s, carry] = b.full_adder( a, c1, c2 );
      columns[col].push_back( s );
      if ( columns.size() == col + 1 )
      {
        columns.emplace_back();
      }
      columns[col + 1].push_back( carry );
    }
  }
  auto const m = static_cast<unsigned>( std::bit_width( static_cast<unsigned>( n ) ) );
  netlist_builder::word pop;
  for ( unsigned i = 0; i < m; ++i )
  {
    pop.push_back( i < columns.size() && !columns[i].empty() ? columns[i][0] : b.constant( false ) );
  }

  int const n_plus_c = n + node.c;
  int const threshold = n_plus_c <= 0 ? -( ( -n_plus_c ) / 2 ) : ( n_plus_c + 1 ) / 2; /* ceil((n+c)/2) */
  netlist_builder::signal y;
  if ( threshold <= 0 )
  {
    y = b.constant( true );
  }
  else if ( threshold > n )
  {
    y = b.constant( false );
  }
  else
  {
    auto const neg = ( std::uint64_t{ 1 } << m ) - static_cast<std::uint64_t>( threshold );
    netlist_builder::word k;
    for ( unsigned i = 0; i < m; ++i )
    {
      k.push_back( b.constant( ( neg >> i ) & 1u ) );
    }
    y = b.ripple_add( pop, k, b.constant( false ) ).back();
  }
  b.output_as( y, "y" );
  return b.take();
}

} // namespace boolnet
