#pragma once

#include "network.hpp"
#include "truth_table.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace boolnet
{

/*! \brief Incremental construction of Boolean netlists.

  Each gate gets a fresh output edge `<prefix><n>`; constants are shared.
  Word-level helpers take and return bit lists ordered LSB first.
*/
class netlist_builder
{
public:
  using signal = std::string;
  using word = std::vector<signal>;

  explicit netlist_builder( std::string prefix = "n" ) : prefix_( std::move( prefix ) ) {}

  signal input( std::string id )
  {
    net_.add_edge( id, data_type::boolean() );
    return id;
  }

  word input_word( std::string const& base, unsigned width )
  {
    word w;
    for ( unsigned i = 0; i < width; ++i )
    {
      w.push_back( input( base + "[" + std::to_string( i ) + "]" ) );
    }
    return w;
  }

  /*! \brief A vertex with fresh or given output edge names. */
  std::vector<signal> add( function_ref f, std::vector<signal> ins, std::vector<std::string> out_names = {} )
  {
    auto const id = counter_++;
    auto const outs = f.num_outs();
    if ( out_names.empty() )
    {
      for ( std::size_t k = 0; k < outs; ++k )
      {
        out_names.push_back( prefix_ + std::to_string( id ) + ( outs > 1 ? "_" + std::to_string( k ) : "" ) );
      }
    }
    for ( auto const& o : out_names )
    {
      net_.add_edge( o, data_type::boolean() );
    }
    net_.add_vertex( { "g" + std::to_string( id ), {}, std::move( ins ), out_names, std::move( f ) } );
    return out_names;
  }

  signal gate( truth_table t, std::vector<signal> ins ) { return add( function_ref::table( std::move( t ) ), std::move( ins ) )[0]; }

  signal constant( bool v )
  {
    auto& slot = consts_[v ? 1 : 0];
    if ( !slot )
    {
      slot = add( function_ref::constant( value{ v } ), {} )[0];
    }
    return *slot;
  }

  signal not_( signal const& a ) { return gate( tables::not1(), { a } ); }
  signal and_( signal const& a, signal const& b ) { return gate( tables::and2(), { a, b } ); }
  signal or_( signal const& a, signal const& b ) { return gate( tables::or2(), { a, b } ); }
  signal xor_( signal const& a, signal const& b ) { return gate( tables::xor2(), { a, b } ); }
  signal xnor_( signal const& a, signal const& b ) { return gate( tables::xnor2(), { a, b } ); }
  /* s ? a : b */
  signal mux( signal const& s, signal const& a, signal const& b ) { return gate( tables::mux3(), { s, a, b } ); }

  /*! \brief (sum, carry) */
  std::pair<signal, signal> full_adder( signal const& a, signal const& b, signal const& c )
  {
    auto outs = add( function_ref::full_adder(), { a, b, c } );
    return { outs[0], outs[1] };
  }

  /*! \brief Ripple-carry sum of equal-width words; result has one extra bit (the carry out). */
  word ripple_add( word const& a, word const& b, signal carry )
  {
    word sum;
    for ( std::size_t i = 0; i < a.size(); ++i )
    {
      auto [s, c] = full_adder( a[i], b[i], carry );
      sum.push_back( s );
      carry = c;
    }
    sum.push_back( carry );
    return sum;
  }

  /*! \brief OR of all signals as a balanced tree; constant false when empty. */
  signal or_tree( std::vector<signal> xs )
  {
    if ( xs.empty() )
    {
      return constant( false );
    }
    while ( xs.size() > 1 )
    {
      std::vector<signal> next;
      for ( std::size_t i = 0; i + 1 < xs.size(); i += 2 )
      {
        next.push_back( or_( xs[i], xs[i + 1] ) );
      }
      if ( xs.size() % 2 )
      {
        next.push_back( xs.back() );
      }
      xs = std::move( next );
    }
    return xs.front();
  }

  void output( signal const& s ) { net_.priout.push_back( s ); }

  /*! \brief Adds a named buffer so that a primary output gets a stable id. */
  signal output_as( signal const& s, std::string id )
  {
    auto out = add( function_ref::identity(), { s }, { std::move( id ) } )[0];
    output( out );
    return out;
  }

  network const& net() const { return net_; }
  network take() { return std::move( net_ ); }

private:
  network net_;
  std::string prefix_;
  std::size_t counter_{ 0 };
  std::array<std::optional<signal>, 2> consts_;
};

} // namespace boolnet
