// Small networks shared by the test suites.

#pragma once

#include <boolnet/boolnet.hpp>

namespace fixtures
{

// d = ReLU(w1 x + w2 y), all edges of type `t`
inline boolnet::network neuron( boolnet::data_type t = boolnet::data_type::real() )
{
  using namespace boolnet;
  network net;
  for ( auto const* id : { "w1", "w2", "x", "y", "c", "d" } )
  {
    net.add_edge( id, t );
  }
  net.add_vertex( { "dot", { "w1", "w2" }, { "x", "y" }, { "c" }, function_ref::dot( 2 ) } );
  net.add_vertex( { "relu", {}, { "c" }, { "d" }, function_ref::relu() } );
  net.priout = { "d" };
  return net;
}

// y = (a and b) or not c
inline boolnet::network and_or_not()
{
  using namespace boolnet;
  network net;
  for ( auto const* id : { "a", "b", "c", "ab", "nc", "y" } )
  {
    net.add_edge( id, data_type::boolean() );
  }
  net.add_vertex( { "and", {}, { "a", "b" }, { "ab" }, function_ref::table( tables::and2() ) } );
  net.add_vertex( { "not", {}, { "c" }, { "nc" }, function_ref::table( tables::not1() ) } );
  net.add_vertex( { "or", {}, { "ab", "nc" }, { "y" }, function_ref::table( tables::or2() ) } );
  net.priout = { "y" };
  return net;
}

inline boolnet::binding reals( std::initializer_list<std::pair<char const*, double>> xs )
{
  boolnet::binding b;
  for ( auto const& [k, v] : xs )
  {
    b[k] = v;
  }
  return b;
}

} // namespace fixtures
