#include "fixtures.hpp"
#include "oracles.hpp"

#include <boolnet/boolnet.hpp>

#include <gtest/gtest.h>

using namespace boolnet;

namespace
{

errc code_of( std::string const& text )
{
  try
  {
    network_from_json( parse_json( text, "test" ) );
  }
  catch ( error const& e )
  {
    return e.code();
  }
  return errc::missing_binding; // sentinel: no error
}

} // namespace

TEST( Json, RoundTripPreservesTabulation )
{
  for ( auto const& net : { fixtures::and_or_not(), ripple_adder( 3 ), bnn_network( { { 1, -1, 1 }, 1 } ),
                            tt_to_bnn( tables::xor2() ), bnn_to_netlist( { { 1, 1, -1, 1 }, 0 } ) } )
  {
    auto const back = network_from_json( parse_json( network_to_string( net ), "round trip" ) );
    EXPECT_EQ( oracle::brute_tabulate( back ), oracle::brute_tabulate( net ) );
    EXPECT_EQ( network_to_string( back ), network_to_string( net ) );
  }
}

TEST( Json, RoundTripFixedAndReal )
{
  auto const q = quantize_network( fixtures::neuron(), fixed_format{ 6, 3, true },
                                   fixtures::reals( { { "w1", 0.75 }, { "w2", -1.25 } } ) );
  auto const back = network_from_json( parse_json( network_to_string( q.net ), "q" ) );
  EXPECT_EQ( network_to_string( back ), network_to_string( q.net ) );
  auto const params = binding_from_json( to_json( q.params ), back );
  EXPECT_EQ( std::get<fixed_value>( params.at( "w2" ) ).raw, -10 );
  auto const in = binding_from_json( parse_json( R"({"x": 1.5, "y": {"raw": 4}})", "in" ), back );
  EXPECT_EQ( std::get<fixed_value>( in.at( "x" ) ).raw, 12 );
  EXPECT_EQ( std::get<fixed_value>( in.at( "y" ) ).raw, 4 );
}

TEST( Json, SampleFilesLoad )
{
  auto const neuron = read_network( std::string( BOOLNET_SAMPLES_DIR ) + "/neuron.json" );
  EXPECT_TRUE( validate( neuron ).ok() );
  auto const circuit = read_network( std::string( BOOLNET_SAMPLES_DIR ) + "/circuit.json" );
  EXPECT_EQ( oracle::brute_tabulate( circuit ), oracle::brute_tabulate( fixtures::and_or_not() ) );
  auto const broken = read_network( std::string( BOOLNET_SAMPLES_DIR ) + "/broken.json" );
  EXPECT_FALSE( validate( broken ).ok() );
}

TEST( Json, ParseErrors )
{
  EXPECT_EQ( code_of( "{" ), errc::parse_error );
  EXPECT_EQ( code_of( R"({"edges": []})" ), errc::parse_error );
  EXPECT_EQ( code_of( R"({"edges": [{"id": "a", "type": {"kind": "complex"}}], "vertices": [], "priout": []})" ),
             errc::parse_error );
  EXPECT_EQ( code_of( R"({"edges": [{"id": "a", "type": {"kind": "bool"}}, {"id": "b", "type": {"kind": "bool"}}],
                          "vertices": [{"name": "v", "ins": ["a"], "outs": ["b"], "func": {"kind": "warp"}}],
                          "priout": ["b"]})" ),
             errc::parse_error );
  EXPECT_EQ( code_of( R"({"edges": [{"id": "a", "type": {"kind": "bool"}}, {"id": "b", "type": {"kind": "bool"}}],
                          "vertices": [{"name": "v", "ins": ["a"], "outs": ["b"], "func": {"kind": "truth_table", "arity": 1, "bits": "011"}}],
                          "priout": ["b"]})" ),
             errc::parse_error );
}

TEST( Json, BnnRangeChecked )
{
  auto const text = []( int c ) {
    return R"({"edges": [{"id": "a", "type": {"kind": "bool"}}, {"id": "b", "type": {"kind": "bool"}}],
               "vertices": [{"name": "v", "ins": ["a"], "outs": ["b"], "func": {"kind": "bnn", "w": [1], "c": )" +
           std::to_string( c ) + "}}], \"priout\": [\"b\"]}";
  };
  EXPECT_EQ( code_of( text( 2 ) ), errc::parse_error );
  EXPECT_EQ( code_of( text( -2 ) ), errc::parse_error );
  EXPECT_EQ( code_of( text( 1 ) ), errc::missing_binding );
}

TEST( Dot, Export )
{
  auto const dot = to_dot( fixtures::and_or_not() );
  EXPECT_EQ( dot.rfind( "digraph", 0 ), 0u );
  for ( auto const* name : { "and", "not", "or", "\"y\"" } )
  {
    EXPECT_NE( dot.find( name ), std::string::npos ) << name;
  }
  EXPECT_EQ( dot.back(), '\n' );
}
