#include "fixtures.hpp"
#include "oracles.hpp"

#include <boolnet/boolnet.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace boolnet;

namespace
{

bool has( std::vector<std::string> const& xs, std::string const& s )
{
  return std::find( xs.begin(), xs.end(), s ) != xs.end();
}

network two_independent()
{
  network net;
  for ( auto const* id : { "a", "b", "x", "y" } )
  {
    net.add_edge( id, data_type::boolean() );
  }
  net.add_vertex( { "v1", {}, { "a" }, { "x" }, function_ref::table( tables::not1() ) } );
  net.add_vertex( { "v2", {}, { "b" }, { "y" }, function_ref::table( tables::not1() ) } );
  net.priout = { "x", "y" };
  return net;
}

} // namespace

TEST( Validate, NeuronIsOk )
{
  auto const r = validate( fixtures::neuron() );
  EXPECT_TRUE( r.ok() );
  EXPECT_TRUE( r.violations.empty() );
}

TEST( Validate, MultipleDrivers )
{
  network net;
  for ( auto const* id : { "a", "b", "c" } )
  {
    net.add_edge( id, data_type::boolean() );
  }
  net.add_vertex( { "v1", {}, { "a", "b" }, { "c" }, function_ref::table( tables::and2() ) } );
  net.add_vertex( { "v2", {}, { "a", "b" }, { "c" }, function_ref::table( tables::or2() ) } );
  net.priout = { "c" };
  auto const r = validate( net );
  EXPECT_FALSE( r.ok() );
  EXPECT_TRUE( has( r.violations, "multiple drivers: c" ) );
}

TEST( Validate, ParamDriven )
{
  auto net = fixtures::neuron();
  net.add_edge( "z", data_type::real() );
  net.add_vertex( { "drv", {}, { "z" }, { "w1" }, function_ref::identity() } );
  auto const r = validate( net );
  EXPECT_TRUE( has( r.violations, "param driven: w1" ) );
}

TEST( Validate, PrioutUndriven )
{
  auto net = fixtures::neuron();
  net.priout.push_back( "x" );
  EXPECT_TRUE( has( validate( net ).violations, "priout undriven: x" ) );
}

TEST( Validate, CycleReported )
{
  network net;
  net.add_edge( "a", data_type::boolean() ).add_edge( "b", data_type::boolean() );
  net.add_vertex( { "p", {}, { "b" }, { "a" }, function_ref::table( tables::not1() ) } );
  net.add_vertex( { "q", {}, { "a" }, { "b" }, function_ref::table( tables::not1() ) } );
  net.priout = { "a" };
  auto const r = validate( net );
  EXPECT_FALSE( r.ok() );
  EXPECT_TRUE( std::any_of( r.violations.begin(), r.violations.end(),
                            []( auto const& v ) { return v.rfind( "cycle through vertex", 0 ) == 0; } ) );
}

TEST( Validate, UnobservedEdgeIsWarningOnly )
{
  auto net = fixtures::and_or_not();
  net.add_edge( "dangling", data_type::boolean() );
  net.add_vertex( { "extra", {}, { "a" }, { "dangling" }, function_ref::identity() } );
  auto const r = validate( net );
  EXPECT_TRUE( r.ok() );
  EXPECT_TRUE( has( r.warnings, "unobserved edge: dangling" ) );
}

TEST( Validate, TypeAndArityMismatch )
{
  auto net = fixtures::and_or_not();
  net.vertices[0].func = function_ref::table( tables::not1() );
  EXPECT_FALSE( validate( net ).ok() );
  auto real_net = fixtures::neuron();
  real_net.vertices[1].func = function_ref::table( tables::not1() );
  EXPECT_FALSE( validate( real_net ).ok() );
}

TEST( Validate, PrioutMayBeConsumedInternally )
{
  auto net = fixtures::and_or_not();
  net.priout = { "ab", "y" };
  EXPECT_TRUE( validate( net ).ok() );
}

TEST( TopoSort, NeuronOrder )
{
  auto const net = fixtures::neuron();
  auto const order = topo_sort( net );
  ASSERT_EQ( order.size(), 2u );
  EXPECT_EQ( net.vertices[order[0]].name, "dot" );
  EXPECT_EQ( net.vertices[order[1]].name, "relu" );
}

TEST( TopoSort, StableAmongIndependents )
{
  auto const order = topo_sort( two_independent() );
  EXPECT_EQ( order, ( std::vector<std::size_t>{ 0, 1 } ) );
}

TEST( TopoSort, DeclarationOrderDoesNotBreakDependencies )
{
  auto net = fixtures::neuron();
  std::swap( net.vertices[0], net.vertices[1] );
  auto const order = topo_sort( net );
  EXPECT_EQ( net.vertices[order[0]].name, "dot" );
}

TEST( TopoSort, SelfLoopIsCyclic )
{
  network net;
  net.add_edge( "a", data_type::boolean() );
  net.add_vertex( { "loop", {}, { "a" }, { "a" }, function_ref::table( tables::not1() ) } );
  net.priout = { "a" };
  try
  {
    topo_sort( net );
    FAIL() << "expected an exception";
  }
  catch ( error const& e )
  {
    EXPECT_EQ( e.code(), errc::cyclic_network );
  }
}

TEST( Evaluate, NeuronPositive )
{
  auto const out = evaluate( fixtures::neuron(), fixtures::reals( { { "w1", 1 }, { "w2", 2 } } ),
                             fixtures::reals( { { "x", 3 }, { "y", 4 } } ) );
  EXPECT_EQ( std::get<double>( out.at( "d" ) ), 11.0 );
}

TEST( Evaluate, NeuronClamped )
{
  auto const out = evaluate( fixtures::neuron(), fixtures::reals( { { "w1", 1 }, { "w2", -1 } } ),
                             fixtures::reals( { { "x", 2 }, { "y", 3 } } ) );
  EXPECT_EQ( std::get<double>( out.at( "d" ) ), 0.0 );
}

TEST( Evaluate, RippleAdderTwoBits )
{
  binding in{ { "a_0", true }, { "a_1", true }, { "b_0", true }, { "b_1", false }, { "c_0", false } };
  auto const out = evaluate( ripple_adder( 2 ), {}, in );
  int sum = 0;
  for ( auto const& [id, w] : std::vector<std::pair<char const*, int>>{ { "s_0", 1 }, { "s_1", 2 }, { "c_2", 4 } } )
  {
    sum += std::get<bool>( out.at( id ) ) ? w : 0;
  }
  EXPECT_EQ( sum, 4 );
}

TEST( Evaluate, Errors )
{
  auto const net = fixtures::neuron();
  auto const params = fixtures::reals( { { "w1", 1 }, { "w2", 2 } } );
  auto code = [&]( binding const& p, binding const& x ) {
    try
    {
      evaluate( net, p, x );
    }
    catch ( error const& e )
    {
      return e.code();
    }
    return errc::parse_error;
  };
  EXPECT_EQ( code( params, fixtures::reals( { { "x", 1 } } ) ), errc::missing_binding );
  EXPECT_EQ( code( params, binding{ { "x", 1.0 }, { "y", true } } ), errc::type_mismatch );
  EXPECT_EQ( code( params, fixtures::reals( { { "x", 1 }, { "y", 1 }, { "z", 1 } } ) ), errc::arity_mismatch );
}

TEST( ApplyLeaf, Scalars )
{
  std::vector<data_type> const real1{ data_type::real() };
  EXPECT_EQ( std::get<double>( apply_leaf( function_ref::relu(), {}, std::vector<value>{ -1.0 }, real1 )[0] ), 0.0 );
  EXPECT_EQ( std::get<double>( apply_leaf( function_ref::sigmoid(), {}, std::vector<value>{ 0.0 }, real1 )[0] ), 0.0 );
  std::vector<data_type> const bool2{ data_type::boolean(), data_type::boolean() };
  auto const fa = apply_leaf( function_ref::full_adder(), {}, std::vector<value>{ true, true, false }, bool2 );
  EXPECT_FALSE( std::get<bool>( fa[0] ) );
  EXPECT_TRUE( std::get<bool>( fa[1] ) );
}

TEST( ApplyLeaf, DotWithBiasAndErrors )
{
  std::vector<data_type> const real1{ data_type::real() };
  auto const y = apply_leaf( function_ref::dot( 2, true ), std::vector<value>{ 2.0, 3.0, 0.5 },
                             std::vector<value>{ 1.0, -1.0 }, real1 );
  EXPECT_EQ( std::get<double>( y[0] ), -0.5 );
  EXPECT_THROW( apply_leaf( function_ref::dot( 2 ), std::vector<value>{ 1.0 }, std::vector<value>{ 1.0, 1.0 }, real1 ),
                error );
  EXPECT_THROW( apply_leaf( function_ref::relu(), {}, std::vector<value>{ true }, real1 ), error );
}

// Property: single pass and the demand-driven interpreter agree, and
// every produced value type-checks (run() checks this itself).
TEST( Properties, CompositionalityOnRandomCircuits )
{
  std::mt19937_64 rng( 7 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    netlist_builder b( "t" );
    std::vector<std::string> pool;
    for ( int i = 0; i < 4; ++i )
    {
      pool.push_back( b.input( "i" + std::to_string( i ) ) );
    }
    for ( int g = 0; g < 12; ++g )
    {
      auto pick = [&] { return pool[rng() % pool.size()]; };
      switch ( rng() % 4 )
      {
      case 0: pool.push_back( b.and_( pick(), pick() ) ); break;
      case 1: pool.push_back( b.xor_( pick(), pick() ) ); break;
      case 2: pool.push_back( b.mux( pick(), pick(), pick() ) ); break;
      default: pool.push_back( b.full_adder( pick(), pick(), pick() ).second ); break;
      }
    }
    b.output( pool.back() );
    b.output( pool[pool.size() - 2] );
    auto const net = b.take();
    ASSERT_TRUE( validate( net ).ok() );
    compiled_network const cn( net );
    for ( std::uint64_t i = 0; i < 16; ++i )
    {
      binding in;
      for ( int j = 0; j < 4; ++j )
      {
        in["i" + std::to_string( j )] = bool( ( i >> j ) & 1u );
      }
      auto const fast = cn.evaluate( {}, in );
      EXPECT_EQ( fast, oracle::reference_eval( net, {}, in ) );
      EXPECT_EQ( fast, cn.evaluate( {}, in ) );
    }
  }
}

TEST( Properties, RippleAdderMatchesIntegerAddition )
{
  for ( unsigned n = 1; n <= 4; ++n )
  {
    auto const net = ripple_adder( n );
    ASSERT_TRUE( validate( net ).ok() );
    for ( unsigned a = 0; a < ( 1u << n ); ++a )
    {
      for ( unsigned b = 0; b < ( 1u << n ); ++b )
      {
        for ( unsigned c = 0; c < 2; ++c )
        {
          binding in{ { "c_0", c == 1 } };
          for ( unsigned i = 0; i < n; ++i )
          {
            in["a_" + std::to_string( i )] = bool( ( a >> i ) & 1u );
            in["b_" + std::to_string( i )] = bool( ( b >> i ) & 1u );
          }
          auto const out = evaluate( net, {}, in );
          unsigned sum = std::get<bool>( out.at( "c_" + std::to_string( n ) ) ) ? 1u << n : 0u;
          for ( unsigned i = 0; i < n; ++i )
          {
            sum += std::get<bool>( out.at( "s_" + std::to_string( i ) ) ) ? 1u << i : 0u;
          }
          ASSERT_EQ( sum, a + b + c );
        }
      }
    }
  }
}

TEST( Properties, ConcurrentEvaluationIsSafe )
{
  compiled_network const cn( ripple_adder( 3 ) );
  std::vector<std::uint64_t> results( 128 );
  parallel_chunks( results.size(), 4, [&]( unsigned, std::size_t begin, std::size_t end ) {
    for ( auto i = begin; i < end; ++i )
    {
      binding in{ { "c_0", false } };
      for ( unsigned k = 0; k < 3; ++k )
      {
        in["a_" + std::to_string( k )] = bool( ( i >> k ) & 1u );
        in["b_" + std::to_string( k )] = bool( ( i >> ( k + 3 ) ) & 1u );
      }
      auto const out = cn.evaluate( {}, in );
      std::uint64_t s = std::get<bool>( out.at( "c_3" ) ) ? 8 : 0;
      for ( unsigned k = 0; k < 3; ++k )
      {
        s += std::get<bool>( out.at( "s_" + std::to_string( k ) ) ) ? 1u << k : 0u;
      }
      results[i] = s;
    }
  } );
  for ( std::uint64_t i = 0; i < results.size(); ++i )
  {
    EXPECT_EQ( results[i], ( i & 7u ) + ( ( i >> 3 ) & 7u ) );
  }
}
