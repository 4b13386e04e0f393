#include "oracles.hpp"

#include <boolnet/boolnet.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace boolnet;

namespace
{

tabulated_function random_function( std::mt19937_64& rng, unsigned n, unsigned m )
{
  tabulated_function f{ n, m, {} };
  for ( std::uint64_t i = 0; i < ( std::uint64_t{ 1 } << n ); ++i )
  {
    f.rows.push_back( rng() & ( ( std::uint64_t{ 1 } << m ) - 1 ) );
  }
  return f;
}

network constant_network()
{
  network net;
  net.add_edge( "x", data_type::boolean() ).add_edge( "y", data_type::boolean() );
  net.add_vertex( { "k", {}, { "x" }, { "y" }, function_ref::table( truth_table::from_string( 1, "11" ) ) } );
  net.priout = { "y" };
  return net;
}

// brute force over a pair of plain binary encodings of the whole vectors
std::optional<oracle::q> brute_binary( tabulated_function const& f )
{
  auto dist = []( long long a, long long b ) { return a > b ? a - b : b - a; };
  return oracle::brute_lipschitz(
      f.rows.size(), [&]( std::size_t a, std::size_t b ) { return dist( a, b ); },
      [&]( std::size_t a, std::size_t b ) { return dist( f.rows[a], f.rows[b] ); } );
}

} // namespace

TEST( MinLipschitz, AdderIsOneLipschitz )
{
  auto const r = min_lipschitz( ripple_adder( 2 ), adder_input_metric( 2 ), adder_output_metric( 2 ) );
  ASSERT_FALSE( r.infinite() );
  EXPECT_EQ( *r.min_constant, rational( 1 ) );
  ASSERT_TRUE( r.witness.has_value() );
  auto const [a, b] = *r.witness;
  auto const d = metric( adder_input_metric( 2 ), bits_of_index( a, 5 ), bits_of_index( b, 5 ) );
  auto const f = tabulate_function( ripple_adder( 2 ) );
  auto const e = metric( adder_output_metric( 2 ), bits_of_index( f.rows[a], 3 ), bits_of_index( f.rows[b], 3 ) );
  EXPECT_EQ( e, d );
  EXPECT_EQ( r.pair_count, 32u * 31u / 2u );
}

TEST( MinLipschitz, PathologicalLeafGivesTwoToTheN )
{
  auto const net = replace_leaves( ripple_adder( 3 ), { { function_ref::full_adder(), carry_through_leaf() } } );
  auto const r = min_lipschitz( net, adder_input_metric( 3 ), adder_output_metric( 3 ) );
  EXPECT_EQ( *r.min_constant, rational( 8 ) );
}

TEST( MinLipschitz, ConstantOutputIsZero )
{
  auto const r = min_lipschitz( constant_network(), parse_metric( "L1: bit" ), parse_metric( "Hamming: bit" ) );
  EXPECT_EQ( *r.min_constant, rational( 0 ) );
}

TEST( MinLipschitz, ProjectionIsOne )
{
  tabulated_function f{ 2, 1, { 0, 1, 0, 1 } };
  auto const r = min_lipschitz( f, parse_metric( "L1: bit | bit" ), parse_metric( "L1: bit" ) );
  EXPECT_EQ( *r.min_constant, rational( 1 ) );
}

TEST( MinLipschitz, UnaryDomainSkipsNonCodeWords )
{
  // only 0, 1, 3, 7 are code words; the function is the decoded value
  tabulated_function f{ 3, 2, { 0, 1, 3, 2, 3, 3, 3, 3 } };
  auto const r = min_lipschitz( f, parse_metric( "L1: unary[3]" ), parse_metric( "L1: bin[2]" ) );
  EXPECT_EQ( *r.min_constant, rational( 1 ) );
  EXPECT_EQ( r.pair_count, 6u );
}

TEST( MinLipschitz, TooWide )
{
  tabulated_function f{ 17, 1, std::vector<std::uint64_t>( std::size_t{ 1 } << 17, 0 ) };
  try
  {
    min_lipschitz( f, parse_metric( "L1: bin[17]" ), parse_metric( "L1: bit" ) );
    FAIL();
  }
  catch ( error const& e )
  {
    EXPECT_EQ( e.code(), errc::too_wide );
  }
}

TEST( IsKLipschitz, Examples )
{
  auto const net = ripple_adder( 2 );
  EXPECT_TRUE( is_k_lipschitz( net, adder_input_metric( 2 ), adder_output_metric( 2 ), rational( 1 ) ).holds );
  auto const half = is_k_lipschitz( net, adder_input_metric( 2 ), adder_output_metric( 2 ), rational( 1, 2 ) );
  EXPECT_FALSE( half.holds );
  ASSERT_TRUE( half.witness.has_value() );
  auto const d = metric( adder_input_metric( 2 ), bits_of_index( half.witness->first, 5 ),
                         bits_of_index( half.witness->second, 5 ) );
  EXPECT_EQ( d, rational( 1 ) );

  network id;
  id.add_edge( "x", data_type::boolean() ).add_edge( "y", data_type::boolean() );
  id.add_vertex( { "id", {}, { "x" }, { "y" }, function_ref::identity() } );
  id.priout = { "y" };
  for ( auto k : { rational( 1 ), rational( 3, 2 ), rational( 5 ) } )
  {
    EXPECT_TRUE( is_k_lipschitz( id, parse_metric( "L1: bit" ), parse_metric( "L1: bit" ), k ).holds );
  }
}

TEST( Properties, AdderIsOneLipschitzUpToFourBits )
{
  for ( unsigned n = 1; n <= 4; ++n )
  {
    auto const r = min_lipschitz( ripple_adder( n ), adder_input_metric( n ), adder_output_metric( n ) );
    ASSERT_FALSE( r.infinite() );
    EXPECT_EQ( *r.min_constant, rational( 1 ) ) << "n = " << n;
  }
}

TEST( Properties, AgreesWithBruteForce )
{
  std::mt19937_64 rng( 5 );
  for ( int trial = 0; trial < 40; ++trial )
  {
    auto const n = 1 + static_cast<unsigned>( rng() % 5 ), m = 1 + static_cast<unsigned>( rng() % 4 );
    auto const f = random_function( rng, n, m );
    auto const r = min_lipschitz( f, induced_metric{ norm_kind::l1, { encoding::std_binary( n ) }, rational( 1 ) },
                                  induced_metric{ norm_kind::l1, { encoding::std_binary( m ) }, rational( 1 ) } );
    auto const expected = brute_binary( f );
    ASSERT_TRUE( expected.has_value() );
    EXPECT_EQ( r.min_constant->numerator(), expected->numerator() );
    EXPECT_EQ( r.min_constant->denominator(), expected->denominator() );
  }
}

TEST( Properties, OracleConsistencyMonotonicityAndScale )
{
  std::mt19937_64 rng( 9 );
  std::vector<std::string> const metrics{ "L1: bin[2] | bit", "Linf: tc[3]", "Hamming: bin[3]", "L1: gray[3]",
                                          "L1: unary[3]" };
  std::vector<std::string> const outs{ "L1: bin[2]", "Hamming: bin[2]", "Linf: tc[2]", "L1: gray[2]" };
  for ( int trial = 0; trial < 60; ++trial )
  {
    auto const d = parse_metric( metrics[rng() % metrics.size()] );
    auto const e = parse_metric( outs[rng() % outs.size()] );
    auto const f = random_function( rng, 3, 2 );
    auto const r = min_lipschitz( f, d, e );
    if ( r.infinite() )
    {
      continue;
    }
    auto const kstar = *r.min_constant;
    for ( auto k : { rational( 0 ), rational( 1, 3 ), rational( 1, 2 ), rational( 1 ), rational( 3, 2 ), rational( 2 ),
                     rational( 3 ), kstar } )
    {
      EXPECT_EQ( is_k_lipschitz( f, d, e, k ).holds, kstar <= k );
    }
    // witness attains k*
    if ( r.witness && kstar > rational( 0 ) )
    {
      auto const [a, b] = *r.witness;
      auto const w = d.width(), wo = e.width();
      EXPECT_EQ( metric( e, bits_of_index( f.rows[a], wo ), bits_of_index( f.rows[b], wo ) ),
                 kstar * metric( d, bits_of_index( a, w ), bits_of_index( b, w ) ) );
    }
    for ( auto lambda : { rational( 2 ), rational( 1, 3 ), rational( 7, 5 ) } )
    {
      auto scaled = d;
      scaled.scale = lambda;
      EXPECT_EQ( *min_lipschitz( f, scaled, e ).min_constant, kstar / lambda );
    }
  }
}

TEST( Properties, JobsGiveIdenticalReports )
{
  auto const f = tabulate_function( replace_leaves( ripple_adder( 4 ), { { function_ref::full_adder(), carry_through_leaf() } } ) );
  auto const d = adder_input_metric( 4 ), e = adder_output_metric( 4 );
  auto const one = min_lipschitz( f, d, e, 1 );
  for ( unsigned jobs : { 2u, 3u, 7u } )
  {
    auto const r = min_lipschitz( f, d, e, jobs );
    EXPECT_EQ( r.min_constant, one.min_constant );
    EXPECT_EQ( r.witness, one.witness );
    EXPECT_EQ( r.pair_count, one.pair_count );
  }
}

TEST( ReplaceLeaves, IdentityMapAndMismatch )
{
  auto const net = ripple_adder( 2 );
  auto const same = replace_leaves( net, []( function_ref const& ) -> std::optional<function_ref> { return std::nullopt; } );
  EXPECT_EQ( tabulate( same ), tabulate( net ) );
  try
  {
    replace_leaves( net, { { function_ref::full_adder(), function_ref::table( tables::and2() ) } } );
    FAIL();
  }
  catch ( error const& e )
  {
    EXPECT_EQ( e.code(), errc::signature_mismatch );
  }
}

TEST( RippleAdder, Structure )
{
  auto const one = ripple_adder( 1 );
  EXPECT_EQ( one.vertices.size(), 1u );
  EXPECT_EQ( one.priout.size(), 2u );
  auto const three = ripple_adder( 3 );
  binding in{ { "c_0", false } };
  for ( unsigned i = 0; i < 3; ++i )
  {
    in["a_" + std::to_string( i )] = bool( ( 5 >> i ) & 1 );
    in["b_" + std::to_string( i )] = bool( ( 3 >> i ) & 1 );
  }
  auto const out = evaluate( three, {}, in );
  std::vector<bool> bits;
  for ( auto const& id : three.priout )
  {
    bits.push_back( std::get<bool>( out.at( id ) ) );
  }
  EXPECT_EQ( decode_int( encoding::std_binary( 4 ), bits ), 8 );
}
