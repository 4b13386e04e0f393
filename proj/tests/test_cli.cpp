#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace
{

struct outcome
{
  int rc;
  std::string out, err;
};

outcome run( std::vector<std::string> args )
{
  std::ostringstream out, err;
  auto const rc = boolnet::cli::run( args, out, err );
  return { rc, out.str(), err.str() };
}

std::string sample( char const* name )
{
  return std::string( BOOLNET_SAMPLES_DIR ) + "/" + name;
}

class scratch
{
public:
  scratch()
      : dir_( std::filesystem::temp_directory_path() /
              ( "boolnet-cli-" + std::to_string( reinterpret_cast<std::uintptr_t>( this ) ) + "-" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name() ) )
  {
    std::filesystem::create_directories( dir_ );
  }
  ~scratch() { std::filesystem::remove_all( dir_ ); }

  std::string operator()( std::string const& name ) const { return ( dir_ / name ).string(); }

private:
  std::filesystem::path dir_;
};

std::string slurp( std::string const& path )
{
  std::ifstream in( path );
  return { std::istreambuf_iterator<char>( in ), {} };
}

} // namespace

TEST( Cli, ValidateGoodAndBroken )
{
  auto const ok = run( { "validate", sample( "neuron.json" ) } );
  EXPECT_EQ( ok.rc, 0 );
  EXPECT_EQ( ok.out, "{\"ok\":true,\"violations\":[],\"warnings\":[]}\n" );
  auto const bad = run( { "validate", sample( "broken.json" ) } );
  EXPECT_EQ( bad.rc, 1 );
  EXPECT_NE( bad.err.find( "multiple drivers: c" ), std::string::npos );
}

TEST( Cli, Eval )
{
  auto const r = run( { "eval", sample( "neuron.json" ), "--inputs", sample( "neuron_inputs.json" ) } );
  EXPECT_EQ( r.rc, 0 );
  EXPECT_EQ( r.out, "{\"d\":1.0}\n" );
}

TEST( Cli, AdderGolden )
{
  auto const r = run( { "adder", "--n", "2" } );
  EXPECT_EQ( r.rc, 0 );
  EXPECT_EQ( r.out, "{\"min_constant\":\"1/1\",\"witness\":[\"00000\",\"00001\"],\"pairs\":496,\"n\":2,\"pathological\":false}\n" );
  auto const p = run( { "adder", "--n", "3", "--pathological" } );
  EXPECT_NE( p.out.find( "\"min_constant\":\"8/1\"" ), std::string::npos );
}

TEST( Cli, Decouple )
{
  scratch tmp;
  auto const r = run( { "decouple", "enumerate", "--csv", tmp( "pairs.csv" ) } );
  EXPECT_EQ( r.rc, 0 );
  EXPECT_EQ( r.out.rfind( "pairs: 376\n", 0 ), 0u );
  auto const csv = slurp( tmp( "pairs.csv" ) );
  EXPECT_EQ( std::count( csv.begin(), csv.end(), '\n' ), 377 ); // header + rows
  auto const b = run( { "decouple", "biclique" } );
  EXPECT_EQ( b.out, "{\"S1\":[0,6,7,41,43,44],\"S0\":[10,15,16,17,19,71,73,74,75,79],\"size\":[6,10]}\n" );
  auto const v = run( { "decouple", "verify" } );
  EXPECT_EQ( v.rc, 0 );
  EXPECT_NE( v.out.find( "\"verified\":true" ), std::string::npos );
}

TEST( Cli, BnnGadgetsAndLowering )
{
  auto const g = run( { "bnn", "gadgets" } );
  EXPECT_EQ( g.rc, 0 );
  EXPECT_NE( g.out.find( "verified" ), std::string::npos );
  auto const l = run( { "bnn", "lower", "--w", "1,-1,1", "--c", "1" } );
  EXPECT_EQ( l.rc, 0 );
  EXPECT_NE( l.out.find( "equivalence: verified (8 assignments)" ), std::string::npos );
  auto const c = run( { "bnn", "compile", "--table", "0110" } );
  EXPECT_EQ( c.rc, 0 );
  EXPECT_NE( c.out.find( "equivalence: verified (4 assignments)" ), std::string::npos );
  EXPECT_EQ( run( { "bnn", "lower", "--w", "1,2", "--c", "0" } ).rc, 1 );
}

TEST( Cli, QuantizeSynthCommutePipeline )
{
  scratch tmp;
  EXPECT_EQ( run( { "quantize", "--net", sample( "neuron.json" ), "--format", "4,2", "--out", tmp( "g2.json" ) } ).rc, 0 );
  EXPECT_EQ( run( { "synth", "--net", tmp( "g2.json" ), "--out", tmp( "g3.json" ) } ).rc, 0 );
  auto const c = run( { "commute", "--g2", tmp( "g2.json" ), "--g3", tmp( "g3.json" ) } );
  EXPECT_EQ( c.rc, 0 );
  EXPECT_EQ( c.out, "{\"commutes\":true,\"assignments\":256}\n" );
  EXPECT_EQ( run( { "simplify", "--net", tmp( "g3.json" ), "--out", tmp( "g3s.json" ) } ).rc, 0 );
  auto const s = run( { "commute", "--g2", tmp( "g2.json" ), "--g3", tmp( "g3s.json" ) } );
  EXPECT_EQ( s.out, c.out );
  auto const e = run( { "estimate", "--a", sample( "neuron.json" ), "--b", tmp( "g2.json" ), "--n", "500" } );
  EXPECT_EQ( e.rc, 0 );
  EXPECT_NE( e.out.find( "\"samples\":500" ), std::string::npos );
}

TEST( Cli, ExitCodes )
{
  EXPECT_EQ( run( {} ).rc, 1 );
  EXPECT_EQ( run( { "nonsense" } ).rc, 1 );
  EXPECT_EQ( run( { "adder", "--n", "9" } ).rc, 1 );
  auto const missing = run( { "validate", "/nonexistent/net.json" } );
  EXPECT_EQ( missing.rc, 1 );
  EXPECT_EQ( missing.err.rfind( "error: ", 0 ), 0u );
  // resource guard: 24 input bits exceed the exhaustive commute limit
  scratch tmp;
  ASSERT_EQ( run( { "quantize", "--net", sample( "neuron.json" ), "--format", "12,4", "--out", tmp( "g2.json" ) } ).rc, 0 );
  ASSERT_EQ( run( { "synth", "--net", tmp( "g2.json" ), "--out", tmp( "g3.json" ) } ).rc, 0 );
  auto const guard = run( { "commute", "--g2", tmp( "g2.json" ), "--g3", tmp( "g3.json" ) } );
  EXPECT_EQ( guard.rc, 2 );
  EXPECT_NE( guard.err.find( "TooWide" ), std::string::npos );
}

TEST( Cli, JobsDoNotChangeOutput )
{
  for ( auto const& args : std::vector<std::vector<std::string>>{
            { "adder", "--n", "3", "--pathological" },
            { "decouple", "calibrate" },
            { "decouple", "biclique" },
            { "lipschitz", sample( "circuit.json" ), "--d", "L1: bit | bit | bit", "--e", "L1: bit", "--k", "1/2" } } )
  {
    auto one = args, four = args;
    one.insert( one.end(), { "--jobs", "1" } );
    four.insert( four.end(), { "--jobs", "4" } );
    auto const a = run( one ), b = run( four );
    EXPECT_EQ( a.rc, b.rc );
    EXPECT_EQ( a.out, b.out ) << args[0];
  }
}

TEST( Cli, ExportDot )
{
  auto const r = run( { "export-dot", sample( "circuit.json" ) } );
  EXPECT_EQ( r.rc, 0 );
  EXPECT_EQ( r.out.rfind( "digraph", 0 ), 0u );
}
