/*!
  \file cli.hpp
  \brief The boolnet-forge command line, as a callable entry point.

  Exit codes: 0 success, 1 user or validation error, 2 guard (input too
  wide or search too large).
*/

#pragma once

#include <boolnet/boolnet.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace boolnet::cli
{

namespace detail
{

/* a network file may carry a "params" object next to the network fields */
struct bundle
{
  network net;
  binding params;
};

inline bundle read_bundle( std::string const& path, std::string const& params_path = {} )
{
  auto const j = parse_json( read_file( path ), path );
  bundle b{ network_from_json( j ), {} };
  if ( !params_path.empty() )
  {
    b.params = binding_from_json( parse_json( read_file( params_path ), params_path ), b.net );
  }
  else if ( j.contains( "params" ) )
  {
    b.params = binding_from_json( j.at( "params" ), b.net );
  }
  return b;
}

inline std::string bundle_to_string( network const& net, binding const& params )
{
  auto j = to_json( net );
  if ( !params.empty() )
  {
    j["params"] = to_json( params );
  }
  return j.dump( 2 ) + "\n";
}

inline void write_text( std::string const& path, std::string const& text )
{
  std::ofstream o( path, std::ios::binary );
  if ( !o )
  {
    throw error( errc::parse_error, "cannot write '" + path + "'" );
  }
  o << text;
}

/* `text` to the file, or to `out` when no path is given */
inline void emit( std::string const& path, std::string const& text, std::ostream& out )
{
  if ( path.empty() )
  {
    out << text;
  }
  else
  {
    write_text( path, text );
  }
}

inline rational to_rational( std::string const& s )
{
  auto const r = parse_rational( s );
  if ( r < rational( 0 ) )
  {
    throw error( errc::parse_error, "expected a nonnegative rational, got '" + s + "'" );
  }
  return r;
}

inline std::vector<std::size_t> index_list( std::string const& s )
{
  std::vector<std::size_t> r;
  std::stringstream in( s );
  std::string item;
  while ( std::getline( in, item, ',' ) )
  {
    try
    {
      std::size_t used = 0;
      auto const v = std::stoul( item, &used );
      if ( used != item.size() )
      {
        throw std::invalid_argument( item );
      }
      r.push_back( v );
    }
    catch ( std::exception const& )
    {
      throw error( errc::parse_error, "bad index '" + item + "' in list '" + s + "'" );
    }
  }
  return r;
}

inline std::vector<int> weight_list( std::string const& s )
{
  std::vector<int> r;
  std::stringstream in( s );
  std::string item;
  while ( std::getline( in, item, ',' ) )
  {
    if ( item == "+1" || item == "1" )
    {
      r.push_back( 1 );
    }
    else if ( item == "-1" )
    {
      r.push_back( -1 );
    }
    else
    {
      throw error( errc::parse_error, "BNN weight '" + item + "' is not +1 or -1" );
    }
  }
  return r;
}

inline fixed_format format_of( std::string const& s )
{
  /* "T,F" or "T,F,u" */
  std::vector<std::string> parts;
  std::stringstream in( s );
  std::string item;
  while ( std::getline( in, item, ',' ) )
  {
    parts.push_back( item );
  }
  if ( parts.size() < 2 || parts.size() > 3 || ( parts.size() == 3 && parts[2] != "u" && parts[2] != "s" ) )
  {
    throw error( errc::parse_error, "format '" + s + "' is not T,F or T,F,u" );
  }
  fixed_format f;
  try
  {
    f.total_bits = static_cast<unsigned>( std::stoul( parts[0] ) );
    f.frac_bits = static_cast<unsigned>( std::stoul( parts[1] ) );
  }
  catch ( std::exception const& )
  {
    throw error( errc::parse_error, "format '" + s + "' is not T,F or T,F,u" );
  }
  f.is_signed = parts.size() < 3 || parts[2] == "s";
  if ( !f.valid() )
  {
    throw error( errc::parse_error, "invalid fixed-point format " + f.str() );
  }
  return f;
}

inline std::vector<interval> box_of( std::string const& s )
{
  /* "lo,hi" or "lo,hi;lo,hi;..." */
  std::vector<interval> r;
  std::stringstream in( s );
  std::string range;
  while ( std::getline( in, range, ';' ) )
  {
    auto const comma = range.find( ',' );
    try
    {
      if ( comma == std::string::npos )
      {
        throw std::invalid_argument( range );
      }
      r.push_back( { std::stod( range.substr( 0, comma ) ), std::stod( range.substr( comma + 1 ) ) } );
    }
    catch ( std::exception const& )
    {
      throw error( errc::parse_error, "box range '" + range + "' is not lo,hi" );
    }
    if ( r.back().lo > r.back().hi )
    {
      throw error( errc::parse_error, "box range '" + range + "' is empty" );
    }
  }
  return r;
}

inline std::string witness_json( std::optional<std::pair<std::uint64_t, std::uint64_t>> const& w, unsigned width )
{
  if ( !w )
  {
    return "null";
  }
  return "[\"" + bits_to_string( bits_of_index( w->first, width ) ) + "\", \"" +
         bits_to_string( bits_of_index( w->second, width ) ) + "\"]";
}

inline std::string report_json( lipschitz_report const& r, unsigned width )
{
  json j;
  j["min_constant"] = r.infinite() ? std::string( "inf" ) : to_string( *r.min_constant );
  j["witness"] = json::parse( witness_json( r.witness, width ) );
  j["pairs"] = r.pair_count;
  return j.dump();
}

inline std::string verified_line( std::uint64_t n )
{
  return "equivalence: verified (" + std::to_string( n ) + " assignments)\n";
}

/* exhaustive comparison of two Boolean networks over the same input order */
inline std::uint64_t check_equivalent( network const& a, network const& b )
{
  auto const ta = tabulate_function( a ), tb = tabulate_function( b );
  if ( ta != tb )
  {
    throw error( errc::signature_mismatch, "compiled network is not equivalent to its specification" );
  }
  return ta.rows.size();
}

} // namespace detail

/*! \brief Runs one command line; `args` excludes the program name. */
inline int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "boolnet-forge: typed dataflow networks across real, fixed-point and Boolean levels", "boolnet-forge" };
  app.require_subcommand( 1 );
  app.set_help_all_flag( "--help-all", "Expand all help" );
  unsigned jobs = default_jobs();
  auto add_jobs = [&]( CLI::App* c ) {
    c->add_option( "--jobs", jobs, "Worker threads (default: BOOLNET_JOBS or 1); never changes results" )
        ->check( CLI::PositiveNumber );
  };
  std::string const metric_help = "Metric, e.g. \"L1: bin[3] | bin[3] | bit\" (components from bit 0 up; "
                                  "norms L1, Linf, Hamming with optional *p/q; encodings bin[k], tc[k], "
                                  "unary[k], gray[k], pm1[k], bit)";

  /* validate */
  std::string net_path;
  auto* validate_cmd = app.add_subcommand( "validate", "Check the network rules and report violations" );
  validate_cmd->add_option( "net", net_path, "Network JSON" )->required();
  add_jobs( validate_cmd );

  /* eval */
  std::string params_path, inputs_path;
  auto* eval_cmd = app.add_subcommand( "eval", "Evaluate a network at given parameters and inputs" );
  eval_cmd->add_option( "net", net_path, "Network JSON" )->required();
  eval_cmd->add_option( "--params", params_path, "Parameter binding JSON (default: the network file's \"params\")" );
  eval_cmd->add_option( "--inputs", inputs_path, "Input binding JSON" )->required();
  add_jobs( eval_cmd );

  /* lipschitz */
  std::string d_text, e_text, k_text;
  auto* lip_cmd = app.add_subcommand( "lipschitz", "Exact minimal Lipschitz constant of a Boolean network" );
  lip_cmd->add_option( "net", net_path, "Boolean network JSON" )->required();
  lip_cmd->add_option( "--d", d_text, "Input " + metric_help )->required();
  lip_cmd->add_option( "--e", e_text, "Output metric, same syntax" )->required();
  lip_cmd->add_option( "--k", k_text, "Also test k-Lipschitz for this rational k" );
  lip_cmd->add_option( "--params", params_path, "Parameter binding JSON" );
  add_jobs( lip_cmd );

  /* adder */
  unsigned adder_n = 2;
  bool pathological = false;
  std::string out_path;
  auto* adder_cmd = app.add_subcommand( "adder", "Ripple-carry adder and its Lipschitz constant under the adder metrics" );
  adder_cmd->add_option( "--n", adder_n, "Bit width" )->check( CLI::Range( 1u, 7u ) );
  adder_cmd->add_flag( "--pathological", pathological, "Replace every full adder by (a,b,c) -> (0,c)" );
  adder_cmd->add_option( "--out", out_path, "Write the network JSON here" );
  add_jobs( adder_cmd );

  /* decouple */
  auto* dec_cmd = app.add_subcommand( "decouple", "Two-node reversed-carry experiment" );
  dec_cmd->require_subcommand( 1 );
  std::string k_dec = "2", csv_path = "pairs.csv", s1_text, s0_text;
  bool c_lsb = false, s1_lsb = false, carry_up = false;
  auto add_convention = [&]( CLI::App* c ) {
    c->add_option( "--k", k_dec, "Lipschitz bound as p/q or integer (default 2)" );
    c->add_flag( "--c-lsb", c_lsb, "Input convention: c least significant" );
    c->add_flag( "--s1-lsb", s1_lsb, "Output convention: s_1 least significant" );
    c->add_flag( "--carry-f0-to-f1", carry_up, "Carry flows from f_0 to f_1" );
    add_jobs( c );
  };
  auto* enum_cmd = dec_cmd->add_subcommand( "enumerate", "List the k-Lipschitz (f_1, f_0) pairs" );
  add_convention( enum_cmd );
  enum_cmd->add_option( "--csv", csv_path, "CSV output (default pairs.csv)" );
  auto* bic_cmd = dec_cmd->add_subcommand( "biclique", "Maximum edge biclique of the compatibility graph" );
  add_convention( bic_cmd );
  auto* cal_cmd = dec_cmd->add_subcommand( "calibrate", "Pair counts under all eight bit-order conventions" );
  cal_cmd->add_option( "--k", k_dec, "Lipschitz bound (default 2)" );
  add_jobs( cal_cmd );
  auto* ver_cmd = dec_cmd->add_subcommand( "verify", "Re-check every combination of a biclique from scratch" );
  add_convention( ver_cmd );
  ver_cmd->add_option( "--s1", s1_text, "Left indices, comma separated (default: the maximum biclique)" );
  ver_cmd->add_option( "--s0", s0_text, "Right indices, comma separated" );

  /* bnn */
  auto* bnn_cmd = app.add_subcommand( "bnn", "Binarised neuron tools" );
  bnn_cmd->require_subcommand( 1 );
  std::string table_text, w_text;
  int c_value = 0;
  auto* comp_cmd = bnn_cmd->add_subcommand( "compile", "Compile a truth table to a network of BNN nodes" );
  comp_cmd->add_option( "--table", table_text, "Truth table bits, index order (input j is bit j)" )->required();
  comp_cmd->add_option( "--out", out_path, "Write the network JSON here instead of stdout" );
  add_jobs( comp_cmd );
  auto* lower_cmd = bnn_cmd->add_subcommand( "lower", "Lower one BNN node to an XNOR / popcount / compare netlist" );
  lower_cmd->add_option( "--w", w_text, "Weights, e.g. +1,-1,+1" )->required();
  lower_cmd->add_option( "--c", c_value, "Threshold in [-n, n]" )->required();
  lower_cmd->add_option( "--out", out_path, "Write the netlist JSON here instead of stdout" );
  add_jobs( lower_cmd );
  auto* gad_cmd = bnn_cmd->add_subcommand( "gadgets", "Tabulate the AND, OR, NOT and constant gadgets" );
  add_jobs( gad_cmd );

  /* quantize */
  std::string format_text;
  auto* quant_cmd = app.add_subcommand( "quantize", "Quantise a real network to fixed point" );
  quant_cmd->add_option( "--net", net_path, "Real network JSON" )->required();
  quant_cmd->add_option( "--format", format_text, "Format for every edge: T,F (signed) or T,F,u" )->required();
  quant_cmd->add_option( "--params", params_path, "Real parameter binding JSON (default: the network file's \"params\")" );
  quant_cmd->add_option( "--out", out_path, "Write the fixed-point network (with its quantised \"params\") here" );
  add_jobs( quant_cmd );

  /* synth */
  auto* synth_cmd = app.add_subcommand( "synth", "Core-generate a Boolean netlist from a fixed-point network" );
  synth_cmd->add_option( "--net", net_path, "Fixed-point network JSON with \"params\"" )->required();
  synth_cmd->add_option( "--params", params_path, "Quantised parameter binding JSON" );
  synth_cmd->add_option( "--out", out_path, "Write the netlist JSON here and print a report line" );
  add_jobs( synth_cmd );

  /* commute */
  std::string g2_path, g3_path;
  auto* comm_cmd = app.add_subcommand( "commute", "Exhaustively check that the netlist commutes with the fixed-point network" );
  comm_cmd->add_option( "--g2", g2_path, "Fixed-point network JSON" )->required();
  comm_cmd->add_option( "--g3", g3_path, "Netlist JSON with bits named <edge>[i]" )->required();
  comm_cmd->add_option( "--params", params_path, "Quantised parameter binding JSON" );
  add_jobs( comm_cmd );

  /* simplify */
  auto* simp_cmd = app.add_subcommand( "simplify", "Constant propagation and dead-vertex elimination" );
  simp_cmd->add_option( "--net", net_path, "Boolean netlist JSON" )->required();
  simp_cmd->add_option( "--out", out_path, "Write the result here and print a report line" );
  add_jobs( simp_cmd );

  /* estimate */
  std::string a_path, b_path, a_params, b_params, loss_text = "absdiff", box_text = "-1,1";
  std::size_t count = 10000;
  std::uint64_t seed = 42;
  bool bits = false, exhaustive = false;
  auto* est_cmd = app.add_subcommand( "estimate", "Sampled mean loss between two networks" );
  est_cmd->add_option( "--a", a_path, "First network JSON (real, fixed or Boolean)" )->required();
  est_cmd->add_option( "--b", b_path, "Second network JSON" )->required();
  est_cmd->add_option( "--params-a", a_params, "Parameters of the first network" );
  est_cmd->add_option( "--params-b", b_params, "Parameters of the second network" );
  est_cmd->add_option( "--loss", loss_text, "absdiff or zeroone" )->check( CLI::IsMember( { "absdiff", "zeroone" } ) );
  est_cmd->add_option( "--n", count, "Number of samples" );
  est_cmd->add_option( "--seed", seed, "Random seed" );
  est_cmd->add_option( "--box", box_text, "Input ranges: lo,hi for all inputs or lo,hi;lo,hi;..." );
  est_cmd->add_flag( "--bits", bits, "Sample uniform bit patterns instead of the box" );
  est_cmd->add_flag( "--exhaustive", exhaustive, "Every bit pattern once" );
  add_jobs( est_cmd );

  /* export-dot */
  auto* dot_cmd = app.add_subcommand( "export-dot", "Graphviz rendering of a network" );
  dot_cmd->add_option( "net", net_path, "Network JSON" )->required();
  dot_cmd->add_option( "--out", out_path, "Write here instead of stdout" );
  add_jobs( dot_cmd );

  std::vector<char const*> argv{ "boolnet-forge" };
  for ( auto const& a : args )
  {
    argv.push_back( a.c_str() );
  }
  try
  {
    app.parse( static_cast<int>( argv.size() ), argv.data() );
  }
  catch ( CLI::ParseError const& e )
  {
    return app.exit( e, out, err ) == 0 ? 0 : 1;
  }

  auto convention = [&] { return decouple_convention{ !c_lsb, !s1_lsb, !carry_up }; };

  try
  {
    if ( *validate_cmd )
    {
      auto const net = read_network( net_path );
      auto const report = validate( net );
      for ( auto const& v : report.violations )
      {
        err << "violation: " << v << "\n";
      }
      for ( auto const& w : report.warnings )
      {
        err << "warning: " << w << "\n";
      }
      json j{ { "ok", report.ok() }, { "violations", report.violations }, { "warnings", report.warnings } };
      out << j.dump() << "\n";
      return report.ok() ? 0 : 1;
    }
    if ( *eval_cmd )
    {
      auto const b = detail::read_bundle( net_path, params_path );
      auto const inputs = binding_from_json( parse_json( read_file( inputs_path ), inputs_path ), b.net );
      out << to_json( evaluate( b.net, b.params, inputs ) ).dump() << "\n";
      return 0;
    }
    if ( *lip_cmd )
    {
      auto const b = detail::read_bundle( net_path, params_path );
      auto const f = tabulate_function( b.net, b.params, jobs );
      auto const d = parse_metric( d_text ), e = parse_metric( e_text );
      auto const report = min_lipschitz( f, d, e, jobs );
      auto j = json::parse( detail::report_json( report, f.num_inputs ) );
      if ( !k_text.empty() )
      {
        auto const r = is_k_lipschitz( f, d, e, detail::to_rational( k_text ) );
        j["k"] = to_string( detail::to_rational( k_text ) );
        j["k_lipschitz"] = r.holds;
      }
      out << j.dump() << "\n";
      return 0;
    }
    if ( *adder_cmd )
    {
      auto net = ripple_adder( adder_n );
      if ( pathological )
      {
        net = replace_leaves( net, { { function_ref::full_adder(), carry_through_leaf() } } );
      }
      auto const report = min_lipschitz( net, adder_input_metric( adder_n ), adder_output_metric( adder_n ), jobs );
      if ( !out_path.empty() )
      {
        detail::write_text( out_path, network_to_string( net ) );
      }
      auto j = json::parse( detail::report_json( report, 2 * adder_n + 1 ) );
      j["n"] = adder_n;
      j["pathological"] = pathological;
      out << j.dump() << "\n";
      return 0;
    }
    if ( *enum_cmd )
    {
      auto const k = detail::to_rational( k_dec );
      auto const pairs = enumerate_klipschitz_pairs( k, convention(), jobs );
      auto const nodes = candidate_nodes();
      std::string csv = "f1_bits_s,f1_bits_t,f0_bits_s,f0_bits_t\n";
      for ( auto const& [u, v] : pairs )
      {
        csv += nodes[u].g_s.str() + "," + nodes[u].g_t.str() + "," + nodes[v].g_s.str() + "," + nodes[v].g_t.str() + "\n";
      }
      detail::write_text( csv_path, csv );
      out << "pairs: " << pairs.size() << "\n";
      json j{ { "k", to_string( k ) }, { "convention", convention().str() }, { "pairs", pairs.size() }, { "csv", csv_path } };
      out << j.dump() << "\n";
      return 0;
    }
    if ( *bic_cmd || *ver_cmd )
    {
      auto const k = detail::to_rational( k_dec );
      auto const g = build_bipartite( enumerate_klipschitz_pairs( k, convention(), jobs ) );
      biclique b;
      if ( *ver_cmd && ( !s1_text.empty() || !s0_text.empty() ) )
      {
        b = { detail::index_list( s1_text ), detail::index_list( s0_text ) };
      }
      else
      {
        b = max_edge_biclique( g );
      }
      json j{ { "S1", b.s1 }, { "S0", b.s0 }, { "size", { b.s1.size(), b.s0.size() } } };
      if ( *ver_cmd )
      {
        auto const ok = verify_decoupling( g, b, k, convention() );
        j["combinations"] = b.num_edges();
        j["verified"] = ok;
        out << j.dump() << "\n";
        return ok ? 0 : 1;
      }
      out << j.dump() << "\n";
      return 0;
    }
    if ( *cal_cmd )
    {
      auto const k = detail::to_rational( k_dec );
      json rows = json::array();
      for ( auto const& row : calibrate( k, jobs ) )
      {
        out << row.convention.str() << " " << row.count << "\n";
        rows.push_back( { { "convention", row.convention.str() }, { "pairs", row.count } } );
      }
      out << json{ { "k", to_string( k ) }, { "counts", rows } }.dump() << "\n";
      return 0;
    }
    if ( *comp_cmd )
    {
      std::string bits_text = table_text;
      auto const t = truth_table::from_string( bits_text );
      auto const net = tt_to_bnn( t );
      auto const n = detail::check_equivalent( net, table_network( t ) );
      detail::emit( out_path, network_to_string( net ), out );
      out << detail::verified_line( n );
      return 0;
    }
    if ( *lower_cmd )
    {
      bnn_node const node{ detail::weight_list( w_text ), c_value };
      auto const net = bnn_to_netlist( node );
      auto const n = detail::check_equivalent( net, table_network( bnn_table( node ) ) );
      detail::emit( out_path, network_to_string( net ), out );
      out << detail::verified_line( n );
      return 0;
    }
    if ( *gad_cmd )
    {
      struct row
      {
        char const* name;
        gadget_kind kind;
        truth_table expected;
      };
      std::vector<row> const rows{ { "AND", gadget_kind::and_, tables::and2() },
                                   { "OR", gadget_kind::or_, tables::or2() },
                                   { "NOT", gadget_kind::not_, tables::not1() },
                                   { "TRUE", gadget_kind::const_true, truth_table::from_string( 0, "1" ) } };
      bool ok = true;
      for ( auto const& r : rows )
      {
        auto const g = gadget( r.kind );
        auto const t = bnn_table( g );
        ok &= t == r.expected;
        out << r.name << " " << g.func().name() << " " << t.str() << "\n";
      }
      out << ( ok ? "verified" : "MISMATCH" ) << "\n";
      return ok ? 0 : 1;
    }
    if ( *quant_cmd )
    {
      auto const b = detail::read_bundle( net_path, params_path );
      auto const q = quantize_network( b.net, detail::format_of( format_text ), b.params );
      detail::emit( out_path, detail::bundle_to_string( q.net, q.params ), out );
      if ( !out_path.empty() )
      {
        out << json{ { "vertices", q.net.vertices.size() }, { "format", detail::format_of( format_text ).str() } }.dump()
            << "\n";
      }
      return 0;
    }
    if ( *synth_cmd )
    {
      auto const b = detail::read_bundle( net_path, params_path );
      auto const g3 = core_generate( b.net, b.params );
      detail::emit( out_path, network_to_string( g3.netlist ), out );
      if ( !out_path.empty() )
      {
        out << json{ { "vertices", g3.netlist.vertices.size() }, { "input_width", g3.input_width() } }.dump() << "\n";
      }
      return 0;
    }
    if ( *comm_cmd )
    {
      auto const g2 = detail::read_bundle( g2_path, params_path );
      auto const g3 = read_network( g3_path );
      auto const [ins, outs] = ports_by_name( g2.net );
      auto const r = check_commute( g2.net, g2.params, g3, ins, outs, jobs );
      json j{ { "commutes", r.ok }, { "assignments", r.assignments } };
      if ( r.counterexample )
      {
        unsigned width = 0;
        for ( auto const& p : ins )
        {
          width += p.format.total_bits;
        }
        j["counterexample"] = bits_to_string( bits_of_index( *r.counterexample, width ) );
      }
      out << j.dump() << "\n";
      return r.ok ? 0 : 1;
    }
    if ( *simp_cmd )
    {
      auto const net = read_network( net_path );
      simplify_stats st;
      auto const s = simplify( net, &st );
      detail::emit( out_path, network_to_string( s ), out );
      if ( !out_path.empty() )
      {
        out << json{ { "vertices_before", st.vertices_before }, { "vertices_after", st.vertices_after } }.dump() << "\n";
      }
      return 0;
    }
    if ( *est_cmd )
    {
      auto make = []( detail::bundle const& b ) {
        auto const& edges = b.net.edges;
        auto all = [&]( type_kind k ) {
          return std::all_of( edges.begin(), edges.end(), [k]( auto const& e ) { return e.type.kind == k; } );
        };
        if ( all( type_kind::boolean ) )
        {
          return boolean_evaluable( b.net );
        }
        if ( all( type_kind::fixed ) )
        {
          return fixed_evaluable( b.net, b.params );
        }
        return real_evaluable( b.net, b.params );
      };
      auto const a = detail::read_bundle( a_path, a_params ), b = detail::read_bundle( b_path, b_params );
      sample_spec spec;
      spec.count = count;
      spec.seed = seed;
      spec.bit_patterns = bits;
      spec.exhaustive = exhaustive;
      spec.box = detail::box_of( box_text );
      auto const kind = loss_text == "zeroone" ? loss_kind::zero_one : loss_kind::abs_diff;
      auto const value = estimate_metric( make( a ), make( b ), kind, spec );
      auto const n = exhaustive ? ( std::uint64_t{ 1 } << a.net.inputs().size() ) : count;
      json j{ { "loss", loss_text }, { "samples", n }, { "seed", seed }, { "estimate", value } };
      out << j.dump() << "\n";
      return 0;
    }
    if ( *dot_cmd )
    {
      detail::emit( out_path, to_dot( read_network( net_path ) ), out );
      return 0;
    }
  }
  catch ( error const& e )
  {
    err << "error: " << e.what() << "\n";
    return e.is_guard() ? 2 : 1;
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

} // namespace boolnet::cli
