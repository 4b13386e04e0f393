/*!
  \file lipschitz.hpp
  \brief Exact Lipschitz analysis of Boolean functions under induced metrics,
         and the adder reference topology.

  The minimal constant is the maximum of e(f(a), f(b)) / d(a, b) over all
  unordered pairs of distinct domain points.  A pair with d = 0 and e > 0
  makes the constant infinite; pairs with d = e = 0 are ignored.  Domain
  points that are not code words of the input metric (e.g. non-monotone
  unary patterns) are excluded from the domain.
*/

#pragma once

#include "boolfunc.hpp"
#include "coding.hpp"
#include "error.hpp"
#include "network.hpp"
#include "parallel.hpp"
#include "rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace boolnet
{

inline constexpr unsigned max_lipschitz_inputs = 16;

struct lipschitz_report
{
  std::optional<rational> min_constant; /* nullopt: infinite */
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
  std::uint64_t pair_count{ 0 };

  bool infinite() const { return !min_constant.has_value(); }
};

struct k_lipschitz_result
{
  bool holds{ true };
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness; /* first violating pair */
};

namespace detail
{

struct metric_tables
{
  std::vector<std::uint64_t> domain; /* input indices inside the input code */
  std::vector<std::vector<std::int64_t>> in_decoded, out_decoded;
};

inline metric_tables prepare( tabulated_function const& f, induced_metric const& d, induced_metric const& e )
{
  check_metric( d );
  check_metric( e );
  if ( d.width() != f.num_inputs )
  {
    throw error( errc::width_mismatch, "input metric covers " + std::to_string( d.width() ) + " bits, function has " +
                                           std::to_string( f.num_inputs ) + " inputs" );
  }
  if ( e.width() != f.num_outputs )
  {
    throw error( errc::width_mismatch, "output metric covers " + std::to_string( e.width() ) + " bits, function has " +
                                           std::to_string( f.num_outputs ) + " outputs" );
  }
  if ( f.num_inputs > max_lipschitz_inputs )
  {
    throw error( errc::too_wide, std::to_string( f.num_inputs ) + " input bits exceed the exhaustive limit of " +
                                     std::to_string( max_lipschitz_inputs ) );
  }
  metric_tables t;
  t.in_decoded.resize( f.rows.size() );
  t.out_decoded.resize( f.rows.size() );
  for ( std::uint64_t i = 0; i < f.rows.size(); ++i )
  {
    auto din = d.decode_index( i );
    if ( !din )
    {
      continue;
    }
    auto dout = e.decode_index( f.rows[i] );
    if ( !dout )
    {
      throw error( errc::invalid_pattern, "output " + bits_to_string( bits_of_index( f.rows[i], f.num_outputs ) ) +
                                              " is outside the output metric's code" );
    }
    t.domain.push_back( i );
    t.in_decoded[i] = std::move( *din );
    t.out_decoded[i] = std::move( *dout );
  }
  return t;
}

} // namespace detail

/*! \brief Minimal Lipschitz constant by exhaustive pair scan.

  The witness is the lexicographically smallest maximising pair (first
  index, second index).  Work is split across `jobs` workers over the
  first index; the result does not depend on `jobs`.
*/
inline lipschitz_report min_lipschitz( tabulated_function const& f, induced_metric const& d, induced_metric const& e,
                                       unsigned jobs = 1 )
{
  auto const t = detail::prepare( f, d, e );
  auto const& dom = t.domain;

  struct partial
  {
    bool infinite{ false };
    std::int64_t num{ -1 }, den{ 1 }; /* best e/d so far, unscaled */
    std::pair<std::uint64_t, std::uint64_t> witness{};
  };
  std::vector<partial> parts( std::max( 1u, jobs ) );

  parallel_chunks( dom.size(), jobs, [&]( unsigned chunk, std::size_t begin, std::size_t end ) {
    partial p;
    for ( auto x = begin; x < end; ++x )
    {
      auto const a = dom[x];
      for ( auto y = x + 1; y < dom.size(); ++y )
      {
        auto const b = dom[y];
        auto const dd = d.raw_distance( t.in_decoded[a], t.in_decoded[b], a, b );
        auto const ee = e.raw_distance( t.out_decoded[a], t.out_decoded[b], f.rows[a], f.rows[b] );
        if ( dd == 0 )
        {
          if ( ee > 0 && !p.infinite )
          {
            p.infinite = true;
            p.witness = { a, b };
          }
          continue;
        }
        if ( !p.infinite && ee * p.den > p.num * dd )
        {
          p.num = ee;
          p.den = dd;
          p.witness = { a, b };
        }
      }
    }
    parts[chunk] = p;
  } );

  lipschitz_report report;
  auto const n = static_cast<std::uint64_t>( dom.size() );
  report.pair_count = n * ( n - ( n > 0 ? 1 : 0 ) ) / 2;
  partial best;
  for ( auto const& p : parts )
  {
    if ( p.infinite )
    {
      if ( !best.infinite )
      {
        best = p;
      }
      continue;
    }
    if ( !best.infinite && p.num >= 0 && p.num * best.den > best.num * p.den )
    {
      best = p;
    }
  }
  if ( best.infinite )
  {
    report.witness = best.witness;
    return report;
  }
  if ( best.num < 0 )
  {
    report.min_constant = rational( 0 );
    return report;
  }
  report.min_constant = rational( best.num, best.den ) * e.scale / d.scale;
  report.witness = best.witness;
  return report;
}

/*! \brief Direct check of e(f(a), f(b)) <= k d(a, b), stopping at the first violation. */
inline k_lipschitz_result is_k_lipschitz( tabulated_function const& f, induced_metric const& d, induced_metric const& e,
                                          rational const& k )
{
  if ( k < rational( 0 ) )
  {
    throw error( errc::parse_error, "Lipschitz bound must be nonnegative" );
  }
  auto const t = detail::prepare( f, d, e );
  auto const& dom = t.domain;
  for ( std::size_t x = 0; x < dom.size(); ++x )
  {
    auto const a = dom[x];
    for ( auto y = x + 1; y < dom.size(); ++y )
    {
      auto const b = dom[y];
      auto const dd = d.raw_distance( t.in_decoded[a], t.in_decoded[b], a, b );
      auto const ee = e.raw_distance( t.out_decoded[a], t.out_decoded[b], f.rows[a], f.rows[b] );
      if ( e.scale * rational( ee ) > k * d.scale * rational( dd ) )
      {
        return { false, std::make_pair( a, b ) };
      }
    }
  }
  return { true, std::nullopt };
}

inline lipschitz_report min_lipschitz( network const& net, induced_metric const& d, induced_metric const& e,
                                       unsigned jobs = 1 )
{
  return min_lipschitz( tabulate_function( net ), d, e, jobs );
}

inline k_lipschitz_result is_k_lipschitz( network const& net, induced_metric const& d, induced_metric const& e,
                                          rational const& k )
{
  return is_k_lipschitz( tabulate_function( net ), d, e, k );
}

/*! \brief n-bit ripple-carry adder.

  Inputs in declaration order: a_0..a_{n-1}, b_0..b_{n-1}, c_0.
  Primary outputs in order: s_0..s_{n-1}, c_n, so that output index bits
  read as the (n+1)-bit sum.
*/
inline network ripple_adder( unsigned n )
{
  if ( n == 0 )
  {
    throw error( errc::width_mismatch, "adder width must be at least 1" );
  }
  network net;
  auto const idx = []( char const* base, unsigned i ) { return std::string( base ) + "_" + std::to_string( i ); };
  for ( unsigned i = 0; i < n; ++i )
  {
    net.add_edge( idx( "a", i ), data_type::boolean() );
  }
  for ( unsigned i = 0; i < n; ++i )
  {
    net.add_edge( idx( "b", i ), data_type::boolean() );
  }
  net.add_edge( "c_0", data_type::boolean() );
  for ( unsigned i = 0; i < n; ++i )
  {
    net.add_edge( idx( "s", i ), data_type::boolean() );
    net.add_edge( idx( "c", i + 1 ), data_type::boolean() );
    net.add_vertex( { idx( "fa", i ),
                      {},
                      { idx( "a", i ), idx( "b", i ), idx( "c", i ) },
                      { idx( "s", i ), idx( "c", i + 1 ) },
                      function_ref::full_adder() } );
    net.priout.push_back( idx( "s", i ) );
  }
  net.priout.push_back( idx( "c", n ) );
  return net;
}

/*! \brief d: |w_n(a) - w_n(a')| + |w_n(b) - w_n(b')| + |c - c'| */
inline induced_metric adder_input_metric( unsigned n )
{
  return { norm_kind::l1, { encoding::std_binary( n ), encoding::std_binary( n ), encoding::bit() }, rational( 1 ) };
}

/*! \brief e: |w_{n+1}(c_n, s) - w_{n+1}(c_n', s')| */
inline induced_metric adder_output_metric( unsigned n )
{
  return { norm_kind::l1, { encoding::std_binary( n + 1 ) }, rational( 1 ) };
}

/*! \brief The leaf (a, b, c) -> (false, c). */
inline function_ref carry_through_leaf()
{
  return function_ref::tables_of( { truth_table::from_string( 3, "00000000" ), truth_table::from_string( 3, "00001111" ) } );
}

/*! \brief Same topology with each func rewritten by `map` (nullopt keeps it). */
inline network replace_leaves( network const& net, std::function<std::optional<function_ref>( function_ref const& )> const& map )
{
  network result = net;
  for ( auto& v : result.vertices )
  {
    auto repl = map( v.func );
    if ( !repl )
    {
      continue;
    }
    if ( repl->num_params() != v.func.num_params() || repl->num_outs() != v.func.num_outs() ||
         ( repl->num_ins() && *repl->num_ins() != v.ins.size() ) )
    {
      throw error( errc::signature_mismatch, "replacement " + repl->name() + " does not fit vertex '" + v.name + "' (" +
                                                 v.func.name() + ")" );
    }
    v.func = std::move( *repl );
  }
  auto const report = validate( result );
  if ( !report.ok() )
  {
    throw error( errc::signature_mismatch, report.violations.front() );
  }
  return result;
}

/*! \brief Replaces every func equal to a key of `pairs` by its mapped value. */
inline network replace_leaves( network const& net, std::vector<std::pair<function_ref, function_ref>> const& pairs )
{
  return replace_leaves( net, [&]( function_ref const& f ) -> std::optional<function_ref> {
    for ( auto const& [from, to] : pairs )
    {
      if ( f == from )
      {
        return to;
      }
    }
    return std::nullopt;
  } );
}

} // namespace boolnet
