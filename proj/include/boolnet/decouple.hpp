/*!
  \file decouple.hpp
  \brief The reversed-carry two-node experiment: node-function pairs giving
         k-Lipschitz networks, their bipartite compatibility graph, and
         maximum edge bicliques (functional decouplings).

  Each node computes a pair of 2-input functions (g_s, g_t) of
  (carry-in, a_i), carry-in being input 0 of both tables.  Node f_1 sees
  (c, a_1) and passes its carry t to f_0, which sees (t, a_0) and emits
  (s_0, q).  Under the primary convention the input vector is
  (c, a_1, a_0) and the output vector (s_1, s_0, q), most significant
  first, and both spaces use the plain binary L1 metric.
*/

#pragma once

#include "boolfunc.hpp"
#include "coding.hpp"
#include "error.hpp"
#include "lipschitz.hpp"
#include "network.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "truth_table.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace boolnet
{

struct node_pair
{
  truth_table g_s; /* sum output */
  truth_table g_t; /* carry output */

  bool operator==( node_pair const& ) const = default;
};

/*! \brief Bit-significance and carry-direction convention of the experiment. */
struct decouple_convention
{
  bool input_c_msb{ true };     /* (c, a_1, a_0) with c most significant; else c least */
  bool output_s1_msb{ true };   /* (s_1, s_0, q) with s_1 most significant; else q most */
  bool carry_f1_to_f0{ true };  /* carry from the high node to the low node; else low to high */

  bool operator==( decouple_convention const& ) const = default;

  std::string str() const
  {
    return std::string( "in=" ) + ( input_c_msb ? "c-msb" : "c-lsb" ) + ",out=" + ( output_s1_msb ? "s1-msb" : "s1-lsb" ) +
           ",carry=" + ( carry_f1_to_f0 ? "f1->f0" : "f0->f1" );
  }

  /* the eight variants, primary first */
  static std::vector<decouple_convention> all()
  {
    std::vector<decouple_convention> r;
    for ( bool in : { true, false } )
    {
      for ( bool out : { true, false } )
      {
        for ( bool carry : { true, false } )
        {
          r.push_back( { in, out, carry } );
        }
      }
    }
    return r;
  }
};

/*! \brief The 100 candidate node functions: nondegenerate g_s major, g_t minor. */
inline std::vector<node_pair> candidate_nodes()
{
  auto const tables = nondegenerate_tables( 2 );
  std::vector<node_pair> nodes;
  for ( auto const& s : tables )
  {
    for ( auto const& t : tables )
    {
      nodes.push_back( { s, t } );
    }
  }
  return nodes;
}

/*! \brief The two-node reversed-carry network. */
inline network reversed_carry_network( node_pair const& f1, node_pair const& f0, decouple_convention const& conv = {} )
{
  for ( auto const* t : { &f1.g_s, &f1.g_t, &f0.g_s, &f0.g_t } )
  {
    if ( t->arity() != 2 )
    {
      throw error( errc::signature_mismatch, "node functions must have arity 2" );
    }
  }
  network net;
  std::vector<std::string> const ins = conv.input_c_msb ? std::vector<std::string>{ "a_0", "a_1", "c" }
                                                        : std::vector<std::string>{ "c", "a_1", "a_0" };
  for ( auto const& id : ins )
  {
    net.add_edge( id, data_type::boolean() );
  }
  for ( auto const* id : { "t", "s_1", "s_0", "q" } )
  {
    net.add_edge( id, data_type::boolean() );
  }
  if ( conv.carry_f1_to_f0 )
  {
    net.add_vertex( { "f_1", {}, { "c", "a_1" }, { "s_1", "t" }, function_ref::tables_of( { f1.g_s, f1.g_t } ) } );
    net.add_vertex( { "f_0", {}, { "t", "a_0" }, { "s_0", "q" }, function_ref::tables_of( { f0.g_s, f0.g_t } ) } );
  }
  else
  {
    net.add_vertex( { "f_1", {}, { "t", "a_1" }, { "s_1", "q" }, function_ref::tables_of( { f1.g_s, f1.g_t } ) } );
    net.add_vertex( { "f_0", {}, { "c", "a_0" }, { "s_0", "t" }, function_ref::tables_of( { f0.g_s, f0.g_t } ) } );
  }
  net.priout = conv.output_s1_msb ? std::vector<std::string>{ "q", "s_0", "s_1" }
                                  : std::vector<std::string>{ "s_1", "s_0", "q" };
  return net;
}

/*! \brief d and e of the experiment: |w_3(.) - w_3(.)| on both sides. */
inline induced_metric reversed_carry_metric()
{
  return { norm_kind::l1, { encoding::std_binary( 3 ) }, rational( 1 ) };
}

inline bool reversed_carry_is_k_lipschitz( node_pair const& f1, node_pair const& f0, rational const& k,
                                  decouple_convention const& conv = {} )
{
  auto const m = reversed_carry_metric();
  return is_k_lipschitz( tabulate_function( reversed_carry_network( f1, f0, conv ) ), m, m, k ).holds;
}

using index_pair = std::pair<std::size_t, std::size_t>;

/*! \brief All (f_1, f_0) candidate index pairs whose network is k-Lipschitz, sorted. */
inline std::vector<index_pair> enumerate_klipschitz_pairs( rational const& k, decouple_convention const& conv = {},
                                                           unsigned jobs = 1 )
{
  auto const nodes = candidate_nodes();
  auto const n = nodes.size();
  std::vector<std::vector<index_pair>> parts( std::max( 1u, jobs ) );
  parallel_chunks( n * n, jobs, [&]( unsigned chunk, std::size_t begin, std::size_t end ) {
    for ( auto p = begin; p < end; ++p )
    {
      if ( reversed_carry_is_k_lipschitz( nodes[p / n], nodes[p % n], k, conv ) )
      {
        parts[chunk].emplace_back( p / n, p % n );
      }
    }
  } );
  std::vector<index_pair> result;
  for ( auto const& part : parts )
  {
    result.insert( result.end(), part.begin(), part.end() );
  }
  return result;
}

struct bipartite_graph
{
  std::vector<node_pair> left;  /* f_1 choices */
  std::vector<node_pair> right; /* f_0 choices */
  std::set<index_pair> edges;

  bool has_edge( std::size_t u, std::size_t v ) const { return edges.count( { u, v } ) > 0; }
};

inline bipartite_graph build_bipartite( std::vector<index_pair> const& pairs, std::vector<node_pair> left,
                                        std::vector<node_pair> right )
{
  bipartite_graph g{ std::move( left ), std::move( right ), {} };
  for ( auto const& [u, v] : pairs )
  {
    if ( u >= g.left.size() || v >= g.right.size() )
    {
      throw error( errc::index_out_of_range, "pair (" + std::to_string( u ) + ", " + std::to_string( v ) +
                                                 ") outside " + std::to_string( g.left.size() ) + "x" +
                                                 std::to_string( g.right.size() ) );
    }
    g.edges.insert( { u, v } );
  }
  return g;
}

/*! \brief Graph over the experiment's 100 x 100 candidate sets. */
inline bipartite_graph build_bipartite( std::vector<index_pair> const& pairs )
{
  auto nodes = candidate_nodes();
  return build_bipartite( pairs, nodes, nodes );
}

struct biclique
{
  std::vector<std::size_t> s1; /* left indices */
  std::vector<std::size_t> s0; /* right indices */

  std::size_t num_edges() const { return s1.size() * s0.size(); }
  bool operator==( biclique const& ) const = default;
};

inline void check_indices( bipartite_graph const& g, biclique const& b )
{
  for ( auto u : b.s1 )
  {
    if ( u >= g.left.size() )
    {
      throw error( errc::index_out_of_range, "left index " + std::to_string( u ) );
    }
  }
  for ( auto v : b.s0 )
  {
    if ( v >= g.right.size() )
    {
      throw error( errc::index_out_of_range, "right index " + std::to_string( v ) );
    }
  }
}

inline bool is_biclique( bipartite_graph const& g, biclique const& b )
{
  check_indices( g, b );
  for ( auto u : b.s1 )
  {
    for ( auto v : b.s0 )
    {
      if ( !g.has_edge( u, v ) )
      {
        return false;
      }
    }
  }
  return true;
}

inline constexpr std::size_t max_biclique_search_size = 1000000;

/*! \brief Exact maximum edge biclique by branch and bound.

  Left subsets are enumerated as increasing index sequences, each paired
  with its full common neighbourhood.  A branch is cut when even the best
  completion, taking the next `t` candidates by remaining overlap, cannot
  reach the incumbent's edge count.  Ties prefer more left vertices, then
  the lexicographically smallest left set.
*/
inline biclique max_edge_biclique( bipartite_graph const& g )
{
  if ( g.left.size() * g.right.size() > max_biclique_search_size )
  {
    throw error( errc::too_large, "exact biclique search limited to " + std::to_string( max_biclique_search_size ) +
                                      " vertex pairs" );
  }
  using bitset = boost::dynamic_bitset<>;
  std::vector<bitset> adj( g.left.size(), bitset( g.right.size() ) );
  for ( auto const& [u, v] : g.edges )
  {
    adj[u].set( v );
  }
  std::vector<std::size_t> order;
  for ( std::size_t u = 0; u < g.left.size(); ++u )
  {
    if ( adj[u].any() )
    {
      order.push_back( u );
    }
  }

  biclique best;
  auto better = [&]( std::vector<std::size_t> const& s1, std::size_t r ) {
    auto const e = s1.size() * r, be = best.num_edges();
    if ( e != be )
    {
      return e > be;
    }
    if ( s1.size() != best.s1.size() )
    {
      return s1.size() > best.s1.size();
    }
    return s1 < best.s1;
  };

  std::vector<std::size_t> s1;
  std::vector<std::size_t> counts;
  auto recurse = [&]( auto&& self, std::size_t pos, bitset const& common ) -> void {
    auto const r = common.count();
    if ( !s1.empty() && r > 0 && better( s1, r ) )
    {
      best.s1 = s1;
      best.s0.clear();
      for ( auto v = common.find_first(); v != bitset::npos; v = common.find_next( v ) )
      {
        best.s0.push_back( v );
      }
    }
    counts.clear();
    for ( auto i = pos; i < order.size(); ++i )
    {
      auto const c = ( adj[order[i]] & common ).count();
      if ( c > 0 )
      {
        counts.push_back( c );
      }
    }
    std::sort( counts.begin(), counts.end(), std::greater<>() );
    std::size_t bound = 0;
    for ( std::size_t t = 0; t < counts.size(); ++t )
    {
      bound = std::max( bound, ( s1.size() + t + 1 ) * std::min( r, counts[t] ) );
    }
    if ( bound == 0 || bound < best.num_edges() )
    {
      return;
    }
    for ( auto i = pos; i < order.size(); ++i )
    {
      auto next = adj[order[i]] & common;
      if ( next.none() )
      {
        continue;
      }
      s1.push_back( order[i] );
      self( self, i + 1, next );
      s1.pop_back();
    }
  };
  recurse( recurse, 0, bitset( g.right.size() ).set() );
  return best;
}

/*! \brief Re-checks every combination in S1 x S0 from scratch (not via the edge set). */
inline bool verify_decoupling( bipartite_graph const& g, biclique const& b, rational const& k,
                               decouple_convention const& conv = {} )
{
  check_indices( g, b );
  for ( auto u : b.s1 )
  {
    for ( auto v : b.s0 )
    {
      if ( !reversed_carry_is_k_lipschitz( g.left[u], g.right[v], k, conv ) )
      {
        return false;
      }
    }
  }
  return true;
}

struct calibration_row
{
  decouple_convention convention;
  std::size_t count;
};

inline std::vector<calibration_row> calibrate( rational const& k, unsigned jobs = 1 )
{
  std::vector<calibration_row> rows;
  for ( auto const& conv : decouple_convention::all() )
  {
    rows.push_back( { conv, enumerate_klipschitz_pairs( k, conv, jobs ).size() } );
  }
  return rows;
}

} // namespace boolnet
