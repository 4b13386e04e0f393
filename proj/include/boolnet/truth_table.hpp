/*!
  \file truth_table.hpp
  \brief Truth tables over B^K and simple algebra on them.

  Input assignment `x` has index `sum_j phi(x_j) 2^j`, i.e. input `j` is
  bit `j` of the index.  The string form lists the output for index 0
  first: XOR is "0110", AND is "0001".
*/

#pragma once

#include "error.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolnet
{

class truth_table
{
public:
  static constexpr unsigned max_arity = 24;

  truth_table() : truth_table( 0u ) {}

  explicit truth_table( unsigned arity ) : arity_( arity )
  {
    if ( arity > max_arity )
    {
      throw error( errc::too_wide, "truth table arity " + std::to_string( arity ) + " exceeds " + std::to_string( max_arity ) );
    }
    words_.assign( ( num_rows() + 63 ) / 64, 0u );
  }

  /*! \brief Table of `arity` inputs from its string form; `bits.size()` must be 2^arity. */
  static truth_table from_string( unsigned arity, std::string_view bits )
  {
    truth_table t( arity );
    if ( bits.size() != t.num_rows() )
    {
      throw error( errc::arity_mismatch, "table of arity " + std::to_string( arity ) + " needs " +
                                             std::to_string( t.num_rows() ) + " bits, got " + std::to_string( bits.size() ) );
    }
    for ( std::uint64_t i = 0; i < bits.size(); ++i )
    {
      if ( bits[i] != '0' && bits[i] != '1' )
      {
        throw error( errc::parse_error, "truth table bits must be 0/1: '" + std::string( bits ) + "'" );
      }
      t.set( i, bits[i] == '1' );
    }
    return t;
  }

  /*! \brief Arity is inferred from the length, which must be a power of two. */
  static truth_table from_string( std::string_view bits )
  {
    unsigned k = 0;
    while ( ( std::uint64_t{ 1 } << k ) < bits.size() )
    {
      ++k;
    }
    return from_string( k, bits );
  }

  unsigned arity() const { return arity_; }
  std::uint64_t num_rows() const { return std::uint64_t{ 1 } << arity_; }

  bool get( std::uint64_t index ) const { return ( words_[index >> 6] >> ( index & 63 ) ) & 1u; }

  void set( std::uint64_t index, bool v )
  {
    auto const mask = std::uint64_t{ 1 } << ( index & 63 );
    if ( v )
    {
      words_[index >> 6] |= mask;
    }
    else
    {
      words_[index >> 6] &= ~mask;
    }
  }

  void flip( std::uint64_t index ) { set( index, !get( index ) ); }

  std::string str() const
  {
    std::string s( num_rows(), '0' );
    for ( std::uint64_t i = 0; i < num_rows(); ++i )
    {
      s[i] = get( i ) ? '1' : '0';
    }
    return s;
  }

  bool is_const() const
  {
    for ( std::uint64_t i = 1; i < num_rows(); ++i )
    {
      if ( get( i ) != get( 0 ) )
      {
        return false;
      }
    }
    return true;
  }

  bool operator==( truth_table const& ) const = default;

  /* lexicographic on the string form */
  bool operator<( truth_table const& other ) const
  {
    if ( arity_ != other.arity_ )
    {
      return arity_ < other.arity_;
    }
    return str() < other.str();
  }

private:
  unsigned arity_;
  std::vector<std::uint64_t> words_;
};

inline std::uint64_t assignment_index( std::span<const bool> x )
{
  std::uint64_t index = 0;
  for ( std::size_t j = 0; j < x.size(); ++j )
  {
    index |= std::uint64_t{ x[j] } << j;
  }
  return index;
}

inline bool tt_eval( truth_table const& t, std::span<const bool> x )
{
  if ( x.size() != t.arity() )
  {
    throw error( errc::arity_mismatch, "table of arity " + std::to_string( t.arity() ) + " applied to " +
                                           std::to_string( x.size() ) + " inputs" );
  }
  return t.get( assignment_index( x ) );
}

inline bool tt_eval( truth_table const& t, std::vector<bool> const& x )
{
  if ( x.size() != t.arity() )
  {
    throw error( errc::arity_mismatch, "table of arity " + std::to_string( t.arity() ) + " applied to " +
                                           std::to_string( x.size() ) + " inputs" );
  }
  std::uint64_t index = 0;
  for ( std::size_t j = 0; j < x.size(); ++j )
  {
    index |= std::uint64_t{ x[j] } << j;
  }
  return t.get( index );
}

/*! \brief Inputs whose flip changes the output for at least one assignment. */
inline std::vector<unsigned> essential_inputs( truth_table const& t )
{
  std::vector<unsigned> result;
  for ( unsigned j = 0; j < t.arity(); ++j )
  {
    auto const bit = std::uint64_t{ 1 } << j;
    for ( std::uint64_t i = 0; i < t.num_rows(); ++i )
    {
      if ( ( i & bit ) == 0 && t.get( i ) != t.get( i | bit ) )
      {
        result.push_back( j );
        break;
      }
    }
  }
  return result;
}

/*! \brief All arity-K tables depending on every input, in lexicographic string order.

  Enumerates all 2^(2^K) tables, so K is limited to 4.
*/
inline std::vector<truth_table> nondegenerate_tables( unsigned k )
{
  if ( k == 0 )
  {
    throw error( errc::arity_mismatch, "nondegenerate tables need K >= 1" );
  }
  if ( k > 4 )
  {
    throw error( errc::too_wide, "enumerating all tables of arity " + std::to_string( k ) + " is infeasible" );
  }
  auto const rows = std::uint64_t{ 1 } << k;
  auto const count = std::uint64_t{ 1 } << rows;
  std::vector<truth_table> result;
  for ( std::uint64_t m = 0; m < count; ++m )
  {
    truth_table t( k );
    /* string position i is the (rows-1-i)-th bit of m, so m counts in string order */
    for ( std::uint64_t i = 0; i < rows; ++i )
    {
      t.set( i, ( m >> ( rows - 1 - i ) ) & 1u );
    }
    if ( essential_inputs( t ).size() == k )
    {
      result.push_back( std::move( t ) );
    }
  }
  return result;
}

namespace tables
{
inline truth_table and2() { return truth_table::from_string( 2, "0001" ); }
inline truth_table or2() { return truth_table::from_string( 2, "0111" ); }
inline truth_table xor2() { return truth_table::from_string( 2, "0110" ); }
inline truth_table xnor2() { return truth_table::from_string( 2, "1001" ); }
inline truth_table not1() { return truth_table::from_string( 1, "10" ); }
inline truth_table buf1() { return truth_table::from_string( 1, "01" ); }
/* inputs (s, a, b): s ? a : b */
inline truth_table mux3() { return truth_table::from_string( 3, "00011011" ); }
} // namespace tables

} // namespace boolnet
