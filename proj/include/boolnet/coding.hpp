/*!
  \file coding.hpp
  \brief Encodings of Boolean vectors as numbers and the metrics they induce.

  A Boolean vector is a `std::vector<bool>` whose element 0 is the least
  significant bit.  Written as a string it is displayed most significant
  bit first, so "101" is the vector (x2, x1, x0) = (1, 0, 1).
*/

#pragma once

#include "error.hpp"
#include "rational.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boolnet
{

using bit_vector = std::vector<bool>;

inline bit_vector bits_from_string( std::string_view msb_first )
{
  bit_vector bits( msb_first.size() );
  for ( std::size_t i = 0; i < msb_first.size(); ++i )
  {
    auto const ch = msb_first[msb_first.size() - 1 - i];
    if ( ch != '0' && ch != '1' )
    {
      throw error( errc::parse_error, "bit string must be 0/1: '" + std::string( msb_first ) + "'" );
    }
    bits[i] = ch == '1';
  }
  return bits;
}

inline std::string bits_to_string( bit_vector const& bits )
{
  std::string s( bits.size(), '0' );
  for ( std::size_t i = 0; i < bits.size(); ++i )
  {
    s[bits.size() - 1 - i] = bits[i] ? '1' : '0';
  }
  return s;
}

inline bit_vector bits_of_index( std::uint64_t index, unsigned width )
{
  bit_vector bits( width );
  for ( unsigned i = 0; i < width; ++i )
  {
    bits[i] = ( index >> i ) & 1u;
  }
  return bits;
}

inline std::uint64_t index_of_bits( bit_vector const& bits )
{
  std::uint64_t index = 0;
  for ( std::size_t i = 0; i < bits.size(); ++i )
  {
    index |= std::uint64_t{ bits[i] } << i;
  }
  return index;
}

enum class encoding_kind
{
  std_binary,
  twos_complement,
  unary,
  reflected_gray,
  pm1,
  bit
};

struct encoding
{
  encoding_kind kind{ encoding_kind::std_binary };
  unsigned width{ 1 };

  static encoding std_binary( unsigned k ) { return { encoding_kind::std_binary, k }; }
  static encoding twos_complement( unsigned k ) { return { encoding_kind::twos_complement, k }; }
  static encoding unary( unsigned k ) { return { encoding_kind::unary, k }; }
  static encoding gray( unsigned k ) { return { encoding_kind::reflected_gray, k }; }
  static encoding pm1( unsigned k ) { return { encoding_kind::pm1, k }; }
  static encoding bit() { return { encoding_kind::bit, 1 }; }

  bool operator==( encoding const& ) const = default;

  /* number of decoded components: k for pm1, else one */
  unsigned arity() const { return kind == encoding_kind::pm1 ? width : 1u; }

  std::int64_t min_value() const
  {
    switch ( kind )
    {
    case encoding_kind::twos_complement: return -( std::int64_t{ 1 } << ( width - 1 ) );
    case encoding_kind::pm1: return -1;
    default: return 0;
    }
  }

  std::int64_t max_value() const
  {
    switch ( kind )
    {
    case encoding_kind::twos_complement: return ( std::int64_t{ 1 } << ( width - 1 ) ) - 1;
    case encoding_kind::unary: return width;
    case encoding_kind::pm1: return 1;
    case encoding_kind::bit: return 1;
    default: return ( std::int64_t{ 1 } << width ) - 1;
    }
  }

  std::string str() const
  {
    auto const k = "[" + std::to_string( width ) + "]";
    switch ( kind )
    {
    case encoding_kind::std_binary: return "bin" + k;
    case encoding_kind::twos_complement: return "tc" + k;
    case encoding_kind::unary: return "unary" + k;
    case encoding_kind::reflected_gray: return "gray" + k;
    case encoding_kind::pm1: return "pm1" + k;
    case encoding_kind::bit: return "bit";
    }
    return "?";
  }
};

namespace detail
{

inline void check_encoding( encoding const& enc )
{
  if ( enc.width == 0 || enc.width > 62 || ( enc.kind == encoding_kind::bit && enc.width != 1 ) )
  {
    throw error( errc::width_mismatch, "unsupported encoding width for " + enc.str() );
  }
}

/* decodes `width` bits packed in `word` (bit 0 = x_0); nullopt if not in the code */
inline std::optional<std::int64_t> decode_scalar( encoding const& enc, std::uint64_t word )
{
  auto const k = enc.width;
  switch ( enc.kind )
  {
  case encoding_kind::std_binary:
  case encoding_kind::bit:
    return static_cast<std::int64_t>( word );
  case encoding_kind::twos_complement: {
    auto const sign = std::uint64_t{ 1 } << ( k - 1 );
    return ( word & sign ) ? static_cast<std::int64_t>( word ) - ( std::int64_t{ 1 } << k ) : static_cast<std::int64_t>( word );
  }
  case encoding_kind::reflected_gray: {
    std::uint64_t v = word;
    for ( auto shift = word >> 1; shift != 0; shift >>= 1 )
    {
      v ^= shift;
    }
    return static_cast<std::int64_t>( v );
  }
  case encoding_kind::unary: {
    /* thermometer code: ones fill from bit 0 upward */
    if ( ( word & ( word + 1 ) ) != 0 )
    {
      return std::nullopt;
    }
    return std::popcount( word );
  }
  case encoding_kind::pm1:
    break;
  }
  return std::nullopt;
}

} // namespace detail

/*! \brief Decoded value(s) of `bits` under `enc`; one entry, or one per bit for pm1. */
inline std::vector<std::int64_t> decode( encoding const& enc, bit_vector const& bits )
{
  detail::check_encoding( enc );
  if ( bits.size() != enc.width )
  {
    throw error( errc::width_mismatch, enc.str() + " decodes " + std::to_string( enc.width ) + " bits, got " +
                                           std::to_string( bits.size() ) );
  }
  if ( enc.kind == encoding_kind::pm1 )
  {
    std::vector<std::int64_t> r( bits.size() );
    for ( std::size_t i = 0; i < bits.size(); ++i )
    {
      r[i] = bits[i] ? 1 : -1;
    }
    return r;
  }
  auto v = detail::decode_scalar( enc, index_of_bits( bits ) );
  if ( !v )
  {
    throw error( errc::invalid_pattern, "'" + bits_to_string( bits ) + "' is not a " + enc.str() + " code word" );
  }
  return { *v };
}

inline std::int64_t decode_int( encoding const& enc, bit_vector const& bits )
{
  auto const v = decode( enc, bits );
  if ( v.size() != 1 )
  {
    throw error( errc::width_mismatch, enc.str() + " does not decode to a scalar" );
  }
  return v.front();
}

/*! \brief Code word of a scalar value. */
inline bit_vector encode( encoding const& enc, std::int64_t v )
{
  detail::check_encoding( enc );
  if ( enc.kind == encoding_kind::pm1 && enc.width != 1 )
  {
    throw error( errc::width_mismatch, enc.str() + " encodes a vector; use encode_pm1" );
  }
  if ( v < enc.min_value() || v > enc.max_value() || ( enc.kind == encoding_kind::pm1 && v == 0 ) )
  {
    throw error( errc::index_out_of_range, std::to_string( v ) + " is outside the range of " + enc.str() );
  }
  std::uint64_t word = 0;
  switch ( enc.kind )
  {
  case encoding_kind::std_binary:
  case encoding_kind::bit:
    word = static_cast<std::uint64_t>( v );
    break;
  case encoding_kind::twos_complement:
    word = static_cast<std::uint64_t>( v ) & ( ( std::uint64_t{ 1 } << enc.width ) - 1 );
    break;
  case encoding_kind::reflected_gray:
    word = static_cast<std::uint64_t>( v ) ^ ( static_cast<std::uint64_t>( v ) >> 1 );
    break;
  case encoding_kind::unary:
    word = ( std::uint64_t{ 1 } << v ) - 1;
    break;
  case encoding_kind::pm1:
    word = v > 0 ? 1u : 0u;
    break;
  }
  return bits_of_index( word, enc.width );
}

inline bit_vector encode_pm1( std::vector<int> const& values )
{
  bit_vector bits( values.size() );
  for ( std::size_t i = 0; i < values.size(); ++i )
  {
    if ( values[i] != 1 && values[i] != -1 )
    {
      throw error( errc::index_out_of_range, "pm1 components must be -1 or +1" );
    }
    bits[i] = values[i] > 0;
  }
  return bits;
}

enum class norm_kind
{
  l1,
  linf,
  hamming
};

/*! \brief Metric induced by a norm of per-component decoded differences.

  Components occupy contiguous slices, listed from bit 0 upward.  The
  Hamming norm ignores the encodings and counts differing bits.  Every
  distance is multiplied by `scale`.
*/
struct induced_metric
{
  norm_kind norm{ norm_kind::l1 };
  std::vector<encoding> components;
  rational scale{ 1 };

  unsigned width() const
  {
    unsigned w = 0;
    for ( auto const& c : components )
    {
      w += c.width;
    }
    return w;
  }

  std::string str() const
  {
    std::string s = norm == norm_kind::l1 ? "L1" : ( norm == norm_kind::linf ? "Linf" : "Hamming" );
    if ( scale != rational( 1 ) )
    {
      s += "*" + to_string( scale );
    }
    s += ":";
    for ( std::size_t i = 0; i < components.size(); ++i )
    {
      s += ( i ? " | " : " " ) + components[i].str();
    }
    return s;
  }

  /*! \brief Decoded component vector of an index-packed bit vector, or nullopt outside the code. */
  std::optional<std::vector<std::int64_t>> decode_index( std::uint64_t index ) const
  {
    std::vector<std::int64_t> out;
    unsigned offset = 0;
    for ( auto const& c : components )
    {
      auto const word = ( index >> offset ) & ( ( std::uint64_t{ 1 } << c.width ) - 1 );
      offset += c.width;
      if ( norm == norm_kind::hamming )
      {
        continue;
      }
      if ( c.kind == encoding_kind::pm1 )
      {
        for ( unsigned i = 0; i < c.width; ++i )
        {
          out.push_back( ( ( word >> i ) & 1u ) ? 1 : -1 );
        }
        continue;
      }
      auto v = detail::decode_scalar( c, word );
      if ( !v )
      {
        return std::nullopt;
      }
      out.push_back( *v );
    }
    return out;
  }

  /* integer distance before scaling, between two decoded vectors / index words */
  std::int64_t raw_distance( std::vector<std::int64_t> const& a, std::vector<std::int64_t> const& b, std::uint64_t ia,
                             std::uint64_t ib ) const
  {
    if ( norm == norm_kind::hamming )
    {
      return std::popcount( ia ^ ib );
    }
    std::int64_t acc = 0;
    for ( std::size_t i = 0; i < a.size(); ++i )
    {
      auto const d = a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
      acc = norm == norm_kind::l1 ? acc + d : std::max( acc, d );
    }
    return acc;
  }
};

inline void check_metric( induced_metric const& m )
{
  if ( m.components.empty() )
  {
    throw error( errc::width_mismatch, "metric has no components" );
  }
  for ( auto const& c : m.components )
  {
    detail::check_encoding( c );
  }
  if ( m.width() > 62 )
  {
    throw error( errc::too_wide, "metric wider than 62 bits" );
  }
  if ( m.scale <= rational( 0 ) )
  {
    throw error( errc::parse_error, "metric scale must be positive" );
  }
}

/*! \brief Exact distance between two Boolean vectors. */
inline rational metric( induced_metric const& m, bit_vector const& a, bit_vector const& b )
{
  check_metric( m );
  if ( a.size() != m.width() || b.size() != m.width() )
  {
    throw error( errc::width_mismatch, "metric over " + std::to_string( m.width() ) + " bits applied to " +
                                           std::to_string( a.size() ) + " and " + std::to_string( b.size() ) + " bits" );
  }
  auto const ia = index_of_bits( a ), ib = index_of_bits( b );
  auto const da = m.decode_index( ia ), db = m.decode_index( ib );
  if ( !da || !db )
  {
    throw error( errc::invalid_pattern, "vector outside the metric's code: '" + bits_to_string( da ? b : a ) + "'" );
  }
  return m.scale * rational( m.raw_distance( *da, *db, ia, ib ) );
}

/*! \brief Parses "L1: bin[3] | bin[3] | bit" style metric descriptions.

  Norms: L1, Linf, Hamming, optionally followed by "*p/q" as a scale.
  Components, from bit 0 upward: bin[k], tc[k], unary[k], gray[k], pm1[k], bit.
*/
inline induced_metric parse_metric( std::string_view text )
{
  auto fail = [&]( std::string const& why ) -> induced_metric {
    throw error( errc::parse_error, "metric '" + std::string( text ) + "': " + why );
  };
  auto trim = []( std::string_view s ) {
    while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
    {
      s.remove_prefix( 1 );
    }
    while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
    {
      s.remove_suffix( 1 );
    }
    return s;
  };
  auto lower = []( std::string_view s ) {
    std::string r( s );
    std::transform( r.begin(), r.end(), r.begin(), []( unsigned char c ) { return static_cast<char>( std::tolower( c ) ); } );
    return r;
  };

  auto const colon = text.find( ':' );
  if ( colon == std::string_view::npos )
  {
    return fail( "missing ':' after the norm" );
  }
  induced_metric m;
  auto head = trim( text.substr( 0, colon ) );
  if ( auto star = head.find( '*' ); star != std::string_view::npos )
  {
    m.scale = parse_rational( trim( head.substr( star + 1 ) ) );
    head = trim( head.substr( 0, star ) );
  }
  auto const norm = lower( head );
  if ( norm == "l1" )
  {
    m.norm = norm_kind::l1;
  }
  else if ( norm == "linf" )
  {
    m.norm = norm_kind::linf;
  }
  else if ( norm == "hamming" )
  {
    m.norm = norm_kind::hamming;
  }
  else
  {
    return fail( "unknown norm '" + std::string( head ) + "'" );
  }

  auto rest = text.substr( colon + 1 );
  while ( true )
  {
    auto const bar = rest.find( '|' );
    auto const item = lower( trim( rest.substr( 0, bar ) ) );
    if ( item == "bit" )
    {
      m.components.push_back( encoding::bit() );
    }
    else
    {
      auto const open = item.find( '[' );
      if ( open == std::string::npos || item.back() != ']' )
      {
        return fail( "bad component '" + item + "'" );
      }
      auto const name = item.substr( 0, open );
      unsigned width = 0;
      try
      {
        width = static_cast<unsigned>( std::stoul( item.substr( open + 1, item.size() - open - 2 ) ) );
      }
      catch ( ... )
      {
        return fail( "bad width in '" + item + "'" );
      }
      if ( width == 0 )
      {
        return fail( "zero width in '" + item + "'" );
      }
      if ( name == "bin" )
      {
        m.components.push_back( encoding::std_binary( width ) );
      }
      else if ( name == "tc" )
      {
        m.components.push_back( encoding::twos_complement( width ) );
      }
      else if ( name == "unary" )
      {
        m.components.push_back( encoding::unary( width ) );
      }
      else if ( name == "gray" )
      {
        m.components.push_back( encoding::gray( width ) );
      }
      else if ( name == "pm1" )
      {
        m.components.push_back( encoding::pm1( width ) );
      }
      else
      {
        return fail( "unknown encoding '" + name + "'" );
      }
    }
    if ( bar == std::string_view::npos )
    {
      break;
    }
    rest = rest.substr( bar + 1 );
  }
  check_metric( m );
  return m;
}

} // namespace boolnet
