#pragma once

#include "error.hpp"

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

namespace boolnet
{

using rational = boost::rational<std::int64_t>;

/*! \brief Parses "p/q" or a plain integer. */
inline rational parse_rational( std::string_view text )
{
  auto parse_int = [&]( std::string_view s ) {
    std::int64_t v{};
    if ( !s.empty() && s.front() == '+' )
    {
      s.remove_prefix( 1 );
    }
    auto [ptr, ec] = std::from_chars( s.data(), s.data() + s.size(), v );
    if ( s.empty() || ec != std::errc{} || ptr != s.data() + s.size() )
    {
      throw error( errc::parse_error, "not a rational: '" + std::string( text ) + "'" );
    }
    return v;
  };

  auto const slash = text.find( '/' );
  if ( slash == std::string_view::npos )
  {
    return rational( parse_int( text ) );
  }
  auto const den = parse_int( text.substr( slash + 1 ) );
  if ( den == 0 )
  {
    throw error( errc::parse_error, "zero denominator in '" + std::string( text ) + "'" );
  }
  return rational( parse_int( text.substr( 0, slash ) ), den );
}

/* always "p/q", so that integers and fractions share one format */
inline std::string to_string( rational const& r )
{
  return std::to_string( r.numerator() ) + "/" + std::to_string( r.denominator() );
}

} // namespace boolnet
