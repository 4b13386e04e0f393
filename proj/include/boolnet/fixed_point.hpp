/*!
  \file fixed_point.hpp
  \brief Fixed-point formats, values, and the rounding/saturation rule.

  Values are `raw * 2^-frac_bits`.  Signed formats use two's complement
  raw integers in [-2^(T-1), 2^(T-1)-1]; unsigned ones use [0, 2^T-1].
  Every conversion onto a grid rounds to nearest with ties to even and
  saturates out-of-range values to the nearest extreme.
*/

#pragma once

#include "error.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace boolnet
{

struct fixed_format
{
  unsigned total_bits{ 8 };
  unsigned frac_bits{ 0 };
  bool is_signed{ true };

  bool operator==( fixed_format const& ) const = default;

  bool valid() const { return total_bits >= 1 && total_bits <= 32 && frac_bits <= total_bits; }

  std::int64_t min_raw() const { return is_signed ? -( std::int64_t{ 1 } << ( total_bits - 1 ) ) : 0; }
  std::int64_t max_raw() const
  {
    return is_signed ? ( std::int64_t{ 1 } << ( total_bits - 1 ) ) - 1 : ( std::int64_t{ 1 } << total_bits ) - 1;
  }
  double ulp() const { return std::ldexp( 1.0, -static_cast<int>( frac_bits ) ); }

  std::string str() const
  {
    return std::string( is_signed ? "s" : "u" ) + std::to_string( total_bits ) + "." + std::to_string( frac_bits );
  }
};

inline void check_format( fixed_format const& fmt )
{
  if ( !fmt.valid() )
  {
    throw error( errc::type_mismatch, "invalid fixed-point format " + fmt.str() );
  }
}

struct fixed_value
{
  fixed_format format;
  std::int64_t raw{ 0 };

  bool operator==( fixed_value const& ) const = default;

  double to_double() const { return std::ldexp( static_cast<double>( raw ), -static_cast<int>( format.frac_bits ) ); }
  bool in_range() const { return raw >= format.min_raw() && raw <= format.max_raw(); }
};

namespace detail
{

inline std::int64_t saturate( __int128 v, fixed_format const& fmt )
{
  if ( v < fmt.min_raw() )
  {
    return fmt.min_raw();
  }
  if ( v > fmt.max_raw() )
  {
    return fmt.max_raw();
  }
  return static_cast<std::int64_t>( v );
}

/* floor(v / 2^shift) rounded half to even */
inline __int128 shift_right_round_even( __int128 v, unsigned shift )
{
  if ( shift == 0 )
  {
    return v;
  }
  if ( shift >= 120 )
  {
    return 0;
  }
  __int128 const unit = __int128{ 1 } << shift;
  __int128 q = v >> shift; /* arithmetic shift: floor */
  __int128 const r = v - q * unit;
  __int128 const half = unit >> 1;
  if ( r > half || ( r == half && ( q & 1 ) != 0 ) )
  {
    ++q;
  }
  return q;
}

} // namespace detail

/*! \brief Puts an exact value `raw * 2^-frac` onto the grid of `fmt`. */
inline fixed_value rescale( __int128 raw, unsigned frac, fixed_format const& fmt )
{
  __int128 v;
  if ( frac >= fmt.frac_bits )
  {
    v = detail::shift_right_round_even( raw, frac - fmt.frac_bits );
  }
  else
  {
    auto const shift = fmt.frac_bits - frac;
    /* anything this large saturates anyway */
    __int128 const limit = __int128{ 1 } << 80;
    v = ( raw > limit ) ? limit : ( raw < -limit ? -limit : raw );
    v <<= shift;
  }
  return { fmt, detail::saturate( v, fmt ) };
}

inline fixed_value rescale( fixed_value const& v, fixed_format const& fmt )
{
  return rescale( v.raw, v.format.frac_bits, fmt );
}

/*! \brief Round-to-nearest-even quantisation with saturation. NaN maps to zero. */
inline fixed_value quantize_value( fixed_format const& fmt, double v )
{
  check_format( fmt );
  if ( std::isnan( v ) )
  {
    return { fmt, detail::saturate( 0, fmt ) };
  }
  auto const scaled = std::ldexp( v, static_cast<int>( fmt.frac_bits ) );
  if ( scaled <= static_cast<double>( fmt.min_raw() ) )
  {
    return { fmt, fmt.min_raw() };
  }
  if ( scaled >= static_cast<double>( fmt.max_raw() ) )
  {
    return { fmt, fmt.max_raw() };
  }
  /* ties to even, independent of the current FP rounding mode */
  auto const fl = std::floor( scaled );
  auto const diff = scaled - fl;
  auto k = static_cast<std::int64_t>( fl );
  if ( diff > 0.5 || ( diff == 0.5 && ( k & 1 ) != 0 ) )
  {
    ++k;
  }
  return { fmt, detail::saturate( k, fmt ) };
}

} // namespace boolnet
