/*!
  \file types.hpp
  \brief Edge data types and the values carried on edges.
*/

#pragma once

#include "error.hpp"
#include "fixed_point.hpp"

#include <string>
#include <variant>

namespace boolnet
{

enum class type_kind
{
  real,
  boolean,
  fixed,
  pm1
};

struct data_type
{
  type_kind kind{ type_kind::real };
  fixed_format format{}; /* meaningful only for type_kind::fixed */

  static data_type real() { return { type_kind::real, {} }; }
  static data_type boolean() { return { type_kind::boolean, {} }; }
  static data_type pm1() { return { type_kind::pm1, {} }; }
  static data_type fixed( fixed_format fmt ) { return { type_kind::fixed, fmt }; }

  bool operator==( data_type const& other ) const
  {
    return kind == other.kind && ( kind != type_kind::fixed || format == other.format );
  }

  std::string str() const
  {
    switch ( kind )
    {
    case type_kind::real: return "real";
    case type_kind::boolean: return "bool";
    case type_kind::pm1: return "pm1";
    case type_kind::fixed: return "fixed<" + format.str() + ">";
    }
    return "?";
  }
};

/*! \brief An element of {-1, +1}. */
struct pm1_value
{
  int v{ 1 };
  bool operator==( pm1_value const& ) const = default;
};

using value = std::variant<double, bool, fixed_value, pm1_value>;

inline type_kind kind_of( value const& v )
{
  switch ( v.index() )
  {
  case 0: return type_kind::real;
  case 1: return type_kind::boolean;
  case 2: return type_kind::fixed;
  default: return type_kind::pm1;
  }
}

inline bool type_checks( value const& v, data_type const& t )
{
  switch ( t.kind )
  {
  case type_kind::real:
    return std::holds_alternative<double>( v );
  case type_kind::boolean:
    return std::holds_alternative<bool>( v );
  case type_kind::pm1:
    return std::holds_alternative<pm1_value>( v ) && ( std::get<pm1_value>( v ).v == 1 || std::get<pm1_value>( v ).v == -1 );
  case type_kind::fixed:
    return std::holds_alternative<fixed_value>( v ) && std::get<fixed_value>( v ).format == t.format &&
           std::get<fixed_value>( v ).in_range();
  }
  return false;
}

inline std::string to_string( value const& v )
{
  switch ( v.index() )
  {
  case 0: {
    auto s = std::to_string( std::get<double>( v ) );
    return s;
  }
  case 1: return std::get<bool>( v ) ? "1" : "0";
  case 2: return std::to_string( std::get<fixed_value>( v ).to_double() );
  default: return std::get<pm1_value>( v ).v > 0 ? "+1" : "-1";
  }
}

/*! \brief Numeric view of a value; Booleans read as 0/1. */
inline double as_real( value const& v )
{
  switch ( v.index() )
  {
  case 0: return std::get<double>( v );
  case 1: return std::get<bool>( v ) ? 1.0 : 0.0;
  case 2: return std::get<fixed_value>( v ).to_double();
  default: return std::get<pm1_value>( v ).v;
  }
}

} // namespace boolnet
