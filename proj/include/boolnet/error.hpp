/*!
  \file error.hpp
  \brief Error type shared by all boolnet modules.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace boolnet
{

enum class errc
{
  missing_binding,
  type_mismatch,
  arity_mismatch,
  cyclic_network,
  invalid_network,
  invalid_pattern,
  width_mismatch,
  signature_mismatch,
  unsupported_leaf,
  missing_format,
  not_boolean,
  index_out_of_range,
  parse_error,
  too_wide,
  too_large
};

inline std::string_view to_string( errc code )
{
  switch ( code )
  {
  case errc::missing_binding: return "MissingBinding";
  case errc::type_mismatch: return "TypeMismatch";
  case errc::arity_mismatch: return "ArityMismatch";
  case errc::cyclic_network: return "CyclicNetwork";
  case errc::invalid_network: return "InvalidNetwork";
  case errc::invalid_pattern: return "InvalidPattern";
  case errc::width_mismatch: return "WidthMismatch";
  case errc::signature_mismatch: return "SignatureMismatch";
  case errc::unsupported_leaf: return "UnsupportedLeaf";
  case errc::missing_format: return "MissingFormat";
  case errc::not_boolean: return "NotBoolean";
  case errc::index_out_of_range: return "IndexOutOfRange";
  case errc::parse_error: return "ParseError";
  case errc::too_wide: return "TooWide";
  case errc::too_large: return "TooLarge";
  }
  return "Unknown";
}

/*! \brief Exception carrying a machine-checkable error code. */
class error : public std::runtime_error
{
public:
  error( errc code, std::string const& what )
      : std::runtime_error( std::string( to_string( code ) ) + ": " + what ), code_( code )
  {
  }

  errc code() const noexcept { return code_; }

  /* resource guards, as opposed to user or input errors */
  bool is_guard() const noexcept { return code_ == errc::too_wide || code_ == errc::too_large; }

private:
  errc code_;
};

} // namespace boolnet
