#ifndef HFF_PARSE_HPP
#define HFF_PARSE_HPP

#include <string_view>

#include "hff/numeric.hpp"

namespace hff {

// Parses "2", "-1.5", "i", "-i", "2i", "1+2i", "1.5e-2-0.5i" (spaces allowed
// around signs). Throws std::invalid_argument on malformed input.
cdouble parse_complex(std::string_view text);

}  // namespace hff

#endif
