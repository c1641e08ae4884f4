#ifndef SYNROUGH_EXPRESSION_HPP
#define SYNROUGH_EXPRESSION_HPP

#include <string>

#include "synrough/diagnostics.hpp"

namespace synrough
{

/// Parses a surface expression in x and y, e.g. "sin(x) + cos(2y)".
///
/// Supports + - * / ^, unary minus, parentheses, implicit multiplication
/// ("2y", "2 pi x"), the constants pi and e, and sin cos tan exp log sqrt abs.
/// Throws UsageError on malformed input.
SurfaceFunction parse_surface(const std::string& text);

} // namespace synrough

#endif // SYNROUGH_EXPRESSION_HPP
