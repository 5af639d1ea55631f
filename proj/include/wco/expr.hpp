#pragma once

#include <string>

#include "wco/series.hpp"

namespace wco {

/// Parse a symbol expression into a truncated series at the given order.
/// Grammar: z, complex literals ("0.3", "2i", "1+0.5i", "i"), parentheses,
/// unary minus, + - * /, integer powers with ^, and exp/sin/cos/log.
/// Throws std::invalid_argument with a position-tagged message on bad input.
TruncatedSeries parse_symbol_series(const std::string& text, int order);

} // namespace wco
