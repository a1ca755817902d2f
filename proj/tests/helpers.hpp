#pragma once

#include <string>

#include "skewlab/shape.hpp"

inline skewlab::SkewShape compact(const char* text) { return skewlab::parse_compact(text); }
inline skewlab::SkewShape ascii(const std::string& text) { return skewlab::parse_ascii(text); }
