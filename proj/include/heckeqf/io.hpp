#pragma once

#include <string>

namespace heckeqf {

// %.17g: enough digits to round-trip a double exactly.
std::string format_double17(double v);

std::string json_escape(const std::string& s);

}  // namespace heckeqf
