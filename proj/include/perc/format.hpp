#pragma once

#include <string>

namespace perc {

// Shortest decimal string that round-trips to exactly the same double; keeps
// CSV output byte-stable across runs without dragging 17 digits everywhere.
std::string format_double(double value);

}  // namespace perc
