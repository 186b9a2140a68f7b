#pragma once

#include <iosfwd>
#include <string>

#include "skewcorr/state.hpp"

namespace skewcorr::cli {

// State file layout (JSON):
//   {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}   row-major
std::string format_state_file(const BipartiteState& rho);
BipartiteState parse_state_file(const std::string& text);
BipartiteState read_state_file(const std::string& path);

// "example", "bell", "product-mixed", "max-mixed".
BipartiteState builtin_state(const std::string& name);

}  // namespace skewcorr::cli
