#pragma once

#include <string_view>

namespace aoforge {

// Upper bound on n for an exhaustive operation. The AOFORGE_MAX_N environment
// variable replaces every default bound; a warning is printed the first time it
// takes effect.
int size_limit(int default_limit);

// Throws ResourceLimit when n exceeds size_limit(default_limit).
void require_size(std::string_view operation, int n, int default_limit);

}  // namespace aoforge
