#include "core/limits.hpp"

#include "core/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>

namespace aoforge {

namespace {

std::atomic<bool> warned{false};

int env_override() {
  const char* raw = std::getenv("AOFORGE_MAX_N");
  if (raw == nullptr || *raw == '\0') return -1;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) return -1;
  return static_cast<int>(value);
}

}  // namespace

int size_limit(int default_limit) {
  int override_limit = env_override();
  if (override_limit < 0) return default_limit;
  if (!warned.exchange(true)) {
    std::cerr << "warning: AOFORGE_MAX_N=" << override_limit
              << " overrides the built-in size guards; exhaustive operations may not finish\n";
  }
  return override_limit;
}

void require_size(std::string_view operation, int n, int default_limit) {
  int limit = size_limit(default_limit);
  if (n > limit) {
    throw ResourceLimit(std::string(operation) + ": n=" + std::to_string(n) +
                        " exceeds the limit " + std::to_string(limit) +
                        " (set AOFORGE_MAX_N to override)");
  }
}

}  // namespace aoforge
