#pragma once

#include <cstdio>

namespace mdl {

// Log verbosity comes from the MDL_LOG environment variable:
//   unset/0/off -> silent, 1/info -> progress lines, 2/debug -> per-step detail.
int log_level();

#define MDL_INFO(...)                       \
  do {                                      \
    if (::mdl::log_level() >= 1) {          \
      std::fprintf(stderr, "[mdl] ");       \
      std::fprintf(stderr, __VA_ARGS__);    \
      std::fprintf(stderr, "\n");           \
    }                                       \
  } while (0)

#define MDL_DEBUG(...)                      \
  do {                                      \
    if (::mdl::log_level() >= 2) {          \
      std::fprintf(stderr, "[mdl:dbg] ");   \
      std::fprintf(stderr, __VA_ARGS__);    \
      std::fprintf(stderr, "\n");           \
    }                                       \
  } while (0)

}  // namespace mdl
