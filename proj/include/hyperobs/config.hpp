#pragma once

#include <cstddef>

namespace hyperobs {

/// Size guards shared by the library. `from_env` honours HYPEROBS_TERM_CAP
/// and HYPEROBS_KRON_CAP.
struct Caps {
  std::size_t terms = 10'000'000;  // total stored polynomial terms in an observation stack
  std::size_t kron = 1'000'000;    // dense dimension of any Kronecker object

  static Caps from_env();
};

}  // namespace hyperobs
