#include "parallel.hpp"

#include <cstdlib>
#include <string>

namespace lucaslp::detail {

unsigned worker_count(unsigned requested) noexcept {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("LUCASLP_THREADS")) {
    try {
      const unsigned long n = std::stoul(env);
      if (n != 0) return static_cast<unsigned>(std::min<unsigned long>(n, 1024));
    } catch (...) {
      // unparsable: fall through to automatic
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace lucaslp::detail
