#include "pdm/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace pdm {

unsigned worker_limit() {
  if (const char* env = std::getenv("PDM_SPECTRA_THREADS")) {
    const std::string_view s(env);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace pdm
