#include "smallcx/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace smallcx {

int default_threads() {
  const char* env = std::getenv("SMALLCX_THREADS");
  if (env == nullptr) return 1;
  const std::string_view text(env);
  int n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  return ec == std::errc() && ptr == text.data() + text.size() && n > 0 ? n : 1;
}

}  // namespace smallcx
