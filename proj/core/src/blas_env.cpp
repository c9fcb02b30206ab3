#include "nbspec/blas_env.hpp"

#include <unistd.h>

#include <cctype>
#include <cstdlib>
#include <string>

extern "C" char* openblas_get_corename(void) __attribute__((weak));

namespace nbspec {

const char* blas_core_name() {
  if (openblas_get_corename == nullptr) return "";
  const char* name = openblas_get_corename();
  return name ? name : "";
}

void maybe_reexec_with_stable_blas(int argc, char** argv) {
  (void)argc;
  if (std::getenv("OPENBLAS_CORETYPE") != nullptr) return;
  if (std::getenv("NBSPEC_BLAS_REEXEC") != nullptr) return;
  std::string core = blas_core_name();
  for (char& c : core) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (core.find("cooperlake") == std::string::npos) return;

  ::setenv("OPENBLAS_CORETYPE", "SkylakeX", 1);
  ::setenv("NBSPEC_BLAS_REEXEC", "1", 1);
  ::execv("/proc/self/exe", argv);
  // exec failed: keep going with the original kernel
}

}  // namespace nbspec
