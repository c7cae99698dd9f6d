#include "netdiag/parallel.hpp"

#include <cstdlib>
#include <string>

namespace netdiag {

int resolve_workers(int requested) {
  int workers = requested;
  if (workers <= 0) {
    if (const char* env = std::getenv("NETDIAG_WORKERS")) {
      try {
        workers = std::stoi(env);
      } catch (...) {
        workers = 0;
      }
    }
  }
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers <= 0) workers = 1;
  if (workers > 256) workers = 256;
  return workers;
}

}  // namespace netdiag
