#include "uberdh/parallel.hpp"

#include <cstdlib>
#include <string>

namespace uberdh {
namespace {

unsigned initial_threads() {
  if (const char* env = std::getenv("UBERDH_THREADS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (...) {
    }
  }
  return 0;
}

std::atomic<unsigned> g_threads{initial_threads()};

}  // namespace

void set_thread_count(unsigned n) { g_threads.store(n); }

unsigned thread_count() {
  const unsigned n = g_threads.load();
  if (n != 0) return n;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace uberdh
