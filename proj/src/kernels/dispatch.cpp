#include "backends.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace gcs::kernels {

namespace {

std::vector<const Backend*> build_available() {
  std::vector<const Backend*> v;
  v.push_back(&scalar_backend());
  if (const Backend* b = avx2_backend()) v.push_back(b);
  if (const Backend* b = neon_backend()) v.push_back(b);
  return v;
}

const std::vector<const Backend*>& available_list() {
  static const std::vector<const Backend*> list = build_available();
  return list;
}

const Backend* initial_backend() {
  const auto& avail = available_list();
  if (const char* env = std::getenv("GCS_KERNEL")) {
    for (const Backend* b : avail)
      if (std::string_view(env) == b->name) return b;
    std::fprintf(stderr,
                 "warning: GCS_KERNEL=%s is not available on this machine; "
                 "using %s\n",
                 env, avail.back()->name);
  }
  return avail.back();  // list is ordered baseline -> fastest
}

std::atomic<const Backend*>& active_slot() {
  static std::atomic<const Backend*> slot{initial_backend()};
  return slot;
}

}  // namespace

std::vector<const Backend*> available() { return available_list(); }

const Backend& active() { return *active_slot().load(std::memory_order_relaxed); }

bool force(std::string_view name) {
  for (const Backend* b : available_list()) {
    if (name == b->name) {
      active_slot().store(b, std::memory_order_relaxed);
      return true;
    }
  }
  return false;
}

}  // namespace gcs::kernels
