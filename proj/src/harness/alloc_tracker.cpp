#include "qrr/harness/alloc_tracker.hpp"

#include <gmp.h>
#include <malloc.h>

#include <cstdlib>
#include <new>

namespace {

thread_local long long current_bytes = 0;
thread_local long long baseline_bytes = 0;
thread_local long long peak_bytes = 0;

void note_alloc(void* p) {
  if (!p) return;
  current_bytes += static_cast<long long>(malloc_usable_size(p));
  if (current_bytes > peak_bytes) peak_bytes = current_bytes;
}

void note_free(void* p) {
  if (p) current_bytes -= static_cast<long long>(malloc_usable_size(p));
}

void* tracked_malloc(std::size_t n) {
  void* p = std::malloc(n == 0 ? 1 : n);
  note_alloc(p);
  return p;
}

void* gmp_alloc(std::size_t n) {
  void* p = tracked_malloc(n);
  if (!p) std::abort();
  return p;
}

void* gmp_realloc(void* p, std::size_t, std::size_t n) {
  note_free(p);
  void* q = std::realloc(p, n);
  if (!q) std::abort();
  note_alloc(q);
  return q;
}

void gmp_free(void* p, std::size_t) {
  note_free(p);
  std::free(p);
}

}  // namespace

void* operator new(std::size_t n) {
  void* p = tracked_malloc(n);
  if (!p) throw std::bad_alloc();
  return p;
}

void* operator new[](std::size_t n) { return operator new(n); }

void operator delete(void* p) noexcept {
  note_free(p);
  std::free(p);
}

void operator delete[](void* p) noexcept { operator delete(p); }
void operator delete(void* p, std::size_t) noexcept { operator delete(p); }
void operator delete[](void* p, std::size_t) noexcept { operator delete(p); }

namespace qrr {

void install_gmp_alloc_hooks() { mp_set_memory_functions(gmp_alloc, gmp_realloc, gmp_free); }

void alloc_reset_peak() {
  baseline_bytes = current_bytes;
  peak_bytes = current_bytes;
}

std::size_t alloc_peak_bytes() {
  long long d = peak_bytes - baseline_bytes;
  return d > 0 ? static_cast<std::size_t>(d) : 0;
}

}  // namespace qrr
