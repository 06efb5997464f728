#include "lsym/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lsym {

namespace {
std::atomic<Exec> g_exec{Exec::parallel};
}

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, Exec exec) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  // Exceptions must not escape an OpenMP region; keep the first one and rethrow.
  std::exception_ptr err;
  std::mutex mu;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

ExactMatrix assemble_columns(std::size_t rows, std::size_t cols,
                             const std::function<Vec(std::size_t)>& column, Exec exec) {
  ExactMatrix m(rows, cols);
  parallel_for(cols, [&](std::size_t c) { m.set_column(c, column(c)); }, exec);
  return m;
}

}  // namespace lsym
