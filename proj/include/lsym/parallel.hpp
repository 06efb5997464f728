#ifndef LSYM_PARALLEL_HPP
#define LSYM_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "lsym/linalg.hpp"

namespace lsym {

/// How data-parallel loops run. `serial` is the reference path kept for tests
/// and benchmarks; `parallel` uses OpenMP when the build has it.
enum class Exec { serial, parallel };

/// Process-wide default used by the compute modules.
Exec default_exec();
void set_default_exec(Exec e);

/// Runs body(k) for k in [0, n). Iterations must write disjoint outputs.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  Exec exec = default_exec());

/// Builds a rows x cols matrix column by column; column(c) must return a vector of length rows.
ExactMatrix assemble_columns(std::size_t rows, std::size_t cols,
                             const std::function<Vec(std::size_t)>& column,
                             Exec exec = default_exec());

/// Maps [0, n) through fn, keeping index order in the result.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn,
                            Exec exec = default_exec()) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t k) { out[k] = fn(k); }, exec);
  return out;
}

}  // namespace lsym

#endif  // LSYM_PARALLEL_HPP
