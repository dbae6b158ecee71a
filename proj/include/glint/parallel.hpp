#pragma once

// Check kernels sweep a flat index space of basis tuples; the per-index work
// is independent, so the sweeps parallelize trivially.  Two execution paths
// are kept: a plain serial loop (the reference) and an OpenMP loop.  Results
// are gathered per index and merged in index order, so both paths produce
// byte-identical reports; tests assert exactly that.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace glint {

enum class ExecMode { serial, parallel };

// Chooses the execution mode from the GLINT_EXEC environment variable
// ("serial" or "parallel"); defaults to parallel when OpenMP is available.
ExecMode default_exec_mode();

// Runs fn(i) for i in [0, n).  In parallel mode the iterations are
// distributed over OpenMP threads; fn must only touch its own slot of any
// output buffer.
void parallel_for(std::size_t n, ExecMode mode, const std::function<void(std::size_t)>& fn);

// Sweep returning per-index failure strings (empty string = pass).  The
// returned vector is index-ordered regardless of execution mode.
std::vector<std::string> sweep_failures(std::size_t n, ExecMode mode,
                                        const std::function<std::string(std::size_t)>& fn);

}  // namespace glint
