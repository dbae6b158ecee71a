#include <glint/parallel.hpp>

#include <cstdlib>
#include <cstring>

namespace glint {

ExecMode default_exec_mode() {
  const char* env = std::getenv("GLINT_EXEC");
  if (env != nullptr) {
    if (std::strcmp(env, "serial") == 0) return ExecMode::serial;
    if (std::strcmp(env, "parallel") == 0) return ExecMode::parallel;
  }
#ifdef _OPENMP
  return ExecMode::parallel;
#else
  return ExecMode::serial;
#endif
}

void parallel_for(std::size_t n, ExecMode mode, const std::function<void(std::size_t)>& fn) {
  if (mode == ExecMode::serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
  // dynamic schedule: tuple costs vary a lot (weights differ per tuple)
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    fn(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

std::vector<std::string> sweep_failures(std::size_t n, ExecMode mode,
                                        const std::function<std::string(std::size_t)>& fn) {
  std::vector<std::string> slots(n);
  parallel_for(n, mode, [&](std::size_t i) { slots[i] = fn(i); });
  // keep index order so serial and parallel runs report identically
  std::vector<std::string> out;
  for (auto& s : slots)
    if (!s.empty()) out.push_back(std::move(s));
  return out;
}

}  // namespace glint
