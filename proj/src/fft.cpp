#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace scs::detail {

namespace {

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

Buffer allocate(std::size_t n) {
  auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (!p) throw std::bad_alloc();
  return Buffer(p);
}

// The FFTW planner is not reentrant; execution with fftw_execute_dft on
// fftw_malloc'd arrays is. Plans are cached per (length, sign).
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [k, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mu_);
    auto key = std::pair{n, sign};
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    auto in = allocate(n);
    auto out = allocate(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(),
                                      sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!plan) throw std::runtime_error("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

std::vector<Complex> fft(std::span<const Complex> in, int sign) {
  const std::size_t n = in.size();
  if (n == 0) return {};
  fftw_plan plan = cache().get(n, sign);
  auto a = allocate(n);
  auto b = allocate(n);
  static_assert(sizeof(Complex) == sizeof(fftw_complex));
  std::memcpy(a.get(), in.data(), n * sizeof(Complex));
  fftw_execute_dft(plan, a.get(), b.get());
  std::vector<Complex> out(n);
  std::memcpy(static_cast<void*>(out.data()), b.get(), n * sizeof(Complex));
  return out;
}

}  // namespace scs::detail
