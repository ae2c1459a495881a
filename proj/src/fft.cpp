#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace ncstar::detail {

namespace {

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n)
      : data(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
    if (data == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  fftw_complex* data;
};

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// The FFTW planner is not thread-safe; execution with the new-array interface
// on buffers of matching alignment is.
class PlanCache {
 public:
  PlanPair get(const std::vector<int>& shape) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = plans_.find(shape);
    if (it != plans_.end()) return it->second;
    std::size_t n = 1;
    for (int s : shape) n *= static_cast<std::size_t>(s);
    FftwBuffer scratch(n);
    PlanPair p;
    const int rank = static_cast<int>(shape.size());
    p.forward = fftw_plan_dft(rank, shape.data(), scratch.data, scratch.data, FFTW_FORWARD,
                              FFTW_ESTIMATE);
    p.backward = fftw_plan_dft(rank, shape.data(), scratch.data, scratch.data, FFTW_BACKWARD,
                               FFTW_ESTIMATE);
    if (p.forward == nullptr || p.backward == nullptr) {
      throw std::runtime_error("fftw: plan creation failed");
    }
    plans_.emplace(shape, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::vector<int>, PlanPair> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

void run(const GridSpec& grid, std::span<const std::complex<double>> in,
         std::span<std::complex<double>> out, bool forward_direction) {
  const std::size_t n = grid.size();
  if (in.size() != n || out.size() != n) {
    throw std::invalid_argument("fft: buffer size does not match grid");
  }
  const PlanPair plans = plan_cache().get(grid.shape());
  FftwBuffer buf(n);
  auto* raw = reinterpret_cast<std::complex<double>*>(buf.data);
  std::copy(in.begin(), in.end(), raw);
  fftw_execute_dft(forward_direction ? plans.forward : plans.backward, buf.data, buf.data);
  if (forward_direction) {
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = raw[i] * scale;
  } else {
    std::copy(raw, raw + n, out.begin());
  }
}

}  // namespace

void forward_transform(const GridSpec& grid, std::span<const std::complex<double>> values,
                       std::span<std::complex<double>> modes) {
  run(grid, values, modes, true);
}

void inverse_transform(const GridSpec& grid, std::span<const std::complex<double>> modes,
                       std::span<std::complex<double>> values) {
  run(grid, modes, values, false);
}

}  // namespace ncstar::detail
