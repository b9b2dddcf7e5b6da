#include "sclab/fft.hpp"

#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace sclab {

namespace {

// Twiddles for size N: w[k] = e^{-2pi i k/N}, k < N/2.
const std::vector<cxd>& twiddles(std::size_t n) {
  thread_local std::unordered_map<std::size_t, std::vector<cxd>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<cxd> w(n / 2);
  const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n / 2; ++k)
    w[k] = std::polar(1.0, step * static_cast<double>(k));
  return cache.emplace(n, std::move(w)).first->second;
}

void bit_reverse_permute(std::span<cxd> a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

}  // namespace

void fft_forward(std::span<cxd> a) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");
  if (n == 1) return;
  bit_reverse_permute(a);
  const auto& w = twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cxd t = a[i + k + len / 2] * w[k * stride];
        a[i + k + len / 2] = a[i + k] - t;
        a[i + k] += t;
      }
    }
  }
}

void fft_inverse(std::span<cxd> a) {
  for (auto& v : a) v = std::conj(v);
  fft_forward(a);
  const double s = 1.0 / static_cast<double>(a.size());
  for (auto& v : a) v = std::conj(v) * s;
}

std::vector<cxd> dft_reference(std::span<const cxd> a, bool inverse) {
  const std::size_t n = a.size();
  std::vector<cxd> out(n);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    cxd acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double ph = sign * 2.0 * std::numbers::pi *
                        static_cast<double>(k) * static_cast<double>(j) /
                        static_cast<double>(n);
      acc += a[j] * std::polar(1.0, ph);
    }
    out[k] = inverse ? acc / static_cast<double>(n) : acc;
  }
  return out;
}

}  // namespace sclab
