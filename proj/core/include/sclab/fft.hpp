#pragma once

#include <complex>
#include <span>
#include <vector>

namespace sclab {

using cxd = std::complex<double>;

/// In-place radix-2 FFT, forward kernel e^{-2pi i jk/N}. N must be a power
/// of two. Thread-safe; twiddle tables are cached per thread.
void fft_forward(std::span<cxd> a);

/// In-place inverse transform including the 1/N factor.
void fft_inverse(std::span<cxd> a);

/// Reference O(N^2) DFT used only to validate the fast path.
std::vector<cxd> dft_reference(std::span<const cxd> a, bool inverse);

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace sclab
