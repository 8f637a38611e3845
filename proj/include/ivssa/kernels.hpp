// Copyright 2026 The ivssa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Inner-loop kernels over interleaved pair arrays (a0, b0, a1, b1, ...).
//
// Every kernel has a scalar reference version and, where the target
// supports it, an AVX2+FMA (x86-64) or NEON (aarch64) version. The active
// backend is chosen once at first use from the CPU feature flags; the
// IVSSA_SIMD environment variable (scalar|avx2|neon) overrides it. Results
// are deterministic for a fixed backend; backends agree to round-off.

#include <cstddef>
#include <span>
#include <string_view>

namespace ivssa::kernels {

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view to_string(Backend backend) noexcept;

/// Backend used by the dispatching entry points below.
Backend active_backend() noexcept;

/// True when `backend` can run on this machine.
bool backend_available(Backend backend) noexcept;

/// Forces a backend (tests and benchmarks). Returns false and leaves the
/// current backend in place if it is not available.
bool set_backend(Backend backend) noexcept;

/// Symbolic pair product summed over pairs:
///   sum_q 2 a_q c_q + a_q d_q + b_q c_q + 2 b_q d_q
/// for x = (a_q, b_q), y = (c_q, d_q). Both spans hold 2 * pairs doubles.
/// The caller applies the 1/6 factor.
double pair_form(std::span<const double> x, std::span<const double> y);

/// y += alpha * x, elementwise.
void axpy(double alpha, std::span<const double> x, std::span<double> y);

/// sum_i x_i y_i
double dot(std::span<const double> x, std::span<const double> y);

// Per-backend entry points, exposed for the equivalence tests.
namespace scalar {
double pair_form(const double* x, const double* y, std::size_t pairs);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double pair_form(const double* x, const double* y, std::size_t pairs);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double pair_form(const double* x, const double* y, std::size_t pairs);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
}  // namespace neon
#endif

}  // namespace ivssa::kernels
