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

#include <atomic>
#include <cstdlib>
#include <string>

#include "ivssa/kernels.hpp"

namespace ivssa::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect() noexcept {
  if (const char* env = std::getenv("IVSSA_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return Backend::kScalar;
    if (want == "avx2" && backend_available(Backend::kAvx2)) return Backend::kAvx2;
    if (want == "neon" && backend_available(Backend::kNeon)) return Backend::kNeon;
  }
  if (backend_available(Backend::kAvx2)) return Backend::kAvx2;
  if (backend_available(Backend::kNeon)) return Backend::kNeon;
  return Backend::kScalar;
}

std::atomic<Backend>& current() noexcept {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

std::string_view to_string(Backend backend) noexcept {
  switch (backend) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
    case Backend::kNeon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend backend) noexcept {
  switch (backend) {
    case Backend::kScalar: return true;
    case Backend::kAvx2: return cpu_has_avx2();
    case Backend::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

bool set_backend(Backend backend) noexcept {
  if (!backend_available(backend)) return false;
  current().store(backend, std::memory_order_relaxed);
  return true;
}

double pair_form(std::span<const double> x, std::span<const double> y) {
  const std::size_t pairs = x.size() / 2;
  switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::kAvx2: return avx2::pair_form(x.data(), y.data(), pairs);
#endif
#if defined(__aarch64__)
    case Backend::kNeon: return neon::pair_form(x.data(), y.data(), pairs);
#endif
    default: return scalar::pair_form(x.data(), y.data(), pairs);
  }
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::kAvx2: avx2::axpy(alpha, x.data(), y.data(), x.size()); return;
#endif
#if defined(__aarch64__)
    case Backend::kNeon: neon::axpy(alpha, x.data(), y.data(), x.size()); return;
#endif
    default: scalar::axpy(alpha, x.data(), y.data(), x.size()); return;
  }
}

double dot(std::span<const double> x, std::span<const double> y) {
  switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::kAvx2: return avx2::dot(x.data(), y.data(), x.size());
#endif
#if defined(__aarch64__)
    case Backend::kNeon: return neon::dot(x.data(), y.data(), x.size());
#endif
    default: return scalar::dot(x.data(), y.data(), x.size());
  }
}

}  // namespace ivssa::kernels
