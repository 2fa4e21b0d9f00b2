/*
   Copyright 2026 The kraw Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KRAW_KERNELS_HPP
#define KRAW_KERNELS_HPP

// Residue-vector kernels for F_p[x] arithmetic. Every entry point has a scalar
// reference implementation; vector variants are picked at runtime and must
// agree with the reference bit for bit.

#include <cstdint>
#include <span>
#include <string_view>

namespace kraw::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Best ISA supported by the running CPU (and compiled in).
Isa detect_isa();

/// ISA used by the dispatching entry points. Initialised from detect_isa(),
/// or Scalar when KRAW_FORCE_SCALAR is set in the environment.
Isa active_isa();

/// Overrides dispatch (tests and benchmarks). Requesting an unsupported ISA falls back to Scalar.
void set_active_isa(Isa isa);

/// Largest modulus the vector variants accept; larger moduli always take the scalar path.
inline constexpr std::uint64_t kVectorModulusLimit = 1ULL << 25;

// All operands are reduced residues in [0, p); p < 2^32.
// y[i] <- (y[i] + c * x[i]) mod p, for i < y.size() (x.size() >= y.size()).
void axpy_mod(std::span<std::uint64_t> y, std::span<const std::uint64_t> x, std::uint64_t c, std::uint64_t p);
// y[i] <- c * y[i] mod p
void scale_mod(std::span<std::uint64_t> y, std::uint64_t c, std::uint64_t p);

namespace scalar {
void axpy_mod(std::span<std::uint64_t> y, std::span<const std::uint64_t> x, std::uint64_t c, std::uint64_t p);
void scale_mod(std::span<std::uint64_t> y, std::uint64_t c, std::uint64_t p);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define KRAW_HAVE_AVX2_KERNELS 1
namespace avx2 {
// Require p < kVectorModulusLimit.
void axpy_mod(std::span<std::uint64_t> y, std::span<const std::uint64_t> x, std::uint64_t c, std::uint64_t p);
void scale_mod(std::span<std::uint64_t> y, std::uint64_t c, std::uint64_t p);
}  // namespace avx2
#endif

}  // namespace kraw::kernels

#endif  // KRAW_KERNELS_HPP
