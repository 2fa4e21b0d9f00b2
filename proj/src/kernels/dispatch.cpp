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

#include <atomic>
#include <cstdlib>

#include "kraw/kernels.hpp"

namespace kraw::kernels {

namespace {

Isa initial_isa() {
    if (std::getenv("KRAW_FORCE_SCALAR") != nullptr) return Isa::Scalar;
    return detect_isa();
}

std::atomic<Isa>& active() {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Avx2: return "avx2";
        case Isa::Scalar: break;
    }
    return "scalar";
}

Isa detect_isa() {
#if defined(KRAW_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
    return Isa::Scalar;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (isa == Isa::Avx2 && detect_isa() != Isa::Avx2) isa = Isa::Scalar;
    active().store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint64_t> y, std::span<const std::uint64_t> x, std::uint64_t c, std::uint64_t p) {
#ifdef KRAW_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::Avx2 && p < kVectorModulusLimit) {
        avx2::axpy_mod(y, x, c, p);
        return;
    }
#endif
    scalar::axpy_mod(y, x, c, p);
}

void scale_mod(std::span<std::uint64_t> y, std::uint64_t c, std::uint64_t p) {
#ifdef KRAW_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::Avx2 && p < kVectorModulusLimit) {
        avx2::scale_mod(y, c, p);
        return;
    }
#endif
    scalar::scale_mod(y, c, p);
}

}  // namespace kraw::kernels
