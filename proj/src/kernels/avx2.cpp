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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kraw/kernels.hpp"

namespace kraw::kernels::avx2 {

namespace {

// Lanes hold integers < 2^51. Conversion to and from double goes through the
// 2^52 exponent trick since AVX2 has no 64-bit int <-> double instructions.
constexpr std::uint64_t kMagicBits = 0x4330000000000000ULL;

struct Reducer {
    __m256d p;
    __m256d inv_p;
    __m256i magic_bits;
    __m256d magic;

    explicit Reducer(std::uint64_t modulus)
        : p(_mm256_set1_pd(static_cast<double>(modulus))),
          inv_p(_mm256_set1_pd(1.0 / static_cast<double>(modulus))),
          magic_bits(_mm256_set1_epi64x(static_cast<long long>(kMagicBits))),
          magic(_mm256_set1_pd(4503599627370496.0)) {}

    // v mod p for 0 <= v < 2^51. All double arithmetic below is on integers
    // below 2^52 and therefore exact, except the quotient estimate.
    __m256i reduce(__m256i v) const {
        const __m256d vd = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, magic_bits)), magic);
        const __m256d qd = _mm256_floor_pd(_mm256_mul_pd(vd, inv_p));
        __m256d r = _mm256_sub_pd(vd, _mm256_mul_pd(qd, p));
        // The quotient estimate is off by at most one: r in (-p, 2p).
        r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), p));
        r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
        return _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(r, magic)), magic_bits);
    }
};

}  // namespace

void axpy_mod(std::span<std::uint64_t> y, std::span<const std::uint64_t> x, std::uint64_t c, std::uint64_t p) {
    const Reducer red(p);
    const __m256i cv = _mm256_set1_epi64x(static_cast<long long>(c));
    std::size_t i = 0;
    for (; i + 4 <= y.size(); i += 4) {
        const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
        const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
        const __m256i v = _mm256_add_epi64(_mm256_mul_epu32(xv, cv), yv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), red.reduce(v));
    }
    scalar::axpy_mod(y.subspan(i), x.subspan(i), c, p);
}

void scale_mod(std::span<std::uint64_t> y, std::uint64_t c, std::uint64_t p) {
    const Reducer red(p);
    const __m256i cv = _mm256_set1_epi64x(static_cast<long long>(c));
    std::size_t i = 0;
    for (; i + 4 <= y.size(); i += 4) {
        const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), red.reduce(_mm256_mul_epu32(yv, cv)));
    }
    scalar::scale_mod(y.subspan(i), c, p);
}

}  // namespace kraw::kernels::avx2
