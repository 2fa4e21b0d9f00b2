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

#include "kraw/kernels.hpp"

namespace kraw::kernels::scalar {

void axpy_mod(std::span<std::uint64_t> y, std::span<const std::uint64_t> x, std::uint64_t c, std::uint64_t p) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        const std::uint64_t prod = (c * x[i]) % p;  // c, x < 2^32
        std::uint64_t s = y[i] + prod;
        if (s >= p) s -= p;
        y[i] = s;
    }
}

void scale_mod(std::span<std::uint64_t> y, std::uint64_t c, std::uint64_t p) {
    for (auto& v : y) v = (v * c) % p;
}

}  // namespace kraw::kernels::scalar
