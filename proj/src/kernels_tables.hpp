// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qtex/kernels.hpp"

namespace qtex::kernels {

namespace scalar {
extern const OpTable kTable;
}

namespace avx2 {
// Null-filled when the build lacks AVX2 support.
extern const OpTable kTable;
extern const bool kCompiled;
}

}  // namespace qtex::kernels
