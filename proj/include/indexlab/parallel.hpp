#pragma once

namespace indexlab {

/// Applies the INDEXLAB_THREADS cap (if set) to the OpenMP runtime and
/// returns the thread count parallel kernels will use.
int configure_threads();

int max_threads();

}  // namespace indexlab
