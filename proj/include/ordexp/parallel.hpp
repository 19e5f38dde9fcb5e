#pragma once

namespace ordexp {

// Number of threads the parallel kernels may use: the machine core count,
// capped by the ORDEXP_THREADS environment variable when set.  Results do
// not depend on this value (ordered products are assembled serially from
// parallel-filled factor buffers).
int effective_threads();

} // namespace ordexp
