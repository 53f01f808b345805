#pragma once

namespace qgrass {

/// Kernel execution policy. Parallel paths fill per-item buffers with OpenMP
/// and reduce serially, so both policies produce bit-identical results.
enum class Exec { serial, parallel };

}  // namespace qgrass
