#pragma once

#include <cstdint>
#include <vector>

namespace lsfc {

/// 1-based grid labels (i_1, ..., i_D), each in [1, M].
using MultiIndex = std::vector<int>;

/// 1-based flat label in [1, M^D].
using FlatIndex = std::int64_t;

/// M^D with overflow detection; throws CapacityError if it does not fit.
std::int64_t grid_volume(int m, int dims);

/// K = M^{D-1}(i_1 - 1) + M^{D-2}(i_2 - 1) + ... + i_D.
FlatIndex encode(const MultiIndex& idx, int m);

/// Inverse of encode.
MultiIndex decode(FlatIndex flat, int m, int dims);

/// LSF label k = i - N/2 for the 1-based grid label i.
int node_offset(int i, int n_half_count);

/// Grid label i = k + N/2 for the LSF label k.
int grid_label(int k, int n_half_count);

}  // namespace lsfc
