#include "lsfc/indexing.hpp"

#include <limits>
#include <string>

#include "lsfc/error.hpp"

namespace lsfc {

std::int64_t grid_volume(int m, int dims) {
  if (m < 1 || dims < 1) throw DomainError("grid_volume: M and D must be positive");
  std::int64_t v = 1;
  for (int d = 0; d < dims; ++d) {
    if (v > std::numeric_limits<std::int64_t>::max() / m) throw CapacityError("grid volume M^D overflows");
    v *= m;
  }
  return v;
}

FlatIndex encode(const MultiIndex& idx, int m) {
  if (idx.empty()) throw DomainError("encode: empty multi-index");
  grid_volume(m, static_cast<int>(idx.size()));
  FlatIndex flat = 0;
  for (int i : idx) {
    if (i < 1 || i > m) throw DomainError("encode: label " + std::to_string(i) + " outside [1, " + std::to_string(m) + "]");
    flat = flat * m + (i - 1);
  }
  return flat + 1;
}

MultiIndex decode(FlatIndex flat, int m, int dims) {
  const std::int64_t volume = grid_volume(m, dims);
  if (flat < 1 || flat > volume)
    throw DomainError("decode: flat index " + std::to_string(flat) + " outside [1, " + std::to_string(volume) + "]");
  MultiIndex idx(dims);
  std::int64_t rest = flat - 1;
  for (int d = dims - 1; d >= 0; --d) {
    idx[d] = static_cast<int>(rest % m) + 1;
    rest /= m;
  }
  return idx;
}

int node_offset(int i, int n_half_count) {
  if (i < 1 || i > n_half_count - 1)
    throw DomainError("node_offset: label " + std::to_string(i) + " outside [1, " + std::to_string(n_half_count - 1) + "]");
  return i - n_half_count / 2;
}

int grid_label(int k, int n_half_count) {
  const int half = n_half_count / 2;
  if (k < 1 - half || k > half - 1) throw DomainError("grid_label: LSF index " + std::to_string(k) + " out of range");
  return k + half;
}

}  // namespace lsfc
