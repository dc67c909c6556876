#include <cstdlib>
#include <string>

#include "lsfc/error.hpp"
#include "lsfc/simd/kernels.hpp"

namespace lsfc::simd {

#ifdef LSFC_HAVE_AVX2
const KernelTable& avx2_kernels();
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(LSFC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2})
    if (isa_available(isa)) out.push_back(isa);
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) throw DomainError("SIMD kernels '" + std::string(isa_name(isa)) + "' are not available");
#ifdef LSFC_HAVE_AVX2
  if (isa == Isa::Avx2) return avx2_kernels();
#endif
  return scalar_kernels();
}

namespace {

const KernelTable& select_kernels() {
  if (const char* forced = std::getenv("LSFC_SIMD")) {
    const std::string name(forced);
    for (Isa isa : {Isa::Scalar, Isa::Avx2})
      if (name == isa_name(isa)) return kernels_for(isa);
    throw DomainError("LSFC_SIMD: unknown kernel set '" + name + "'");
  }
  return kernels_for(available_isas().back());
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace lsfc::simd
