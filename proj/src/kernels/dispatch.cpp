#include "wavelab/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wavelab::kernels {

namespace {

const KernelTable &select() {
    const char *req = std::getenv("WAVELAB_KERNELS");
    if (req) {
        std::string name(req);
        if (name == "scalar")
            return scalar_table();
#if defined(__x86_64__)
        if (name == "avx2") {
            if (!avx2_supported())
                throw std::runtime_error("WAVELAB_KERNELS=avx2 but the CPU lacks AVX2/FMA");
            return avx2_table();
        }
#endif
        throw std::runtime_error("unknown WAVELAB_KERNELS value: " + name);
    }
#if defined(__x86_64__)
    if (avx2_supported())
        return avx2_table();
#endif
    return scalar_table();
}

} // namespace

const KernelTable &active() {
    static const KernelTable &table = select();
    return table;
}

std::string active_name() { return active().name; }

} // namespace wavelab::kernels
