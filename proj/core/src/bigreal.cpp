#include "radspec/bigreal.hpp"

#include <atomic>

namespace radspec {

namespace {
std::atomic<unsigned> g_precision_bits{256};
}

void set_precision_bits(unsigned bits) {
    if (bits < 64)
        throw std::invalid_argument("precision must be at least 64 bits");
    g_precision_bits.store(bits, std::memory_order_relaxed);
}

unsigned precision_bits() {
    return g_precision_bits.load(std::memory_order_relaxed);
}

}  // namespace radspec
