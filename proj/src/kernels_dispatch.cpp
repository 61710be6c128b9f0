#include "zpzp2/kernels.hpp"

#include <cstdlib>
#include <string>

namespace zpzp2::kernels {

const Ops* avx2_ops();  // nullptr on non-x86 builds

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops* find(std::string_view name) {
    if (name == "scalar") return &scalar();
    if (name == "avx2" && cpu_has_avx2()) return avx2_ops();
    return nullptr;
}

const Ops*& active_slot() {
    static const Ops* slot = [] {
        if (const char* env = std::getenv("ZPZP2_KERNELS")) {
            if (const Ops* forced = find(env)) return forced;
        }
        if (cpu_has_avx2()) return avx2_ops();
        return &scalar();
    }();
    return slot;
}

}  // namespace

const Ops& active() { return *active_slot(); }

std::vector<const Ops*> available() {
    std::vector<const Ops*> all = {&scalar()};
    if (cpu_has_avx2()) all.push_back(avx2_ops());
    return all;
}

bool select(std::string_view name) {
    if (const Ops* ops = find(name)) {
        active_slot() = ops;
        return true;
    }
    return false;
}

}  // namespace zpzp2::kernels
