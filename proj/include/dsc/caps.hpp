#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace dsc {

/// Size limits for operations whose output can blow up combinatorially.
/// The environment variable DSC_CAP_SIMPLICES, when set to a positive
/// integer, overrides both simplex-count caps at startup.
struct Caps {
    std::size_t barycentric_cap = 1000000; ///< max simplices a refinement may produce
    std::size_t connection_cap = 4096;     ///< max simplices for connection/pair matrices
    std::size_t pair_cap = 33554432;       ///< max intersecting pairs enumerated
    int contractible_vertex_cap = 13;      ///< max vertices for contractibility search
    std::size_t recursion_budget = 1000000; ///< max recursive calls in class recognizers
};

inline Caps& caps() {
    static Caps c = [] {
        Caps init;
        if (const char* env = std::getenv("DSC_CAP_SIMPLICES")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) {
                init.barycentric_cap = static_cast<std::size_t>(v);
                init.connection_cap = static_cast<std::size_t>(v);
            }
        }
        return init;
    }();
    return c;
}

} // namespace dsc
