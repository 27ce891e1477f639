#pragma once

#include <stdexcept>
#include <string>

namespace globalk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderCapExceeded : Error {
    explicit OrderCapExceeded(const std::string& what) : Error("OrderCapExceeded: " + what) {}
};

struct GroupMismatch : Error {
    explicit GroupMismatch(const std::string& what) : Error("GroupMismatch: " + what) {}
};

struct NotRightFree : Error {
    explicit NotRightFree(const std::string& what) : Error("NotRightFree: " + what) {}
};

struct WindowMiss : Error {
    explicit WindowMiss(const std::string& what) : Error("WindowMiss: " + what) {}
};

struct WindowTooSmall : Error {
    explicit WindowTooSmall(const std::string& what) : Error("WindowTooSmall: " + what) {}
};

struct NonCancellative : Error {
    explicit NonCancellative(const std::string& what) : Error("NonCancellative: " + what) {}
};

struct NonUniqueDecomposition : Error {
    explicit NonUniqueDecomposition(const std::string& what) : Error("NonUniqueDecomposition: " + what) {}
};

struct DimCapExceeded : Error {
    explicit DimCapExceeded(const std::string& what) : Error("DimCapExceeded: " + what) {}
};

struct ImagesOverlap : Error {
    explicit ImagesOverlap(const std::string& what) : Error("ImagesOverlap: " + what) {}
};

// Desk-scale caps. The env var GLOBALK_CAPS ("order=48,points=64,dim=4")
// overrides these at CLI level; library callers pass them explicitly.
struct Caps {
    int group_order = 48;
    int gset_points = 64;
    int module_dim = 4;
};

inline Caps& caps() {
    static Caps c;
    return c;
}

} // namespace globalk
