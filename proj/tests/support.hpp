#pragma once

#include "confgeo/geometry/error.hpp"

#include <optional>

namespace confgeo::testing {

// Kind of the GeometryError thrown by f(), or nullopt if none is thrown.
template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
    try {
        f();
    } catch (const GeometryError& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace confgeo::testing
