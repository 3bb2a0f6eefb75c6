#pragma once

#include <stdexcept>
#include <string>

namespace confgeo {

enum class ErrorKind {
    ChartSingularity,
    OutsideDomain,
    StepUnderflow,
    DegenerateMetric,
    DimensionMismatch,
    BasePointMismatch,
    NotImmersed,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace confgeo
