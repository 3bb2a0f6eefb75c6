#include "confgeo/geometry/types.hpp"
#include "confgeo/geometry/error.hpp"

#include <algorithm>
#include <cmath>

namespace confgeo {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ChartSingularity: return "chart-singularity";
        case ErrorKind::OutsideDomain: return "outside-domain";
        case ErrorKind::StepUnderflow: return "step-underflow";
        case ErrorKind::DegenerateMetric: return "degenerate-metric";
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::BasePointMismatch: return "base-point-mismatch";
        case ErrorKind::NotImmersed: return "not-immersed";
        case ErrorKind::InvalidArgument: return "invalid-argument";
    }
    return "unknown";
}

}  // namespace confgeo

namespace confgeo::geometry {

double Tensor3::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) m = std::max(m, std::abs((*this)(i, j, k)));
    return m;
}

double Tensor4::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                for (int l = 0; l < dim_; ++l) m = std::max(m, std::abs((*this)(i, j, k, l)));
    return m;
}

double max_abs_difference(const Tensor3& a, const Tensor3& b) {
    if (a.dim() != b.dim()) throw GeometryError(ErrorKind::DimensionMismatch, "tensor dimensions differ");
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k) m = std::max(m, std::abs(a(i, j, k) - b(i, j, k)));
    return m;
}

double max_abs_difference(const Tensor4& a, const Tensor4& b) {
    if (a.dim() != b.dim()) throw GeometryError(ErrorKind::DimensionMismatch, "tensor dimensions differ");
    double m = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    m = std::max(m, std::abs(a(i, j, k, l) - b(i, j, k, l)));
    return m;
}

}  // namespace confgeo::geometry
