#pragma once

#include <Eigen/Dense>

#include <array>
#include <cassert>

namespace confgeo::geometry {

// Charts handled here are 2- or 3-dimensional; everything is stored dense
// with a compile-time capacity so no heap allocation happens in hot loops.
inline constexpr int kMaxDim = 3;

using Vector = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

// Dense rank-3 array T(i, j, k). Index meaning is fixed by the producer:
// metric first partials use (i, j, a) = d_a g_ij, Christoffel symbols use
// (mu, alpha, beta) = Gamma^mu_{alpha beta}.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int dim) : dim_(dim) { assert(dim > 0 && dim <= kMaxDim); }

    int dim() const { return dim_; }

    double& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
    double operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

    double max_abs() const;

private:
    int index(int i, int j, int k) const { return (i * kMaxDim + j) * kMaxDim + k; }

    int dim_ = 0;
    std::array<double, kMaxDim * kMaxDim * kMaxDim> data_{};
};

// Dense rank-4 array. Used for second metric partials (i, j, a, b) and for
// the Riemann tensor in either index position.
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(int dim) : dim_(dim) { assert(dim > 0 && dim <= kMaxDim); }

    int dim() const { return dim_; }

    double& operator()(int i, int j, int k, int l) { return data_[index(i, j, k, l)]; }
    double operator()(int i, int j, int k, int l) const { return data_[index(i, j, k, l)]; }

    double max_abs() const;

private:
    int index(int i, int j, int k, int l) const {
        return ((i * kMaxDim + j) * kMaxDim + k) * kMaxDim + l;
    }

    int dim_ = 0;
    std::array<double, kMaxDim * kMaxDim * kMaxDim * kMaxDim> data_{};
};

double max_abs_difference(const Tensor3& a, const Tensor3& b);
double max_abs_difference(const Tensor4& a, const Tensor4& b);

inline Vector make_vector(std::initializer_list<double> values) {
    Vector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) v(i++) = x;
    return v;
}

}  // namespace confgeo::geometry
