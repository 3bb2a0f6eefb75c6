#pragma once

#include "confgeo/geometry/derivatives.hpp"
#include "confgeo/geometry/metric_field.hpp"

#include <optional>

namespace confgeo::geometry {

// Curvature of the Levi-Civita connection at one point.
//
// Conventions:
//   Gamma^mu_{ab} = 1/2 g^{mu s} (d_a g_{s b} + d_b g_{s a} - d_s g_{ab})
//   R^mu_{n a b}  = d_a Gamma^mu_{n b} - d_b Gamma^mu_{n a}
//                   + Gamma^mu_{a s} Gamma^s_{n b} - Gamma^mu_{b s} Gamma^s_{n a}
//   R_{n b}       = R^mu_{n mu b}
//   L             = (Ric - R g / (2 (n - 1))) / (n - 2)
// so the unit sphere has Ric = g (n - 1).
struct CurvatureBundle {
    Vector point;
    Matrix metric;
    Matrix inverse_metric;
    Tensor3 christoffel;      // (mu, a, b)
    Tensor4 riemann;          // (mu, n, a, b) = R^mu_{n a b}
    Tensor4 riemann_lowered;  // (mu, n, a, b) = R_{mu n a b}
    Matrix ricci;
    double scalar = 0.0;
    // The Schouten tensor is undefined in dimension 2.
    std::optional<Matrix> schouten;
};

// Inverse metric; throws GeometryError(DegenerateMetric) if g is singular or
// not finite.
Matrix inverse_metric(const Matrix& g);

Tensor3 christoffel(const MetricField& field, const Vector& x,
                    const DerivativeOptions& options = {});
Tensor3 christoffel_from_partials(const MetricPartials& p, const Matrix& g_inv);

CurvatureBundle curvature(const MetricField& field, const Vector& x,
                          const DerivativeOptions& options = {});

// Schouten tensor from Ricci, scalar curvature and metric; n >= 3.
Matrix schouten_from_ricci(const Matrix& ricci, double scalar, const Matrix& g);

// (A owedge B)_{mnab} = A_ma B_nb + A_nb B_ma - A_mb B_na - A_na B_mb.
Tensor4 kulkarni_nomizu(const Matrix& a, const Matrix& b);

// Contractions with the "hat" map of a covariant 2-tensor:
// (T-hat u)^mu = g^{mu s} T_{s n} u^n.
Vector hat(const Matrix& g_inv, const Matrix& t, const Vector& u);
// T^mu_n = g^{mu s} T_{s n}.
Matrix raise_first(const Matrix& g_inv, const Matrix& t);
// T^{mu n} = g^{mu a} g^{n b} T_{ab}.
Matrix raise_both(const Matrix& g_inv, const Matrix& t);
// T_{mu n} = g_{mu a} g_{n b} T^{ab}.
Matrix lower_both(const Matrix& g, const Matrix& t);

// Point-evaluating convenience wrappers over the metric of `field`.
Vector hat(const MetricField& field, const Vector& x, const Matrix& t, const Vector& u);
Matrix raise_both(const MetricField& field, const Vector& x, const Matrix& t);

// Gamma^mu_{ab} u^a w^b.
Vector contract_christoffel(const Tensor3& gamma, const Vector& u, const Vector& w);

}  // namespace confgeo::geometry
