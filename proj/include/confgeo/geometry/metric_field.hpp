#pragma once

#include "confgeo/geometry/chart.hpp"
#include "confgeo/geometry/jet.hpp"
#include "confgeo/geometry/types.hpp"

#include <functional>
#include <optional>

namespace confgeo::geometry {

// Metric components together with their first and second coordinate
// partials at one point: dg(i, j, a) = d_a g_ij, ddg(i, j, a, b) = d_a d_b g_ij.
struct MetricPartials {
    Matrix g;
    Tensor3 dg;
    Tensor4 ddg;
    bool has_second = false;
};

// A Riemannian metric expressed in one chart.
class MetricField {
public:
    using Evaluator = std::function<Matrix(const Vector&)>;
    using PartialsEvaluator = std::function<MetricPartials(const Vector&)>;
    using DomainPredicate = std::function<bool(const Vector&)>;

    MetricField(Chart chart, Evaluator evaluate,
                std::optional<PartialsEvaluator> analytic_partials = std::nullopt,
                DomainPredicate domain = {});

    const Chart& chart() const { return chart_; }
    int dimension() const { return chart_.dimension(); }

    bool in_domain(const Vector& x) const { return !domain_ || domain_(x); }

    // Raw evaluation; does not test the singular locus so that stencils may
    // straddle it. Throws GeometryError(OutsideDomain) outside the domain.
    Matrix evaluate(const Vector& x) const;

    bool has_analytic_partials() const { return partials_.has_value(); }
    MetricPartials analytic_partials(const Vector& x) const;

    // Same field with analytic partials dropped, so every derivative is taken
    // by finite differences.
    MetricField without_analytic_partials() const;

private:
    Chart chart_;
    Evaluator evaluate_;
    std::optional<PartialsEvaluator> partials_;
    DomainPredicate domain_;
};

// Component formula shared by the double and Jet instantiations. `Formula` is
// a callable template: given std::array<S, kMaxDim> coordinates (unused slots
// zero), it returns the row-major std::array<S, kMaxDim * kMaxDim> of g_ij.
template <class S>
using Coordinates = std::array<S, kMaxDim>;
template <class S>
using Components = std::array<S, kMaxDim * kMaxDim>;

enum class PartialsSource { Analytic, FiniteDifference };

template <class Formula>
MetricField make_metric_field(Chart chart, Formula formula, PartialsSource source,
                              MetricField::DomainPredicate domain = {}) {
    const int n = chart.dimension();
    MetricField::Evaluator eval = [formula, n](const Vector& x) {
        Coordinates<double> xs{};
        for (int a = 0; a < n; ++a) xs[a] = x(a);
        const Components<double> c = formula(xs);
        Matrix g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = c[i * kMaxDim + j];
        return g;
    };
    std::optional<MetricField::PartialsEvaluator> partials;
    if (source == PartialsSource::Analytic) {
        partials = [formula, n](const Vector& x) {
            Coordinates<Jet> xs{};
            for (int a = 0; a < n; ++a) xs[a] = Jet::variable(x(a), a);
            const Components<Jet> c = formula(xs);
            MetricPartials p{Matrix(n, n), Tensor3(n), Tensor4(n), true};
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Jet& gij = c[i * kMaxDim + j];
                    p.g(i, j) = gij.v;
                    for (int a = 0; a < n; ++a) {
                        p.dg(i, j, a) = gij.d[a];
                        for (int b = 0; b < n; ++b) p.ddg(i, j, a, b) = gij.hess(a, b);
                    }
                }
            return p;
        };
    }
    return MetricField(std::move(chart), std::move(eval), std::move(partials), std::move(domain));
}

// Euclidean metric in Cartesian coordinates (exact zero partials).
MetricField flat_cartesian(int dim);
// Euclidean plane in polar coordinates, g = diag(1, r^2).
MetricField flat_polar(PartialsSource source = PartialsSource::Analytic);
// Euclidean space in cylindrical coordinates, g = diag(1, r^2, 1).
MetricField flat_cylindrical(PartialsSource source = PartialsSource::Analytic);
// Unit round sphere, g = d theta^2 + sin^2 theta d phi^2.
MetricField round_sphere(PartialsSource source = PartialsSource::Analytic);

}  // namespace confgeo::geometry
