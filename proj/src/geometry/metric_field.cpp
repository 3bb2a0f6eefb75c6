#include "confgeo/geometry/metric_field.hpp"
#include "confgeo/geometry/error.hpp"

#include <cmath>

namespace confgeo::geometry {

MetricField::MetricField(Chart chart, Evaluator evaluate,
                         std::optional<PartialsEvaluator> analytic_partials,
                         DomainPredicate domain)
    : chart_(std::move(chart)),
      evaluate_(std::move(evaluate)),
      partials_(std::move(analytic_partials)),
      domain_(std::move(domain)) {
    if (!evaluate_) throw GeometryError(ErrorKind::InvalidArgument, "metric field needs an evaluator");
}

Matrix MetricField::evaluate(const Vector& x) const {
    if (!in_domain(x)) throw GeometryError(ErrorKind::OutsideDomain, "point outside metric domain");
    return evaluate_(x);
}

MetricPartials MetricField::analytic_partials(const Vector& x) const {
    if (!partials_)
        throw GeometryError(ErrorKind::InvalidArgument, "metric has no analytic partials");
    if (!in_domain(x)) throw GeometryError(ErrorKind::OutsideDomain, "point outside metric domain");
    return (*partials_)(x);
}

MetricField MetricField::without_analytic_partials() const {
    return MetricField(chart_, evaluate_, std::nullopt, domain_);
}

namespace {

struct FlatPolarFormula {
    template <class S>
    Components<S> operator()(const Coordinates<S>& x) const {
        Components<S> g{};
        g[0] = S(1.0);
        g[1 * kMaxDim + 1] = x[0] * x[0];
        return g;
    }
};

struct FlatCylindricalFormula {
    template <class S>
    Components<S> operator()(const Coordinates<S>& x) const {
        Components<S> g{};
        g[0] = S(1.0);
        g[1 * kMaxDim + 1] = x[0] * x[0];
        g[2 * kMaxDim + 2] = S(1.0);
        return g;
    }
};

struct RoundSphereFormula {
    template <class S>
    Components<S> operator()(const Coordinates<S>& x) const {
        using std::sin;
        Components<S> g{};
        g[0] = S(1.0);
        const S s = sin(x[0]);
        g[1 * kMaxDim + 1] = s * s;
        return g;
    }
};

}  // namespace

MetricField flat_cartesian(int dim) {
    Chart chart = Chart::cartesian(dim);
    return MetricField(
        chart, [dim](const Vector&) { return Matrix(Matrix::Identity(dim, dim)); },
        [dim](const Vector&) {
            return MetricPartials{Matrix::Identity(dim, dim), Tensor3(dim), Tensor4(dim), true};
        });
}

MetricField flat_polar(PartialsSource source) {
    return make_metric_field(Chart::polar(), FlatPolarFormula{}, source);
}

MetricField flat_cylindrical(PartialsSource source) {
    return make_metric_field(Chart::cylindrical(), FlatCylindricalFormula{}, source);
}

MetricField round_sphere(PartialsSource source) {
    return make_metric_field(Chart::sphere(), RoundSphereFormula{}, source);
}

}  // namespace confgeo::geometry
