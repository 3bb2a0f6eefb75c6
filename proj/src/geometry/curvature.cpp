#include "confgeo/geometry/curvature.hpp"
#include "confgeo/geometry/error.hpp"

#include <cmath>

namespace confgeo::geometry {

Matrix inverse_metric(const Matrix& g) {
    if (g.rows() != g.cols()) throw GeometryError(ErrorKind::DimensionMismatch, "metric is not square");
    if (!g.allFinite()) throw GeometryError(ErrorKind::DegenerateMetric, "metric has non-finite entries");
    const int n = static_cast<int>(g.rows());
    const double scale = g.cwiseAbs().maxCoeff();
    const double det = g.determinant();
    if (!(scale > 0.0) || std::abs(det) <= 1e-13 * std::pow(scale, n))
        throw GeometryError(ErrorKind::DegenerateMetric, "metric is not invertible at this point");
    return g.inverse();
}

namespace {

// Gamma_{s a b} = 1/2 (d_a g_{s b} + d_b g_{s a} - d_s g_{a b}).
double christoffel_first_kind(const Tensor3& dg, int s, int a, int b) {
    return 0.5 * (dg(s, b, a) + dg(s, a, b) - dg(a, b, s));
}

}  // namespace

Tensor3 christoffel_from_partials(const MetricPartials& p, const Matrix& g_inv) {
    const int n = static_cast<int>(p.g.rows());
    Tensor3 gamma(n);
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                double acc = 0.0;
                for (int s = 0; s < n; ++s) acc += g_inv(m, s) * christoffel_first_kind(p.dg, s, a, b);
                gamma(m, a, b) = acc;
                gamma(m, b, a) = acc;
            }
    return gamma;
}

Tensor3 christoffel(const MetricField& field, const Vector& x, const DerivativeOptions& options) {
    const MetricPartials p = metric_derivatives(field, x, DerivativeOrder::First, options);
    return christoffel_from_partials(p, inverse_metric(p.g));
}

Matrix schouten_from_ricci(const Matrix& ricci, double scalar, const Matrix& g) {
    const int n = static_cast<int>(g.rows());
    if (n < 3) throw GeometryError(ErrorKind::DimensionMismatch, "Schouten tensor needs dimension >= 3");
    return (ricci - (scalar / (2.0 * (n - 1))) * g) / static_cast<double>(n - 2);
}

CurvatureBundle curvature(const MetricField& field, const Vector& x, const DerivativeOptions& options) {
    const MetricPartials p = metric_derivatives(field, x, DerivativeOrder::Second, options);
    const int n = field.dimension();

    CurvatureBundle out;
    out.point = x;
    out.metric = p.g;
    out.inverse_metric = inverse_metric(p.g);
    const Matrix& gi = out.inverse_metric;
    out.christoffel = christoffel_from_partials(p, gi);
    const Tensor3& gamma = out.christoffel;

    // dGamma(mu, nu, b, a) = d_a Gamma^mu_{nu b}
    //   = -g^{mu p} d_a g_{pq} Gamma^q_{nu b} + g^{mu s} d_a Gamma_{s nu b}.
    Tensor4 dgamma(n);
    for (int a = 0; a < n; ++a) {
        Matrix dgi = Matrix::Zero(n, n);  // d_a g_{pq}
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) dgi(i, j) = p.dg(i, j, a);
        const Matrix gi_dg = gi * dgi;
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu)
                for (int b = nu; b < n; ++b) {
                    double acc = 0.0;
                    for (int q = 0; q < n; ++q) acc -= gi_dg(mu, q) * gamma(q, nu, b);
                    for (int s = 0; s < n; ++s) {
                        const double first_kind =
                            0.5 * (p.ddg(s, b, nu, a) + p.ddg(s, nu, b, a) - p.ddg(nu, b, s, a));
                        acc += gi(mu, s) * first_kind;
                    }
                    dgamma(mu, nu, b, a) = acc;
                    dgamma(mu, b, nu, a) = acc;
                }
    }

    out.riemann = Tensor4(n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    double r = dgamma(mu, nu, b, a) - dgamma(mu, nu, a, b);
                    for (int s = 0; s < n; ++s)
                        r += gamma(mu, a, s) * gamma(s, nu, b) - gamma(mu, b, s) * gamma(s, nu, a);
                    out.riemann(mu, nu, a, b) = r;
                }

    out.riemann_lowered = Tensor4(n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    double r = 0.0;
                    for (int s = 0; s < n; ++s) r += p.g(mu, s) * out.riemann(s, nu, a, b);
                    out.riemann_lowered(mu, nu, a, b) = r;
                }

    out.ricci = Matrix::Zero(n, n);
    for (int nu = 0; nu < n; ++nu)
        for (int b = 0; b < n; ++b) {
            double r = 0.0;
            for (int mu = 0; mu < n; ++mu) r += out.riemann(mu, nu, mu, b);
            out.ricci(nu, b) = r;
        }
    out.scalar = (gi.cwiseProduct(out.ricci)).sum();
    if (n >= 3) out.schouten = schouten_from_ricci(out.ricci, out.scalar, p.g);
    return out;
}

Tensor4 kulkarni_nomizu(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.rows() != a.cols() || b.rows() != b.cols())
        throw GeometryError(ErrorKind::DimensionMismatch, "Kulkarni-Nomizu factors must be square and equal-sized");
    const int n = static_cast<int>(a.rows());
    if (n < 1 || n > kMaxDim) throw GeometryError(ErrorKind::DimensionMismatch, "unsupported dimension");
    Tensor4 out(n);
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    out(m, k, i, j) = a(m, i) * b(k, j) + a(k, j) * b(m, i) - a(m, j) * b(k, i) -
                                      a(k, i) * b(m, j);
    return out;
}

Vector hat(const Matrix& g_inv, const Matrix& t, const Vector& u) { return g_inv * (t * u); }

Matrix raise_first(const Matrix& g_inv, const Matrix& t) { return g_inv * t; }

Matrix raise_both(const Matrix& g_inv, const Matrix& t) { return g_inv * t * g_inv.transpose(); }

Matrix lower_both(const Matrix& g, const Matrix& t) { return g * t * g.transpose(); }

Vector hat(const MetricField& field, const Vector& x, const Matrix& t, const Vector& u) {
    return hat(inverse_metric(field.evaluate(x)), t, u);
}

Matrix raise_both(const MetricField& field, const Vector& x, const Matrix& t) {
    return raise_both(inverse_metric(field.evaluate(x)), t);
}

Vector contract_christoffel(const Tensor3& gamma, const Vector& u, const Vector& w) {
    const int n = gamma.dim();
    Vector out = Vector::Zero(n);
    for (int m = 0; m < n; ++m) {
        double acc = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) acc += gamma(m, a, b) * u(a) * w(b);
        out(m) = acc;
    }
    return out;
}

}  // namespace confgeo::geometry
