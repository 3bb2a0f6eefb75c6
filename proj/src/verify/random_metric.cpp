#include "confgeo/verify/random_metric.hpp"

#include "confgeo/geometry/error.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <limits>
#include <memory>

namespace confgeo::verify {

using geometry::Components;
using geometry::Coordinates;
using geometry::kMaxDim;
using geometry::Matrix;
using geometry::Vector;

namespace {

constexpr int kMonomials = 20;  // degree <= 3 in three variables
constexpr int kMaxAttempts = 10'000;
constexpr int kScanPoints = 7;
constexpr double kMinEigenvalue = 0.1;

struct Exponents {
    int i, j, k;
};

constexpr std::array<Exponents, kMonomials> monomials() {
    std::array<Exponents, kMonomials> out{};
    int m = 0;
    for (int deg = 0; deg <= 3; ++deg)
        for (int i = deg; i >= 0; --i)
            for (int j = deg - i; j >= 0; --j) out[m++] = {i, j, deg - i - j};
    return out;
}

constexpr auto kExponents = monomials();

// Upper-triangle entries (00, 01, 02, 11, 12, 22) times monomial coefficients.
using Coefficients = std::array<std::array<double, kMonomials>, 6>;

template <class S>
S power(const S& x, int n) {
    S out(1.0);
    for (int p = 0; p < n; ++p) out = out * x;
    return out;
}

template <class S>
Components<S> polynomial_metric(const Coefficients& c, const Coordinates<S>& x) {
    std::array<S, kMonomials> mono;
    for (int m = 0; m < kMonomials; ++m)
        mono[m] = power(x[0], kExponents[m].i) * power(x[1], kExponents[m].j) *
                  power(x[2], kExponents[m].k);
    Components<S> g{};
    int e = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j, ++e) {
            S value(i == j ? 1.0 : 0.0);
            for (int m = 0; m < kMonomials; ++m) value = value + c[e][m] * mono[m];
            g[i * kMaxDim + j] = g[j * kMaxDim + i] = value;
        }
    return g;
}

double min_eigenvalue_on_box(const Coefficients& c) {
    double lowest = std::numeric_limits<double>::infinity();
    for (int a = 0; a < kScanPoints; ++a)
        for (int b = 0; b < kScanPoints; ++b)
            for (int d = 0; d < kScanPoints; ++d) {
                const auto step = [](int i) { return -kUnitBox + 2.0 * kUnitBox * i / (kScanPoints - 1); };
                const auto g = polynomial_metric<double>(c, {step(a), step(b), step(d)});
                Eigen::Matrix3d m;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) m(i, j) = g[i * kMaxDim + j];
                Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m, Eigen::EigenvaluesOnly);
                lowest = std::min(lowest, es.eigenvalues()(0));
            }
    return lowest;
}

}  // namespace

RandomMetric random_metric(const RandomMetricSpec& spec) {
    if (!(spec.epsilon >= 0.0))
        throw GeometryError(ErrorKind::InvalidArgument, "random_metric: epsilon must be >= 0");
    SeededRng rng(spec.seed);
    for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
        auto c = std::make_shared<Coefficients>();
        for (auto& entry : *c)
            for (double& coeff : entry) coeff = rng.uniform(-spec.epsilon, spec.epsilon);
        const double lowest = min_eigenvalue_on_box(*c);
        if (lowest < kMinEigenvalue) continue;
        auto formula = [c](const auto& x) { return polynomial_metric(*c, x); };
        RandomMetric out{geometry::make_metric_field(geometry::Chart::cartesian(3), formula,
                                                     geometry::PartialsSource::Analytic),
                         attempt, lowest};
        return out;
    }
    throw GeometryError(ErrorKind::InvalidArgument,
                        "random_metric: no positive definite candidate found");
}

dynamics::GeodesicState random_gauge_state(const geometry::MetricField& field, SeededRng& rng) {
    dynamics::GeodesicState st;
    st.x = Vector(3);
    for (int i = 0; i < 3; ++i) st.x(i) = rng.uniform(-0.5, 0.5);
    const Matrix g = field.evaluate(st.x);
    const auto g_norm = [&g](const Vector& v) { return std::sqrt(v.dot(g * v)); };

    Vector u(3);
    do {
        for (int i = 0; i < 3; ++i) u(i) = rng.uniform(-1.0, 1.0);
    } while (u.norm() < 0.1);
    st.u = u / g_norm(u);

    Vector a(3);
    double len = 0.0;
    do {
        for (int i = 0; i < 3; ++i) a(i) = rng.uniform(-1.0, 1.0);
        a -= st.u.dot(g * a) * st.u;
        len = g_norm(a);
    } while (len < 0.1);
    st.a = a * (rng.uniform(0.1, 2.0) / len);
    st.s = 0.0;
    return st;
}

}  // namespace confgeo::verify
