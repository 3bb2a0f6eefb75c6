#include "confgeo/cli/curvature_report.hpp"

#include <cstdio>
#include <sstream>

namespace confgeo::cli {

using geometry::Matrix;
using geometry::Tensor3;
using geometry::Tensor4;

namespace {

nlohmann::json matrix_json(const Matrix& m) {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        j.push_back(row);
    }
    return j;
}

nlohmann::json tensor_json(const Tensor3& t) {
    nlohmann::json j = nlohmann::json::array();
    for (int a = 0; a < t.dim(); ++a) {
        nlohmann::json ja = nlohmann::json::array();
        for (int b = 0; b < t.dim(); ++b) {
            nlohmann::json jb = nlohmann::json::array();
            for (int c = 0; c < t.dim(); ++c) jb.push_back(t(a, b, c));
            ja.push_back(jb);
        }
        j.push_back(ja);
    }
    return j;
}

nlohmann::json tensor_json(const Tensor4& t) {
    nlohmann::json j = nlohmann::json::array();
    for (int a = 0; a < t.dim(); ++a) {
        nlohmann::json ja = nlohmann::json::array();
        for (int b = 0; b < t.dim(); ++b) {
            nlohmann::json jb = nlohmann::json::array();
            for (int c = 0; c < t.dim(); ++c) {
                nlohmann::json jc = nlohmann::json::array();
                for (int d = 0; d < t.dim(); ++d) jc.push_back(t(a, b, c, d));
                jb.push_back(jc);
            }
            ja.push_back(jb);
        }
        j.push_back(ja);
    }
    return j;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "% .17g", v);
    return buf;
}

void matrix_text(std::ostream& os, const char* name, const Matrix& m) {
    os << name << ":\n";
    for (int i = 0; i < m.rows(); ++i) {
        os << " ";
        for (int k = 0; k < m.cols(); ++k) os << ' ' << num(m(i, k));
        os << '\n';
    }
}

}  // namespace

nlohmann::json to_json(const geometry::CurvatureBundle& cb) {
    nlohmann::json j;
    nlohmann::json p = nlohmann::json::array();
    for (int i = 0; i < cb.point.size(); ++i) p.push_back(cb.point(i));
    j["point"] = p;
    j["metric"] = matrix_json(cb.metric);
    j["inverse_metric"] = matrix_json(cb.inverse_metric);
    j["christoffel"] = tensor_json(cb.christoffel);
    j["riemann"] = tensor_json(cb.riemann);
    j["riemann_lowered"] = tensor_json(cb.riemann_lowered);
    j["ricci"] = matrix_json(cb.ricci);
    j["scalar"] = cb.scalar;
    j["schouten"] = cb.schouten ? matrix_json(*cb.schouten) : nlohmann::json(nullptr);
    return j;
}

std::string to_text(const geometry::CurvatureBundle& cb) {
    std::ostringstream os;
    const int n = static_cast<int>(cb.point.size());
    os << "point:";
    for (int i = 0; i < n; ++i) os << ' ' << num(cb.point(i));
    os << '\n';
    matrix_text(os, "metric", cb.metric);
    matrix_text(os, "inverse_metric", cb.inverse_metric);
    os << "christoffel (nonzero Gamma^m_ab):\n";
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                if (cb.christoffel(m, a, b) != 0.0)
                    os << "  [" << m << "][" << a << b << "] " << num(cb.christoffel(m, a, b)) << '\n';
    os << "riemann_lowered (nonzero R_mnab, m<n, a<b):\n";
    for (int m = 0; m < n; ++m)
        for (int k = m + 1; k < n; ++k)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (cb.riemann_lowered(m, k, a, b) != 0.0)
                        os << "  [" << m << k << "][" << a << b << "] " << num(cb.riemann_lowered(m, k, a, b))
                           << '\n';
    matrix_text(os, "ricci", cb.ricci);
    os << "scalar: " << num(cb.scalar) << '\n';
    if (cb.schouten)
        matrix_text(os, "schouten", *cb.schouten);
    else
        os << "schouten: undefined in dimension 2\n";
    return os.str();
}

}  // namespace confgeo::cli
