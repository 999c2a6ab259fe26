#include "efk/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "efk/eigenbasis.hpp"
#include "efk/kernels.hpp"
#include "efk/quadrature.hpp"

namespace efk {

Profile Profile::gaussian(double center, double width, double amplitude) {
    if (width <= 0.0) throw std::invalid_argument("gaussian: width must be positive");
    Profile p;
    p.kind = Kind::Gaussian;
    p.center = center;
    p.width = width;
    p.amplitude = amplitude;
    return p;
}

Profile Profile::poly_bump(double amplitude) {
    Profile p;
    p.kind = Kind::PolyBump;
    p.amplitude = amplitude;
    return p;
}

Profile Profile::indicator(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("indicator: requires a < b");
    Profile p;
    p.kind = Kind::Indicator;
    p.a = a;
    p.b = b;
    return p;
}

Profile Profile::sine_mode(int j) {
    if (j < 1) throw std::invalid_argument("sine_mode: j must be >= 1");
    Profile p;
    p.kind = Kind::SineMode;
    p.mode = j;
    return p;
}

Profile Profile::coefficient_list(std::vector<double> c) {
    Profile p;
    p.kind = Kind::CoefficientList;
    p.coeffs = std::move(c);
    return p;
}

Profile Profile::sampled_table(std::vector<double> x, std::vector<double> v) {
    if (x.size() != v.size() || x.size() < 2)
        throw std::invalid_argument("sampled_table: need >= 2 matching samples");
    if (!std::is_sorted(x.begin(), x.end()))
        throw std::invalid_argument("sampled_table: sample positions must ascend");
    Profile p;
    p.kind = Kind::SampledTable;
    p.sample_x = std::move(x);
    p.sample_v = std::move(v);
    return p;
}

double Profile::operator()(double x, double L) const {
    switch (kind) {
        case Kind::Gaussian: {
            const double s = (x - center) / width;
            return amplitude * std::exp(-s * s);
        }
        case Kind::PolyBump: {
            const double s = x / L;
            return amplitude * s * s * (1.0 - s) * (1.0 - s);
        }
        case Kind::Indicator:
            return (x >= a && x <= b) ? 1.0 : 0.0;
        case Kind::SineMode:
            return std::sqrt(2.0 / L) * std::sin(mode * M_PI * x / L);
        case Kind::SampledTable: {
            if (x <= sample_x.front()) return sample_v.front();
            if (x >= sample_x.back()) return sample_v.back();
            const auto it = std::upper_bound(sample_x.begin(), sample_x.end(), x);
            const size_t i = it - sample_x.begin();
            const double t = (x - sample_x[i - 1]) / (sample_x[i] - sample_x[i - 1]);
            return sample_v[i - 1] + t * (sample_v[i] - sample_v[i - 1]);
        }
        case Kind::CoefficientList:
            throw std::invalid_argument("coefficient_list has no pointwise value");
    }
    return 0.0;
}

std::vector<double> Profile::breakpoints(double L) const {
    if (kind == Kind::Indicator) {
        std::vector<double> out;
        if (a > 0.0 && a < L) out.push_back(a);
        if (b > 0.0 && b < L) out.push_back(b);
        return out;
    }
    return {};
}

std::string Profile::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Gaussian: os << "gaussian " << center << " " << width; break;
        case Kind::PolyBump: os << "poly_bump"; break;
        case Kind::Indicator: os << "indicator " << a << " " << b; break;
        case Kind::SineMode: os << "sine_mode " << mode; break;
        case Kind::CoefficientList: os << "coefficient_list[" << coeffs.size() << "]"; break;
        case Kind::SampledTable: os << "sampled_table[" << sample_x.size() << "]"; break;
    }
    return os.str();
}

Eigen::VectorXd project(const Eigenbasis& basis, const QuadratureRule& rule,
                        const Profile& profile) {
    if (std::abs(rule.L - basis.L) > 1e-12 * basis.L)
        throw std::invalid_argument("project: rule and basis domain mismatch");

    if (profile.kind == Profile::Kind::CoefficientList) {
        Eigen::VectorXd c = Eigen::VectorXd::Zero(basis.n);
        const int k = std::min<int>(basis.n, profile.coeffs.size());
        for (int j = 0; j < k; ++j) c[j] = profile.coeffs[j];
        return c;
    }
    if (profile.kind == Profile::Kind::Indicator) {
        // A jump inside a panel silently degrades the rule to O(1) accuracy.
        if (!rule.has_edge(profile.a) || !rule.has_edge(profile.b))
            throw std::invalid_argument(
                "project: indicator endpoints must be quadrature panel edges");
    }

    const int nq = rule.size();
    Eigen::VectorXd values(nq), weights(nq);
    for (int i = 0; i < nq; ++i) {
        values[i] = profile(rule.nodes[i], basis.L);
        weights[i] = rule.weights[i];
    }
    const Eigen::MatrixXd table = kernels::basis_table(basis, rule.nodes, 0);
    return kernels::project_nodes(table, weights, values);
}

std::vector<double> reconstruct(const Eigenbasis& basis,
                                const Eigen::VectorXd& coeffs,
                                const std::vector<double>& grid, int deriv) {
    if (coeffs.size() != basis.n)
        throw std::invalid_argument("reconstruct: coefficient count mismatch");
    const Eigen::MatrixXd table = kernels::basis_table(basis, grid, deriv);
    const Eigen::VectorXd vals = kernels::reconstruct_nodes(table, coeffs);
    return std::vector<double>(vals.data(), vals.data() + vals.size());
}

}  // namespace efk
