#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace efk {

struct Eigenbasis;
struct QuadratureRule;

// Initial-data / reference profiles.
//   gaussian(center, width):  exp(-((x - center)/width)^2)
//   poly_bump:                s^2 (1-s)^2 with s = x/L, optionally scaled
//   indicator(a, b):          1 on [a, b], 0 elsewhere
//   sine_mode(j):             sqrt(2/L) sin(j pi x / L)
//   coefficient_list:         expansion coefficients in the active basis
//   sampled_table:            linear interpolation of (x, v) samples
struct Profile {
    enum class Kind {
        Gaussian,
        PolyBump,
        Indicator,
        SineMode,
        CoefficientList,
        SampledTable,
    };

    Kind kind = Kind::PolyBump;
    double center = 0.0, width = 1.0;       // gaussian
    double amplitude = 1.0;                 // gaussian / poly_bump scale
    double a = 0.0, b = 0.0;                // indicator
    int mode = 1;                           // sine_mode
    std::vector<double> coeffs;             // coefficient_list
    std::vector<double> sample_x, sample_v; // sampled_table

    static Profile gaussian(double center, double width, double amplitude = 1.0);
    static Profile poly_bump(double amplitude = 1.0);
    static Profile indicator(double a, double b);
    static Profile sine_mode(int j);
    static Profile coefficient_list(std::vector<double> c);
    static Profile sampled_table(std::vector<double> x, std::vector<double> v);

    // Pointwise value on (0, L). Not defined for coefficient_list.
    double operator()(double x, double L) const;

    // Breakpoints a quadrature rule must align to (indicator jumps).
    std::vector<double> breakpoints(double L) const;

    std::string describe() const;
};

// c_j = (profile, w_j), the L^2-orthogonal projection onto span(w_1..w_n).
Eigen::VectorXd project(const Eigenbasis& basis, const QuadratureRule& rule,
                        const Profile& profile);

// u^{(deriv)}(x) = sum_j c_j w_j^{(deriv)}(x) on an arbitrary grid.
std::vector<double> reconstruct(const Eigenbasis& basis,
                                const Eigen::VectorXd& coeffs,
                                const std::vector<double>& grid, int deriv = 0);

}  // namespace efk
