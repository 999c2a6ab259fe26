#include "efk/output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace efk {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    return f;
}

std::vector<double> uniform_grid(double L, int points) {
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) g[i] = L * i / (points - 1);
    g.back() = L;
    return g;
}

// Snapshot values on a grid, lifting (inhomogeneous Dirichlet) included.
std::vector<std::vector<double>> grid_values(const Trajectory& traj,
                                             const Eigenbasis& basis,
                                             const std::vector<double>& grid) {
    const double slope =
        (traj.problem.bc_right - traj.problem.bc_left) / traj.problem.L;
    std::vector<std::vector<double>> out;
    out.reserve(traj.snapshots.size());
    for (const auto& s : traj.snapshots) {
        std::vector<double> u = reconstruct(basis, s.c, grid);
        if (traj.problem.has_lifting())
            for (std::size_t i = 0; i < grid.size(); ++i)
                u[i] += traj.problem.bc_left + slope * grid[i];
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace

std::string format_sig(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

void write_snapshots_csv(const Trajectory& traj, const Eigenbasis& basis,
                         const std::string& path, int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("grid_points must be >= 2");
    auto f = open_out(path);
    const std::vector<double> grid = uniform_grid(traj.problem.L, grid_points);
    const auto values = grid_values(traj, basis, grid);
    f << "t,x,u\n";
    for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
        const std::string t = format_sig(traj.snapshots[k].t, 12);
        for (std::size_t i = 0; i < grid.size(); ++i)
            f << t << ',' << format_sig(grid[i], 12) << ','
              << format_sig(values[k][i], 12) << '\n';
    }
}

void write_timeseries_csv(const Trajectory& traj, const std::string& path) {
    auto f = open_out(path);
    f << "t,l2,vnorm_sq,l4_4,potential,energy,dissipation_cum\n";
    for (const auto& r : traj.reports)
        f << format_sig(r.t, 12) << ',' << format_sig(r.l2, 12) << ','
          << format_sig(r.vnorm_sq, 12) << ',' << format_sig(r.l4_4, 12) << ','
          << format_sig(r.potential, 12) << ',' << format_sig(r.energy, 12) << ','
          << format_sig(r.dissipation_cum, 12) << '\n';
}

void write_audit_csv(const std::vector<AuditCheck>& checks, const std::string& path) {
    auto f = open_out(path);
    f << "check,lhs,rhs,margin,pass\n";
    for (const auto& c : checks)
        f << c.name << ',' << format_sig(c.lhs, 12) << ',' << format_sig(c.rhs, 12)
          << ',' << format_sig(c.margin, 12) << ',' << (c.pass ? "true" : "false")
          << '\n';
}

void write_svg(const Trajectory& traj, const Eigenbasis& basis,
               const std::string& path, int grid_points) {
    static const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                     "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                     "#bcbd22", "#17becf"};
    constexpr int kWidth = 800, kHeight = 500;
    constexpr double kLeft = 70, kRight = 640, kTop = 20, kBottom = 460;

    const std::vector<double> grid = uniform_grid(traj.problem.L, grid_points);
    const auto values = grid_values(traj, basis, grid);

    double ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (const auto& row : values)
        for (double v : row) {
            if (first || v < ymin) ymin = v;
            if (first || v > ymax) ymax = v;
            first = false;
        }
    if (ymax - ymin < 1e-12) {
        ymin -= 1.0;
        ymax += 1.0;
    }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
    const double xmin = 0.0, xmax = traj.problem.L;

    auto px = [&](double x) {
        return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft);
    };
    auto py = [&](double y) {
        return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop);
    };

    auto f = open_out(path);
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
    f << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
    f << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << kRight - kLeft << "\" height=\"" << kBottom - kTop
      << "\" fill=\"none\" stroke=\"black\"/>\n";

    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const double x = xmin + (xmax - xmin) * i / kTicks;
        const double y = ymin + (ymax - ymin) * i / kTicks;
        f << "<line x1=\"" << format_sig(px(x), 6) << "\" y1=\"" << kBottom
          << "\" x2=\"" << format_sig(px(x), 6) << "\" y2=\"" << kBottom + 6
          << "\" stroke=\"black\"/>\n";
        f << "<text x=\"" << format_sig(px(x), 6) << "\" y=\"" << kBottom + 20
          << "\" font-size=\"12\" text-anchor=\"middle\">" << format_sig(x, 6)
          << "</text>\n";
        f << "<line x1=\"" << kLeft - 6 << "\" y1=\"" << format_sig(py(y), 6)
          << "\" x2=\"" << kLeft << "\" y2=\"" << format_sig(py(y), 6)
          << "\" stroke=\"black\"/>\n";
        f << "<text x=\"" << kLeft - 10 << "\" y=\"" << format_sig(py(y) + 4, 6)
          << "\" font-size=\"12\" text-anchor=\"end\">" << format_sig(y, 6)
          << "</text>\n";
    }

    const int ncolors = static_cast<int>(sizeof kPalette / sizeof *kPalette);
    for (std::size_t k = 0; k < values.size(); ++k) {
        f << "<polyline fill=\"none\" stroke=\"" << kPalette[k % ncolors]
          << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (i) f << ' ';
            f << format_sig(px(grid[i]), 6) << ',' << format_sig(py(values[k][i]), 6);
        }
        f << "\"/>\n";
        const double ly = kTop + 16 + 16.0 * static_cast<double>(k);
        if (ly < kBottom) {
            f << "<line x1=\"" << kRight + 10 << "\" y1=\"" << format_sig(ly - 4, 6)
              << "\" x2=\"" << kRight + 34 << "\" y2=\"" << format_sig(ly - 4, 6)
              << "\" stroke=\"" << kPalette[k % ncolors]
              << "\" stroke-width=\"1.5\"/>\n";
            f << "<text x=\"" << kRight + 40 << "\" y=\"" << format_sig(ly, 6)
              << "\" font-size=\"12\">t = " << format_sig(traj.snapshots[k].t, 6)
              << "</text>\n";
        }
    }
    f << "</svg>\n";
}

}  // namespace efk
