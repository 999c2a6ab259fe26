#pragma once

#include <string>
#include <vector>

#include "efk/diagnostics.hpp"
#include "efk/integrator.hpp"

namespace efk {

// All writers format with fixed "%.12g" (12 significant digits) so identical
// inputs give byte-identical files.

// Long format t,x,u: every stored snapshot reconstructed (lifting included)
// on a uniform grid of grid_points including both endpoints.
void write_snapshots_csv(const Trajectory& traj, const Eigenbasis& basis,
                         const std::string& path, int grid_points = 201);

// t,l2,vnorm_sq,l4_4,potential,energy,dissipation_cum
void write_timeseries_csv(const Trajectory& traj, const std::string& path);

// check,lhs,rhs,margin,pass
void write_audit_csv(const std::vector<AuditCheck>& checks, const std::string& path);

// 800x500 viewport, one polyline per stored snapshot, time legend,
// 6-significant-digit tick labels.
void write_svg(const Trajectory& traj, const Eigenbasis& basis,
               const std::string& path, int grid_points = 201);

std::string format_sig(double x, int digits);

}  // namespace efk
