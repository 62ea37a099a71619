#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qdot/consistency.hpp"
#include "qdot/energies.hpp"
#include "qdot/params.hpp"
#include "qdot/sources.hpp"

// Profile generation and the CSV/JSON serialization used by the CLI.
// Formatting is fixed (9 significant digits, '.' decimal separator, '\n'
// line endings) so repeated runs are byte-identical.

namespace qdot {

std::string format_value(double v);

/// Radial quantities the profile command can emit.
const std::vector<std::string>& profile_quantities();
bool is_profile_quantity(const std::string& name);

/// Uniform grid over (0, r_max]. Fields (anything divided by rho) are
/// reported as nan once rho underflows below 1e-280.
RadialProfile make_profile(const std::string& quantity, const TripletParams& params,
                           const QuadSpec& spec, double r_max, int samples);

void write_profile_csv(std::ostream& os, const RadialProfile& profile);
void write_pair_grid_csv(std::ostream& os, const PairGrid& grid);
void write_density_matrix_csv(std::ostream& os, const DensityMatrixGrid& grid);

std::string energy_report_json(const EnergyReport& closed, const EnergyReport& quadrature);
void write_energy_report_csv(std::ostream& os, const EnergyReport& closed,
                             const EnergyReport& quadrature);

std::string law_report_json(const LawReport& report);
void write_law_report_csv(std::ostream& os, const LawReport& report);

std::string self_consistency_json(const SelfConsistencyReport& report);

}  // namespace qdot
