#include "qdot/io.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "qdot/detail/parallel.hpp"
#include "qdot/fields.hpp"

namespace qdot {

std::string format_value(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

namespace {

constexpr double kDensityFloor = 1e-280;

struct QuantityDef {
    bool needs_rho;   // divided by rho: unavailable once rho underflows
    std::function<double(double, const TripletParams&, const QuadSpec&)> eval;
    double error_scale;   // 0 for closed forms, 1 for quadrature-backed values
};

const std::map<std::string, QuantityDef>& registry() {
    static const std::map<std::string, QuantityDef> reg = {
        {"rho", {false, [](double r, const TripletParams& p, const QuadSpec&) { return density(r, p); }, 0}},
        {"r_rho", {false, [](double r, const TripletParams& p, const QuadSpec&) { return r * density(r, p); }, 0}},
        {"j", {false, [](double r, const TripletParams& p, const QuadSpec&) { return current_components(r, p).j_total; }, 0}},
        {"jp", {false, [](double r, const TripletParams& p, const QuadSpec&) { return current_components(r, p).j_p; }, 0}},
        {"jd", {false, [](double r, const TripletParams& p, const QuadSpec&) { return current_components(r, p).j_d; }, 0}},
        {"jm", {false, [](double r, const TripletParams& p, const QuadSpec&) { return current_components(r, p).j_m; }, 0}},
        {"e_ee", {true, [](double r, const TripletParams& p, const QuadSpec&) { return field_ee(r, p); }, 0}},
        {"e_H", {true, [](double r, const TripletParams& p, const QuadSpec& s) { return field_hartree(r, p, s); }, 1}},
        {"e_xc", {true, [](double r, const TripletParams& p, const QuadSpec& s) { return field_xc(r, p, s); }, 1}},
        {"Z", {true, [](double r, const TripletParams& p, const QuadSpec&) { return kinetic_field(r, p); }, 0}},
        {"D", {true, [](double r, const TripletParams& p, const QuadSpec&) { return differential_density_field(r, p); }, 0}},
        {"L", {true, [](double r, const TripletParams& p, const QuadSpec&) { return lorentz_field(r, p); }, 0}},
        {"Im", {true, [](double r, const TripletParams& p, const QuadSpec&) { return internal_magnetic_field(r, p); }, 0}},
        {"M", {false, [](double r, const TripletParams& p, const QuadSpec&) { return m_field(r, p); }, 0}},
        {"z_force", {false, [](double r, const TripletParams& p, const QuadSpec&) { return kinetic_force(r, p); }, 0}},
        {"d_force", {false, [](double r, const TripletParams& p, const QuadSpec&) { return differential_density_force(r, p); }, 0}},
        {"ell_force", {false, [](double r, const TripletParams& p, const QuadSpec&) {
             return 2.0 * p.omega_l * current_components(r, p).j_total; }, 0}},
        {"im_force", {false, [](double r, const TripletParams& p, const QuadSpec&) {
             return -2.0 * p.omega_l * current_components(r, p).j_total +
                    p.omega_l * p.omega_l * r * density(r, p); }, 0}},
        {"DplusZ", {true, [](double r, const TripletParams& p, const QuadSpec&) {
             return differential_density_field(r, p) + kinetic_field(r, p); }, 0}},
        {"law_rhs", {true, [](double r, const TripletParams& p, const QuadSpec&) {
             return -field_ee(r, p) + kinetic_field(r, p) + differential_density_field(r, p); }, 0}},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& profile_quantities() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, def] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

bool is_profile_quantity(const std::string& name) { return registry().count(name) > 0; }

RadialProfile make_profile(const std::string& quantity, const TripletParams& params,
                           const QuadSpec& spec, double r_max, int samples) {
    const auto it = registry().find(quantity);
    if (it == registry().end()) throw std::invalid_argument("unknown profile quantity: " + quantity);
    if (samples < 2) throw std::invalid_argument("make_profile: samples must be >= 2");
    if (!(r_max > 0.0)) throw std::invalid_argument("make_profile: r_max must be > 0");
    const QuantityDef& def = it->second;

    RadialProfile profile;
    profile.quantity = quantity;
    profile.omega_l = params.omega_l;
    profile.samples.resize(samples);
    detail::parallel_for(samples, [&](int i) {
        const double r = r_max * (i + 1) / samples;
        RadialSample s{r, 0.0, 0.0};
        if (def.needs_rho && density(r, params) < kDensityFloor) {
            s.value = std::nan("");
        } else {
            s.value = def.eval(r, params, spec);
            s.est_error = def.error_scale * (spec.abs_tol + spec.rel_tol * std::abs(s.value));
        }
        profile.samples[i] = s;
    });
    return profile;
}

void write_profile_csv(std::ostream& os, const RadialProfile& profile) {
    os << "r,value,est_error\n";
    for (const auto& s : profile.samples) {
        os << format_value(s.r) << ',' << format_value(s.value) << ','
           << format_value(s.est_error) << '\n';
    }
}

void write_pair_grid_csv(std::ostream& os, const PairGrid& grid) {
    os << "x_prime,y_prime,value\n";
    for (size_t ix = 0; ix < grid.xs.size(); ++ix) {
        for (size_t iy = 0; iy < grid.ys.size(); ++iy) {
            os << format_value(grid.xs[ix]) << ',' << format_value(grid.ys[iy]) << ','
               << format_value(grid.values[ix * grid.ys.size() + iy]) << '\n';
        }
    }
}

void write_density_matrix_csv(std::ostream& os, const DensityMatrixGrid& grid) {
    os << "r,r_prime,re,im\n";
    for (size_t i = 0; i < grid.r.size(); ++i) {
        for (size_t j = 0; j < grid.r_prime.size(); ++j) {
            const auto v = grid.values[i * grid.r_prime.size() + j];
            os << format_value(grid.r[i]) << ',' << format_value(grid.r_prime[j]) << ','
               << format_value(v.real()) << ',' << format_value(v.imag()) << '\n';
        }
    }
}

namespace {

nlohmann::ordered_json report_to_json(const EnergyReport& r) {
    return nlohmann::ordered_json{
        {"T", r.T},
        {"E_H", r.E_H},
        {"E_xc", r.E_xc},
        {"E_ee", r.E_ee},
        {"E_es_plus_mag", r.E_es_plus_mag},
        {"E_total", r.E_total},
        {"IP", r.IP},
        {"expect_r2", r.expect_r2},
        {"expect_r", r.expect_r},
        {"expect_inv_r", r.expect_inv_r},
        {"expect_delta", r.expect_delta},
    };
}

const char* const kReportRows[] = {"T", "E_H", "E_xc", "E_ee", "E_es_plus_mag", "E_total",
                                   "IP", "expect_r2", "expect_r", "expect_inv_r", "expect_delta"};

double report_field(const EnergyReport& r, const std::string& name) {
    if (name == "T") return r.T;
    if (name == "E_H") return r.E_H;
    if (name == "E_xc") return r.E_xc;
    if (name == "E_ee") return r.E_ee;
    if (name == "E_es_plus_mag") return r.E_es_plus_mag;
    if (name == "E_total") return r.E_total;
    if (name == "IP") return r.IP;
    if (name == "expect_r2") return r.expect_r2;
    if (name == "expect_r") return r.expect_r;
    if (name == "expect_inv_r") return r.expect_inv_r;
    return r.expect_delta;
}

}  // namespace

std::string energy_report_json(const EnergyReport& closed, const EnergyReport& quadrature) {
    nlohmann::ordered_json j = report_to_json(closed);
    j["quadrature"] = report_to_json(quadrature);
    nlohmann::ordered_json deltas;
    for (const char* row : kReportRows) {
        deltas[row] = std::abs(report_field(closed, row) - report_field(quadrature, row));
    }
    j["abs_delta"] = deltas;
    return j.dump(2) + "\n";
}

void write_energy_report_csv(std::ostream& os, const EnergyReport& closed,
                             const EnergyReport& quadrature) {
    os << "property,closed_form,quadrature,abs_delta\n";
    for (const char* row : kReportRows) {
        const double a = report_field(closed, row);
        const double b = report_field(quadrature, row);
        os << row << ',' << format_value(a) << ',' << format_value(b) << ','
           << format_value(std::abs(a - b)) << '\n';
    }
}

std::string law_report_json(const LawReport& report) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (size_t i = 0; i < report.table.size(); ++i) {
        const auto& t = report.table[i];
        rows.push_back({{"r", t.r},
                        {"lhs", t.lhs},
                        {"rhs", t.rhs},
                        {"residual", t.residual},
                        {"D_plus_Z", report.d_plus_z[i]}});
    }
    nlohmann::ordered_json j{{"max_residual", report.max_abs_residual}, {"table", rows}};
    return j.dump(2) + "\n";
}

void write_law_report_csv(std::ostream& os, const LawReport& report) {
    os << "r,lhs,rhs,residual,D_plus_Z\n";
    for (size_t i = 0; i < report.table.size(); ++i) {
        const auto& t = report.table[i];
        os << format_value(t.r) << ',' << format_value(t.lhs) << ',' << format_value(t.rhs) << ','
           << format_value(t.residual) << ',' << format_value(report.d_plus_z[i]) << '\n';
    }
}

std::string self_consistency_json(const SelfConsistencyReport& report) {
    nlohmann::ordered_json j{{"max_residual", report.max_residual},
                             {"k_fit", report.k_fit},
                             {"omega0_sq_recovered", report.omega0_sq_recovered},
                             {"max_abs_deviation", report.max_abs_deviation},
                             {"pass", report.pass}};
    return j.dump(2) + "\n";
}

}  // namespace qdot
