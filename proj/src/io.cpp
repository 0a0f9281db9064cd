// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links

#include "nearfield/io.hpp"

#include <cstdio>
#include <ostream>

namespace nearfield {

std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

const char *branch_name(BranchSel branch) {
    switch (branch) {
    case BranchSel::single:
        return "single";
    case BranchSel::a:
        return "a";
    case BranchSel::b:
        return "b";
    }
    return "?";
}

namespace {

bool angle_axis(const std::string &name) { return name != "d1" && name != "d2"; }

// Display value and unit suffix for an axis sample (angles in degrees, lengths in meters).
double display_value(const std::string &name, double v) {
    return angle_axis(name) ? v * 180.0 / pi : v;
}

const char *unit_suffix(const std::string &name) { return angle_axis(name) ? "_deg" : "_m"; }

} // namespace

void write_region_csv(std::ostream &os, const RegionMap &map) {
    os << csv_schema_line << "\n";
    os << "# axes: " << map.axis1.name << ", " << map.axis2.name << "\n";
    if (map.theta_threshold)
        os << "# theta_threshold_deg: " << format_g9(*map.theta_threshold * 180.0 / pi) << "\n";
    os << "axis1" << unit_suffix(map.axis1.name) << ",axis2" << unit_suffix(map.axis2.name)
       << ",label,value_m\n";
    for (std::size_t i = 0; i < map.axis1.values.size(); i++)
        for (std::size_t j = 0; j < map.axis2.values.size(); j++)
            os << format_g9(display_value(map.axis1.name, map.axis1.values[i])) << ","
               << format_g9(display_value(map.axis2.name, map.axis2.values[j])) << ","
               << static_cast<int>(map.label_at(i, j)) << "," << format_g9(map.value_at(i, j))
               << "\n";
}

void write_cdf_csv(std::ostream &os, const EmpiricalDistribution &dist) {
    os << csv_schema_line << "\n";
    os << "value_m,cdf\n";
    const auto n = static_cast<double>(dist.size());
    const auto &samples = dist.samples();
    for (std::size_t i = 0; i < samples.size(); i++)
        os << format_g9(samples[i]) << "," << format_g9(static_cast<double>(i + 1) / n) << "\n";
}

void write_pdf_csv(std::ostream &os, const Histogram &hist) {
    os << csv_schema_line << "\n";
    os << "bin_center_m,density\n";
    for (std::size_t k = 0; k < hist.density.size(); k++)
        os << format_g9(0.5 * (hist.edges[k] + hist.edges[k + 1])) << ","
           << format_g9(hist.density[k]) << "\n";
}

void write_sweep_csv(std::ostream &os, const std::string &axis_name, const std::vector<SweepRow> &rows) {
    os << csv_schema_line << "\n";
    os << axis_name << unit_suffix(axis_name) << ",distance_m,branch,branch_a_m,branch_b_m\n";
    for (const SweepRow &row : rows) {
        os << format_g9(row.axis_value) << "," << format_g9(row.result.distance) << ","
           << branch_name(row.result.branch) << ",";
        if (row.result.branches)
            os << format_g9(row.result.branches->first) << "," << format_g9(row.result.branches->second);
        else
            os << ",";
        os << "\n";
    }
}

void write_validation_csv(std::ostream &os, const std::string &axis_name,
                          const std::vector<ValidationRow> &rows) {
    os << csv_schema_line << "\n";
    os << axis_name << unit_suffix(axis_name)
       << ",closed_m,oracle_m,rel_error,within_tol,clipped,evaluations\n";
    for (const ValidationRow &row : rows)
        os << format_g9(row.axis_value) << "," << format_g9(row.record.closed_form) << ","
           << format_g9(row.record.oracle) << "," << format_g9(row.record.rel_error) << ","
           << (row.record.within_tol ? 1 : 0) << "," << (row.record.detail.clipped ? 1 : 0) << ","
           << row.record.detail.evaluations << "\n";
}

} // namespace nearfield
