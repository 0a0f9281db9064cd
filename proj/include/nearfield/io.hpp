// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links
//
// CSV and JSON emission. Every CSV starts with the schema comment line and uses 9 significant
// digits; angle columns are emitted in degrees (suffix _deg), lengths in meters (suffix _m).

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nearfield/oracle.hpp"
#include "nearfield/regions.hpp"
#include "nearfield/stats.hpp"

namespace nearfield {

inline constexpr const char *csv_schema_line = "# nearfield-bounds schema v1";

std::string format_g9(double v); // 9 significant digits
const char *branch_name(BranchSel branch);

// regions: axis1_deg,axis2_deg,label,value_m (axis and unit suffixes follow the axis names;
// aperture axes use _m). label is 0 = branch a, 1 = branch b, 2 = tie.
void write_region_csv(std::ostream &os, const RegionMap &map);

// stats: value_m,cdf over the sorted samples, and bin_center_m,density for the histogram.
void write_cdf_csv(std::ostream &os, const EmpiricalDistribution &dist);
void write_pdf_csv(std::ostream &os, const Histogram &hist);

struct SweepRow {
    double axis_value = 0.0; // display units (degrees for angles, meters for apertures)
    BoundaryResult result;
};

void write_sweep_csv(std::ostream &os, const std::string &axis_name, const std::vector<SweepRow> &rows);

struct ValidationRow {
    double axis_value = 0.0; // degrees
    ValidationRecord record;
};

void write_validation_csv(std::ostream &os, const std::string &axis_name,
                          const std::vector<ValidationRow> &rows);

} // namespace nearfield
