// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links

#include "nearfield/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "nearfield/io.hpp"

namespace nearfield {

namespace {

using nlohmann::ordered_json;

double deg2rad(double deg) { return deg * pi / 180.0; }
double rad2deg(double rad) { return rad * 180.0 / pi; }

const std::map<std::string, Family> family_names = {
    {"l2l-on", Family::l2l_on},   {"l2l-off", Family::l2l_off},
    {"l2o", Family::l2o},         {"p2p-on", Family::p2p_on},
    {"p2p-off-single", Family::p2p_off_single}, {"p2p-off-dual", Family::p2p_off_dual},
    {"p2l-on", Family::p2l_on},   {"p2o", Family::p2o}};

// ----------------------------------------------------------------------------------------------------
// Shared option groups
// ----------------------------------------------------------------------------------------------------

struct PhysicalOpts {
    std::optional<double> d1, d2;
    std::optional<double> wavelength; // [m]
    std::optional<double> freq_ghz;
    double varphi = pi / 8.0;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--d1", d1, "Tx aperture [m]");
        cmd->add_option("--d2", d2, "Rx aperture [m]");
        cmd->add_option("--wavelength", wavelength, "carrier wavelength [m]");
        cmd->add_option("--freq-ghz", freq_ghz, "carrier frequency [GHz] (default 300)");
        cmd->add_option("--varphi-rad", varphi, "phase-spread threshold [rad], in (0, pi]");
    }

    double resolve_wavelength() const {
        if (wavelength && freq_ghz)
            throw std::invalid_argument("give exactly one of --wavelength and --freq-ghz");
        if (wavelength)
            return *wavelength;
        return speed_of_light / (freq_ghz.value_or(300.0) * 1e9);
    }

    BoundaryParams resolve(Family family) const {
        const bool needs_d1 =
            family != Family::l2o && family != Family::p2o;
        if (needs_d1 && !d1)
            throw std::invalid_argument(std::string(family_name(family)) + " needs --d1");
        if (!d2)
            throw std::invalid_argument(std::string(family_name(family)) + " needs --d2");
        BoundaryParams p{d1.value_or(0.0), *d2, resolve_wavelength(), varphi};
        p.validate();
        return p;
    }
};

struct AngleOpts {
    std::optional<double> theta, theta_prime, phi, alpha, beta; // degrees

    void add_to(CLI::App *cmd) {
        cmd->add_option("--theta-deg", theta, "Tx rotation theta [deg]");
        cmd->add_option("--theta-prime-deg", theta_prime,
                        "Tx rotation relative to the link, theta - alpha [deg]");
        cmd->add_option("--phi-deg", phi, "Tx spin phi [deg]");
        cmd->add_option("--alpha-deg", alpha, "link elevation alpha [deg]");
        cmd->add_option("--beta-deg", beta, "link azimuth beta [deg]");
    }

    AngleSet resolve() const {
        if (theta && theta_prime)
            throw std::invalid_argument("give at most one of --theta-deg and --theta-prime-deg");
        AngleSet a;
        a.phi = deg2rad(phi.value_or(0.0));
        a.alpha = deg2rad(alpha.value_or(0.0));
        a.beta = deg2rad(beta.value_or(0.0));
        a.theta = theta ? deg2rad(*theta)
                        : (theta_prime ? deg2rad(*theta_prime) + a.alpha : 0.0);
        return a;
    }
};

struct OracleOpts {
    std::string mode = "hull";
    std::optional<double> spacing; // [m], default wavelength / 2
    SearchSettings search;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--mode", mode, "element enumeration: hull or full")
            ->check(CLI::IsMember({"hull", "full"}));
        cmd->add_option("--spacing", spacing, "element spacing [m] (default wavelength/2)");
        cmd->add_option("--r-min", search.r_min, "search floor [m] (0 = auto)");
        cmd->add_option("--r-max", search.r_max, "search ceiling [m] (0 = auto)");
        cmd->add_option("--coarse-steps", search.coarse_steps, "descending sweep samples");
        cmd->add_option("--bisect-tol", search.bisect_tol, "bisection bracket width [m]");
    }
};

// Family-appropriate array pair for oracle runs.
std::pair<ArraySpec, ArraySpec> make_arrays(Family family, const BoundaryParams &p, double spacing) {
    ArrayKind tx_kind = ArrayKind::linear, rx_kind = ArrayKind::linear;
    switch (family) {
    case Family::l2l_on:
    case Family::l2l_off:
        break;
    case Family::l2o:
        tx_kind = ArrayKind::point;
        break;
    case Family::p2p_on:
    case Family::p2p_off_single:
    case Family::p2p_off_dual:
        tx_kind = rx_kind = ArrayKind::planar;
        break;
    case Family::p2l_on:
        rx_kind = ArrayKind::planar;
        break;
    case Family::p2o:
        tx_kind = ArrayKind::point;
        rx_kind = ArrayKind::planar;
        break;
    }
    return {ArraySpec::with_aperture(tx_kind, p.d1, spacing),
            ArraySpec::with_aperture(rx_kind, p.d2, spacing)};
}

LinkConfig make_link(Family family, const BoundaryParams &p, const AngleSet &angles, double spacing) {
    LinkConfig link;
    link.family = family;
    std::tie(link.tx, link.rx) = make_arrays(family, p, spacing);
    link.orientation = {angles.theta, angles.phi};
    link.link.alpha = angles.alpha;
    link.link.beta = angles.beta;
    link.link.wavelength = p.wavelength;
    link.link.phase_threshold = p.phase_threshold;
    link.link.distance = std::max(link.min_separation(), p.wavelength);
    return link;
}

// ----------------------------------------------------------------------------------------------------
// Output plumbing
// ----------------------------------------------------------------------------------------------------

void emit(const std::optional<std::string> &path, std::ostream &fallback,
          const std::function<void(std::ostream &)> &writer) {
    if (path) {
        std::ofstream file(*path);
        if (!file)
            throw std::runtime_error("cannot open output file " + *path);
        writer(file);
    } else {
        writer(fallback);
    }
}

ordered_json result_json(const BoundaryResult &res) {
    ordered_json j;
    j["distance_m"] = res.distance;
    j["branch"] = branch_name(res.branch);
    if (res.branches) {
        j["branch_a_m"] = res.branches->first;
        j["branch_b_m"] = res.branches->second;
    }
    if (res.terms) {
        j["eta_plus"] = res.terms->eta_plus;
        j["eta_minus"] = res.terms->eta_minus;
        j["xi_plus"] = res.terms->xi_plus;
        j["xi_minus"] = res.terms->xi_minus;
    }
    return j;
}

ordered_json header_json(Family family, const BoundaryParams &p, const AngleSet &angles) {
    ordered_json j;
    j["schema"] = "nearfield-bounds v1";
    j["family"] = family_name(family);
    j["d1_m"] = p.d1;
    j["d2_m"] = p.d2;
    j["wavelength_m"] = p.wavelength;
    j["varphi_rad"] = p.phase_threshold;
    j["theta_deg"] = rad2deg(angles.theta);
    j["phi_deg"] = rad2deg(angles.phi);
    j["alpha_deg"] = rad2deg(angles.alpha);
    j["beta_deg"] = rad2deg(angles.beta);
    return j;
}

// ----------------------------------------------------------------------------------------------------
// JSON config injection: tokens derived from the file are inserted before the explicit flags, and
// every option takes the last occurrence, so explicit flags win on conflict.
// ----------------------------------------------------------------------------------------------------

std::vector<std::string> config_tokens(const std::string &path) {
    std::ifstream file(path);
    if (!file)
        throw std::runtime_error("cannot open config file " + path);
    ordered_json j = ordered_json::parse(file);
    if (!j.is_object())
        throw std::runtime_error("config file must hold a JSON object of flag values");
    std::vector<std::string> tokens;
    for (const auto &[key, value] : j.items()) {
        std::ostringstream token;
        token << "--" << key << "=";
        if (value.is_string())
            token << value.get<std::string>();
        else
            token << value.dump();
        tokens.push_back(token.str());
    }
    return tokens;
}

std::vector<std::string> inject_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); i++) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty())
        return args;
    const auto sub = std::find_if(args.begin(), args.end(),
                                  [](const std::string &a) { return !a.empty() && a[0] != '-'; });
    if (sub == args.end())
        return args;
    const std::vector<std::string> tokens = config_tokens(path);
    args.insert(sub + 1, tokens.begin(), tokens.end());
    return args;
}

// ----------------------------------------------------------------------------------------------------
// Subcommands
// ----------------------------------------------------------------------------------------------------

struct CommonState {
    Family family = Family::l2l_on;
    PhysicalOpts physical;
    AngleOpts angles;
    std::optional<std::string> out;
    std::string format = "text";
    std::string config_path; // accepted so --config parses; handled by inject_config
};

void add_family(CLI::App *cmd, Family &family, bool required = true) {
    auto *opt = cmd->add_option("--family", family, "link family")
                    ->transform(CLI::CheckedTransformer(family_names, CLI::ignore_case));
    if (required)
        opt->required();
}

void add_config(CLI::App *cmd, std::string &path) {
    cmd->add_option("--config", path, "JSON file of flag values (explicit flags win)");
}

int cmd_compute(const CommonState &st, std::ostream &out) {
    const BoundaryParams p = st.physical.resolve(st.family);
    const AngleSet angles = st.angles.resolve();
    const BoundaryResult res = evaluate_family(st.family, p, angles);
    if (st.format == "json") {
        ordered_json j = header_json(st.family, p, angles);
        j.update(result_json(res));
        emit(st.out, out, [&](std::ostream &os) { os << j.dump(2) << "\n"; });
        return 0;
    }
    if (st.format == "csv") {
        emit(st.out, out, [&](std::ostream &os) {
            os << csv_schema_line << "\n";
            os << "family,distance_m,branch,branch_a_m,branch_b_m\n";
            os << family_name(st.family) << "," << format_g9(res.distance) << ","
               << branch_name(res.branch) << ",";
            if (res.branches)
                os << format_g9(res.branches->first) << "," << format_g9(res.branches->second);
            else
                os << ",";
            os << "\n";
        });
        return 0;
    }
    emit(st.out, out, [&](std::ostream &os) {
        os << family_name(st.family) << ": rf = " << format_g9(res.distance) << " m";
        if (res.branches)
            os << " (branch " << branch_name(res.branch) << "; a = " << format_g9(res.branches->first)
               << " m, b = " << format_g9(res.branches->second) << " m)";
        os << "\n";
    });
    return 0;
}

struct SweepState : CommonState {
    std::string axis = "theta";
    double from = -90.0, to = 90.0;
    int steps = 181;
};

int cmd_sweep(const SweepState &st, std::ostream &out) {
    const BoundaryParams p = st.physical.resolve(st.family);
    const AngleSet fixed = st.angles.resolve();
    const bool is_angle = st.axis != "d1" && st.axis != "d2";
    std::vector<SweepRow> rows;
    const GridAxis axis = GridAxis::linspace(st.axis, is_angle ? deg2rad(st.from) : st.from,
                                             is_angle ? deg2rad(st.to) : st.to, st.steps);
    rows.reserve(axis.values.size());
    for (double v : axis.values) {
        SweepRow row;
        row.axis_value = is_angle ? rad2deg(v) : v;
        row.result = evaluate_with_axes(st.family, p, fixed, {{st.axis, v}});
        rows.push_back(row);
    }
    if (st.format == "json") {
        ordered_json j = header_json(st.family, p, fixed);
        j["axis"] = st.axis;
        ordered_json arr = ordered_json::array();
        for (const SweepRow &row : rows) {
            ordered_json rj = result_json(row.result);
            rj["axis_value"] = row.axis_value;
            arr.push_back(rj);
        }
        j["rows"] = arr;
        emit(st.out, out, [&](std::ostream &os) { os << j.dump(2) << "\n"; });
        return 0;
    }
    emit(st.out, out, [&](std::ostream &os) { write_sweep_csv(os, st.axis, rows); });
    return 0;
}

struct ValidateState : CommonState {
    OracleOpts oracle;
    std::string axis = "alpha";
    double from = -90.0, to = 90.0;
    int steps = 37;
    double rel_tol = 0.02;
    std::string suite;
};

int cmd_validate(ValidateState st, std::ostream &out, std::ostream &err) {
    if (!st.suite.empty()) {
        if (st.suite != "halfcircle")
            throw std::invalid_argument("unknown suite '" + st.suite + "'");
        // Off-boresight preset: alpha across the half circle at theta' = 0, phi = 60 deg.
        st.axis = "alpha";
        st.from = -90.0;
        st.to = 90.0;
        st.steps = 37;
        if (!st.physical.d1)
            st.physical.d1 = 0.1;
        if (!st.physical.d2)
            st.physical.d2 = 0.05;
        if (!st.angles.theta && !st.angles.theta_prime)
            st.angles.theta_prime = 0.0;
        if (!st.angles.phi)
            st.angles.phi = 60.0;
    }
    const BoundaryParams p = st.physical.resolve(st.family);
    const double spacing = st.oracle.spacing.value_or(0.5 * p.wavelength);
    const bool is_angle = st.axis != "d1" && st.axis != "d2";
    const GridAxis axis = GridAxis::linspace(st.axis, is_angle ? deg2rad(st.from) : st.from,
                                             is_angle ? deg2rad(st.to) : st.to, st.steps);

    // theta' stays fixed across an alpha sweep: rebuild the angle set per point.
    std::vector<ValidationRow> rows;
    bool all_within = true;
    for (double v : axis.values) {
        AngleOpts point_angles = st.angles;
        if (st.axis == "alpha")
            point_angles.alpha = rad2deg(v);
        else if (st.axis == "theta")
            point_angles.theta = rad2deg(v);
        else if (st.axis == "theta_prime")
            point_angles.theta_prime = rad2deg(v);
        else if (st.axis == "phi")
            point_angles.phi = rad2deg(v);
        else if (st.axis == "beta")
            point_angles.beta = rad2deg(v);
        else
            throw std::invalid_argument("validate sweeps angle axes only");
        const AngleSet resolved = point_angles.resolve();
        OracleConfig config{make_link(st.family, p, resolved, spacing),
                            st.oracle.mode == "hull" ? EnumerationMode::hull : EnumerationMode::full,
                            st.oracle.search};
        ValidationRow row;
        row.axis_value = rad2deg(v);
        row.record = validate(config, st.family, st.rel_tol);
        all_within = all_within && row.record.within_tol;
        rows.push_back(row);
    }
    emit(st.out, out, [&](std::ostream &os) { write_validation_csv(os, st.axis, rows); });
    const double worst =
        std::max_element(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
            return a.record.rel_error < b.record.rel_error;
        })->record.rel_error;
    err << "validate: " << rows.size() << " points, max rel error " << format_g9(worst) << ", "
        << (all_within ? "all within " : "tolerance exceeded at ") << format_g9(st.rel_tol) << "\n";
    return all_within ? 0 : 2;
}

struct DominanceState {
    std::string map = "l2l";
    PhysicalOpts physical;
    int steps = 181;
    double alpha_deg = 0.0;
    double tie_tol = 1e-12;
    std::optional<std::string> out;
    std::string config_path;
};

int cmd_dominance(const DominanceState &st, std::ostream &out) {
    const Family family = st.map == "l2l" ? Family::l2l_off : Family::p2p_off_dual;
    const BoundaryParams p = st.physical.resolve(family);
    const GridAxis a1 = GridAxis::linspace("theta_prime", -pi / 2.0, pi / 2.0, st.steps);
    const GridAxis a2 = GridAxis::linspace(st.map == "l2l" ? "alpha" : "phi", -pi / 2.0, pi / 2.0,
                                           st.steps);
    const RegionMap map = st.map == "l2l"
                              ? dominance_map_l2l(p, a1, a2, st.tie_tol)
                              : dominance_map_p2p(p, a1, a2, deg2rad(st.alpha_deg), st.tie_tol);
    emit(st.out, out, [&](std::ostream &os) { write_region_csv(os, map); });
    return 0;
}

struct LandscapeState : CommonState {
    std::string axis1 = "theta_prime", axis2 = "alpha";
    double from1 = -90.0, to1 = 90.0, from2 = -90.0, to2 = 90.0;
    int steps1 = 181, steps2 = 181;
    double tie_tol = 1e-12;
};

int cmd_landscape(const LandscapeState &st, std::ostream &out) {
    const BoundaryParams p = st.physical.resolve(st.family);
    const AngleSet fixed = st.angles.resolve();
    const auto make_axis = [](const std::string &name, double from, double to, int steps) {
        const bool is_angle = name != "d1" && name != "d2";
        return GridAxis::linspace(name, is_angle ? deg2rad(from) : from,
                                  is_angle ? deg2rad(to) : to, steps);
    };
    const RegionMap map = boundary_landscape(st.family, p, make_axis(st.axis1, st.from1, st.to1, st.steps1),
                                             make_axis(st.axis2, st.from2, st.to2, st.steps2), fixed,
                                             st.tie_tol);
    emit(st.out, out, [&](std::ostream &os) { write_region_csv(os, map); });
    return 0;
}

struct StatsState {
    Family family = Family::l2l_on;
    PhysicalOpts physical;
    std::map<std::string, std::string> angle_specs; // key -> "deg" or "tvm:mu,kappa[,lo,hi]"
    std::size_t n = 100000;
    std::uint64_t seed = 0;
    int bins = 0;
    std::optional<std::string> out_cdf, out_pdf;
    std::string config_path;
};

AngleInput parse_angle_spec(const std::string &key, const std::string &spec) {
    if (spec.rfind("tvm:", 0) == 0) {
        std::vector<double> parts;
        std::stringstream ss(spec.substr(4));
        std::string item;
        while (std::getline(ss, item, ','))
            parts.push_back(std::stod(item));
        if (parts.size() != 2 && parts.size() != 4)
            throw std::invalid_argument("angle '" + key +
                                        "': expected tvm:mu_deg,kappa[,lo_deg,hi_deg]");
        AngularDistribution dist;
        dist.mean = deg2rad(parts[0]);
        dist.concentration = parts[1];
        if (parts.size() == 4) {
            dist.lo = deg2rad(parts[2]);
            dist.hi = deg2rad(parts[3]);
        }
        return AngleInput::von_mises(dist);
    }
    return AngleInput::fixed_value(deg2rad(std::stod(spec)));
}

int cmd_stats(const StatsState &st, std::ostream &out) {
    MonteCarloSpec spec;
    spec.family = st.family;
    spec.params = st.physical.resolve(st.family);
    for (const auto &[key, text] : st.angle_specs)
        if (!text.empty())
            spec.angles.emplace(key, parse_angle_spec(key, text));
    spec.samples = st.n;
    spec.seed = st.seed;
    const EmpiricalDistribution dist = monte_carlo_rf(spec);
    if (st.out_cdf)
        emit(st.out_cdf, out, [&](std::ostream &os) { write_cdf_csv(os, dist); });
    if (st.out_pdf) {
        const Histogram hist = dist.histogram(st.bins);
        emit(st.out_pdf, out, [&](std::ostream &os) { write_pdf_csv(os, hist); });
    }
    out << "stats: " << family_name(st.family) << " n=" << dist.size() << " seed=" << st.seed
        << " mean=" << format_g9(dist.mean()) << " m min=" << format_g9(dist.min())
        << " m median=" << format_g9(dist.quantile(0.5)) << " m max=" << format_g9(dist.max())
        << " m\n";
    return 0;
}

int cmd_table(const CommonState &st, std::ostream &out) {
    const BoundaryParams p = st.physical.resolve(Family::l2l_off); // needs both apertures
    const AngleSet a = st.angles.resolve();

    struct Row {
        std::string name;
        std::string angles;
        std::function<BoundaryResult()> eval;
    };
    const auto single = [](double v) { return BoundaryResult{v, BranchSel::single, {}, {}}; };
    const std::string th = "theta=" + format_g9(rad2deg(a.theta));
    const std::string ph = ",phi=" + format_g9(rad2deg(a.phi));
    const std::string al = ",alpha=" + format_g9(rad2deg(a.alpha));
    const std::string be = ",beta=" + format_g9(rad2deg(a.beta));
    const std::vector<Row> rows = {
        {"l2l-on", th, [&] { return single(boundary::l2l_on(p, a.theta)); }},
        {"l2l-off-exact", th + al, [&] { return boundary::l2l_off_exact(p, a.theta, a.alpha); }},
        {"l2l-off-approx", th + al, [&] { return single(boundary::l2l_off_approx(p, a.theta, a.alpha)); }},
        {"l2o", "alpha=" + format_g9(rad2deg(a.alpha)), [&] { return single(boundary::l2o_off(p, a.alpha)); }},
        {"l2o-approx", "alpha=" + format_g9(rad2deg(a.alpha)),
         [&] { return single(boundary::l2o_off(p, a.alpha, true)); }},
        {"p2p-on", th + ph, [&] { return single(boundary::p2p_on(p, a.theta, a.phi)); }},
        {"p2p-off-single", th + al, [&] { return single(boundary::p2p_off_single(p, a.theta, a.alpha)); }},
        {"p2p-off-dual", th + ph + al, [&] { return boundary::p2p_off_dual(p, a.theta, a.phi, a.alpha); }},
        {"p2l-on", th, [&] { return single(boundary::p2l_on(p, a.theta)); }},
        {"p2o", "alpha=" + format_g9(rad2deg(a.alpha)) + be,
         [&] { return single(boundary::p2o_off(p, a.alpha, a.beta)); }},
        {"diag-matched-gap", th + al, [&] { return single(boundary::diag_matched_gap(p, a.theta, a.alpha)); }},
    };

    if (st.format == "json") {
        ordered_json j = header_json(Family::l2l_off, p, a);
        j.erase("family");
        ordered_json arr = ordered_json::array();
        for (const Row &row : rows) {
            ordered_json rj;
            rj["form"] = row.name;
            rj["angles_deg"] = row.angles;
            try {
                rj.update(result_json(row.eval()));
            } catch (const std::domain_error &e) {
                rj["error"] = e.what();
            }
            arr.push_back(rj);
        }
        j["forms"] = arr;
        emit(st.out, out, [&](std::ostream &os) { os << j.dump(2) << "\n"; });
        return 0;
    }
    emit(st.out, out, [&](std::ostream &os) {
        os << csv_schema_line << "\n";
        os << "form,angles_deg,distance_m,branch,branch_a_m,branch_b_m\n";
        for (const Row &row : rows) {
            os << row.name << ",\"" << row.angles << "\",";
            try {
                const BoundaryResult res = row.eval();
                os << format_g9(res.distance) << "," << branch_name(res.branch) << ",";
                if (res.branches)
                    os << format_g9(res.branches->first) << "," << format_g9(res.branches->second);
                else
                    os << ",";
            } catch (const std::domain_error &) {
                os << "nan,-,,";
            }
            os << "\n";
        }
    });
    return 0;
}

} // namespace

// ----------------------------------------------------------------------------------------------------
// Entry point
// ----------------------------------------------------------------------------------------------------

int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    try {
        args = inject_config(std::move(args));

        CLI::App app{"near-field boundary distances for antenna-array links"};
        app.require_subcommand(1);
        app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

        CommonState compute_st;
        auto *compute = app.add_subcommand("compute", "evaluate one closed form");
        add_family(compute, compute_st.family);
        compute_st.physical.add_to(compute);
        compute_st.angles.add_to(compute);
        compute->add_option("--format", compute_st.format, "text, csv, or json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        compute->add_option("--out", compute_st.out, "output file (default stdout)");
        add_config(compute, compute_st.config_path);

        SweepState sweep_st;
        sweep_st.format = "csv";
        auto *sweep = app.add_subcommand("sweep", "evaluate a closed form along one axis");
        add_family(sweep, sweep_st.family);
        sweep_st.physical.add_to(sweep);
        sweep_st.angles.add_to(sweep);
        sweep->add_option("--axis", sweep_st.axis, "theta|theta_prime|phi|alpha|beta|d1|d2");
        sweep->add_option("--from", sweep_st.from, "axis start (deg or m)");
        sweep->add_option("--to", sweep_st.to, "axis end (deg or m)");
        sweep->add_option("--steps", sweep_st.steps, "sample count");
        sweep->add_option("--format", sweep_st.format)->check(CLI::IsMember({"csv", "json"}));
        sweep->add_option("--out", sweep_st.out, "output file (default stdout)");
        add_config(sweep, sweep_st.config_path);

        ValidateState validate_st;
        validate_st.family = Family::p2p_off_dual;
        auto *validate_cmd = app.add_subcommand("validate", "closed form vs brute-force oracle");
        add_family(validate_cmd, validate_st.family, false);
        validate_st.physical.add_to(validate_cmd);
        validate_st.angles.add_to(validate_cmd);
        validate_st.oracle.add_to(validate_cmd);
        validate_cmd->add_option("--axis", validate_st.axis, "swept angle axis");
        validate_cmd->add_option("--from", validate_st.from, "axis start [deg]");
        validate_cmd->add_option("--to", validate_st.to, "axis end [deg]");
        validate_cmd->add_option("--steps", validate_st.steps, "sample count");
        validate_cmd->add_option("--rel-tol", validate_st.rel_tol, "acceptance threshold");
        validate_cmd->add_option("--suite", validate_st.suite, "preset sweep (halfcircle)");
        validate_cmd->add_option("--out", validate_st.out, "output file (default stdout)");
        add_config(validate_cmd, validate_st.config_path);

        DominanceState dominance_st;
        auto *dominance = app.add_subcommand("dominance", "branch-dominance map");
        dominance->add_option("--map", dominance_st.map, "l2l or p2p")
            ->check(CLI::IsMember({"l2l", "p2p"}));
        dominance_st.physical.add_to(dominance);
        dominance->add_option("--steps", dominance_st.steps, "grid samples per axis");
        dominance->add_option("--alpha-deg", dominance_st.alpha_deg, "fixed alpha for the p2p map");
        dominance->add_option("--tie-tol", dominance_st.tie_tol, "relative tie tolerance");
        dominance->add_option("--out", dominance_st.out, "output file (default stdout)");
        add_config(dominance, dominance_st.config_path);

        LandscapeState landscape_st;
        auto *landscape = app.add_subcommand("landscape", "boundary distance over two axes");
        add_family(landscape, landscape_st.family);
        landscape_st.physical.add_to(landscape);
        landscape_st.angles.add_to(landscape);
        landscape->add_option("--axis1", landscape_st.axis1);
        landscape->add_option("--from1", landscape_st.from1);
        landscape->add_option("--to1", landscape_st.to1);
        landscape->add_option("--steps1", landscape_st.steps1);
        landscape->add_option("--axis2", landscape_st.axis2);
        landscape->add_option("--from2", landscape_st.from2);
        landscape->add_option("--to2", landscape_st.to2);
        landscape->add_option("--steps2", landscape_st.steps2);
        landscape->add_option("--tie-tol", landscape_st.tie_tol, "relative tie tolerance");
        landscape->add_option("--out", landscape_st.out, "output file (default stdout)");
        add_config(landscape, landscape_st.config_path);

        StatsState stats_st;
        auto *stats = app.add_subcommand("stats", "Monte-Carlo boundary distribution");
        add_family(stats, stats_st.family);
        stats_st.physical.add_to(stats);
        for (const char *key : {"theta", "theta-prime", "phi", "alpha", "beta"}) {
            std::string map_key(key);
            std::replace(map_key.begin(), map_key.end(), '-', '_');
            stats->add_option("--" + std::string(key), stats_st.angle_specs[map_key],
                              "fixed degrees or tvm:mu_deg,kappa[,lo_deg,hi_deg]");
        }
        stats->add_option("--n", stats_st.n, "sample count");
        stats->add_option("--seed", stats_st.seed, "RNG seed");
        stats->add_option("--bins", stats_st.bins, "histogram bins (0 = auto)");
        stats->add_option("--out-cdf", stats_st.out_cdf, "CDF CSV path");
        stats->add_option("--out-pdf", stats_st.out_pdf, "PDF CSV path");
        add_config(stats, stats_st.config_path);

        CommonState table_st;
        table_st.format = "csv";
        auto *table = app.add_subcommand("table", "every closed form at one parameter point");
        table_st.physical.add_to(table);
        table_st.angles.add_to(table);
        table->add_option("--format", table_st.format)->check(CLI::IsMember({"csv", "json"}));
        table->add_option("--out", table_st.out, "output file (default stdout)");
        add_config(table, table_st.config_path);

        try {
            std::vector<std::string> rev(args.rbegin(), args.rend());
            app.parse(rev);
        } catch (const CLI::ParseError &e) {
            return app.exit(e, out, err);
        }

        if (compute->parsed())
            return cmd_compute(compute_st, out);
        if (sweep->parsed())
            return cmd_sweep(sweep_st, out);
        if (validate_cmd->parsed())
            return cmd_validate(validate_st, out, err);
        if (dominance->parsed())
            return cmd_dominance(dominance_st, out);
        if (landscape->parsed())
            return cmd_landscape(landscape_st, out);
        if (stats->parsed())
            return cmd_stats(stats_st, out);
        if (table->parsed())
            return cmd_table(table_st, out);
        return 1;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace nearfield
