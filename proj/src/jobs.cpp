#include "opbound/jobs.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "opbound/interpolation.hpp"
#include "opbound/matrix_io.hpp"
#include "opbound/polar.hpp"
#include "opbound/sectorial.hpp"
#include "opbound/spectral.hpp"

namespace opbound {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        fail(errc::parse_error, std::string(what) + ": bad number '" + text + "'");
    }
}

std::uint64_t instance_seed(std::uint64_t base, int instance) {
    // keep the printed seed directly reusable via --seed
    return base + static_cast<std::uint64_t>(instance);
}

} // namespace

std::vector<GenSpec> parse_gen_specs(const std::string& text) {
    std::vector<GenSpec> specs;
    for (const std::string& part : split(text, ',')) {
        if (part.empty())
            fail(errc::parse_error, "empty generator spec");
        const auto fields = split(part, ':');
        if (fields.size() < 2 || fields.size() > 3)
            fail(errc::parse_error, "generator spec must be class:dim[:omega], got '" + part + "'");
        GenSpec spec;
        spec.cls = matrix_class_from_name(fields[0]);
        spec.dim = static_cast<int>(parse_double(fields[1], "generator dim"));
        if (spec.dim < 1 || spec.dim > 512)
            fail(errc::parse_error, "generator dim must lie in [1, 512]");
        if (fields.size() == 3)
            spec.omega = parse_double(fields[2], "generator omega");
        specs.push_back(spec);
    }
    return specs;
}

namespace {

void parse_axis(const std::string& spec, double& lo, double& hi, int& count, const char* what) {
    if (spec.empty())
        return;
    const auto fields = split(spec, ':');
    if (fields.size() == 1) {
        lo = hi = parse_double(fields[0], what);
        count = 1;
        return;
    }
    if (fields.size() != 3)
        fail(errc::parse_error, std::string(what) + ": expected lo:hi:count");
    lo = parse_double(fields[0], what);
    hi = parse_double(fields[1], what);
    count = static_cast<int>(parse_double(fields[2], what));
    if (count < 1)
        fail(errc::parse_error, std::string(what) + ": count must be >= 1");
}

} // namespace

ZGrid parse_z_grid(const std::string& re_spec, const std::string& im_spec) {
    ZGrid grid;
    parse_axis(re_spec, grid.re_lo, grid.re_hi, grid.re_count, "--re");
    parse_axis(im_spec, grid.im_lo, grid.im_hi, grid.im_count, "--im");
    return grid;
}

SchattenExponent parse_exponent(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF")
        return SchattenExponent::infinity();
    return SchattenExponent(parse_double(text, "--p"));
}

ReportRow row_from_report(const InequalityReport& report, std::uint64_t seed, int dim,
                          std::optional<double> p) {
    ReportRow row;
    row.theorem_id = report.theorem_id;
    row.seed = seed;
    row.dim = dim;
    row.re_z = report.z.real();
    row.im_z = report.z.imag();
    row.p = p;
    row.k = report.k_used;
    row.lhs = report.lhs;
    row.rhs = report.rhs;
    row.constant = report.constant_factor;
    row.slack = report.slack;
    row.pass = report.pass;
    return row;
}

namespace {

std::string format_optional(const std::optional<double>& v) {
    if (!v)
        return "";
    if (std::isinf(*v))
        return "inf";
    return format_double(*v);
}

std::string timestamp_line() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return std::string(buf);
}

} // namespace

void write_rows_csv(const std::vector<ReportRow>& rows, std::ostream& out, bool no_timestamp) {
    if (!no_timestamp)
        out << "# generated " << timestamp_line() << "\n";
    out << "theorem,seed,dim,re_z,im_z,p,k,lhs,rhs,constant,slack,pass\n";
    for (const ReportRow& r : rows) {
        out << r.theorem_id << ',' << r.seed << ',' << r.dim << ',' << format_double(r.re_z)
            << ',' << format_double(r.im_z) << ',' << format_optional(r.p) << ','
            << format_optional(r.k) << ',' << format_double(r.lhs) << ',' << format_double(r.rhs)
            << ',' << format_double(r.constant) << ',' << format_double(r.slack) << ','
            << (r.pass ? 1 : 0) << "\n";
    }
}

void write_rows_json(const std::vector<ReportRow>& rows, std::ostream& out, bool no_timestamp) {
    nlohmann::json doc;
    if (!no_timestamp)
        doc["generated"] = timestamp_line();
    nlohmann::json arr = nlohmann::json::array();
    for (const ReportRow& r : rows) {
        nlohmann::json obj;
        obj["theorem"] = r.theorem_id;
        obj["seed"] = r.seed;
        obj["dim"] = r.dim;
        obj["re_z"] = r.re_z;
        obj["im_z"] = r.im_z;
        if (r.p)
            obj["p"] = std::isinf(*r.p) ? nlohmann::json("inf") : nlohmann::json(*r.p);
        if (r.k)
            obj["k"] = *r.k;
        obj["lhs"] = r.lhs;
        obj["rhs"] = r.rhs;
        obj["constant"] = r.constant;
        obj["slack"] = r.slack;
        obj["pass"] = r.pass;
        arr.push_back(obj);
    }
    doc["rows"] = arr;
    out << doc.dump(2) << "\n";
}

namespace {

// ---- theorem catalogue -----------------------------------------------------

enum class TheoremKind {
    imaginary_bound,     // 2.23 / 2.24
    bounded_similarity,  // 2.25
    sandwich,            // 2.31 / 1.2 / 3.17
    polar_reconstruction,// 2.41
    heinz,               // 2.48
    strip_one_space,     // 2.44 / 2.45 / 3.14 / 3.14a
    strip_two_space,     // 2.56 / 2.57 / 3.26 / 3.27
    strip_one_sectorial, // 4.24 / 4.25 / 4.36 / 4.37
    strip_two_sectorial, // 4.32 / 4.33 / 4.45 / 4.46
    trace_duality,       // 3.11
    gk_interpolation,    // 3.4
    block_embedding,     // 2.62
    mcintosh,            // 4.6a
};

struct TheoremInfo {
    TheoremKind kind;
    int spaces;        // generator count consumed
    bool uses_p;
    bool sectorial;
};

TheoremInfo theorem_info(const std::string& id) {
    if (id == "2.23" || id == "2.24") return {TheoremKind::imaginary_bound, 1, false, false};
    if (id == "2.25") return {TheoremKind::bounded_similarity, 1, false, false};
    if (id == "2.31" || id == "1.2" || id == "3.17" || id == "2.6")
        return {TheoremKind::sandwich, 1, true, false};
    if (id == "2.41") return {TheoremKind::polar_reconstruction, 1, false, false};
    if (id == "2.48") return {TheoremKind::heinz, 1, false, false};
    if (id == "2.44" || id == "2.45" || id == "3.14" || id == "3.14a" || id == "2.7" ||
        id == "3.2")
        return {TheoremKind::strip_one_space, 1, true, false};
    if (id == "2.56" || id == "2.57" || id == "3.26" || id == "3.27" || id == "2.9" ||
        id == "3.3")
        return {TheoremKind::strip_two_space, 2, true, false};
    if (id == "4.24" || id == "4.25" || id == "4.36" || id == "4.37" || id == "4.4" ||
        id == "4.7")
        return {TheoremKind::strip_one_sectorial, 1, true, true};
    if (id == "4.32" || id == "4.33" || id == "4.45" || id == "4.46" || id == "4.6" ||
        id == "4.8")
        return {TheoremKind::strip_two_sectorial, 2, true, true};
    if (id == "3.11") return {TheoremKind::trace_duality, 1, true, false};
    if (id == "3.4" || id == "3.1") return {TheoremKind::gk_interpolation, 1, true, false};
    if (id == "2.62") return {TheoremKind::block_embedding, 2, true, false};
    if (id == "4.6a" || id == "mcintosh") return {TheoremKind::mcintosh, 1, false, true};
    fail(errc::unknown_case, "unknown theorem id '" + id + "'");
}

struct Instance {
    ComplexMatrix t1;
    ComplexMatrix t2;
    ComplexMatrix s;
    std::uint64_t seed = 0;
};

GenSpec default_spec_for(const TheoremInfo& info) {
    GenSpec d;
    d.dim = 8;
    d.cls = info.sectorial ? MatrixClass::sectorial_normal : MatrixClass::posdef;
    if (info.kind == TheoremKind::imaginary_bound)
        d.cls = MatrixClass::indefinite;
    if (info.kind == TheoremKind::polar_reconstruction ||
        info.kind == TheoremKind::trace_duality)
        d.cls = MatrixClass::random;
    return d;
}

Instance make_instance(const JobConfig& cfg, const TheoremInfo& info, int index) {
    Instance inst;
    inst.seed = instance_seed(cfg.seed, index);
    Rng rng(inst.seed);

    std::vector<GenSpec> specs = cfg.gens;
    if (specs.empty())
        specs.push_back(default_spec_for(info));
    while (static_cast<int>(specs.size()) < info.spaces)
        specs.push_back(specs.front());

    if (!cfg.input_paths.empty()) {
        // files are consumed in order T1 [T2] [S]
        inst.t1 = load_matrix(cfg.input_paths[0]);
        inst.t2 = info.spaces > 1 && cfg.input_paths.size() > 1
                      ? load_matrix(cfg.input_paths[1])
                      : inst.t1;
        const std::size_t s_index = info.spaces > 1 ? 2 : 1;
        if (cfg.input_paths.size() > s_index)
            inst.s = load_matrix(cfg.input_paths[s_index]);
    } else {
        inst.t1 = generate(specs[0].cls, rng, specs[0].dim, specs[0].omega);
        inst.t2 = info.spaces > 1 ? generate(specs[1].cls, rng, specs[1].dim, specs[1].omega)
                                  : inst.t1;
    }
    if (inst.s.size() == 0)
        inst.s = random_matrix(rng, inst.t2.rows(), inst.t1.rows());
    return inst;
}

StripCase case_of(const ComplexMatrix& t1, const ComplexMatrix& t2) {
    const auto positive = [](const ComplexMatrix& t) {
        const HermitianSpectrum spec = hermitian_eig(t);
        return spec.eigenvalues.minCoeff() > 1e-10 * spec.spectral_radius();
    };
    const bool p1 = positive(t1), p2 = positive(t2);
    return p1 && p2 ? StripCase::both_positive
           : p1 || p2 ? StripCase::one_positive
                      : StripCase::neither_positive;
}

struct WorkPoint {
    int instance = 0;
    Complex z{0.5, 0.0};
    std::optional<double> p;
};

std::vector<ReportRow> compute_rows(const JobConfig& cfg, const TheoremInfo& info,
                                    const WorkPoint& point) {
    const Instance inst = make_instance(cfg, info, point.instance);
    const int dim = static_cast<int>(inst.t1.rows());
    const SchattenExponent p = point.p ? SchattenExponent(*point.p) : SchattenExponent::infinity();
    const std::optional<double> p_col =
        info.uses_p ? std::optional<double>(p.p) : std::nullopt;

    std::vector<ReportRow> rows;
    switch (info.kind) {
    case TheoremKind::imaginary_bound: {
        const InequalityReport r =
            imaginary_power_bound_check(hermitian_eig(inst.t1), point.z.imag());
        rows.push_back(row_from_report(r, inst.seed, dim, std::nullopt));
        break;
    }
    case TheoremKind::bounded_similarity: {
        rows.push_back(row_from_report(verify_bounded_similarity(inst.s, inst.t1), inst.seed,
                                       dim, std::nullopt));
        break;
    }
    case TheoremKind::sandwich: {
        rows.push_back(
            row_from_report(verify_sandwich(inst.s, inst.t1, p), inst.seed, dim, p_col));
        break;
    }
    case TheoremKind::polar_reconstruction: {
        const double alpha = std::clamp(point.z.real(), 0.0, 1.0);
        const GeneralizedPolarFactors gp = generalized_polar(inst.s, alpha);
        const double err =
            operator_norm(ComplexMatrix(gp.left * gp.isometry * gp.right - inst.s));
        const double budget = 1e-10 * std::max(operator_norm(inst.s), 1.0);
        InequalityReport r = make_report("2.41", Complex(alpha, 0.0), err, budget, 1.0,
                                         std::nullopt, 0.0);
        rows.push_back(row_from_report(r, inst.seed, dim, std::nullopt));
        break;
    }
    case TheoremKind::heinz: {
        const double alpha = std::clamp(point.z.real(), 0.0, 1.0);
        rows.push_back(row_from_report(heinz_domination_check(inst.s, inst.t1, alpha), inst.seed,
                                       dim, std::nullopt));
        break;
    }
    case TheoremKind::strip_one_space:
    case TheoremKind::strip_two_space:
    case TheoremKind::strip_one_sectorial:
    case TheoremKind::strip_two_sectorial: {
        StripBoundOptions options;
        options.k = cfg.k;
        options.p = p;
        options.mode = info.sectorial ? PowerMode::sectorial : PowerMode::selfadjoint;
        options.rel_tol_base = cfg.tol;
        const bool two = info.kind == TheoremKind::strip_two_space ||
                         info.kind == TheoremKind::strip_two_sectorial;
        const ComplexMatrix& t2 = two ? inst.t2 : inst.t1;
        if (!info.sectorial)
            options.expected_case = case_of(inst.t1, t2);
        rows.push_back(row_from_report(
            verify_strip_bound(inst.s, inst.t1, t2, point.z, options), inst.seed, dim, p_col));
        break;
    }
    case TheoremKind::trace_duality: {
        const TraceDualityEstimate est =
            trace_duality_estimate(inst.t1, p, cfg.trials, inst.seed);
        const double norm = schatten_norm(inst.t1, p);
        InequalityReport r = make_report("3.11", Complex(0.0, 0.0), est.lower_bound,
                                         norm * (1.0 + 1e-10), 1.0, std::nullopt, 0.0);
        // sharp attainment is part of the contract, not just one-sidedness
        r.pass = r.pass && std::abs(est.lower_bound - norm) <= 1e-10 * std::max(norm, 1.0);
        rows.push_back(row_from_report(r, inst.seed, dim, p_col));
        break;
    }
    case TheoremKind::gk_interpolation: {
        const double k = cfg.k.value_or(1.0);
        const HermitianSpectrum spec = hermitian_eig(inst.t1);
        if (spec.eigenvalues.minCoeff() <= 1e-10 * spec.spectral_radius())
            fail(errc::not_positive_definite, "gk family needs positive definite T");
        const ComplexMatrix s_copy = inst.s;
        StripFamily family{[spec, s_copy, k](Complex z) {
            return std::exp(k * z * (z - 1.0)) * power_selfadjoint(spec, -z) * s_copy *
                   power_selfadjoint(spec, z - 1.0);
        }};
        const ComplexMatrix t_inv = power_selfadjoint(spec, Complex(-1.0, 0.0));
        const double c0 = schatten_norm(s_copy * t_inv, p) + 1e-12;
        const double c1 = schatten_norm(s_copy.adjoint() * t_inv, p) + 1e-12;
        const auto reports =
            verify_gk_interpolation(family, p, p, c0, c1, {point.z});
        for (const InequalityReport& r : reports)
            rows.push_back(row_from_report(r, inst.seed, dim, p_col));
        break;
    }
    case TheoremKind::block_embedding: {
        const auto [bold_s, bold_t] = block_embed(inst.s, inst.t1, inst.t2);
        const ComplexMatrix bold_t_inv = solve(bold_t, identity(bold_t.rows()));
        const double lhs0 = schatten_norm(bold_s * bold_t_inv, p);
        const double rhs0 = schatten_norm(multiply_inverse(inst.s, inst.t1), p);
        InequalityReport r0 =
            make_report("2.62", Complex(0.0, 0.0), lhs0, rhs0, 1.0, std::nullopt, 0.0);
        r0.pass = std::abs(lhs0 - rhs0) <= 1e-12 * std::max(1.0, rhs0);
        rows.push_back(row_from_report(r0, inst.seed, dim, p_col));

        const double lhs1 = schatten_norm(bold_s.adjoint() * bold_t_inv, p);
        const double rhs1 = schatten_norm(multiply_inverse(inst.s.adjoint(), inst.t2), p);
        InequalityReport r1 =
            make_report("2.62*", Complex(0.0, 0.0), lhs1, rhs1, 1.0, std::nullopt, 0.0);
        r1.pass = std::abs(lhs1 - rhs1) <= 1e-12 * std::max(1.0, rhs1);
        rows.push_back(row_from_report(r1, inst.seed, dim, p_col));
        break;
    }
    case TheoremKind::mcintosh: {
        rows.push_back(
            row_from_report(mcintosh_check(inst.t1), inst.seed, dim, std::nullopt));
        break;
    }
    }
    return rows;
}

std::vector<WorkPoint> build_points(const JobConfig& cfg, const TheoremInfo& info) {
    std::vector<WorkPoint> points;
    const auto axis = [](double lo, double hi, int n, int i) {
        return n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    };

    std::vector<std::optional<double>> ps;
    if (info.uses_p) {
        if (cfg.p_list.empty())
            ps.push_back(std::numeric_limits<double>::infinity());
        else
            for (const SchattenExponent& p : cfg.p_list)
                ps.push_back(p.p);
    } else {
        ps.push_back(std::nullopt);
    }

    if (cfg.command == Command::fuzz) {
        for (int t = 0; t < cfg.trials; ++t) {
            Rng rng(instance_seed(cfg.seed, t) + 7);
            WorkPoint pt;
            pt.instance = t;
            pt.z = Complex(rng.uniform(cfg.zgrid.re_lo, cfg.zgrid.re_hi),
                           rng.uniform(cfg.zgrid.im_lo, cfg.zgrid.im_hi));
            pt.p = ps[rng.integer(ps.size())];
            points.push_back(pt);
        }
        return points;
    }

    ZGrid grid = cfg.zgrid;
    if (cfg.z_single) {
        grid.re_lo = grid.re_hi = cfg.z_single->real();
        grid.im_lo = grid.im_hi = cfg.z_single->imag();
        grid.re_count = grid.im_count = 1;
    }
    if (info.kind == TheoremKind::imaginary_bound && grid.im_count == 1 && grid.im_lo == 0.0 &&
        grid.im_hi == 0.0)
        grid.im_lo = grid.im_hi = 1.0; // y = 0 checks nothing

    for (int i = 0; i < grid.re_count; ++i)
        for (int j = 0; j < grid.im_count; ++j)
            for (const auto& p : ps) {
                WorkPoint pt;
                pt.instance = 0;
                pt.z = Complex(axis(grid.re_lo, grid.re_hi, grid.re_count, i),
                               axis(grid.im_lo, grid.im_hi, grid.im_count, j));
                pt.p = p;
                points.push_back(pt);
            }
    return points;
}

int effective_jobs(const JobConfig& cfg) {
    if (const char* env = std::getenv("OPBOUND_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            return std::max(1, cfg.jobs);
        }
    }
    return std::max(1, cfg.jobs);
}

void apply_corrupt_hook(std::vector<ReportRow>& rows) {
    // test hook: deliberately break every bound so exit-code plumbing can be
    // exercised end to end
    if (!std::getenv("OPBOUND_CORRUPT_VERIFIER"))
        return;
    for (ReportRow& row : rows) {
        row.rhs *= 1e-3;
        row.slack = row.rhs - row.lhs;
        row.pass = row.lhs <= row.rhs;
    }
}

int write_output(const JobConfig& cfg, const std::vector<ReportRow>& rows, std::ostream& err) {
    std::ostringstream buffer;
    if (cfg.format == OutputFormat::csv)
        write_rows_csv(rows, buffer, cfg.no_timestamp);
    else
        write_rows_json(rows, buffer, cfg.no_timestamp);

    if (cfg.out_path.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) {
            err << "opbound: cannot open '" << cfg.out_path << "' for writing\n";
            return 1;
        }
        out << buffer.str();
    }
    for (const ReportRow& row : rows)
        if (!row.pass)
            return 2;
    return 0;
}

ComplexMatrix power_any(const ComplexMatrix& t, Complex z) {
    const double herm_defect = frobenius_norm(ComplexMatrix(t - t.adjoint()));
    if (herm_defect <= 1e-10 * std::max(frobenius_norm(t), 1e-300))
        return power_selfadjoint(hermitian_eig(t), z);
    if (is_normal(t))
        return normal_power(t, z);
    // non-normal: reduce to nonpositive real part and integer factors
    const double m = std::ceil(z.real());
    ComplexMatrix integer_part = identity(t.rows());
    for (int i = 0; i < static_cast<int>(m); ++i)
        integer_part = integer_part * t;
    const Complex rem = z - m;
    if (rem == Complex(0.0, 0.0))
        return integer_part;
    return integer_part * sectorial_power(t, rem);
}

int run_powers(const JobConfig& cfg, std::ostream& err) {
    if (cfg.input_paths.empty()) {
        err << "opbound powers: --in FILE is required\n";
        return 1;
    }
    const ComplexMatrix t = load_matrix(cfg.input_paths[0]);
    const Complex z = cfg.z_single.value_or(Complex(cfg.zgrid.re_lo, cfg.zgrid.im_lo));
    const ComplexMatrix result = power_any(t, z);

    if (cfg.out_path.empty()) {
        if (cfg.format == OutputFormat::json)
            write_matrix_json(result, std::cout);
        else
            write_matrix_market(result, std::cout);
    } else if (cfg.format == OutputFormat::json) {
        save_matrix_json(result, cfg.out_path);
    } else {
        save_matrix_market(result, cfg.out_path);
    }
    return 0;
}

int run_sector(const JobConfig& cfg, std::ostream& err) {
    ComplexMatrix t;
    std::uint64_t seed = cfg.seed;
    if (!cfg.input_paths.empty()) {
        t = load_matrix(cfg.input_paths[0]);
    } else if (!cfg.gens.empty()) {
        Rng rng(seed);
        t = generate(cfg.gens[0].cls, rng, cfg.gens[0].dim, cfg.gens[0].omega);
    } else {
        err << "opbound sector: need --in or --gen\n";
        return 1;
    }

    nlohmann::json doc;
    const SectorialAngle angle = sectoriality_angle(t);
    doc["omega_estimate"] = angle.omega;
    doc["spectral_exact"] = angle.spectral_exact;

    const ComplexVector spectrum = spectrum_of(t);
    nlohmann::json spec_arr = nlohmann::json::array();
    for (Eigen::Index j = 0; j < spectrum.size(); ++j)
        spec_arr.push_back({spectrum(j).real(), spectrum(j).imag()});
    doc["spectrum"] = spec_arr;

    const Sector sector(std::min(angle.omega + 0.1, kPi - 1e-9));
    const SectorialProfile profile = sector_membership(t, sector, 50, seed);
    doc["omega_min_spectral"] = profile.omega_min_spectral;
    nlohmann::json sup;
    for (const auto& [probe, value] : profile.resolvent_sup_per_angle)
        sup[std::to_string(probe)] = value;
    doc["resolvent_sup_per_angle"] = sup;

    const BipEstimate bip = bip_fit(t, 3.0, 21);
    doc["bip"] = {{"N", bip.n_constant}, {"theta", bip.theta}};
    if (is_normal(t)) {
        const InequalityReport mc = mcintosh_check(t);
        doc["mcintosh"] = {{"difference", mc.lhs}, {"tolerance", mc.rhs}, {"pass", mc.pass}};
    }

    if (cfg.out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) {
            err << "opbound: cannot open '" << cfg.out_path << "' for writing\n";
            return 1;
        }
        out << doc.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int run_job(const JobConfig& cfg, std::ostream& err) {
    try {
        if (cfg.command == Command::powers)
            return run_powers(cfg, err);
        if (cfg.command == Command::sector)
            return run_sector(cfg, err);

        if (cfg.theorem_id.empty()) {
            err << "opbound: --theorem is required for " <<
                (cfg.command == Command::check ? "check" : cfg.command == Command::sweep ? "sweep" : "fuzz")
                << "\n";
            return 1;
        }
        const TheoremInfo info = theorem_info(cfg.theorem_id);
        const std::vector<WorkPoint> points = build_points(cfg, info);

        std::vector<std::vector<ReportRow>> slots(points.size());
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::string failure;
        std::mutex failure_mutex;

        const int workers = std::min<int>(effective_jobs(cfg), static_cast<int>(points.size()));
        const auto worker = [&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= points.size() || failed.load())
                    return;
                try {
                    slots[i] = compute_rows(cfg, info, points[i]);
                } catch (const std::exception& e) {
                    failed.store(true);
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (failure.empty())
                        failure = e.what();
                }
            }
        };
        if (workers <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back(worker);
            for (std::thread& th : pool)
                th.join();
        }
        if (failed.load()) {
            err << "opbound: " << failure << "\n";
            return 1;
        }

        std::vector<ReportRow> rows;
        for (const auto& slot : slots)
            rows.insert(rows.end(), slot.begin(), slot.end());
        apply_corrupt_hook(rows);
        return write_output(cfg, rows, err);
    } catch (const std::exception& e) {
        err << "opbound: " << e.what() << "\n";
        return 1;
    }
}

} // namespace opbound
