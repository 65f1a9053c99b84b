#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opbound/generators.hpp"
#include "opbound/matrix.hpp"
#include "opbound/report.hpp"
#include "opbound/schatten.hpp"

namespace opbound {

struct GenSpec {
    MatrixClass cls = MatrixClass::random;
    int dim = 8;
    double omega = 1.0471975511965977; // pi/3, sectorial-normal only
};

/// "class:dim" or "class:dim:omega"; several specs separated by commas.
std::vector<GenSpec> parse_gen_specs(const std::string& text);

struct ZGrid {
    double re_lo = 0.5, re_hi = 0.5;
    int re_count = 1;
    double im_lo = 0.0, im_hi = 0.0;
    int im_count = 1;
};

/// "lo:hi:count" (also accepts a single number for a one-point grid)
ZGrid parse_z_grid(const std::string& re_spec, const std::string& im_spec);

enum class Command { powers, sector, check, sweep, fuzz };
enum class OutputFormat { csv, json };

struct JobConfig {
    Command command = Command::check;
    std::string theorem_id;
    std::vector<std::string> input_paths;
    std::vector<GenSpec> gens;
    std::uint64_t seed = 1;
    ZGrid zgrid;
    std::optional<Complex> z_single;
    std::vector<SchattenExponent> p_list;
    std::optional<double> k;
    double tol = 1e-9;
    int trials = 100;
    std::string out_path;    ///< empty = stdout
    OutputFormat format = OutputFormat::csv;
    bool no_timestamp = false;
    int jobs = 1;
};

/// One line of the report: fixed column schema
/// theorem,seed,dim,re_z,im_z,p,k,lhs,rhs,constant,slack,pass
struct ReportRow {
    std::string theorem_id;
    std::uint64_t seed = 0;
    int dim = 0;
    double re_z = 0.0, im_z = 0.0;
    std::optional<double> p; ///< empty = not applicable, +inf prints "inf"
    std::optional<double> k;
    double lhs = 0.0, rhs = 0.0, constant = 1.0, slack = 0.0;
    bool pass = false;
};

ReportRow row_from_report(const InequalityReport& report, std::uint64_t seed, int dim,
                          std::optional<double> p);

void write_rows_csv(const std::vector<ReportRow>& rows, std::ostream& out, bool no_timestamp);
void write_rows_json(const std::vector<ReportRow>& rows, std::ostream& out, bool no_timestamp);

/// "1", "2.5", "inf"
SchattenExponent parse_exponent(const std::string& text);

/// Executes the job.  Exit codes: 0 all rows pass, 1 usage or I/O failure,
/// 2 at least one inequality violated.  Diagnostics go to `err`.
int run_job(const JobConfig& config, std::ostream& err);

} // namespace opbound
