#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opbound/interpolation.hpp"
#include "opbound/generators.hpp"
#include "opbound/matrix_io.hpp"
#include "opbound/polar.hpp"
#include "opbound/schatten.hpp"
#include "opbound/sectorial.hpp"
#include "opbound/spectral.hpp"

namespace py = pybind11;
using namespace opbound;

namespace {

PowerMode mode_from_string(const std::string& name) {
    if (name == "selfadjoint")
        return PowerMode::selfadjoint;
    if (name == "sectorial")
        return PowerMode::sectorial;
    throw py::value_error("mode must be 'selfadjoint' or 'sectorial'");
}

StripCase case_from_string(const std::string& name) {
    if (name == "neither-positive")
        return StripCase::neither_positive;
    if (name == "one-positive")
        return StripCase::one_positive;
    if (name == "both-positive")
        return StripCase::both_positive;
    throw py::value_error("case must be neither-positive, one-positive or both-positive");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Operator-norm and trace-ideal inequality toolkit: branched matrix powers, "
              "generalized polar decompositions, Schatten norms, sectorial calculus and "
              "strip-interpolation verifiers.";

    static py::exception<Error> exc(m, "OpboundError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(exc.ptr(), e.what());
        }
    });

    py::class_<HermitianSpectrum>(m, "HermitianSpectrum")
        .def_readonly("eigenvalues", &HermitianSpectrum::eigenvalues)
        .def_readonly("eigenvectors", &HermitianSpectrum::eigenvectors)
        .def("reconstruct", &HermitianSpectrum::reconstruct);

    py::class_<SingularDecomposition>(m, "SingularDecomposition")
        .def_readonly("u", &SingularDecomposition::u)
        .def_readonly("singular_values", &SingularDecomposition::singular_values)
        .def_readonly("v", &SingularDecomposition::v)
        .def("reconstruct", &SingularDecomposition::reconstruct);

    py::class_<PolarDecomposition>(m, "PolarDecomposition")
        .def_readonly("isometry", &PolarDecomposition::isometry)
        .def_readonly("abs", &PolarDecomposition::abs);

    py::class_<GeneralizedPolarFactors>(m, "GeneralizedPolarFactors")
        .def_readonly("alpha", &GeneralizedPolarFactors::alpha)
        .def_readonly("left", &GeneralizedPolarFactors::left)
        .def_readonly("isometry", &GeneralizedPolarFactors::isometry)
        .def_readonly("right", &GeneralizedPolarFactors::right);

    py::class_<InequalityReport>(m, "InequalityReport")
        .def_readonly("theorem_id", &InequalityReport::theorem_id)
        .def_readonly("z", &InequalityReport::z)
        .def_readonly("lhs", &InequalityReport::lhs)
        .def_readonly("rhs", &InequalityReport::rhs)
        .def_readonly("constant_factor", &InequalityReport::constant_factor)
        .def_readonly("k_used", &InequalityReport::k_used)
        .def_readonly("rel_tol", &InequalityReport::rel_tol)
        .def_readonly("passed", &InequalityReport::pass)
        .def_readonly("slack", &InequalityReport::slack)
        .def("__repr__", [](const InequalityReport& r) {
            return "<InequalityReport " + r.theorem_id + " lhs=" + std::to_string(r.lhs) +
                   " rhs=" + std::to_string(r.rhs) + (r.pass ? " PASS>" : " FAIL>");
        });

    py::class_<KOptimum>(m, "KOptimum")
        .def_readonly("k_star", &KOptimum::k_star)
        .def_readonly("min_value", &KOptimum::min_value)
        .def_readonly("k_unbounded", &KOptimum::k_unbounded);

    py::class_<BipEstimate>(m, "BipEstimate")
        .def_readonly("N", &BipEstimate::n_constant)
        .def_readonly("theta", &BipEstimate::theta)
        .def_readonly("sample_points", &BipEstimate::sample_points)
        .def_readonly("max_residual", &BipEstimate::max_residual);

    py::class_<SectorialAngle>(m, "SectorialAngle")
        .def_readonly("omega", &SectorialAngle::omega)
        .def_readonly("spectral_exact", &SectorialAngle::spectral_exact);

    py::class_<ContourSpec>(m, "ContourSpec")
        .def(py::init<double, double, int>(), py::arg("center"), py::arg("radius"),
             py::arg("nodes"))
        .def_readwrite("center", &ContourSpec::center)
        .def_readwrite("radius", &ContourSpec::radius)
        .def_readwrite("nodes", &ContourSpec::nodes);

    py::class_<TraceDualityEstimate>(m, "TraceDualityEstimate")
        .def_readonly("lower_bound", &TraceDualityEstimate::lower_bound)
        .def_readonly("witness", &TraceDualityEstimate::witness)
        .def_readonly("best_random", &TraceDualityEstimate::best_random);

    // matrix-core
    m.def("adjoint", &adjoint, py::arg("a"));
    m.def("hermitian_eig", &hermitian_eig, py::arg("a"));
    m.def("svd", &svd, py::arg("a"));
    m.def("solve", &solve, py::arg("a"), py::arg("b"));
    m.def("operator_norm", &operator_norm, py::arg("a"));

    // spectral calculus
    m.def("scalar_power", &scalar_power, py::arg("lam"), py::arg("z"),
          "lam^z with the argument of a negative lam placed at +pi");
    m.def(
        "power_selfadjoint",
        [](const ComplexMatrix& t, Complex z) { return power_selfadjoint(hermitian_eig(t), z); },
        py::arg("t"), py::arg("z"));
    m.def(
        "imaginary_power_bound_check",
        [](const ComplexMatrix& t, double y) {
            return imaginary_power_bound_check(hermitian_eig(t), y);
        },
        py::arg("t"), py::arg("y"));

    // polar
    m.def("polar", &polar, py::arg("s"));
    m.def("generalized_polar", &generalized_polar, py::arg("s"), py::arg("alpha"));
    m.def("relative_bound_constants", &relative_bound_constants, py::arg("s"), py::arg("t"));
    m.def("heinz_domination_check", &heinz_domination_check, py::arg("s"), py::arg("t"),
          py::arg("alpha"));
    m.def("psd_power", &psd_power, py::arg("h"), py::arg("p"));

    // schatten
    m.def(
        "schatten_norm",
        [](const ComplexMatrix& a, double p) { return schatten_norm(a, SchattenExponent(p)); },
        py::arg("a"), py::arg("p"));
    m.def(
        "conjugate_exponent",
        [](double p) { return conjugate_exponent(SchattenExponent(p)).p; }, py::arg("p"));
    m.def(
        "interpolation_exponent",
        [](double p0, double p1, Complex z) {
            return interpolation_exponent(SchattenExponent(p0), SchattenExponent(p1), z).p;
        },
        py::arg("p0"), py::arg("p1"), py::arg("z"));
    m.def(
        "trace_duality_estimate",
        [](const ComplexMatrix& b, double p, int trials, std::uint64_t seed) {
            return trace_duality_estimate(b, SchattenExponent(p), trials, seed);
        },
        py::arg("b"), py::arg("p"), py::arg("trials") = 100, py::arg("seed") = 1);
    m.def(
        "verify_gk_interpolation",
        [](const std::function<ComplexMatrix(Complex)>& family, double p0, double p1, double c0,
           double c1, const std::vector<Complex>& grid) {
            return verify_gk_interpolation(StripFamily{family}, SchattenExponent(p0),
                                           SchattenExponent(p1), c0, c1, grid);
        },
        py::arg("family"), py::arg("p0"), py::arg("p1"), py::arg("c0"), py::arg("c1"),
        py::arg("grid"));

    // sectorial
    m.def("spectrum_of", &spectrum_of, py::arg("t"));
    m.def("is_normal", &is_normal, py::arg("t"), py::arg("tol") = 1e-10);
    m.def("sectoriality_angle", &sectoriality_angle, py::arg("t"));
    m.def("suggest_contour", &suggest_contour, py::arg("t"), py::arg("nodes") = 128);
    m.def("dunford_power", &dunford_power, py::arg("t"), py::arg("z"), py::arg("contour"),
          "T^{-z} by clockwise contour quadrature, Re z > 0");
    m.def("imaginary_power", &imaginary_power, py::arg("t"), py::arg("s"),
          py::arg("quadrature_nodes") = 400);
    m.def("bip_fit", &bip_fit, py::arg("t"), py::arg("s_max") = 3.0,
          py::arg("sample_count") = 21);
    m.def("mcintosh_check", &mcintosh_check, py::arg("t"));

    // interpolation suite
    m.def("three_lines_bound", &three_lines_bound, py::arg("c0"), py::arg("c1"), py::arg("z"));
    m.def("three_lines_kernel_bound", &three_lines_kernel_bound, py::arg("boundary0"),
          py::arg("boundary1"), py::arg("z"), py::arg("truncation"));
    m.def("optimize_k", &optimize_k, py::arg("quadratic_coeff"), py::arg("inverse_coeff"));
    m.def(
        "conjugated_operator",
        [](const ComplexMatrix& s, const ComplexMatrix& t1, const ComplexMatrix& t2, Complex z,
           const std::string& mode) {
            return conjugated_operator(s, t1, t2, z, mode_from_string(mode));
        },
        py::arg("s"), py::arg("t1"), py::arg("t2"), py::arg("z"),
        py::arg("mode") = "selfadjoint");
    m.def("verify_bounded_similarity", &verify_bounded_similarity, py::arg("s"), py::arg("t"));
    m.def(
        "verify_sandwich",
        [](const ComplexMatrix& s, const ComplexMatrix& t, double p) {
            return verify_sandwich(s, t, SchattenExponent(p));
        },
        py::arg("s"), py::arg("t"), py::arg("p") = std::numeric_limits<double>::infinity());
    m.def(
        "verify_strip_bound",
        [](const ComplexMatrix& s, const ComplexMatrix& t1, const ComplexMatrix& t2, Complex z,
           std::optional<double> k, double p, const std::string& mode,
           std::optional<std::string> expected_case, double rel_tol) {
            StripBoundOptions options;
            options.k = k;
            options.p = SchattenExponent(p);
            options.mode = mode_from_string(mode);
            if (expected_case)
                options.expected_case = case_from_string(*expected_case);
            options.rel_tol_base = rel_tol;
            return verify_strip_bound(s, t1, t2, z, options);
        },
        py::arg("s"), py::arg("t1"), py::arg("t2"), py::arg("z"), py::arg("k") = std::nullopt,
        py::arg("p") = std::numeric_limits<double>::infinity(),
        py::arg("mode") = "selfadjoint", py::arg("expected_case") = std::nullopt,
        py::arg("rel_tol") = 1e-9);
    m.def("block_embed", &block_embed, py::arg("s"), py::arg("t1"), py::arg("t2"));
    m.def("exponent_assembler", &exponent_assembler, py::arg("case_id"), py::arg("z"),
          py::arg("k") = std::nullopt, py::arg("theta_total") = 0.0);

    // generators and I/O
    m.def(
        "generate",
        [](const std::string& cls, Eigen::Index n, std::uint64_t seed, double omega) {
            Rng rng(seed);
            return generate(matrix_class_from_name(cls), rng, n, omega);
        },
        py::arg("cls"), py::arg("n"), py::arg("seed") = 1,
        py::arg("omega") = 1.0471975511965977,
        "classes: hermitian, posdef, indefinite, sectorial-normal, random");
    m.def("load_matrix", &load_matrix, py::arg("path"));
    m.def("save_matrix_market", &save_matrix_market, py::arg("a"), py::arg("path"));
    m.def("save_matrix_json", &save_matrix_json, py::arg("a"), py::arg("path"));
}
