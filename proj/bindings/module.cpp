// Python module over the core operations: fields, matrices, codes, the
// quasi-BCH pipeline, evaluation codes, distances and the reference suite.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <random>
#include <sstream>

#include "qcblock/channel.hpp"
#include "qcblock/decode.hpp"
#include "qcblock/distance.hpp"
#include "qcblock/evalcode.hpp"
#include "qcblock/io.hpp"
#include "qcblock/qbch.hpp"
#include "qcblock/verify.hpp"

namespace py = pybind11;
using namespace qcblock;

namespace {

std::vector<std::vector<u32>> mat_to_lists(const Mat& A) {
    std::vector<std::vector<u32>> out(A.rows());
    for (u32 i = 0; i < A.rows(); ++i) out[i] = A.row(i);
    return out;
}

EvalSpec make_eval_spec(const Field& F, u32 l, const Mat& root, u32 k, u32 points,
                        const ProjectionSpec& proj) {
    return EvalSpec{&F, l, root, k, points, proj};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "quasi-cyclic codes as block cyclic codes";

    py::class_<Field, std::unique_ptr<Field, py::nodelete>>(m, "Field")
        .def_static("get", &Field::get, py::arg("p"), py::arg("d"),
                    py::return_value_policy::reference)
        .def_static("from_order", &field_from_order, py::arg("q"),
                    py::return_value_policy::reference)
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("d", &Field::d)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("generator", &Field::generator)
        .def_property_readonly("x_class", &Field::x_class)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("neg", &Field::neg)
        .def("mul", &Field::mul)
        .def("inv", &Field::inv)
        .def("div", &Field::div)
        .def("pow", &Field::pow)
        .def("element_order", &Field::element_order)
        .def("spec_line", &Field::spec_line)
        .def("__repr__",
             [](const Field& F) {
                 return "Field(" + std::to_string(F.p()) + "^" + std::to_string(F.d()) + ")";
             })
        .def("__eq__", [](const Field& a, const Field& b) { return &a == &b; })
        .def("__hash__", [](const Field& a) { return std::hash<const void*>()(&a); });

    py::class_<Mat>(m, "Mat")
        .def(py::init(&Mat::from_rows), py::arg("field"), py::arg("rows"))
        .def_static("identity", &Mat::identity)
        .def_static("scalar", &Mat::scalar)
        .def_static("companion", &Mat::companion)
        .def_static("parse",
                    [](const Field& F, const std::string& text) {
                        std::istringstream in(text);
                        return parse_mat(F, in);
                    })
        .def_property_readonly("rows", &Mat::rows)
        .def_property_readonly("cols", &Mat::cols)
        .def_property_readonly("field", &Mat::field, py::return_value_policy::reference)
        .def("at", &Mat::at)
        .def("to_lists", &mat_to_lists)
        .def("to_text", &mat_to_text)
        .def("rank", &Mat::rank)
        .def("det", &Mat::det)
        .def("inverse", &Mat::inverse)
        .def("transpose", &Mat::transpose)
        .def("pow", &Mat::pow)
        .def("__mul__", [](const Mat& a, const Mat& b) { return a * b; })
        .def("__add__", [](const Mat& a, const Mat& b) { return a + b; })
        .def("__sub__", [](const Mat& a, const Mat& b) { return a - b; })
        .def("__eq__", [](const Mat& a, const Mat& b) { return a == b; })
        .def("__repr__", &Mat::to_string);

    py::class_<MatPoly>(m, "MatPoly")
        .def_static("from_coeffs", &MatPoly::from_coeffs)
        .def_property_readonly("deg", &MatPoly::deg)
        .def("coeff", &MatPoly::coeff)
        .def("is_zero", &MatPoly::is_zero)
        .def("to_text", &matpoly_to_text)
        .def_static("parse",
                    [](const Field& F, const std::string& text) {
                        std::istringstream in(text);
                        return parse_matpoly(F, in);
                    })
        .def("__eq__", [](const MatPoly& a, const MatPoly& b) { return a == b; });

    py::class_<LinearCode>(m, "LinearCode")
        .def_static("from_rows", &LinearCode::from_rows)
        .def_static("zero_code", &LinearCode::zero_code)
        .def_static("full_code", &LinearCode::full_code)
        .def_property_readonly("n", &LinearCode::n)
        .def_property_readonly("k", &LinearCode::k)
        .def_property_readonly("field", &LinearCode::field, py::return_value_policy::reference)
        .def_property_readonly("generator", &LinearCode::generator)
        .def_property_readonly("canonical", &LinearCode::canonical)
        .def_property_readonly("block_len", &LinearCode::block_len)
        .def("set_block_len", &LinearCode::set_block_len)
        .def("blocks", &LinearCode::blocks)
        .def("encode", &LinearCode::encode)
        .def("contains", &LinearCode::contains)
        .def("dual", &LinearCode::dual)
        .def("is_quasi_cyclic", &LinearCode::is_quasi_cyclic)
        .def("to_text", &code_to_text)
        .def_static("parse",
                    [](const std::string& text) {
                        std::istringstream in(text);
                        return parse_code(in);
                    })
        .def("__eq__", [](const LinearCode& a, const LinearCode& b) { return a == b; });

    py::class_<QcGenerators>(m, "QcGenerators")
        .def_readonly("gens", &QcGenerators::gens)
        .def_readonly("firsts", &QcGenerators::firsts)
        .def_readonly("basis", &QcGenerators::basis)
        .def_readonly("schedule", &QcGenerators::schedule);

    py::class_<QcGeneratorPoly>(m, "QcGeneratorPoly")
        .def_readonly("g", &QcGeneratorPoly::g)
        .def_readonly("nu", &QcGeneratorPoly::nu)
        .def_readonly("gens", &QcGeneratorPoly::gens);

    m.def("cyclic_shift", &cyclic_shift);
    m.def("block_weight", &block_weight);
    m.def("block_rank", &block_rank);
    m.def("qc_generator_basis", &qc_generator_basis);
    m.def("generator_polynomial", &generator_polynomial);
    m.def("code_from_generator", &code_from_generator);
    m.def("check_dual_identity", &check_dual_identity);

    py::class_<RootCheck>(m, "RootCheck")
        .def_readonly("ok", &RootCheck::ok)
        .def_readonly("witness", &RootCheck::witness);

    py::class_<QbchCode>(m, "QbchCode")
        .def_readonly("code", &QbchCode::code)
        .def_readonly("root", &QbchCode::root)
        .def_readonly("parity", &QbchCode::parity)
        .def_readonly("m", &QbchCode::m)
        .def_readonly("l", &QbchCode::l)
        .def_readonly("delta", &QbchCode::delta)
        .def_readonly("s", &QbchCode::s)
        .def("spec_text", &qbch_spec_to_text);

    m.def("verify_primitive_root", &verify_primitive_root);
    m.def("companion_primitive_root", &companion_primitive_root);
    m.def("scan_primitive_roots", &scan_primitive_roots);
    m.def("qbch_build", &qbch_build);
    m.def("qbch_from_spec_text", [](const std::string& text) {
        std::istringstream in(text);
        QbchSpec s = parse_qbch_spec(in);
        return qbch_build(*s.Fq, s.m, s.delta, s.root);
    });
    m.def("syndrome_series",
          py::overload_cast<const Field&, const Mat&, const std::vector<u32>&, u32>(
              &syndrome_series));

    py::enum_<DecodeStrategy>(m, "DecodeStrategy")
        .value("SUPPORT", DecodeStrategy::Support)
        .value("KEY_EQUATION", DecodeStrategy::KeyEquation);

    py::class_<DecodeResult>(m, "DecodeResult")
        .def_readonly("ok", &DecodeResult::ok)
        .def_readonly("error", &DecodeResult::error)
        .def_readonly("corrected", &DecodeResult::corrected)
        .def_readonly("weight", &DecodeResult::weight)
        .def_readonly("note", &DecodeResult::note);

    m.def("qbch_decode", &qbch_decode, py::arg("code"), py::arg("word"),
          py::arg("strategy") = DecodeStrategy::Support, py::arg("max_weight") = 0);

    py::class_<DistanceReport>(m, "DistanceReport")
        .def_readonly("lower", &DistanceReport::lower)
        .def_readonly("upper", &DistanceReport::upper)
        .def_readonly("exact", &DistanceReport::exact)
        .def_readonly("found", &DistanceReport::found)
        .def_readonly("block", &DistanceReport::block)
        .def_readonly("witness", &DistanceReport::witness)
        .def_readonly("words", &DistanceReport::words)
        .def_readonly("method", &DistanceReport::method);

    m.def("min_distance_enum", &min_distance_enum, py::arg("code"), py::arg("threads") = 1,
          py::arg("budget") = u64(1) << 26);
    m.def("min_distance_low_weight", &min_distance_low_weight, py::arg("code"),
          py::arg("w_max"), py::arg("budget") = u64(1000000000));
    m.def("block_distance_at_least", &block_distance_at_least, py::arg("code"), py::arg("l"),
          py::arg("delta"), py::arg("budget") = u64(100000000));

    py::class_<ProjectionSpec>(m, "ProjectionSpec")
        .def_static("row", &ProjectionSpec::row)
        .def_static("col", &ProjectionSpec::col)
        .def_static("entries", &ProjectionSpec::entries)
        .def_static("psi", &ProjectionSpec::psi)
        .def_static("psi_pi", &ProjectionSpec::psi_pi);

    py::class_<EvalCode>(m, "EvalCode")
        .def_readonly("code", &EvalCode::code)
        .def_readonly("root", &EvalCode::root)
        .def_readonly("m", &EvalCode::m)
        .def_readonly("points", &EvalCode::points)
        .def_readonly("k", &EvalCode::k)
        .def_readonly("l", &EvalCode::l)
        .def_readonly("full_points", &EvalCode::full_points);

    m.def(
        "eval_code_build",
        [](const Field& F, u32 l, const Mat& root, u32 k, u32 points,
           const ProjectionSpec& proj) {
            return eval_code_build(make_eval_spec(F, l, root, k, points, proj));
        },
        py::arg("field"), py::arg("l"), py::arg("root"), py::arg("k"), py::arg("points") = 0,
        py::arg("proj") = ProjectionSpec::psi());
    m.def(
        "eval_code_shortened",
        [](const Field& F, u32 l, const Mat& root, u32 k, u32 points,
           const ProjectionSpec& proj) {
            return eval_code_shortened(make_eval_spec(F, l, root, k, 0, proj), points);
        },
        py::arg("field"), py::arg("l"), py::arg("root"), py::arg("k"), py::arg("points"),
        py::arg("proj") = ProjectionSpec::psi());
    m.def("mds_like_bound_check", &mds_like_bound_check, py::arg("code"),
          py::arg("budget") = u64(1) << 26);
    m.def("matrix_minimal_polynomial",
          [](const Mat& A) { return matrix_minimal_polynomial(A).coeffs(); });

    m.def(
        "add_block_errors",
        [](const Field& F, const std::vector<u32>& word, u32 l, u32 w, u64 seed) {
            std::mt19937_64 rng(seed);
            return add_block_errors(F, word, l, w, rng);
        },
        py::arg("field"), py::arg("word"), py::arg("l"), py::arg("w"), py::arg("seed"));

    py::class_<CriterionResult>(m, "CriterionResult")
        .def_readonly("id", &CriterionResult::id)
        .def_readonly("name", &CriterionResult::name)
        .def_readonly("passed", &CriterionResult::pass)
        .def_readonly("detail", &CriterionResult::detail)
        .def_readonly("elapsed_ms", &CriterionResult::elapsed_ms);

    m.def(
        "run_reference_suite",
        [](u32 threads, u32 only, bool mutation_control) {
            std::ostringstream log;
            std::vector<CriterionResult> rs =
                run_reference_suite(log, threads, only, mutation_control);
            return py::make_tuple(rs, log.str());
        },
        py::arg("threads") = 1, py::arg("only") = 0, py::arg("mutation_control") = false);
}
