#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cmhecke/dimension.hpp"
#include "cmhecke/report.hpp"
#include "cmhecke/rootnum.hpp"

namespace py = pybind11;
using namespace cmhecke;

namespace {

NumericsConfig make_cfg(double tol, long long max_terms) {
    NumericsConfig cfg;
    cfg.target_abs_error = tol;
    cfg.max_terms = max_terms;
    return cfg;
}

py::dict report_dict(const CentralReport& c) {
    py::dict d;
    d["D"] = c.D;
    d["spec"] = c.spec_id;
    d["W"] = c.W;
    d["L1"] = c.L1;
    d["Lambda1"] = c.Lambda1;
    d["dLambda"] = c.LambdaPrime1 ? py::object(py::float_(*c.LambdaPrime1)) : py::none();
    d["R"] = c.R;
    d["C1"] = c.C1;
    d["C2"] = c.C2;
    d["ord"] = c.ord;
    d["bounds_ok"] = c.bounds_ok;
    return d;
}

const char* dim_tag_name(DimensionTag t) {
    switch (t) {
        case DimensionTag::EqualsH: return "h";
        case DimensionTag::TwiceH: return "2h";
        case DimensionTag::ExceedsHUnknown: return "unknown";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_cmhecke, m) {
    m.doc() = "Simplest Hecke characters of imaginary quadratic fields: root numbers, "
              "central L-values and derivatives";

    py::register_exception<NotFundamentalError>(m, "NotFundamentalError");
    py::register_exception<SpecialDiscriminantError>(m, "SpecialDiscriminantError");
    py::register_exception<NotCoprimeError>(m, "NotCoprimeError");
    py::register_exception<ConvergenceError>(m, "ConvergenceError");

    py::class_<FieldData>(m, "FieldData")
        .def_readonly("D", &FieldData::D)
        .def_property_readonly("case", [](const FieldData& K) { return case_name(K.two_case); })
        .def_property_readonly("d", [](const FieldData& K) {
            return K.d ? py::object(py::int_(*K.d)) : py::none();
        })
        .def_readonly("h", &FieldData::h)
        .def_readonly("r", &FieldData::genus_rank)
        .def_readonly("B", &FieldData::B)
        .def_readonly("prime_divisors", &FieldData::prime_divisors)
        .def_readonly("special", &FieldData::special)
        .def("__repr__", [](const FieldData& K) {
            return "<FieldData D=" + std::to_string(K.D) + " h=" + std::to_string(K.h) + ">";
        });

    py::class_<CharacterSpec>(m, "CharacterSpec")
        .def_readonly("id", &CharacterSpec::id)
        .def_readonly("order", &CharacterSpec::order)
        .def_property_readonly("field", [](const CharacterSpec& s) { return s.field; })
        .def("__repr__", [](const CharacterSpec& s) {
            return "<CharacterSpec D=" + std::to_string(s.field.D) + " " + s.id + ">";
        });

    m.def("kronecker", &kronecker, py::arg("a"), py::arg("n"));
    m.def("factorize", [](long long n) {
        std::vector<std::pair<long long, int>> out;
        for (const auto& f : factorize(n)) out.emplace_back(f.p, f.e);
        return out;
    });
    m.def("is_fundamental", &is_fundamental, py::arg("D"));
    m.def("reduced_forms", [](long long D) {
        std::vector<std::tuple<long long, long long, long long>> out;
        for (const auto& f : reduced_forms(D)) out.emplace_back(f.a, f.b, f.c);
        return out;
    });
    m.def("ideal_count", &ideal_count, py::arg("n"), py::arg("D"));
    m.def("build_field", &build_field, py::arg("D"));
    m.def("simplest_count", &simplest_count);
    m.def("simplest_characters", [](long long D) { return simplest_characters(build_field(D)); });
    m.def("conductor_exponents", [](const CharacterSpec& s) {
        std::map<long long, int> out = conductor_exponents(s);
        return out;
    });
    m.def(
        "eval_epsilon",
        [](const CharacterSpec& s, long long x, long long y) {
            return eval_epsilon(s, make_integer(s.field, x, y)).value();
        },
        py::arg("spec"), py::arg("x"), py::arg("y"),
        "eps at x + y sqrt(-d) (even D) or x + y (1+sqrt(-D))/2 (odd D)");
    m.def("eval_epsilon_p2_coset", [](const CharacterSpec& s, long long a, long long b) {
        return eval_epsilon_p2_coset(s, a, b).value();
    });
    m.def("classify_simplest", [](const CharacterSpec& s) {
        DimensionVerdict v = classify_simplest(s);
        return py::make_tuple(dim_tag_name(v.tag), v.scalar_restriction);
    });
    m.def("root_number", &root_number);
    m.def("chi_p2_value",
          [](const CharacterSpec& s) { return chi_p2_value(s).to_complex(*s.field.d); });
    m.def(
        "numeric_root_check",
        [](const CharacterSpec& s, double s0, double tol) {
            return numeric_root_check(s, s0, make_cfg(tol, 200'000'000));
        },
        py::arg("spec"), py::arg("s0") = 3.0, py::arg("tol") = 1e-10);
    m.def(
        "theta",
        [](double t, long long D, double tol) { return theta(t, build_field(D), make_cfg(tol, 200'000'000)); },
        py::arg("t"), py::arg("D"), py::arg("tol") = 1e-12);
    m.def(
        "eisenstein",
        [](double t, double s, long long D, double tol) {
            return eisenstein(t, s, build_field(D), make_cfg(tol, 200'000'000));
        },
        py::arg("t"), py::arg("s"), py::arg("D"), py::arg("tol") = 1e-10);
    m.def(
        "eisenstein_odd",
        [](double t, double s, long long D, double tol) {
            return eisenstein_odd(t, s, build_field(D), make_cfg(tol, 200'000'000));
        },
        py::arg("t"), py::arg("s"), py::arg("D"), py::arg("tol") = 1e-10);
    m.def(
        "partial_l_combined",
        [](double s, const std::string& cls, const CharacterSpec& spec, double tol) {
            ClassSlot slot = cls == "principal" ? ClassSlot::Principal : ClassSlot::P2;
            return partial_l_combined(s, slot, spec, make_cfg(tol, 200'000'000));
        },
        py::arg("s"), py::arg("cls"), py::arg("spec"), py::arg("tol") = 1e-10);
    m.def("central_value", [](const CharacterSpec& s, double tol) {
        return central_value(s, make_cfg(tol, 200'000'000));
    }, py::arg("spec"), py::arg("tol") = 1e-10);
    m.def("series_coeff_a", [](long long n, const CharacterSpec& s) { return series_coeff_a(n, s); });
    m.def("series_coeff_b",
          [](long long n, long long D) { return series_coeff_b(n, build_field(D)); });
    m.def("e1_over_x", &e1_over_x, py::arg("x"));
    m.def(
        "vanishing_order",
        [](const CharacterSpec& s, double tol) {
            return report_dict(vanishing_order(s, make_cfg(tol, 200'000'000)));
        },
        py::arg("spec"), py::arg("tol") = 1e-10);
    m.def(
        "analyze",
        [](long long D, double tol) {
            AnalysisRecord rec = analyze(D, make_cfg(tol, 200'000'000));
            py::dict d;
            d["D"] = rec.field.D;
            d["case"] = case_name(rec.field.two_case);
            d["h"] = rec.field.h;
            d["B"] = rec.field.B;
            d["n_simplest"] = rec.n_simplest;
            py::list chars;
            for (const auto& row : rec.characters) {
                py::dict cd;
                cd["spec"] = row.id;
                cd["order"] = row.order;
                cd["W"] = row.W;
                cd["ord"] = row.ord;
                cd["dim"] = dim_tag_name(row.dim.tag);
                if (row.central) cd["central"] = report_dict(*row.central);
                chars.append(cd);
            }
            d["characters"] = chars;
            return d;
        },
        py::arg("D"), py::arg("tol") = 1e-10);
    m.def("analyze_json", [](long long D, double tol) {
        return to_json(analyze(D, make_cfg(tol, 200'000'000)));
    }, py::arg("D"), py::arg("tol") = 1e-10);
}
