#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chomp3/errors.hpp"
#include "chomp3/oracle.hpp"
#include "chomp3/recurrence.hpp"
#include "chomp3/table_io.hpp"
#include "chomp3/verify.hpp"

namespace py = pybind11;
using namespace chomp3;

namespace {

FTable build(Value n_max, const std::string& engine, std::size_t memory_ceiling) {
    const ResourceLimits limits{memory_ceiling};
    if (engine == "sparse") return build_sparse(n_max, limits);
    if (engine == "reference") return build_reference(n_max, limits);
    throw py::value_error("engine must be 'sparse' or 'reference', got '" + engine + "'");
}

std::string export_table(const FTable& table, const std::string& format) {
    std::ostringstream out;
    write_table(out, table, parse_format(format));
    return out.str();
}

FTable import_table(const std::string& text, const std::string& format) {
    std::istringstream in(text);
    switch (parse_format(format)) {
        case ExportFormat::Csv:
            return read_csv(in);
        case ExportFormat::Jsonl:
            return read_jsonl(in);
        case ExportFormat::Runs:
            break;
    }
    throw FormatError("runs dumps cannot be imported");
}

std::vector<std::string> verify(const FTable& table, std::optional<Value> oracle_bound,
                                std::optional<Value> cubic_bound) {
    std::vector<std::string> lines;
    for (const auto& report : run_suite(table, SuiteBounds{oracle_bound, cubic_bound})) {
        lines.push_back(to_jsonl(report));
    }
    return lines;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Three-row Chomp: f(q,r) tables, P-positions and opening moves";

    py::register_exception<InvalidPosition>(m, "InvalidPosition", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<OutOfRange>(m, "OutOfRange", PyExc_IndexError);
    py::register_exception<ResourceExhausted>(m, "ResourceExhausted", PyExc_MemoryError);
    // The message carries the witness dump as well.
    static PyObject* violation =
        py::exception<TheoremViolation>(m, "TheoremViolation", PyExc_RuntimeError).ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const TheoremViolation& e) {
            PyErr_SetString(violation, (std::string(e.what()) + "\n" + e.dump()).c_str());
        }
    });

    py::class_<Position3>(m, "Position")
        .def(py::init<Length, Length, Length>(), py::arg("p"), py::arg("q"), py::arg("r"))
        .def_static("parse", &parse_position, py::arg("literal"))
        .def_property_readonly("p", &Position3::p)
        .def_property_readonly("q", &Position3::q)
        .def_property_readonly("r", &Position3::r)
        .def_property_readonly("squares", &Position3::squares)
        .def("__str__", &Position3::to_string)
        .def("__repr__", [](const Position3& pos) { return "Position(" + pos.to_string() + ")"; })
        .def("__eq__", [](const Position3& a, const Position3& b) { return a == b; })
        .def("__lt__", [](const Position3& a, const Position3& b) { return a < b; })
        .def("__hash__", [](const Position3& pos) { return std::hash<Position3>{}(pos); })
        .def("astuple",
             [](const Position3& pos) { return py::make_tuple(pos.p(), pos.q(), pos.r()); });

    py::class_<Move>(m, "Move")
        .def_readonly("row", &Move::row)
        .def_readonly("new_length", &Move::new_length)
        .def_readonly("result", &Move::result)
        .def_property_readonly("cut", &Move::cut)
        .def("__eq__", [](const Move& a, const Move& b) { return a == b; })
        .def("__repr__", [](const Move& mv) {
            return "Move(" + mv.cut() + " -> " + mv.result.to_string() + ")";
        });

    m.def("moves", &moves, py::arg("pos"));
    m.def("options", &options, py::arg("pos"));
    m.def("make_move", &make_move, py::arg("pos"), py::arg("row"), py::arg("new_length"));

    py::class_<OutcomeTable>(m, "OutcomeTable")
        .def_property_readonly("bound", &OutcomeTable::bound)
        .def("__len__", &OutcomeTable::size)
        .def("__contains__", &OutcomeTable::contains)
        .def(
            "outcome",
            [](const OutcomeTable& t, const Position3& pos) { return to_string(t.at(pos)); },
            py::arg("pos"))
        .def(
            "winning_moves",
            [](const OutcomeTable& t, const Position3& pos) {
                return winning_moves_bruteforce(pos, t);
            },
            py::arg("pos"));
    m.def(
        "solve", [](Length bound) { return solve(bound); }, py::arg("bound"),
        "Retrograde outcome table for every position with first row <= bound.");

    py::class_<FTable>(m, "Table")
        .def_property_readonly("n_max", &FTable::n_max)
        .def_property_readonly(
            "engine",
            [](const FTable& t) { return t.layout() == Layout::Dense ? "reference" : "sparse"; })
        .def("f", &FTable::f, py::arg("q"), py::arg("r"))
        .def("is_mex_cell", &FTable::is_mex_cell, py::arg("q"), py::arg("r"))
        .def(
            "column",
            [](const FTable& t, Value r) {
                std::vector<std::pair<Value, Value>> runs;
                t.for_each_run(r,
                               [&](const Run& run) { runs.emplace_back(run.q_start, run.value); });
                return runs;
            },
            py::arg("r"), "Runs (q_start, value) of column r.")
        .def_property_readonly("mex_cell_count", &FTable::mex_cell_count)
        .def_property_readonly("memory_bytes", &FTable::memory_bytes)
        .def("export", &export_table, py::arg("format") = "csv");

    m.def("build", &build, py::arg("n_max"), py::arg("engine") = "sparse",
          py::arg("memory_ceiling") = kDefaultMemoryCeiling, "f(q,r) for 0 <= r <= q <= n_max.",
          py::call_guard<py::gil_scoped_release>());
    m.def("import_table", &import_table, py::arg("text"), py::arg("format") = "csv");
    m.def("mex", [](const std::vector<Value>& values) { return mex(values); }, py::arg("values"));
    m.def(
        "blocked_sets",
        [](const FTable& t, Value q, Value r) {
            const BlockedSets b = blocked_sets(q, r, t);
            return py::make_tuple(b.row2, b.row3, b.all);
        },
        py::arg("table"), py::arg("q"), py::arg("r"), "(R, C, B) as sorted lists.");
    m.def(
        "outcome",
        [](const FTable& t, const Position3& pos) { return to_string(is_p_position(t, pos)); },
        py::arg("table"), py::arg("pos"));
    m.def("winning_moves", &winning_moves, py::arg("table"), py::arg("pos"));
    m.def("diagonal_set", &diagonal_set, py::arg("table"));
    m.def("row_start_set", &row_start_set, py::arg("table"));
    m.def(
        "opening_move",
        [](const FTable& t, Value n) {
            const OpeningMove om = unique_opening_move(t, n);
            py::dict d;
            d["n"] = om.n;
            d["kind"] = to_string(om.kind);
            d["parameter"] = om.parameter;
            d["target"] = om.target;
            d["move"] = om.move;
            return d;
        },
        py::arg("table"), py::arg("n"));
    m.def("verify_lines", &verify, py::arg("table"), py::arg("oracle_bound") = py::none(),
          py::arg("cubic_bound") = py::none(), py::call_guard<py::gil_scoped_release>());
}
