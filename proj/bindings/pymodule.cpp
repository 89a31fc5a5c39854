#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tqnet/analysis.hpp"
#include "tqnet/io.hpp"

namespace py = pybind11;
using namespace tqnet;

namespace {

Semiring semiring_by_name(const std::string& name, double r, std::uint64_t q) {
    switch (semiring_kind_from_string(name)) {
        case SemiringKind::combinatorial: return Semiring::combinatorial();
        case SemiringKind::reachability: return Semiring::reachability();
        case SemiringKind::shortest_path: return Semiring::shortest_path();
        case SemiringKind::maxmin: return Semiring::maxmin();
        case SemiringKind::geodetic: return Semiring::geodetic();
        case SemiringKind::pathfinder: return Semiring::pathfinder(r, q);
    }
    throw InvalidValueError("unknown semiring name '" + name + "'");
}

py::object value_to_py(const Value& v) {
    if (const bool* b = std::get_if<bool>(&v)) return py::bool_(*b);
    if (const Geodesic* g = std::get_if<Geodesic>(&v)) {
        py::object d = g->dist == Geodesic::kUnreachable
                           ? py::float_(std::numeric_limits<double>::infinity())
                           : py::object(py::int_(g->dist));
        return py::make_tuple(d, py::int_(g->count));
    }
    return py::float_(std::get<double>(v));
}

Value value_from_py(const Semiring& sr, py::handle h) {
    if (sr.kind() == SemiringKind::reachability) return h.cast<bool>();
    if (sr.kind() == SemiringKind::geodetic) {
        auto pair = h.cast<std::pair<py::object, std::uint64_t>>();
        double d = pair.first.cast<double>();
        std::uint64_t dist = std::isinf(d) ? Geodesic::kUnreachable
                                           : static_cast<std::uint64_t>(d);
        return Geodesic{dist, pair.second};
    }
    return h.cast<double>();
}

py::object time_to_py(Time t) {
    if (t == kForever) return py::float_(std::numeric_limits<double>::infinity());
    return py::int_(t);
}

Time time_from_py(py::handle h) {
    double d = h.cast<double>();
    if (std::isinf(d)) return kForever;
    return h.cast<Time>();
}

py::list tq_to_py(const TemporalQuantity& a) {
    py::list out;
    for (const Triple& t : a)
        out.append(py::make_tuple(time_to_py(t.start), time_to_py(t.finish),
                                  value_to_py(t.value)));
    return out;
}

TemporalQuantity tq_from_py(const Semiring& sr, py::handle seq) {
    TemporalQuantity a;
    for (py::handle item : seq) {
        auto t = item.cast<py::sequence>();
        if (py::len(t) != 3) throw MalformedQuantityError("triples must be (s, f, v)");
        a.push_back({time_from_py(t[0]), time_from_py(t[1]), value_from_py(sr, t[2])});
    }
    return standardize(sr, a);
}

py::list vector_to_py(const TemporalVector& v) {
    py::list out;
    for (const auto& e : v.entries) out.append(tq_to_py(e));
    return out;
}

py::list partition_to_py(const TemporalPartition& p) {
    py::list out;
    for (const auto& e : p.entries) out.append(tq_to_py(e));
    return out;
}

py::dict matrix_to_py(const TemporalMatrix& m) {
    py::list rows;
    for (int u = 0; u < m.n(); ++u) {
        py::list row;
        for (int v = 0; v < m.n(); ++v) row.append(tq_to_py(m.at(u, v)));
        rows.append(row);
    }
    py::dict out;
    out["n"] = m.n();
    out["semiring"] = to_string(m.spec().kind());
    out["entries"] = rows;
    return out;
}

Direction direction_from(const std::string& s) {
    if (s == "in") return Direction::in;
    if (s == "out") return Direction::out;
    throw InvalidInputError("direction must be 'in' or 'out'");
}

/// Thin holder pairing a parsed document with its adjacency matrix.
struct Network {
    NetworkDocument doc;
    TemporalMatrix matrix;

    explicit Network(NetworkDocument d) : doc(std::move(d)), matrix(matrix_from_network(doc)) {}
};

}  // namespace

PYBIND11_MODULE(_tqnet, m) {
    m.doc() = "temporal network analysis with temporal quantities";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ValueError);

    m.def(
        "tq_sum",
        [](py::sequence a, py::sequence b, const std::string& semiring, double r,
           std::uint64_t q) {
            Semiring sr = semiring_by_name(semiring, r, q);
            return tq_to_py(tq_sum(sr, tq_from_py(sr, a), tq_from_py(sr, b)));
        },
        py::arg("a"), py::arg("b"), py::arg("semiring") = "combinatorial", py::arg("r") = 1.0,
        py::arg("q") = Semiring::kUnboundedWalks);
    m.def(
        "tq_prod",
        [](py::sequence a, py::sequence b, const std::string& semiring, double r,
           std::uint64_t q) {
            Semiring sr = semiring_by_name(semiring, r, q);
            return tq_to_py(tq_prod(sr, tq_from_py(sr, a), tq_from_py(sr, b)));
        },
        py::arg("a"), py::arg("b"), py::arg("semiring") = "combinatorial", py::arg("r") = 1.0,
        py::arg("q") = Semiring::kUnboundedWalks);
    m.def(
        "tq_total",
        [](py::sequence a) {
            Semiring sr = Semiring::combinatorial();
            return tq_total(tq_from_py(sr, a));
        },
        py::arg("a"));
    m.def(
        "standardize",
        [](py::sequence a, const std::string& semiring) {
            Semiring sr = semiring_by_name(semiring, 1.0, Semiring::kUnboundedWalks);
            return tq_to_py(tq_from_py(sr, a));
        },
        py::arg("a"), py::arg("semiring") = "combinatorial");

    py::class_<Network>(m, "Network")
        .def_static("from_json",
                    [](const std::string& text) {
                        return Network(load_network_from_string(text));
                    })
        .def_property_readonly("n", [](const Network& net) { return net.doc.node_count(); })
        .def_property_readonly("labels",
                               [](const Network& net) {
                                   std::vector<std::string> out;
                                   for (const NodeRecord& nd : net.doc.nodes)
                                       out.push_back(nd.label);
                                   return out;
                               })
        .def_property_readonly("horizon",
                               [](const Network& net) {
                                   return py::make_tuple(net.doc.horizon.t_min,
                                                         net.doc.horizon.t_max);
                               })
        .def("degrees",
             [](const Network& net, const std::string& direction) {
                 return vector_to_py(degrees(net.matrix, direction_from(direction)));
             },
             py::arg("direction") = "out")
        .def("activity",
             [](const Network& net, const std::vector<int>& v1, const std::vector<int>& v2) {
                 return tq_to_py(activity(net.matrix, v1, v2));
             },
             py::arg("v1"), py::arg("v2"))
        .def("clus_coef",
             [](const Network& net, int type) { return vector_to_py(clus_coef(net.matrix, type)); },
             py::arg("type") = 1)
        .def("reach_degrees",
             [](const Network& net, const std::string& direction) {
                 return vector_to_py(reach_degrees(net.matrix, direction_from(direction)));
             },
             py::arg("direction") = "out")
        .def("weak_connectivity",
             [](const Network& net, std::uint64_t seed) {
                 return partition_to_py(weak_connectivity(net.matrix, seed).partition);
             },
             py::arg("seed") = kDefaultSeed)
        .def("strong_connectivity",
             [](const Network& net, std::uint64_t seed) {
                 return partition_to_py(strong_connectivity(net.matrix, seed).partition);
             },
             py::arg("seed") = kDefaultSeed)
        .def("closeness",
             [](const Network& net, int type) { return vector_to_py(closeness(net.matrix, type)); },
             py::arg("type") = 1)
        .def("betweenness",
             [](const Network& net) { return vector_to_py(betweenness(net.matrix)); })
        .def("path_finder",
             [](const Network& net, double r, std::uint64_t q) {
                 return matrix_to_py(path_finder(net.matrix, r, q));
             },
             py::arg("r") = 1.0, py::arg("q") = Semiring::kUnboundedWalks)
        .def("attraction",
             [](const Network& net) { return vector_to_py(attraction(net.matrix)); })
        .def("closure",
             [](const Network& net, const std::string& semiring, bool strict, double r,
                std::uint64_t q) {
                 Semiring sr = semiring_by_name(semiring, r, q);
                 TemporalMatrix A = net.matrix;
                 switch (sr.kind()) {
                     case SemiringKind::combinatorial: break;
                     case SemiringKind::reachability:
                         A = mat_with_value(A, sr, true);
                         break;
                     case SemiringKind::geodetic:
                         A = mat_with_value(A, sr, Geodesic{1, 1});
                         break;
                     default: A = mat_cast_scalar(A, sr); break;
                 }
                 return matrix_to_py(mat_closure(A, strict));
             },
             py::arg("semiring") = "reachability", py::arg("strict") = true, py::arg("r") = 1.0,
             py::arg("q") = Semiring::kUnboundedWalks)
        .def("to_json", [](const Network& net) {
            std::ostringstream out;
            save_network(net.doc, out);
            return out.str();
        });

    m.def("co_occurrence",
          [](const std::string& text, const std::string& mode) {
              EventTable table = load_event_table_from_string(text);
              return matrix_to_py(co_occurrence(table, mode == "cumulative"
                                                           ? CoOccurrenceMode::cumulative
                                                           : CoOccurrenceMode::instantaneous));
          },
          py::arg("text"), py::arg("mode") = "instantaneous");

    m.attr("FOREVER") = py::float_(std::numeric_limits<double>::infinity());
    m.attr("DEFAULT_SEED") = py::int_(kDefaultSeed);
}
