#include "tqnet/io.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace tqnet {

namespace {

using json = nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

double round_sig(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    double mag = std::pow(10.0, digits - 1 - std::floor(std::log10(std::abs(x))));
    return std::round(x * mag) / mag;
}

json time_to_json(Time t) {
    if (t == kForever) return "inf";
    return t;
}

Time time_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kForever;
        throw ParseError("bad time value '" + j.get<std::string>() + "'");
    }
    if (!j.is_number_integer()) throw ParseError("time points must be integers");
    return j.get<Time>();
}

json value_to_json(const Value& v) {
    if (const bool* b = std::get_if<bool>(&v)) return *b;
    if (const Geodesic* g = std::get_if<Geodesic>(&v)) {
        json d = g->dist == Geodesic::kUnreachable ? json("inf") : json(g->dist);
        return json::array({d, g->count});
    }
    double x = std::get<double>(v);
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == std::floor(x) && std::abs(x) < 9.0e15) return static_cast<std::int64_t>(x);
    return round_sig(x, 6);
}

Value value_from_json(const json& j) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_array()) {
        if (j.size() != 2) throw ParseError("geodetic value must be a [d, n] pair");
        std::uint64_t d = j[0].is_string() ? Geodesic::kUnreachable : j[0].get<std::uint64_t>();
        return Geodesic{d, j[1].get<std::uint64_t>()};
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return kInf;
        if (s == "-inf") return -kInf;
        throw ParseError("bad value '" + s + "'");
    }
    if (!j.is_number()) throw ParseError("triple value must be a number, bool or pair");
    return j.get<double>();
}

json tq_to_json(const TemporalQuantity& a) {
    json out = json::array();
    for (const Triple& t : a)
        out.push_back(json::array({time_to_json(t.start), time_to_json(t.finish), value_to_json(t.value)}));
    return out;
}

TemporalQuantity tq_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of triples");
    TemporalQuantity a;
    a.reserve(j.size());
    for (const json& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw ParseError(std::string(what) + " triples must be [s, f, v]");
        a.push_back({time_from_json(t[0]), time_from_json(t[1]), value_from_json(t[2])});
    }
    return a;
}

/// Sorts and standardizes a loaded quantity; notes a warning when the input
/// was not already canonical.
TemporalQuantity normalize_loaded(TemporalQuantity a, const std::string& what,
                                  std::vector<std::string>* warnings) {
    TemporalQuantity original = a;
    std::stable_sort(a.begin(), a.end(),
                     [](const Triple& x, const Triple& y) { return x.start < y.start; });
    TemporalQuantity std_form;
    try {
        std_form = standardize(Semiring::combinatorial(), a);
    } catch (const MalformedQuantityError& e) {
        throw ParseError(what + ": " + e.what());
    }
    if (warnings && std_form != original)
        warnings->push_back("warning: " + what + " was sorted and standardized on load");
    return std_form;
}

void check_horizon(const TemporalQuantity& a, const TimeHorizon& h, const std::string& what) {
    for (const Triple& t : a) {
        if (t.start < h.t_min || (t.finish != kForever && t.finish > h.t_max))
            throw ParseError(what + ": triple [" + to_string(t.start) + ", " + to_string(t.finish) +
                             ") lies outside the time horizon");
    }
}

json parsed(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

TimeHorizon horizon_from_json(const json& j) {
    if (!j.contains("time")) throw ParseError("missing 'time' object");
    TimeHorizon h{time_from_json(j["time"].at("min")), time_from_json(j["time"].at("max"))};
    if (h.t_min >= h.t_max) throw ParseError("time horizon must satisfy min < max");
    return h;
}

json vector_payload(const TemporalVector& v) {
    json entries = json::array();
    for (const auto& e : v.entries) entries.push_back(tq_to_json(e));
    return json{{"semiring", to_string(v.spec.kind())},
                {"time", {{"min", time_to_json(v.horizon.t_min)}, {"max", time_to_json(v.horizon.t_max)}}},
                {"entries", entries}};
}

Semiring spec_from_name(const std::string& name) {
    SemiringKind kind = semiring_kind_from_string(name);
    if (kind == SemiringKind::pathfinder) return Semiring::pathfinder(1.0, Semiring::kUnboundedWalks);
    switch (kind) {
        case SemiringKind::combinatorial: return Semiring::combinatorial();
        case SemiringKind::reachability: return Semiring::reachability();
        case SemiringKind::shortest_path: return Semiring::shortest_path();
        case SemiringKind::maxmin: return Semiring::maxmin();
        case SemiringKind::geodetic: return Semiring::geodetic();
        default: return Semiring::combinatorial();
    }
}

json network_to_json(const NetworkDocument& doc) {
    json nodes = json::array();
    for (const NodeRecord& nd : doc.nodes) {
        json n{{"id", nd.id}, {"label", nd.label}};
        if (nd.has_activity) n["activity"] = tq_to_json(nd.activity);
        nodes.push_back(n);
    }
    json links = json::array();
    for (const LinkRecord& l : doc.links) {
        links.push_back(json{
            {"from", l.from}, {"to", l.to}, {"directed", l.directed}, {"tq", tq_to_json(l.tq)}});
    }
    json j{{"time", {{"min", time_to_json(doc.horizon.t_min)}, {"max", time_to_json(doc.horizon.t_max)}}},
           {"nodes", nodes},
           {"links", links}};
    if (!doc.meta.empty()) j["meta"] = doc.meta;
    return j;
}

NetworkDocument network_from_json(const json& j, std::vector<std::string>* warnings) {
    if (j.contains("intervals") && j["intervals"].get<std::string>() != "[s,f)")
        throw ParseError("only half-open [s,f) intervals are supported");
    NetworkDocument doc;
    doc.horizon = horizon_from_json(j);
    if (!j.contains("nodes") || !j["nodes"].is_array()) throw ParseError("missing 'nodes' array");

    std::map<std::int64_t, int> remap;
    for (const json& n : j["nodes"]) {
        std::int64_t id = n.at("id").get<std::int64_t>();
        if (id < 1) throw ParseError("node ids must be >= 1");
        if (remap.count(id)) throw ParseError("duplicate node id " + std::to_string(id));
        NodeRecord rec;
        rec.id = static_cast<int>(doc.nodes.size()) + 1;
        rec.source_id = static_cast<int>(id);
        remap[id] = rec.id;
        rec.label = n.value("label", std::to_string(id));
        if (n.contains("activity")) {
            rec.has_activity = true;
            rec.activity = tq_binary(Semiring::combinatorial(),
                                     normalize_loaded(tq_from_json(n["activity"], "node activity"),
                                                      "activity of node " + rec.label, warnings));
            check_horizon(rec.activity, doc.horizon, "activity of node " + rec.label);
        }
        doc.nodes.push_back(std::move(rec));
    }

    for (const json& l : j.value("links", json::array())) {
        LinkRecord rec;
        std::int64_t from = l.at("from").get<std::int64_t>();
        std::int64_t to = l.at("to").get<std::int64_t>();
        if (!remap.count(from) || !remap.count(to))
            throw ParseError("link endpoint refers to an unknown node id");
        rec.from = remap[from];
        rec.to = remap[to];
        rec.directed = l.value("directed", true);
        std::string name = "link (" + std::to_string(from) + "," + std::to_string(to) + ")";
        rec.tq = normalize_loaded(tq_from_json(l.at("tq"), "link tq"), name, warnings);
        check_horizon(rec.tq, doc.horizon, name);

        for (int end : {rec.from, rec.to}) {
            const NodeRecord& nd = doc.nodes[end - 1];
            if (!nd.has_activity) continue;
            for (const Triple& t : rec.tq) {
                if (!tq_covers(nd.activity, t.start, std::min(t.finish, doc.horizon.t_max)))
                    throw ConsistencyError(name + " is active on [" + to_string(t.start) + ", " +
                                           to_string(t.finish) + ") outside the activity of node " +
                                           nd.label);
            }
        }
        doc.links.push_back(std::move(rec));
    }

    const json meta = j.value("meta", json::object());
    for (const auto& [k, v] : meta.items()) doc.meta[k] = v.get<std::string>();
    return doc;
}

}  // namespace

std::string to_string(ResultKind kind) {
    switch (kind) {
        case ResultKind::vector: return "vector";
        case ResultKind::partition: return "partition";
        case ResultKind::matrix: return "matrix";
        case ResultKind::quantity: return "quantity";
        case ResultKind::skeleton: return "skeleton";
    }
    throw InvalidValueError("unknown result kind");
}

NetworkDocument load_network(std::istream& in, std::vector<std::string>* warnings) {
    return network_from_json(parsed(in), warnings);
}

NetworkDocument load_network_from_string(const std::string& text,
                                         std::vector<std::string>* warnings) {
    std::istringstream in(text);
    return load_network(in, warnings);
}

bool is_event_table(const std::string& text) {
    try {
        std::istringstream in(text);
        return parsed(in).contains("events");
    } catch (const ParseError&) {
        return false;
    }
}

EventTable load_event_table(std::istream& in) {
    json j = parsed(in);
    if (!j.contains("events")) throw ParseError("missing 'events' array");
    TimeHorizon h = horizon_from_json(j);
    EventTable table;
    table.first = h.t_min;
    table.last = h.t_max - 1;

    std::map<std::int64_t, int> remap;
    for (const json& n : j.value("nodes", json::array())) {
        std::int64_t id = n.at("id").get<std::int64_t>();
        if (remap.count(id)) throw ParseError("duplicate participant id " + std::to_string(id));
        remap[id] = static_cast<int>(remap.size()) + 1;
        table.labels.push_back(n.value("label", std::to_string(id)));
    }
    table.participant_count = static_cast<int>(remap.size());

    for (const json& e : j["events"]) {
        Event ev;
        ev.id = e.value("id", std::to_string(table.events.size() + 1));
        ev.date = time_from_json(e.at("date"));
        if (ev.date < table.first || ev.date > table.last)
            throw ParseError("event '" + ev.id + "' dated outside the time horizon");
        for (const json& p : e.at("participants")) {
            std::int64_t id = p.get<std::int64_t>();
            if (!remap.count(id)) throw ParseError("event participant refers to an unknown node id");
            ev.participants.push_back(remap[id]);
        }
        table.events.push_back(std::move(ev));
    }
    return table;
}

EventTable load_event_table_from_string(const std::string& text) {
    std::istringstream in(text);
    return load_event_table(in);
}

void save_network(const NetworkDocument& doc, std::ostream& out) {
    out << network_to_json(doc).dump(2) << "\n";
}

void save_result(const ResultDocument& r, std::ostream& out) {
    json j;
    j["kind"] = to_string(r.kind);
    if (!r.labels.empty()) j["labels"] = r.labels;
    switch (r.kind) {
        case ResultKind::vector: j["payload"] = vector_payload(r.vec); break;
        case ResultKind::partition: {
            json entries = json::array();
            for (const auto& e : r.part.entries) entries.push_back(tq_to_json(e));
            j["payload"] = json{{"time",
                                 {{"min", time_to_json(r.part.horizon.t_min)},
                                  {"max", time_to_json(r.part.horizon.t_max)}}},
                                {"entries", entries}};
            break;
        }
        case ResultKind::matrix: {
            const TemporalMatrix& m = *r.mat;
            json rows = json::array();
            for (int u = 0; u < m.n(); ++u) {
                json row = json::array();
                for (int v = 0; v < m.n(); ++v) row.push_back(tq_to_json(m.at(u, v)));
                rows.push_back(row);
            }
            j["payload"] = json{{"n", m.n()},
                                {"semiring", to_string(m.spec().kind())},
                                {"time",
                                 {{"min", time_to_json(m.horizon().t_min)},
                                  {"max", time_to_json(m.horizon().t_max)}}},
                                {"entries", rows}};
            break;
        }
        case ResultKind::quantity: j["payload"] = tq_to_json(r.quantity); break;
        case ResultKind::skeleton: j["payload"] = network_to_json(*r.skeleton); break;
    }
    j["provenance"] = json{{"command", r.provenance.command},
                           {"input", r.provenance.input_digest},
                           {"parameters", r.provenance.parameters},
                           {"seed", r.provenance.seed}};
    out << j.dump(2) << "\n";
}

ResultDocument load_result(std::istream& in) {
    json j = parsed(in);
    ResultDocument r;
    const std::string kind = j.at("kind").get<std::string>();
    if (j.contains("labels")) r.labels = j["labels"].get<std::vector<std::string>>();
    const json& p = j.at("payload");
    if (kind == "vector") {
        r.kind = ResultKind::vector;
        r.vec.spec = spec_from_name(p.at("semiring").get<std::string>());
        r.vec.horizon = {time_from_json(p["time"]["min"]), time_from_json(p["time"]["max"])};
        for (const json& e : p.at("entries")) r.vec.entries.push_back(tq_from_json(e, "entry"));
    } else if (kind == "partition") {
        r.kind = ResultKind::partition;
        r.part.horizon = {time_from_json(p["time"]["min"]), time_from_json(p["time"]["max"])};
        for (const json& e : p.at("entries")) r.part.entries.push_back(tq_from_json(e, "entry"));
    } else if (kind == "matrix") {
        r.kind = ResultKind::matrix;
        TemporalMatrix m(p.at("n").get<int>(), spec_from_name(p.at("semiring").get<std::string>()),
                         {time_from_json(p["time"]["min"]), time_from_json(p["time"]["max"])});
        int u = 0;
        for (const json& row : p.at("entries")) {
            int v = 0;
            for (const json& cell : row) m.set(u, v++, tq_from_json(cell, "entry"));
            ++u;
        }
        r.mat = std::move(m);
    } else if (kind == "quantity") {
        r.kind = ResultKind::quantity;
        r.quantity = tq_from_json(p, "quantity");
    } else if (kind == "skeleton") {
        r.kind = ResultKind::skeleton;
        r.skeleton = network_from_json(p, nullptr);
    } else {
        throw ParseError("unknown result kind '" + kind + "'");
    }
    const json& prov = j.at("provenance");
    r.provenance.command = prov.value("command", "");
    r.provenance.input_digest = prov.value("input", "");
    r.provenance.seed = prov.value("seed", kDefaultSeed);
    const json params = prov.value("parameters", json::object());
    for (const auto& [k, v] : params.items()) r.provenance.parameters[k] = v.get<std::string>();
    return r;
}

void export_chart_data(const TemporalVector& v, std::ostream& out) {
    out << "node,start,finish,value\n";
    for (int i = 0; i < v.n(); ++i) {
        for (const Triple& t : v.entries[i]) {
            out << (i + 1) << "," << to_string(t.start) << "," << to_string(t.finish) << ","
                << to_string(t.value) << "\n";
        }
    }
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace tqnet
