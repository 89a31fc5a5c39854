#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tqnet/analysis.hpp"
#include "tqnet/io.hpp"

namespace {

using namespace tqnet;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitCompute = 3;

struct Options {
    std::string input;
    std::string output;
    std::string chart;
    std::string semiring = "reachability";
    std::string direction = "out";
    std::string nodes;
    std::string r = "1";
    std::string q = "inf";
    int type = 1;
    bool strict = true;
    std::uint64_t seed = kDefaultSeed;
};

void add_io_options(CLI::App* sub, Options& opt) {
    sub->add_option("--input", opt.input, "input tjson document (default: stdin)");
    sub->add_option("--output", opt.output, "output path (default: stdout)");
}

std::string read_input(const Options& opt) {
    std::ostringstream buf;
    if (opt.input.empty() || opt.input == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(opt.input, std::ios::binary);
        if (!in) throw ParseError("cannot open input file '" + opt.input + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.output.empty() || opt.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw UnsupportedError("cannot open output file '" + opt.output + "'");
    out << text;
}

double parse_r(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        throw InvalidInputError("bad value for --r: '" + s + "'");
    }
}

std::uint64_t parse_q(const std::string& s) {
    if (s == "inf") return Semiring::kUnboundedWalks;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw InvalidInputError("bad value for --q: '" + s + "'");
    }
}

std::vector<int> parse_node_list(const std::string& text, const NetworkDocument& doc) {
    if (text.empty()) {
        std::vector<int> all(doc.nodes.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        return all;
    }
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        int source = std::stoi(item);
        int idx = -1;
        for (const NodeRecord& n : doc.nodes)
            if (n.source_id == source) idx = n.id - 1;
        if (idx < 0) throw InvalidInputError("unknown node id " + item + " in --nodes");
        out.push_back(idx);
    }
    return out;
}

Direction parse_direction(const std::string& s) {
    if (s == "in") return Direction::in;
    if (s == "out") return Direction::out;
    throw InvalidInputError("direction must be 'in' or 'out'");
}

std::vector<std::string> node_labels(const NetworkDocument& doc) {
    std::vector<std::string> out;
    out.reserve(doc.nodes.size());
    for (const NodeRecord& n : doc.nodes) out.push_back(n.label);
    return out;
}

/// Casts the combinatorial network matrix into the value domain the chosen
/// semiring expects.
TemporalMatrix matrix_for_semiring(const TemporalMatrix& A, const Semiring& sr) {
    switch (sr.kind()) {
        case SemiringKind::combinatorial: return A;
        case SemiringKind::reachability: return mat_with_value(A, sr, true);
        case SemiringKind::geodetic: return mat_with_value(A, sr, Geodesic{1, 1});
        default: return mat_cast_scalar(A, sr);
    }
}

NetworkDocument skeleton_document(const NetworkDocument& doc, const TemporalMatrix& PF) {
    NetworkDocument out = doc;
    out.links.clear();
    for (int u = 0; u < PF.n(); ++u) {
        for (int v = 0; v < PF.n(); ++v) {
            if (PF.at(u, v).empty()) continue;
            out.links.push_back({u + 1, v + 1, true, PF.at(u, v)});
        }
    }
    return out;
}

int run(const std::string& command, Options& opt) {
    if (const char* env_seed = std::getenv("TQNET_SEED")) opt.seed = std::stoull(env_seed);

    std::string bytes;
    NetworkDocument doc;
    EventTable table;
    std::vector<std::string> warnings;
    try {
        bytes = read_input(opt);
        if (command == "cooccur") {
            table = load_event_table_from_string(bytes);
        } else {
            doc = load_network_from_string(bytes, &warnings);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    for (const std::string& w : warnings) std::cerr << w << "\n";

    try {
        ResultDocument result;
        result.provenance.command = command;
        result.provenance.input_digest = digest(bytes);
        result.provenance.seed = opt.seed;
        auto& params = result.provenance.parameters;

        if (command == "info") {
            std::ostringstream os;
            os << "nodes: " << doc.node_count() << "\n"
               << "links: " << doc.links.size() << "\n"
               << "time: [" << to_string(doc.horizon.t_min) << ", " << to_string(doc.horizon.t_max)
               << ")\n";
            for (const auto& [k, v] : doc.meta) os << "meta: " << k << " = " << v << "\n";
            write_output(opt, os.str());
            return kExitOk;
        }

        TemporalMatrix A = command == "cooccur"
                               ? TemporalMatrix(0, Semiring::combinatorial(), {0, 1})
                               : matrix_from_network(doc);

        if (command == "degrees" || command == "reach") {
            params["direction"] = opt.direction;
            Direction dir = parse_direction(opt.direction);
            result.kind = ResultKind::vector;
            result.labels = node_labels(doc);
            result.vec = command == "degrees" ? degrees(A, dir) : reach_degrees(A, dir);
        } else if (command == "activity") {
            params["nodes"] = opt.nodes;
            std::string left = opt.nodes, right = opt.nodes;
            if (auto pos = opt.nodes.find(':'); pos != std::string::npos) {
                left = opt.nodes.substr(0, pos);
                right = opt.nodes.substr(pos + 1);
            }
            result.kind = ResultKind::quantity;
            result.quantity = activity(A, parse_node_list(left, doc), parse_node_list(right, doc));
        } else if (command == "cooccur") {
            params["type"] = std::to_string(opt.type);
            if (opt.type < 1 || opt.type > 2)
                throw InvalidInputError("cooccur type must be 1 (instantaneous) or 2 (cumulative)");
            result.kind = ResultKind::matrix;
            result.labels = table.labels;
            result.mat = co_occurrence(table, opt.type == 1 ? CoOccurrenceMode::instantaneous
                                                            : CoOccurrenceMode::cumulative);
        } else if (command == "cluscoef") {
            params["type"] = std::to_string(opt.type);
            result.kind = ResultKind::vector;
            result.labels = node_labels(doc);
            result.vec = clus_coef(A, opt.type);
        } else if (command == "closure") {
            params["semiring"] = opt.semiring;
            params["strict"] = opt.strict ? "true" : "false";
            Semiring sr = semiring_kind_from_string(opt.semiring) == SemiringKind::pathfinder
                              ? Semiring::pathfinder(parse_r(opt.r), parse_q(opt.q))
                              : [&] {
                                    switch (semiring_kind_from_string(opt.semiring)) {
                                        case SemiringKind::combinatorial: return Semiring::combinatorial();
                                        case SemiringKind::reachability: return Semiring::reachability();
                                        case SemiringKind::shortest_path: return Semiring::shortest_path();
                                        case SemiringKind::maxmin: return Semiring::maxmin();
                                        default: return Semiring::geodetic();
                                    }
                                }();
            result.kind = ResultKind::matrix;
            result.labels = node_labels(doc);
            result.mat = mat_closure(matrix_for_semiring(A, sr), opt.strict);
        } else if (command == "weakconn" || command == "strongconn") {
            params["seed"] = std::to_string(opt.seed);
            ConnectivityResult conn = command == "weakconn" ? weak_connectivity(A, opt.seed)
                                                            : strong_connectivity(A, opt.seed);
            result.kind = ResultKind::partition;
            result.labels = node_labels(doc);
            result.part = conn.partition;
        } else if (command == "closeness") {
            params["type"] = std::to_string(opt.type);
            result.kind = ResultKind::vector;
            result.labels = node_labels(doc);
            result.vec = closeness(A, opt.type);
        } else if (command == "betweenness") {
            result.kind = ResultKind::vector;
            result.labels = node_labels(doc);
            result.vec = betweenness(A);
        } else if (command == "pathfinder") {
            params["r"] = opt.r;
            params["q"] = opt.q;
            result.kind = ResultKind::skeleton;
            result.skeleton = skeleton_document(doc, path_finder(A, parse_r(opt.r), parse_q(opt.q)));
        } else if (command == "attraction") {
            result.kind = ResultKind::vector;
            result.labels = node_labels(doc);
            result.vec = attraction(A);
        } else if (command == "total") {
            // per node: aggregated activity act({u},V) + act(V,{u})
            result.kind = ResultKind::vector;
            result.labels = node_labels(doc);
            std::vector<int> all = parse_node_list("", doc);
            TemporalVector v{A.spec(), A.horizon(), {}};
            for (int u = 0; u < A.n(); ++u) {
                TemporalQuantity q = tq_sum(A.spec(), activity(A, {u}, all), activity(A, all, {u}));
                v.entries.push_back(std::move(q));
            }
            result.vec = std::move(v);
        } else {
            std::cerr << "error: usage: unknown subcommand '" << command << "'\n";
            return kExitUsage;
        }

        std::ostringstream os;
        save_result(result, os);
        write_output(opt, os.str());

        if (!opt.chart.empty() && result.kind == ResultKind::vector) {
            std::ofstream chart(opt.chart, std::ios::binary);
            if (!chart) throw UnsupportedError("cannot open chart file '" + opt.chart + "'");
            export_chart_data(result.vec, chart);
        }
        return kExitOk;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ConsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tqnet - temporal network analysis with temporal quantities"};
    app.require_subcommand(1);
    Options opt;

    const std::vector<std::string> commands = {"degrees",    "activity",   "cooccur",  "cluscoef",
                                               "closure",    "reach",      "weakconn", "strongconn",
                                               "closeness",  "betweenness", "pathfinder",
                                               "attraction", "total",      "info"};
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        add_io_options(sub, opt);
        sub->add_option("--semiring", opt.semiring, "value domain for closure");
        sub->add_option("--type", opt.type, "measure variant");
        sub->add_option("--r", opt.r, "pathfinder r parameter (number or 'inf')");
        sub->add_option("--q", opt.q, "pathfinder walk-length cap (integer or 'inf')");
        sub->add_option("--strict", opt.strict, "strict closure (exclude the empty walk)");
        sub->add_option("--seed", opt.seed, "shuffle seed for partition labeling");
        sub->add_option("--direction", opt.direction, "in or out");
        sub->add_option("--nodes", opt.nodes, "node group(s), e.g. '1,2' or '1,2:3'");
        sub->add_option("--chart", opt.chart, "write step-function chart rows to this path");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    }

    return run(app.get_subcommands().front()->get_name(), opt);
}
