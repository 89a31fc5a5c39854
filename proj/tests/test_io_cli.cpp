#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tqnet/io.hpp"
#include "tqnet/tmatrix.hpp"

using namespace tqnet;

namespace {

#ifndef TQNET_CLI_PATH
#define TQNET_CLI_PATH "tqnet"
#endif
#ifndef TQNET_FIXTURE_DIR
#define TQNET_FIXTURE_DIR "fixtures"
#endif

const std::string kMinimal = R"({
  "time": {"min": 0, "max": 9},
  "nodes": [{"id": 1, "label": "a"}, {"id": 2, "label": "b"}],
  "links": [{"from": 1, "to": 2, "directed": true, "tq": [[1, 5, 1]]}]
})";

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::string& args, const std::string& env = "") {
    std::string out_path = "cli_stdout.tmp", err_path = "cli_stderr.tmp";
    std::string cmd = (env.empty() ? "" : env + " ") + std::string(TQNET_CLI_PATH) + " " + args +
                      " >" + out_path + " 2>" + err_path;
    int status = std::system(cmd.c_str());
    CliRun r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

}  // namespace

TEST_CASE("load minimal document") {
    NetworkDocument doc = load_network_from_string(kMinimal);
    CHECK(doc.node_count() == 2);
    CHECK(doc.horizon == TimeHorizon{0, 9});
    REQUIRE(doc.links.size() == 1);
    CHECK(doc.links[0].tq == TemporalQuantity{{1, 5, 1.0}});
    CHECK(doc.nodes[0].label == "a");
}

TEST_CASE("loader normalizes unsorted triples with a warning") {
    std::string text = R"({
      "time": {"min": 0, "max": 9},
      "nodes": [{"id": 1}, {"id": 2}],
      "links": [{"from": 1, "to": 2, "tq": [[4, 6, 1], [1, 3, 1]]}]
    })";
    std::vector<std::string> warnings;
    NetworkDocument doc = load_network_from_string(text, &warnings);
    CHECK(doc.links[0].tq == TemporalQuantity{{1, 3, 1.0}, {4, 6, 1.0}});
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("link (1,2)") != std::string::npos);
}

TEST_CASE("loader rejects bad documents") {
    CHECK_THROWS_AS(load_network_from_string("not json"), ParseError);
    CHECK_THROWS_AS(load_network_from_string(R"({"time": {"min": 5, "max": 2}, "nodes": []})"),
                    ParseError);
    CHECK_THROWS_AS(
        load_network_from_string(
            R"({"time": {"min": 0, "max": 9}, "nodes": [{"id": 1}, {"id": 1}]})"),
        ParseError);
    CHECK_THROWS_AS(
        load_network_from_string(
            R"({"time": {"min": 0, "max": 9}, "nodes": [{"id": 1}],
                "links": [{"from": 1, "to": 7, "tq": [[1, 2, 1]]}]})"),
        ParseError);
    CHECK_THROWS_AS(
        load_network_from_string(
            R"({"intervals": "[s,f]", "time": {"min": 0, "max": 9}, "nodes": []})"),
        ParseError);
    // triple outside the horizon
    CHECK_THROWS_AS(
        load_network_from_string(
            R"({"time": {"min": 0, "max": 4}, "nodes": [{"id": 1}, {"id": 2}],
                "links": [{"from": 1, "to": 2, "tq": [[1, 8, 1]]}]})"),
        ParseError);
}

TEST_CASE("consistency condition names the offending link") {
    std::string text = R"({
      "time": {"min": 0, "max": 9},
      "nodes": [{"id": 1, "activity": [[0, 3, 1]]}, {"id": 2}],
      "links": [{"from": 1, "to": 2, "tq": [[1, 5, 1]]}]
    })";
    try {
        load_network_from_string(text);
        FAIL("expected a consistency error");
    } catch (const ConsistencyError& e) {
        std::string msg = e.what();
        CHECK(msg.find("link (1,2)") != std::string::npos);
        CHECK(msg.find("[1, 5)") != std::string::npos);
    }
}

TEST_CASE("undirected links expand to arc pairs") {
    std::string text = R"({
      "time": {"min": 0, "max": 9},
      "nodes": [{"id": 1}, {"id": 2}],
      "links": [{"from": 1, "to": 2, "directed": false, "tq": [[1, 5, 2]]}]
    })";
    TemporalMatrix A = matrix_from_network(load_network_from_string(text));
    CHECK(A.at(0, 1) == TemporalQuantity{{1, 5, 2.0}});
    CHECK(A.at(1, 0) == TemporalQuantity{{1, 5, 2.0}});
}

TEST_CASE("network save/load round-trip") {
    NetworkDocument doc = load_network_from_string(kMinimal);
    std::ostringstream out;
    save_network(doc, out);
    NetworkDocument again = load_network_from_string(out.str());
    CHECK(again.node_count() == doc.node_count());
    CHECK(again.horizon == doc.horizon);
    CHECK(again.links[0].tq == doc.links[0].tq);
    std::ostringstream out2;
    save_network(again, out2);
    CHECK(out.str() == out2.str());
}

TEST_CASE("event table parsing") {
    std::string text = R"({
      "time": {"min": 0, "max": 6},
      "nodes": [{"id": 1, "label": "p"}, {"id": 2, "label": "q"}],
      "events": [{"id": "e1", "participants": [1, 2], "date": 3}]
    })";
    CHECK(is_event_table(text));
    CHECK(!is_event_table(kMinimal));
    EventTable t = load_event_table_from_string(text);
    CHECK(t.participant_count == 2);
    CHECK(t.first == 0);
    CHECK(t.last == 5);
    REQUIRE(t.events.size() == 1);
    CHECK(t.events[0].date == 3);
    CHECK_THROWS_AS(load_event_table_from_string(kMinimal), ParseError);
}

TEST_CASE("result round-trips") {
    ResultDocument r;
    r.kind = ResultKind::vector;
    r.labels = {"a", "b"};
    r.vec = TemporalVector{Semiring::combinatorial(), {0, 9}, {{{1, 5, 0.4375}}, {}}};
    r.provenance.command = "degrees";
    r.provenance.parameters["direction"] = "out";

    std::ostringstream out;
    save_result(r, out);
    std::istringstream in(out.str());
    ResultDocument back = load_result(in);
    CHECK(back.kind == ResultKind::vector);
    CHECK(back.labels == r.labels);
    CHECK(back.vec.entries == r.vec.entries);
    CHECK(back.provenance.command == "degrees");
    CHECK(back.provenance.parameters.at("direction") == "out");

    ResultDocument p;
    p.kind = ResultKind::partition;
    p.part = TemporalPartition{{0, 9}, {{{0, 4, 1.0}}, {{0, 4, 2.0}}}};
    std::ostringstream pout;
    save_result(p, pout);
    std::istringstream pin(pout.str());
    CHECK(load_result(pin).part.entries == p.part.entries);

    ResultDocument q;
    q.kind = ResultKind::quantity;
    q.quantity = {{1, kForever, 2.0}};
    std::ostringstream qout;
    save_result(q, qout);
    std::istringstream qin(qout.str());
    CHECK(load_result(qin).quantity == q.quantity);
}

TEST_CASE("chart export") {
    TemporalVector v{Semiring::combinatorial(), {0, 9}, {}};
    std::ostringstream empty;
    export_chart_data(v, empty);
    CHECK(empty.str() == "node,start,finish,value\n");

    v.entries = {{{1, 5, 2.0}}, {{0, 2, 1.0}, {4, 6, 1.0}}};
    std::ostringstream out;
    export_chart_data(v, out);
    CHECK(out.str() == "node,start,finish,value\n1,1,5,2\n2,0,2,1\n2,4,6,1\n");
}

TEST_CASE("digest is stable") {
    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("abc") == digest("abc"));
    CHECK(digest("abc") != digest("abd"));
}

TEST_CASE("cli dispatch and exit codes") {
    spit("net.tmp.tjson", kMinimal);

    CliRun ok = run_cli("degrees --input net.tmp.tjson --direction out");
    CHECK(ok.code == 0);
    std::istringstream in(ok.out);
    ResultDocument r = load_result(in);
    CHECK(r.kind == ResultKind::vector);
    CHECK(r.vec.entries[0] == TemporalQuantity{{1, 5, 1.0}});

    CliRun info = run_cli("info --input net.tmp.tjson");
    CHECK(info.code == 0);
    CHECK(info.out.find("nodes: 2") != std::string::npos);
    CHECK(info.out.find("links: 1") != std::string::npos);

    CHECK(run_cli("bogus --input net.tmp.tjson").code == 1);
    CHECK(run_cli("degrees --bogus-flag").code == 1);

    spit("bad.tmp.tjson", "{ not json");
    CliRun bad = run_cli("degrees --input bad.tmp.tjson");
    CHECK(bad.code == 2);
    CHECK(bad.err.rfind("error: parse:", 0) == 0);

    CliRun missing = run_cli("degrees --input no-such-file.tjson");
    CHECK(missing.code == 2);

    spit("incons.tmp.tjson", R"({
      "time": {"min": 0, "max": 9},
      "nodes": [{"id": 1, "activity": [[0, 3, 1]]}, {"id": 2}],
      "links": [{"from": 1, "to": 2, "tq": [[1, 5, 1]]}]
    })");
    CliRun incons = run_cli("degrees --input incons.tmp.tjson");
    CHECK(incons.code == 2);
    CHECK(incons.err.rfind("error: consistency:", 0) == 0);

    CliRun compute = run_cli("cluscoef --input net.tmp.tjson --type 7");
    CHECK(compute.code == 3);
    CHECK(compute.err.rfind("error:", 0) == 0);

    std::remove("net.tmp.tjson");
    std::remove("bad.tmp.tjson");
    std::remove("incons.tmp.tjson");
}

TEST_CASE("cli closeness on the two-node example") {
    spit("close.tmp.tjson", R"({
      "time": {"min": 0, "max": 9},
      "nodes": [{"id": 1}, {"id": 2}],
      "links": [{"from": 1, "to": 2, "tq": [[0, 9, 1]]}]
    })");
    CliRun r = run_cli("closeness --input close.tmp.tjson --type 1");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    ResultDocument doc = load_result(in);
    CHECK(doc.vec.entries[0] == TemporalQuantity{{0, 9, 1.0}});
    CHECK(doc.vec.entries[1] == TemporalQuantity{{0, 9, 0.0}});
    std::remove("close.tmp.tjson");
}

TEST_CASE("cli closure matches the loader fixture") {
    std::string fixture = std::string(TQNET_FIXTURE_DIR) + "/reach3.tjson";
    CliRun r = run_cli("closure --input " + fixture + " --semiring reachability --strict true");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    ResultDocument doc = load_result(in);
    REQUIRE(doc.kind == ResultKind::matrix);
    CHECK(doc.mat->at(0, 2) == TemporalQuantity{{1, 5, true}});
    CHECK(doc.mat->at(0, 1) == TemporalQuantity{{1, 5, true}});
    CHECK(doc.mat->at(2, 0).empty());
}

TEST_CASE("seeded connectivity runs are byte-identical") {
    spit("seed.tmp.tjson", R"({
      "time": {"min": 0, "max": 9},
      "nodes": [{"id": 1}, {"id": 2}, {"id": 3}],
      "links": [{"from": 1, "to": 2, "tq": [[1, 5, 1]]},
                {"from": 2, "to": 3, "tq": [[3, 9, 1]]}]
    })");
    CliRun a = run_cli("weakconn --input seed.tmp.tjson --seed 7");
    CliRun b = run_cli("weakconn --input seed.tmp.tjson --seed 7");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    // TQNET_SEED overrides --seed
    CliRun c = run_cli("weakconn --input seed.tmp.tjson --seed 99", "TQNET_SEED=7");
    CHECK(c.code == 0);
    CHECK(c.out.find("\"seed\": 7") != std::string::npos);
    std::remove("seed.tmp.tjson");
}

TEST_CASE("cli chart output") {
    spit("chart.tmp.tjson", kMinimal);
    CliRun r = run_cli(
        "degrees --input chart.tmp.tjson --direction out --chart chart.tmp.csv");
    REQUIRE(r.code == 0);
    CHECK(slurp("chart.tmp.csv") == "node,start,finish,value\n1,1,5,1\n");
    std::remove("chart.tmp.tjson");
    std::remove("chart.tmp.csv");
}
