#pragma once

#include <iosfwd>
#include <optional>

#include "tqnet/analysis.hpp"
#include "tqnet/network.hpp"

namespace tqnet {

enum class ResultKind { vector, partition, matrix, quantity, skeleton };

std::string to_string(ResultKind kind);

struct Provenance {
    std::string command;
    std::string input_digest;
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = kDefaultSeed;
};

/// A serializable analysis result together with its provenance.
struct ResultDocument {
    ResultKind kind = ResultKind::quantity;
    std::vector<std::string> labels;  // node labels for vector/partition/matrix payloads

    TemporalVector vec{Semiring::combinatorial(), {0, 1}, {}};
    TemporalPartition part;
    std::optional<TemporalMatrix> mat;
    TemporalQuantity quantity;
    std::optional<NetworkDocument> skeleton;

    Provenance provenance;
};

/// Parses a tjson network document. Triples are sorted and standardized on
/// load; `warnings`, when given, collects a note per normalized quantity.
NetworkDocument load_network(std::istream& in, std::vector<std::string>* warnings = nullptr);
NetworkDocument load_network_from_string(const std::string& text,
                                         std::vector<std::string>* warnings = nullptr);

/// Parses the two-mode variant of a tjson document (an `events` array).
EventTable load_event_table(std::istream& in);
EventTable load_event_table_from_string(const std::string& text);

bool is_event_table(const std::string& text);

void save_network(const NetworkDocument& doc, std::ostream& out);

void save_result(const ResultDocument& r, std::ostream& out);
ResultDocument load_result(std::istream& in);

/// Step-function rows "node,start,finish,value" for plotting tools.
void export_chart_data(const TemporalVector& v, std::ostream& out);

/// FNV-1a 64-bit digest of the input bytes, as hex.
std::string digest(const std::string& bytes);

}  // namespace tqnet
