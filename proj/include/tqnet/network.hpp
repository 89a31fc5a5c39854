#pragma once

#include <map>
#include <string>
#include <vector>

#include "tqnet/tq.hpp"

namespace tqnet {

struct NodeRecord {
    int id = 0;         // contiguous 1..n after load
    int source_id = 0;  // id as it appeared in the input document
    std::string label;
    TemporalQuantity activity;  // binary; empty means "active over the whole horizon"
    bool has_activity = false;
};

struct LinkRecord {
    int from = 0;
    int to = 0;
    bool directed = true;
    TemporalQuantity tq;
};

/// A temporal network: nodes with optional activity sets, links with
/// temporal weights, and the global time horizon.
struct NetworkDocument {
    TimeHorizon horizon{0, 1};
    std::vector<NodeRecord> nodes;
    std::vector<LinkRecord> links;
    std::map<std::string, std::string> meta;

    int node_count() const { return static_cast<int>(nodes.size()); }
};

/// A dated two-mode event table: each event has a participant set and a date.
struct Event {
    std::string id;
    std::vector<int> participants;  // participant indices 1..p
    Time date = 0;
};

struct EventTable {
    std::vector<Event> events;
    std::vector<std::string> labels;  // one per participant
    int participant_count = 0;
    Time first = 0;
    Time last = 0;
};

}  // namespace tqnet
