#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace parakit {

enum class Status { pass, fail, inconclusive };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "inconclusive";
    }
}

// A counterexample or diagnostic instance. `instance` holds the canonical
// encoding of the offending instance, `kind` names the violated condition.
struct Witness {
    std::string kind;
    std::string instance;
    std::string detail;
};

struct TableEntry {
    std::uint64_t index = 0;
    std::uint64_t value = 0;
    bool vacuous = false; // slice was empty; value 0 is reporting-only
    bool settled = true;  // value already attained on the early prefix
};

struct Table {
    std::string name;
    std::vector<TableEntry> entries;
};

struct VerificationReport {
    std::string id;
    Status status = Status::pass;
    std::vector<Witness> witnesses;
    std::vector<Table> tables;
    std::uint64_t millis = 0; // populated only when timing is requested

    bool passed() const { return status == Status::pass; }
    bool failed() const { return status == Status::fail; }

    void add_witness(std::string kind, std::string instance, std::string detail = "") {
        witnesses.push_back({std::move(kind), std::move(instance), std::move(detail)});
    }
};

// Fixed key order (id, status, witnesses, tables, millis) so reports diff
// cleanly in CI.
inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["status"] = to_string(r.status);
    auto ws = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) {
        nlohmann::ordered_json jw;
        jw["kind"] = w.kind;
        jw["instance"] = w.instance;
        jw["detail"] = w.detail;
        ws.push_back(std::move(jw));
    }
    j["witnesses"] = std::move(ws);
    auto ts = nlohmann::ordered_json::array();
    for (const auto& t : r.tables) {
        nlohmann::ordered_json jt;
        jt["name"] = t.name;
        auto es = nlohmann::ordered_json::array();
        for (const auto& e : t.entries) {
            nlohmann::ordered_json je;
            je["i"] = e.index;
            je["value"] = e.value;
            je["vacuous"] = e.vacuous;
            je["settled"] = e.settled;
            es.push_back(std::move(je));
        }
        jt["entries"] = std::move(es);
        ts.push_back(std::move(jt));
    }
    j["tables"] = std::move(ts);
    j["millis"] = r.millis;
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<VerificationReport>& rs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr;
}

// CSV line per report: id,status,witnesses,first_witness
inline std::string to_csv(const std::vector<VerificationReport>& rs) {
    std::string out = "id,status,witnesses,first_witness\n";
    for (const auto& r : rs) {
        out += r.id;
        out += ',';
        out += to_string(r.status);
        out += ',';
        out += std::to_string(r.witnesses.size());
        out += ',';
        if (!r.witnesses.empty()) {
            out += r.witnesses.front().kind + ":" + r.witnesses.front().instance;
        }
        out += '\n';
    }
    return out;
}

} // namespace parakit
