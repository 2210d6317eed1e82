#pragma once

// The common verification report: check id, parameters, status, witness
// payload, timing, engine version. Serializes to JSON and to a one-line
// human format.

#include <torsionlab/version.hpp>

#include <json.hpp>

#include <string>

namespace torsionlab {

using json = nlohmann::json;

enum class Status { pass, fail, hypothesis_not_met, skipped };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::hypothesis_not_met: return "hypothesis-not-met";
        case Status::skipped: return "skipped";
    }
    return "?";
}

struct VerificationReport {
    std::string check_id;
    json params = json::object();
    Status status = Status::pass;
    json witness = json::object();  // counterexample or supporting data
    double elapsed_ms = 0.0;
    std::string engine_version = kEngineVersion;

    json to_json() const {
        return json{{"schema", kReportSchemaVersion}, {"check_id", check_id},     {"params", params},
                    {"status", status_name(status)},  {"witness", witness},       {"elapsed_ms", elapsed_ms},
                    {"engine_version", engine_version}};
    }

    std::string to_text() const {
        std::string line = check_id + " " + params.dump() + " -> " + status_name(status);
        if (!witness.empty()) line += " " + witness.dump();
        return line;
    }
};

}  // namespace torsionlab
