#pragma once
// Check records and the aggregated JSON report.
#include <string>
#include <vector>

#include <json.hpp>

namespace fpp {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skip };
const char* status_name(Status s);

struct CheckRecord {
    std::string id;
    Status status = Status::Skip;
    Json observed = Json::object();
    Json expected = Json::object();
    double ms = 0;

    Json to_json() const;
};

struct CertReport {
    Json meta = Json::object();
    std::vector<CheckRecord> checks;

    // Pass iff no check failed; skipped checks do not count against it.
    bool overall_pass() const;
    Json to_json() const;
};

// Runs `body`, filling in the id, the duration, and a failure record if it throws.
template <class F>
CheckRecord timed_check(const std::string& id, F&& body);

}  // namespace fpp

#include "fppcert/report_impl.hpp"
