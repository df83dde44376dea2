#include "fppcert/report.hpp"

#include <cmath>

namespace fpp {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "fail";
}

Json CheckRecord::to_json() const {
    Json j;
    j["id"] = id;
    j["status"] = status_name(status);
    j["observed"] = observed;
    j["expected"] = expected;
    j["ms"] = std::round(ms * 1000.0) / 1000.0;
    return j;
}

bool CertReport::overall_pass() const {
    for (auto& c : checks)
        if (c.status == Status::Fail) return false;
    return true;
}

Json CertReport::to_json() const {
    Json j;
    j["meta"] = meta;
    j["meta"]["overall"] = overall_pass() ? "pass" : "fail";
    j["checks"] = Json::array();
    for (auto& c : checks) j["checks"].push_back(c.to_json());
    return j;
}

}  // namespace fpp
