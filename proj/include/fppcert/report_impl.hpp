#pragma once
#include <chrono>

#include "fppcert/errors.hpp"

namespace fpp {

template <class F>
CheckRecord timed_check(const std::string& id, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckRecord r;
    try {
        r = body();
    } catch (const BudgetExceeded& e) {
        r.status = Status::Skip;
        r.observed["skip"] = "budget";
        r.observed["detail"] = e.what();
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.observed["error"] = e.what();
    }
    r.id = id;
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace fpp
