// Copyright 2026 The hankel-rings Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Structured check results. Every record names the statement it checks
// (anchor), the computed and expected values, and a status.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace hankel {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

enum class Status { Pass, Fail, NotApplicable, BudgetExhausted };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        case Status::NotApplicable:
            return "not-applicable";
        case Status::BudgetExhausted:
            return "budget-exhausted";
    }
    return "?";
}

struct VerificationReport {
    std::string suite;
    std::string check;
    Json parameters = Json::object();
    std::string anchor;
    Status status = Status::Pass;
    Json computed = Json::object();
    Json expected = Json::object();
    std::optional<std::uint64_t> seed;
    std::optional<double> seconds;  // only filled when timing is requested
    std::vector<std::string> notes;

    bool passed() const { return status == Status::Pass; }

    /// Sets the status from a boolean verdict.
    VerificationReport& verdict(bool ok) {
        status = ok ? Status::Pass : Status::Fail;
        return *this;
    }

    Json to_json() const {
        Json j;
        j["suite"] = suite;
        j["check"] = check;
        j["parameters"] = parameters;
        j["anchor"] = anchor;
        j["status"] = to_string(status);
        j["computed"] = computed;
        j["expected"] = expected;
        if (seed) j["seed"] = *seed;
        if (seconds) j["seconds"] = *seconds;
        if (!notes.empty()) j["notes"] = notes;
        return j;
    }
};

/// Parameters as an object of integers, in the given order.
inline Json params(std::initializer_list<std::pair<const char*, long long>> kv) {
    Json j = Json::object();
    for (const auto& [k, v] : kv) j[k] = v;
    return j;
}

struct ReportSummary {
    std::size_t pass = 0, fail = 0, not_applicable = 0, budget_exhausted = 0;

    static ReportSummary of(const std::vector<VerificationReport>& reports) {
        ReportSummary s;
        for (const auto& r : reports) {
            switch (r.status) {
                case Status::Pass:
                    ++s.pass;
                    break;
                case Status::Fail:
                    ++s.fail;
                    break;
                case Status::NotApplicable:
                    ++s.not_applicable;
                    break;
                case Status::BudgetExhausted:
                    ++s.budget_exhausted;
                    break;
            }
        }
        return s;
    }

    Json to_json() const {
        return Json{{"total", pass + fail + not_applicable + budget_exhausted},
                    {"pass", pass},
                    {"fail", fail},
                    {"not_applicable", not_applicable},
                    {"budget_exhausted", budget_exhausted}};
    }
};

}  // namespace hankel
