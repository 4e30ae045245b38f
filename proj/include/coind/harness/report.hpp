#pragma once

#include "coind/core.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace coind {

struct CheckRecord {
    std::string name;
    bool pass = false;
    std::string witness;                     // empty when passing
    std::map<std::string, long> counts;      // cardinalities, tower lengths, ...
};

struct InstanceRecord {
    std::string id;          // sortable: i000, i001, ...
    std::string descriptor;  // human-readable instance summary
    std::vector<CheckRecord> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Deterministic given inputs and seed. Wall time is carried for the human
/// rendering only; the machine format omits it so identical runs are
/// byte-identical.
struct VerificationReport {
    std::string suite;
    unsigned long long seed = 0;
    std::string budget;
    std::vector<InstanceRecord> instances;
    double wall_ms = 0.0;

    bool all_passed() const {
        for (const auto& r : instances)
            if (!r.passed()) return false;
        return true;
    }
    long total_checks() const {
        long n = 0;
        for (const auto& r : instances) n += static_cast<long>(r.checks.size());
        return n;
    }
    long failed_checks() const {
        long n = 0;
        for (const auto& r : instances)
            for (const auto& c : r.checks)
                if (!c.pass) ++n;
        return n;
    }
};

/// Line-delimited JSON, records sorted by instance id. Stable across runs.
inline std::string render_machine(const VerificationReport& report) {
    std::ostringstream os;
    nlohmann::json header = {{"record", "header"},
                             {"format", "coind-lab/report/1"},
                             {"suite", report.suite},
                             {"seed", report.seed},
                             {"budget", report.budget}};
    os << header.dump() << "\n";
    auto sorted = report.instances;
    std::sort(sorted.begin(), sorted.end(),
              [](const InstanceRecord& a, const InstanceRecord& b) { return a.id < b.id; });
    for (const auto& inst : sorted) {
        nlohmann::json j = {{"record", "instance"}, {"id", inst.id}, {"descriptor", inst.descriptor}};
        os << j.dump() << "\n";
        for (const auto& c : inst.checks) {
            nlohmann::json cj = {{"record", "check"}, {"instance", inst.id}, {"name", c.name}, {"pass", c.pass}};
            if (!c.witness.empty()) cj["witness"] = c.witness;
            if (!c.counts.empty()) cj["counts"] = c.counts;
            os << cj.dump() << "\n";
        }
    }
    nlohmann::json summary = {{"record", "summary"},
                              {"instances", report.instances.size()},
                              {"checks", report.total_checks()},
                              {"failures", report.failed_checks()},
                              {"verdict", report.all_passed() ? "PASS" : "FAIL"}};
    os << summary.dump() << "\n";
    return os.str();
}

inline std::string render_human(const VerificationReport& report) {
    std::ostringstream os;
    os << "suite " << report.suite << " (seed " << report.seed << ", budget " << report.budget << ")\n";
    auto sorted = report.instances;
    std::sort(sorted.begin(), sorted.end(),
              [](const InstanceRecord& a, const InstanceRecord& b) { return a.id < b.id; });
    for (const auto& inst : sorted) {
        os << "  " << inst.id << "  " << (inst.passed() ? "ok  " : "FAIL") << "  " << inst.descriptor << "\n";
        for (const auto& c : inst.checks) {
            if (c.pass && c.counts.empty()) continue;
            os << "        " << (c.pass ? "ok  " : "FAIL") << " " << c.name;
            for (const auto& [k, v] : c.counts) os << " " << k << "=" << v;
            if (!c.witness.empty()) os << "  witness: " << c.witness;
            os << "\n";
        }
    }
    os << "  " << report.instances.size() << " instance(s), " << report.total_checks() << " check(s), "
       << report.failed_checks() << " failure(s): " << (report.all_passed() ? "PASS" : "FAIL") << "  ["
       << report.wall_ms << " ms]\n";
    return os.str();
}

}  // namespace coind
