// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include "coind/harness/report.hpp"
#include "coind/harness/suites.hpp"

#include <chrono>
#include <iostream>
#include <string>

using namespace coind;

namespace {

int failures = 0;

void line(int criterion, bool pass, const std::string& text) {
    std::cout << "criterion " << criterion << " " << (pass ? "PASS" : "FAIL") << " - " << text << std::endl;
    if (!pass) ++failures;
}

struct Timed {
    VerificationReport report;
    double seconds;
};

template <typename Fn>
Timed timed(Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    auto report = fn();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return Timed{std::move(report), s};
}

std::string stats(const Timed& t) {
    return std::to_string(t.report.instances.size()) + " instances, " + std::to_string(t.report.failed_checks()) +
           " failing checks, " + std::to_string(t.seconds) + "s";
}

bool has_descriptor(const VerificationReport& r, const std::string& needle) {
    for (const auto& inst : r.instances)
        if (inst.descriptor.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

int main() {
    const unsigned long long seed = 1;
    const Budget budget{};

    // 1. Transport step: output strongly central + B-stable
    {
        auto t = timed([&] { return run_transportation_suite(seed, budget, 100); });
        bool pass = t.report.all_passed() && t.report.instances.size() >= 100 && t.seconds < 120.0;
        line(1, pass, "transport step: output strongly central and stable (" + stats(t) + ")");
    }

    // 2. Maximality oracle: t_infinity limit equals the exhaustive maximum
    {
        auto t = timed([&] { return run_maximality_suite(seed, budget, 30); });
        bool pass = t.report.all_passed() && t.report.instances.size() >= 30 && t.seconds < 300.0;
        line(2, pass, "maximality: t_infinity equals oracle_max_subfiltration (" + stats(t) + ")");
    }

    // 3. Plain-group co-induction: hom-set bijection with explicit transposes
    {
        auto t = timed([&] { return run_plain_coinduction_suite(seed, budget, 20); });
        bool pass = t.report.all_passed() && t.report.instances.size() >= 20 && t.seconds < 180.0;
        line(3, pass, "plain-group co-induction bijections (" + stats(t) + ")");
    }

    // 4. Filtered adjunction with nontrivial chains, including alpha shapes
    {
        auto t = timed([&] { return run_scf_adjunction_suite(seed, budget, 25); });
        bool shapes = has_descriptor(t.report, "id_") && has_descriptor(t.report, "trivial_") &&
                      has_descriptor(t.report, "incl_");
        bool pass = t.report.all_passed() && t.report.instances.size() >= 25 && shapes && t.seconds < 300.0;
        line(4, pass, "scf adjunction: bijection, round trips, naturality (" + stats(t) + ")");
    }

    // 5. Currying adjunction over finite spaces
    {
        auto t = timed([&] { return run_currying_suite(seed, budget, 20); });
        bool pass = t.report.all_passed() && t.report.instances.size() >= 20 && t.seconds < 120.0;
        line(5, pass, "currying bijection over finite spaces (" + stats(t) + ")");
    }

    // 6. Topological adjunction at finite scale
    {
        auto t = timed([&] { return run_top_adjunction_suite(seed, budget, 15); });
        bool nondiscrete = has_descriptor(t.report, "indiscrete") || has_descriptor(t.report, "coset");
        bool pass = t.report.all_passed() && t.report.instances.size() >= 15 && nondiscrete && t.seconds < 300.0;
        line(6, pass, "topological adjunction with tower termination and joint continuity (" + stats(t) + ")");
    }

    // 7. Ground-truth lower central series regressions
    {
        auto t = timed([&] { return run_ground_truth_suite(); });
        bool pass = t.report.all_passed() && t.report.instances.size() == 3;
        line(7, pass, "lcs regressions D4=[8,2,1], Q8=[8,2,1], S3=[6,3] vs closure oracle (" + stats(t) + ")");
    }

    // 8. Determinism: identical seed and budget give byte-identical machine reports
    {
        auto start = std::chrono::steady_clock::now();
        bool pass = true;
        for (const auto& name : suite_names()) {
            auto a = render_machine(run_suite(name, seed, budget));
            auto b = render_machine(run_suite(name, seed, budget));
            if (a != b) {
                pass = false;
                std::cout << "  determinism break in suite " << name << std::endl;
            }
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        line(8, pass, "byte-identical machine reports across repeated runs (" + std::to_string(s) + "s)");
    }

    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << failures << " criterion failure"
              << (failures == 1 ? "" : "s") << ")" << std::endl;
    return failures == 0 ? 0 : 1;
}
