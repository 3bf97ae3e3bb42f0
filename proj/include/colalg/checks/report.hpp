#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "json.hpp"

#include "colalg/algebras/generic.hpp"
#include "colalg/checks/sampler.hpp"

namespace colalg {

/// Outcome of checking one identity. The counterexample is the lowest-index
/// failing input and is present exactly when the check failed.
struct CheckReport {
    std::string identity;
    std::size_t samples = 0;
    std::size_t violations = 0;
    std::optional<nlohmann::json> counterexample;
    std::optional<double> elapsed_ms;

    CheckReport() = default;
    explicit CheckReport(std::string name) : identity(std::move(name)) {}

    bool pass() const { return violations == 0; }

    void record_failure(nlohmann::json example) {
        if (violations++ == 0) counterexample = std::move(example);
    }

    /// Merge a report over a later slice of the same stream.
    void merge(const CheckReport& other) {
        if (!counterexample && other.counterexample) counterexample = other.counterexample;
        samples += other.samples;
        violations += other.violations;
    }

    nlohmann::json to_json() const {
        nlohmann::json j = {{"identity", identity},
                            {"samples", samples},
                            {"pass", pass()},
                            {"violations", violations},
                            {"counterexample", counterexample ? *counterexample : nlohmann::json(nullptr)}};
        if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
        return j;
    }
};

inline bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass()) return false;
    return true;
}

inline std::string reports_to_json_lines(const std::vector<CheckReport>& reports) {
    std::string out;
    for (const auto& r : reports) out += r.to_json().dump() + "\n";
    return out;
}

inline std::string reports_to_text(const std::vector<CheckReport>& reports) {
    std::size_t width = 8;
    for (const auto& r : reports) width = std::max(width, r.identity.size());
    std::ostringstream os;
    auto pad = [&](const std::string& s) { return s + std::string(width - s.size() + 2, ' '); };
    os << pad("identity") << "result  samples     violations\n";
    for (const auto& r : reports) {
        std::string samples = std::to_string(r.samples);
        os << pad(r.identity) << (r.pass() ? "pass    " : "FAIL    ") << samples
           << std::string(samples.size() < 12 ? 12 - samples.size() : 1, ' ') << r.violations << "\n";
        if (r.counterexample) os << "  counterexample: " << r.counterexample->dump() << "\n";
    }
    return os.str();
}

template <class F>
auto timed(bool enabled, F&& f) {
    auto start = std::chrono::steady_clock::now();
    auto result = f();
    if (enabled) {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if constexpr (std::is_same_v<decltype(result), CheckReport>) {
            result.elapsed_ms = ms;
        } else {
            for (auto& r : result) r.elapsed_ms = ms;
        }
    }
    return result;
}

/// Evaluates pred on Arity-tuples of elements and counts failures.
///
/// Seeded mode draws `count` tuples from one stream. Exhaustive mode takes
/// every element (Arity 1), every ordered pair (Arity 2), or every pair with
/// the third entry running over the basis (Arity 3).
template <std::size_t Arity, Algebra A, class Pred>
CheckReport run_identity(const A& alg, std::string name, const Sampler& sampler, Pred&& pred) {
    static_assert(Arity >= 1 && Arity <= 3);
    using Elem = typename A::element_type;
    CheckReport report{std::move(name)};
    auto check = [&](const std::array<Elem, Arity>& xs) {
        ++report.samples;
        if (!pred(xs)) {
            nlohmann::json inputs = nlohmann::json::array();
            for (const auto& x : xs) inputs.push_back(alg.to_json(x));
            report.record_failure({{"index", report.samples - 1}, {"inputs", inputs}});
        }
    };

    if (sampler.mode == SampleMode::Seeded) {
        SampleStream<A> stream(alg, sampler.seed);
        for (std::size_t k = 0; k < sampler.count; ++k) {
            std::array<Elem, Arity> xs;
            for (auto& x : xs) x = stream.next();
            check(xs);
        }
        return report;
    }

    auto all = exhaustive_elements(alg, sampler.cap);
    if constexpr (Arity == 1) {
        for (const auto& x : all) check({x});
    } else if constexpr (Arity == 2) {
        for (const auto& x : all)
            for (const auto& y : all) check({x, y});
    } else {
        auto b = basis(alg);
        for (const auto& x : all)
            for (const auto& y : all)
                for (const auto& z : b) check({x, y, z});
    }
    return report;
}

}  // namespace colalg
