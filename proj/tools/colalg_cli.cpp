// colalg: build algebras from JSON configs, multiply elements, run identity
// suites, verify maps, and report on the graded construction.
//
// Exit codes: 0 all checks pass, 1 some identity failed, 2 config/parse error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "colalg/checks.hpp"
#include "colalg/config.hpp"
#include "colalg/graded.hpp"
#include "colalg/maps.hpp"

using namespace colalg;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kConfigError = 2;

struct Options {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<std::string> mode;
    std::string format = "json";
    bool timing = false;
    std::string suite;
    std::string map_path;
    std::string x_path, y_path;
};

Config load(const Options& o) {
    Config c = config_from_json(read_json_file(o.config_path));
    if (o.seed) c.sampler.seed = *o.seed;
    if (o.samples) c.sampler.count = *o.samples;
    if (o.mode) c.sampler.mode = parse_sample_mode(*o.mode);
    return c;
}

int emit_reports(const std::vector<CheckReport>& reports, const std::string& format) {
    std::cout << (format == "text" ? reports_to_text(reports) : reports_to_json_lines(reports));
    return all_pass(reports) ? kPass : kFail;
}

// ---------------------------------------------------------------------------

int cmd_build(const Options& o) {
    Config c = load(o);
    return with_algebra(c, [&](const auto& alg) {
        using A = std::remove_cvref_t<decltype(alg)>;
        json j = {{"family", family_name(A::family)},
                  {"name", alg.name()},
                  {"ring", to_json(c.ring)},
                  {"parameters", alg.spec_json()},
                  {"rank", alg.rank()},
                  {"basis_labels", alg.basis_labels()}};
        if constexpr (A::unital) j["unit"] = alg.to_json(alg.one());
        j["structure_constants"] = structure_constants(alg);
        std::cout << (o.format == "text" ? j.dump(2) : j.dump()) << "\n";
        return kPass;
    });
}

int cmd_check(const Options& o) {
    Config c = load(o);
    return with_algebra(c, [&](const auto& alg) {
        auto reports = timed(o.timing, [&] { return run_suite(alg, o.suite, c.sampler); });
        return emit_reports(reports, o.format);
    });
}

int cmd_mul(const Options& o) {
    Config c = load(o);
    auto xj = read_json_file(o.x_path);
    auto yj = read_json_file(o.y_path);
    return with_algebra(c, [&](const auto& alg) {
        using A = std::remove_cvref_t<decltype(alg)>;
        auto x = alg.from_json(xj);
        auto y = alg.from_json(yj);
        json j = {{"product", alg.to_json(alg.mul(x, y))}};
        if constexpr (QuadraticAlgebra<A>) {
            j["norm"] = alg.ring().format(alg.norm(x));
            j["trace"] = alg.ring().format(alg.trace(x));
        }
        if constexpr (HasQuarticNorm<A>) j["quartic_norm"] = alg.ring().format(alg.quartic_norm(x));
        std::cout << (o.format == "text" ? j.dump(2) : j.dump()) << "\n";
        return kPass;
    });
}

// ---------------------------------------------------------------------------
// map-check

std::string map_kind(const json& m) {
    if (!m.is_object() || !m.contains("kind") || !m["kind"].is_string())
        throw Error(ErrorCode::InvalidConfig, "map file needs a string \"kind\"");
    return m["kind"].get<std::string>();
}

[[noreturn]] void wrong_family(const std::string& kind, Family f) {
    throw Error(ErrorCode::InvalidConfig, "map kind '" + kind + "' does not apply to " + std::string(family_name(f)));
}

template <CommutativeRing R>
LinearMap3<EtaleElement<element_t<R>>> linear_map_from_json(const HermitianSpace<R>& p, const json& m) {
    if (!m.contains("phi")) throw Error(ErrorCode::InvalidConfig, "map file needs \"phi\"");
    bool conj = m.contains("conjugate") && m["conjugate"].is_boolean() && m["conjugate"].template get<bool>();
    return {matrix_from_json(p.etale(), m["phi"]), conj};
}

template <CommutativeRing R>
HermitianSpace<R> target_space(const HermitianSpace<R>& p, const json& m) {
    return m.contains("target") ? hermitian_from_json(p.base(), m["target"]) : p;
}

template <class A>
CheckReport split_map(const A& alg, const std::string& kind, const json& m, const Sampler& s) {
    const auto& ring = alg.ring();
    if (kind == "diagonal") {
        if (!m.contains("phi")) throw Error(ErrorCode::InvalidConfig, "diagonal map needs \"phi\"");
        auto phi = scalar_matrix_from_json(ring, m["phi"]);
        auto lp = m.contains("lambda_prime") ? detail::scalar_from_json(ring, m["lambda_prime"], "lambda_prime") : alg.lambda();
        return is_homomorphism(diagonal_iso(alg, A(ring, lp), phi), s);
    }
    if (kind == "dual") return is_homomorphism(dual_iso(alg), s);
    if (kind == "cube-root") {
        if (!m.contains("mu")) throw Error(ErrorCode::InvalidConfig, "cube-root map needs \"mu\"");
        return is_homomorphism(cube_root_auto(alg, detail::scalar_from_json(ring, m["mu"], "mu")), s);
    }
    wrong_family(kind, A::family);
}

template <class A>
CheckReport hermitian_map(const A& alg, const std::string& kind, const json& m, const Sampler& s) {
    const auto& p = alg.space();
    if (kind == "derivation") {
        LinearMap3<EtaleElement<typename A::scalar_type>> d;
        if (m.contains("matrix")) {
            d = {matrix_from_json(p.etale(), m["matrix"]), false};
        } else if (m.contains("lambda") && m["lambda"].is_object()) {
            const auto& l = m["lambda"];
            if (!l.contains("u") || !l.contains("v")) throw Error(ErrorCode::InvalidConfig, "lambda needs \"u\" and \"v\"");
            d = lambda_map(p, p.vector_from_json(l["u"]), p.vector_from_json(l["v"]));
        } else {
            throw Error(ErrorCode::InvalidConfig, "derivation needs \"matrix\" or \"lambda\"");
        }
        return is_derivation(alg, extend_by_zero(alg, d), s);
    }
    auto f = linear_map_from_json(p, m);
    auto pp = target_space(p, m);
    if constexpr (A::family == Family::ColHerm)
        if (kind == "G-phi") return is_homomorphism(lift_isometry_colour(p, pp, f), s);
    if constexpr (A::family == Family::Cay)
        if (kind == "H-phi") return is_homomorphism(lift_isometry_cayley(p, pp, f), s);
    if constexpr (A::family == Family::WHerm)
        if (kind == "isometry") return is_homomorphism(isometry_on_w(p, pp, f), s);
    wrong_family(kind, A::family);
}

int cmd_map_check(const Options& o) {
    Config c = load(o);
    json m = read_json_file(o.map_path);
    std::string kind = map_kind(m);
    return with_algebra(c, [&](const auto& alg) -> int {
        using A = std::remove_cvref_t<decltype(alg)>;
        std::optional<CheckReport> report;
        if constexpr (A::family == Family::ColSplit || A::family == Family::Zorn)
            report = split_map(alg, kind, m, c.sampler);
        else if constexpr (HermitianFamily<A>)
            report = hermitian_map(alg, kind, m, c.sampler);
        else
            wrong_family(kind, A::family);
        return emit_reports({*report}, o.format);
    });
}

// ---------------------------------------------------------------------------

int cmd_graded_info(const Options& o) {
    Config c = load(o);
    if (c.family != "graded") throw Error(ErrorCode::InvalidConfig, "graded-info needs a graded construction");
    return with_algebra(c, [&](const auto& alg) -> int {
        using A = std::remove_cvref_t<decltype(alg)>;
        if constexpr (A::family != Family::Graded) {
            return kConfigError;
        } else {
            using B = typename A::ring_type;
            std::optional<RadicalAnalysis<B>> rad;
            if (alg.ring().is_field()) rad = radical_analysis(alg);
            auto checks = timed(o.timing, [&] { return graded_checks(alg, rad ? &*rad : nullptr, c.sampler); });
            auto j = graded_info(alg, checks, rad);
            std::cout << (o.format == "text" ? j.dump(2) : j.dump()) << "\n";
            return all_pass(checks) ? kPass : kFail;
        }
    });
}

void report_error(const Error& e) {
    json j = {{"error", error_name(e.code())}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["position"] = pe->position();
    std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colalg: colour, Zorn and Cayley algebras over exact rings"};
    app.require_subcommand(1);
    Options o;

    auto add_config = [&](CLI::App* sub) { sub->add_option("config", o.config_path, "config JSON file")->required(); };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "sampler seed (overrides config)");
        sub->add_option("--samples", o.samples, "number of seeded samples (overrides config)");
        sub->add_option("--mode", o.mode, "seeded or exhaustive (overrides config)");
        sub->add_flag("--timing", o.timing, "add elapsed_ms to reports");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    auto* build = app.add_subcommand("build", "describe the algebra: rank, basis, structure constants");
    add_config(build);
    add_format(build);

    auto* check = app.add_subcommand("check", "run an identity suite");
    add_config(check);
    check->add_option("--suite", o.suite, "suite name")->required();
    add_sampling(check);
    add_format(check);

    auto* map_check = app.add_subcommand("map-check", "verify a homomorphism or derivation");
    add_config(map_check);
    map_check->add_option("map", o.map_path, "map JSON file")->required();
    add_sampling(map_check);
    add_format(map_check);

    auto* mul = app.add_subcommand("mul", "multiply two elements");
    add_config(mul);
    mul->add_option("x", o.x_path, "left factor JSON file")->required();
    mul->add_option("y", o.y_path, "right factor JSON file")->required();
    add_format(mul);

    auto* graded = app.add_subcommand("graded-info", "rank, radical and checks of the graded construction");
    add_config(graded);
    add_sampling(graded);
    add_format(graded);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        if (*build) return cmd_build(o);
        if (*check) return cmd_check(o);
        if (*map_check) return cmd_map_check(o);
        if (*mul) return cmd_mul(o);
        if (*graded) return cmd_graded_info(o);
    } catch (const Error& e) {
        report_error(e);
        return kConfigError;
    }
    return kConfigError;
}
