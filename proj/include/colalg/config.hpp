#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "colalg/algebras.hpp"
#include "colalg/checks/sampler.hpp"
#include "colalg/error.hpp"
#include "colalg/graded.hpp"
#include "colalg/rings.hpp"

namespace colalg {

/// {"ring": RingSpec, "construction": {"family": ..., params}, "seed", "samples", "mode"}
struct Config {
    RingSpec ring;
    nlohmann::json construction;
    std::string family;
    Sampler sampler;
};

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, path + ": " + e.what());
    }
}

inline Config config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidConfig, "config must be a JSON object");
    if (!j.contains("ring")) throw Error(ErrorCode::InvalidConfig, "config needs \"ring\"");
    if (!j.contains("construction") || !j["construction"].is_object())
        throw Error(ErrorCode::InvalidConfig, "config needs a \"construction\" object");
    Config c;
    c.ring = ring_spec_from_json(j["ring"]);
    c.construction = j["construction"];
    if (!c.construction.contains("family") || !c.construction["family"].is_string())
        throw Error(ErrorCode::InvalidConfig, "construction needs a string \"family\"");
    c.family = c.construction["family"].get<std::string>();
    auto uint_field = [&](const char* key) {
        if (!j[key].is_number_integer() || j[key].get<std::int64_t>() < 0)
            throw Error(ErrorCode::InvalidConfig, std::string("\"") + key + "\" must be a non-negative integer");
        return j[key].get<std::uint64_t>();
    };
    if (j.contains("seed")) c.sampler.seed = uint_field("seed");
    if (j.contains("samples")) c.sampler.count = uint_field("samples");
    if (j.contains("mode")) {
        if (!j["mode"].is_string()) throw Error(ErrorCode::InvalidConfig, "\"mode\" must be a string");
        c.sampler.mode = parse_sample_mode(j["mode"].get<std::string>());
    }
    return c;
}

namespace detail {

template <CommutativeRing R>
element_t<R> lambda_from(const R& ring, const nlohmann::json& cons) {
    if (!cons.contains("lambda")) return ring.one();
    return scalar_from_json(ring, cons["lambda"], "lambda");
}

inline std::uint32_t degree_field(const nlohmann::json& cons, const char* key) {
    if (!cons.contains(key) || !cons[key].is_number_integer())
        throw Error(ErrorCode::InvalidConfig, std::string("graded construction needs integer \"") + key + "\"");
    auto v = cons[key].get<std::int64_t>();
    if (v < 1 || v > 64) throw Error(ErrorCode::BadDegrees, std::string(key) + " must be a positive integer, got " + std::to_string(v));
    return static_cast<std::uint32_t>(v);
}

}  // namespace detail

/// Builds the configured algebra and passes it to f; returns f's result.
template <class F>
auto with_algebra(const Config& config, F&& f) {
    return std::visit(
        [&](const auto& ring) {
            using R = std::remove_cvref_t<decltype(ring)>;
            const auto& cons = config.construction;
            const auto& fam = config.family;
            if (fam == "col_split") return f(ColSplitAlgebra<R>(ring, detail::lambda_from(ring, cons)));
            if (fam == "zorn") return f(ZornAlgebra<R>(ring, detail::lambda_from(ring, cons)));
            if (fam == "w_split") return f(WSplitAlgebra<R>(ring, detail::lambda_from(ring, cons)));
            if (fam == "cay_hermitian") return f(CayAlgebra<R>(hermitian_from_json(ring, cons)));
            if (fam == "col_hermitian") return f(ColHermAlgebra<R>(hermitian_from_json(ring, cons)));
            if (fam == "w_hermitian") return f(WHermAlgebra<R>(hermitian_from_json(ring, cons)));
            if (fam == "graded") {
                GradedSpec spec{detail::degree_field(cons, "l"), detail::degree_field(cons, "m"), detail::degree_field(cons, "n")};
                if constexpr (std::is_same_v<R, RationalField> || std::is_same_v<R, ModularRing>)
                    return f(GradedAlgebra<R>(ring, spec));
                else
                    throw Error(ErrorCode::InvalidConfig, "graded construction needs a base of Q, Fp or Zmod");
            }
            throw Error(ErrorCode::InvalidConfig, "unknown family '" + fam + "'");
        },
        make_ring(config.ring));
}

}  // namespace colalg
