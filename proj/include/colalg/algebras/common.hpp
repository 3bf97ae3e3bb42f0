#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "colalg/error.hpp"
#include "colalg/etale.hpp"
#include "colalg/linalg.hpp"
#include "colalg/rings.hpp"

namespace colalg {

enum class Family { ColSplit, Zorn, Cay, ColHerm, WSplit, WHerm, Graded };

constexpr std::string_view family_name(Family f) {
    switch (f) {
        case Family::ColSplit: return "col_split";
        case Family::Zorn: return "zorn";
        case Family::Cay: return "cay_hermitian";
        case Family::ColHerm: return "col_hermitian";
        case Family::WSplit: return "w_split";
        case Family::WHerm: return "w_hermitian";
        case Family::Graded: return "graded";
    }
    return "?";
}

namespace detail {

template <class R>
element_t<R> scalar_from_json(const R& ring, const nlohmann::json& j, std::string_view what) {
    if (!j.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a string, got " + j.dump());
    return ring.parse(j.get<std::string>());
}

template <class R>
nlohmann::json coords_to_json(const R& ring, const std::array<element_t<R>, 3>& c) {
    return nlohmann::json::array({ring.format(c[0]), ring.format(c[1]), ring.format(c[2])});
}

template <class R>
std::array<element_t<R>, 3> coords_from_json(const R& ring, const nlohmann::json& j, std::string_view what) {
    if (!j.is_array() || j.size() != 3)
        throw Error(ErrorCode::ParseError, std::string(what) + " must be an array of 3 strings");
    std::array<element_t<R>, 3> c;
    for (std::size_t i = 0; i < 3; ++i) c[i] = scalar_from_json(ring, j[i], what);
    return c;
}

inline const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::ParseError, std::string("element is missing \"") + key + "\"");
    return j[key];
}

/// Reads k coordinates starting at `pos` and advances it.
template <class E>
struct CoordReader {
    const std::vector<E>& c;
    std::size_t pos = 0;

    const E& next() { return c.at(pos++); }
    Vec3<E> vec() {
        Vec3<E> v;
        for (auto& x : v.c) x = next();
        return v;
    }
    DualVec3<E> dual() {
        DualVec3<E> v;
        for (auto& x : v.c) x = next();
        return v;
    }
    EtaleElement<E> etale() {
        EtaleElement<E> x;
        x.first = next();
        x.second = next();
        return x;
    }
    Vec3<EtaleElement<E>> etale_vec() { return {{etale(), etale(), etale()}}; }
};

template <class E>
void push(std::vector<E>& out, const std::array<E, 3>& c) {
    out.insert(out.end(), c.begin(), c.end());
}
template <class E>
void push(std::vector<E>& out, const EtaleElement<E>& x) {
    out.push_back(x.first);
    out.push_back(x.second);
}
template <class E>
void push(std::vector<E>& out, const Vec3<EtaleElement<E>>& v) {
    for (const auto& x : v.c) push(out, x);
}

inline std::vector<std::string> etale_vector_labels(std::string_view prefix) {
    std::vector<std::string> out;
    for (int i = 1; i <= 3; ++i) {
        out.push_back(std::string(prefix) + std::to_string(i) + ".0");
        out.push_back(std::string(prefix) + std::to_string(i) + ".1");
    }
    return out;
}

}  // namespace detail

}  // namespace colalg
