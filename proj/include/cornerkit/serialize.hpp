#pragma once

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "cornerkit/charfun.hpp"
#include "cornerkit/checks.hpp"
#include "cornerkit/invariants.hpp"
#include "cornerkit/lattice.hpp"
#include "cornerkit/poset.hpp"
#include "cornerkit/recognize.hpp"
#include "cornerkit/shelling.hpp"

namespace cornerkit {

using json = nlohmann::json;

// ---- FacePoset ------------------------------------------------------------
// {"dim": n, "faces": [{"id": s, "dim": k}, ...], "covers": [[lo, hi], ...]}

inline json to_json(const FacePoset& P) {
    json faces = json::array();
    for (const Face& f : P.faces()) faces.push_back({{"id", f.id}, {"dim", f.dim}});
    json covers = json::array();
    for (const auto& [a, b] : P.covers())
        covers.push_back(json::array({P.face(a).id, P.face(b).id}));
    return {{"dim", P.dim()}, {"faces", faces}, {"covers", covers}};
}

inline FacePoset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("faces") || !j.contains("covers"))
        throw Error("poset JSON: expected object with dim, faces, covers");
    std::vector<Face> faces;
    for (const auto& f : j.at("faces"))
        faces.push_back({f.at("id").get<std::string>(), f.at("dim").get<int>()});
    std::vector<std::pair<FaceId, FaceId>> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw Error("poset JSON: cover must be a pair");
        covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    }
    return FacePoset(j.at("dim").get<int>(), std::move(faces), std::move(covers));
}

// ---- CheckReport ----------------------------------------------------------

inline json to_json(const CheckReport& r) {
    json violations = json::array();
    for (const Violation& v : r.violations)
        violations.push_back({{"rule", v.rule}, {"faces", v.faces}, {"message", v.message}});
    return {{"passed", r.passed()}, {"violations", violations}};
}

// ---- matrices and vectors -------------------------------------------------

inline json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int& x = m.at(i, j);
            if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
                row.push_back(static_cast<long long>(x));
            else
                row.push_back(x.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<Int> int_vector_from_json(const json& j) {
    std::vector<Int> v;
    for (const auto& x : j) {
        if (x.is_number_integer())
            v.emplace_back(x.get<long long>());
        else if (x.is_string())
            v.emplace_back(Int(x.get<std::string>()));
        else
            throw Error("vector JSON: entries must be integers");
    }
    return v;
}

// ---- recognition ----------------------------------------------------------

inline json to_json(const ProductType& t) {
    json arr = json::array();
    for (const FactorType& f : t.factors)
        arr.push_back({{"kind", f.kind == FactorType::Kind::Sigma ? "Sigma" : "Delta"}, {"n", f.n}});
    return arr;
}

inline json to_json(const RecognitionResult& r) {
    json assignment = json::object();
    for (const auto& [facet, idx] : r.assignment.facet_to_factor) assignment[facet] = idx;
    json witness = json::object();
    for (const auto& [a, b] : r.witness) witness[a] = b;
    return {{"type", to_json(r.type)}, {"assignment", assignment}, {"witness", witness}};
}

// ---- charfun / quotient ---------------------------------------------------

inline json to_json(const CharFun& c) {
    json lambda = json::object();
    for (const auto& [id, v] : c.lambda) {
        json vec = json::array();
        for (const Int& x : v) vec.push_back(static_cast<long long>(x));
        lambda[id] = std::move(vec);
    }
    return {{"rank", c.rank}, {"lambda", lambda}};
}

inline CharFun charfun_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("lambda"))
        throw Error("charfun JSON: expected object with rank and lambda");
    std::map<FaceId, std::vector<Int>> lambda;
    for (const auto& [id, vec] : j.at("lambda").items()) lambda[id] = int_vector_from_json(vec);
    return CharFun(j.at("rank").get<int>(), std::move(lambda));
}

inline json to_json(const QuotientDescription& q) {
    return {{"sphere_dims", q.sphere_dims},
            {"torus_rank", q.torus_rank},
            {"kernel", to_json(q.kernel)},
            {"facet_order", q.facet_order},
            {"free", q.free}};
}

// ---- invariants -----------------------------------------------------------

inline json to_json(const HVector& h) {
    json arr = json::array();
    for (const Int& x : h.h) arr.push_back(static_cast<long long>(x));
    return arr;
}

inline json to_json(const RationalSignature& s) {
    json ranks = json::object();
    for (const auto& [deg, r] : s.ranks) ranks[std::to_string(deg)] = r;
    return {{"torus_rank", s.torus_rank}, {"sphere_dims", s.sphere_dims}, {"ranks", ranks}};
}

inline json to_json(const FaceBijection& m) {
    json out = json::object();
    for (const auto& [a, b] : m) out[a] = b;
    return out;
}

inline FaceBijection bijection_from_json(const json& j) {
    if (!j.is_object()) throw Error("bijection JSON: expected object");
    FaceBijection m;
    for (const auto& [a, b] : j.items()) m[a] = b.get<std::string>();
    return m;
}

inline json to_json(const AutGroup& g) {
    json gens = json::array();
    for (const auto& m : g.generators) gens.push_back(to_json(m));
    return {{"order", g.order}, {"generators", gens}};
}

// ---- shelling -------------------------------------------------------------

inline json to_json(const ShellingCert& c) {
    json subs = json::array();
    for (const auto& s : c.subs) {
        if (s)
            subs.push_back(to_json(*s));
        else
            subs.push_back(nullptr);
    }
    return {{"order", c.order}, {"subs", subs}};
}

inline CertPtr shelling_from_json(const json& j) {
    if (j.is_null()) return nullptr;
    if (!j.is_object() || !j.contains("order") || !j.contains("subs"))
        throw Error("shelling JSON: expected object with order and subs");
    auto c = std::make_shared<ShellingCert>();
    for (const auto& id : j.at("order")) c->order.push_back(id.get<std::string>());
    for (const auto& s : j.at("subs")) c->subs.push_back(shelling_from_json(s));
    return c;
}

} // namespace cornerkit
