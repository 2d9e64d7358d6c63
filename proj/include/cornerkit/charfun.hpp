#pragma once

#include <map>
#include <string>
#include <vector>

#include "cornerkit/lattice.hpp"
#include "cornerkit/recognize.hpp"

namespace cornerkit {

/// Characteristic function: each facet carries a primitive integer vector
/// generating its isotropy circle.  Vectors are meaningful up to sign, so
/// equality is tested up to per-facet sign.
struct CharFun {
    int rank = 0;
    std::map<FaceId, std::vector<Int>> lambda;

    CharFun() = default;
    CharFun(int rank_, std::map<FaceId, std::vector<Int>> lambda_)
        : rank(rank_), lambda(std::move(lambda_)) {
        if (rank < 0) throw Error("CharFun: negative rank");
        for (const auto& [id, v] : lambda) {
            if (static_cast<int>(v.size()) != rank)
                throw Error("CharFun: vector for facet '" + id + "' has length " +
                            std::to_string(v.size()) + ", expected " + std::to_string(rank));
            if (!is_primitive(v)) throw Error("CharFun: vector for facet '" + id + "' is not primitive");
        }
    }

    bool same_up_to_sign(const CharFun& o) const {
        if (rank != o.rank || lambda.size() != o.lambda.size()) return false;
        for (const auto& [id, v] : lambda) {
            auto it = o.lambda.find(id);
            if (it == o.lambda.end()) return false;
            bool eq = true, neg = true;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] != it->second[i]) eq = false;
                if (v[i] != -it->second[i]) neg = false;
            }
            if (!eq && !neg) return false;
        }
        return true;
    }
};

/// A face poset together with a characteristic function on its facets.
struct ModelSpec {
    FacePoset poset;
    CharFun charfun;

    ModelSpec(FacePoset p, CharFun c) : poset(std::move(p)), charfun(std::move(c)) {
        if (charfun.rank != poset.dim())
            throw Error("ModelSpec: charfun rank " + std::to_string(charfun.rank) +
                        " does not match poset dimension " + std::to_string(poset.dim()));
        for (int F : poset.facets())
            if (!charfun.lambda.count(poset.face(F).id))
                throw Error("ModelSpec: facet '" + poset.face(F).id + "' has no vector");
        if (charfun.lambda.size() != poset.facets().size())
            throw Error("ModelSpec: charfun maps a face that is not a facet");
    }
};

/// Non-singularity: at every vertex the vectors of the facets through it
/// form a basis of Z^n.  Violations list the offending vertices.
inline CheckReport validate_charfun(const ModelSpec& spec) {
    const FacePoset& P = spec.poset;
    CheckReport report;
    for (int v : P.vertices()) {
        std::vector<std::vector<Int>> vecs;
        for (int F : P.facets())
            if (P.leq(v, F)) vecs.push_back(spec.charfun.lambda.at(P.face(F).id));
        if (static_cast<int>(vecs.size()) != P.dim()) {
            report.add("charfun", {P.face(v).id},
                       "vertex lies in " + std::to_string(vecs.size()) + " facets, expected " +
                           std::to_string(P.dim()));
            continue;
        }
        bool unimodular = false;
        try {
            unimodular = is_unimodular_basis(vecs);
        } catch (const Error&) {
            unimodular = false;
        }
        if (!unimodular)
            report.add("charfun", {P.face(v).id},
                       "facet vectors at vertex do not form a lattice basis");
    }
    return report;
}

/// Sphere dimensions of the moment-angle complex Z_Q of a product type:
/// Delta(k) contributes S^{2k+1}, Sigma(k) contributes S^{2k}.
inline std::vector<int> moment_angle_type(const ProductType& t) {
    std::vector<int> dims;
    for (const FactorType& f : t.factors)
        dims.push_back(f.kind == FactorType::Kind::Delta ? 2 * f.n + 1 : 2 * f.n);
    std::sort(dims.begin(), dims.end());
    return dims;
}

/// The n x m matrix of the torus homomorphism psi: column i is the vector
/// of facet_order[i].
inline IntMatrix psi_matrix(const ModelSpec& spec, const std::vector<FaceId>& facet_order) {
    const FacePoset& P = spec.poset;
    if (facet_order.size() != P.facets().size())
        throw Error("psi_matrix: facet order has wrong length");
    std::set<FaceId> seen;
    IntMatrix M(static_cast<std::size_t>(P.dim()), facet_order.size());
    for (std::size_t j = 0; j < facet_order.size(); ++j) {
        const FaceId& id = facet_order[j];
        int F = P.index_of(id);
        if (P.face(F).dim != P.dim() - 1) throw Error("psi_matrix: '" + id + "' is not a facet");
        if (!seen.insert(id).second) throw Error("psi_matrix: duplicate facet '" + id + "'");
        const auto& v = spec.charfun.lambda.at(id);
        for (std::size_t i = 0; i < v.size(); ++i) M.at(i, j) = v[i];
    }
    return M;
}

/// Facets in id order — the order used for psi whenever none is given.
inline std::vector<FaceId> default_facet_order(const FacePoset& P) {
    std::vector<FaceId> order;
    for (int F : P.facets()) order.push_back(P.face(F).id);
    return order;
}

/// The canonical model behind a valid (poset, lambda) pair: Z_Q is a
/// product of spheres and the manifold is its quotient by the free
/// subtorus ker psi.
struct QuotientDescription {
    std::vector<int> sphere_dims;
    int torus_rank = 0;
    IntMatrix kernel;          ///< columns span ker psi (facets in id order)
    std::vector<FaceId> facet_order;
    bool free = false;
};

inline QuotientDescription quotient_description(const ModelSpec& spec) {
    RecognitionOutcome rec = recognize(spec.poset);
    if (!rec.recognized())
        throw Error("quotient_description: poset not recognized (" + rec.rejection + ")");
    CheckReport validation = validate_charfun(spec);
    if (!validation.passed())
        throw Error("quotient_description: characteristic function invalid at " +
                    std::to_string(validation.violations.size()) + " vertices");
    QuotientDescription out;
    out.sphere_dims = moment_angle_type(rec.result->type);
    out.facet_order = default_facet_order(spec.poset);
    IntMatrix psi = psi_matrix(spec, out.facet_order);
    out.torus_rank = static_cast<int>(psi.cols()) - static_cast<int>(psi.rows());
    out.kernel = kernel_basis(psi);
    SnfResult snf = smith_normal_form(psi);
    bool all_ones = snf.rank() == psi.rows();
    for (const Int& d : snf.invariant_factors())
        if (d != 1) all_ones = false;
    out.free = all_ones;
    return out;
}

} // namespace cornerkit
