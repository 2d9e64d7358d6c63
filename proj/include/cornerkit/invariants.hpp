#pragma once

#include <map>
#include <string>
#include <vector>

#include "cornerkit/charfun.hpp"
#include "cornerkit/iso.hpp"
#include "cornerkit/recognize.hpp"

namespace cornerkit {

/// chi(M) = chi(M^T): the fixed points sit over the vertices.
inline long long euler_characteristic(const FacePoset& P) {
    return static_cast<long long>(P.vertices().size());
}

struct HVector {
    std::vector<Int> h; ///< h_0 .. h_n

    bool operator==(const HVector& o) const { return h == o.h; }
};

/// h(t) = sum over all faces (top included) of (t-1)^dim; h_i is the
/// coefficient of t^{n-i}.  A negative coefficient means the poset is not
/// an orbit-space poset this formula covers.
inline HVector h_vector(const FacePoset& P) {
    const int n = P.dim();
    std::vector<Int> coeff(static_cast<std::size_t>(n) + 1, 0); // coeff[k] of t^k
    for (const Face& f : P.faces()) {
        // add (t-1)^dim via binomial expansion
        Int binom = 1;
        for (int k = f.dim; k >= 0; --k) {
            Int term = binom;
            if ((f.dim - k) % 2 == 1) term = -term;
            coeff[static_cast<std::size_t>(k)] += term;
            binom = binom * k / (f.dim - k + 1);
        }
    }
    HVector out;
    out.h.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const Int& c = coeff[static_cast<std::size_t>(n - i)];
        if (c < 0)
            throw Error("h_vector: negative coefficient h_" + std::to_string(i) +
                        "; not a valid orbit-space poset for this formula");
        out.h[static_cast<std::size_t>(i)] = c;
    }
    return out;
}

/// Even Betti numbers b_0, b_2, ..., b_{2n}; odd ones vanish.
inline std::vector<Int> betti(const FacePoset& P) { return h_vector(P).h; }

/// Ranks of the rational homotopy groups of the canonical model over a
/// product type, together with the data determining them.
struct RationalSignature {
    int torus_rank = 0;
    std::vector<int> sphere_dims;
    std::map<int, int> ranks; ///< degree -> rank of pi_degree tensor Q

    bool operator==(const RationalSignature& o) const {
        return torus_rank == o.torus_rank && sphere_dims == o.sphere_dims && ranks == o.ranks;
    }
};

inline RationalSignature rational_signature(const ProductType& t) {
    RationalSignature sig;
    sig.torus_rank = t.delta_count();
    sig.sphere_dims = moment_angle_type(t);
    if (sig.torus_rank > 0) sig.ranks[2] = sig.torus_rank;
    for (int d : sig.sphere_dims) {
        if (d % 2 == 1) {
            sig.ranks[d] += 1;
        } else {
            sig.ranks[d] += 1;
            sig.ranks[2 * d - 1] += 1;
        }
    }
    return sig;
}

struct AutGroup {
    std::vector<FaceBijection> generators;
    long long order = 1;
};

namespace detail {

inline FaceBijection component_swap_generator(const ReferenceProduct& ref, std::size_t factor,
                                              const FaceId& a, const FaceId& b) {
    const FacePoset& P = ref.poset;
    std::map<std::vector<FaceId>, FaceId> by_components;
    for (std::size_t i = 0; i < P.size(); ++i)
        by_components[ref.components[i]] = P.face(static_cast<int>(i)).id;
    FaceBijection g;
    for (std::size_t i = 0; i < P.size(); ++i) {
        std::vector<FaceId> c = ref.components[i];
        if (c[factor] == a)
            c[factor] = b;
        else if (c[factor] == b)
            c[factor] = a;
        g[P.face(static_cast<int>(i)).id] = by_components.at(c);
    }
    return g;
}

} // namespace detail

/// The restricted automorphism group of the reference poset of t: one
/// involution per Sigma factor (swapping the two vertices "+" and "-" of
/// that factor) and one per interval factor (swapping its two endpoints).
/// These commute, so the order is 2^#generators.
inline AutGroup restricted_aut_group(const ProductType& t) {
    ReferenceProduct ref = build_reference(t);
    AutGroup G;
    for (std::size_t j = 0; j < t.factors.size(); ++j) {
        const FactorType& f = t.factors[j];
        if (f.kind == FactorType::Kind::Sigma)
            G.generators.push_back(detail::component_swap_generator(ref, j, "+", "-"));
        else if (f.n == 1)
            G.generators.push_back(detail::component_swap_generator(ref, j, "0", "1"));
    }
    G.order = 1LL << G.generators.size();
    return G;
}

namespace detail {

inline FaceBijection compose(const FaceBijection& g, const FaceBijection& h) {
    FaceBijection out;
    for (const auto& [a, b] : h) out[a] = g.at(b);
    return out;
}

inline bool is_identity(const FaceBijection& g) {
    for (const auto& [a, b] : g)
        if (a != b) return false;
    return true;
}

/// Closure of a generating set under composition (the groups here are
/// small; no inverses needed since all our generators are involutions and
/// the set is closed as a group anyway once composition saturates).
inline std::vector<FaceBijection> group_closure(const FacePoset& P,
                                                const std::vector<FaceBijection>& gens,
                                                std::size_t limit = 4096) {
    FaceBijection id;
    for (const Face& f : P.faces()) id[f.id] = f.id;
    std::set<FaceBijection> elems{id};
    std::vector<FaceBijection> frontier{id};
    while (!frontier.empty()) {
        std::vector<FaceBijection> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                FaceBijection c = compose(g, e);
                if (elems.insert(c).second) next.push_back(c);
            }
        if (elems.size() > limit) throw SearchTooLarge("group_closure: group too large");
        frontier = std::move(next);
    }
    return {elems.begin(), elems.end()};
}

} // namespace detail

/// Certify the necessary conditions for a set of poset automorphisms to
/// induce a free deck action on the model: lambda-equivariance up to sign
/// on facets, disjointness of moved faces, and freeness of the generated
/// group on vertices.  These are necessary conditions only; the report says
/// so in each violation message context.
inline CheckReport check_free_deck(const ModelSpec& spec, const std::vector<FaceBijection>& gens) {
    const FacePoset& P = spec.poset;
    CheckReport report;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const FaceBijection& g = gens[gi];
        if (!is_automorphism(P, g))
            throw Error("check_free_deck: generator " + std::to_string(gi) +
                        " is not an automorphism of the poset");
        if (detail::is_identity(g)) {
            report.add("deck-free", {},
                       "generator " + std::to_string(gi) +
                           " is the identity and fixes every vertex (necessary condition)");
            continue;
        }
        for (int F : P.facets()) {
            const FaceId& id = P.face(F).id;
            const FaceId& gid = g.at(id);
            const auto& v = spec.charfun.lambda.at(id);
            const auto& w = spec.charfun.lambda.at(gid);
            bool eq = true, neg = true;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] != w[i]) eq = false;
                if (v[i] != -w[i]) neg = false;
            }
            if (!eq && !neg)
                report.add("deck-lambda", {id, gid},
                           "generator " + std::to_string(gi) +
                               " does not preserve the isotropy circle (necessary condition)");
        }
        for (const Face& f : P.faces()) {
            const FaceId& gid = g.at(f.id);
            if (gid == f.id) continue;
            if (P.meets(P.index_of(f.id), P.index_of(gid)))
                report.add("deck-disjoint", {f.id, gid},
                           "moved face meets its image (necessary condition)");
        }
    }
    std::vector<FaceBijection> group = detail::group_closure(P, gens);
    for (const FaceBijection& e : group) {
        if (detail::is_identity(e)) continue;
        for (int v : P.vertices()) {
            const FaceId& id = P.face(v).id;
            if (e.at(id) == id) {
                report.add("deck-free", {id},
                           "non-identity group element fixes a vertex (necessary condition)");
                break;
            }
        }
    }
    return report;
}

} // namespace cornerkit
