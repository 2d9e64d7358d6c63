#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cornerkit/checks.hpp"
#include "cornerkit/poset.hpp"
#include "cornerkit/recognize.hpp"

namespace cornerkit {

/// Recursive shelling certificate: an ordering of the facets, and for each
/// facet a certificate of its own whose prefix realizes the intersection
/// with the earlier facets.  Facets of dimension 0 carry no certificate
/// (points and intervals are shellable with any order).
struct ShellingCert {
    std::vector<FaceId> order;
    std::vector<std::shared_ptr<ShellingCert>> subs; ///< aligned with order; null below dim 1
};

using CertPtr = std::shared_ptr<ShellingCert>;

namespace detail {

inline CertPtr relabel_cert(const CertPtr& c, const std::function<FaceId(const FaceId&)>& f) {
    if (!c) return nullptr;
    auto out = std::make_shared<ShellingCert>();
    for (const FaceId& id : c->order) out->order.push_back(f(id));
    for (const auto& s : c->subs) out->subs.push_back(relabel_cert(s, f));
    return out;
}

} // namespace detail

/// Generic certificate builder for a given facet order: each facet's
/// sub-order lists the facets already forced by the earlier intersections
/// first (sorted by id), then the rest.  Produces valid certificates for
/// every Sigma/Delta product facet order where the intersections are unions
/// of codimension-one faces.
inline CertPtr make_shelling(const FacePoset& P, const std::vector<FaceId>& facet_order) {
    if (P.dim() == 0) return nullptr;
    auto cert = std::make_shared<ShellingCert>();
    cert->order = facet_order;
    std::vector<int> placed;
    for (const FaceId& id : facet_order) {
        int F = P.index_of(id);
        FacePoset S = P.subposet(F);
        if (S.dim() == 0) {
            cert->subs.push_back(nullptr);
            placed.push_back(F);
            continue;
        }
        std::set<FaceId> required;
        for (int E : placed)
            for (int C : P.maximal_common_faces({F, E}))
                if (P.face(C).dim == P.face(F).dim - 1) required.insert(P.face(C).id);
        std::vector<FaceId> sub_order(required.begin(), required.end());
        for (int G : S.facets())
            if (!required.count(S.face(G).id)) sub_order.push_back(S.face(G).id);
        cert->subs.push_back(make_shelling(S, sub_order));
        placed.push_back(F);
    }
    return cert;
}

/// Shelling of a single building block using the facet order sorted by id
/// (any order works for these posets).
inline CertPtr base_shelling(const FactorType& t) {
    FacePoset P = build(t);
    std::vector<FaceId> order;
    for (int F : P.facets()) order.push_back(P.face(F).id);
    return make_shelling(P, order);
}

/// Shelling of product(P1, P2) from shellings of the factors, in the order
/// F_1 x Q2, ..., F_{s-1} x Q2, Q1 x G_1, ..., Q1 x G_r, F_s x Q2; the
/// sub-certificates are built recursively by the same interleaving.
inline CertPtr product_shelling(const FacePoset& P1, const CertPtr& c1,
                                const FacePoset& P2, const CertPtr& c2) {
    const FaceId top1 = P1.face(P1.top()).id;
    const FaceId top2 = P2.face(P2.top()).id;
    if (P1.dim() == 0)
        return detail::relabel_cert(c2, [&](const FaceId& id) { return top1 + "|" + id; });
    if (P2.dim() == 0)
        return detail::relabel_cert(c1, [&](const FaceId& id) { return id + "|" + top2; });
    if (!c1 || !c2) throw Error("product_shelling: missing factor certificate");
    const std::size_t s = c1->order.size();
    auto cert = std::make_shared<ShellingCert>();
    auto push_left = [&](std::size_t i) {
        cert->order.push_back(c1->order[i] + "|" + top2);
        cert->subs.push_back(
            product_shelling(P1.subposet(P1.index_of(c1->order[i])), c1->subs[i], P2, c2));
    };
    for (std::size_t i = 0; i + 1 < s; ++i) push_left(i);
    for (std::size_t j = 0; j < c2->order.size(); ++j) {
        cert->order.push_back(top1 + "|" + c2->order[j]);
        cert->subs.push_back(
            product_shelling(P1, c1, P2.subposet(P2.index_of(c2->order[j])), c2->subs[j]));
    }
    push_left(s - 1);
    return cert;
}

namespace detail {

inline Int alternating_face_count(const FacePoset& P, const boost::dynamic_bitset<>& faces) {
    Int chi = 0;
    for (std::size_t i = faces.find_first(); i != boost::dynamic_bitset<>::npos;
         i = faces.find_next(i))
        chi += (P.face(static_cast<int>(i)).dim % 2 == 0) ? 1 : -1;
    return chi;
}

/// Verify c as a shelling of P; when prefix_faces is given, additionally
/// find the r whose closed prefix union equals it and report r through
/// found_r (0 if no check requested).
inline void verify_rec(const FacePoset& P, const ShellingCert* c, CheckReport& report,
                       const std::string& where) {
    if (P.dim() <= 0) {
        if (c) report.add("shelling", {}, where + ": certificate given for a point");
        return;
    }
    if (!c) throw Error("verify_shelling: missing certificate at " + where);
    if (c->subs.size() != c->order.size())
        throw Error("verify_shelling: order/subs length mismatch at " + where);
    std::set<FaceId> listed(c->order.begin(), c->order.end());
    std::set<FaceId> actual;
    for (int F : P.facets()) actual.insert(P.face(F).id);
    if (listed != actual || listed.size() != c->order.size()) {
        report.add("shelling", {}, where + ": order is not a permutation of the facets");
        return;
    }
    if (P.dim() == 1) {
        for (const auto& s : c->subs)
            if (s) report.add("shelling", {}, where + ": interval facet carries a certificate");
        return; // any vertex order shells an interval
    }

    const std::size_t s = c->order.size();
    boost::dynamic_bitset<> covered(P.size());
    for (std::size_t j = 0; j < s; ++j) {
        const int F = P.index_of(c->order[j]);
        FacePoset S = P.subposet(F);
        const std::string here = where + "/" + c->order[j];
        verify_rec(S, c->subs[j].get(), report, here);
        if (j > 0) {
            // faces of F lying in some earlier facet
            boost::dynamic_bitset<> rset = P.below(F) & covered;
            const ShellingCert* sub = c->subs[j].get();
            if (!sub) throw Error("verify_shelling: missing certificate at " + here);
            boost::dynamic_bitset<> prefix(P.size());
            bool matched = false;
            std::size_t r = 0;
            for (std::size_t k = 0; k < sub->order.size(); ++k) {
                prefix |= P.below(P.index_of(sub->order[k]));
                if (prefix == rset) {
                    matched = true;
                    r = k + 1;
                    break;
                }
            }
            if (!matched || r < 1)
                report.add("shelling", {c->order[j]},
                           here + ": intersection with earlier facets is not realized by a "
                                  "certificate prefix");
            else if (j + 1 < s && r == sub->order.size())
                report.add("shelling", {c->order[j]},
                           here + ": intersection uses the full certificate before the last step");
        }
        covered |= P.below(F);
        if (j + 1 < s) {
            Int chi = alternating_face_count(P, covered);
            if (chi != 1)
                report.add("shelling", {c->order[j]},
                           here + ": partial union has Euler characteristic " + chi.str() +
                               ", expected 1");
        }
    }
}

} // namespace detail

inline CheckReport verify_shelling(const FacePoset& P, const ShellingCert& c) {
    CheckReport report;
    detail::verify_rec(P, &c, report, "top");
    return report;
}

/// Restriction count r_j of each shelling step: the number of facets of F_j
/// lying in the earlier union, read off as the matched prefix length (0 for
/// j = 1).  Returns the histogram #{j : r_j = i}.
inline std::vector<long long> shelling_restriction_counts(const FacePoset& P,
                                                          const ShellingCert& c) {
    if (P.dim() == 0) return {1};
    std::vector<std::size_t> rs;
    boost::dynamic_bitset<> covered(P.size());
    for (std::size_t j = 0; j < c.order.size(); ++j) {
        const int F = P.index_of(c.order[j]);
        if (j == 0) {
            rs.push_back(0);
        } else if (P.dim() == 1) {
            rs.push_back((P.below(F) & covered).any() ? 1 : 0);
        } else {
            const ShellingCert* sub = c.subs[j].get();
            if (!sub) throw Error("shelling_restriction_counts: missing certificate");
            boost::dynamic_bitset<> rset = P.below(F) & covered;
            boost::dynamic_bitset<> prefix(P.size());
            bool matched = false;
            for (std::size_t k = 0; k < sub->order.size(); ++k) {
                prefix |= P.below(P.index_of(sub->order[k]));
                if (prefix == rset) {
                    rs.push_back(k + 1);
                    matched = true;
                    break;
                }
            }
            if (!matched)
                throw Error("shelling_restriction_counts: step '" + c.order[j] +
                            "' has no matching prefix");
        }
        covered |= P.below(F);
    }
    std::size_t max_r = static_cast<std::size_t>(P.dim());
    for (std::size_t r : rs) max_r = std::max(max_r, r);
    std::vector<long long> hist(max_r + 1, 0);
    for (std::size_t r : rs) ++hist[r];
    return hist;
}

} // namespace cornerkit
