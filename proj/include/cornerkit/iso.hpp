#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cornerkit/poset.hpp"

namespace cornerkit {

using FaceBijection = std::map<FaceId, FaceId>;

namespace detail {

/// Iterated colour refinement over both posets at once.  Initial colour is
/// (dim, facet degree, #up, #down); refinement folds in the sorted colour
/// multisets of cover neighbours until stable.
inline std::pair<std::vector<int>, std::vector<int>>
refine_colors(const FacePoset& P, const FacePoset& Q) {
    auto init = [](const FacePoset& X) {
        std::vector<std::tuple<int, int, int, int>> key(X.size());
        for (std::size_t i = 0; i < X.size(); ++i)
            key[i] = {X.face(static_cast<int>(i)).dim, X.facet_degree(static_cast<int>(i)),
                      static_cast<int>(X.covers_up(static_cast<int>(i)).size()),
                      static_cast<int>(X.covers_down(static_cast<int>(i)).size())};
        return key;
    };
    auto kp = init(P);
    auto kq = init(Q);
    std::map<std::tuple<int, int, int, int>, int> dict;
    std::vector<int> cp(P.size()), cq(Q.size());
    for (std::size_t i = 0; i < P.size(); ++i) cp[i] = dict.emplace(kp[i], static_cast<int>(dict.size())).first->second;
    for (std::size_t i = 0; i < Q.size(); ++i) cq[i] = dict.emplace(kq[i], static_cast<int>(dict.size())).first->second;

    for (int round = 0; round < 64; ++round) {
        using NewKey = std::tuple<int, std::vector<int>, std::vector<int>>;
        auto step = [&](const FacePoset& X, const std::vector<int>& c) {
            std::vector<NewKey> out(X.size());
            for (std::size_t i = 0; i < X.size(); ++i) {
                std::vector<int> ups, downs;
                for (int u : X.covers_up(static_cast<int>(i))) ups.push_back(c[static_cast<std::size_t>(u)]);
                for (int d : X.covers_down(static_cast<int>(i))) downs.push_back(c[static_cast<std::size_t>(d)]);
                std::sort(ups.begin(), ups.end());
                std::sort(downs.begin(), downs.end());
                out[i] = {c[i], std::move(ups), std::move(downs)};
            }
            return out;
        };
        auto np = step(P, cp);
        auto nq = step(Q, cq);
        std::map<NewKey, int> ndict;
        std::vector<int> cp2(P.size()), cq2(Q.size());
        for (std::size_t i = 0; i < P.size(); ++i) cp2[i] = ndict.emplace(np[i], static_cast<int>(ndict.size())).first->second;
        for (std::size_t i = 0; i < Q.size(); ++i) cq2[i] = ndict.emplace(nq[i], static_cast<int>(ndict.size())).first->second;
        std::set<int> before(cp.begin(), cp.end());
        before.insert(cq.begin(), cq.end());
        std::set<int> after(cp2.begin(), cp2.end());
        after.insert(cq2.begin(), cq2.end());
        bool stable = after.size() == before.size();
        cp.swap(cp2);
        cq.swap(cq2);
        if (stable) break;
    }
    return {cp, cq};
}

/// Backtracking search for dimension- and cover-preserving bijections.
/// Finds one (find_all = false) or all (find_all = true) maps P -> Q.
inline std::vector<std::vector<int>>
bijection_search(const FacePoset& P, const FacePoset& Q,
                 const std::vector<int>& cp, const std::vector<int>& cq,
                 const std::vector<std::pair<int, int>>& forced, bool find_all) {
    std::vector<std::vector<int>> results;
    const std::size_t n = P.size();
    if (Q.size() != n || P.dim() != Q.dim() || P.covers().size() != Q.covers().size())
        return results;
    // colour histograms must agree
    std::map<int, int> hist;
    for (int c : cp) hist[c]++;
    for (int c : cq) hist[c]--;
    for (const auto& [c, d] : hist)
        if (d != 0) return results;

    // candidate lists per colour, sorted by (dim, facet degree, id)
    std::map<int, std::vector<int>> by_color;
    for (std::size_t i = 0; i < n; ++i) by_color[cq[i]].push_back(static_cast<int>(i));
    for (auto& [c, v] : by_color)
        std::sort(v.begin(), v.end(), [&](int a, int b) {
            auto key = [&](int x) {
                return std::make_tuple(Q.face(x).dim, Q.facet_degree(x), Q.face(x).id);
            };
            return key(a) < key(b);
        });

    std::vector<int> img(n, -1), pre(n, -1);
    std::vector<std::pair<int, int>> pins = forced;
    for (const auto& [a, b] : pins) {
        if (cp[static_cast<std::size_t>(a)] != cq[static_cast<std::size_t>(b)]) return results;
        img[static_cast<std::size_t>(a)] = b;
        pre[static_cast<std::size_t>(b)] = a;
    }

    auto compatible = [&](int f, int g) {
        for (int u : P.covers_up(f)) {
            int m = img[static_cast<std::size_t>(u)];
            if (m >= 0) {
                const auto& gu = Q.covers_up(g);
                if (!std::binary_search(gu.begin(), gu.end(), m)) return false;
            }
        }
        for (int d : P.covers_down(f)) {
            int m = img[static_cast<std::size_t>(d)];
            if (m >= 0) {
                const auto& gd = Q.covers_down(g);
                if (!std::binary_search(gd.begin(), gd.end(), m)) return false;
            }
        }
        for (int u : Q.covers_up(g)) {
            int m = pre[static_cast<std::size_t>(u)];
            if (m >= 0) {
                const auto& fu = P.covers_up(f);
                if (!std::binary_search(fu.begin(), fu.end(), m)) return false;
            }
        }
        for (int d : Q.covers_down(g)) {
            int m = pre[static_cast<std::size_t>(d)];
            if (m >= 0) {
                const auto& fd = P.covers_down(f);
                if (!std::binary_search(fd.begin(), fd.end(), m)) return false;
            }
        }
        return true;
    };

    // Most-constrained-first selection keeps the search shallow on the highly
    // symmetric product posets.
    auto pick = [&]() {
        int best = -1;
        std::tuple<int, int, std::string> best_key;
        for (std::size_t i = 0; i < n; ++i) {
            if (img[i] >= 0) continue;
            int mapped_nbrs = 0;
            for (int u : P.covers_up(static_cast<int>(i)))
                if (img[static_cast<std::size_t>(u)] >= 0) ++mapped_nbrs;
            for (int d : P.covers_down(static_cast<int>(i)))
                if (img[static_cast<std::size_t>(d)] >= 0) ++mapped_nbrs;
            std::tuple<int, int, std::string> key{-mapped_nbrs, -P.face(static_cast<int>(i)).dim,
                                                  P.face(static_cast<int>(i)).id};
            if (best < 0 || key < best_key) {
                best = static_cast<int>(i);
                best_key = key;
            }
        }
        return best;
    };

    std::function<bool()> go = [&]() -> bool {
        int f = pick();
        if (f < 0) {
            results.push_back(img);
            return !find_all;
        }
        for (int g : by_color[cp[static_cast<std::size_t>(f)]]) {
            if (pre[static_cast<std::size_t>(g)] >= 0) continue;
            if (!compatible(f, g)) continue;
            img[static_cast<std::size_t>(f)] = g;
            pre[static_cast<std::size_t>(g)] = f;
            if (go()) return true;
            img[static_cast<std::size_t>(f)] = -1;
            pre[static_cast<std::size_t>(g)] = -1;
        }
        return false;
    };
    go();
    return results;
}

} // namespace detail

/// A dimension- and cover-preserving bijection P -> Q, or absent.
/// Deterministic given the input face orderings.
inline std::optional<FaceBijection> isomorphism(const FacePoset& P, const FacePoset& Q) {
    auto [cp, cq] = detail::refine_colors(P, Q);
    auto found = detail::bijection_search(P, Q, cp, cq, {}, false);
    if (found.empty()) return std::nullopt;
    FaceBijection out;
    for (std::size_t i = 0; i < P.size(); ++i)
        out[P.face(static_cast<int>(i)).id] = Q.face(found[0][i]).id;
    return out;
}

/// All dimension- and cover-preserving self-bijections fixing every pinned
/// face.  Exhaustive; refuses posets above max_faces.
inline std::vector<FaceBijection> automorphisms(const FacePoset& P,
                                                const std::set<FaceId>& pinned = {},
                                                std::size_t max_faces = 500) {
    if (P.size() > max_faces)
        throw SearchTooLarge("automorphisms: search too large (" + std::to_string(P.size()) +
                             " faces > bound " + std::to_string(max_faces) + ")");
    auto [cp, cq] = detail::refine_colors(P, P);
    std::vector<std::pair<int, int>> forced;
    for (const FaceId& id : pinned) {
        int i = P.index_of(id);
        forced.emplace_back(i, i);
    }
    auto found = detail::bijection_search(P, P, cp, cq, forced, true);
    std::vector<FaceBijection> out;
    out.reserve(found.size());
    for (const auto& img : found) {
        FaceBijection m;
        for (std::size_t i = 0; i < P.size(); ++i)
            m[P.face(static_cast<int>(i)).id] = P.face(img[i]).id;
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Check that a map is a dimension- and cover-preserving bijection of P.
inline bool is_automorphism(const FacePoset& P, const FaceBijection& m) {
    if (m.size() != P.size()) return false;
    std::vector<int> img(P.size(), -1);
    std::vector<bool> hit(P.size(), false);
    for (const auto& [a, b] : m) {
        if (!P.has_face(a) || !P.has_face(b)) return false;
        int ia = P.index_of(a), ib = P.index_of(b);
        if (P.face(ia).dim != P.face(ib).dim) return false;
        if (hit[static_cast<std::size_t>(ib)]) return false;
        hit[static_cast<std::size_t>(ib)] = true;
        img[static_cast<std::size_t>(ia)] = ib;
    }
    for (const auto& [a, b] : P.covers()) {
        const auto& up = P.covers_up(img[static_cast<std::size_t>(a)]);
        if (!std::binary_search(up.begin(), up.end(), img[static_cast<std::size_t>(b)])) return false;
    }
    return true;
}

} // namespace cornerkit
