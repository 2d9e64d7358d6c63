#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cornerkit/error.hpp"

namespace cornerkit {

using FaceId = std::string;

struct Face {
    FaceId id;
    int dim = 0;
};

/// Ranked face poset of a nice manifold with corners.
///
/// Stores faces and cover relations ("lower is a codimension-one face of
/// upper"); containment is the transitive closure of covers and is cached as
/// bitsets at construction.  There is exactly one face of top dimension, the
/// whole space.  Immutable after construction.
class FacePoset {
public:
    FacePoset(int dim, std::vector<Face> faces,
              std::vector<std::pair<FaceId, FaceId>> covers)
        : dim_(dim), faces_(std::move(faces)) {
        if (dim_ < 0) throw Error("FacePoset: negative dimension");
        for (std::size_t i = 0; i < faces_.size(); ++i) {
            const Face& f = faces_[i];
            if (f.dim < 0 || f.dim > dim_)
                throw Error("FacePoset: face '" + f.id + "' has dimension outside 0.." +
                            std::to_string(dim_));
            if (!index_.emplace(f.id, static_cast<int>(i)).second)
                throw Error("FacePoset: duplicate face id '" + f.id + "'");
        }
        top_ = -1;
        for (std::size_t i = 0; i < faces_.size(); ++i) {
            if (faces_[i].dim == dim_) {
                if (top_ >= 0) throw Error("FacePoset: more than one top-dimensional face");
                top_ = static_cast<int>(i);
            }
        }
        if (top_ < 0) throw Error("FacePoset: missing top-dimensional face");

        up_.resize(faces_.size());
        down_.resize(faces_.size());
        for (const auto& [lo, hi] : covers) {
            int a = index_of(lo);
            int b = index_of(hi);
            if (faces_[b].dim != faces_[a].dim + 1)
                throw Error("FacePoset: cover ('" + lo + "','" + hi +
                            "') does not raise dimension by 1");
            covers_.emplace_back(a, b);
            up_[a].push_back(b);
            down_[b].push_back(a);
        }
        for (auto& v : up_) std::sort(v.begin(), v.end());
        for (auto& v : down_) std::sort(v.begin(), v.end());

        // below_[b] = all faces <= b (reflexive), by increasing dimension.
        below_.assign(faces_.size(), boost::dynamic_bitset<>(faces_.size()));
        std::vector<int> order(faces_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return faces_[a].dim < faces_[b].dim; });
        for (int f : order) {
            below_[f].set(f);
            for (int d : down_[f]) below_[f] |= below_[d];
        }

        for (std::size_t i = 0; i < faces_.size(); ++i) {
            if (faces_[i].dim == dim_ - 1) facets_.push_back(static_cast<int>(i));
            if (faces_[i].dim == 0) vertices_.push_back(static_cast<int>(i));
        }
        auto by_id = [&](int a, int b) { return faces_[a].id < faces_[b].id; };
        std::sort(facets_.begin(), facets_.end(), by_id);
        std::sort(vertices_.begin(), vertices_.end(), by_id);

        // facet degree: number of facets containing the face (reflexive).
        facet_degree_.assign(faces_.size(), 0);
        for (int F : facets_)
            for (std::size_t i = 0; i < faces_.size(); ++i)
                if (below_[F].test(i)) ++facet_degree_[i];
    }

    int dim() const { return dim_; }
    std::size_t size() const { return faces_.size(); }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int i) const { return faces_[static_cast<std::size_t>(i)]; }
    int top() const { return top_; }

    int index_of(const FaceId& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw Error("FacePoset: unknown face id '" + id + "'");
        return it->second;
    }
    bool has_face(const FaceId& id) const { return index_.count(id) != 0; }

    /// Facet and vertex index lists, sorted by id.
    const std::vector<int>& facets() const { return facets_; }
    const std::vector<int>& vertices() const { return vertices_; }

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& covers_up(int f) const { return up_[static_cast<std::size_t>(f)]; }
    const std::vector<int>& covers_down(int f) const { return down_[static_cast<std::size_t>(f)]; }

    /// a <= b in the face order (reflexive).
    bool leq(int a, int b) const { return below_[static_cast<std::size_t>(b)].test(static_cast<std::size_t>(a)); }

    const boost::dynamic_bitset<>& below(int f) const { return below_[static_cast<std::size_t>(f)]; }

    /// Number of facets containing the face (a facet contains itself).
    int facet_degree(int f) const { return facet_degree_[static_cast<std::size_t>(f)]; }

    /// True iff a and b have a common lower bound.
    bool meets(int a, int b) const { return (below_[static_cast<std::size_t>(a)] & below_[static_cast<std::size_t>(b)]).any(); }

    /// Maximal common lower bounds of a set of faces ("components" of the
    /// intersection).
    std::vector<int> maximal_common_faces(const std::vector<int>& fs) const {
        if (fs.empty()) return {top_};
        boost::dynamic_bitset<> common = below_[static_cast<std::size_t>(fs[0])];
        for (std::size_t i = 1; i < fs.size(); ++i) common &= below_[static_cast<std::size_t>(fs[i])];
        std::vector<int> maximal;
        for (std::size_t f = common.find_first(); f != boost::dynamic_bitset<>::npos;
             f = common.find_next(f)) {
            bool dominated = false;
            for (int u : up_[f])
                if (common.test(static_cast<std::size_t>(u))) { dominated = true; break; }
            if (!dominated) maximal.push_back(static_cast<int>(f));
        }
        std::sort(maximal.begin(), maximal.end(),
                  [&](int a, int b) { return faces_[static_cast<std::size_t>(a)].id < faces_[static_cast<std::size_t>(b)].id; });
        return maximal;
    }

    /// The closed face f as a poset of its own (ids preserved, top = f).
    FacePoset subposet(int f) const {
        std::vector<Face> sub;
        std::vector<std::pair<FaceId, FaceId>> subcovers;
        const auto& bs = below_[static_cast<std::size_t>(f)];
        for (std::size_t i = bs.find_first(); i != boost::dynamic_bitset<>::npos; i = bs.find_next(i))
            sub.push_back(faces_[i]);
        for (const auto& [a, b] : covers_)
            if (bs.test(static_cast<std::size_t>(a)) && bs.test(static_cast<std::size_t>(b)))
                subcovers.emplace_back(faces_[static_cast<std::size_t>(a)].id, faces_[static_cast<std::size_t>(b)].id);
        return FacePoset(faces_[static_cast<std::size_t>(f)].dim, std::move(sub), std::move(subcovers));
    }

    FacePoset relabel(const std::map<FaceId, FaceId>& rename) const {
        std::vector<Face> fs;
        fs.reserve(faces_.size());
        for (const Face& f : faces_) {
            auto it = rename.find(f.id);
            if (it == rename.end()) throw Error("relabel: no image for '" + f.id + "'");
            fs.push_back({it->second, f.dim});
        }
        std::vector<std::pair<FaceId, FaceId>> cs;
        cs.reserve(covers_.size());
        for (const auto& [a, b] : covers_)
            cs.emplace_back(fs[static_cast<std::size_t>(a)].id, fs[static_cast<std::size_t>(b)].id);
        return FacePoset(dim_, std::move(fs), std::move(cs));
    }

private:
    int dim_;
    std::vector<Face> faces_;
    std::map<FaceId, int> index_;
    int top_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<boost::dynamic_bitset<>> below_;
    std::vector<int> facets_, vertices_;
    std::vector<int> facet_degree_;
};

namespace detail {

inline std::string join_indices(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(xs[i]);
    }
    return s;
}

} // namespace detail

/// Face poset of the n-simplex.  Faces are the nonempty subsets of {0..n};
/// the full set is the top face.
inline FacePoset delta(int n) {
    if (n < 0) throw Error("delta: n must be >= 0");
    std::vector<Face> faces;
    std::vector<std::pair<FaceId, FaceId>> covers;
    const std::uint32_t full = (n >= 31) ? 0 : ((1u << (n + 1)) - 1);
    if (n >= 31) throw Error("delta: n too large");
    std::vector<std::string> names(full + 1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::vector<int> elems;
        for (int i = 0; i <= n; ++i)
            if (s & (1u << i)) elems.push_back(i);
        names[s] = detail::join_indices(elems);
        faces.push_back({names[s], static_cast<int>(elems.size()) - 1});
    }
    for (std::uint32_t s = 1; s <= full; ++s)
        for (int i = 0; i <= n; ++i)
            if (!(s & (1u << i)) && (s | (1u << i)) <= full)
                covers.emplace_back(names[s], names[s | (1u << i)]);
    return FacePoset(n, std::move(faces), std::move(covers));
}

/// Face poset of the orbit space of the linear torus action on S^{2n}.
/// Faces of positive dimension are indexed by proper subsets S of {1..n}
/// (dimension n - |S|, ordered by reverse inclusion); the full subset splits
/// into the two vertices "+" and "-", which lie below every other face.
inline FacePoset sigma(int n) {
    if (n < 2) throw Error("sigma: n must be >= 2; use delta(1)");
    if (n >= 31) throw Error("sigma: n too large");
    std::vector<Face> faces;
    std::vector<std::pair<FaceId, FaceId>> covers;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::string> names(full);
    for (std::uint32_t s = 0; s < full; ++s) {
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (s & (1u << i)) elems.push_back(i + 1);
        names[s] = s == 0 ? "T" : "F" + detail::join_indices(elems);
        faces.push_back({names[s], n - static_cast<int>(elems.size())});
    }
    faces.push_back({"+", 0});
    faces.push_back({"-", 0});
    for (std::uint32_t s = 0; s < full; ++s)
        for (int i = 0; i < n; ++i)
            if (!(s & (1u << i)) && (s | (1u << i)) != full)
                covers.emplace_back(names[s | (1u << i)], names[s]);
    // The two vertices lie under every 1-dimensional face.
    for (std::uint32_t s = 0; s < full; ++s) {
        if (static_cast<int>(faces[s].dim) == 1) {
            covers.emplace_back("+", names[s]);
            covers.emplace_back("-", names[s]);
        }
    }
    return FacePoset(n, std::move(faces), std::move(covers));
}

/// Product of two face posets.  Faces are pairs with id "p|q"; the facets are
/// facets(P) x top(Q) together with top(P) x facets(Q).
inline FacePoset product(const FacePoset& P, const FacePoset& Q) {
    std::vector<Face> faces;
    faces.reserve(P.size() * Q.size());
    auto pair_id = [](const FaceId& a, const FaceId& b) { return a + "|" + b; };
    for (const Face& f : P.faces())
        for (const Face& g : Q.faces())
            faces.push_back({pair_id(f.id, g.id), f.dim + g.dim});
    std::vector<std::pair<FaceId, FaceId>> covers;
    for (const Face& g : Q.faces())
        for (const auto& [a, b] : P.covers())
            covers.emplace_back(pair_id(P.face(a).id, g.id), pair_id(P.face(b).id, g.id));
    for (const Face& f : P.faces())
        for (const auto& [a, b] : Q.covers())
            covers.emplace_back(pair_id(f.id, Q.face(a).id), pair_id(f.id, Q.face(b).id));
    return FacePoset(P.dim() + Q.dim(), std::move(faces), std::move(covers));
}

/// Deterministic Fisher-Yates over the engine's raw output, so shuffles are
/// reproducible across standard libraries.
template <typename Rng>
void deterministic_shuffle(std::vector<std::size_t>& xs, Rng& rng) {
    for (std::size_t i = xs.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(xs[i - 1], xs[j]);
    }
}

/// Relabel all faces with anonymous ids "f0".."fN" assigned in a seeded
/// random order.
inline FacePoset shuffled(const FacePoset& P, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(P.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    deterministic_shuffle(perm, rng);
    std::map<FaceId, FaceId> rename;
    for (std::size_t i = 0; i < perm.size(); ++i)
        rename[P.face(static_cast<int>(i)).id] = "f" + std::to_string(perm[i]);
    return P.relabel(rename);
}

} // namespace cornerkit
