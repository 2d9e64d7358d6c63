#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cornerkit/poset.hpp"

namespace cornerkit {

struct Violation {
    std::string rule;
    std::vector<FaceId> faces;
    std::string message;
};

struct CheckReport {
    std::vector<Violation> violations;
    bool passed() const { return violations.empty(); }
    void add(std::string rule, std::vector<FaceId> faces, std::string message) {
        violations.push_back({std::move(rule), std::move(faces), std::move(message)});
    }
    void merge(const CheckReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

/// Niceness: every face of dimension n-k lies below exactly k facets.
inline CheckReport check_nice(const FacePoset& P) {
    CheckReport report;
    for (std::size_t i = 0; i < P.size(); ++i) {
        int f = static_cast<int>(i);
        int want = P.dim() - P.face(f).dim;
        if (P.facet_degree(f) != want)
            report.add("nice", {P.face(f).id},
                       "codimension-" + std::to_string(want) + " face lies in " +
                           std::to_string(P.facet_degree(f)) + " facets, expected " +
                           std::to_string(want));
    }
    return report;
}

/// Every positive-dimensional face has a vertex below it, and the
/// vertex-edge graph of every face is connected.
inline CheckReport check_vertices(const FacePoset& P) {
    CheckReport report;
    for (std::size_t i = 0; i < P.size(); ++i) {
        int f = static_cast<int>(i);
        if (P.face(f).dim == 0) continue;
        std::vector<int> verts, edges;
        for (int v : P.vertices())
            if (P.leq(v, f)) verts.push_back(v);
        for (std::size_t j = 0; j < P.size(); ++j)
            if (P.face(static_cast<int>(j)).dim == 1 && P.leq(static_cast<int>(j), f))
                edges.push_back(static_cast<int>(j));
        if (verts.empty()) {
            report.add("vertices", {P.face(f).id}, "face without vertex");
            continue;
        }
        // union-find over the vertices below f, joined along edges below f
        std::map<int, int> parent;
        for (int v : verts) parent[v] = v;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int e : edges) {
            int first = -1;
            for (int v : verts) {
                if (!P.leq(v, e)) continue;
                if (first < 0)
                    first = v;
                else
                    parent[find(v)] = find(first);
            }
        }
        int root = find(verts[0]);
        for (int v : verts) {
            if (find(v) != root) {
                report.add("vertices", {P.face(f).id}, "vertex-edge graph of face is disconnected");
                break;
            }
        }
    }
    return report;
}

/// Two-face rule: every 2-dimensional face has 2, 3 or 4 vertices.
inline CheckReport check_two_faces(const FacePoset& P) {
    CheckReport report;
    for (std::size_t i = 0; i < P.size(); ++i) {
        int f = static_cast<int>(i);
        if (P.face(f).dim != 2) continue;
        int count = 0;
        for (int v : P.vertices())
            if (P.leq(v, f)) ++count;
        if (count < 2 || count > 4)
            report.add("two-face", {P.face(f).id},
                       "2-face has " + std::to_string(count) + " vertices, expected 2..4");
    }
    return report;
}

inline CheckReport check_all(const FacePoset& P) {
    CheckReport report = check_nice(P);
    report.merge(check_vertices(P));
    report.merge(check_two_faces(P));
    return report;
}

} // namespace cornerkit
