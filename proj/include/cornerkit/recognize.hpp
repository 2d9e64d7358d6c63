#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cornerkit/checks.hpp"
#include "cornerkit/iso.hpp"
#include "cornerkit/poset.hpp"

namespace cornerkit {

/// Building block of a product orbit space: Sigma(n) for n >= 2 or
/// Delta(n) for n >= 1.  Sigma(1) is the interval and normalizes to
/// Delta(1).
struct FactorType {
    enum class Kind { Sigma, Delta };
    Kind kind;
    int n;

    static FactorType make(Kind kind, int n) {
        if (kind == Kind::Sigma) {
            if (n < 1) throw Error("FactorType: Sigma requires n >= 2");
            if (n == 1) return {Kind::Delta, 1}; // combinatorially the interval
        } else if (n < 1) {
            throw Error("FactorType: Delta requires n >= 1");
        }
        return {kind, n};
    }
    static FactorType sigma(int n) { return make(Kind::Sigma, n); }
    static FactorType delta(int n) { return make(Kind::Delta, n); }

    int facet_count() const { return kind == Kind::Sigma ? n : n + 1; }
    int vertex_count() const { return kind == Kind::Sigma ? 2 : n + 1; }

    auto key() const { return std::make_pair(kind == Kind::Sigma ? 0 : 1, n); }
    bool operator==(const FactorType& o) const { return key() == o.key(); }
    bool operator<(const FactorType& o) const { return key() < o.key(); }

    std::string str() const {
        return (kind == Kind::Sigma ? "Sigma(" : "Delta(") + std::to_string(n) + ")";
    }
};

/// Ordered list of factors, kept in canonical order (Sigma factors first by
/// n, then Delta factors by n).  The empty product is a point.
struct ProductType {
    std::vector<FactorType> factors;

    ProductType() = default;
    explicit ProductType(std::vector<FactorType> fs) : factors(std::move(fs)) {
        std::sort(factors.begin(), factors.end());
    }

    int dim() const {
        int d = 0;
        for (const auto& f : factors) d += f.n;
        return d;
    }
    int facet_count() const {
        int m = 0;
        for (const auto& f : factors) m += f.facet_count();
        return m;
    }
    long long vertex_count() const {
        long long v = 1;
        for (const auto& f : factors) v *= f.vertex_count();
        return v;
    }
    int sigma_count() const {
        return static_cast<int>(std::count_if(factors.begin(), factors.end(), [](const FactorType& f) {
            return f.kind == FactorType::Kind::Sigma;
        }));
    }
    int delta_count() const { return static_cast<int>(factors.size()) - sigma_count(); }
    int interval_count() const {
        return static_cast<int>(std::count_if(factors.begin(), factors.end(), [](const FactorType& f) {
            return f.kind == FactorType::Kind::Delta && f.n == 1;
        }));
    }

    bool operator==(const ProductType& o) const { return factors == o.factors; }
    bool operator<(const ProductType& o) const {
        return std::lexicographical_compare(factors.begin(), factors.end(), o.factors.begin(),
                                            o.factors.end(),
                                            [](const FactorType& a, const FactorType& b) { return a < b; });
    }

    std::string str() const {
        if (factors.empty()) return "Point";
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += "x";
            s += factors[i].str();
        }
        return s;
    }
};

/// Parse "Sigma(2)xDelta(1)" (case-insensitive, whitespace ignored).
/// "Point" denotes the empty product.
inline ProductType parse_product_type(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (s.empty() || s == "point") return ProductType{};
    std::vector<FactorType> fs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        FactorType::Kind kind;
        if (s.compare(pos, 6, "sigma(") == 0) {
            kind = FactorType::Kind::Sigma;
            pos += 6;
        } else if (s.compare(pos, 6, "delta(") == 0) {
            kind = FactorType::Kind::Delta;
            pos += 6;
        } else {
            throw Error("parse_product_type: expected Sigma(n) or Delta(n) at '" + s.substr(pos) + "'");
        }
        std::size_t close = s.find(')', pos);
        if (close == std::string::npos) throw Error("parse_product_type: missing ')'");
        int n;
        try {
            n = std::stoi(s.substr(pos, close - pos));
        } catch (const std::exception&) {
            throw Error("parse_product_type: bad factor dimension '" + s.substr(pos, close - pos) + "'");
        }
        fs.push_back(FactorType::make(kind, n));
        pos = close + 1;
        if (pos < s.size()) {
            if (s[pos] != 'x') throw Error("parse_product_type: expected 'x' between factors");
            ++pos;
        }
    }
    return ProductType(std::move(fs));
}

inline FacePoset build(const FactorType& f) {
    return f.kind == FactorType::Kind::Sigma ? sigma(f.n) : delta(f.n);
}

/// Reference poset of a product type together with the factor index of each
/// facet.
struct ReferenceProduct {
    FacePoset poset;
    std::map<FaceId, int> facet_factor;          ///< facet id -> factor index
    std::vector<std::vector<FaceId>> components; ///< per face, one component id per factor
};

inline ReferenceProduct build_reference(const ProductType& t) {
    if (t.factors.empty()) {
        FacePoset point = delta(0);
        return {point, {}, {{}}};
    }
    FacePoset acc = build(t.factors[0]);
    std::map<FaceId, int> facet_factor;
    for (int F : acc.facets()) facet_factor[acc.face(F).id] = 0;
    std::vector<std::vector<FaceId>> comps(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) comps[i] = {acc.face(static_cast<int>(i)).id};

    for (std::size_t k = 1; k < t.factors.size(); ++k) {
        FacePoset next = build(t.factors[k]);
        FacePoset prod = product(acc, next);
        std::map<FaceId, int> ff;
        const FaceId acc_top = acc.face(acc.top()).id;
        const FaceId next_top = next.face(next.top()).id;
        for (int F : acc.facets()) {
            ff[acc.face(F).id + "|" + next_top] = facet_factor.at(acc.face(F).id);
        }
        for (int G : next.facets()) ff[acc_top + "|" + next.face(G).id] = static_cast<int>(k);
        std::vector<std::vector<FaceId>> pcomps(prod.size());
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < next.size(); ++j) {
                const FaceId pid = acc.face(static_cast<int>(i)).id + "|" + next.face(static_cast<int>(j)).id;
                auto& c = pcomps[static_cast<std::size_t>(prod.index_of(pid))];
                c = comps[i];
                c.push_back(next.face(static_cast<int>(j)).id);
            }
        acc = std::move(prod);
        facet_factor = std::move(ff);
        comps = std::move(pcomps);
    }
    return {std::move(acc), std::move(facet_factor), std::move(comps)};
}

inline FacePoset build(const ProductType& t) { return build_reference(t).poset; }

/// All product types with total dimension n, facet count m and vertex count
/// v, in canonical order without duplicates.
inline std::vector<ProductType> candidate_types(int n, int m, long long v) {
    if (n < 0 || m < 0 || v < 0) throw Error("candidate_types: negative input");
    std::vector<ProductType> out;
    std::vector<FactorType> current;
    // Sigma factors with nondecreasing n >= 2, then Delta factors with
    // nondecreasing n >= 1; this enumerates each canonical form once.
    std::function<void(int, int, long long, int, bool)> go =
        [&](int dims, int facets, long long verts, int min_n, bool in_delta) {
            if (dims == n && facets == m && verts == v) out.emplace_back(ProductType{current});
            if (dims >= n || facets >= m || verts > v) {
                if (!(dims < n && facets < m && verts <= v)) {
                    // fallthrough: still allow switching phases below when equal? no
                }
            }
            if (!in_delta) {
                for (int k = std::max(2, min_n); dims + k <= n && facets + k <= m; ++k) {
                    if (verts * 2 > v) break;
                    current.push_back(FactorType::sigma(k));
                    go(dims + k, facets + k, verts * 2, k, false);
                    current.pop_back();
                }
                go(dims, facets, verts, 1, true);
                return;
            }
            for (int k = std::max(1, min_n); dims + k <= n && facets + k + 1 <= m; ++k) {
                if (verts * (k + 1) > v) continue;
                current.push_back(FactorType::delta(k));
                go(dims + k, facets + k + 1, verts * (k + 1), k, true);
                current.pop_back();
            }
        };
    go(0, 0, 1, 2, false);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct FactorAssignment {
    std::map<FaceId, int> facet_to_factor;
};

struct RecognitionResult {
    ProductType type;
    FactorAssignment assignment;
    FaceBijection witness; ///< face id of input -> face id of build(type)
    bool ambiguous = false; ///< more than one candidate matched
};

struct RecognitionOutcome {
    std::optional<RecognitionResult> result;
    std::string rejection; ///< non-empty iff !result
    CheckReport checks;

    bool recognized() const { return result.has_value(); }
};

/// Decide whether P is the face poset of a product of Sigma and Delta
/// factors; on success return the canonically least matching type, the
/// facet-to-factor assignment and an isomorphism witness.
inline RecognitionOutcome recognize(const FacePoset& P) {
    RecognitionOutcome out;
    out.checks = check_all(P);
    if (!out.checks.passed()) {
        std::string rules;
        std::set<std::string> seen;
        for (const auto& v : out.checks.violations)
            if (seen.insert(v.rule).second) rules += (rules.empty() ? "" : ", ") + v.rule;
        out.rejection = "failed checks: " + rules;
        return out;
    }
    const int n = P.dim();
    const int m = static_cast<int>(P.facets().size());
    long long v = static_cast<long long>(P.vertices().size());
    std::vector<ProductType> cands = candidate_types(n, m, v);
    std::vector<std::pair<ProductType, RecognitionResult>> matches;
    for (const ProductType& t : cands) {
        ReferenceProduct ref = build_reference(t);
        auto iso = isomorphism(P, ref.poset);
        if (!iso) continue;
        RecognitionResult res;
        res.type = t;
        res.witness = *iso;
        for (int F : P.facets()) {
            const FaceId& pid = P.face(F).id;
            res.assignment.facet_to_factor[pid] = ref.facet_factor.at(res.witness.at(pid));
        }
        matches.emplace_back(t, std::move(res));
    }
    if (matches.empty()) {
        out.rejection = "no candidate matched (" + std::to_string(cands.size()) +
                        " candidate types for dim " + std::to_string(n) + ", " +
                        std::to_string(m) + " facets, " + std::to_string(v) + " vertices)";
        return out;
    }
    out.result = std::move(matches[0].second);
    out.result->ambiguous = matches.size() > 1;
    return out;
}

/// The case taxonomy for how the facets belonging to one factor of a fixed
/// facet F can intersect.
enum class CaseTag {
    Dim1OneFacet,         ///< interval factor, a single facet meets F there
    Dim1TwoIntersecting,  ///< interval factor, two meeting facets that intersect
    Dim1TwoDisjoint,      ///< interval factor, two meeting facets, disjoint
    SigmaConnected,       ///< Sigma factor, components meeting F connected
    SigmaDisconnected,    ///< Sigma factor, components meeting F disconnected
    DeltaNonempty,        ///< Delta factor, full intersection nonempty
    DeltaEmpty,           ///< Delta factor, full intersection empty
};

inline std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Dim1OneFacet: return "DIM1_ONE_FACET";
        case CaseTag::Dim1TwoIntersecting: return "DIM1_TWO_INTERSECTING";
        case CaseTag::Dim1TwoDisjoint: return "DIM1_TWO_DISJOINT";
        case CaseTag::SigmaConnected: return "SIGMA_CONNECTED";
        case CaseTag::SigmaDisconnected: return "SIGMA_DISCONNECTED";
        case CaseTag::DeltaNonempty: return "DELTA_NONEMPTY";
        case CaseTag::DeltaEmpty: return "DELTA_EMPTY";
    }
    return "?";
}

inline bool is_exceptional(CaseTag tag) {
    return tag == CaseTag::Dim1OneFacet || tag == CaseTag::Dim1TwoIntersecting ||
           tag == CaseTag::SigmaConnected || tag == CaseTag::DeltaNonempty;
}

/// Facets of P (other than F) that meet F, grouped by the factor of F's
/// recognized product structure their intersection components belong to.
/// Throws if some facet's components straddle two factors.
inline std::map<int, std::vector<int>>
facets_by_factor(const FacePoset& P, int F, const RecognitionResult& facet_recognition) {
    std::map<int, std::vector<int>> grouped;
    const int facet_dim = P.face(F).dim;
    for (int G : P.facets()) {
        if (G == F || !P.meets(G, F)) continue;
        std::vector<int> comps = P.maximal_common_faces({F, G});
        int factor = -1;
        for (int C : comps) {
            if (P.face(C).dim != facet_dim - 1)
                throw Error("facets_by_factor: component '" + P.face(C).id +
                            "' of an intersection is not a facet of '" + P.face(F).id + "'");
            int f = facet_recognition.assignment.facet_to_factor.at(P.face(C).id);
            if (factor >= 0 && f != factor)
                throw Error("facets_by_factor: facet '" + P.face(G).id +
                            "' belongs to two factors of '" + P.face(F).id + "'");
            factor = f;
        }
        grouped[factor].push_back(G);
    }
    return grouped;
}

/// Classify how the facets of P belonging to factor j of the facet F
/// intersect (the induction cases of the product recognition proof).
inline CaseTag classify_case(const FacePoset& P, const FaceId& facet_id,
                             const RecognitionResult& facet_recognition, int factor) {
    const int F = P.index_of(facet_id);
    if (P.face(F).dim != P.dim() - 1) throw Error("classify_case: '" + facet_id + "' is not a facet");
    if (factor < 0 || factor >= static_cast<int>(facet_recognition.type.factors.size()))
        throw Error("classify_case: factor index out of range");
    auto grouped = facets_by_factor(P, F, facet_recognition);
    const FactorType& ft = facet_recognition.type.factors[static_cast<std::size_t>(factor)];
    auto it = grouped.find(factor);
    std::vector<int> B = it == grouped.end() ? std::vector<int>{} : it->second;

    if (ft.n == 1) {
        if (B.size() == 1) return CaseTag::Dim1OneFacet;
        if (B.size() == 2)
            return P.meets(B[0], B[1]) ? CaseTag::Dim1TwoIntersecting : CaseTag::Dim1TwoDisjoint;
        throw Error("classify_case: interval factor with " + std::to_string(B.size()) +
                    " facets, expected 1 or 2");
    }
    const std::size_t expected =
        static_cast<std::size_t>(ft.kind == FactorType::Kind::Sigma ? ft.n : ft.n + 1);
    if (B.size() != expected)
        throw Error("classify_case: factor " + ft.str() + " has " + std::to_string(B.size()) +
                    " facets, expected " + std::to_string(expected));
    if (ft.kind == FactorType::Kind::Delta) {
        boost::dynamic_bitset<> common = P.below(B[0]);
        for (std::size_t i = 1; i < B.size(); ++i) common &= P.below(B[i]);
        return common.any() ? CaseTag::DeltaNonempty : CaseTag::DeltaEmpty;
    }
    // Sigma: components of the full intersection that meet F, connected
    // when they pairwise share common faces.
    std::vector<int> comps = P.maximal_common_faces(B);
    std::vector<int> meeting;
    for (int C : comps)
        if (P.meets(C, F)) meeting.push_back(C);
    if (meeting.empty()) throw Error("classify_case: Sigma factor intersection misses the facet");
    // union-find over the meeting components
    std::vector<int> parent(meeting.size());
    for (std::size_t i = 0; i < meeting.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (std::size_t i = 0; i < meeting.size(); ++i)
        for (std::size_t j = i + 1; j < meeting.size(); ++j)
            if (P.meets(meeting[i], meeting[j])) parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
    bool connected = true;
    for (std::size_t i = 1; i < meeting.size(); ++i)
        if (find(static_cast<int>(i)) != find(0)) connected = false;
    return connected ? CaseTag::SigmaConnected : CaseTag::SigmaDisconnected;
}

} // namespace cornerkit
