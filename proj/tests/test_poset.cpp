#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace cornerkit;

namespace {

// Independent face-count oracle for delta(n): faces are nonempty subsets of
// an (n+1)-set, so there are C(n+1, k+1) faces of dimension k.
long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Stratification oracle for sigma(n): one face of dimension n - |S| per
// proper subset S of {1..n}, plus two vertices.
long long sigma_faces_of_dim(int n, int d) {
    if (d == 0) return 2;
    return binom(n, n - d);
}

long long count_dim(const FacePoset& P, int d) {
    long long c = 0;
    for (const Face& f : P.faces())
        if (f.dim == d) ++c;
    return c;
}

} // namespace

TEST_CASE("simplex face counts match the binomial oracle") {
    REQUIRE(delta(0).size() == 1); // the point has no facets
    for (int n = 1; n <= 8; ++n) {
        FacePoset P = delta(n);
        REQUIRE(P.dim() == n);
        for (int d = 0; d <= n; ++d) REQUIRE(count_dim(P, d) == binom(n + 1, d + 1));
        REQUIRE(static_cast<int>(P.facets().size()) == n + 1);
        REQUIRE(static_cast<int>(P.vertices().size()) == n + 1);
    }
}

TEST_CASE("sigma face counts match the stratification oracle") {
    for (int n = 2; n <= 8; ++n) {
        FacePoset P = sigma(n);
        REQUIRE(P.dim() == n);
        for (int d = 0; d <= n; ++d) REQUIRE(count_dim(P, d) == sigma_faces_of_dim(n, d));
        REQUIRE(static_cast<int>(P.facets().size()) == n);
        REQUIRE(P.vertices().size() == 2);
    }
    REQUIRE_THROWS_AS(sigma(1), Error);
}

TEST_CASE("product multiplies face counts dimension-wise") {
    FacePoset A = sigma(2), B = delta(2);
    FacePoset P = product(A, B);
    REQUIRE(P.dim() == 4);
    REQUIRE(P.size() == A.size() * B.size());
    for (int d = 0; d <= 4; ++d) {
        long long want = 0;
        for (int i = 0; i <= d; ++i) want += count_dim(A, i) * count_dim(B, d - i);
        REQUIRE(count_dim(P, d) == want);
    }
    REQUIRE(P.facets().size() == A.facets().size() + B.facets().size());
    REQUIRE(P.vertices().size() == A.vertices().size() * B.vertices().size());
}

TEST_CASE("containment and meets behave on the triangle") {
    FacePoset P = delta(2);
    REQUIRE(P.leq(P.index_of("0"), P.index_of("0.1")));
    REQUIRE_FALSE(P.leq(P.index_of("2"), P.index_of("0.1")));
    REQUIRE(P.meets(P.index_of("0.1"), P.index_of("1.2")));
    auto mcf = P.maximal_common_faces({P.index_of("0.1"), P.index_of("1.2")});
    REQUIRE(mcf == std::vector<int>{P.index_of("1")});
}

TEST_CASE("sigma vertices lie below every positive-dimensional face") {
    FacePoset P = sigma(3);
    int plus = P.index_of("+"), minus = P.index_of("-");
    for (const Face& f : P.faces())
        if (f.dim > 0) {
            REQUIRE(P.leq(plus, P.index_of(f.id)));
            REQUIRE(P.leq(minus, P.index_of(f.id)));
        }
}

TEST_CASE("subposet keeps ids and relations") {
    FacePoset P = delta(3);
    FacePoset S = P.subposet(P.index_of("0.1.2"));
    REQUIRE(S.dim() == 2);
    REQUIRE(S.size() == 7);
    REQUIRE(S.leq(S.index_of("1"), S.index_of("1.2")));
}

TEST_CASE("shuffled relabeling is a seeded bijection preserving structure") {
    FacePoset P = product(delta(1), sigma(2));
    FacePoset S1 = shuffled(P, 42), S2 = shuffled(P, 42), S3 = shuffled(P, 7);
    REQUIRE(S1.size() == P.size());
    bool same_as_s2 = true, same_as_s3 = true;
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (S1.face(static_cast<int>(i)).id != S2.face(static_cast<int>(i)).id) same_as_s2 = false;
        if (S1.face(static_cast<int>(i)).id != S3.face(static_cast<int>(i)).id) same_as_s3 = false;
    }
    REQUIRE(same_as_s2);
    REQUIRE_FALSE(same_as_s3);
    REQUIRE(isomorphism(P, S1).has_value());
}

TEST_CASE("construction rejects malformed data") {
    // duplicate id
    REQUIRE_THROWS_AS(FacePoset(1, {{"a", 0}, {"a", 1}}, {}), Error);
    // no top face
    REQUIRE_THROWS_AS(FacePoset(2, {{"a", 0}}, {}), Error);
    // two top faces
    REQUIRE_THROWS_AS(FacePoset(1, {{"a", 1}, {"b", 1}}, {}), Error);
    // cover skipping a dimension
    REQUIRE_THROWS_AS(FacePoset(2, {{"v", 0}, {"t", 2}}, {{"v", "t"}}), Error);
}

TEST_CASE("poset JSON round-trips bit-exactly") {
    FacePoset P = product(sigma(2), delta(1));
    json j = to_json(P);
    FacePoset Q = poset_from_json(j);
    REQUIRE(to_json(Q) == j);
    REQUIRE_THROWS_AS(poset_from_json(json{{"dim", 1}}), Error);
}
