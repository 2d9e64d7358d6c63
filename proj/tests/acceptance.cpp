// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.  Each check recomputes its expectations independently of
// the library internals wherever an oracle is available.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace cornerkit;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << " (" << name << ")"
              << (detail.empty() ? "" : ": " + detail) << "\n";
    if (!ok) ++failures;
}

ProductType delta_power(int n) {
    ProductType t;
    for (int i = 0; i < n; ++i) t.factors.push_back(FactorType::delta(1));
    return t;
}

// Canonical valid characteristic function over a reference product: each
// factor gets a block of coordinates; Delta factors close their block with
// the negated sum.
ModelSpec canonical_model(const ProductType& t, const ReferenceProduct& ref) {
    const int n = t.dim();
    std::map<int, std::vector<FaceId>> facets_by_factor;
    for (const auto& [facet, factor] : ref.facet_factor) facets_by_factor[factor].push_back(facet);
    std::map<FaceId, std::vector<Int>> lambda;
    int base = 0;
    for (std::size_t j = 0; j < t.factors.size(); ++j) {
        auto& fs = facets_by_factor[static_cast<int>(j)];
        std::sort(fs.begin(), fs.end());
        const int k = t.factors[j].n;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            std::vector<Int> v(static_cast<std::size_t>(n), 0);
            if (static_cast<int>(i) < k) {
                v[static_cast<std::size_t>(base + static_cast<int>(i))] = 1;
            } else {
                for (int c = 0; c < k; ++c) v[static_cast<std::size_t>(base + c)] = -1;
            }
            lambda[fs[i]] = std::move(v);
        }
        base += k;
    }
    return ModelSpec(ref.poset, CharFun(n, std::move(lambda)));
}

CertPtr type_shelling(const ProductType& t) {
    if (t.factors.empty()) return nullptr;
    FacePoset acc = build(t.factors[0]);
    CertPtr cert = base_shelling(t.factors[0]);
    for (std::size_t i = 1; i < t.factors.size(); ++i) {
        FacePoset next = build(t.factors[i]);
        cert = product_shelling(acc, cert, next, base_shelling(t.factors[i]));
        acc = product(acc, next);
    }
    return cert;
}

FacePoset polygon(int k) {
    std::vector<Face> faces{{"P", 2}};
    std::vector<std::pair<FaceId, FaceId>> covers;
    for (int i = 0; i < k; ++i) {
        faces.push_back({"v" + std::to_string(i), 0});
        faces.push_back({"e" + std::to_string(i), 1});
        covers.emplace_back("e" + std::to_string(i), "P");
    }
    for (int i = 0; i < k; ++i) {
        covers.emplace_back("v" + std::to_string(i), "e" + std::to_string(i));
        covers.emplace_back("v" + std::to_string((i + 1) % k), "e" + std::to_string(i));
    }
    return FacePoset(2, std::move(faces), std::move(covers));
}

void criterion1() {
    auto types = ckt::all_types(6);
    auto start = std::chrono::steady_clock::now();
    bool ok = types.size() >= 30;
    std::string detail;
    if (!ok) detail = "only " + std::to_string(types.size()) + " types";
    std::uint64_t seed = 90210;
    for (const ProductType& t : types) {
        if (!ok) break;
        FacePoset P = shuffled(build(t), seed++);
        RecognitionOutcome out = recognize(P);
        if (!out.recognized() || !(out.result->type == t)) {
            ok = false;
            detail = t.str() + " did not round-trip";
            break;
        }
        // witness must be a genuine isomorphism onto the reference
        FacePoset ref = build(t);
        if (out.result->witness.size() != P.size()) { ok = false; detail = "witness size"; break; }
        for (const auto& [lo, hi] : P.covers()) {
            int a = ref.index_of(out.result->witness.at(P.face(lo).id));
            int b = ref.index_of(out.result->witness.at(P.face(hi).id));
            const auto& up = ref.covers_up(a);
            if (!std::binary_search(up.begin(), up.end(), b)) {
                ok = false;
                detail = t.str() + ": witness is not cover-preserving";
                break;
            }
        }
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << types.size() << " types in " << secs << " s";
    if (ok && secs >= 60.0) {
        ok = false;
        detail = "exceeded 60 s budget: " + os.str();
    }
    report(1, "recognition round-trip dim<=6", ok, ok ? os.str() : detail);
}

void criterion2() {
    bool ok = true;
    std::string detail;
    for (const ProductType& t : ckt::all_types(6)) {
        FacePoset P = build(t);
        for (const Face& f : P.faces()) {
            if (f.dim != 2) continue;
            int count = 0;
            for (int v : P.vertices())
                if (P.leq(v, P.index_of(f.id))) ++count;
            if (count < 2 || count > 4) {
                ok = false;
                detail = t.str() + " face " + f.id + " has " + std::to_string(count) + " vertices";
            }
        }
        if (!check_two_faces(P).passed()) { ok = false; detail = t.str() + " flagged"; }
    }
    for (int k : {5, 6})
        if (check_two_faces(polygon(k)).passed() || recognize(polygon(k)).recognized()) {
            ok = false;
            detail = std::to_string(k) + "-gon not rejected";
        }
    report(2, "two-face rule, pentagon/hexagon rejected", ok, detail);
}

void criterion3() {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 8 && ok; ++n) {
        FacePoset s = sigma(n);
        if (static_cast<int>(s.facets().size()) != n || s.vertices().size() != 2) {
            ok = false;
            detail = "sigma(" + std::to_string(n) + ") counts wrong";
        }
    }
    for (int n = 1; n <= 8 && ok; ++n) {
        FacePoset d = delta(n);
        if (static_cast<int>(d.facets().size()) != n + 1 ||
            static_cast<int>(d.vertices().size()) != n + 1) {
            ok = false;
            detail = "delta(" + std::to_string(n) + ") counts wrong";
        }
    }
    std::vector<FacePoset> blocks{delta(1), delta(3), sigma(2), sigma(4)};
    for (const FacePoset& A : blocks)
        for (const FacePoset& B : blocks)
            if (euler_characteristic(product(A, B)) !=
                euler_characteristic(A) * euler_characteristic(B)) {
                ok = false;
                detail = "chi not multiplicative";
            }
    report(3, "counting formulas n<=8, chi multiplicative", ok, detail);
}

void criterion4() {
    bool ok = true;
    std::string detail;
    for (const ProductType& t : ckt::all_types(6)) {
        if (t.sigma_count() > 0) continue;
        // oracle: coefficients of prod (1 + t + ... + t^{n_i})
        std::vector<Int> want{1};
        for (const FactorType& f : t.factors) {
            std::vector<Int> next(want.size() + static_cast<std::size_t>(f.n), 0);
            for (std::size_t i = 0; i < want.size(); ++i)
                for (int k = 0; k <= f.n; ++k) next[i + static_cast<std::size_t>(k)] += want[i];
            want = std::move(next);
        }
        if (h_vector(build(t)).h != want) {
            ok = false;
            detail = t.str() + " h-vector mismatch";
        }
    }
    std::vector<Int> cp3{1, 1, 1, 1};
    if (h_vector(delta(3)).h != cp3) {
        ok = false;
        detail = "delta(3) is not (1,1,1,1)";
    }
    report(4, "h-vectors of Delta-products dim<=6", ok, detail);
}

void criterion5() {
    bool ok = true;
    std::string detail;
    for (const ProductType& t : ckt::all_types(4)) {
        ReferenceProduct ref = build_reference(t);
        ModelSpec spec = canonical_model(t, ref);
        if (!validate_charfun(spec).passed()) {
            ok = false;
            detail = t.str() + ": canonical model invalid";
            continue;
        }
        QuotientDescription q = quotient_description(spec);
        int odd = 0;
        for (int d : q.sphere_dims)
            if (d % 2 == 1) ++odd;
        if (q.torus_rank != t.delta_count() || odd != t.delta_count() || !q.free) {
            ok = false;
            detail = t.str() + ": rank/odd-sphere/freeness mismatch";
            continue;
        }
        IntMatrix psi = psi_matrix(spec, q.facet_order);
        if (!(psi * q.kernel).is_zero()) { ok = false; detail = t.str() + ": psi*kernel != 0"; }
        for (const Int& d : smith_normal_form(psi).invariant_factors())
            if (d != 1) { ok = false; detail = t.str() + ": psi SNF not all ones"; }
        if (q.kernel.cols() > 0)
            for (const Int& d : smith_normal_form(q.kernel).invariant_factors())
                if (d != 1) { ok = false; detail = t.str() + ": kernel not saturated"; }
    }
    // the three worked models
    ModelSpec cp2(delta(2), CharFun(2, {{"0.1", {1, 0}}, {"0.2", {0, 1}}, {"1.2", {-1, -1}}}));
    QuotientDescription q1 = quotient_description(cp2);
    if (q1.sphere_dims != std::vector<int>{5} || q1.torus_rank != 1 || q1.kernel.cols() != 1 ||
        q1.kernel.at(0, 0) != 1 || q1.kernel.at(1, 0) != 1 || q1.kernel.at(2, 0) != 1) {
        ok = false;
        detail = "CP^2 model wrong";
    }
    ModelSpec sq(product(delta(1), delta(1)),
                 CharFun(2, {{"0|0.1", {1, 0}}, {"1|0.1", {1, 0}},
                             {"0.1|0", {0, 1}}, {"0.1|1", {0, 1}}}));
    QuotientDescription q2 = quotient_description(sq);
    if (q2.sphere_dims != std::vector<int>({3, 3}) || q2.torus_rank != 2) {
        ok = false;
        detail = "S^2 x S^2 model wrong";
    }
    for (int n = 2; n <= 4; ++n) {
        std::map<FaceId, std::vector<Int>> lambda;
        FacePoset s = sigma(n);
        int i = 0;
        for (int F : s.facets()) {
            std::vector<Int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i++)] = 1;
            lambda[s.face(F).id] = e;
        }
        QuotientDescription q3 = quotient_description(ModelSpec(s, CharFun(n, std::move(lambda))));
        if (q3.sphere_dims != std::vector<int>{2 * n} || q3.torus_rank != 0 ||
            q3.kernel.cols() != 0) {
            ok = false;
            detail = "S^{2n} model wrong";
        }
    }
    report(5, "quotient structure over recognized types", ok, detail);
}

void criterion6() {
    // brute-force oracle: cofactor determinants at every vertex
    std::mt19937_64 rng(20260826);
    std::vector<ProductType> pool;
    for (const ProductType& t : ckt::all_types(4)) pool.push_back(t);
    bool ok = true;
    std::string detail;
    int done = 0;
    while (done < 200 && ok) {
        const ProductType& t = pool[rng() % pool.size()];
        FacePoset P = build(t);
        std::map<FaceId, std::vector<Int>> lambda;
        bool primitive = true;
        for (int F : P.facets()) {
            std::vector<Int> v(static_cast<std::size_t>(P.dim()));
            Int g = 0;
            for (auto& x : v) {
                x = static_cast<long long>(rng() % 7) - 3;
                g = gcd(g, x);
            }
            if (g != 1) { primitive = false; break; }
            lambda[P.face(F).id] = std::move(v);
        }
        if (!primitive) continue;
        ModelSpec spec(P, CharFun(P.dim(), std::move(lambda)));
        bool oracle = true;
        for (int v : P.vertices()) {
            std::vector<std::vector<long long>> m;
            for (int F : P.facets())
                if (P.leq(v, F)) {
                    std::vector<long long> row;
                    for (const Int& x : spec.charfun.lambda.at(P.face(F).id))
                        row.push_back(static_cast<long long>(x));
                    m.push_back(std::move(row));
                }
            long long d = m.size() == static_cast<std::size_t>(P.dim()) ? ckt::det_cofactor(m) : 0;
            if (d != 1 && d != -1) oracle = false;
        }
        if (validate_charfun(spec).passed() != oracle) {
            ok = false;
            detail = "disagreement on " + t.str() + " at trial " + std::to_string(done);
        }
        ++done;
    }
    report(6, "validator vs determinant oracle, 200 random lambdas", ok, detail);
}

void criterion7() {
    bool ok = true;
    std::string detail;
    for (const ProductType& t : ckt::all_types(4)) {
        ReferenceProduct ref = build_reference(t);
        AutGroup G = restricted_aut_group(t);
        long long want = 1LL << (t.sigma_count() + t.interval_count());
        if (G.order != want) {
            ok = false;
            detail = t.str() + ": order " + std::to_string(G.order);
            continue;
        }
        long long count = 0;
        for (const auto& g : automorphisms(ref.poset)) {
            bool admissible = true;
            for (const auto& [facet, factor] : ref.facet_factor) {
                const FactorType& f = t.factors[static_cast<std::size_t>(factor)];
                const FaceId& image = g.at(facet);
                if (f.n >= 2) {
                    if (image != facet) { admissible = false; break; }
                } else if (ref.facet_factor.at(image) != factor) {
                    admissible = false;
                    break;
                }
            }
            if (admissible) ++count;
        }
        if (count != want) {
            ok = false;
            detail = t.str() + ": enumeration found " + std::to_string(count) +
                     ", expected " + std::to_string(want);
        }
    }
    report(7, "restricted automorphism group order dim<=4", ok, detail);
}

void criterion8() {
    bool ok = true;
    std::string note;
    for (int n = 2; n <= 4 && ok; ++n) {
        ProductType t = delta_power(n);
        ReferenceProduct ref = build_reference(t);
        std::map<FaceId, std::vector<Int>> lambda;
        for (const auto& [facet, factor] : ref.facet_factor) {
            std::vector<Int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(factor)] = 1;
            lambda[facet] = e;
        }
        ModelSpec spec(ref.poset, CharFun(n, std::move(lambda)));
        std::vector<FaceBijection> gens;
        for (int i = 0; i + 1 < n; ++i)
            gens.push_back(detail::compose(
                detail::component_swap_generator(ref, static_cast<std::size_t>(i), "0", "1"),
                detail::component_swap_generator(ref, static_cast<std::size_t>(i) + 1, "0", "1")));
        CheckReport r = check_free_deck(spec, gens);
        std::size_t order = detail::group_closure(ref.poset, gens).size();
        if (!r.passed()) {
            ok = false;
            note = "n=" + std::to_string(n) + " failed certification";
        } else if (order != (1ULL << (n - 1))) {
            ok = false;
            note = "n=" + std::to_string(n) + " group order " + std::to_string(order);
        }
    }
    report(8, "cube free deck action Z_2^(n-1), n in {2,3,4}", ok, note);
}

void criterion9() {
    bool verify_ok = true, chi_ok = true, counts_ok = true;
    std::string note;
    for (const ProductType& t : ckt::all_types(4)) {
        FacePoset P = build(t);
        CertPtr c = type_shelling(t);
        if (!verify_shelling(P, *c).passed()) {
            verify_ok = false;
            note = t.str() + ": certificate rejected";
            continue;
        }
        // partial-union Euler characteristics, recomputed directly
        boost::dynamic_bitset<> covered(P.size());
        for (std::size_t j = 0; j + 1 < c->order.size(); ++j) {
            covered |= P.below(P.index_of(c->order[j]));
            if (detail::alternating_face_count(P, covered) != 1) {
                chi_ok = false;
                note = t.str() + ": prefix chi != 1 at step " + std::to_string(j + 1);
            }
        }
        if (t.sigma_count() == 0) {
            std::vector<long long> counts = shelling_restriction_counts(P, *c);
            std::vector<Int> h = h_vector(P).h;
            bool match = true;
            for (std::size_t i = 0; i < std::max(counts.size(), h.size()); ++i) {
                Int hv = i < h.size() ? h[i] : Int(0);
                long long cv = i < counts.size() ? counts[i] : 0;
                if (hv != cv) match = false;
            }
            if (!match && counts_ok) {
                counts_ok = false;
                note = "restriction counts differ from h, first at " + t.str();
            }
        }
    }
    bool ok = verify_ok && chi_ok && counts_ok;
    report(9, "shellings dim<=4", ok,
           ok ? ""
              : note + " (verify " + (verify_ok ? "ok" : "FAIL") + ", prefix chi " +
                    (chi_ok ? "ok" : "FAIL") + ", restriction counts " +
                    (counts_ok ? "ok" : "FAIL") + ")");
}

void criterion10() {
    auto types = ckt::all_types(6);
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < types.size() && ok; ++i)
        for (std::size_t j = i + 1; j < types.size(); ++j)
            if (rational_signature(types[i]) == rational_signature(types[j])) {
                ok = false;
                detail = types[i].str() + " and " + types[j].str() + " collide";
                break;
            }
    report(10, "rational signature injective dim<=6", ok, detail);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
