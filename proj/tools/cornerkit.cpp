#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cornerkit/cornerkit.hpp"

namespace ck = cornerkit;
using ck::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ck::Error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ck::Error("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void emit(const json& j, const std::string& out_path, bool as_json, const std::string& prose) {
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ck::Error("cannot write '" + out_path + "'");
        out << j.dump(2) << "\n";
        return;
    }
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << prose;
}

std::string describe(const ck::CheckReport& r) {
    if (r.passed()) return "all checks passed\n";
    std::string s;
    for (const auto& v : r.violations) {
        s += v.rule + ": " + v.message;
        if (!v.faces.empty()) {
            s += " [";
            for (std::size_t i = 0; i < v.faces.size(); ++i) s += (i ? ", " : "") + v.faces[i];
            s += "]";
        }
        s += "\n";
    }
    return s;
}

/// Shelling for a recognized product type, assembled factor by factor.
ck::CertPtr type_shelling(const ck::ProductType& t) {
    if (t.factors.empty()) return nullptr;
    ck::FacePoset acc = ck::build(t.factors[0]);
    ck::CertPtr cert = ck::base_shelling(t.factors[0]);
    for (std::size_t i = 1; i < t.factors.size(); ++i) {
        ck::FacePoset next = ck::build(t.factors[i]);
        cert = ck::product_shelling(acc, cert, next, ck::base_shelling(t.factors[i]));
        acc = ck::product(acc, next);
    }
    return cert;
}

ck::CertPtr transport_cert(const ck::CertPtr& c, const ck::FaceBijection& rename) {
    return ck::detail::relabel_cert(c, [&](const ck::FaceId& id) { return rename.at(id); });
}

ck::FaceBijection invert(const ck::FaceBijection& m) {
    ck::FaceBijection inv;
    for (const auto& [a, b] : m) inv[b] = a;
    return inv;
}

int run(int argc, char** argv) {
    CLI::App app{"cornerkit: face posets of nice manifolds with corners — "
                 "recognition, characteristic functions, invariants, shellings"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON reports");

    std::string type_str, out_path, poset_path, lambda_path, gens_path;
    std::uint64_t seed = 0;
    bool seeded = false, full = false;

    auto* build_cmd = app.add_subcommand("build", "build a reference poset from a type string");
    build_cmd->add_option("--type", type_str, "e.g. \"Sigma(2)xDelta(1)\" or \"point\"")->required();
    auto* seed_opt = build_cmd->add_option("--seed", seed, "shuffle face ids deterministically");
    build_cmd->add_option("-o", out_path, "output path (default stdout)");

    auto* check_cmd = app.add_subcommand("check", "run the orbit-space checks on a poset");
    check_cmd->add_option("poset", poset_path, "poset JSON")->required();

    auto* rec_cmd = app.add_subcommand("recognize", "recognize a poset as a Sigma/Delta product");
    rec_cmd->add_option("poset", poset_path, "poset JSON")->required();

    auto* cf_cmd = app.add_subcommand("charfun", "validate a characteristic function");
    cf_cmd->add_option("poset", poset_path, "poset JSON")->required();
    cf_cmd->add_option("--lambda", lambda_path, "charfun JSON")->required();

    auto* quot_cmd = app.add_subcommand("quotient", "sphere-product quotient description");
    quot_cmd->add_option("poset", poset_path, "poset JSON")->required();
    quot_cmd->add_option("--lambda", lambda_path, "charfun JSON")->required();

    auto* inv_cmd = app.add_subcommand("invariants", "Euler characteristic, h-vector, Betti numbers");
    inv_cmd->add_option("poset", poset_path, "poset JSON")->required();
    inv_cmd->add_flag("--full", full, "pad Betti numbers with zero odd degrees");

    auto* shell_cmd = app.add_subcommand("shelling", "construct and verify a shelling certificate");
    shell_cmd->add_option("poset", poset_path, "poset JSON")->required();

    auto* aut_cmd = app.add_subcommand("aut", "restricted automorphism group");
    aut_cmd->add_option("poset", poset_path, "poset JSON")->required();

    auto* deck_cmd = app.add_subcommand("deck", "certify free-deck-action conditions");
    deck_cmd->add_option("poset", poset_path, "poset JSON")->required();
    deck_cmd->add_option("gens", gens_path, "JSON array of face bijections")->required();
    deck_cmd->add_option("--lambda", lambda_path, "charfun JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    seeded = seed_opt->count() > 0;

    if (build_cmd->parsed()) {
        ck::ProductType t = ck::parse_product_type(type_str);
        ck::log(ck::LogLevel::Info, "building " + t.str());
        ck::FacePoset P = ck::build(t);
        if (seeded) P = ck::shuffled(P, seed);
        json j = ck::to_json(P);
        emit(j, out_path, as_json,
             t.str() + ": " + std::to_string(P.size()) + " faces, " +
                 std::to_string(P.facets().size()) + " facets\n" + j.dump(2) + "\n");
        return 0;
    }

    ck::FacePoset P = ck::poset_from_json(load_json(poset_path));

    if (check_cmd->parsed()) {
        ck::CheckReport r = ck::check_all(P);
        emit(ck::to_json(r), "", as_json, describe(r));
        return r.passed() ? 0 : 1;
    }
    if (rec_cmd->parsed()) {
        ck::RecognitionOutcome out = ck::recognize(P);
        if (!out.recognized()) {
            emit(json{{"recognized", false}, {"rejection", out.rejection},
                      {"checks", ck::to_json(out.checks)}},
                 "", as_json, "not recognized: " + out.rejection + "\n");
            return 1;
        }
        if (out.result->ambiguous)
            ck::log(ck::LogLevel::Warn, "more than one candidate type matched; reporting the least");
        json j = ck::to_json(*out.result);
        j["recognized"] = true;
        emit(j, "", as_json, out.result->type.str() + "\n");
        return 0;
    }
    if (inv_cmd->parsed()) {
        json j;
        j["euler"] = ck::euler_characteristic(P);
        ck::HVector h = ck::h_vector(P);
        j["h"] = ck::to_json(h);
        json b = json::array();
        for (std::size_t i = 0; i < h.h.size(); ++i) {
            b.push_back(static_cast<long long>(h.h[i]));
            if (full && i + 1 < h.h.size()) b.push_back(0);
        }
        j["betti"] = b;
        ck::RecognitionOutcome out = ck::recognize(P);
        if (out.recognized()) {
            j["type"] = ck::to_json(out.result->type);
            j["rational_signature"] = ck::to_json(ck::rational_signature(out.result->type));
        }
        std::string prose = "euler " + std::to_string(ck::euler_characteristic(P)) + "\nh " +
                            j["h"].dump() + "\nbetti " + b.dump() + "\n";
        if (out.recognized()) prose += "type " + out.result->type.str() + "\n";
        emit(j, "", as_json, prose);
        return 0;
    }
    if (shell_cmd->parsed()) {
        ck::RecognitionOutcome out = ck::recognize(P);
        if (!out.recognized()) {
            emit(json{{"rejection", out.rejection}}, "", as_json,
                 "not recognized: " + out.rejection + "\n");
            return 1;
        }
        ck::CertPtr cert = type_shelling(out.result->type);
        if (!cert) {
            emit(json{{"order", json::array()}, {"subs", json::array()}}, "", as_json,
                 "point: empty shelling\n");
            return 0;
        }
        cert = transport_cert(cert, invert(out.result->witness));
        ck::CheckReport r = ck::verify_shelling(P, *cert);
        json j = ck::to_json(*cert);
        j["verified"] = r.passed();
        emit(j, "", as_json, (r.passed() ? "shelling verified\n" : describe(r)) + j.dump(2) + "\n");
        return r.passed() ? 0 : 1;
    }
    if (aut_cmd->parsed()) {
        ck::RecognitionOutcome out = ck::recognize(P);
        if (!out.recognized()) {
            emit(json{{"rejection", out.rejection}}, "", as_json,
                 "not recognized: " + out.rejection + "\n");
            return 1;
        }
        ck::AutGroup G = ck::restricted_aut_group(out.result->type);
        // transport generators from the reference labels to P's labels
        ck::FaceBijection w = out.result->witness, winv = invert(w);
        for (auto& g : G.generators) {
            ck::FaceBijection h;
            for (const auto& [a, b] : w) h[a] = winv.at(g.at(b));
            g = std::move(h);
        }
        emit(ck::to_json(G), "", as_json,
             "order " + std::to_string(G.order) + " (" + std::to_string(G.generators.size()) +
                 " commuting involutions)\n");
        return 0;
    }

    ck::CharFun lambda = ck::charfun_from_json(load_json(lambda_path));
    ck::ModelSpec spec(P, lambda);

    if (cf_cmd->parsed()) {
        ck::CheckReport r = ck::validate_charfun(spec);
        emit(ck::to_json(r), "", as_json, describe(r));
        return r.passed() ? 0 : 1;
    }
    if (quot_cmd->parsed()) {
        ck::QuotientDescription q = ck::quotient_description(spec);
        std::string prose = "spheres [";
        for (std::size_t i = 0; i < q.sphere_dims.size(); ++i)
            prose += (i ? ", S^" : "S^") + std::to_string(q.sphere_dims[i]);
        prose += "], free subtorus rank " + std::to_string(q.torus_rank) +
                 (q.free ? "" : " (action NOT free)") + "\n";
        emit(ck::to_json(q), "", as_json, prose);
        return 0;
    }
    if (deck_cmd->parsed()) {
        json gj = load_json(gens_path);
        if (!gj.is_array()) throw ck::Error("gens JSON: expected an array of face bijections");
        std::vector<ck::FaceBijection> gens;
        for (const auto& g : gj) gens.push_back(ck::bijection_from_json(g));
        ck::CheckReport r = ck::check_free_deck(spec, gens);
        json j = ck::to_json(r);
        j["note"] = "necessary conditions for a free deck action only";
        emit(j, "", as_json, describe(r));
        return r.passed() ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ck::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
