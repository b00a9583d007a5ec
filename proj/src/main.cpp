#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spin4/builders.hpp"
#include "spin4/g4.hpp"
#include "spin4/io.hpp"
#include "spin4/s2xs2.hpp"
#include "spin4/verify.hpp"

using namespace spin4;

namespace {

void emit(const nlohmann::json& j, const std::string& out) {
    if (out.empty()) std::cout << j.dump(2) << "\n";
    else write_json_file(out, j);
}

int cmd_build(const std::string& shape, int n, const std::string& out) {
    std::unique_ptr<OrderedComplex> cx;
    if (shape == "boundary-simplex") {
        cx = build_boundary_simplex(n);
    } else if (shape == "product") {
        auto f = build_boundary_simplex(n);
        cx = std::move(product_triangulation(*f, *f).complex);
    } else if (shape == "barycentric") {
        auto f = build_boundary_simplex(n);
        cx = std::move(barycentric_subdivide(*f).complex);
    } else if (shape == "suspension") {
        auto f = build_boundary_simplex(n);
        cx = std::move(suspension(*f).complex);
    } else if (shape == "prism") {
        auto f = build_boundary_simplex(n);
        cx = std::move(prism(*f, *f).complex);
    } else if (shape == "rp-n") {
        cx = std::move(build_rp_n(n).complex);
    } else if (shape == "s2xs2-T" || shape == "s2xs2-Tprime" || shape == "s2xs2-prism") {
        auto ws = build_s2xs2();
        if (shape == "s2xs2-T") cx = std::move(ws->bary.complex);
        else if (shape == "s2xs2-Tprime") cx = std::move(ws->tprime);
        else cx = std::move(ws->pr.complex);
    } else {
        std::cerr << "unknown shape: " << shape << "\n";
        return 2;
    }
    emit(complex_to_json(*cx), out);
    return 0;
}

int cmd_verify(const std::string& suite, long long trials, unsigned long long seed,
               const std::string& complex_path, const std::string& json_out) {
    std::unique_ptr<OrderedComplex> user;
    if (!complex_path.empty()) user = complex_from_json(read_json_file(complex_path));
    ReproReport rep = verify_suite(suite, trials, seed, user.get());
    std::cout << rep.text();
    if (!json_out.empty()) write_json_file(json_out, rep.to_json());
    return rep.pass ? 0 : 1;
}

int cmd_repro(const std::string& which, const std::string& json_out,
              const std::string& cache_dir) {
    auto ws = build_s2xs2();
    std::vector<ReproReport> reports;
    if (which == "key1" || which == "all") reports.push_back(key_result_1(*ws));
    if (which == "key2" || which == "key3" || which == "all")
        reports.push_back(key_result_2(*ws, cache_dir));
    if (which == "key3" || which == "all") reports.push_back(key_result_3(*ws));
    bool pass = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        std::cout << r.text();
        arr.push_back(r.to_json());
        pass = pass && r.pass;
    }
    if (!json_out.empty()) write_json_file(json_out, arr);
    return pass ? 0 : 1;
}

int cmd_g4(const std::string& op, const std::string& complex_path,
           const std::vector<std::string>& triple_paths, const std::string& json_out) {
    auto cx = complex_from_json(read_json_file(complex_path));
    nlohmann::json out;
    int rc = 0;
    if (op == "nullity") {
        if (triple_paths.size() != 1) {
            std::cerr << "nullity expects exactly one triple file\n";
            return 2;
        }
        Triple t = triple_from_json(read_json_file(triple_paths[0]), *cx);
        NullResult res = is_null_triple(t);
        out["decision"] = res.status == NullStatus::Yes ? "null"
                          : res.status == NullStatus::No ? "not-null"
                                                         : "undecided";
        if (res.witness) {
            out["witness"] = {{"c", cochain_to_json(res.witness->c)},
                              {"r", cochain_to_json(res.witness->r)},
                              {"f", cochain_to_json(res.witness->f)}};
        }
        if (res.status == NullStatus::Undecided) rc = 1;
    } else if (op == "product") {
        if (triple_paths.size() < 2) {
            std::cerr << "product expects at least two triple files\n";
            return 2;
        }
        Triple acc = triple_from_json(read_json_file(triple_paths[0]), *cx);
        for (size_t i = 1; i < triple_paths.size(); ++i)
            acc = triple_product(acc, triple_from_json(read_json_file(triple_paths[i]), *cx));
        out = triple_to_json(acc);
    } else if (op == "filtration") {
        FiltrationReport f = filtration_quotients(*cx);
        out = {{"dim_stage2", f.dim_ssh2},
               {"dim_stage3", f.dim_sh3},
               {"top_quotient_free_rank", f.qh4_free_rank},
               {"top_quotient_torsion_order", f.qh4_torsion_order}};
    } else if (op == "extensions") {
        ExtensionReport e = extension_invariants(*cx);
        out = {{"sq1_matrix", e.sq1_matrix},
               {"sq1_rank", e.sq1_rank},
               {"sq2_matrix", e.sq2_matrix},
               {"sq2_rank", e.sq2_rank}};
    } else {
        std::cerr << "unknown g4 operation: " << op << "\n";
        return 2;
    }
    emit(out, json_out);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cochain calculus and bordism-dual reproduction pipeline"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "construct a named complex as JSON");
    std::string shape, build_out;
    int n = 3;
    build->add_option("--shape", shape,
                      "boundary-simplex|product|barycentric|suspension|prism|rp-n|"
                      "s2xs2-T|s2xs2-Tprime|s2xs2-prism")
        ->required();
    build->add_option("--n", n, "dimension parameter for the parametric shapes");
    build->add_option("--out", build_out, "output file (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "run a property suite");
    std::string suite, verify_cx, verify_json;
    long long trials = 100;
    unsigned long long seed = 1;
    verify->add_option("--suite", suite,
                       "cupi|lifts|natural-ops|group-laws|relations|suspension|filtration")
        ->required();
    verify->add_option("--trials", trials, "trial count for randomized properties");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--complex", verify_cx, "extra complex (JSON) for the pool");
    verify->add_option("--json", verify_json, "write the report as JSON");

    auto* repro = app.add_subcommand("repro", "reproduce the key computer results");
    std::string which, repro_json, cache_dir;
    repro->add_option("which", which, "key1|key2|key3|all")->required();
    repro->add_option("--json", repro_json, "write the reports as JSON");
    repro->add_option("--cache", cache_dir, "directory for certified solution caching");

    auto* g4 = app.add_subcommand("g4", "operate on triples over a complex");
    std::string g4_op, g4_cx, g4_json;
    std::vector<std::string> g4_triples;
    g4->add_option("op", g4_op, "nullity|product|filtration|extensions")->required();
    g4->add_option("--complex", g4_cx, "complex JSON file")->required();
    g4->add_option("--triples", g4_triples, "triple JSON files");
    g4->add_option("--json", g4_json, "output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*build) return cmd_build(shape, n, build_out);
        if (*verify) return cmd_verify(suite, trials, seed, verify_cx, verify_json);
        if (*repro) {
            if (which != "key1" && which != "key2" && which != "key3" && which != "all") {
                std::cerr << "unknown repro target: " << which << "\n";
                return 2;
            }
            return cmd_repro(which, repro_json, cache_dir);
        }
        if (*g4) return cmd_g4(g4_op, g4_cx, g4_triples, g4_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
