// Command line front end.  Algebraic objects travel as plain-text files,
// reports as single JSON lines on stdout, timings on stderr.  Exit codes:
// 0 success, 1 validation or check failure, 2 bad input.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qcblock/channel.hpp"
#include "qcblock/decode.hpp"
#include "qcblock/distance.hpp"
#include "qcblock/evalcode.hpp"
#include "qcblock/io.hpp"
#include "qcblock/qbch.hpp"
#include "qcblock/verify.hpp"

using json = nlohmann::json;
using namespace qcblock;

namespace {

std::string fnv64_hex(const std::string& s) {
    u64 h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream o;
    o << "0x" << std::hex;
    o.width(16);
    o.fill('0');
    o << h;
    return o.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        write_text_file(path, text);
}

// file path | "companion" | "scan:N"; the returned matrix lives over Fqs.
Mat resolve_root(const std::string& src, const Field& Fqs, u32 m, u32 l) {
    if (src == "companion") return companion_primitive_root(Fqs, m, l);
    if (src.rfind("scan:", 0) == 0) {
        u64 idx = std::stoull(src.substr(5));
        std::vector<Mat> roots = scan_primitive_roots(Fqs, l, m);
        if (idx >= roots.size())
            throw std::invalid_argument("scan index " + std::to_string(idx) + " out of range: " +
                                        std::to_string(roots.size()) + " verified roots");
        return roots[idx];
    }
    std::istringstream in(read_text_file(src));
    Mat A = parse_mat(Fqs, in);
    if (A.rows() != l) throw std::invalid_argument("root width differs from --l");
    return A;
}

ProjectionSpec parse_proj(const std::string& text, const Field& F, u32 l) {
    if (text == "psi") return ProjectionSpec::psi();
    if (text.rfind("row:", 0) == 0) return ProjectionSpec::row(static_cast<u32>(std::stoul(text.substr(4))));
    if (text.rfind("col:", 0) == 0) return ProjectionSpec::col(static_cast<u32>(std::stoul(text.substr(4))));
    if (text.rfind("coords:", 0) == 0) {
        std::vector<std::pair<u32, u32>> pos;
        std::string body = text.substr(7);
        std::istringstream in(body);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.size() != 2 || tok[0] < '1' || tok[0] > '9' || tok[1] < '1' || tok[1] > '9')
                throw std::invalid_argument("coords token must be two 1-based digits: " + tok);
            pos.push_back({static_cast<u32>(tok[0] - '1'), static_cast<u32>(tok[1] - '1')});
        }
        if (pos.size() != l) throw std::invalid_argument("coords needs one entry per block row");
        return ProjectionSpec::entries(std::move(pos));
    }
    if (text.rfind("psiPi:", 0) == 0) {
        std::istringstream in(read_text_file(text.substr(6)));
        return ProjectionSpec::psi_pi(parse_mat(F, in));
    }
    throw std::invalid_argument("projection must be row:i, col:j, coords:..., psi or psiPi:<file>");
}

std::string proj_text(const ProjectionSpec& p) {
    switch (p.kind) {
        case ProjectionSpec::Kind::Row: return "row:" + std::to_string(p.index);
        case ProjectionSpec::Kind::Col: return "col:" + std::to_string(p.index);
        case ProjectionSpec::Kind::Psi: return "psi";
        case ProjectionSpec::Kind::PsiPi: return "psiPi";
        case ProjectionSpec::Kind::Coords: {
            std::string s = "coords:";
            for (size_t i = 0; i < p.coords.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(p.coords[i].first + 1) + std::to_string(p.coords[i].second + 1);
            }
            return s;
        }
    }
    return "";
}

DecodeStrategy parse_strategy(const std::string& s) {
    if (s == "support") return DecodeStrategy::Support;
    if (s == "linear") return DecodeStrategy::KeyEquation;
    throw std::invalid_argument("strategy must be support or linear");
}

json distance_json(const DistanceReport& r) {
    json j{{"method", r.method}, {"lower", r.lower},   {"upper", r.upper},
           {"exact", r.exact},   {"found", r.found},   {"words", r.words},
           {"witness", r.witness}};
    if (r.block)
        j["block"] = *r.block;
    else
        j["block"] = nullptr;
    return j;
}

void check_word_range(const Field& F, const std::vector<u32>& w) {
    for (u32 x : w)
        if (x >= F.q()) throw std::invalid_argument("word entry outside the field");
}

int cmd_field(u32 q, const std::string& out) {
    const Field& F = field_from_order(q);
    emit(out, F.spec_line() + "\n");
    json j{{"q", F.q()}, {"p", F.p()}, {"d", F.d()}, {"generator", F.generator()}};
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_root(u32 q, u32 s, u32 m, u32 l, const std::string& src, const std::string& out) {
    const Field& Fq = field_from_order(q);
    const Field& Fqs = Field::get(Fq.p(), Fq.d() * s);
    Mat A = resolve_root(src, Fqs, m, l);
    RootCheck rc = verify_primitive_root(A, m);
    std::string text = mat_to_text(A);
    if (rc.ok) emit(out, text);
    json j{{"ok", rc.ok}, {"m", m}, {"l", l}, {"order_field", Fqs.q()},
           {"root_hash", fnv64_hex(text)}};
    if (!rc.ok) j["witness"] = rc.witness;
    std::cout << j.dump() << "\n";
    return rc.ok ? 0 : 1;
}

int cmd_qbch_build(u32 q, u32 m, u32 l, u32 s, u32 delta, const std::string& root_src,
                   const std::string& out, const std::string& spec_out) {
    const Field& Fq = field_from_order(q);
    const Field& Fqs = Field::get(Fq.p(), Fq.d() * s);
    Mat A = resolve_root(root_src, Fqs, m, l);
    QbchCode Q = qbch_build(Fq, m, delta, A);
    emit(out, code_to_text(Q.code));
    if (!spec_out.empty()) write_text_file(spec_out, qbch_spec_to_text(Q));
    json j{{"n", Q.code.n()},
           {"k", Q.code.k()},
           {"d_block_lb", Q.delta},
           {"root_hash", fnv64_hex(mat_to_text(A))}};
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_qbch_decode(const std::string& code_path, const std::string& spec_path,
                    const std::string& word, const std::string& strategy) {
    std::istringstream cin_(read_text_file(code_path));
    LinearCode C = parse_code(cin_);
    std::istringstream sin_(read_text_file(spec_path));
    QbchSpec spec = parse_qbch_spec(sin_);
    QbchCode Q = qbch_build(*spec.Fq, spec.m, spec.delta, spec.root);
    if (!(Q.code == C))
        throw std::invalid_argument("code file does not match the decoder spec");
    std::vector<u32> y = parse_word(word);
    if (y.size() != C.n()) throw std::invalid_argument("word length differs from n");
    check_word_range(*spec.Fq, y);

    DecodeResult r = qbch_decode(Q, y, parse_strategy(strategy));
    json j{{"strategy", strategy}};
    if (!r.ok) {
        j["verified"] = false;
        j["note"] = r.note;
        std::cout << j.dump() << "\n";
        return 1;
    }
    std::vector<u32> support;
    std::vector<std::vector<u32>> blocks;
    for (u32 b = 0; b < Q.m; ++b) {
        std::vector<u32> blk(r.error.begin() + b * Q.l, r.error.begin() + (b + 1) * Q.l);
        if (std::any_of(blk.begin(), blk.end(), [](u32 x) { return x != 0; })) {
            support.push_back(b);
            blocks.push_back(std::move(blk));
        }
    }
    bool verified = Q.code.contains(r.corrected) && r.weight * 2 + 1 <= Q.delta;
    j["support"] = support;
    j["error_blocks"] = blocks;
    j["verified"] = verified;
    j["corrected"] = r.corrected;
    std::cout << j.dump() << "\n";
    return verified ? 0 : 1;
}

int cmd_evalcode_build(u32 q, u32 l, u32 k, u32 points, const std::string& root_path,
                       const std::string& proj, const std::string& out) {
    const Field& F = field_from_order(q);
    std::istringstream in(read_text_file(root_path));
    Mat A = parse_mat(F, in);
    if (A.rows() != l) throw std::invalid_argument("root width differs from --l");
    EvalSpec spec{&F, l, A, k, points, parse_proj(proj, F, l)};
    EvalCode E = eval_code_build(spec);
    emit(out, code_to_text(E.code));
    json j{{"n", E.code.n()},       {"k", E.code.k()},
           {"points", E.points},    {"degree_bound", E.k},
           {"full_points", E.full_points},
           {"proj", proj_text(E.proj)},
           {"root_hash", fnv64_hex(mat_to_text(A))}};
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_distance(const std::string& code_path, const std::string& method, u32 wmax, u32 threads,
                 u64 budget) {
    std::istringstream in(read_text_file(code_path));
    LinearCode C = parse_code(in);
    auto t0 = std::chrono::steady_clock::now();
    DistanceReport r;
    if (method == "enum")
        r = min_distance_enum(C, threads, budget);
    else if (method == "lowweight")
        r = min_distance_low_weight(C, wmax, budget);
    else
        throw std::invalid_argument("method must be enum or lowweight");
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "distance search took " << ms << " ms\n";
    std::cout << distance_json(r).dump() << "\n";
    return 0;
}

int cmd_simulate(const std::string& code_path, const std::string& spec_path, u32 w, u32 trials,
                 u64 seed, const std::string& strategy) {
    std::istringstream cin_(read_text_file(code_path));
    LinearCode C = parse_code(cin_);
    std::istringstream sin_(read_text_file(spec_path));
    QbchSpec spec = parse_qbch_spec(sin_);
    QbchCode Q = qbch_build(*spec.Fq, spec.m, spec.delta, spec.root);
    if (!(Q.code == C))
        throw std::invalid_argument("code file does not match the decoder spec");
    const Field& Fq = *spec.Fq;
    DecodeStrategy st = parse_strategy(strategy);

    std::mt19937_64 rng(seed);
    u64 successes = 0, failures = 0, miscorrections = 0;
    double decode_us = 0;
    for (u32 t = 0; t < trials; ++t) {
        std::vector<u32> msg(Q.code.k());
        for (auto& x : msg) x = static_cast<u32>(rng() % Fq.q());
        std::vector<u32> c = Q.code.encode(msg);
        std::vector<u32> y = add_block_errors(Fq, c, Q.l, w, rng);
        auto t0 = std::chrono::steady_clock::now();
        DecodeResult r = qbch_decode(Q, y, st);
        decode_us += std::chrono::duration_cast<std::chrono::nanoseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count() / 1e3;
        if (!r.ok)
            ++failures;
        else if (r.corrected == c && Q.code.contains(r.corrected))
            ++successes;
        else
            ++miscorrections;
    }
    if (trials > 0) std::cerr << "average decode time " << decode_us / trials << " us\n";
    json j{{"trials", trials},
           {"w", w},
           {"t", (Q.delta - 1) / 2},
           {"seed", seed},
           {"strategy", strategy},
           {"successes", successes},
           {"failures", failures},
           {"miscorrections", miscorrections},
           {"success_rate", trials == 0 ? 1.0 : double(successes) / trials}};
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_verify_paper(u32 threads, u32 only, bool mutation_control) {
    std::vector<CriterionResult> rs = run_reference_suite(std::cout, threads, only,
                                                          mutation_control);
    bool all = true;
    for (const CriterionResult& r : rs) all = all && r.pass;
    std::cout << (all ? "all checks passed" : "some checks failed") << "\n";
    return all ? 0 : 1;
}

int cmd_export(const std::string& code_path, const std::string& method, u32 wmax, u32 threads,
               u64 budget, const std::string& root_path, const std::string& proj, u64 seed,
               bool has_seed) {
    std::istringstream in(read_text_file(code_path));
    LinearCode C = parse_code(in);
    if (C.k() == 0) {
        std::cerr << "error: the zero code has no distance\n";
        return 1;
    }
    DistanceReport r = method == "enum" ? min_distance_enum(C, threads, budget)
                                        : min_distance_low_weight(C, wmax, budget);
    if (!(r.found && r.exact)) {
        std::cerr << "error: distance not resolved exactly; raise --wmax or --budget\n";
        return 1;
    }
    std::cout << "[" << C.n() << "," << C.k() << "," << r.upper << "]_" << C.field().q() << "\n";
    json recipe{{"n", C.n()}, {"k", C.k()}, {"d", r.upper}, {"q", C.field().q()},
                {"method", r.method}};
    if (C.block_len()) recipe["l"] = *C.block_len();
    if (method == "lowweight") recipe["wmax"] = wmax;
    if (!root_path.empty()) recipe["root_hash"] = fnv64_hex(read_text_file(root_path));
    if (!proj.empty()) recipe["proj"] = proj;
    if (has_seed) recipe["seed"] = seed;
    std::cout << recipe.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block cyclic code toolkit"};
    app.require_subcommand(1);
    int rc = 0;
    std::function<int()> run;

    // field --q N [--out FILE]
    u32 f_q = 0;
    std::string f_out;
    CLI::App* field = app.add_subcommand("field", "print a field spec line");
    field->add_option("--q", f_q, "field order (prime power)")->required();
    field->add_option("--out", f_out, "write the spec line to a file");
    field->callback([&] { run = [&] { return cmd_field(f_q, f_out); }; });

    // root --q --s --m --l --root SRC [--out FILE]
    u32 r_q = 0, r_s = 1, r_m = 0, r_l = 1;
    std::string r_src, r_out;
    CLI::App* root = app.add_subcommand("root", "obtain and verify a primitive root matrix");
    root->add_option("--q", r_q, "base field order")->required();
    root->add_option("--s", r_s, "extension degree of the root field over the base");
    root->add_option("--m", r_m, "multiplicative order to verify")->required();
    root->add_option("--l", r_l, "matrix width");
    root->add_option("--root", r_src, "file path, companion, or scan:N")->required();
    root->add_option("--out", r_out, "write the matrix to a file");
    root->callback([&] { run = [&] { return cmd_root(r_q, r_s, r_m, r_l, r_src, r_out); }; });

    // qbch build | qbch decode
    CLI::App* qbch = app.add_subcommand("qbch", "quasi-BCH construction and decoding");
    qbch->require_subcommand(1);
    u32 b_q = 0, b_m = 0, b_l = 1, b_s = 1, b_delta = 2;
    std::string b_root, b_out, b_spec_out;
    CLI::App* build = qbch->add_subcommand("build", "construct a quasi-BCH code");
    build->add_option("--q", b_q, "base field order")->required();
    build->add_option("--m", b_m, "block count")->required();
    build->add_option("--l", b_l, "block width");
    build->add_option("--s", b_s, "extension degree of the root field");
    build->add_option("--delta", b_delta, "designed block distance")->required();
    build->add_option("--root", b_root, "file path, companion, or scan:N")->required();
    build->add_option("--out", b_out, "code file to write");
    build->add_option("--spec-out", b_spec_out, "decoder spec file to write");
    build->callback([&] {
        run = [&] { return cmd_qbch_build(b_q, b_m, b_l, b_s, b_delta, b_root, b_out, b_spec_out); };
    });

    std::string d_code, d_spec, d_word, d_strategy = "support";
    CLI::App* dec = qbch->add_subcommand("decode", "decode a received word");
    dec->add_option("--code", d_code, "code file")->required();
    dec->add_option("--spec", d_spec, "decoder spec file")->required();
    dec->add_option("--word", d_word, "received word, comma or space separated")->required();
    dec->add_option("--strategy", d_strategy, "support or linear");
    dec->callback([&] { run = [&] { return cmd_qbch_decode(d_code, d_spec, d_word, d_strategy); }; });

    // evalcode build
    CLI::App* evalc = app.add_subcommand("evalcode", "evaluation code construction");
    evalc->require_subcommand(1);
    u32 e_q = 0, e_l = 0, e_k = 0, e_points = 0;
    std::string e_root, e_proj = "psi", e_out;
    CLI::App* ebuild = evalc->add_subcommand("build", "construct an evaluation code");
    ebuild->add_option("--q", e_q, "field order")->required();
    ebuild->add_option("--l", e_l, "block width")->required();
    ebuild->add_option("--k", e_k, "degree bound")->required();
    ebuild->add_option("--points", e_points, "evaluation points, 0 for all");
    ebuild->add_option("--root", e_root, "root matrix file")->required();
    ebuild->add_option("--proj", e_proj, "row:i, col:j, coords:r1c1..., psi, psiPi:<file>");
    ebuild->add_option("--out", e_out, "code file to write");
    ebuild->callback([&] {
        run = [&] { return cmd_evalcode_build(e_q, e_l, e_k, e_points, e_root, e_proj, e_out); };
    });

    // distance
    std::string di_code, di_method = "enum";
    u32 di_wmax = 4, di_threads = 1;
    u64 di_budget = u64(1) << 26;
    CLI::App* dist = app.add_subcommand("distance", "minimum distance of a stored code");
    dist->add_option("--code", di_code, "code file")->required();
    dist->add_option("--method", di_method, "enum or lowweight");
    dist->add_option("--wmax", di_wmax, "low weight search cap");
    dist->add_option("--threads", di_threads, "worker threads for enum");
    dist->add_option("--budget", di_budget, "work budget");
    dist->callback([&] {
        run = [&] { return cmd_distance(di_code, di_method, di_wmax, di_threads, di_budget); };
    });

    // simulate
    std::string si_code, si_spec, si_strategy = "support";
    u32 si_w = 0, si_trials = 100;
    u64 si_seed = 0;
    CLI::App* sim = app.add_subcommand("simulate", "random error channel against the decoder");
    sim->add_option("--code", si_code, "code file")->required();
    sim->add_option("--spec", si_spec, "decoder spec file")->required();
    sim->add_option("--w", si_w, "corrupted blocks per trial")->required();
    sim->add_option("--trials", si_trials, "number of trials");
    sim->add_option("--seed", si_seed, "PRNG seed");
    sim->add_option("--strategy", si_strategy, "support or linear");
    sim->callback([&] {
        run = [&] { return cmd_simulate(si_code, si_spec, si_w, si_trials, si_seed, si_strategy); };
    });

    // verify-paper
    u32 v_threads = 1, v_only = 0;
    bool v_mutate = false;
    CLI::App* ver = app.add_subcommand("verify-paper", "run the reference suite");
    ver->add_option("--threads", v_threads, "worker threads for enumerations");
    ver->add_option("--only", v_only, "run a single check, 1-8");
    ver->add_flag("--mutation-control", v_mutate,
                  "corrupt one recorded constant; the first check must FAIL");
    ver->callback([&] { run = [&] { return cmd_verify_paper(v_threads, v_only, v_mutate); }; });

    // export
    std::string x_code, x_method = "enum", x_root, x_proj;
    u32 x_wmax = 4, x_threads = 1;
    u64 x_budget = u64(1) << 26, x_seed = 0;
    bool x_has_seed = false;
    CLI::App* exp = app.add_subcommand("export", "code table line plus rebuild recipe");
    exp->add_option("--code", x_code, "code file")->required();
    exp->add_option("--method", x_method, "enum or lowweight");
    exp->add_option("--wmax", x_wmax, "low weight search cap");
    exp->add_option("--threads", x_threads, "worker threads for enum");
    exp->add_option("--budget", x_budget, "work budget");
    exp->add_option("--root", x_root, "root matrix file to hash into the recipe");
    exp->add_option("--proj", x_proj, "projection text for the recipe");
    CLI::Option* seed_opt = exp->add_option("--seed", x_seed, "seed to record in the recipe");
    exp->callback([&] {
        x_has_seed = seed_opt->count() > 0;
        run = [&] {
            return cmd_export(x_code, x_method, x_wmax, x_threads, x_budget, x_root, x_proj,
                              x_seed, x_has_seed);
        };
    });

    try {
        app.parse(argc, argv);
        rc = run();
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
