#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "symalg/combi.hpp"
#include "symalg/decide.hpp"
#include "symalg/emptiness.hpp"
#include "symalg/error.hpp"
#include "symalg/realroot.hpp"
#include "symalg/sos.hpp"
#include "symalg/symfun.hpp"
#include "symalg/zerodim.hpp"

using json = nlohmann::ordered_json;
using namespace symalg;

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5eed;

enum Exit { kComputed = 0, kInputError = 1, kInconclusive = 2 };

struct Run {
    json doc;
    std::vector<std::string> lines;
    int status = kComputed;
};

std::string read_text(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Polynomials from positional arguments, then one per nonblank line of --file.
std::vector<std::string> gather(const std::vector<std::string>& inline_polys, const std::string& file) {
    std::vector<std::string> out = inline_polys;
    if (!file.empty()) {
        std::istringstream in(read_text(file));
        std::string line;
        while (std::getline(in, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
    if (out.empty()) throw Error(ErrorCode::InvalidParam, "no input polynomial given");
    return out;
}

unsigned highest_variable(const std::vector<std::string>& texts) {
    static const std::regex var(R"(x(\d+))");
    unsigned m = 0;
    for (const auto& t : texts)
        for (auto it = std::sregex_iterator(t.begin(), t.end(), var); it != std::sregex_iterator(); ++it)
            m = std::max(m, static_cast<unsigned>(std::stoul((*it)[1].str())));
    return m;
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, unsigned& nvars) {
    unsigned need = highest_variable(texts);
    if (nvars == 0) nvars = std::max(need, 1u);
    if (need > nvars)
        throw Error(ErrorCode::ArityMismatch,
                    "input uses x" + std::to_string(need) + " but n = " + std::to_string(nvars));
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse(t, nvars));
    return out;
}

json rationals(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string monomial_text(const Monomial& m, unsigned nvars) {
    return to_string(Polynomial::monomial(m, Rational(1), std::max(nvars, m.max_var())));
}

QMatrix matrix_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::IoError, std::string("matrix file is not JSON: ") + e.what());
    }
    if (!j.is_array()) throw Error(ErrorCode::IoError, "matrix must be an array of rows");
    QMatrix Q(j.size(), j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != j.size()) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
        for (std::size_t k = 0; k < j.size(); ++k)
            Q(i, k) = parse_rational(j[i][k].is_string() ? j[i][k].get<std::string>() : j[i][k].dump());
    }
    return Q;
}

int exit_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::DegenerateInstance:
        case ErrorCode::SeparationFailure:
        case ErrorCode::PositiveDimensional:
        case ErrorCode::NonTermination: return kInconclusive;
        default: return kInputError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact real algebra on symmetric polynomial systems"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    std::uint64_t seed = kDefaultSeed;
    if (const char* env = std::getenv("SYMALG_SEED")) {
        try {
            seed = std::stoull(env, nullptr, 0);
        } catch (const std::exception&) {
            std::cerr << "error: SYMALG_SEED is not an integer\n";
            return kInputError;
        }
    }
    app.add_flag("--json", as_json, "Emit a single JSON document");
    app.add_option("--seed", seed, "Seed for randomized steps (default: $SYMALG_SEED or 24301)");

    std::vector<std::string> polys;
    std::string file;
    unsigned nvars = 0;
    auto add_inputs = [&](CLI::App* sub) {
        sub->add_option("polys", polys, "Polynomials in x1, x2, ...");
        sub->add_option("-f,--file", file, "File with one polynomial per line");
        sub->add_option("-n,--nvars", nvars, "Number of variables (default: highest index used)");
    };

    auto* rewrite = app.add_subcommand("rewrite", "Write a symmetric polynomial in a basis of symmetric functions");
    std::string basis = "e";
    add_inputs(rewrite);
    rewrite->add_option("--basis", basis, "e, p, h or m")->check(CLI::IsMember({"e", "p", "h", "m"}));

    auto* roots = app.add_subcommand("roots", "Real roots of a univariate polynomial and signs at them");
    std::string upoly, sign_poly, var = "T";
    roots->add_option("poly", upoly, "Polynomial in T")->required();
    roots->add_option("--sign", sign_poly, "Polynomial whose signs at the roots are reported");
    roots->add_option("--var", var, "Variable name");

    auto* decide = app.add_subcommand("decide", "Does a parametrized set in orbit coordinates have a real preimage");
    std::string param_file, partition_text;
    decide->add_option("--param", param_file, "JSON parametrization")->required();
    decide->add_option("--partition", partition_text, "Orbit type, e.g. 1,2 or \"1^1 2^1\"")->required();

    auto* empty = app.add_subcommand("empty", "Is the real zero set of a symmetric system empty");
    bool verify_reg = false;
    add_inputs(empty);
    empty->add_flag("--verify-regularity", verify_reg, "Check the rank assumption on the Jacobian first");

    auto* nonneg = app.add_subcommand("nonneg", "Nonnegativity of a symmetric polynomial");
    add_inputs(nonneg);

    auto* gram = app.add_subcommand("gram", "Gram matrix system, or verification of a Gram certificate");
    bool full = false;
    std::string matrix_file;
    add_inputs(gram);
    gram->add_flag("--full", full, "Use every monomial of degree <= d, even for homogeneous input");
    gram->add_option("--matrix", matrix_file, "JSON matrix to verify as a Gram certificate");

    auto* sdpa = app.add_subcommand("sdpa", "Write the Gram system in sparse SDPA format");
    std::string out_path;
    add_inputs(sdpa);
    sdpa->add_flag("--full", full, "Use every monomial of degree <= d, even for homogeneous input");
    sdpa->add_option("-o,--output", out_path, "Output file (default: stdout)");

    auto* sort = app.add_subcommand("sort", "Sort by a shortest sequence of adjacent transpositions");
    std::vector<std::string> values;
    sort->add_option("values", values, "Rational numbers")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kComputed : kInputError;
    }

    CLI::App* cmd = app.get_subcommands().front();
    Run run;
    run.doc["command"] = cmd->get_name();
    try {
        if (cmd == rewrite) {
            auto texts = gather(polys, file);
            auto fs = parse_all(texts, nvars);
            BasisKind kind = parse_basis(basis);
            json answers = json::array();
            for (const auto& f : fs) {
                std::string s = to_string(ftsp_rewrite(f, kind), y_names(kind, nvars));
                answers.push_back(s);
                run.lines.push_back(s);
            }
            run.doc["answer"] = answers.size() == 1 ? answers[0] : answers;
        } else if (cmd == roots) {
            UniPoly q = parse_unipoly(upoly, var);
            ThomContext ctx(q);
            json encs = json::array();
            std::vector<std::string> enc_text;
            for (const auto& e : ctx.encodings()) {
                encs.push_back(to_string(e));
                enc_text.push_back(to_string(e));
            }
            run.doc["answer"] = ctx.root_count();
            json cert;
            cert["encodings"] = encs;
            run.lines.push_back(std::to_string(ctx.root_count()) + " real roots");
            run.lines.push_back("encodings: " + join(enc_text, " "));
            if (!sign_poly.empty()) {
                auto s = ctx.signs_at_roots(parse_unipoly(sign_poly, var));
                std::vector<std::string> chars;
                for (int x : s) chars.push_back(sign_char(x));
                cert["signs"] = chars;
                run.lines.push_back("signs: [" + join(chars, ",") + "]");
            }
            run.doc["certificate"] = cert;
        } else if (cmd == decide) {
            OrbitParam op{parse_partition(partition_text), param_from_json(read_text(param_file))};
            bool real = decide_real_preimage(op);
            run.doc["answer"] = real;
            run.lines.push_back(real ? "real preimage exists" : "no real preimage");
        } else if (cmd == empty) {
            auto fs = parse_all(gather(polys, file), nvars);
            EmptinessOptions opts;
            opts.seed = seed;
            opts.check_regularity = verify_reg;
            bool e = real_emptiness(fs, nvars, opts);
            run.doc["answer"] = e;
            run.lines.push_back(e ? "empty" : "nonempty");
        } else if (cmd == nonneg) {
            auto texts = gather(polys, file);
            if (texts.size() != 1) throw Error(ErrorCode::InvalidParam, "nonneg takes one polynomial");
            auto f = parse_all(texts, nvars)[0];
            auto r = nonneg_degree_principle(f, nvars, seed);
            run.doc["answer"] = to_string(r.status);
            run.lines.push_back(to_string(r.status));
            if (r.status == Nonneg::Witness) {
                run.doc["witness"] = rationals(r.witness);
                run.doc["value"] = to_string(r.value);
                std::vector<std::string> w;
                for (const auto& x : r.witness) w.push_back(to_string(x));
                run.lines.push_back("witness: (" + join(w, ", ") + ") value " + to_string(r.value));
            }
            if (!r.note.empty()) {
                run.doc["note"] = r.note;
                run.lines.push_back(r.note);
            }
            if (r.status == Nonneg::Unknown) run.status = kInconclusive;
        } else if (cmd == gram || cmd == sdpa) {
            auto texts = gather(polys, file);
            if (texts.size() != 1) throw Error(ErrorCode::InvalidParam, "one polynomial expected");
            auto f = parse_all(texts, nvars)[0];
            auto gs = gram_system(f, full);
            json b = json::array();
            for (const auto& m : gs.basis) b.push_back(monomial_text(m, nvars));
            json cert;
            cert["basis"] = b;
            if (cmd == sdpa) {
                std::string text = sdpa_text(gs);
                if (out_path.empty()) {
                    run.lines.push_back(text.substr(0, text.size() - 1));
                } else {
                    emit_sdpa(gs, out_path);
                    run.lines.push_back("wrote " + out_path);
                }
                run.doc["answer"] = gs.constraint_count();
                cert["block_size"] = gs.size();
                if (out_path.empty()) cert["sdpa"] = text;
                else cert["path"] = out_path;
            } else if (matrix_file.empty()) {
                run.doc["answer"] = gs.constraint_count();
                json cons = json::array();
                for (std::size_t k = 0; k < gs.constraint_count(); ++k) {
                    json cells = json::array();
                    for (auto [i, j] : gs.cells[k]) cells.push_back({i + 1, j + 1});
                    cons.push_back({{"monomial", monomial_text(gs.monomials[k], nvars)},
                                    {"rhs", to_string(gs.rhs[k])},
                                    {"cells", cells}});
                }
                cert["constraints"] = cons;
                run.lines.push_back("basis: " + join(b.get<std::vector<std::string>>(), " "));
                run.lines.push_back(std::to_string(gs.constraint_count()) + " constraints");
            } else {
                QMatrix Q = matrix_from_json(read_text(matrix_file));
                bool ok = verify_gram(f, gs.basis, Q);
                run.doc["answer"] = ok;
                run.lines.push_back(ok ? "certificate verified" : "certificate rejected");
                if (ok) {
                    auto dec = sos_from_gram(gs.basis, Q, nvars);
                    json terms = json::array();
                    for (std::size_t k = 0; k < dec.squares.size(); ++k) {
                        terms.push_back({{"weight", to_string(dec.weights[k])}, {"square", to_string(dec.squares[k])}});
                        run.lines.push_back(to_string(dec.weights[k]) + " * (" + to_string(dec.squares[k]) + ")^2");
                    }
                    cert["squares"] = terms;
                }
            }
            run.doc["certificate"] = cert;
        } else if (cmd == sort) {
            std::vector<Rational> a;
            for (const auto& v : values) a.push_back(parse_rational(v));
            auto [seq, sorted] = minimal_adjacent_transpositions(a);
            json swaps = json::array();
            std::vector<std::string> sw;
            for (auto [i, j] : seq.swaps) {
                swaps.push_back({i, j});
                sw.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
            run.doc["answer"] = seq.swaps.size();
            run.doc["certificate"] = {{"swaps", swaps}, {"sorted", rationals(sorted)}};
            run.lines.push_back(std::to_string(seq.swaps.size()) + " transpositions: " + join(sw, " "));
        }
    } catch (const Error& e) {
        run.status = exit_for(e.code());
        run.doc["answer"] = nullptr;
        run.doc["error"] = {{"code", error_name(e.code())}, {"message", e.what()}};
        run.lines = {std::string(run.status == kInconclusive ? "inconclusive: " : "error: ") + e.what()};
    }
    run.doc["seed"] = seed;
    run.doc["exit"] = run.status;

    if (as_json) {
        std::cout << run.doc.dump(2) << "\n";
    } else {
        auto& stream = run.doc.contains("error") ? std::cerr : std::cout;
        for (const auto& l : run.lines) stream << l << "\n";
    }
    return run.status;
}
