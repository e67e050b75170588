// fqset — command-line front end: constructions, verification scans, bound
// tables, algebraic certificates, exact searches, and the reproducible
// acceptance suite. All structured output is JSON (schema 1) with integers as
// decimal strings; exit codes: 0 ok, 1 violation/certificate failure,
// 2 usage error, 3 budget exhausted.

#include <array>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fqs/bounds.hpp"
#include "fqs/certify.hpp"
#include "fqs/constructions.hpp"
#include "fqs/io.hpp"
#include "fqs/pointset.hpp"
#include "fqs/predicates.hpp"
#include "fqs/reproduce.hpp"
#include "fqs/search.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace fqs;

std::string dec(const Integer& v) { return to_decimal(v); }
std::string dec(std::uint64_t v) { return std::to_string(v); }

/// Files written by the running command, for the optional run manifest.
struct OutputLog {
    std::vector<std::pair<std::string, std::string>> files;  // path, content

    void write(const std::string& path, const std::string& content) {
        write_text_file(path, content);
        files.emplace_back(path, content);
    }
};

json base_json(const std::string& command) {
    json j;
    j["schema"] = kSchemaVersion;
    j["artifact_version"] = kArtifactVersion;
    j["command"] = command;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_manifest(const std::string& path, const std::vector<std::string>& argv_tokens,
                    const OutputLog& outputs) {
    json m = base_json("manifest");
    m["argv"] = argv_tokens;
    json files = json::array();
    for (const auto& [p, content] : outputs.files) {
        json f;
        f["path"] = p;
        f["bytes"] = dec(content.size());
        f["fnv1a64"] = fnv1a64_hex(content);
        files.push_back(std::move(f));
    }
    m["files"] = std::move(files);
    write_text_file(path, m.dump(2) + "\n");
}

json provenance_json(const PointSet& A) {
    json p;
    p["name"] = A.provenance().name;
    json params;
    for (const auto& [key, value] : A.provenance().params) params[key] = value;
    p["params"] = std::move(params);
    return p;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
    std::string name;
    std::size_t n = 0;
    Residue q = 3;
    std::size_t k = 2;
    bool pm1 = false;
    std::string out;
};

PointSet build_construction(const ConstructArgs& a) {
    if (a.name == "corner-free") return corner_free_set(a.n, a.q, a.k);
    if (a.name == "right-angle-free") return right_angle_free_set(a.n, a.q);
    if (a.name == "standard-basis") return standard_basis_set(a.n, a.q);
    if (a.name == "s-lower-basic") return s_lower_basic(a.n, a.q);
    if (a.name == "s-lower-augmented") return s_lower_augmented(a.n, a.q);
    if (a.name == "s3-exact") {
        if (a.q != 3) throw std::invalid_argument("s3-exact requires q = 3");
        return s3_exact(a.n);
    }
    if (a.name == "s3-padded") {
        if (a.q != 3) throw std::invalid_argument("s3-padded requires q = 3");
        return s3_padded(a.n);
    }
    if (a.name == "t-lower-even") return t_lower_even(a.n, a.q);
    if (a.name == "t-lower-augmented") return t_lower_augmented(a.n, a.q);
    throw std::invalid_argument("unknown construction '" + a.name + "'");
}

int run_construct(const ConstructArgs& a, OutputLog& outputs) {
    PointSet A = build_construction(a);
    if (a.pm1) A = to_pm1(A);
    std::string text = to_text(A);

    if (a.out.empty()) {
        std::cout << text;
        return 0;
    }
    outputs.write(a.out, text);

    json side = base_json("construct");
    side["construction"] = a.name;
    side["n"] = dec(A.n());
    side["q"] = dec(A.spec().q());
    side["size"] = dec(A.size());
    if (auto claimed = A.claimed_property()) {
        side["claimed_property"] = config_kind_name(*claimed);
        if (*claimed == ConfigKind::KRightCorner) side["claimed_k"] = dec(A.claimed_k());
    }
    side["provenance"] = provenance_json(A);
    side["output"] = {{"path", a.out},
                      {"bytes", dec(text.size())},
                      {"fnv1a64", fnv1a64_hex(text)}};
    std::string side_path = a.out + ".provenance.json";
    outputs.write(side_path, side.dump(2) + "\n");

    json report = base_json("construct");
    report["construction"] = a.name;
    report["size"] = dec(A.size());
    report["output"] = a.out;
    report["provenance_file"] = side_path;
    emit(report);
    return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string input;
    std::string property;
    std::size_t k = 2;
    std::uint64_t budget = 0;  // 0 = unlimited
};

int run_verify(const VerifyArgs& a) {
    std::string text = read_text_file(a.input);
    ConfigKind kind = parse_config_kind(a.property);
    PointSet A = point_set_from_text(text, Provenance{"cli-input", {{"path", a.input}}}, kind,
                                     a.k);
    std::uint64_t budget = a.budget == 0 ? UINT64_MAX : a.budget;
    ScanOutcome out = A.scan(kind, a.k, budget);

    json j = base_json("verify");
    j["input"] = a.input;
    j["property"] = config_kind_name(kind);
    if (kind == ConfigKind::KRightCorner) j["k"] = dec(a.k);
    j["n"] = dec(A.n());
    j["q"] = dec(A.spec().q());
    j["size"] = dec(A.size());
    j["tuples_checked"] = dec(out.tuples_checked);

    int code = 0;
    switch (out.status) {
        case ScanStatus::Ok:
            j["status"] = "ok";
            break;
        case ScanStatus::ViolationFound: {
            j["status"] = "violation";
            const Violation& v = *out.violation;
            json vj;
            vj["kind"] = config_kind_name(v.kind);
            json idx = json::array();
            json vecs = json::array();
            for (std::size_t i : v.indices) {
                idx.push_back(dec(i));
                vecs.push_back(format_vector_line(A[i]));
            }
            vj["indices"] = std::move(idx);   // 0-based positions in the input order
            vj["vectors"] = std::move(vecs);
            j["violation"] = std::move(vj);
            code = 1;
            break;
        }
        case ScanStatus::BudgetExhausted:
            j["status"] = "budget-exhausted";
            code = 3;
            break;
    }
    emit(j);
    return code;
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
    std::string property;
    std::int64_t n_min = 1;
    std::int64_t n_max = 8;
    std::vector<std::uint32_t> qs = {3};
    std::int64_t k = -1;  // <0 = unset
    std::string format = "csv";
    std::string out;
};

std::string bounds_text_table(const std::vector<BoundReport>& rows) {
    std::vector<std::array<std::string, 9>> cells;
    cells.push_back({"property", "formula_id", "side", "n", "q", "k", "main_term", "note",
                     "value"});
    for (const BoundReport& r : rows)
        cells.push_back({r.property, r.formula_id, r.side, std::to_string(r.n),
                         std::to_string(r.q), r.k ? std::to_string(*r.k) : "",
                         r.main_term ? "yes" : "", r.note, dec(r.value)});
    std::array<std::size_t, 9> width{};
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 9; ++c) width[c] = std::max(width[c], row[c].size());
    std::string text;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < 9; ++c) {
            text += row[c];
            if (c + 1 < 9) text += std::string(width[c] - row[c].size() + 2, ' ');
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        text += "\n";
    }
    return text;
}

int run_bounds(const BoundsArgs& a, OutputLog& outputs) {
    if (a.n_min < 1 || a.n_max < a.n_min)
        throw std::invalid_argument("need 1 <= n-min <= n-max");
    std::vector<std::int64_t> ns;
    for (std::int64_t n = a.n_min; n <= a.n_max; ++n) ns.push_back(n);
    std::vector<Residue> qs(a.qs.begin(), a.qs.end());
    std::optional<std::int64_t> k;
    if (a.k >= 0) k = a.k;
    std::vector<BoundReport> rows = bounds_table(a.property, ns, qs, k);

    std::string text;
    if (a.format == "csv") {
        text = bounds_table_csv(rows);
    } else if (a.format == "text") {
        text = bounds_text_table(rows);
    } else if (a.format == "json") {
        json j = base_json("bounds");
        j["property"] = a.property;
        json arr = json::array();
        for (const BoundReport& r : rows) {
            json row;
            row["property"] = r.property;
            row["formula_id"] = r.formula_id;
            row["side"] = r.side;
            row["n"] = std::to_string(r.n);
            row["q"] = dec(r.q);
            if (r.k) row["k"] = std::to_string(*r.k);
            row["main_term"] = r.main_term;
            if (!r.note.empty()) row["note"] = r.note;
            row["value"] = dec(r.value);
            arr.push_back(std::move(row));
        }
        j["rows"] = std::move(arr);
        text = j.dump(2) + "\n";
    } else {
        throw std::invalid_argument("unknown format '" + a.format + "' (csv|json|text)");
    }

    if (a.out.empty()) {
        std::cout << text;
    } else {
        outputs.write(a.out, text);
        std::cout << "wrote " << a.out << " (" << rows.size() << " rows)\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct CertifyArgs {
    std::string route;
    std::string input;
    std::uint32_t alpha = 0;
    std::vector<std::uint32_t> rset;
    bool embed_pm1 = false;
};

int run_certify(const CertifyArgs& a) {
    std::string text = read_text_file(a.input);
    PointSet A = point_set_from_text(text, Provenance{"cli-input", {{"path", a.input}}});

    json j = base_json("certify");
    j["route"] = a.route;
    j["input"] = a.input;
    j["n"] = dec(A.n());
    j["q"] = dec(A.spec().q());
    j["size"] = dec(A.size());
    bool pass = false;

    if (a.route == "p-matrix") {
        FqMatrix M = p_eval_matrix(A);
        bool ident = is_identity(M);
        std::size_t rank = rank_gf(M);
        pass = ident && rank == A.size();
        j["clauses"] = json::array({{{"id", "identity"}, {"pass", ident}}});
        j["rank"] = dec(rank);
        j["matrix_digest"] = matrix_digest(M);
    } else if (a.route == "lemma-diag") {
        std::vector<Residue> R(a.rset.begin(), a.rset.end());
        DiagCertificate cert = lemma_diag_certificate(A, a.alpha, R);
        pass = cert.all_pass;
        json clauses = json::array();
        for (const ClauseResult& c : cert.clauses) {
            json cj;
            cj["id"] = c.id;
            cj["pass"] = c.pass;
            if (!c.counterexample.empty()) cj["counterexample"] = c.counterexample;
            clauses.push_back(std::move(cj));
        }
        j["clauses"] = std::move(clauses);
        j["alpha"] = dec(a.alpha);
        json rj = json::array();
        for (Residue r : R) rj.push_back(dec(r));
        j["rset"] = std::move(rj);
        j["size_bound"] = dec(cert.size_bound);
        if (cert.T) {
            j["rank"] = dec(rank_gf(*cert.T));
            j["matrix_digest"] = matrix_digest(*cert.T);
        } else {
            j["rank"] = "0";
        }
    } else if (a.route == "t-code") {
        PointSet B = a.embed_pm1 ? to_pm1(A) : std::move(A);
        CodeCertificate cert = t_code_certificate(B);
        pass = cert.identity && cert.rank == B.size();
        j["size"] = dec(B.size());
        j["clauses"] = json::array({{{"id", "identity"}, {"pass", cert.identity}}});
        j["rank"] = dec(cert.rank);
        j["matrix_digest"] = matrix_digest(cert.M);
    } else {
        throw std::invalid_argument("unknown certificate route '" + a.route +
                                    "' (p-matrix|lemma-diag|t-code)");
    }

    j["pass"] = pass;
    emit(j);
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
    std::string target;
    std::size_t n = 0;
    Residue q = 3;
    std::size_t k = 2;
    std::uint64_t budget = 0;  // 0 = unlimited
    bool no_anchor = false;
    std::string witness_out;
};

int run_search(const SearchArgs& a, OutputLog& outputs) {
    SearchOptions opts;
    opts.node_budget = a.budget == 0 ? UINT64_MAX : a.budget;
    opts.anchor_zero = !a.no_anchor;

    SearchResult res = [&]() -> SearchResult {
        if (a.target == "R") return exact_R(a.n, a.q, opts);
        if (a.target == "S") return exact_S(a.n, a.q, opts);
        if (a.target == "T") return exact_T(a.n, a.q, opts);
        if (a.target == "corner") return exact_corner(a.n, a.q, a.k, opts);
        if (a.target == "all-right") return exact_all_right(a.n, a.q, opts);
        throw std::invalid_argument("unknown search target '" + a.target +
                                    "' (R|S|T|corner|all-right)");
    }();

    json j = base_json("search");
    j["target"] = a.target;
    j["n"] = dec(a.n);
    j["q"] = dec(a.q);
    if (a.target == "corner") j["k"] = dec(a.k);
    j["anchored"] = opts.anchor_zero;
    j["optimum"] = dec(res.optimum);
    j["nodes_expanded"] = dec(res.nodes_expanded);
    j["status"] =
        res.status == SearchStatus::ProvenOptimal ? "proven-optimal" : "budget-exhausted";
    // Values found by the solver are produced by this artifact's search, not
    // quoted from elsewhere.
    j["provenance"] = "computed-by-search";
    j["witness_size"] = dec(res.witness.size());
    if (!a.witness_out.empty()) {
        outputs.write(a.witness_out, to_text(res.witness));
        j["witness_file"] = a.witness_out;
    }
    emit(j);
    return res.status == SearchStatus::ProvenOptimal ? 0 : 3;
}

// ---------------------------------------------------------------------------

struct ReproduceArgs {
    std::string out_dir = "reproduce_out";
    std::vector<std::string> only;
};

int run_reproduce_cmd(const ReproduceArgs& a) {
    ReproduceReport report = run_reproduce(a.out_dir, a.only, std::cout);
    std::size_t passed = 0;
    for (const CriterionResult& r : report.criteria)
        if (r.pass) ++passed;
    std::cout << "acceptance: " << passed << "/" << report.criteria.size()
              << " criteria passed; artifacts under " << a.out_dir << "\n";
    return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"extremal configuration-free subsets of F_q^n: constructions, "
                 "verification, bounds, certificates, exact search"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kArtifactVersion);

    std::string manifest_path;
    app.add_option("--manifest", manifest_path,
                   "write a JSON manifest (argv + digests of produced files)");
    bool sequential = false;
    app.add_flag("--sequential", sequential, "single-threaded execution (the default and only mode)");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a named point set");
    construct
        ->add_option("name", ca.name,
                     "corner-free | right-angle-free | standard-basis | s-lower-basic | "
                     "s-lower-augmented | s3-exact | s3-padded | t-lower-even | "
                     "t-lower-augmented")
        ->required();
    construct->add_option("--n", ca.n, "dimension")->required();
    construct->add_option("--q", ca.q, "field size (odd prime)")->capture_default_str();
    construct->add_option("--k", ca.k, "corner order (corner-free only)")->capture_default_str();
    construct->add_flag("--pm1", ca.pm1, "re-encode a 0/1 word set over {1, q-1}");
    construct->add_option("--out", ca.out, "output vector file (stdout if omitted)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "scan a vector file for a forbidden configuration");
    verify->add_option("--input", va.input, "vector file")->required();
    verify
        ->add_option("--property", va.property,
                     "right-angle | corner | all-right | self-orth | hamming")
        ->required();
    verify->add_option("--k", va.k, "corner order (corner property only)")->capture_default_str();
    verify->add_option("--budget", va.budget, "max predicate evaluations (0 = unlimited)")->capture_default_str();

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "evaluate bound formulas over a grid");
    bounds
        ->add_option("--property", ba.property,
                     "right-angle | corner | all-right | self-orth | hamming")
        ->required();
    bounds->add_option("--n-min", ba.n_min, "smallest dimension")->capture_default_str();
    bounds->add_option("--n-max", ba.n_max, "largest dimension")->capture_default_str();
    bounds->add_option("--q", ba.qs, "field sizes (repeatable)");
    bounds->add_option("--k", ba.k, "corner order (required for the corner property)");
    bounds->add_option("--format", ba.format, "csv | json | text")->capture_default_str();
    bounds->add_option("--out", ba.out, "write the table to a file instead of stdout");

    CertifyArgs cea;
    auto* certify = app.add_subcommand("certify", "algebraic certificate for a vector file");
    certify->add_option("route", cea.route, "p-matrix | lemma-diag | t-code")->required();
    certify->add_option("--input", cea.input, "vector file")->required();
    certify->add_option("--alpha", cea.alpha, "common self inner product (lemma-diag)")->capture_default_str();
    certify->add_option("--rset", cea.rset, "allowed cross inner products (lemma-diag)");
    certify->add_flag("--embed-pm1", cea.embed_pm1, "re-encode 0/1 words over {1, q-1} first");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "exact maximum configuration-free subset");
    search->add_option("target", sa.target, "R | S | T | corner | all-right")->required();
    search->add_option("--n", sa.n, "dimension")->required();
    search->add_option("--q", sa.q, "field size (odd prime)")->capture_default_str();
    search->add_option("--k", sa.k, "corner order (corner target)")->capture_default_str();
    search->add_option("--budget", sa.budget, "node budget (0 = unlimited)")->capture_default_str();
    search->add_flag("--no-anchor", sa.no_anchor, "search without rooting at the zero vector");
    search->add_option("--witness-out", sa.witness_out, "write the witness vector file");

    ReproduceArgs ra;
    auto* reproduce = app.add_subcommand("reproduce", "run the acceptance suite");
    reproduce->add_option("--out-dir", ra.out_dir, "artifact directory")->capture_default_str();
    reproduce->add_option("--only", ra.only, "criterion ids to run (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (const char* w = std::getenv("FQSET_WORKERS")) {
        char* end = nullptr;
        long workers = std::strtol(w, &end, 10);
        if (end != w && workers > 1)
            std::cerr << "note: execution is sequential; FQSET_WORKERS=" << w
                      << " clamped to 1\n";
    }
    (void)sequential;  // accepted for interface stability; execution is always sequential

    OutputLog outputs;
    int code = 2;
    try {
        if (app.got_subcommand(construct)) code = run_construct(ca, outputs);
        else if (app.got_subcommand(verify)) code = run_verify(va);
        else if (app.got_subcommand(bounds)) code = run_bounds(ba, outputs);
        else if (app.got_subcommand(certify)) code = run_certify(cea);
        else if (app.got_subcommand(search)) code = run_search(sa, outputs);
        else if (app.got_subcommand(reproduce)) code = run_reproduce_cmd(ra);
        if (!manifest_path.empty()) {
            std::vector<std::string> tokens(argv, argv + argc);
            write_manifest(manifest_path, tokens, outputs);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
