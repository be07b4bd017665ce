#include "evolab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "evolab/classify2.hpp"
#include "evolab/isomorphism.hpp"
#include "evolab/nilpotency.hpp"
#include "evolab/parse.hpp"

namespace evolab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_negative = 2;
constexpr int exit_internal = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

char first_printable(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return c;
    return '\0';
}

// Raw document text: inline literal/object, or file contents.
std::string fetch(const std::string& source) {
    char c = first_printable(source);
    if (c == '[' || c == '{') return source;
    return read_file(source);
}

// ---- inline bracketed matrix literal ----

std::vector<std::vector<std::string>> split_matrix_literal(const std::string& s) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= s.size() || s[pos] != c)
            throw InputError(std::string("matrix literal: expected '") + c + "' at offset " +
                             std::to_string(pos));
        ++pos;
    };

    std::vector<std::vector<std::string>> rows;
    expect('[');
    while (true) {
        expect('[');
        std::vector<std::string> row;
        while (true) {
            skip();
            std::size_t start = pos;
            int depth = 0;
            while (pos < s.size() && (depth > 0 || (s[pos] != ',' && s[pos] != ']'))) {
                if (s[pos] == '(') ++depth;
                if (s[pos] == ')') --depth;
                ++pos;
            }
            if (pos >= s.size()) throw InputError("matrix literal: unterminated row");
            std::string entry = s.substr(start, pos - start);
            if (first_printable(entry) == '\0')
                throw InputError("matrix literal: empty entry at offset " +
                                 std::to_string(start));
            row.push_back(entry);
            if (s[pos] == ']') {
                ++pos;
                break;
            }
            ++pos; // ','
        }
        rows.push_back(std::move(row));
        skip();
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(']');
    skip();
    if (pos != s.size()) throw InputError("matrix literal: trailing input");
    return rows;
}

struct MatrixDoc {
    std::vector<std::vector<std::string>> entries;
    std::set<std::string> parameters;
    bool restrict_symbols = false; // true for JSON files with declared parameters
};

std::string json_entry(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InputError("matrix entries must be strings (floating point is not accepted)");
}

MatrixDoc load_matrix_doc(const std::string& source) {
    std::string text = fetch(source);
    MatrixDoc doc;
    if (first_printable(text) == '{') {
        ordered_json j;
        try {
            j = ordered_json::parse(text);
        } catch (const ordered_json::parse_error& e) {
            throw InputError(std::string("JSON: ") + e.what());
        }
        if (!j.contains("matrix") || !j["matrix"].is_array())
            throw InputError("JSON algebra: missing \"matrix\" array");
        for (auto& row : j["matrix"]) {
            std::vector<std::string> r;
            for (auto& v : row) r.push_back(json_entry(v));
            doc.entries.push_back(std::move(r));
        }
        if (j.contains("parameters"))
            for (auto& p : j["parameters"]) doc.parameters.insert(p.get<std::string>());
        doc.restrict_symbols = true;
        if (j.contains("dim")) {
            std::size_t dim = j["dim"].get<std::size_t>();
            if (doc.entries.size() != dim)
                throw InputError("JSON algebra: row count differs from \"dim\"");
        }
    } else {
        doc.entries = split_matrix_literal(text);
    }
    return doc;
}

PolyMat doc_to_polymat(const MatrixDoc& doc) {
    PolyMat m;
    for (auto& row : doc.entries) {
        std::vector<Polynomial> r;
        for (auto& e : row)
            r.push_back(parse_entry(e, doc.restrict_symbols ? &doc.parameters : nullptr));
        m.push_back(std::move(r));
    }
    if (m.empty()) throw InputError("matrix has no rows");
    for (auto& row : m)
        if (row.size() != m.size()) throw InputError("matrix is not square");
    return m;
}

} // namespace

EvolutionAlgebra load_algebra(const std::string& source) {
    return EvolutionAlgebra(doc_to_polymat(load_matrix_doc(source)));
}

PolyMat load_polymat(const std::string& source) {
    return doc_to_polymat(load_matrix_doc(source));
}

GMat load_concrete_matrix(const std::string& source) {
    PolyMat m = load_polymat(source);
    GMat g;
    for (auto& row : m) {
        GVec r;
        for (auto& p : row) {
            if (!p.is_constant()) throw InputError("matrix must be concrete here");
            r.push_back(p.constant_value());
        }
        g.push_back(std::move(r));
    }
    return g;
}

MonomialIso load_monomial_iso(const std::string& source) {
    std::string text = fetch(source);
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw InputError(std::string("JSON: ") + e.what());
    }
    if (!j.contains("pi") || !j.contains("scalars"))
        throw InputError("monomial isomorphism needs \"pi\" and \"scalars\"");
    MonomialIso phi;
    for (auto& v : j["pi"]) {
        long long p = v.get<long long>();
        if (p < 1) throw InputError("pi entries are 1-based positive indices");
        phi.pi.push_back(static_cast<std::size_t>(p - 1));
    }
    for (auto& v : j["scalars"]) phi.scalars.push_back(parse_gaussian(json_entry(v)));
    std::size_t n = phi.pi.size();
    if (phi.scalars.size() != n) throw InputError("pi and scalars lengths differ");
    std::vector<bool> seen(n, false);
    for (std::size_t p : phi.pi) {
        if (p >= n || seen[p]) throw InputError("pi is not a permutation");
        seen[p] = true;
    }
    for (auto& s : phi.scalars)
        if (s.is_zero()) throw InputError("monomial scalars must be nonzero");
    return phi;
}

namespace {

// ---- deterministic reports: "key: value" lines or one JSON object ----

std::string json_to_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += json_to_text(v[i]);
        }
        return s + "]";
    }
    return v.dump();
}

struct Report {
    ordered_json fields = ordered_json::object();

    template <typename T>
    void add(const std::string& key, T&& value) {
        fields[key] = std::forward<T>(value);
    }

    void emit(std::ostream& out, bool json) const {
        if (json) {
            out << fields.dump(2) << "\n";
            return;
        }
        for (auto& [k, v] : fields.items()) out << k << ": " << json_to_text(v) << "\n";
    }
};

ordered_json gmat_json(const GMat& m) {
    ordered_json rows = ordered_json::array();
    for (auto& row : m) {
        ordered_json r = ordered_json::array();
        for (auto& v : row) r.push_back(v.to_string());
        rows.push_back(std::move(r));
    }
    return rows;
}

ordered_json gvec_json(const GVec& v) {
    ordered_json r = ordered_json::array();
    for (auto& x : v) r.push_back(x.to_string());
    return r;
}

ordered_json index_json_1based(const std::vector<std::size_t>& v) {
    ordered_json r = ordered_json::array();
    for (auto x : v) r.push_back(x + 1);
    return r;
}

// ---- subcommand bodies ----

int cmd_classify2(const std::string& f, Report& rep) {
    EvolutionAlgebra E = load_algebra(f);
    ClassLabel label = classify_dim2(E);
    rep.add("label", to_string(label.tag));
    if (label.e5_pair) {
        ordered_json pair = ordered_json::array();
        pair.push_back(label.e5_pair->first.to_string());
        pair.push_back(label.e5_pair->second.to_string());
        rep.add("e5_pair", pair);
    }
    if (label.e6_invariant) rep.add("e6_invariant", label.e6_invariant->to_string());
    InvariantTuple t = invariant_tuple(E);
    rep.add("dim_E2", t.dim_e2);
    rep.add("right_nilpotent", t.right_nilpotent);
    rep.add("annihilator_dim", t.annihilator_dim);
    rep.add("nil_basis_vector", t.nil_basis_vector);
    return exit_ok;
}

int cmd_nil(const std::string& f, Report& rep) {
    EvolutionAlgebra E = load_algebra(f);
    if (!E.concrete()) throw InputError("nil: algebra must be concrete");
    bool nil = is_nil(E);
    RightNilpotency rn = is_right_nilpotent(E);
    bool tri = triangularize(E).has_value();
    rep.add("dim", E.dim());
    rep.add("nil", nil);
    rep.add("right_nilpotent", rn.right_nilpotent);
    if (rn.index) rep.add("right_nil_index", *rn.index);
    bool consistent = nil == rn.right_nilpotent && nil == tri;
    if (E.dim() <= 8) {
        bool oracle = cyclic_products_zero(E);
        rep.add("cyclic_products_zero", oracle);
        consistent = consistent && oracle == nil;
    } else {
        rep.add("cyclic_products_zero", "skipped (n > 8)");
    }
    rep.add("triangularizable", tri);
    rep.add("consistent", consistent);
    return consistent ? exit_ok : exit_internal;
}

int cmd_triangularize(const std::string& f, Report& rep) {
    EvolutionAlgebra E = load_algebra(f);
    if (!E.concrete()) throw InputError("triangularize: algebra must be concrete");
    auto t = triangularize(E);
    rep.add("triangularizable", t.has_value());
    if (t) {
        rep.add("sigma", index_json_1based(t->sigma));
        rep.add("matrix", gmat_json(t->matrix));
    }
    return exit_ok;
}

int cmd_series(const std::string& f, Report& rep) {
    EvolutionAlgebra E = load_algebra(f);
    if (!E.concrete()) throw InputError("series: algebra must be concrete");
    rep.add("dim", E.dim());

    auto chain = right_series_chain(E);
    ordered_json rdims = ordered_json::array();
    for (auto& s : chain) rdims.push_back(s.dim());
    rep.add("right_series_dims", rdims);
    RightNilpotency rn = is_right_nilpotent(E);
    rep.add("right_nilpotent", rn.right_nilpotent);
    if (rn.index) rep.add("right_nil_index", *rn.index);

    unsigned cap = static_cast<unsigned>((1u << (E.dim() - 1)) + 1);
    ordered_json ldims = ordered_json::array();
    bool zero_reached = false;
    for (unsigned k = 1; k <= cap; ++k) {
        Subspace s = lower_central(E, k);
        ldims.push_back(s.dim());
        if (s.is_zero()) {
            zero_reached = true;
            break;
        }
    }
    rep.add("lower_central_dims", ldims);
    rep.add("lower_central_cap", cap);
    rep.add("nilpotent_within_cap", zero_reached);
    return exit_ok;
}

int cmd_vanish(std::size_t n, unsigned k, Report& rep) {
    auto sys = vanish_system(n, k);
    rep.add("system", "(" + std::to_string(n) + ";" + std::to_string(k) + ")");
    rep.add("count", sys.size());
    for (std::size_t i = 0; i < sys.size(); ++i)
        rep.add("eq" + std::to_string(i + 1), sys[i].to_string());
    return exit_ok;
}

int cmd_iso(const std::string& f, const std::string& g, const std::string& mode_name,
            Report& rep) {
    IsoMode mode;
    if (mode_name == "derived") mode = IsoMode::derived;
    else if (mode_name == "appendix") mode = IsoMode::appendix_literal;
    else throw InputError("iso: --mode must be 'derived' or 'appendix'");
    EvolutionAlgebra P = load_algebra(f), Q = load_algebra(g);
    IsoVerdict v = decide_isomorphic(P, Q, mode);
    rep.add("mode", mode_name);
    rep.add("parameterized", v.parameterized);
    rep.add("reduced_basis_size", v.basis_size);
    bool neg = v.verdict == IsoVerdictKind::NotIsomorphic;
    rep.add("verdict", neg ? "NOT isomorphic" : "isomorphic");
    return neg ? exit_negative : exit_ok;
}

int cmd_verify(const std::string& t, const std::string& f, const std::string& g, Report& rep) {
    GMat T = load_concrete_matrix(t);
    EvolutionAlgebra P = load_algebra(f), Q = load_algebra(g);
    bool ok = verify_isomorphism(T, P, Q);
    rep.add("verified", ok);
    return ok ? exit_ok : exit_negative;
}

int cmd_star(const std::string& a, const std::string& b, Report& rep) {
    PolyMat A = load_polymat(a), B = load_polymat(b);
    StarMatrix s = star_product(A, B);
    rep.add("pairs", s.pairs.size());
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        ordered_json row = ordered_json::array();
        for (auto& p : s.rows[r]) row.push_back(p.to_string());
        rep.add("row_" + std::to_string(s.pairs[r].first + 1) + "_" +
                    std::to_string(s.pairs[r].second + 1),
                row);
    }
    return exit_ok;
}

BlockAlgebra load_block_algebra(const std::string& f) {
    GMat m = load_concrete_matrix(f);
    auto A = BlockAlgebra::from_matrix(m);
    if (!A) throw InputError("matrix is not 2x2-block diagonal of even size");
    if (!A->nondegenerate()) throw InputError("block algebra must be nondegenerate");
    return *A;
}

int cmd_block_transform(const std::string& f, const std::string& phi_src, Report& rep) {
    BlockAlgebra A = load_block_algebra(f);
    MonomialIso phi = load_monomial_iso(phi_src);
    if (phi.size() != A.dim()) throw InputError("block-transform: size mismatch");
    GMat t = transform(A, phi);
    rep.add("matrix", gmat_json(t));
    rep.add("blocks_preserved", blocks_preserved(phi.pi));
    rep.add("structure_preserved", check_structure_preserved(A, phi));
    rep.add("sb_literal_chain", sb_literal_chain(phi.pi));
    return exit_ok;
}

int cmd_block_compose(const std::string& a, const std::string& b, Report& rep) {
    MonomialIso phi = load_monomial_iso(a), psi = load_monomial_iso(b);
    if (phi.size() != psi.size()) throw InputError("block-compose: size mismatch");
    MonomialIso r = compose(phi, psi);
    rep.add("pi", index_json_1based(r.pi));
    rep.add("scalars", gvec_json(r.scalars));
    rep.add("matrix", gmat_json(r.matrix()));
    return exit_ok;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for finite-dimensional evolution algebras"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit one JSON object instead of key: value lines");

    std::string f, g, t, mode = "derived";
    std::size_t v_n = 0;
    unsigned v_k = 0;

    auto* classify = app.add_subcommand("classify2", "classify a 2-dimensional algebra");
    classify->add_option("algebra", f)->required();
    auto* nil = app.add_subcommand("nil", "nil / right-nilpotent / triangularizable verdicts");
    nil->add_option("algebra", f)->required();
    auto* tri = app.add_subcommand("triangularize", "triangularizing permutation and matrix");
    tri->add_option("algebra", f)->required();
    auto* series = app.add_subcommand("series", "right series and lower central series");
    series->add_option("algebra", f)->required();
    auto* vanish = app.add_subcommand("vanish", "print the (n;k) vanishing system");
    vanish->add_option("n", v_n)->required();
    vanish->add_option("k", v_k)->required();
    auto* iso = app.add_subcommand("iso", "decide isomorphism of two algebras");
    iso->add_option("algebra1", f)->required();
    iso->add_option("algebra2", g)->required();
    iso->add_option("--mode", mode, "derived|appendix")->capture_default_str();
    auto* verify = app.add_subcommand("verify", "certify an isomorphism witness");
    verify->add_option("witness", t)->required();
    verify->add_option("algebra1", f)->required();
    verify->add_option("algebra2", g)->required();
    auto* star = app.add_subcommand("star", "star product of two evolution matrices");
    star->add_option("matrix1", f)->required();
    star->add_option("matrix2", g)->required();
    auto* btrans = app.add_subcommand("block-transform", "apply a monomial isomorphism");
    btrans->add_option("algebra", f)->required();
    btrans->add_option("iso", g)->required();
    auto* bcomp = app.add_subcommand("block-compose", "compose two monomial isomorphisms");
    bcomp->add_option("iso1", f)->required();
    bcomp->add_option("iso2", g)->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    Report rep;
    int code = exit_ok;
    try {
        if (classify->parsed()) code = cmd_classify2(f, rep);
        else if (nil->parsed()) code = cmd_nil(f, rep);
        else if (tri->parsed()) code = cmd_triangularize(f, rep);
        else if (series->parsed()) code = cmd_series(f, rep);
        else if (vanish->parsed()) code = cmd_vanish(v_n, v_k, rep);
        else if (iso->parsed()) code = cmd_iso(f, g, mode, rep);
        else if (verify->parsed()) code = cmd_verify(t, f, g, rep);
        else if (star->parsed()) code = cmd_star(f, g, rep);
        else if (btrans->parsed()) code = cmd_block_transform(f, g, rep);
        else if (bcomp->parsed()) code = cmd_block_compose(f, g, rep);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    rep.emit(out, json);
    return code;
}

} // namespace evolab::cli
