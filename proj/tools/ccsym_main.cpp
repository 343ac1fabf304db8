// ccsym command-line front end: parse field/algebra/series/rational-function
// expressions, dispatch to the library, print text or JSON reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "ccsym/curve.hpp"
#include "ccsym/expr.hpp"
#include "ccsym/poly.hpp"
#include "ccsym/symbols.hpp"
#include "ccsym/verify.hpp"
#include "ccsym/witt.hpp"

using nlohmann::json;
using namespace ccsym;

namespace {

struct Context {
    std::string field;
    std::string alg_suffix;
    long prec = 0;  // 0: use LS_DEFAULT_PREC or 16
    int deg = 1;
    bool as_json = false;
};

long effective_prec(const Context& ctx) {
    if (ctx.prec > 0) return ctx.prec;
    if (const char* env = std::getenv("LS_DEFAULT_PREC")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 16;
}

AlgebraPtr context_algebra(const Context& ctx) {
    std::string desc = ctx.field;
    if (!ctx.alg_suffix.empty()) desc += "[" + ctx.alg_suffix + "]";
    AlgebraPtr B = parse_algebra(desc);
    if (ctx.deg == 1) return B;
    if (B->field()->degree() != 1)
        throw Error("--deg with an extension base field is not supported; "
                    "use the library API for full towers");
    FieldPtr kp = relative_extension_canonical(B->field(), ctx.deg);
    return AlgebraDescriptor::make(kp, B->nilpotency_index());
}

json decomposition_json(const CCDecomposition& d) {
    json neg = json::object();
    for (const auto& [i, a] : d.neg) neg[std::to_string(i)] = a.to_string();
    json pos = json::array();
    size_t len = d.pos.size();
    while (len > 0 && d.pos[len - 1].is_zero()) --len;
    for (size_t i = 0; i < len; ++i) pos.push_back(d.pos[i].to_string());
    return json{{"n", d.n}, {"lambda", d.lambda.to_string()}, {"neg", neg}, {"pos", pos}};
}

CCDecomposition display_decomposition(const LaurentSeries& u, long prec) {
    return cc_decompose(u, u.is_exact() ? prec : -1);
}

int run_symbol(const Context& ctx, const std::string& ue, const std::string& we, long charN,
               bool have_char, long m, bool have_m) {
    AlgebraPtr A = context_algebra(ctx);
    long prec = effective_prec(ctx);
    LaurentSeries u = parse_series(A, ue, prec);
    LaurentSeries w = parse_series(A, we, prec);
    SymbolValue v = have_m ? hilbert_symbol(u, w, m)
                           : phi_symbol(u, w, Character{have_char ? charN : 1},
                                        A->extension_degree());
    long P = required_precision(u, w);
    auto du = display_decomposition(u, P);
    auto dw = display_decomposition(w, P);
    if (ctx.as_json) {
        json out{{"value", v.to_string()},
                 {"decompositions", json::array({decomposition_json(du), decomposition_json(dw)})},
                 {"precision", P}};
        if (v.mu_order()) out["mu"] = *v.mu_order();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "value: " << v.to_string() << "\n";
        if (v.mu_order()) std::cout << "mu-order: " << *v.mu_order() << "\n";
        std::cout << "u: " << du.to_string() << "\n";
        std::cout << "w: " << dw.to_string() << "\n";
        std::cout << "precision: " << P << "\n";
    }
    return 0;
}

int run_decompose(const Context& ctx, const std::string& ue) {
    AlgebraPtr A = context_algebra(ctx);
    long prec = effective_prec(ctx);
    LaurentSeries u = parse_series(A, ue, prec);
    auto d = display_decomposition(u, prec);
    if (ctx.as_json) {
        json out{{"value", u.to_string()},
                 {"decompositions", json::array({decomposition_json(d)})},
                 {"precision", u.is_exact() ? prec : u.first_unknown() - u.min_index()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << d.to_string() << "\n";
    }
    return 0;
}

int run_reciprocity(const Context& ctx, const std::string& fe, const std::string& ge, long charN,
                    bool have_char, long m, bool have_m) {
    AlgebraPtr B = context_algebra(ctx);
    RationalFunction f = parse_rational(B, fe);
    RationalFunction g = parse_rational(B, ge);
    ReciprocityResult r = have_m ? hilbert_reciprocity(f, g, m)
                                 : reciprocity_product(f, g, Character{have_char ? charN : 1});
    bool ok = r.product.value().is_one();
    if (ctx.as_json) {
        json pts = json::array();
        for (const auto& lv : r.locals)
            pts.push_back(json{{"point", lv.point.to_string()},
                               {"degree", lv.point.degree()},
                               {"local", lv.value.to_string()}});
        json out{{"points", pts},
                 {"product", r.product.to_string()},
                 {"precision", effective_prec(ctx)}};
        if (have_m) out["mu"] = m;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& lv : r.locals)
            std::cout << lv.point.to_string() << "  deg " << lv.point.degree() << "  "
                      << lv.value.to_string() << "\n";
        std::cout << "product: " << r.product.to_string() << "\n";
    }
    return ok ? 0 : 1;
}

int run_witt(const Context& ctx, const std::string& mode, const std::string& xs,
             const std::string& ys) {
    AlgebraPtr A = context_algebra(ctx);
    auto parse_vec = [&](const std::string& s) {
        std::vector<RingElement> out;
        size_t start = 0;
        int depth = 0;
        std::string body = s;
        if (!body.empty() && body.front() == '(' && body.back() == ')')
            body = body.substr(1, body.size() - 2);
        for (size_t i = 0; i <= body.size(); ++i) {
            if (i < body.size() && body[i] == '(') ++depth;
            if (i < body.size() && body[i] == ')') --depth;
            if (i == body.size() || (body[i] == ',' && depth == 0)) {
                out.push_back(parse_element(A, body.substr(start, i - start)));
                start = i + 1;
            }
        }
        return out;
    };
    if (mode == "add") {
        if (ys.empty()) throw Error("witt add needs two vectors");
        WittVector x(A, parse_vec(xs)), y(A, parse_vec(ys));
        auto s = witt_add(x, y);
        if (ctx.as_json)
            std::cout << json{{"value", s.to_string()}}.dump(2) << "\n";
        else
            std::cout << s.to_string() << "\n";
        return 0;
    }
    if (mode == "bridge") {
        WittVector x(A, parse_vec(xs));
        auto s = witt_to_series(x);
        if (ctx.as_json)
            std::cout << json{{"value", s.to_string()}}.dump(2) << "\n";
        else
            std::cout << s.to_string() << "\n";
        return 0;
    }
    throw Error("unknown witt mode: " + mode + " (use add|bridge)");
}

int run_verify(const std::string& suite, uint64_t seed, long cases, bool as_json) {
    SuiteResult r = run_suite(suite, seed, cases);
    if (as_json) {
        json out{{"suite", r.name},
                 {"cases", r.cases},
                 {"failures", r.failures},
                 {"seed", seed}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "suite " << r.name << ": " << r.cases << " cases, " << r.failures
                  << " failures (seed " << seed << ")\n";
        for (const auto& s : r.failure_notes) std::cout << "  " << s << "\n";
    }
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local symbols on P^1: Contou-Carrere, tame, norm-twisted and "
                 "Hilbert norm-residue symbols over artinian coefficient rings"};
    app.require_subcommand(1);

    Context ctx;
    long charN = 1, m = 0;
    uint64_t seed = 1;
    long cases = 100;
    std::string expr_u, expr_w, witt_mode, suite;

    auto add_ctx = [&](CLI::App* cmd, bool with_deg = true) {
        cmd->add_option("--field", ctx.field, "coefficient field, e.g. F5, F9:x^2+1, Q")
            ->required();
        cmd->add_option("--alg", ctx.alg_suffix, "nilpotent part, e.g. e^2");
        cmd->add_option("--prec", ctx.prec, "series precision (default LS_DEFAULT_PREC or 16)");
        if (with_deg) cmd->add_option("--deg", ctx.deg, "declare k(p)/k of this degree");
        cmd->add_flag("--json", ctx.as_json, "JSON output");
    };

    auto* sym = app.add_subcommand("symbol", "symbol of two Laurent series");
    add_ctx(sym);
    sym->add_option("u", expr_u)->required();
    sym->add_option("w", expr_w)->required();
    auto* sym_char = sym->add_option("--char", charN, "compose with the character x -> x^N");
    auto* sym_m = sym->add_option("--m", m, "Hilbert norm-residue symbol into mu_m");

    auto* dec = app.add_subcommand("decompose", "canonical unit factorization of a series");
    add_ctx(dec);
    dec->add_option("u", expr_u)->required();

    auto* wt = app.add_subcommand("witt", "witt-vector operations (add | bridge)");
    add_ctx(wt, false);
    wt->add_option("mode", witt_mode)->required();
    wt->add_option("x", expr_u)->required();
    wt->add_option("y", expr_w);

    auto* rec = app.add_subcommand("reciprocity", "local symbols over the support and product");
    add_ctx(rec, false);
    rec->add_option("f", expr_u)->required();
    rec->add_option("g", expr_w)->required();
    auto* rec_char = rec->add_option("--char", charN, "compose with the character x -> x^N");
    auto* rec_m = rec->add_option("--m", m, "Hilbert variant into mu_m");

    auto* hil = app.add_subcommand("hilbert", "Hilbert norm-residue symbol of two series");
    add_ctx(hil);
    hil->add_option("u", expr_u)->required();
    hil->add_option("w", expr_w)->required();
    hil->add_option("--m", m, "roots-of-unity order")->required();

    auto* ver = app.add_subcommand("verify", "randomized verification suites");
    ver->add_option("suite", suite, "witt | decompose | axioms | residue-vs-product | reciprocity")
        ->required();
    ver->add_option("--seed", seed, "deterministic seed");
    ver->add_option("--cases", cases, "number of cases");
    ver->add_flag("--json", ctx.as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (sym->parsed())
            return run_symbol(ctx, expr_u, expr_w, charN, sym_char->count() > 0, m,
                              sym_m->count() > 0);
        if (dec->parsed()) return run_decompose(ctx, expr_u);
        if (wt->parsed()) return run_witt(ctx, witt_mode, expr_u, expr_w);
        if (rec->parsed())
            return run_reciprocity(ctx, expr_u, expr_w, charN, rec_char->count() > 0, m,
                                   rec_m->count() > 0);
        if (hil->parsed()) return run_symbol(ctx, expr_u, expr_w, 1, false, m, true);
        if (ver->parsed()) return run_verify(suite, seed, cases, ctx.as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NotAUnit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const BadIndex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
