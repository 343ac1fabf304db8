#include "ccsym/verify.hpp"

// Suites are implemented at the bottom of this file once the symbol and curve
// modules are available; the generator utilities live here so tests, the
// acceptance binary and the CLI share one deterministic stream.

#include "ccsym/curve.hpp"
#include "ccsym/poly.hpp"
#include "ccsym/symbols.hpp"
#include "ccsym/witt.hpp"

namespace ccsym {

RingElement random_element(const AlgebraPtr& a, Rng& rng) {
    if (a->characteristic() == 0) {
        RingElement x = RingElement::zero(a);
        for (int s = 0; s < a->nilpotency_index(); ++s) {
            RingElement term = RingElement::from_rational(a, rng.range(-6, 6), rng.range(1, 4));
            if (s > 0) term *= RingElement::epsilon(a).pow(s);
            x += term;
        }
        return x;
    }
    std::vector<long> coords(a->dim());
    for (auto& c : coords) c = rng.below(a->characteristic());
    return RingElement::from_coords(a, std::move(coords));
}

RingElement random_unit(const AlgebraPtr& a, Rng& rng) {
    for (;;) {
        RingElement x = random_element(a, rng);
        if (x.is_unit()) return x;
    }
}

RingElement random_nilpotent(const AlgebraPtr& a, Rng& rng) {
    RingElement x = random_element(a, rng);
    return x - x.residue_lift();
}

LaurentSeries random_unit_series(const AlgebraPtr& a, Rng& rng, long vlo, long vhi, long neg_span,
                                 long width, bool exact) {
    long v = rng.range(vlo, vhi);
    std::map<long, RingElement> c;
    c.emplace(v, random_unit(a, rng));
    for (long i = 1; i <= neg_span; ++i) {
        if (rng.below(2) == 0) continue;
        RingElement n = random_nilpotent(a, rng);
        if (!n.is_zero()) c.emplace(v - i, n);
    }
    for (long i = 1; i < width; ++i) {
        RingElement x = random_element(a, rng);
        if (!x.is_zero()) c.emplace(v + i, x);
    }
    return LaurentSeries(a, std::move(c), exact ? LaurentSeries::kExact : v + width);
}

RationalFunction random_rational_function(const AlgebraPtr& B, Rng& rng, int maxdeg) {
    auto random_poly_unit = [&](int dmax) {
        for (;;) {
            int d = static_cast<int>(rng.below(dmax + 1));
            std::vector<RingElement> c;
            for (int i = 0; i <= d; ++i) c.push_back(random_element(B, rng));
            Polynomial p(B, std::move(c));
            if (!p.residue_poly().is_zero()) return p;
        }
    };
    return RationalFunction(random_poly_unit(maxdeg), random_poly_unit(maxdeg));
}

std::vector<RingElement> all_elements(const AlgebraPtr& a, long long cap) {
    if (a->cardinality() > cap) throw Error("algebra too large to enumerate");
    std::vector<RingElement> out;
    const long p = a->characteristic();
    const int n = a->dim();
    std::vector<long> coords(n, 0);
    while (true) {
        out.push_back(RingElement::from_coords(a, coords));
        int i = 0;
        while (i < n && coords[i] == p - 1) coords[i++] = 0;
        if (i == n) break;
        ++coords[i];
    }
    return out;
}

namespace {

void note(SuiteResult& r, const std::string& what) {
    ++r.failures;
    if (r.failure_notes.size() < 10) r.failure_notes.push_back(what);
}

}  // namespace

SuiteResult verify_witt(uint64_t seed, long cases) {
    SuiteResult res{"witt", 0, 0, {}};
    Rng rng(seed);
    auto A = AlgebraDescriptor::make(FieldDescriptor::prime(5), 2);
    auto F5 = AlgebraDescriptor::make(FieldDescriptor::prime(5), 1);
    for (long it = 0; it < cases; ++it) {
        ++res.cases;
        int n = 1 + static_cast<int>(rng.below(5));
        std::vector<RingElement> xc, yc, zc;
        for (int i = 0; i < n; ++i) {
            xc.push_back(random_element(A, rng));
            yc.push_back(random_element(A, rng));
            zc.push_back(random_element(A, rng));
        }
        WittVector x(A, xc), y(A, yc), z(A, zc);
        bool ok = witt_add(witt_add(x, y), z) == witt_add(x, witt_add(y, z)) &&
                  witt_add(x, y) == witt_add(y, x) &&
                  witt_add(x, witt_neg(x)) == WittVector::zero(A, n) &&
                  witt_add(x, WittVector::zero(A, n)) == x;
        if (!ok) note(res, "witt group axiom failed at case " + std::to_string(it));
        // cocycle identity over F5 for h <= 5
        int h = 2 + static_cast<int>(rng.below(4));
        std::vector<RingElement> uc, vc, wc;
        for (int i = 0; i < h - 1; ++i) {
            uc.push_back(random_element(F5, rng));
            vc.push_back(random_element(F5, rng));
            wc.push_back(random_element(F5, rng));
        }
        WittVector u(F5, uc), v(F5, vc), w(F5, wc);
        auto lhs = cocycle_f(h, v, w) - cocycle_f(h, witt_add(u, v), w) +
                   cocycle_f(h, u, witt_add(v, w)) - cocycle_f(h, u, v);
        if (!lhs.is_zero()) note(res, "cocycle identity failed at case " + std::to_string(it));
        // bridge consistency
        if (witt_to_series(witt_add(x, y)) != witt_to_series(x) * witt_to_series(y))
            note(res, "bridge homomorphism failed at case " + std::to_string(it));
    }
    return res;
}

SuiteResult verify_decompose(uint64_t seed, long cases) {
    SuiteResult res{"decompose", 0, 0, {}};
    Rng rng(seed);
    auto A = AlgebraDescriptor::make(FieldDescriptor::prime(5), 3);
    for (long it = 0; it < cases; ++it) {
        ++res.cases;
        auto u = random_unit_series(A, rng, -3, 3, 3, 10, true);
        auto w = random_unit_series(A, rng, -3, 3, 3, 10, true);
        if (u.valuation() + w.valuation() != (u * w).valuation())
            note(res, "valuation additivity failed at case " + std::to_string(it));
        auto d = cc_decompose(u, 9);
        auto back = cc_recompose(d, 10 - (u.valuation() - u.min_index()));
        if (!LaurentSeries::agree(back, u))
            note(res, "recompose round-trip failed at case " + std::to_string(it));
        auto d2 = cc_decompose(cc_recompose(d), static_cast<long>(d.pos.size()));
        if (!d.equivalent(d2))
            note(res, "decompose round-trip failed at case " + std::to_string(it));
    }
    return res;
}

SuiteResult verify_axioms(uint64_t seed, long cases) {
    SuiteResult res{"axioms", 0, 0, {}};
    Rng rng(seed);
    auto A = AlgebraDescriptor::make(FieldDescriptor::prime(5), 2);
    for (long it = 0; it < cases; ++it) {
        ++res.cases;
        auto f = random_unit_series(A, rng, -2, 2, 2, 16, true);
        auto g = random_unit_series(A, rng, -2, 2, 2, 16, true);
        auto gp = random_unit_series(A, rng, -2, 2, 2, 16, true);
        try {
            auto lhs = cc_symbol(f, g * gp).value();
            auto rhs = (cc_symbol(f, g).value() * cc_symbol(f, gp).value());
            if (lhs != rhs) note(res, "bimultiplicativity failed at case " + std::to_string(it));
            if (!(cc_symbol(f, -f).value().is_one()))
                note(res, "(f,-f)=1 failed at case " + std::to_string(it));
            if (!(cc_symbol(f, g).value() * cc_symbol(g, f).value()).is_one())
                note(res, "antisymmetry failed at case " + std::to_string(it));
            auto onemf = LaurentSeries::constant(RingElement::one(A)) - f;
            if (onemf.is_unit() && !cc_symbol(f, onemf).value().is_one())
                note(res, "Steinberg identity failed at case " + std::to_string(it));
        } catch (const Error& err) {
            note(res, std::string("exception at case ") + std::to_string(it) + ": " + err.what());
        }
    }
    return res;
}

SuiteResult verify_residue_vs_product(uint64_t seed, long cases) {
    SuiteResult res{"residue-vs-product", 0, 0, {}};
    Rng rng(seed);
    auto A = AlgebraDescriptor::make(FieldDescriptor::rationals(), 3);
    for (long it = 0; it < cases; ++it) {
        ++res.cases;
        auto u = random_unit_series(A, rng, -2, 2, 2, 18, true);
        auto w = random_unit_series(A, rng, -2, 2, 2, 18, true);
        try {
            if (cc_symbol(u, w).value() != cc_symbol_residue(u, w).value())
                note(res, "residue/product disagreement at case " + std::to_string(it));
        } catch (const Error& err) {
            note(res, std::string("exception at case ") + std::to_string(it) + ": " + err.what());
        }
    }
    return res;
}

SuiteResult verify_reciprocity(uint64_t seed, long cases) {
    SuiteResult res{"reciprocity", 0, 0, {}};
    Rng rng(seed);
    const long qs[] = {3, 5, 7, 9};
    for (long it = 0; it < cases; ++it) {
        ++res.cases;
        long q = qs[rng.below(4)];
        int e = 1 + static_cast<int>(rng.below(3));
        FieldPtr k = q == 9 ? FieldDescriptor::extension(3, 2) : FieldDescriptor::prime(q);
        auto B = AlgebraDescriptor::make(k, e);
        auto f = random_rational_function(B, rng, 4);
        auto g = random_rational_function(B, rng, 4);
        try {
            auto r = reciprocity_product(f, g);
            if (!r.product.value().is_one())
                note(res, "reciprocity product != 1 at case " + std::to_string(it));
        } catch (const Error& err) {
            note(res, std::string("exception at case ") + std::to_string(it) + ": " + err.what());
        }
    }
    return res;
}

SuiteResult run_suite(const std::string& name, uint64_t seed, long cases) {
    if (name == "witt") return verify_witt(seed, cases);
    if (name == "decompose") return verify_decompose(seed, cases);
    if (name == "axioms") return verify_axioms(seed, cases);
    if (name == "residue-vs-product") return verify_residue_vs_product(seed, cases);
    if (name == "reciprocity") return verify_reciprocity(seed, cases);
    throw BadIndex("unknown suite: " + name);
}

std::vector<std::string> suite_names() {
    return {"witt", "decompose", "axioms", "residue-vs-product", "reciprocity"};
}

}  // namespace ccsym
