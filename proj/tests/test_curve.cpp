#include <doctest.h>

#include "ccsym/curve.hpp"
#include "ccsym/verify.hpp"

using namespace ccsym;

namespace {

AlgebraPtr B(long q, int e) {
    FieldPtr k = q == 9 ? FieldDescriptor::extension(3, 2) : FieldDescriptor::prime(q);
    return AlgebraDescriptor::make(k, e);
}

// first monic irreducible of degree d over the field part, mapped into b
Polynomial irreducible_over(const AlgebraPtr& b, int d) {
    auto fa = AlgebraDescriptor::make(b->field(), 1);
    auto elems = all_elements(fa);
    std::vector<size_t> idx(d, 0);
    while (true) {
        std::vector<RingElement> c;
        for (int i = 0; i < d; ++i) c.push_back(elems[idx[i]]);
        c.push_back(RingElement::one(fa));
        Polynomial cand(fa, std::move(c));
        if (is_irreducible(cand)) return cand.map_into(b);
        int i = 0;
        while (i < d && idx[i] == elems.size() - 1) idx[i++] = 0;
        REQUIRE(i < d);
        ++idx[i];
    }
}

}  // namespace

TEST_CASE("support enumeration") {
    auto a = B(5, 1);
    auto t = Polynomial::variable(a);
    auto one = Polynomial::one(a);
    RationalFunction f = RationalFunction::from_poly(t);
    RationalFunction g = RationalFunction::from_poly(one - t);
    auto pts = support(f, g);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].to_string() == "(t)");
    CHECK(pts[1].to_string() == "(4 + t)");  // t - 1 over F5
    CHECK(pts[2].is_infinity());

    RationalFunction c1 = RationalFunction::from_poly(one);
    auto pc = support(c1, c1);
    REQUIRE(pc.size() == 1);
    CHECK(pc[0].is_infinity());

    // f = 1 + eps/t over F3[e]/(e^2): support {(t), inf}
    auto b3 = B(3, 2);
    auto t3 = Polynomial::variable(b3);
    auto eps = Polynomial::constant(RingElement::epsilon(b3));
    RationalFunction h(t3 + eps, t3);
    auto ph = support(h, RationalFunction::from_poly(Polynomial::one(b3)));
    REQUIRE(ph.size() == 2);
    CHECK(ph[0].to_string() == "(t)");
    CHECK(ph[1].is_infinity());

    CHECK_THROWS_AS(support(RationalFunction(eps, Polynomial::one(b3)), h), NotAUnit);
}

TEST_CASE("local expansion") {
    auto a = B(5, 1);
    auto t = Polynomial::variable(a);
    auto f = RationalFunction::from_poly(t);
    auto pt = ClosedPoint::finite(t);
    auto u = local_expand(f, pt, 3);
    CHECK(u.valuation() == 1);
    CHECK(u.coeff(1).is_one());
    CHECK(u.coeff(2).is_zero());

    // f = t + eps at (t) over F3[e]/(e^2) -> z + eps
    auto b3 = B(3, 2);
    auto t3 = Polynomial::variable(b3);
    auto f3 = RationalFunction::from_poly(t3 + Polynomial::constant(RingElement::epsilon(b3)));
    auto u3 = local_expand(f3, ClosedPoint::finite(Polynomial::variable(B(3, 1))), 4);
    CHECK(u3.coeff(0) == RingElement::epsilon(b3));
    CHECK(u3.coeff(1).is_one());

    // f = 1 - t at infinity -> -z^-1 (1 - z)
    auto g = RationalFunction::from_poly(Polynomial::one(a) - t);
    auto w = local_expand(g, ClosedPoint::at_infinity(), 4);
    CHECK(w.valuation() == -1);
    CHECK(w.coeff(-1) == -RingElement::one(a));
    CHECK(w.coeff(0).is_one());
}

TEST_CASE("local expansion is multiplicative (randomized)") {
    auto b = B(3, 2);
    Rng rng(3);
    for (int it = 0; it < 40; ++it) {
        auto f = random_rational_function(b, rng, 3);
        auto g = random_rational_function(b, rng, 3);
        auto pts = support(f, g);
        const auto& p = pts[rng.below(static_cast<long>(pts.size()))];
        auto uf = local_expand(f, p, 6);
        auto ug = local_expand(g, p, 6);
        auto ufg = local_expand(f * g, p, 6);
        CHECK(LaurentSeries::agree(uf * ug, ufg));
    }
}

TEST_CASE("local symbols: worked examples") {
    auto a = B(5, 1);
    auto t = Polynomial::variable(a);
    auto f = RationalFunction::from_poly(t);
    auto pt = ClosedPoint::finite(t);
    CHECK(local_symbol(f, f, pt).value() == RingElement::from_integer(a, 4));

    // f = t + eps, g = 1 - t at (t) over F3[e]/(e^2) -> 1 - eps
    auto b3 = B(3, 2);
    auto t3 = Polynomial::variable(b3);
    auto eps = RingElement::epsilon(b3);
    auto f3 = RationalFunction::from_poly(t3 + Polynomial::constant(eps));
    auto g3 = RationalFunction::from_poly(Polynomial::one(b3) - t3);
    auto p0 = ClosedPoint::finite(Polynomial::variable(B(3, 1)));
    CHECK(local_symbol(f3, g3, p0).value() == RingElement::one(b3) - eps);

    // f = t^2+1, g = t+1 at (t^2+1) over F3 -> 2
    auto a3 = B(3, 1);
    auto tt = Polynomial::variable(a3);
    auto fq = RationalFunction::from_poly(tt * tt + Polynomial::one(a3));
    auto gq = RationalFunction::from_poly(tt + Polynomial::one(a3));
    auto pq = ClosedPoint::finite(tt * tt + Polynomial::one(a3));
    CHECK(pq.degree() == 2);
    CHECK(local_symbol(fq, gq, pq).value() == RingElement::from_integer(a3, 2));
}

TEST_CASE("golden worked example: f = t + eps, g = 1 - t over F3[e]/(e^2)") {
    auto b3 = B(3, 2);
    auto t = Polynomial::variable(b3);
    auto eps = RingElement::epsilon(b3);
    auto one = RingElement::one(b3);
    auto f = RationalFunction::from_poly(t + Polynomial::constant(eps));
    auto g = RationalFunction::from_poly(Polynomial::one(b3) - t);
    auto r = reciprocity_product(f, g);
    REQUIRE(r.locals.size() == 3);
    CHECK(r.locals[0].point.to_string() == "(t)");
    CHECK(r.locals[0].value.value() == one - eps);
    CHECK(r.locals[1].point.to_string() == "(2 + t)");  // t - 1
    CHECK(r.locals[1].value.value() == one + eps);
    CHECK(r.locals[2].point.is_infinity());
    CHECK(r.locals[2].value.value().is_one());
    CHECK(r.product.value().is_one());
}

TEST_CASE("reciprocity: simple tame cases over F5") {
    auto a = B(5, 1);
    auto t = Polynomial::variable(a);
    auto f = RationalFunction::from_poly(t);
    auto r = reciprocity_product(f, f);
    REQUIRE(r.locals.size() == 2);
    CHECK(r.locals[0].value.value() == RingElement::from_integer(a, 4));
    CHECK(r.locals[1].value.value() == RingElement::from_integer(a, 4));
    CHECK(r.product.value().is_one());

    auto g = RationalFunction::from_poly(Polynomial::one(a) - t);
    auto r2 = reciprocity_product(f, g);
    REQUIRE(r2.locals.size() == 3);
    for (const auto& lv : r2.locals) CHECK(lv.value.value().is_one());
    CHECK(r2.product.value().is_one());
}

TEST_CASE("reciprocity randomized incl. higher-degree points") {
    Rng rng(2026);
    for (long q : {3L, 5L, 9L}) {
        for (int e = 1; e <= 3; e += 2) {
            auto b = B(q, e);
            for (int it = 0; it < 12; ++it) {
                auto f = random_rational_function(b, rng, 4);
                auto g = random_rational_function(b, rng, 4);
                auto r = reciprocity_product(f, g);
                CHECK(r.product.value().is_one());
            }
            // force an irreducible quadratic into the support
            Polynomial quad = irreducible_over(b, 2);
            for (int it = 0; it < 6; ++it) {
                auto f = RationalFunction(quad, Polynomial::one(b)) *
                         random_rational_function(b, rng, 2);
                auto g = random_rational_function(b, rng, 3);
                auto r = reciprocity_product(f, g);
                bool has_deg2 = false;
                for (const auto& lv : r.locals) has_deg2 |= lv.point.degree() >= 2;
                CHECK(has_deg2);
                CHECK(r.product.value().is_one());
            }
        }
    }
}

TEST_CASE("hilbert reciprocity") {
    auto a = B(5, 1);
    auto t = Polynomial::variable(a);
    auto f = RationalFunction::from_poly(t);
    auto r = hilbert_reciprocity(f, f, 4);
    REQUIRE(r.locals.size() == 2);
    CHECK(r.locals[0].value.value() == RingElement::from_integer(a, 4));
    CHECK(r.locals[1].value.value() == RingElement::from_integer(a, 4));
    CHECK(r.product.value().is_one());

    auto r2 = hilbert_reciprocity(f, f, 2);
    for (const auto& lv : r2.locals) CHECK(lv.value.value().is_one());
    CHECK(r2.product.value().is_one());

    // trivial first argument
    auto one = RationalFunction::from_poly(Polynomial::one(a));
    auto g = RationalFunction::from_poly(t * t + Polynomial::one(a));
    auto r3 = hilbert_reciprocity(one, g, 2);
    for (const auto& lv : r3.locals) CHECK(lv.value.value().is_one());

    CHECK_THROWS_AS(hilbert_reciprocity(f, f, 3), NoRootsOfUnity);

    Rng rng(4242);
    for (long q : {3L, 5L, 7L, 9L}) {
        for (long m = 1; m <= q - 1; ++m) {
            if ((q - 1) % m != 0) continue;
            auto b = B(q, 2);
            auto f2 = random_rational_function(b, rng, 3);
            auto g2 = random_rational_function(b, rng, 3);
            auto rr = hilbert_reciprocity(f2, g2, m);
            CHECK(rr.product.value().is_one());
            for (const auto& lv : rr.locals) {
                CHECK(lv.value.value().pow(m).is_one());
                CHECK(lv.value.mu_order().has_value());
            }
        }
    }
}

TEST_CASE("locality: good-reduction points give trivial symbols") {
    auto b = B(5, 2);
    Rng rng(31);
    for (int it = 0; it < 30; ++it) {
        auto f = random_rational_function(b, rng, 3);
        auto g = random_rational_function(b, rng, 3);
        auto pts = support(f, g);
        for (const auto& p : pts) {
            auto u = local_expand(f, p, 4);
            auto w = local_expand(g, p, 4);
            if (u.valuation() == 0 && w.valuation() == 0 && u.min_index() == 0 &&
                w.min_index() == 0) {
                CHECK(local_symbol(f, g, p).value().is_one());
            }
        }
    }
}

TEST_CASE("symbol values independent of extra precision") {
    auto b3 = B(3, 2);
    Rng rng(55);
    for (int it = 0; it < 25; ++it) {
        auto f = random_rational_function(b3, rng, 3);
        auto g = random_rational_function(b3, rng, 3);
        for (const auto& p : support(f, g)) {
            auto up = local_expand(f, p, 4);
            auto wp = local_expand(g, p, 4);
            long P = required_precision(up, wp);
            auto u1 = local_expand(f, p, P);
            auto w1 = local_expand(g, p, P);
            auto u2 = local_expand(f, p, 2 * P);
            auto w2 = local_expand(g, p, 2 * P);
            CHECK(cc_symbol(u1, w1).value() == cc_symbol(u2, w2).value());
        }
    }
}
