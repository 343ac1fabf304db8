#include <doctest.h>

#include <cstdint>

#include "ccsym/algebra.hpp"
#include "ccsym/poly.hpp"

using namespace ccsym;

namespace {

struct TestRng {
    uint64_t s;
    uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long below(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }
};

Polynomial random_poly(const AlgebraPtr& a, int maxdeg, TestRng& rng) {
    std::vector<RingElement> c;
    int d = static_cast<int>(rng.below(maxdeg + 1));
    for (int i = 0; i <= d; ++i) {
        std::vector<long> coords(a->dim());
        for (auto& v : coords) v = rng.below(a->characteristic());
        c.push_back(RingElement::from_coords(a, std::move(coords)));
    }
    return Polynomial(a, std::move(c));
}

Polynomial expand(const std::vector<std::pair<Polynomial, int>>& factors, const RingElement& lead) {
    Polynomial r = Polynomial::constant(lead);
    for (const auto& [f, m] : factors) r = r * f.pow(m);
    return r;
}

}  // namespace

TEST_CASE("divrem and gcd") {
    auto F5 = AlgebraDescriptor::make(FieldDescriptor::prime(5), 1);
    auto t = Polynomial::variable(F5);
    auto one = Polynomial::one(F5);
    auto f = (t + one) * (t + one) * (t - one);
    Polynomial q(F5), r(F5);
    Polynomial::divrem(f, t + one, q, r);
    CHECK(r.is_zero());
    CHECK(q == (t + one) * (t - one));
    CHECK(gcd(f, (t + one) * t) == t + one);
}

TEST_CASE("taylor shift") {
    auto F5 = AlgebraDescriptor::make(FieldDescriptor::prime(5), 2);
    auto t = Polynomial::variable(F5);
    auto e = RingElement::epsilon(F5);
    auto f = t * t * t + Polynomial::constant(e) * t + Polynomial::one(F5);
    auto alpha = RingElement::from_integer(F5, 2) + e;
    auto co = f.taylor_at(alpha);
    // compare against direct evaluation of f(alpha + u) for a few u
    for (long uv = 0; uv < 5; ++uv) {
        auto u = RingElement::from_integer(F5, uv);
        RingElement direct = f.eval(alpha + u);
        RingElement viaco = RingElement::zero(F5);
        RingElement up = RingElement::one(F5);
        for (const auto& c : co) {
            viaco += c * up;
            up *= u;
        }
        CHECK(direct == viaco);
    }
}

TEST_CASE("factor reference cases") {
    auto F3 = AlgebraDescriptor::make(FieldDescriptor::prime(3), 1);
    auto t3 = Polynomial::variable(F3);
    // t^2+1 has no root in F_3 (squares are 0, 1, 1)
    auto f = t3 * t3 + Polynomial::one(F3);
    auto fs = factor(f);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == f);
    CHECK(fs[0].second == 1);

    auto F5 = AlgebraDescriptor::make(FieldDescriptor::prime(5), 1);
    auto t5 = Polynomial::variable(F5);
    auto g = t5 * t5 - Polynomial::one(F5);
    auto gs = factor(g);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].first == t5 + Polynomial::one(F5));
    CHECK(gs[1].first == t5 + Polynomial::constant(RingElement::from_integer(F5, 4)));

    auto ts = factor(t5);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].first == t5);

    CHECK_THROWS_AS(factor(Polynomial::zero(F5)), ZeroPolynomial);
}

TEST_CASE("factor round-trip randomized over F2, F3, F5") {
    for (long p : {2L, 3L, 5L}) {
        auto A = AlgebraDescriptor::make(FieldDescriptor::prime(p), 1);
        TestRng rng{0x1234u + static_cast<uint64_t>(p)};
        int done = 0;
        while (done < 60) {
            auto f = random_poly(A, 8, rng);
            if (f.is_zero() || f.degree() < 1) continue;
            ++done;
            auto fs = factor(f);
            CHECK(expand(fs, f.leading()) == f);
            for (const auto& [g, m] : fs) {
                CHECK(g.is_monic());
                CHECK(is_irreducible(g));
                CHECK(m >= 1);
            }
            // deterministic ordering
            for (size_t i = 1; i < fs.size(); ++i)
                CHECK(Polynomial::compare(fs[i - 1].first, fs[i].first) < 0);
        }
    }
}

TEST_CASE("factor over an extension field") {
    auto F9 = AlgebraDescriptor::make(FieldDescriptor::extension(3, 2), 1);
    auto t = Polynomial::variable(F9);
    auto x = RingElement::field_generator(F9);
    // t^2 + 1 splits over F9 since x^2 = -1
    auto f = t * t + Polynomial::one(F9);
    auto fs = factor(f);
    REQUIRE(fs.size() == 2);
    CHECK(expand(fs, RingElement::one(F9)) == f);
    CHECK(fs[0].first.eval(-x) * fs[1].first.eval(-x) == f.eval(-x));
}

TEST_CASE("repeated factors") {
    auto F2 = AlgebraDescriptor::make(FieldDescriptor::prime(2), 1);
    auto t = Polynomial::variable(F2);
    auto one = Polynomial::one(F2);
    auto f = (t + one).pow(4) * t.pow(2) * (t * t + t + one);
    auto fs = factor(f);
    REQUIRE(fs.size() == 3);
    CHECK(expand(fs, RingElement::one(F2)) == f);
}

TEST_CASE("relative extension validation") {
    auto F3 = FieldDescriptor::prime(3);
    auto fa = AlgebraDescriptor::make(F3, 1);
    auto t = Polynomial::variable(fa);
    CHECK_THROWS(relative_extension(F3, t * t - Polynomial::one(fa)));  // reducible
    auto F9 = relative_extension(F3, t * t + Polynomial::one(fa));
    CHECK(F9->degree() == 2);
    CHECK(F9->relative_degree() == 2);
    CHECK(F9->cardinality() == 9);
}
