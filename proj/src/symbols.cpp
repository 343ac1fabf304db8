#include "ccsym/symbols.hpp"

#include <algorithm>
#include <numeric>

namespace ccsym {

namespace {

RingElement dp_value(const AlgebraPtr& alg, const std::vector<RingElement>& pos,
                     const std::map<long, RingElement>& neg) {
    RingElement acc = RingElement::one(alg);
    for (const auto& [j, b] : neg) {
        if (b.is_zero()) continue;
        if (b.is_unit()) throw NotNilpotent("negative-part coefficient is not nilpotent");
        const int nil = b.nilindex();
        for (long i = 1; i <= static_cast<long>(pos.size()); ++i) {
            if (pos[i - 1].is_zero()) continue;
            long g = std::gcd(i, j);
            if (i / g >= nil) continue;  // b^{i/g} = 0
            RingElement term =
                RingElement::one(alg) - pos[i - 1].pow(j / g) * b.pow(i / g);
            acc *= term.pow(g);
        }
    }
    return acc;
}

std::map<long, RingElement> neg_list_to_map(const std::vector<RingElement>& neg) {
    std::map<long, RingElement> m;
    for (size_t j = 0; j < neg.size(); ++j)
        if (!neg[j].is_zero()) m.emplace(static_cast<long>(j + 1), neg[j]);
    return m;
}

// positive-coefficient count needed against a negative part: the pairing term
// (1 - a_i^{j/g} b^{i/g}) can differ from 1 only while b^{i/g} != 0
long needed_pos(const std::map<long, RingElement>& neg) {
    long n = 0;
    for (const auto& [j, b] : neg) {
        if (b.is_zero()) continue;
        n = std::max(n, j * (b.nilindex() - 1));
    }
    return n;
}

struct SymbolParts {
    CCDecomposition du, dw;
    long n, m;
};

// decompose both sides with positive windows sized by the other's negative part
SymbolParts decompose_pair(const LaurentSeries& u, const LaurentSeries& w) {
    if (!u.algebra()->same_as(*w.algebra())) throw AlgebraMismatch("symbol operands mismatch");
    SymbolParts p;
    p.n = u.valuation();
    p.m = w.valuation();
    const long P = required_precision(u, w);
    if (!u.is_exact() && u.first_unknown() - p.n < P)
        throw PrecisionTooLow("first operand is below the required precision");
    if (!w.is_exact() && w.first_unknown() - p.m < P)
        throw PrecisionTooLow("second operand is below the required precision");
    CCDecomposition nu = cc_decompose(u, 0), nw = cc_decompose(w, 0);
    long lu = needed_pos(nw.neg), lw = needed_pos(nu.neg);
    p.du = cc_decompose(u, u.is_exact() ? lu : std::min(lu, u.first_unknown() - p.n - 1));
    p.dw = cc_decompose(w, w.is_exact() ? lw : std::min(lw, w.first_unknown() - p.m - 1));
    if (static_cast<long>(p.du.pos.size()) < lu || static_cast<long>(p.dw.pos.size()) < lw)
        throw PrecisionTooLow("positive part window too small for the pairing");
    return p;
}

RingElement signed_unit(const AlgebraPtr& a, long exponent) {
    return exponent % 2 == 0 ? RingElement::one(a) : -RingElement::one(a);
}

// the unsigned fraction lambda^m DP(pos_u, neg_w) / (mu^n DP(pos_w, neg_u))
RingElement symbol_fraction(const SymbolParts& p) {
    const AlgebraPtr& alg = p.du.lambda.algebra();
    RingElement num = p.du.lambda.pow(p.m) * dp_value(alg, p.du.pos, p.dw.neg);
    RingElement den = p.dw.lambda.pow(p.n) * dp_value(alg, p.dw.pos, p.du.neg);
    return num * den.inverse();
}

int check_deg(const LaurentSeries& u, int deg_p) {
    int actual = u.algebra()->extension_degree();
    if (deg_p != actual)
        throw NoExtension("deg_p = " + std::to_string(deg_p) +
                          " does not match the declared extension of degree " +
                          std::to_string(actual));
    return actual;
}

}  // namespace

SymbolValue::SymbolValue(RingElement v, std::optional<long> mu_order)
    : v_(std::move(v)), mu_(mu_order) {
    if (!v_.is_unit()) throw NotAUnit("symbol values are units");
    if (mu_ && !v_.pow(*mu_).is_one())
        throw Error("mu_m tag violated: value^m != 1");
}

SymbolValue duality_pairing(const std::vector<RingElement>& pos,
                            const std::vector<RingElement>& neg) {
    if (pos.empty() && neg.empty()) throw Error("duality pairing of empty data");
    AlgebraPtr alg = pos.empty() ? neg[0].algebra() : pos[0].algebra();
    for (const auto& b : neg)
        if (!b.is_zero() && b.is_unit())
            throw NotNilpotent("negative-part coefficient is not nilpotent");
    auto m = neg_list_to_map(neg);
    return SymbolValue(dp_value(alg, pos, m));
}

SymbolValue cc_symbol(const LaurentSeries& u, const LaurentSeries& w) {
    SymbolParts p = decompose_pair(u, w);
    RingElement val = symbol_fraction(p) * signed_unit(u.algebra(), p.n * p.m);
    return SymbolValue(std::move(val));
}

SymbolValue cc_symbol_residue(const LaurentSeries& u, const LaurentSeries& w) {
    if (u.algebra()->characteristic() != 0)
        throw CharNotZero("the residue formula needs characteristic 0");
    if (!u.algebra()->same_as(*w.algebra())) throw AlgebraMismatch("symbol operands mismatch");
    const AlgebraPtr& alg = u.algebra();
    long n = u.valuation(), m = w.valuation();
    // lambda, mu and the negative supports come from the decomposition; the
    // delta data is read off z^s df/f independently of the product formula
    CCDecomposition du = cc_decompose(u, 0), dw = cc_decompose(w, 0);
    long iu = needed_pos(du.neg);  // delta_i(u) vanishes beyond this
    long iw = needed_pos(dw.neg);
    RingElement num_arg = RingElement::zero(alg), den_arg = RingElement::zero(alg);
    for (long i = 1; i <= iw; ++i) {
        RingElement term = delta(-i, u) * delta(i, w);
        if (term.is_zero()) continue;
        num_arg += term * RingElement::from_rational(alg, 1, i);
    }
    for (long i = 1; i <= iu; ++i) {
        RingElement term = delta(i, u) * delta(-i, w);
        if (term.is_zero()) continue;
        den_arg += term * RingElement::from_rational(alg, 1, i);
    }
    RingElement num = du.lambda.pow(m) * exp_nilpotent(num_arg);
    RingElement den = dw.lambda.pow(n) * exp_nilpotent(den_arg);
    return SymbolValue(num * den.inverse() * signed_unit(alg, n * m));
}

SymbolValue tame_symbol(const LaurentSeries& f, const LaurentSeries& g) {
    if (!f.algebra()->is_field()) throw NotAField("tame symbol needs field coefficients");
    if (!f.algebra()->same_as(*g.algebra())) throw AlgebraMismatch("symbol operands mismatch");
    long vf = f.valuation(), vg = g.valuation();
    RingElement lf = f.coeff(vf), lg = g.coeff(vg);
    RingElement val = lf.pow(vg) * lg.pow(-vf) * signed_unit(f.algebra(), vf * vg);
    return SymbolValue(std::move(val));
}

SymbolValue norm_symbol(const LaurentSeries& u, const LaurentSeries& w, int deg_p) {
    check_deg(u, deg_p);
    SymbolParts p = decompose_pair(u, w);
    RingElement frac = symbol_fraction(p);
    if (deg_p == 1) return SymbolValue(frac * signed_unit(u.algebra(), p.n * p.m));
    RingElement nf = norm(frac);
    return SymbolValue(nf * signed_unit(nf.algebra(), p.n * p.m * deg_p));
}

SymbolValue phi_symbol(const LaurentSeries& u, const LaurentSeries& w, const Character& phi,
                       int deg_p) {
    SymbolValue base = norm_symbol(u, w, deg_p);
    return SymbolValue(phi.apply(base.value()));
}

SymbolValue hilbert_symbol(const LaurentSeries& u, const LaurentSeries& w, long m) {
    const AlgebraPtr& a = u.algebra();
    if (!a->is_finite()) throw NotFinite("the norm residue symbol needs a finite algebra");
    long long q = a->base_field()->cardinality();
    if (m < 1 || (q - 1) % m != 0)
        throw NoRootsOfUnity("mu_" + std::to_string(m) + " is not contained in F_" +
                             std::to_string(q));
    auto B = AlgebraDescriptor::make(a->base_field(), a->nilpotency_index());
    long long alpha = unit_group_order(B);
    Character phi{static_cast<long>(alpha / m)};
    SymbolValue v = phi_symbol(u, w, phi, a->extension_degree());
    return SymbolValue(v.value(), m);
}

// ------------------------------------------------------------------ Heisenberg

namespace {

// chi((n, pos), (mu, neg)) = mu^n / DP(pos, neg)
RingElement chi(long n_f, const std::vector<RingElement>& pos_f, const RingElement& mu_g,
                const std::map<long, RingElement>& neg_g) {
    RingElement v = mu_g.pow(n_f);
    if (!pos_f.empty() && !neg_g.empty())
        v = v * dp_value(mu_g.algebra(), pos_f, neg_g).inverse();
    return v;
}

LaurentSeries f_series(const HeisenbergElement& x) {
    CCDecomposition d;
    d.n = x.n;
    d.lambda = RingElement::one(x.alpha.algebra());
    d.pos = x.pos;
    return cc_recompose(d, static_cast<long>(x.pos.size()) + 1);
}

LaurentSeries g_series(const HeisenbergElement& x) {
    CCDecomposition d;
    d.n = 0;
    d.lambda = x.mu;
    d.neg = x.neg;
    return cc_recompose(d);  // finite, exact
}

}  // namespace

std::string HeisenbergElement::to_string() const {
    CCDecomposition f;
    f.n = n;
    f.lambda = RingElement::one(alpha.algebra());
    f.pos = pos;
    CCDecomposition g;
    g.lambda = mu;
    g.neg = neg;
    return "(" + alpha.to_string() + "; " + f.to_string() + "; " + g.to_string() + ")";
}

HeisenbergElement heisenberg_from_series(const LaurentSeries& u, long pos_limit) {
    CCDecomposition d = cc_decompose(u, pos_limit);
    HeisenbergElement x;
    x.alpha = RingElement::one(u.algebra());
    x.n = d.n;
    x.pos = d.pos;
    x.mu = d.lambda;
    x.neg = d.neg;
    return x;
}

HeisenbergElement heisenberg_identity(const AlgebraPtr& a, long pos_len) {
    HeisenbergElement x;
    x.alpha = RingElement::one(a);
    x.n = 0;
    x.pos.assign(pos_len, RingElement::zero(a));
    x.mu = RingElement::one(a);
    return x;
}

HeisenbergElement heisenberg_mul(const HeisenbergElement& x, const HeisenbergElement& y) {
    if (!x.alpha.algebra()->same_as(*y.alpha.algebra()))
        throw AlgebraMismatch("heisenberg operands mismatch");
    long L = std::min(x.pos.size(), y.pos.size());
    HeisenbergElement r;
    r.alpha = x.alpha * y.alpha * chi(y.n, y.pos, x.mu, x.neg);
    LaurentSeries fprod = f_series(x) * f_series(y);
    CCDecomposition df = cc_decompose(fprod, std::min(L, fprod.first_unknown() - (x.n + y.n) - 1));
    r.n = df.n;
    r.pos = df.pos;
    LaurentSeries gprod = g_series(x) * g_series(y);
    CCDecomposition dg = cc_decompose(gprod, 0);
    r.mu = dg.lambda;
    r.neg = dg.neg;
    return r;
}

HeisenbergElement heisenberg_inverse(const HeisenbergElement& x) {
    HeisenbergElement r;
    long L = static_cast<long>(x.pos.size());
    LaurentSeries finv = f_series(x).inverse(-x.n + L + 1);
    CCDecomposition df = cc_decompose(finv, L);
    r.n = df.n;
    r.pos = df.pos;
    LaurentSeries ginv = g_series(x).inverse();  // exact: monomial residue
    CCDecomposition dg = cc_decompose(ginv, 0);
    r.mu = dg.lambda;
    r.neg = dg.neg;
    // x * x^{-1} = (alpha * iota * chi(f^{-1}, g), 1, 1) = identity
    r.alpha = (x.alpha * chi(r.n, r.pos, x.mu, x.neg)).inverse();
    return r;
}

SymbolValue heisenberg_commutator(const HeisenbergElement& x, const HeisenbergElement& y) {
    HeisenbergElement c =
        heisenberg_mul(heisenberg_mul(heisenberg_mul(x, y), heisenberg_inverse(x)),
                       heisenberg_inverse(y));
    return SymbolValue(c.alpha);
}

}  // namespace ccsym
