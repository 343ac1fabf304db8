#include "ccsym/curve.hpp"

#include <algorithm>

namespace ccsym {

// ------------------------------------------------------------------ ClosedPoint

ClosedPoint ClosedPoint::at_infinity() { return ClosedPoint(); }

ClosedPoint ClosedPoint::finite(Polynomial pi) {
    if (!pi.algebra()->is_field() || pi.algebra()->characteristic() == 0)
        throw NotAField("closed points live over a finite base field");
    if (!pi.is_monic()) throw Error("closed-point polynomial must be monic");
    if (!is_irreducible(pi)) throw Error("closed-point polynomial must be irreducible");
    ClosedPoint p{std::move(pi)};
    return p;
}

ClosedPoint::ClosedPoint(Polynomial pi) : inf_(false) { pi_.push_back(std::move(pi)); }

int ClosedPoint::degree() const { return inf_ ? 1 : static_cast<int>(pi_[0].degree()); }

const Polynomial& ClosedPoint::pi() const {
    if (inf_) throw BadIndex("the point at infinity has no finite polynomial");
    return pi_[0];
}

int ClosedPoint::compare(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.inf_ && b.inf_) return 0;
    if (a.inf_) return 1;  // infinity sorts last
    if (b.inf_) return -1;
    return Polynomial::compare(a.pi_[0], b.pi_[0]);
}

std::string ClosedPoint::to_string() const {
    return inf_ ? "inf" : "(" + pi_[0].to_string() + ")";
}

// ------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (!num_.algebra()->same_as(*den_.algebra()))
        throw AlgebraMismatch("numerator/denominator algebra mismatch");
    if (num_.algebra()->characteristic() == 0)
        throw Error("rational functions live over finite base fields");
    if (den_.residue_poly().is_zero())
        throw NotAUnit("denominator reduces to zero modulo the nilradical");
}

RationalFunction RationalFunction::from_poly(Polynomial num) {
    Polynomial one = Polynomial::one(num.algebra());
    return RationalFunction(std::move(num), std::move(one));
}

bool RationalFunction::is_unit() const { return !num_.residue_poly().is_zero(); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::inverse() const {
    if (!is_unit()) throw NotAUnit("inverse of a non-unit rational function");
    return RationalFunction(den_, num_);
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ----------------------------------------------------------------------- support

namespace {

void collect_factors(const Polynomial& poly, std::vector<ClosedPoint>& out) {
    for (const auto& coord : poly.coordinate_polys()) {
        if (coord.is_zero() || coord.degree() < 1) continue;
        for (const auto& [irr, mult] : factor(coord)) {
            (void)mult;
            ClosedPoint p = ClosedPoint::finite(irr);
            bool seen = false;
            for (const auto& q : out)
                if (q == p) {
                    seen = true;
                    break;
                }
            if (!seen) out.push_back(p);
        }
    }
}

// order of pi in poly (number of times pi divides); -1 for the zero polynomial
long ord_at(const Polynomial& poly, const Polynomial& pi) {
    if (poly.is_zero()) return -1;
    long ord = 0;
    Polynomial cur = poly;
    while (true) {
        Polynomial q(cur.algebra()), r(cur.algebra());
        Polynomial::divrem(cur, pi, q, r);
        if (!r.is_zero()) return ord;
        cur = std::move(q);
        ++ord;
    }
}

struct OrdData {
    long v_res;  // order of the residue polynomial
    long gap;    // v_res minus the lowest coordinate order
};

OrdData ord_data(const Polynomial& poly, const ClosedPoint& p) {
    auto coords = poly.coordinate_polys();
    OrdData d{0, 0};
    long m_min = LaurentSeries::kExact;
    for (size_t s = 0; s < coords.size(); ++s) {
        if (coords[s].is_zero()) continue;
        long o = p.is_infinity() ? -coords[s].degree() : ord_at(coords[s], p.pi());
        if (s == 0) d.v_res = o;
        m_min = std::min(m_min, o);
    }
    d.gap = d.v_res - m_min;
    return d;
}

}  // namespace

std::vector<ClosedPoint> support(const RationalFunction& f, const RationalFunction& g) {
    if (!f.is_unit() || !g.is_unit()) throw NotAUnit("support of a non-unit");
    std::vector<ClosedPoint> pts;
    collect_factors(f.num(), pts);
    collect_factors(f.den(), pts);
    collect_factors(g.num(), pts);
    collect_factors(g.den(), pts);
    std::sort(pts.begin(), pts.end(),
              [](const ClosedPoint& a, const ClosedPoint& b) { return ClosedPoint::compare(a, b) < 0; });
    pts.push_back(ClosedPoint::at_infinity());
    return pts;
}

AlgebraPtr local_algebra(const AlgebraPtr& B, const ClosedPoint& p) {
    if (p.is_infinity() || p.degree() == 1) return B;
    FieldPtr kp = relative_extension_trusted(B->field(), p.pi());
    return AlgebraDescriptor::make(kp, B->nilpotency_index());
}

namespace {

LaurentSeries expand_poly(const Polynomial& poly, const ClosedPoint& p, const AlgebraPtr& Ap) {
    std::map<long, RingElement> c;
    if (p.is_infinity()) {
        for (long i = 0; i <= poly.degree(); ++i) {
            RingElement v = poly.coeff(i);
            if (!v.is_zero()) c.emplace(-i, v);
        }
        return LaurentSeries(Ap, std::move(c));
    }
    RingElement alpha = RingElement::zero(Ap);
    if (p.degree() == 1) {
        // pi = t - a: the class of t is a itself, lifted into B
        RingElement a_field = -p.pi().coeff(0);
        std::vector<long> bc(Ap->dim(), 0);
        std::copy(a_field.coords().begin(), a_field.coords().end(), bc.begin());
        alpha = RingElement::from_coords(Ap, std::move(bc));
    } else {
        alpha = RingElement::point_generator(Ap);
    }
    Polynomial local = poly.algebra()->same_as(*Ap) ? poly : poly.map_into(Ap);
    auto taylor = local.taylor_at(alpha);
    for (size_t r = 0; r < taylor.size(); ++r)
        if (!taylor[r].is_zero()) c.emplace(static_cast<long>(r), taylor[r]);
    return LaurentSeries(Ap, std::move(c));
}

// width (counted from the valuation) that covers the pairing truncation and
// the window erosion caused by nilpotent tails, from polynomial order data;
// mirrors required_precision with the order bounds in place of actual spans
long expansion_width(const RationalFunction& f, const RationalFunction& g, const ClosedPoint& p) {
    const int e = f.algebra()->nilpotency_index();
    OrdData nf = ord_data(f.num(), p), df = ord_data(f.den(), p);
    OrdData ng = ord_data(g.num(), p), dg = ord_data(g.den(), p);
    long n = nf.v_res - df.v_res, m = ng.v_res - dg.v_res;
    long l = nf.gap + (e - 1) * df.gap;
    long h = ng.gap + (e - 1) * dg.gap;
    long tl = l * (l + 1) / 2, th = h * (h + 1) / 2;
    return (e - 1) * (tl + th) + l + h + std::labs(n) + std::labs(m) + 3;
}

}  // namespace

LaurentSeries local_expand(const RationalFunction& f, const ClosedPoint& p, long width) {
    if (!f.is_unit()) throw NotAUnit("local expansion of a non-unit");
    AlgebraPtr Ap = local_algebra(f.algebra(), p);
    LaurentSeries num_s = expand_poly(f.num(), p, Ap);
    LaurentSeries den_s = expand_poly(f.den(), p, Ap);
    long v = num_s.valuation() - den_s.valuation();
    // num_s is exact, so the product window is min_index(num) + inverse window
    long f_inv = v + width - num_s.min_index();
    LaurentSeries inv = den_s.inverse(f_inv);
    LaurentSeries u = num_s * inv;
    if (u.first_unknown() < v + width)
        throw PrecisionTooLow("local expansion fell short of the requested width");
    return u.truncated(v + width);
}

SymbolValue local_symbol(const RationalFunction& f, const RationalFunction& g,
                         const ClosedPoint& p, const Character& phi) {
    // the order-data estimate is usually enough; deep nilpotent tails can
    // erode more, in which case the exact inputs simply allow a wider retry
    long width = expansion_width(f, g, p);
    for (int attempt = 0;; ++attempt) {
        try {
            LaurentSeries u = local_expand(f, p, width);
            LaurentSeries w = local_expand(g, p, width);
            return phi_symbol(u, w, phi, p.is_infinity() ? 1 : p.degree());
        } catch (const PrecisionTooLow&) {
            if (attempt == 6) throw;
            width *= 2;
        }
    }
}

ReciprocityResult reciprocity_product(const RationalFunction& f, const RationalFunction& g,
                                      const Character& phi) {
    auto pts = support(f, g);
    ReciprocityResult res{SymbolValue(RingElement::one(f.algebra())), {}};
    RingElement prod = RingElement::one(f.algebra());
    for (const auto& p : pts) {
        SymbolValue v = local_symbol(f, g, p, phi);
        prod *= v.value();
        res.locals.push_back({p, v});
    }
    res.product = SymbolValue(prod);
    return res;
}

ReciprocityResult hilbert_reciprocity(const RationalFunction& f, const RationalFunction& g,
                                      long m) {
    const AlgebraPtr& B = f.algebra();
    long long q = B->base_field()->cardinality();
    if (m < 1 || (q - 1) % m != 0)
        throw NoRootsOfUnity("mu_" + std::to_string(m) + " is not contained in F_" +
                             std::to_string(q));
    auto pts = support(f, g);
    ReciprocityResult res{SymbolValue(RingElement::one(B), m), {}};
    RingElement prod = RingElement::one(B);
    for (const auto& p : pts) {
        long width = expansion_width(f, g, p);
        SymbolValue v = [&] {
            for (int attempt = 0;; ++attempt) {
                try {
                    return hilbert_symbol(local_expand(f, p, width), local_expand(g, p, width),
                                          m);
                } catch (const PrecisionTooLow&) {
                    if (attempt == 6) throw;
                    width *= 2;
                }
            }
        }();
        prod *= v.value();
        res.locals.push_back({p, v});
    }
    res.product = SymbolValue(prod, m);
    return res;
}

}  // namespace ccsym
