#include "ccsym/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace ccsym {

namespace {

// deterministic generator for the randomized splitting step
struct SplitMix {
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

uint64_t poly_hash(const Polynomial& f) {
    uint64_t h = 0x517cc1b727220a95ULL;
    for (const auto& c : f.coeffs())
        for (long v : c.coords()) h = (h ^ static_cast<uint64_t>(v)) * 0x100000001b3ULL;
    h = (h ^ static_cast<uint64_t>(f.degree())) * 0x100000001b3ULL;
    return h;
}

void require_finite_field(const AlgebraPtr& a, const char* what) {
    if (!a->is_field() || a->characteristic() == 0)
        throw NotAField(std::string(what) + " needs coefficients in a finite field");
}

}  // namespace

Polynomial::Polynomial(AlgebraPtr alg, std::vector<RingElement> coeffs)
    : alg_(std::move(alg)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!c.algebra()->same_as(*alg_)) throw AlgebraMismatch("coefficient algebra mismatch");
    trim();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::one(const AlgebraPtr& a) {
    return Polynomial(a, {RingElement::one(a)});
}

Polynomial Polynomial::variable(const AlgebraPtr& a) {
    return Polynomial(a, {RingElement::zero(a), RingElement::one(a)});
}

Polynomial Polynomial::monomial(RingElement c, int k) {
    AlgebraPtr a = c.algebra();
    std::vector<RingElement> v(k, RingElement::zero(a));
    v.push_back(std::move(c));
    return Polynomial(a, std::move(v));
}

Polynomial Polynomial::constant(RingElement c) { return monomial(std::move(c), 0); }

bool Polynomial::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

bool Polynomial::is_monic() const { return !c_.empty() && c_.back().is_one(); }

RingElement Polynomial::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return RingElement::zero(alg_);
    return c_[k];
}

const RingElement& Polynomial::leading() const {
    if (c_.empty()) throw ZeroPolynomial("leading coefficient of 0");
    return c_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(alg_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.alg_);
    size_t n = std::max(a.c_.size(), b.c_.size());
    r.c_.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        RingElement v = i < a.c_.size() ? a.c_[i] : RingElement::zero(a.alg_);
        if (i < b.c_.size()) v += b.c_[i];
        r.c_.push_back(std::move(v));
    }
    r.trim();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.alg_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, RingElement::zero(a.alg_));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Polynomial Polynomial::operator*(const RingElement& c) const {
    Polynomial r(alg_);
    r.c_.reserve(c_.size());
    for (const auto& v : c_) r.c_.push_back(v * c);
    r.trim();
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

void Polynomial::divrem(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    RingElement lcinv = b.leading().inverse();
    q = Polynomial(a.alg_);
    r = a;
    if (r.degree() >= b.degree())
        q.c_.assign(r.degree() - b.degree() + 1, RingElement::zero(a.alg_));
    while (r.degree() >= b.degree()) {
        RingElement c = r.c_.back() * lcinv;
        long k = r.degree() - b.degree();
        q.c_[k] = c;
        for (long t = 0; t <= b.degree(); ++t) r.c_[k + t] -= c * b.c_[t];
        r.trim();
    }
    q.trim();
}

Polynomial Polynomial::operator/(const Polynomial& b) const {
    Polynomial q(alg_), r(alg_);
    divrem(*this, b, q, r);
    return q;
}

Polynomial Polynomial::operator%(const Polynomial& b) const {
    Polynomial q(alg_), r(alg_);
    divrem(*this, b, q, r);
    return r;
}

RingElement Polynomial::eval(const RingElement& x) const {
    RingElement v = RingElement::zero(alg_);
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

Polynomial Polynomial::derivative() const {
    Polynomial r(alg_);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * RingElement::from_integer(alg_, static_cast<long>(i)));
    r.trim();
    return r;
}

Polynomial Polynomial::pow(long k) const {
    Polynomial r = one(alg_);
    Polynomial b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::vector<RingElement> Polynomial::taylor_at(const RingElement& alpha) const {
    // repeated synthetic division by (t - alpha)
    std::vector<RingElement> work = c_;
    std::vector<RingElement> out;
    out.reserve(c_.size());
    if (work.empty()) return out;
    for (size_t r = 0; r < c_.size(); ++r) {
        RingElement carry = RingElement::zero(alg_);
        for (size_t i = work.size(); i-- > r;) {
            RingElement v = work[i] + carry * alpha;
            carry = v;
            work[i] = v;
        }
        out.push_back(work[r]);
        // next pass divides the quotient, which now lives in work[r+1..]
    }
    return out;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw ZeroPolynomial("monic normalization of 0");
    return *this * leading().inverse();
}

Polynomial Polynomial::residue_poly() const {
    auto fa = AlgebraDescriptor::make(alg_->field(), 1);
    Polynomial r(fa);
    for (const auto& c : c_) r.c_.push_back(c.residue());
    r.trim();
    return r;
}

std::vector<Polynomial> Polynomial::coordinate_polys() const {
    if (alg_->characteristic() == 0)
        throw Error("coordinate_polys needs finite characteristic");
    const int e = alg_->nilpotency_index();
    auto fa = AlgebraDescriptor::make(alg_->field(), 1);
    std::vector<Polynomial> out(e, Polynomial(fa));
    const int df = alg_->field_dim();
    for (int s = 0; s < e; ++s) {
        for (const auto& c : c_) {
            std::vector<long> coords(c.coords().begin() + s * df,
                                     c.coords().begin() + (s + 1) * df);
            out[s].c_.push_back(RingElement::from_coords(fa, std::move(coords)));
        }
        out[s].trim();
    }
    return out;
}

Polynomial Polynomial::map_into(const AlgebraPtr& target) const {
    Polynomial r(target);
    for (const auto& c : c_) r.c_.push_back(embed(c, target));
    r.trim();
    return r;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (long i = 0; i <= a.degree(); ++i) {
        int c = RingElement::compare(a.c_[i], b.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Polynomial::to_string(const char* var) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].to_string();
        bool composite = cs.find(' ') != std::string::npos;
        std::string term;
        if (i == 0) {
            term = composite ? "(" + cs + ")" : cs;
        } else {
            std::string v = var;
            if (i > 1) v += "^" + std::to_string(i);
            if (cs == "1")
                term = v;
            else
                term = (composite ? "(" + cs + ")" : cs) + "*" + v;
        }
        out += first ? term : " + " + term;
        first = false;
    }
    return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y.monic();
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

namespace {

// enumerate all elements of a finite field algebra (coordinate counting)
void for_each_element(const AlgebraPtr& a, const std::function<bool(const RingElement&)>& fn) {
    const long p = a->characteristic();
    const int n = a->dim();
    std::vector<long> coords(n, 0);
    while (true) {
        if (!fn(RingElement::from_coords(a, coords))) return;
        int i = 0;
        while (i < n && coords[i] == p - 1) coords[i++] = 0;
        if (i == n) return;
        ++coords[i];
    }
}

Polynomial poly_powmod(Polynomial b, long long k, const Polynomial& m) {
    Polynomial r = Polynomial::one(b.algebra());
    b = b % m;
    while (k > 0) {
        if (k & 1) r = (r * b) % m;
        b = (b * b) % m;
        k >>= 1;
    }
    return r;
}

long long field_card(const AlgebraPtr& a) { return a->field()->cardinality(); }

// squarefree part decomposition over F_q (handles the f' = 0 descent)
void squarefree_decompose(const Polynomial& f, int mult,
                          std::vector<std::pair<Polynomial, int>>& out) {
    if (f.degree() <= 0) return;
    const long p = f.algebra()->characteristic();
    Polynomial fp = f.derivative();
    if (fp.is_zero()) {
        // f = g(t^p); take the p-th root of the coefficients
        const long long q = field_card(f.algebra());
        std::vector<RingElement> g;
        for (long i = 0; i <= f.degree(); i += p) g.push_back(f.coeff(i).pow(q / p));
        squarefree_decompose(Polynomial(f.algebra(), std::move(g)), mult * static_cast<int>(p),
                             out);
        return;
    }
    Polynomial c = gcd(f, fp);
    Polynomial w = f / c;
    int i = 1;
    while (!w.is_one()) {
        Polynomial y = gcd(w, c);
        Polynomial fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), mult * i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    // remaining part is a polynomial in t^p; the recursion's derivative-zero
    // branch takes the root and scales the multiplicity
    if (!c.is_one()) squarefree_decompose(c, mult, out);
}

// distinct-degree split of a squarefree monic f: list of (product, degree)
std::vector<std::pair<Polynomial, int>> distinct_degree(Polynomial f) {
    const long long q = field_card(f.algebra());
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial h = Polynomial::variable(f.algebra());
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = poly_powmod(h, q, f);
        Polynomial g = gcd(h - Polynomial::variable(f.algebra()), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<int>(f.degree()));
    return out;
}

void equal_degree(const Polynomial& g, int d, SplitMix& rng, std::vector<Polynomial>& out);

// exhaustive splitting for small blocks: scan monic divisors of degree d
bool exhaustive_split(const Polynomial& g, int d, std::vector<Polynomial>& out) {
    const AlgebraPtr& a = g.algebra();
    if (d == 1) {
        Polynomial rest = g;
        for_each_element(a, [&](const RingElement& x) {
            if (rest.degree() < 1) return false;
            Polynomial lin(a, {-x, RingElement::one(a)});
            while (rest.degree() >= 1 && (rest % lin).is_zero()) {
                out.push_back(lin);
                rest = rest / lin;
            }
            return true;
        });
        return true;
    }
    if (d > 4) return false;
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= field_card(a);
    if (count > 100000) return false;
    Polynomial rest = g;
    const long p = a->characteristic();
    const int dim = a->dim();
    std::vector<long> coords(static_cast<size_t>(d) * dim, 0);
    while (rest.degree() > d) {
        // build candidate t^d + sum c_i t^i from the coordinate counter
        std::vector<RingElement> cs;
        for (int i = 0; i < d; ++i)
            cs.push_back(RingElement::from_coords(
                a, std::vector<long>(coords.begin() + i * dim, coords.begin() + (i + 1) * dim)));
        cs.push_back(RingElement::one(a));
        Polynomial cand(a, std::move(cs));
        if ((rest % cand).is_zero() && is_irreducible(cand)) {
            while ((rest % cand).is_zero()) {
                out.push_back(cand);
                rest = rest / cand;
            }
        }
        size_t i = 0;
        while (i < coords.size() && coords[i] == p - 1) coords[i++] = 0;
        if (i == coords.size()) break;
        ++coords[i];
    }
    if (rest.degree() == d) {
        out.push_back(rest.monic());
    } else if (rest.degree() > 0) {
        throw Error("equal-degree scan exhausted without completing the split");
    }
    return true;
}

void equal_degree(const Polynomial& g, int d, SplitMix& rng, std::vector<Polynomial>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    if (d <= 4 && exhaustive_split(g, d, out)) return;
    const AlgebraPtr& a = g.algebra();
    const long long q = field_card(a);
    const long p = a->characteristic();
    while (true) {
        // random h of degree < deg g
        std::vector<RingElement> hc;
        for (long i = 0; i < g.degree(); ++i) {
            std::vector<long> coords(a->dim());
            for (auto& c : coords) c = rng.below(p);
            hc.push_back(RingElement::from_coords(a, std::move(coords)));
        }
        Polynomial h(a, std::move(hc));
        if (h.degree() < 1) continue;
        Polynomial w(a);
        if (p == 2) {
            // trace splitting: T(h) = h + h^2 + h^4 + ... over F_{2^k}
            int bits = 0;
            long long qq = q;
            while (qq > 1) {
                qq >>= 1;
                ++bits;
            }
            Polynomial t = h % g;
            w = t;
            for (int i = 1; i < bits * d; ++i) {
                t = (t * t) % g;
                w = w + t;
            }
        } else {
            long long exp = 1;
            for (int i = 0; i < d; ++i) exp *= q;
            w = poly_powmod(h, (exp - 1) / 2, g) - Polynomial::one(a);
        }
        Polynomial s = gcd(w, g);
        if (s.degree() > 0 && s.degree() < g.degree()) {
            equal_degree(s, d, rng, out);
            equal_degree(g / s, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<Polynomial, int>> factor(const Polynomial& f) {
    require_finite_field(f.algebra(), "factorization");
    if (f.is_zero()) throw ZeroPolynomial("factorization of the zero polynomial");
    std::vector<std::pair<Polynomial, int>> out;
    if (f.degree() == 0) return out;
    std::vector<std::pair<Polynomial, int>> sqf;
    squarefree_decompose(f.monic(), 1, sqf);
    SplitMix rng{poly_hash(f)};
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<Polynomial> irr;
            equal_degree(block, d, rng, irr);
            for (auto& gi : irr) out.emplace_back(std::move(gi), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return Polynomial::compare(a.first, b.first) < 0;
    });
    return out;
}

bool is_irreducible(const Polynomial& f) {
    require_finite_field(f.algebra(), "irreducibility testing");
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const long long q = field_card(f.algebra());
    const int d = static_cast<int>(f.degree());
    Polynomial fm = f.monic();
    Polynomial t = Polynomial::variable(f.algebra());
    std::vector<Polynomial> frob{t};
    for (int k = 1; k <= d; ++k) frob.push_back(poly_powmod(frob.back(), q, fm));
    if (!((frob[d] - t) % fm).is_zero()) return false;
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool prime = true;
        for (int m = 2; m * m <= l; ++m)
            if (l % m == 0) prime = false;
        if (!prime) continue;
        Polynomial g = gcd(frob[d / l] - t, fm);
        if (!g.is_one()) return false;
    }
    return true;
}

FieldPtr detail_make_relative(FieldPtr base, int r, std::vector<long> relmod_rows);

namespace {

FieldPtr build_relative(const FieldPtr& base, const Polynomial& pi) {
    const int r = static_cast<int>(pi.degree());
    const int d1 = base->degree();
    std::vector<long> rows(static_cast<size_t>(r + 1) * d1, 0);
    for (int j = 0; j <= r; ++j) {
        RingElement c = pi.coeff(j);
        std::copy(c.coords().begin(), c.coords().end(),
                  rows.begin() + static_cast<size_t>(j) * d1);
    }
    return detail_make_relative(base, r, std::move(rows));
}

}  // namespace

FieldPtr relative_extension(const FieldPtr& base, const Polynomial& pi) {
    if (!pi.algebra()->is_field() || !pi.algebra()->field()->same_as(*base))
        throw AlgebraMismatch("modulus must live over the base field");
    if (!pi.is_monic()) throw Error("relative modulus must be monic");
    if (!is_irreducible(pi)) throw Error("relative modulus is not irreducible");
    return build_relative(base, pi);
}

FieldPtr relative_extension_trusted(const FieldPtr& base, const Polynomial& pi) {
    return build_relative(base, pi);
}

FieldPtr relative_extension_canonical(const FieldPtr& base, int r) {
    if (r < 2) throw Error("relative degree must be >= 2");
    auto fa = AlgebraDescriptor::make(base, 1);
    const long p = base->characteristic();
    const int dim = fa->dim();
    std::vector<long> coords(static_cast<size_t>(r) * dim, 0);
    while (true) {
        std::vector<RingElement> cs;
        for (int i = 0; i < r; ++i)
            cs.push_back(RingElement::from_coords(
                fa, std::vector<long>(coords.begin() + i * dim, coords.begin() + (i + 1) * dim)));
        cs.push_back(RingElement::one(fa));
        Polynomial cand(fa, std::move(cs));
        if (is_irreducible(cand)) return build_relative(base, cand);
        size_t i = 0;
        while (i < coords.size() && coords[i] == p - 1) coords[i++] = 0;
        if (i == coords.size()) throw Error("no irreducible modulus found");
        ++coords[i];
    }
}

}  // namespace ccsym
