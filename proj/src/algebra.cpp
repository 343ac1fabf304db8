#include "ccsym/algebra.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>

namespace ccsym {

namespace {

// Dimension caps for the stack scratch used in the multiplication kernel.
constexpr int kMaxSimple = 12;   // degree of the simple part
constexpr int kMaxRel = 12;      // relative degree

long normalize_mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long mulmod(long a, long b, long p) { return (a * b) % p; }

long invmod(long a, long p) {
    a = normalize_mod(a, p);
    if (a == 0) throw NotAUnit("inverse of 0 in prime field");
    long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return normalize_mod(t, p);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- dense polynomials over F_p as vector<long>, used for modulus handling ---

void ptrim(std::vector<long>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<long> pmul(const std::vector<long>& a, const std::vector<long>& b, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    ptrim(c);
    return c;
}

// remainder of a by monic m
std::vector<long> pmod(std::vector<long> a, const std::vector<long>& m, long p) {
    ptrim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        long c = a.back();
        size_t k = a.size() - 1 - dm;
        if (c != 0)
            for (size_t t = 0; t < dm; ++t) a[k + t] = normalize_mod(a[k + t] - c * m[t], p);
        a.pop_back();
        ptrim(a);
    }
    return a;
}

std::vector<long> pgcd(std::vector<long> a, std::vector<long> b, long p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        long lc = invmod(b.back(), p);
        std::vector<long> bm(b);
        for (auto& c : bm) c = mulmod(c, lc, p);
        a = pmod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

std::vector<long> p_powmod(std::vector<long> base, long long k, const std::vector<long>& m, long p) {
    std::vector<long> r{1};
    base = pmod(std::move(base), m, p);
    while (k > 0) {
        if (k & 1) r = pmod(pmul(r, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        k >>= 1;
    }
    return r;
}

bool irreducible_mod_p(const std::vector<long>& m, long p) {
    const int d = static_cast<int>(m.size()) - 1;
    if (d < 1 || m.back() != 1) return false;
    if (d == 1) return true;
    // x^{p^k} mod m for k = 1..d
    std::vector<std::vector<long>> frob(d + 1);
    frob[0] = {0, 1};
    for (int k = 1; k <= d; ++k) frob[k] = p_powmod(frob[k - 1], p, m, p);
    std::vector<long> xm{0, 1};
    std::vector<long> diff = frob[d];
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = normalize_mod(diff[1] - 1, p);
    ptrim(diff);
    if (!diff.empty()) return false;  // x^{p^d} != x
    for (long l = 2; l <= d; ++l) {
        if (d % l != 0 || !is_prime(l)) continue;
        std::vector<long> g = frob[d / l];
        g.resize(std::max<size_t>(g.size(), 2), 0);
        g[1] = normalize_mod(g[1] - 1, p);
        ptrim(g);
        if (pgcd(g, m, p).size() != 1) return false;
    }
    return true;
}

// metadata snapshot for the element kernel
struct Meta {
    long p;
    int d1, r, e, DF;
    const long* m1;        // simple modulus low coefficients (d1 of them), or null
    const long* m2;        // relative modulus rows (r+1 rows of d1), or null
};

Meta meta_of(const AlgebraDescriptor& a) {
    Meta m;
    const FieldDescriptor& f = *a.field();
    m.p = f.characteristic();
    m.d1 = f.is_relative() ? f.base()->degree() : f.degree();
    m.r = f.relative_degree();
    m.e = a.nilpotency_index();
    m.DF = m.d1 * m.r;
    m.m1 = nullptr;
    m.m2 = nullptr;
    const std::vector<long>& mod1 = f.is_relative() ? f.base()->modulus() : f.modulus();
    if (!mod1.empty()) m.m1 = mod1.data();
    if (f.is_relative()) m.m2 = f.relative_modulus_rows().data();
    return m;
}

// out[k] += a * b over F_p[x]/(m1), spans of length d1
void simple_mul_acc(const Meta& M, const long* a, const long* b, long* out) {
    const int d = M.d1;
    if (d == 1) {
        out[0] = (out[0] + a[0] * b[0]) % M.p;
        return;
    }
    std::array<long, 2 * kMaxSimple - 1> cv{};
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; ++j) cv[i + j] = (cv[i + j] + a[i] * b[j]) % M.p;
    }
    for (int k = 2 * d - 2; k >= d; --k) {
        long c = cv[k];
        if (c == 0) continue;
        for (int t = 0; t < d; ++t)
            cv[k - d + t] = normalize_mod(cv[k - d + t] - c * M.m1[t], M.p);
    }
    for (int t = 0; t < d; ++t) out[t] = (out[t] + cv[t]) % M.p;
}

// out = a * b in the field part (spans of length DF); out must not alias inputs
void field_mul(const Meta& M, const long* a, const long* b, long* out) {
    std::fill(out, out + M.DF, 0);
    if (M.r == 1) {
        simple_mul_acc(M, a, b, out);
        return;
    }
    const int d = M.d1, r = M.r;
    std::array<long, (2 * kMaxRel - 1) * kMaxSimple> buf{};
    for (int j = 0; j < r; ++j) {
        bool zero = true;
        for (int t = 0; t < d; ++t)
            if (a[j * d + t] != 0) {
                zero = false;
                break;
            }
        if (zero) continue;
        for (int k = 0; k < r; ++k) simple_mul_acc(M, a + j * d, b + k * d, buf.data() + (j + k) * d);
    }
    // reduce y^k for k >= r by the monic relative modulus
    std::array<long, kMaxSimple> c{};
    for (int k = 2 * r - 2; k >= r; --k) {
        long* blk = buf.data() + k * d;
        bool zero = true;
        for (int t = 0; t < d; ++t)
            if (blk[t] != 0) {
                zero = false;
                break;
            }
        if (zero) continue;
        for (int t = 0; t < d; ++t) {
            c[t] = blk[t];
            blk[t] = 0;
        }
        // y^k = y^{k-r} * y^r = -y^{k-r} * (m2_0 + m2_1 y + ... + m2_{r-1} y^{r-1})
        std::array<long, kMaxSimple> negc{};
        for (int t = 0; t < d; ++t) negc[t] = normalize_mod(-c[t], M.p);
        for (int j = 0; j < r; ++j)
            simple_mul_acc(M, negc.data(), M.m2 + j * d, buf.data() + (k - r + j) * d);
    }
    std::copy(buf.data(), buf.data() + M.DF, out);
}

// ---- generic dense polynomial helpers over a field concept, for inverses ----

struct FpF {
    long p;
    using Elem = long;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return normalize_mod(a - b, p); }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem inv(Elem a) const { return invmod(a, p); }
};

struct SimpleF {
    Meta M;  // with r forced to 1
    using Elem = std::vector<long>;
    Elem zero() const { return Elem(M.d1, 0); }
    Elem one() const {
        Elem v(M.d1, 0);
        v[0] = 1;
        return v;
    }
    bool is_zero(const Elem& a) const {
        return std::all_of(a.begin(), a.end(), [](long c) { return c == 0; });
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem c(M.d1);
        for (int i = 0; i < M.d1; ++i) c[i] = (a[i] + b[i]) % M.p;
        return c;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem c(M.d1);
        for (int i = 0; i < M.d1; ++i) c[i] = normalize_mod(a[i] - b[i], M.p);
        return c;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem c(M.d1, 0);
        simple_mul_acc(M, a.data(), b.data(), c.data());
        return c;
    }
    Elem inv(const Elem& a) const;
};

template <class F>
using FPoly = std::vector<typename F::Elem>;

template <class F>
void ftrim(const F& K, FPoly<F>& a) {
    while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

template <class F>
FPoly<F> fdivrem(const F& K, FPoly<F> a, const FPoly<F>& b, FPoly<F>* quot) {
    // b nonzero with invertible leading coefficient
    auto lcinv = K.inv(b.back());
    if (quot) quot->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, K.zero());
    while (a.size() >= b.size()) {
        auto c = K.mul(a.back(), lcinv);
        size_t k = a.size() - b.size();
        if (!K.is_zero(c)) {
            if (quot) (*quot)[k] = c;
            for (size_t t = 0; t < b.size(); ++t) a[k + t] = K.sub(a[k + t], K.mul(c, b[t]));
        }
        a.pop_back();
        ftrim(K, a);
        if (a.size() < b.size()) break;
    }
    ftrim(K, a);
    return a;
}

// a^{-1} mod m by extended Euclid; m monic of degree >= 1, gcd(a, m) = 1
template <class F>
FPoly<F> poly_inv_mod(const F& K, FPoly<F> a, FPoly<F> m) {
    ftrim(K, a);
    ftrim(K, m);
    if (a.empty()) throw NotAUnit("inverse of 0");
    FPoly<F> r0 = m, r1 = a;
    FPoly<F> s0, s1{K.one()};
    while (!r1.empty()) {
        FPoly<F> q;
        FPoly<F> r2 = fdivrem(K, r0, r1, &q);
        // s2 = s0 - q*s1
        FPoly<F> qs(q.size() + s1.size(), K.zero());
        if (!q.empty() && !s1.empty()) {
            qs.assign(q.size() + s1.size() - 1, K.zero());
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j)
                    qs[i + j] = K.add(qs[i + j], K.mul(q[i], s1[j]));
        } else {
            qs.clear();
        }
        FPoly<F> s2(std::max(s0.size(), qs.size()), K.zero());
        for (size_t i = 0; i < s2.size(); ++i) {
            auto v = i < s0.size() ? s0[i] : K.zero();
            if (i < qs.size()) v = K.sub(v, qs[i]);
            s2[i] = v;
        }
        ftrim(K, s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw NotAUnit("element not invertible modulo the field modulus");
    auto c = K.inv(r0[0]);
    for (auto& v : s0) v = K.mul(v, c);
    ftrim(K, s0);
    return s0;
}

SimpleF::Elem SimpleF::inv(const Elem& a) const {
    if (M.d1 == 1) return Elem{invmod(a[0], M.p)};
    FpF K{M.p};
    FPoly<FpF> ap(a.begin(), a.end());
    FPoly<FpF> m(M.m1, M.m1 + M.d1);
    m.push_back(1);
    FPoly<FpF> r = poly_inv_mod(K, ap, m);
    r.resize(M.d1, 0);
    return r;
}

// inverse in the field part; in/out spans of length DF
void field_inv(const Meta& M, const long* a, long* out) {
    if (M.DF == 1) {
        out[0] = invmod(a[0], M.p);
        return;
    }
    if (M.r == 1) {
        SimpleF K{M};
        auto r = K.inv(std::vector<long>(a, a + M.d1));
        std::copy(r.begin(), r.end(), out);
        return;
    }
    Meta Ms = M;
    Ms.r = 1;
    Ms.DF = M.d1;
    SimpleF K{Ms};
    FPoly<SimpleF> ap(M.r), m(M.r + 1);
    for (int j = 0; j < M.r; ++j) ap[j].assign(a + j * M.d1, a + (j + 1) * M.d1);
    for (int j = 0; j <= M.r; ++j) m[j].assign(M.m2 + j * M.d1, M.m2 + (j + 1) * M.d1);
    FPoly<SimpleF> r = poly_inv_mod(K, ap, m);
    r.resize(M.r, K.zero());
    for (int j = 0; j < M.r; ++j) std::copy(r[j].begin(), r[j].end(), out + j * M.d1);
}

bool span_zero(const long* a, int n) {
    return std::all_of(a, a + n, [](long c) { return c == 0; });
}

}  // namespace

// ---------------------------------------------------------------- FieldDescriptor

FieldPtr FieldDescriptor::rationals() {
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->p_ = 0;
    return f;
}

FieldPtr FieldDescriptor::prime(long p) {
    if (!is_prime(p)) throw Error("characteristic must be prime: " + std::to_string(p));
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->p_ = p;
    return f;
}

FieldPtr FieldDescriptor::extension(long p, const std::vector<long>& modulus) {
    if (p == 0) throw Error("extensions of the rationals are not supported");
    if (!is_prime(p)) throw Error("characteristic must be prime: " + std::to_string(p));
    std::vector<long> m(modulus);
    for (auto& c : m) c = normalize_mod(c, p);
    ptrim(m);
    if (m.size() < 2) throw Error("modulus must have degree >= 1");
    if (m.back() != 1) throw Error("modulus must be monic");
    if (m.size() == 2) {
        // degree-1 modulus: the prime field itself
        return prime(p);
    }
    if (!irreducible_mod_p(m, p)) throw Error("modulus is not irreducible");
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->p_ = p;
    f->d1_ = static_cast<int>(m.size()) - 1;
    if (f->d1_ > kMaxSimple) throw Error("extension degree too large");
    f->m1_ = std::move(m);
    return f;
}

FieldPtr FieldDescriptor::extension(long p, int d) {
    if (d < 1) throw Error("extension degree must be >= 1");
    if (d == 1) return prime(p);
    if (p == 0) throw Error("extensions of the rationals are not supported");
    if (!is_prime(p)) throw Error("characteristic must be prime: " + std::to_string(p));
    if (d > kMaxSimple) throw Error("extension degree too large");
    // smallest (c_0,...,c_{d-1}) in lexicographic order giving an irreducible
    std::vector<long> m(d + 1, 0);
    m[d] = 1;
    while (true) {
        if (irreducible_mod_p(m, p)) break;
        int i = 0;
        while (i < d && m[i] == p - 1) m[i++] = 0;
        if (i == d) throw Error("no irreducible modulus found");  // unreachable
        ++m[i];
    }
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->p_ = p;
    f->d1_ = d;
    f->m1_ = std::move(m);
    return f;
}

FieldPtr detail_make_relative(FieldPtr base, int r, std::vector<long> relmod_rows) {
    if (!base || base->is_relative()) throw Error("relative extensions must have a simple base");
    if (base->characteristic() == 0) throw Error("relative extensions need finite characteristic");
    if (r < 2) throw Error("relative degree must be >= 2");
    if (r > kMaxRel) throw Error("relative degree too large");
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->p_ = base->characteristic();
    f->d1_ = base->degree();
    f->m1_ = base->modulus();
    f->base_ = std::move(base);
    f->r_ = r;
    f->m2_ = std::move(relmod_rows);
    return f;
}

long long FieldDescriptor::cardinality() const {
    if (p_ == 0) throw NotFinite("the rationals are infinite");
    long long c = 1;
    for (int i = 0; i < degree(); ++i) {
        if (c > (1LL << 62) / p_) throw Error("cardinality overflow");
        c *= p_;
    }
    return c;
}

bool FieldDescriptor::same_as(const FieldDescriptor& o) const {
    if (p_ != o.p_ || d1_ != o.d1_ || r_ != o.r_) return false;
    return m1_ == o.m1_ && m2_ == o.m2_;
}

std::string FieldDescriptor::to_string() const {
    if (p_ == 0) return "Q";
    std::ostringstream os;
    os << "F" << cardinality();
    return os.str();
}

// -------------------------------------------------------------- AlgebraDescriptor

AlgebraPtr AlgebraDescriptor::make(FieldPtr field, int e) {
    if (!field) throw Error("null field descriptor");
    if (e < 1) throw Error("nilpotency index must be >= 1");
    auto a = std::shared_ptr<AlgebraDescriptor>(new AlgebraDescriptor());
    a->field_ = std::move(field);
    a->e_ = e;
    return a;
}

long long AlgebraDescriptor::cardinality() const {
    long long q = field_->cardinality();
    long long c = 1;
    for (int i = 0; i < e_; ++i) {
        if (q != 0 && c > (1LL << 62) / q) throw Error("cardinality overflow");
        c *= q;
    }
    return c;
}

bool AlgebraDescriptor::same_as(const AlgebraDescriptor& o) const {
    return e_ == o.e_ && field_->same_as(*o.field_);
}

std::string AlgebraDescriptor::to_string() const {
    std::string s = field_->to_string();
    if (e_ > 1) s += "[e^" + std::to_string(e_) + "]";
    return s;
}

long long unit_group_order(const AlgebraPtr& a) {
    if (!a->is_finite()) throw NotFinite("unit group of an infinite algebra");
    long long q = a->field()->cardinality();
    long long c = a->cardinality();
    return c - c / q;
}

// ------------------------------------------------------------------- RingElement

void RingElement::check_same(const RingElement& o) const {
    if (!alg_ || !o.alg_ || !alg_->same_as(*o.alg_))
        throw AlgebraMismatch("operands belong to different algebras");
}

RingElement RingElement::zero(const AlgebraPtr& a) {
    RingElement x;
    x.alg_ = a;
    if (a->characteristic() == 0)
        x.qc_.assign(a->nilpotency_index(), mpq_class(0));
    else
        x.fc_.assign(a->dim(), 0);
    return x;
}

RingElement RingElement::one(const AlgebraPtr& a) { return from_integer(a, 1); }

RingElement RingElement::from_integer(const AlgebraPtr& a, long n) {
    RingElement x = zero(a);
    if (a->characteristic() == 0)
        x.qc_[0] = n;
    else
        x.fc_[0] = normalize_mod(n, a->characteristic());
    return x;
}

RingElement RingElement::from_rational(const AlgebraPtr& a, long num, long den) {
    if (den == 0) throw Error("zero denominator");
    if (a->characteristic() == 0) {
        RingElement x = zero(a);
        x.qc_[0] = mpq_class(num, den);
        x.qc_[0].canonicalize();
        return x;
    }
    return from_integer(a, num) * from_integer(a, den).inverse();
}

RingElement RingElement::field_generator(const AlgebraPtr& a) {
    Meta M = meta_of(*a);
    if (M.d1 < 2) throw BadIndex("field has no simple generator");
    RingElement x = zero(a);
    x.fc_[1] = 1;
    return x;
}

RingElement RingElement::point_generator(const AlgebraPtr& a) {
    Meta M = meta_of(*a);
    if (M.r < 2) throw NoExtension("algebra declares no scalar extension");
    RingElement x = zero(a);
    x.fc_[M.d1] = 1;
    return x;
}

RingElement RingElement::epsilon(const AlgebraPtr& a) {
    if (a->nilpotency_index() < 2) throw BadIndex("algebra has no nilpotent part");
    RingElement x = zero(a);
    if (a->characteristic() == 0)
        x.qc_[1] = 1;
    else
        x.fc_[a->field_dim()] = 1;
    return x;
}

RingElement RingElement::from_coords(const AlgebraPtr& a, std::vector<long> coords) {
    if (a->characteristic() == 0) throw Error("from_coords needs finite characteristic");
    if (static_cast<int>(coords.size()) != a->dim()) throw Error("coordinate size mismatch");
    RingElement x;
    x.alg_ = a;
    x.fc_ = std::move(coords);
    for (auto& c : x.fc_) c = normalize_mod(c, a->characteristic());
    return x;
}

bool RingElement::is_zero() const {
    if (alg_->characteristic() == 0)
        return std::all_of(qc_.begin(), qc_.end(), [](const mpq_class& c) { return c == 0; });
    return span_zero(fc_.data(), static_cast<int>(fc_.size()));
}

bool RingElement::is_one() const { return *this == one(alg_); }

bool RingElement::residue_is_zero() const {
    if (alg_->characteristic() == 0) return qc_[0] == 0;
    return span_zero(fc_.data(), alg_->field_dim());
}

bool RingElement::is_unit() const { return !residue_is_zero(); }

RingElement RingElement::residue() const {
    auto fa = AlgebraDescriptor::make(alg_->field(), 1);
    RingElement x = zero(fa);
    if (alg_->characteristic() == 0)
        x.qc_[0] = qc_[0];
    else
        std::copy(fc_.begin(), fc_.begin() + alg_->field_dim(), x.fc_.begin());
    return x;
}

RingElement RingElement::residue_lift() const {
    RingElement x = *this;
    if (alg_->characteristic() == 0) {
        for (size_t s = 1; s < x.qc_.size(); ++s) x.qc_[s] = 0;
    } else {
        std::fill(x.fc_.begin() + alg_->field_dim(), x.fc_.end(), 0);
    }
    return x;
}

int RingElement::nilindex() const {
    if (is_unit()) throw NotNilpotent("nilindex of a unit");
    if (is_zero()) return 1;
    RingElement p = *this;
    int r = 1;
    while (!p.is_zero()) {
        p *= *this;
        ++r;
    }
    return r;
}

RingElement RingElement::operator-() const {
    RingElement x = *this;
    if (alg_->characteristic() == 0) {
        for (auto& c : x.qc_) c = -c;
    } else {
        long p = alg_->characteristic();
        for (auto& c : x.fc_) c = normalize_mod(-c, p);
    }
    return x;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check_same(o);
    if (alg_->characteristic() == 0) {
        for (size_t i = 0; i < qc_.size(); ++i) qc_[i] += o.qc_[i];
    } else {
        long p = alg_->characteristic();
        for (size_t i = 0; i < fc_.size(); ++i) fc_[i] = (fc_[i] + o.fc_[i]) % p;
    }
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    check_same(o);
    if (alg_->characteristic() == 0) {
        for (size_t i = 0; i < qc_.size(); ++i) qc_[i] -= o.qc_[i];
    } else {
        long p = alg_->characteristic();
        for (size_t i = 0; i < fc_.size(); ++i) fc_[i] = normalize_mod(fc_[i] - o.fc_[i], p);
    }
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
    check_same(o);
    if (alg_->characteristic() == 0) {
        const int e = alg_->nilpotency_index();
        std::vector<mpq_class> out(e, mpq_class(0));
        for (int i = 0; i < e; ++i) {
            if (qc_[i] == 0) continue;
            for (int j = 0; j + i < e; ++j) out[i + j] += qc_[i] * o.qc_[j];
        }
        qc_ = std::move(out);
        return *this;
    }
    Meta M = meta_of(*alg_);
    std::vector<long> out(fc_.size(), 0);
    std::vector<long> tmp(M.DF);
    for (int i = 0; i < M.e; ++i) {
        const long* ai = fc_.data() + i * M.DF;
        if (span_zero(ai, M.DF)) continue;
        for (int j = 0; j + i < M.e; ++j) {
            const long* bj = o.fc_.data() + j * M.DF;
            if (span_zero(bj, M.DF)) continue;
            field_mul(M, ai, bj, tmp.data());
            long* dst = out.data() + (i + j) * M.DF;
            for (int t = 0; t < M.DF; ++t) dst[t] = (dst[t] + tmp[t]) % M.p;
        }
    }
    fc_ = std::move(out);
    return *this;
}

RingElement RingElement::inverse() const {
    if (!is_unit()) throw NotAUnit("inverse of a non-unit");
    if (alg_->characteristic() == 0) {
        const int e = alg_->nilpotency_index();
        // u = u0 (1 + x) with x nilpotent; u^{-1} = u0^{-1} sum (-x)^k
        mpq_class i0 = 1 / qc_[0];
        RingElement x = zero(alg_);
        for (int k = 1; k < e; ++k) x.qc_[k] = -qc_[k] * i0;
        RingElement acc = one(alg_), cur = one(alg_);
        for (int k = 1; k < e; ++k) {
            cur *= x;
            if (cur.is_zero()) break;
            acc += cur;
        }
        for (auto& c : acc.qc_) c *= i0;
        return acc;
    }
    Meta M = meta_of(*alg_);
    std::vector<long> i0(M.DF);
    field_inv(M, fc_.data(), i0.data());
    if (M.e == 1) {
        RingElement r = zero(alg_);
        r.fc_ = std::move(i0);
        return r;
    }
    // x = -i0 * (nilpotent part); result = (sum x^k) * i0 slabwise
    RingElement x = zero(alg_);
    std::vector<long> tmp(M.DF);
    for (int s = 1; s < M.e; ++s) {
        const long* us = fc_.data() + s * M.DF;
        if (span_zero(us, M.DF)) continue;
        field_mul(M, i0.data(), us, tmp.data());
        long* dst = x.fc_.data() + s * M.DF;
        for (int t = 0; t < M.DF; ++t) dst[t] = normalize_mod(-tmp[t], M.p);
    }
    RingElement acc = one(alg_), cur = one(alg_);
    for (int k = 1; k < M.e; ++k) {
        cur *= x;
        if (cur.is_zero()) break;
        acc += cur;
    }
    RingElement res = zero(alg_);
    for (int s = 0; s < M.e; ++s) {
        const long* as = acc.fc_.data() + s * M.DF;
        if (span_zero(as, M.DF)) continue;
        field_mul(M, as, i0.data(), res.fc_.data() + s * M.DF);
    }
    return res;
}

RingElement RingElement::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    RingElement r = one(alg_);
    RingElement b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

bool RingElement::operator==(const RingElement& o) const {
    check_same(o);
    if (alg_->characteristic() == 0) return qc_ == o.qc_;
    return fc_ == o.fc_;
}

int RingElement::compare(const RingElement& a, const RingElement& b) {
    a.check_same(b);
    if (a.alg_->characteristic() == 0) {
        for (size_t i = 0; i < a.qc_.size(); ++i) {
            int c = cmp(a.qc_[i], b.qc_[i]);
            if (c != 0) return c;
        }
        return 0;
    }
    for (size_t i = 0; i < a.fc_.size(); ++i) {
        if (a.fc_[i] != b.fc_[i]) return a.fc_[i] < b.fc_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<RingElement> RingElement::relative_blocks() const {
    Meta M = meta_of(*alg_);
    auto base_alg = AlgebraDescriptor::make(alg_->base_field(), M.e);
    std::vector<RingElement> blocks;
    blocks.reserve(M.r);
    for (int j = 0; j < M.r; ++j) {
        RingElement b = zero(base_alg);
        if (M.p != 0) {
            for (int s = 0; s < M.e; ++s)
                for (int t = 0; t < M.d1; ++t)
                    b.fc_[s * M.d1 + t] = fc_[s * M.DF + j * M.d1 + t];
        } else {
            b.qc_ = qc_;
        }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

RingElement RingElement::from_relative_blocks(const AlgebraPtr& a,
                                              const std::vector<RingElement>& blocks) {
    Meta M = meta_of(*a);
    if (static_cast<int>(blocks.size()) != M.r) throw Error("block count mismatch");
    RingElement x = zero(a);
    for (int j = 0; j < M.r; ++j) {
        const RingElement& b = blocks[j];
        if (M.p != 0) {
            for (int s = 0; s < M.e; ++s)
                for (int t = 0; t < M.d1; ++t)
                    x.fc_[s * M.DF + j * M.d1 + t] = b.fc_[s * M.d1 + t];
        } else {
            x.qc_ = b.qc_;
        }
    }
    return x;
}

RingElement embed(const RingElement& x, const AlgebraPtr& target) {
    const AlgebraPtr& src = x.algebra();
    if (src->same_as(*target)) return x;
    if (src->characteristic() != target->characteristic())
        throw AlgebraMismatch("element does not embed into the target algebra");
    bool same_field = src->field()->same_as(*target->field());
    bool into_ext = target->field()->is_relative() && src->field()->same_as(*target->base_field());
    bool e_ok = src->nilpotency_index() == target->nilpotency_index() ||
                src->nilpotency_index() == 1;
    if (!(same_field || into_ext) || !e_ok)
        throw AlgebraMismatch("element does not embed into the target algebra");
    RingElement r = RingElement::zero(target);
    if (src->characteristic() == 0) {
        for (int s = 0; s < src->nilpotency_index(); ++s) r.qc_[s] = x.qc_[s];
        return r;
    }
    // the source field part occupies the leading coordinates of each slab
    const int sdf = src->field_dim(), tdf = target->field_dim();
    for (int s = 0; s < src->nilpotency_index(); ++s)
        std::copy(x.fc_.begin() + s * sdf, x.fc_.begin() + (s + 1) * sdf,
                  r.fc_.begin() + static_cast<size_t>(s) * tdf);
    return r;
}

RingElement norm(const RingElement& x) {
    const AlgebraPtr& a = x.algebra();
    if (!a->field()->is_relative()) throw NoExtension("norm needs a declared scalar extension");
    Meta M = meta_of(*a);
    const int r = M.r;
    auto target = AlgebraDescriptor::make(a->base_field(), M.e);
    // matrix of multiplication by x in the basis {y^j} over k (x) B
    std::vector<std::vector<RingElement>> m(r, std::vector<RingElement>(r));
    RingElement yj = RingElement::one(a);
    RingElement y = RingElement::point_generator(a);
    for (int j = 0; j < r; ++j) {
        RingElement col = x * yj;
        auto blocks = col.relative_blocks();
        for (int i = 0; i < r; ++i) m[i][j] = blocks[i];
        yj *= y;
    }
    // determinant by expansion over column subsets
    std::vector<RingElement> memo(size_t(1) << r);
    std::vector<bool> have(size_t(1) << r, false);
    auto det = [&](auto&& self, unsigned mask) -> RingElement {
        if (mask == 0) return RingElement::one(target);
        if (have[mask]) return memo[mask];
        int row = r - __builtin_popcount(mask);
        RingElement acc = RingElement::zero(target);
        int sign = 1;
        for (int c = 0; c < r; ++c) {
            if (!(mask >> c & 1)) continue;
            if (!m[row][c].is_zero()) {
                RingElement term = m[row][c] * self(self, mask & ~(1u << c));
                acc = sign > 0 ? acc + term : acc - term;
            }
            sign = -sign;
        }
        have[mask] = true;
        memo[mask] = acc;
        return acc;
    };
    return det(det, (1u << r) - 1);
}

RingElement exp_nilpotent(const RingElement& x) {
    if (x.algebra()->characteristic() != 0) throw CharNotZero("exp needs characteristic 0");
    if (x.is_unit()) throw NotNilpotent("exp of a non-nilpotent element");
    RingElement acc = RingElement::one(x.algebra());
    RingElement term = RingElement::one(x.algebra());
    long kfact = 1;
    for (int k = 1; k < x.algebra()->nilpotency_index(); ++k) {
        term *= x;
        if (term.is_zero()) break;
        kfact *= k;
        acc += term * RingElement::from_rational(x.algebra(), 1, kfact);
    }
    return acc;
}

RingElement log_unipotent(const RingElement& u) {
    if (u.algebra()->characteristic() != 0) throw CharNotZero("log needs characteristic 0");
    RingElement x = u - RingElement::one(u.algebra());
    if (x.is_unit()) throw NotNilpotent("log of a non-unipotent element");
    RingElement acc = RingElement::zero(u.algebra());
    RingElement term = RingElement::one(u.algebra());
    for (int k = 1; k < u.algebra()->nilpotency_index(); ++k) {
        term *= x;
        if (term.is_zero()) break;
        RingElement scaled = term * RingElement::from_rational(u.algebra(), 1, k);
        acc = (k % 2 == 1) ? acc + scaled : acc - scaled;
    }
    return acc;
}

namespace {

void append_power(std::string& s, const char* gen, int k) {
    if (k == 0) return;
    if (!s.empty()) s += "*";
    s += gen;
    if (k > 1) s += "^" + std::to_string(k);
}

}  // namespace

std::string RingElement::to_string() const {
    if (!alg_) return "<invalid>";
    std::vector<std::pair<std::string, bool>> terms;  // (text without sign, negative?)
    if (alg_->characteristic() == 0) {
        for (size_t s = 0; s < qc_.size(); ++s) {
            if (qc_[s] == 0) continue;
            mpq_class v = qc_[s] < 0 ? mpq_class(-qc_[s]) : qc_[s];
            std::string gens;
            append_power(gens, "e", static_cast<int>(s));
            std::string t;
            if (gens.empty())
                t = v.get_str();
            else if (v == 1)
                t = gens;
            else
                t = v.get_str() + "*" + gens;
            terms.emplace_back(t, qc_[s] < 0);
        }
    } else {
        Meta M = meta_of(*alg_);
        // the sole generator prints as `x`; with two levels the relative one is `y`
        const char* rel_gen = M.d1 == 1 ? "x" : "y";
        for (int s = 0; s < M.e; ++s)
            for (int j = 0; j < M.r; ++j)
                for (int i = 0; i < M.d1; ++i) {
                    long c = fc_[s * M.DF + j * M.d1 + i];
                    if (c == 0) continue;
                    std::string gens;
                    append_power(gens, "x", i);
                    append_power(gens, rel_gen, j);
                    append_power(gens, "e", s);
                    std::string t;
                    if (gens.empty())
                        t = std::to_string(c);
                    else if (c == 1)
                        t = gens;
                    else
                        t = std::to_string(c) + "*" + gens;
                    terms.emplace_back(t, false);
                }
    }
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += (terms[i].second ? "-" : "") + terms[i].first;
        else
            out += (terms[i].second ? " - " : " + ") + terms[i].first;
    }
    return out;
}

}  // namespace ccsym
