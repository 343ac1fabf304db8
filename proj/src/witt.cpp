#include "ccsym/witt.hpp"

namespace ccsym {

namespace {

void check_coords(const AlgebraPtr& alg, const std::vector<RingElement>& v) {
    if (v.empty()) throw Error("witt vectors need length >= 1");
    for (const auto& c : v)
        if (!c.algebra()->same_as(*alg)) throw AlgebraMismatch("coordinate algebra mismatch");
}

std::string join_coords(const std::vector<RingElement>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

// c_i = a_i + b_i + sum_{h+k=i} a_h b_k on raw coefficient vectors
std::vector<RingElement> unit_series_mul(const AlgebraPtr& alg,
                                         const std::vector<RingElement>& a,
                                         const std::vector<RingElement>& b) {
    const size_t n = a.size();
    std::vector<RingElement> c(n, RingElement::zero(alg));
    for (size_t i = 1; i <= n; ++i) {
        RingElement v = a[i - 1] + b[i - 1];
        for (size_t h = 1; h < i; ++h) v += a[h - 1] * b[i - h - 1];
        c[i - 1] = v;
    }
    return c;
}

}  // namespace

WittVector::WittVector(AlgebraPtr alg, std::vector<RingElement> coords)
    : alg_(std::move(alg)), a_(std::move(coords)) {
    check_coords(alg_, a_);
}

WittVector WittVector::zero(const AlgebraPtr& a, int n) {
    return WittVector(a, std::vector<RingElement>(n, RingElement::zero(a)));
}

const RingElement& WittVector::coord(int i) const {
    if (i < 1 || i > length()) throw BadIndex("witt coordinate out of range");
    return a_[i - 1];
}

std::string WittVector::to_string() const { return join_coords(a_); }

BigWittVector::BigWittVector(AlgebraPtr alg, std::vector<RingElement> coords)
    : alg_(std::move(alg)), a_(std::move(coords)) {
    check_coords(alg_, a_);
}

BigWittVector BigWittVector::zero(const AlgebraPtr& a, int n) {
    return BigWittVector(a, std::vector<RingElement>(n, RingElement::zero(a)));
}

const RingElement& BigWittVector::coord(int i) const {
    if (i < 1 || i > length()) throw BadIndex("big-witt coordinate out of range");
    return a_[i - 1];
}

std::string BigWittVector::to_string() const { return join_coords(a_); }

TruncUnitSeries::TruncUnitSeries(AlgebraPtr alg, std::vector<RingElement> coeffs)
    : alg_(std::move(alg)), a_(std::move(coeffs)) {
    check_coords(alg_, a_);
}

TruncUnitSeries TruncUnitSeries::one(const AlgebraPtr& a, int n) {
    return TruncUnitSeries(a, std::vector<RingElement>(n, RingElement::zero(a)));
}

const RingElement& TruncUnitSeries::coeff(int i) const {
    if (i < 1 || i > order()) throw BadIndex("series coefficient out of range");
    return a_[i - 1];
}

TruncUnitSeries operator*(const TruncUnitSeries& a, const TruncUnitSeries& b) {
    if (a.order() != b.order() || !a.alg_->same_as(*b.alg_))
        throw AlgebraMismatch("series order or algebra mismatch");
    return TruncUnitSeries(a.alg_, unit_series_mul(a.alg_, a.a_, b.a_));
}

TruncUnitSeries TruncUnitSeries::inverse() const {
    // solve (1 + sum a_i t^i)(1 + sum b_i t^i) = 1 coefficient by coefficient
    std::vector<RingElement> b(a_.size(), RingElement::zero(alg_));
    for (size_t i = 1; i <= a_.size(); ++i) {
        RingElement v = -a_[i - 1];
        for (size_t h = 1; h < i; ++h) v -= a_[h - 1] * b[i - h - 1];
        b[i - 1] = v;
    }
    return TruncUnitSeries(alg_, std::move(b));
}

std::string TruncUnitSeries::to_string() const {
    std::string s = "1";
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i].is_zero()) continue;
        std::string cs = a_[i].to_string();
        bool composite = cs.find(' ') != std::string::npos;
        std::string term = composite ? "(" + cs + ")" : cs;
        std::string v = "t";
        if (i + 1 > 1) v += "^" + std::to_string(i + 1);
        s += " + " + (cs == "1" ? v : term + "*" + v);
    }
    return s;
}

WittVector witt_add(const WittVector& x, const WittVector& y) {
    if (x.length() != y.length() || !x.algebra()->same_as(*y.algebra()))
        throw AlgebraMismatch("witt length or algebra mismatch");
    return WittVector(x.algebra(), unit_series_mul(x.algebra(), x.coords(), y.coords()));
}

WittVector witt_neg(const WittVector& x) {
    // y with x + y = 0: y_i = -x_i - sum_{h+k=i} x_h y_k
    const auto& a = x.coords();
    std::vector<RingElement> y(a.size(), RingElement::zero(x.algebra()));
    for (size_t i = 1; i <= a.size(); ++i) {
        RingElement v = -a[i - 1];
        for (size_t h = 1; h < i; ++h) v -= a[h - 1] * y[i - h - 1];
        y[i - 1] = v;
    }
    return WittVector(x.algebra(), std::move(y));
}

RingElement cocycle_f(int h, const WittVector& x, const WittVector& y) {
    if (h < 2) throw BadIndex("cocycle index must be >= 2");
    if (x.length() != h - 1 || y.length() != h - 1)
        throw AlgebraMismatch("cocycle operands must have length h-1");
    RingElement v = RingElement::zero(x.algebra());
    for (int i = 1; i <= h - 1; ++i) {
        int j = h - i;
        v += x.coord(i) * y.coord(j);
    }
    return v;
}

TruncUnitSeries witt_to_series(const WittVector& x) {
    return TruncUnitSeries(x.algebra(), x.coords());
}

WittVector series_to_witt(const TruncUnitSeries& s) {
    return WittVector(s.algebra(), s.coeffs());
}

WittVector bigwitt_to_witt(const BigWittVector& a) {
    const int n = a.length();
    if (n > 20) throw Error("bigwitt_to_witt subset enumeration limited to length 20");
    std::vector<RingElement> b(n, RingElement::zero(a.algebra()));
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int sum = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) sum += i + 1;
        if (sum > n) continue;
        RingElement term = RingElement::one(a.algebra());
        int k = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) {
                term *= a.coord(i + 1);
                ++k;
            }
        if (k % 2 == 1) term = -term;
        b[sum - 1] += term;
    }
    return WittVector(a.algebra(), std::move(b));
}

TruncUnitSeries bigwitt_to_series(const BigWittVector& a) {
    const int n = a.length();
    std::vector<RingElement> c(n + 1, RingElement::zero(a.algebra()));
    c[0] = RingElement::one(a.algebra());
    for (int i = 1; i <= n; ++i) {
        if (a.coord(i).is_zero()) continue;
        // multiply by (1 - abar_i t^i), truncated at degree n
        for (int k = n; k >= i; --k) c[k] -= a.coord(i) * c[k - i];
    }
    return TruncUnitSeries(a.algebra(), std::vector<RingElement>(c.begin() + 1, c.end()));
}

BigWittVector series_to_bigwitt(const TruncUnitSeries& s) {
    const int n = s.order();
    std::vector<RingElement> cur(n + 1, RingElement::zero(s.algebra()));
    cur[0] = RingElement::one(s.algebra());
    for (int i = 1; i <= n; ++i) cur[i] = s.coeff(i);
    std::vector<RingElement> a(n, RingElement::zero(s.algebra()));
    for (int i = 1; i <= n; ++i) {
        a[i - 1] = -cur[i];
        if (a[i - 1].is_zero()) continue;
        // divide by (1 - a_i t^i): multiply by sum_k a_i^k t^{ik}, truncated
        std::vector<RingElement> next(cur);
        RingElement pw = a[i - 1];
        for (int k = i; k <= n; k += i) {
            for (int j = 0; j + k <= n; ++j) next[j + k] += pw * cur[j];
            pw = pw * a[i - 1];
        }
        cur = std::move(next);
    }
    return BigWittVector(s.algebra(), std::move(a));
}

BigWittVector bigwitt_add(const BigWittVector& x, const BigWittVector& y) {
    return series_to_bigwitt(bigwitt_to_series(x) * bigwitt_to_series(y));
}

WittVector units_quotient_to_witt(const std::vector<RingElement>& u) {
    if (u.size() < 2) throw BadIndex("truncation order must be >= 2");
    if (!u[0].is_unit()) throw NotAUnit("units-quotient input has a non-unit constant term");
    const AlgebraPtr& alg = u[0].algebra();
    RingElement inv0 = u[0].inverse();
    std::vector<RingElement> w;
    w.reserve(u.size() - 1);
    for (size_t i = 1; i < u.size(); ++i) w.push_back(u[i] * inv0);
    return WittVector(alg, std::move(w));
}

}  // namespace ccsym
