#include "ccsym/laurent.hpp"

#include <algorithm>

namespace ccsym {

namespace {

long clamp_exact(long f) { return std::min(f, LaurentSeries::kExact); }

// shift a window edge; exactness is absorbing
long add_win(long m, long f) { return f >= LaurentSeries::kExact ? LaurentSeries::kExact : m + f; }

}  // namespace

LaurentSeries::LaurentSeries(AlgebraPtr alg, std::map<long, RingElement> coeffs,
                             long first_unknown)
    : alg_(std::move(alg)), c_(std::move(coeffs)), first_unknown_(clamp_exact(first_unknown)) {
    for (const auto& [k, v] : c_) {
        if (!v.algebra()->same_as(*alg_)) throw AlgebraMismatch("coefficient algebra mismatch");
        if (k >= first_unknown_) throw Error("coefficient beyond the precision window");
    }
    prune();
}

void LaurentSeries::prune() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second.is_zero())
            it = c_.erase(it);
        else
            ++it;
    }
}

LaurentSeries LaurentSeries::zero(const AlgebraPtr& a, long first_unknown) {
    return LaurentSeries(a, {}, first_unknown);
}

LaurentSeries LaurentSeries::constant(const RingElement& c) {
    std::map<long, RingElement> m;
    if (!c.is_zero()) m.emplace(0, c);
    return LaurentSeries(c.algebra(), std::move(m));
}

LaurentSeries LaurentSeries::monomial(const RingElement& c, long k) {
    std::map<long, RingElement> m;
    if (!c.is_zero()) m.emplace(k, c);
    return LaurentSeries(c.algebra(), std::move(m));
}

RingElement LaurentSeries::coeff(long k) const {
    if (k >= first_unknown_)
        throw PrecisionTooLow("coefficient of z^" + std::to_string(k) +
                              " is beyond the precision window");
    auto it = c_.find(k);
    return it == c_.end() ? RingElement::zero(alg_) : it->second;
}

bool LaurentSeries::is_unit() const {
    for (const auto& [k, v] : c_)
        if (!v.residue_is_zero()) return true;
    return false;
}

long LaurentSeries::valuation() const {
    for (const auto& [k, v] : c_)
        if (!v.residue_is_zero()) return k;
    throw NotAUnit("series has no visible residue part");
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& [k, v] : r.c_) v = -v;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    if (!a.alg_->same_as(*b.alg_)) throw AlgebraMismatch("series algebra mismatch");
    long f = std::min(a.first_unknown_, b.first_unknown_);
    std::map<long, RingElement> c;
    for (const auto& [k, v] : a.c_)
        if (k < f) c.emplace(k, v);
    for (const auto& [k, v] : b.c_) {
        if (k >= f) continue;
        auto [it, fresh] = c.emplace(k, v);
        if (!fresh) it->second += v;
    }
    return LaurentSeries(a.alg_, std::move(c), f);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (!a.alg_->same_as(*b.alg_)) throw AlgebraMismatch("series algebra mismatch");
    // zero-to-precision operands keep the window rule with m = first_unknown
    long ma = a.min_index(), mb = b.min_index();
    long f = clamp_exact(std::min(add_win(ma, b.first_unknown_), add_win(mb, a.first_unknown_)));
    std::map<long, RingElement> c;
    for (const auto& [i, u] : a.c_)
        for (const auto& [j, v] : b.c_) {
            if (i + j >= f) continue;
            RingElement prod = u * v;
            if (prod.is_zero()) continue;
            auto [it, fresh] = c.emplace(i + j, prod);
            if (!fresh) it->second += prod;
        }
    return LaurentSeries(a.alg_, std::move(c), f);
}

LaurentSeries LaurentSeries::operator*(const RingElement& s) const {
    LaurentSeries r(alg_, {}, first_unknown_);
    for (const auto& [k, v] : c_) {
        RingElement prod = v * s;
        if (!prod.is_zero()) r.c_.emplace(k, prod);
    }
    return r;
}

LaurentSeries LaurentSeries::shifted(long k) const {
    LaurentSeries r(alg_, {}, clamp_exact(is_exact() ? kExact : first_unknown_ + k));
    for (const auto& [i, v] : c_) r.c_.emplace(i + k, v);
    return r;
}

LaurentSeries LaurentSeries::truncated(long new_first_unknown) const {
    if (new_first_unknown > first_unknown_)
        throw PrecisionTooLow("cannot extend a precision window");
    LaurentSeries r(alg_, {}, new_first_unknown);
    for (const auto& [k, v] : c_)
        if (k < new_first_unknown) r.c_.emplace(k, v);
    return r;
}

LaurentSeries LaurentSeries::inverse(long target_first_unknown) const {
    if (!is_unit()) throw NotAUnit("inverse of a non-unit series");
    const long v = valuation();
    const int e = alg_->nilpotency_index();
    const bool exact_in = is_exact();
    const long head_gap = v - min_index();  // depth of the nilpotent head

    // residue lift and nilpotent remainder
    std::map<long, RingElement> resc, nilc;
    for (const auto& [k, c] : c_) {
        RingElement r = c.residue_lift();
        if (!r.is_zero()) resc.emplace(k, r);
        RingElement n = c - r;
        if (!n.is_zero()) nilc.emplace(k, n);
    }

    bool exact_out = false;
    if (exact_in && target_first_unknown == kNoTarget) {
        if (resc.size() != 1)
            throw PrecisionTooLow(
                "inverse of an exact non-monomial series needs a target precision");
        exact_out = true;  // monomial residue: geometric corrections terminate
    }

    // width of the residue inverse, counted from z^{-v}; generous enough that
    // the nilpotent-head corrections still reach the target
    long wi;
    if (exact_out) {
        wi = 1;
    } else if (exact_in) {
        wi = (target_first_unknown + v) + (e - 1) * std::max(0L, head_gap) + 1;
        wi = std::max(wi, 1L);
    } else {
        wi = first_unknown_ - v;
    }
    std::vector<RingElement> cpow(static_cast<size_t>(wi), RingElement::zero(alg_));
    for (const auto& [k, c] : resc) {
        long idx = k - v;
        if (idx >= 0 && idx < wi) cpow[idx] = c;
    }
    RingElement c0inv = cpow[0].inverse();
    std::vector<RingElement> b(static_cast<size_t>(wi), RingElement::zero(alg_));
    b[0] = c0inv;
    for (long j = 1; j < wi; ++j) {
        RingElement acc = RingElement::zero(alg_);
        for (long k = 1; k <= j; ++k) {
            if (cpow[k].is_zero()) continue;
            acc += cpow[k] * b[j - k];
        }
        b[j] = -(c0inv * acc);
    }
    std::map<long, RingElement> ibarc;
    for (long j = 0; j < wi; ++j)
        if (!b[j].is_zero()) ibarc.emplace(j - v, b[j]);
    LaurentSeries ibar(alg_, std::move(ibarc), exact_out ? kExact : -v + wi);

    LaurentSeries result = ibar;
    if (!nilc.empty()) {
        LaurentSeries unil(alg_, std::move(nilc), first_unknown_);
        LaurentSeries x = ibar * unil;
        LaurentSeries acc = LaurentSeries::constant(RingElement::one(alg_));
        LaurentSeries cur = acc;
        for (int k = 1; k < e; ++k) {
            cur = cur * x;
            if (cur.is_zero_to_precision() && cur.is_exact()) break;
            acc = (k % 2 == 1) ? acc - cur : acc + cur;
        }
        result = acc * ibar;
    }
    if (target_first_unknown != kNoTarget) {
        if (result.first_unknown() < target_first_unknown)
            throw PrecisionTooLow("inverse cannot reach the requested precision");
        return result.truncated(target_first_unknown);
    }
    return result;
}

LaurentSeries LaurentSeries::derivative() const {
    LaurentSeries r(alg_, {}, is_exact() ? kExact : first_unknown_ - 1);
    for (const auto& [k, v] : c_) {
        if (k == 0) continue;
        RingElement d = v * RingElement::from_integer(alg_, k);
        if (!d.is_zero()) r.c_.emplace(k - 1, d);
    }
    return r;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    return first_unknown_ == o.first_unknown_ && c_ == o.c_;
}

bool LaurentSeries::agree(const LaurentSeries& a, const LaurentSeries& b) {
    long f = std::min(a.first_unknown_, b.first_unknown_);
    for (const auto& [k, v] : a.c_)
        if (k < f && (b.c_.find(k) == b.c_.end() || b.c_.at(k) != v)) return false;
    for (const auto& [k, v] : b.c_)
        if (k < f && a.c_.find(k) == a.c_.end()) return false;
    return true;
}

std::string LaurentSeries::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : c_) {
        std::string cs = v.to_string();
        bool composite = cs.find(' ') != std::string::npos;
        std::string term;
        if (k == 0) {
            term = composite ? "(" + cs + ")" : cs;
        } else {
            std::string zp = "z";
            if (k != 1) zp += "^" + std::to_string(k);
            term = cs == "1" ? zp : (composite ? "(" + cs + ")" : cs) + "*" + zp;
        }
        out += first ? term : " + " + term;
        first = false;
    }
    return out;
}

RingElement residue(const LaurentSeries& u) { return u.coeff(-1); }

RingElement delta(long s, const LaurentSeries& f) {
    if (!f.is_unit()) throw NotAUnit("delta of a non-unit");
    LaurentSeries fd = f.derivative();
    long want = -1 - s;  // res(z^s g) = coefficient of g at -1-s
    LaurentSeries finv = f.is_exact()
                             ? f.inverse(want - std::min(fd.min_index(), 0L) + 2)
                             : f.inverse();
    LaurentSeries g = fd * finv;
    return g.coeff(want);
}

bool CCDecomposition::equivalent(const CCDecomposition& o) const {
    if (n != o.n || lambda != o.lambda || neg != o.neg) return false;
    size_t la = pos.size(), lb = o.pos.size();
    while (la > 0 && pos[la - 1].is_zero()) --la;
    while (lb > 0 && o.pos[lb - 1].is_zero()) --lb;
    if (la != lb) return false;
    for (size_t i = 0; i < la; ++i)
        if (pos[i] != o.pos[i]) return false;
    return true;
}

std::string CCDecomposition::to_string() const {
    std::string s = "n=" + std::to_string(n) + " lambda=" + lambda.to_string() + " neg=[";
    bool first = true;
    for (const auto& [i, a] : neg) {
        if (!first) s += ", ";
        s += "a_-" + std::to_string(i) + "=" + a.to_string();
        first = false;
    }
    s += "] pos=[";
    size_t len = pos.size();
    while (len > 0 && pos[len - 1].is_zero()) --len;
    for (size_t i = 0; i < len; ++i) {
        if (i) s += ", ";
        s += pos[i].to_string();
    }
    return s + "]";
}

long required_precision(const LaurentSeries& u, const LaurentSeries& w) {
    long n = u.valuation(), m = w.valuation();
    long l = n - u.min_index(), h = m - w.min_index();
    long e = u.algebra()->nilpotency_index();
    // (e-1)(T_l + T_h) covers the window erosion of clearing nilpotent tails,
    // l + h + 1 the factor count, |n| + |m| the inversion shifts
    long tl = l * (l + 1) / 2, th = h * (h + 1) / 2;
    return (e - 1) * (tl + th) + l + h + std::labs(n) + std::labs(m) + 1;
}

CCDecomposition cc_decompose(const LaurentSeries& u, long pos_limit) {
    if (!u.is_unit()) throw NotAUnit("decomposition of a non-unit");
    const AlgebraPtr& alg = u.algebra();
    const int e = alg->nilpotency_index();
    const long v = u.valuation();
    if (u.is_exact() && pos_limit < 0)
        throw PrecisionTooLow("decomposition of an exact series needs a positive-part limit");

    LaurentSeries w = u.shifted(-v);
    CCDecomposition d;
    d.n = v;

    // clear negative exponents: each pass pushes the offending tail one level
    // deeper into the nilradical filtration
    long span = v - u.min_index();
    // each pass pushes one (index, depth) pair deeper; indices can reach
    // span*(e-1) through the inverse-factor tails
    long max_pass = static_cast<long>(e) * e * (span + 2) + 8;
    for (long pass = 0; pass <= max_pass; ++pass) {
        // residual = w / prod(1 - a_{-i} z^{-i})
        LaurentSeries r = w;
        for (const auto& [i, a] : d.neg) {
            // (1 - a z^-i)^{-1} = sum a^k z^{-ik}, finite since a is nilpotent
            std::map<long, RingElement> inv{{0, RingElement::one(alg)}};
            RingElement pw = a;
            long k = 1;
            while (!pw.is_zero()) {
                inv.emplace(-i * k, pw);
                pw *= a;
                ++k;
            }
            r = r * LaurentSeries(alg, std::move(inv));
        }
        long lead = r.min_index();
        if (lead >= 0 || r.is_zero_to_precision()) {
            // negatives gone; read lambda and strip positive factors
            d.lambda = r.coeff(0);
            long avail = r.first_unknown() - 1;  // positive coefficients determined
            long len = pos_limit >= 0 ? pos_limit : std::max(0L, avail);
            if (!r.is_exact() && len > avail)
                throw PrecisionTooLow("window too small for the requested positive part");
            RingElement linv = d.lambda.inverse();
            for (long i = 1; i <= len; ++i) {
                RingElement ai = -(r.coeff(i) * linv);
                d.pos.push_back(ai);
                if (ai.is_zero()) continue;
                // divide by (1 - a_i z^i): multiply by the geometric series,
                // truncated just past the coefficients still to be read
                std::map<long, RingElement> geo{{0, RingElement::one(alg)}};
                RingElement pw = ai;
                for (long k = i; k <= len; k += i) {
                    geo.emplace(k, pw);
                    pw *= ai;
                }
                r = r * LaurentSeries(alg, std::move(geo), len + 1);
            }
            return d;
        }
        if (pass == max_pass)
            throw Error("negative-tail clearing failed to terminate");
        RingElement c = r.coeff(lead);
        RingElement r0 = r.coeff(0);
        if (!r0.is_unit()) throw Error("internal: residual lost its unit constant term");
        long i = -lead;
        RingElement delta = -(c * r0.inverse());
        if (!delta.is_nilpotent()) throw Error("internal: negative-tail correction not nilpotent");
        auto it = d.neg.find(i);
        if (it == d.neg.end())
            d.neg.emplace(i, delta);
        else {
            it->second += delta;
            if (it->second.is_zero()) d.neg.erase(it);
        }
    }
    throw Error("negative-tail clearing failed to terminate");
}

LaurentSeries cc_recompose(const CCDecomposition& d, long width) {
    const AlgebraPtr& alg = d.lambda.algebra();
    LaurentSeries r = LaurentSeries::monomial(d.lambda, d.n);
    for (const auto& [i, a] : d.neg) {
        std::map<long, RingElement> f{{0, RingElement::one(alg)}};
        if (!a.is_zero()) f.emplace(-i, -a);
        r = r * LaurentSeries(alg, std::move(f));
    }
    for (size_t i = 0; i < d.pos.size(); ++i) {
        if (d.pos[i].is_zero()) continue;
        std::map<long, RingElement> f{{0, RingElement::one(alg)}};
        f.emplace(static_cast<long>(i + 1), -d.pos[i]);
        r = r * LaurentSeries(alg, std::move(f));
    }
    if (width >= 0) r = r.truncated(d.n + width);
    return r;
}

}  // namespace ccsym
