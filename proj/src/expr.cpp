#include "ccsym/expr.hpp"

#include <cctype>
#include <optional>

namespace ccsym {

namespace {

// fraction of exact Laurent polynomials in one formal variable
struct Frac {
    LaurentSeries num, den;
};

class Parser {
  public:
    Parser(AlgebraPtr alg, const std::string& src, char var)
        : alg_(std::move(alg)), s_(src), var_(var) {}

    Frac run() {
        Frac v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

  private:
    AlgebraPtr alg_;
    const std::string& s_;
    char var_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Frac one() const {
        auto c = LaurentSeries::constant(RingElement::one(alg_));
        return {c, c};
    }

    Frac expr() {
        Frac v = term();
        while (true) {
            if (eat('+')) {
                Frac w = term();
                v = {v.num * w.den + w.num * v.den, v.den * w.den};
            } else if (eat('-')) {
                Frac w = term();
                v = {v.num * w.den - w.num * v.den, v.den * w.den};
            } else {
                return v;
            }
        }
    }

    Frac term() {
        Frac v = factor();
        while (true) {
            if (eat('*')) {
                Frac w = factor();
                v = {v.num * w.num, v.den * w.den};
            } else if (eat('/')) {
                size_t at = pos_;
                Frac w = factor();
                if (w.num.is_zero_to_precision()) throw ParseError("division by zero", at);
                v = {v.num * w.den, v.den * w.num};
            } else {
                return v;
            }
        }
    }

    Frac factor() {
        if (eat('-')) {
            Frac v = factor();
            return {-v.num, v.den};
        }
        Frac v = primary();
        skip_ws();
        if (eat('^')) {
            size_t at = pos_;
            long k = integer();
            Frac r = one();
            Frac base = v;
            if (k < 0) {
                if (v.num.is_zero_to_precision()) throw ParseError("negative power of zero", at);
                base = {v.den, v.num};
            }
            for (long i = 0; i < std::labs(k); ++i) r = {r.num * base.num, r.den * base.den};
            return r;
        }
        return v;
    }

    long integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected an integer", pos_);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000'000L) throw ParseError("integer literal too large", pos_);
            ++pos_;
        }
        return neg ? -v : v;
    }

    Frac primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer();
            return {LaurentSeries::constant(RingElement::from_integer(alg_, v)),
                    LaurentSeries::constant(RingElement::one(alg_))};
        }
        if (c == '(') {
            ++pos_;
            Frac v = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        auto constant = [&](RingElement el) -> Frac {
            return {LaurentSeries::constant(std::move(el)),
                    LaurentSeries::constant(RingElement::one(alg_))};
        };
        if (c == 'z' || c == 't') {
            if (c != var_)
                throw ParseError(
                    std::string("the variable '") + c + "' is not available in this context",
                    pos_);
            ++pos_;
            return {LaurentSeries::monomial(RingElement::one(alg_), 1),
                    LaurentSeries::constant(RingElement::one(alg_))};
        }
        if (c == 'e') {
            ++pos_;
            if (alg_->nilpotency_index() < 2)
                throw ParseError("the algebra has no nilpotent generator 'e'", pos_ - 1);
            return constant(RingElement::epsilon(alg_));
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            if (alg_->field_dim() == 1)
                throw ParseError("the coefficient field has no generator", pos_ - 1);
            // the sole generator is written x; in a two-level tower y names
            // the relative one
            if (c == 'y' || (alg_->field()->is_relative() && alg_->base_field()->degree() == 1)) {
                if (!alg_->field()->is_relative())
                    throw ParseError("no relative generator 'y' here", pos_ - 1);
                return constant(RingElement::point_generator(alg_));
            }
            return constant(RingElement::field_generator(alg_));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

// turn an exact fraction into a series with the requested window semantics
LaurentSeries finalize_series(const Frac& f, std::optional<long> prec, long default_prec) {
    bool trivial_den = f.den.known_coeffs().size() == 1 && f.den.min_index() == 0 &&
                       f.den.coeff(0).is_one();
    LaurentSeries u = f.num;
    if (!trivial_den) {
        if (!f.den.is_unit()) throw NotAUnit("denominator is not a unit");
        long residue_terms = 0;
        for (const auto& [k, c] : f.den.known_coeffs())
            if (!c.residue_is_zero()) ++residue_terms;
        if (residue_terms == 1 && !prec) {
            u = f.num * f.den.inverse();  // exact
        } else {
            if (f.num.is_zero_to_precision()) return f.num;
            long P = prec ? *prec : default_prec;
            long v = f.num.valuation() - f.den.valuation();
            LaurentSeries q = f.num * f.den.inverse(v + P - f.num.min_index());
            return q.truncated(q.min_index() + P);
        }
    }
    if (prec) {
        if (u.is_zero_to_precision()) return LaurentSeries::zero(u.algebra(), *prec);
        return u.truncated(u.min_index() + *prec);
    }
    return u;
}

long long parse_positive(const std::string& s, size_t& pos) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw ParseError("expected a number", pos);
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > (1LL << 40)) throw ParseError("number too large", pos);
        ++pos;
    }
    return v;
}

}  // namespace

FieldPtr parse_field(const std::string& s) {
    size_t pos = 0;
    if (s.empty()) throw ParseError("empty field descriptor", 0);
    if (s[0] == 'Q') {
        if (s.size() != 1) throw ParseError("unexpected input after Q", 1);
        return FieldDescriptor::rationals();
    }
    if (s[0] != 'F') throw ParseError("field descriptors start with F or Q", 0);
    pos = 1;
    long long q = parse_positive(s, pos);
    if (q < 2) throw ParseError("field size must be at least 2", 1);
    long p = 0;
    for (long c = 2; static_cast<long long>(c) * c <= q; ++c)
        if (q % c == 0) {
            p = c;
            break;
        }
    if (p == 0) p = static_cast<long>(q);
    int d = 0;
    long long r = q;
    while (r > 1) {
        if (r % p != 0) throw ParseError("field size is not a prime power", 1);
        r /= p;
        ++d;
    }
    if (pos == s.size()) return FieldDescriptor::extension(p, d);
    if (s[pos] != ':') throw ParseError("expected ':' before the modulus", pos);
    // modulus: polynomial in x over F_p; reuse the parser with x as the variable
    std::string rewritten = s.substr(pos + 1);
    for (auto& ch : rewritten) {
        if (ch == 'z' || ch == 't' || ch == 'e' || ch == 'y')
            throw ParseError("modulus must be a polynomial in x", pos + 1);
        if (ch == 'x') ch = 'z';
    }
    auto fp = AlgebraDescriptor::make(FieldDescriptor::prime(p), 1);
    Frac f = Parser(fp, rewritten, 'z').run();
    if (!(f.den.known_coeffs().size() == 1 && f.den.min_index() == 0 && f.den.coeff(0).is_one()))
        throw ParseError("modulus must be a polynomial", pos + 1);
    if (f.num.is_zero_to_precision() || f.num.min_index() < 0)
        throw ParseError("modulus must be a monic polynomial", pos + 1);
    long deg = 0;
    for (const auto& [k, c] : f.num.known_coeffs()) deg = std::max(deg, k);
    if (deg != d) throw ParseError("modulus degree does not match the field size", pos + 1);
    std::vector<long> coeffs;
    for (long k = 0; k <= deg; ++k) {
        RingElement ck = f.num.coeff(k);
        coeffs.push_back(ck.coords().empty() ? 0 : ck.coords()[0]);
    }
    return FieldDescriptor::extension(p, coeffs);
}

AlgebraPtr parse_algebra(const std::string& s) {
    size_t br = s.find('[');
    if (br == std::string::npos) return AlgebraDescriptor::make(parse_field(s), 1);
    std::string suffix = s.substr(br);
    if (suffix.size() < 5 || suffix.substr(0, 3) != "[e^" || suffix.back() != ']')
        throw ParseError("algebra suffix must look like [e^2]", br);
    size_t pos = 3;
    long long e = parse_positive(suffix, pos);
    if (pos + 1 != suffix.size()) throw ParseError("malformed algebra suffix", br + pos);
    if (e < 1 || e > 12) throw ParseError("nilpotency index out of range", br + 3);
    return AlgebraDescriptor::make(parse_field(s.substr(0, br)), static_cast<int>(e));
}

RingElement parse_element(const AlgebraPtr& a, const std::string& s) {
    Frac f = Parser(a, s, '\0').run();
    LaurentSeries u = finalize_series(f, std::nullopt, 16);
    if (u.is_zero_to_precision() && u.is_exact()) return RingElement::zero(a);
    if (!u.is_exact() || u.min_index() != 0 || u.known_coeffs().size() != 1)
        throw ParseError("expected a constant expression", 0);
    return u.coeff(0);
}

LaurentSeries parse_series(const AlgebraPtr& a, const std::string& s, long default_prec) {
    std::optional<long> prec;
    std::string body = s;
    size_t at = s.rfind('@');
    if (at != std::string::npos) {
        std::string suffix = s.substr(at);
        if (suffix.rfind("@prec=", 0) != 0) throw ParseError("expected @prec=N", at);
        size_t pos = 6;
        long long v = parse_positive(suffix, pos);
        if (pos != suffix.size()) throw ParseError("malformed @prec suffix", at + pos);
        if (v < 1 || v > 4096) throw ParseError("precision out of range", at + 6);
        prec = static_cast<long>(v);
        body = s.substr(0, at);
    }
    Frac f = Parser(a, body, 'z').run();
    return finalize_series(f, prec, default_prec);
}

RationalFunction parse_rational(const AlgebraPtr& a, const std::string& s) {
    Frac f = Parser(a, s, 't').run();
    if (f.num.is_zero_to_precision())
        return RationalFunction(Polynomial::zero(a), Polynomial::one(a));
    // clear negative powers of t
    long shift = std::min({f.num.min_index(), f.den.min_index(), 0L});
    auto to_poly = [&](const LaurentSeries& u) {
        std::vector<RingElement> c;
        long top = -1;
        for (const auto& [k, v] : u.known_coeffs()) top = std::max(top, k - shift);
        c.assign(top + 1, RingElement::zero(a));
        for (const auto& [k, v] : u.known_coeffs()) c[k - shift] = v;
        return Polynomial(a, std::move(c));
    };
    return RationalFunction(to_poly(f.num), to_poly(f.den));
}

}  // namespace ccsym
