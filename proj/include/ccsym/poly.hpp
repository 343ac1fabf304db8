#ifndef CCSYM_POLY_HPP
#define CCSYM_POLY_HPP

#include <utility>
#include <vector>

#include "ccsym/algebra.hpp"

namespace ccsym {

/// Dense univariate polynomial over a coefficient algebra. The coefficient
/// list never stores a zero leading term; the zero polynomial is empty and
/// reports degree -1.
class Polynomial {
  public:
    explicit Polynomial(AlgebraPtr alg) : alg_(std::move(alg)) {}
    Polynomial(AlgebraPtr alg, std::vector<RingElement> coeffs);

    static Polynomial zero(const AlgebraPtr& a) { return Polynomial(a); }
    static Polynomial one(const AlgebraPtr& a);
    static Polynomial variable(const AlgebraPtr& a);  // t
    static Polynomial monomial(RingElement c, int k);
    static Polynomial constant(RingElement c);

    const AlgebraPtr& algebra() const { return alg_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_monic() const;
    RingElement coeff(long k) const;
    const RingElement& leading() const;
    const std::vector<RingElement>& coeffs() const { return c_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const RingElement& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Quotient/remainder; the divisor's leading coefficient must be a unit.
    static void divrem(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
    Polynomial operator/(const Polynomial& b) const;
    Polynomial operator%(const Polynomial& b) const;

    RingElement eval(const RingElement& x) const;
    Polynomial derivative() const;
    Polynomial pow(long k) const;
    /// Coefficients of p(alpha + z) as a plain list (Taylor coefficients via
    /// repeated synthetic division; no factorials involved).
    std::vector<RingElement> taylor_at(const RingElement& alpha) const;

    /// Divide by the leading unit.
    Polynomial monic() const;
    /// Image modulo the nilradical, over the e = 1 algebra.
    Polynomial residue_poly() const;
    /// eps-coordinate polynomials over the e = 1 algebra (length e).
    std::vector<Polynomial> coordinate_polys() const;
    /// Coefficient-wise embedding into a scalar extension of the algebra.
    Polynomial map_into(const AlgebraPtr& target) const;

    /// Total order for deterministic output: degree first, then coefficient
    /// tuples from the constant term up.
    static int compare(const Polynomial& a, const Polynomial& b);

    std::string to_string(const char* var = "t") const;

  private:
    void trim();
    AlgebraPtr alg_;
    std::vector<RingElement> c_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);  // field coefficients, monic result

/// Monic irreducible factors with multiplicities, sorted by (degree, then
/// coefficient order). The product of the factors times f's leading unit
/// equals f. Coefficients must lie in a finite field (e = 1).
std::vector<std::pair<Polynomial, int>> factor(const Polynomial& f);

bool is_irreducible(const Polynomial& f);

/// k(p) = base[y]/(pi) as a relative extension; pi must be monic irreducible
/// over the base field (verified).
FieldPtr relative_extension(const FieldPtr& base, const Polynomial& pi);
/// Same, skipping the irreducibility check (for factors produced by factor()).
FieldPtr relative_extension_trusted(const FieldPtr& base, const Polynomial& pi);
/// Canonical degree-r extension: deterministic smallest-coefficient modulus.
FieldPtr relative_extension_canonical(const FieldPtr& base, int r);

}  // namespace ccsym

#endif
