#ifndef CCSYM_CURVE_HPP
#define CCSYM_CURVE_HPP

#include <string>
#include <vector>

#include "ccsym/laurent.hpp"
#include "ccsym/poly.hpp"
#include "ccsym/symbols.hpp"

namespace ccsym {

/// A closed point of P^1 over F_q: a monic irreducible polynomial, or the
/// point at infinity (degree 1).
class ClosedPoint {
  public:
    static ClosedPoint at_infinity();
    /// pi must be monic irreducible over a finite field algebra (e = 1).
    static ClosedPoint finite(Polynomial pi);

    bool is_infinity() const { return inf_; }
    int degree() const;
    const Polynomial& pi() const;

    static int compare(const ClosedPoint& a, const ClosedPoint& b);
    bool operator==(const ClosedPoint& o) const { return compare(*this, o) == 0; }
    bool operator!=(const ClosedPoint& o) const { return !(*this == o); }
    std::string to_string() const;

  private:
    ClosedPoint() : inf_(true) {}
    explicit ClosedPoint(Polynomial pi);
    bool inf_;
    std::vector<Polynomial> pi_;  // empty for infinity
};

/// An element of F_q(t) (x) B as a numerator/denominator pair over
/// B = F_q[eps]/(eps^e). The denominator's reduction must be nonzero; the
/// function is a unit iff the numerator's reduction is nonzero too.
class RationalFunction {
  public:
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction from_poly(Polynomial num);

    const AlgebraPtr& algebra() const { return num_.algebra(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_unit() const;

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    RationalFunction inverse() const;
    std::string to_string() const;

  private:
    Polynomial num_, den_;
};

/// All finite points dividing any eps-coordinate of a numerator or
/// denominator of f or g, plus infinity; sorted, infinity last. A superset of
/// the points with nontrivial symbol.
std::vector<ClosedPoint> support(const RationalFunction& f, const RationalFunction& g);

/// k(p) (x) B (the coefficient algebra of local expansions at p).
AlgebraPtr local_algebra(const AlgebraPtr& B, const ClosedPoint& p);

/// Expansion in k(p)((z)) (x) B: t = alpha + z at a finite point (alpha the
/// class of t), t = 1/z at infinity. `width` counts known coefficients from
/// the valuation.
LaurentSeries local_expand(const RationalFunction& f, const ClosedPoint& p, long width);

/// phi-composed symbol at p, at automatically chosen precision.
SymbolValue local_symbol(const RationalFunction& f, const RationalFunction& g,
                         const ClosedPoint& p, const Character& phi = {1});

struct LocalValue {
    ClosedPoint point;
    SymbolValue value;
};

struct ReciprocityResult {
    SymbolValue product;
    std::vector<LocalValue> locals;
};

/// Local symbols over the support and their product (= 1 by the reciprocity
/// law; returned for the caller to check, never forced).
ReciprocityResult reciprocity_product(const RationalFunction& f, const RationalFunction& g,
                                      const Character& phi = {1});

/// Norm-residue variant: every local value lies in mu_m; m must divide q-1.
ReciprocityResult hilbert_reciprocity(const RationalFunction& f, const RationalFunction& g,
                                      long m);

}  // namespace ccsym

#endif
