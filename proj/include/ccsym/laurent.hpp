#ifndef CCSYM_LAURENT_HPP
#define CCSYM_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "ccsym/algebra.hpp"

namespace ccsym {

/// Formal Laurent series with explicit precision tracking. A series knows its
/// coefficients exactly for every exponent below first_unknown(); exponents
/// at or above it are undetermined. first_unknown() == kExact marks a series
/// known everywhere (a Laurent polynomial). Operations propagate windows
/// conservatively and never silently extend knowledge.
class LaurentSeries {
  public:
    static constexpr long kExact = 1L << 40;

    LaurentSeries(AlgebraPtr alg, std::map<long, RingElement> coeffs, long first_unknown = kExact);
    static LaurentSeries zero(const AlgebraPtr& a, long first_unknown = kExact);
    static LaurentSeries constant(const RingElement& c);
    static LaurentSeries monomial(const RingElement& c, long k);

    const AlgebraPtr& algebra() const { return alg_; }
    long first_unknown() const { return first_unknown_; }
    bool is_exact() const { return first_unknown_ == kExact; }
    /// Lowest exponent with a nonzero (known) coefficient; first_unknown()
    /// when the series is zero to its precision.
    long min_index() const { return c_.empty() ? first_unknown_ : c_.begin()->first; }
    bool is_zero_to_precision() const { return c_.empty(); }
    const std::map<long, RingElement>& known_coeffs() const { return c_; }

    /// Coefficient of z^k. Throws PrecisionTooLow for k >= first_unknown().
    RingElement coeff(long k) const;

    /// true iff the image in kappa((z)) is visibly nonzero.
    bool is_unit() const;
    /// z-order of the reduction modulo the nilradical. Throws NotAUnit when
    /// no residue coefficient is visible.
    long valuation() const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator*(const RingElement& c) const;
    /// Multiplication by z^k.
    LaurentSeries shifted(long k) const;
    /// Restrict knowledge to exponents < new_first_unknown.
    LaurentSeries truncated(long new_first_unknown) const;

    /// Multiplicative inverse. For finite-precision inputs the window follows
    /// the propagation rules; target_first_unknown may lower it. Exact inputs
    /// need a target unless the residue part is a single monomial (then the
    /// inverse is again exact).
    LaurentSeries inverse(long target_first_unknown = kNoTarget) const;

    LaurentSeries derivative() const;

    /// Structural equality (same window, same known coefficients).
    bool operator==(const LaurentSeries& o) const;
    bool operator!=(const LaurentSeries& o) const { return !(*this == o); }
    /// Equality of coefficients on the overlap of the known windows.
    static bool agree(const LaurentSeries& a, const LaurentSeries& b);

    std::string to_string() const;

    static constexpr long kNoTarget = -(1L << 41);

  private:
    AlgebraPtr alg_;
    std::map<long, RingElement> c_;
    long first_unknown_;
    void prune();
};

/// Coefficient of z^{-1}. Throws PrecisionTooLow when -1 is not known.
RingElement residue(const LaurentSeries& u);

/// delta_s(f) = res(z^s f'/f).
RingElement delta(long s, const LaurentSeries& f);

/// The canonical unit factorization u = lambda z^n prod(1 - a_{-i} z^{-i})
/// prod(1 - a_i z^i). `neg` holds the (nilpotent) a_{-i} keyed by i >= 1;
/// `pos` holds a_1..a_L for the window the source determined.
struct CCDecomposition {
    long n = 0;
    RingElement lambda;
    std::map<long, RingElement> neg;
    std::vector<RingElement> pos;

    /// Equality ignoring trailing zero pos entries.
    bool equivalent(const CCDecomposition& o) const;
    std::string to_string() const;
};

/// Width bound (counted from the valuation) sufficient for every symbol
/// formula on the pair: covers the duality-pairing truncation and the window
/// erosion caused by nilpotent negative tails.
long required_precision(const LaurentSeries& u, const LaurentSeries& w);

/// Decompose a unit. pos_limit bounds the number of positive coefficients to
/// extract; by default everything the window determines (exact inputs then
/// need an explicit limit). Throws PrecisionTooLow / NotAUnit.
CCDecomposition cc_decompose(const LaurentSeries& u, long pos_limit = -1);

/// Expand the factorization. width counts coefficients from z^n upward;
/// width = -1 expands exactly (the finite data is taken literally).
LaurentSeries cc_recompose(const CCDecomposition& d, long width = -1);

}  // namespace ccsym

#endif
