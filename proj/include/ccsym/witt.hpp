#ifndef CCSYM_WITT_HPP
#define CCSYM_WITT_HPP

#include <vector>

#include "ccsym/algebra.hpp"

namespace ccsym {

/// Vector (a_1, ..., a_n) carrying the additive law
/// c_i = a_i + b_i + sum_{h+k=i} a_h b_k.
class WittVector {
  public:
    WittVector(AlgebraPtr alg, std::vector<RingElement> coords);
    static WittVector zero(const AlgebraPtr& a, int n);

    int length() const { return static_cast<int>(a_.size()); }
    const AlgebraPtr& algebra() const { return alg_; }
    /// 1-based component a_i.
    const RingElement& coord(int i) const;
    const std::vector<RingElement>& coords() const { return a_; }

    bool operator==(const WittVector& o) const { return a_ == o.a_; }
    bool operator!=(const WittVector& o) const { return !(*this == o); }
    std::string to_string() const;

  private:
    AlgebraPtr alg_;
    std::vector<RingElement> a_;
};

/// Big-Witt coordinates (abar_1, ..., abar_n); addition is transported from
/// series multiplication through bigwitt_to_series.
class BigWittVector {
  public:
    BigWittVector(AlgebraPtr alg, std::vector<RingElement> coords);
    static BigWittVector zero(const AlgebraPtr& a, int n);

    int length() const { return static_cast<int>(a_.size()); }
    const AlgebraPtr& algebra() const { return alg_; }
    const RingElement& coord(int i) const;
    const std::vector<RingElement>& coords() const { return a_; }

    bool operator==(const BigWittVector& o) const { return a_ == o.a_; }
    bool operator!=(const BigWittVector& o) const { return !(*this == o); }
    std::string to_string() const;

  private:
    AlgebraPtr alg_;
    std::vector<RingElement> a_;
};

/// 1 + a_1 t + ... + a_n t^n, multiplied modulo t^{n+1}.
class TruncUnitSeries {
  public:
    TruncUnitSeries(AlgebraPtr alg, std::vector<RingElement> coeffs);
    static TruncUnitSeries one(const AlgebraPtr& a, int n);

    int order() const { return static_cast<int>(a_.size()); }
    const AlgebraPtr& algebra() const { return alg_; }
    /// Coefficient of t^i, i in [1, n].
    const RingElement& coeff(int i) const;
    const std::vector<RingElement>& coeffs() const { return a_; }

    friend TruncUnitSeries operator*(const TruncUnitSeries& a, const TruncUnitSeries& b);
    TruncUnitSeries inverse() const;

    bool operator==(const TruncUnitSeries& o) const { return a_ == o.a_; }
    bool operator!=(const TruncUnitSeries& o) const { return !(*this == o); }
    std::string to_string() const;

  private:
    AlgebraPtr alg_;
    std::vector<RingElement> a_;
};

WittVector witt_add(const WittVector& x, const WittVector& y);
WittVector witt_neg(const WittVector& x);

/// f_h(x, y) = sum_{i+j=h, i,j>=1} x_i y_j on vectors of length h-1.
/// Satisfies the 2-cocycle identity with witt_add as the addition.
RingElement cocycle_f(int h, const WittVector& x, const WittVector& y);

/// x -> 1 + sum x_h t^h: group isomorphism witt_add -> series multiplication.
TruncUnitSeries witt_to_series(const WittVector& x);
WittVector series_to_witt(const TruncUnitSeries& s);

/// b_j = sum_{i_1<...<i_k, i_1+...+i_k=j} (-1)^k abar_{i_1}...abar_{i_k}
/// (literal subset enumeration).
WittVector bigwitt_to_witt(const BigWittVector& a);
/// prod_{i=1}^n (1 - abar_i t^i) mod t^{n+1}.
TruncUnitSeries bigwitt_to_series(const BigWittVector& a);
/// Inverse of bigwitt_to_series (greedy peeling of (1 - abar_i t^i) factors).
BigWittVector series_to_bigwitt(const TruncUnitSeries& s);
/// Addition transported through bigwitt_to_series.
BigWittVector bigwitt_add(const BigWittVector& x, const BigWittVector& y);

/// Normalizes a unit of (K[tau]/(tau^n)) (x) B by its constant term and reads
/// off the Witt coordinates of length n-1; constant on scalar cosets.
/// `u` holds the coefficients of tau^0..tau^{n-1}.
WittVector units_quotient_to_witt(const std::vector<RingElement>& u);

}  // namespace ccsym

#endif
