#ifndef CCSYM_SYMBOLS_HPP
#define CCSYM_SYMBOLS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccsym/algebra.hpp"
#include "ccsym/laurent.hpp"

namespace ccsym {

/// A unit symbol value, optionally tagged as a member of mu_m.
class SymbolValue {
  public:
    explicit SymbolValue(RingElement v, std::optional<long> mu_order = std::nullopt);

    const RingElement& value() const { return v_; }
    std::optional<long> mu_order() const { return mu_; }

    bool operator==(const SymbolValue& o) const { return v_ == o.v_; }
    bool operator!=(const SymbolValue& o) const { return !(*this == o); }
    std::string to_string() const { return v_.to_string(); }

  private:
    RingElement v_;
    std::optional<long> mu_;
};

/// phi_N: lambda -> lambda^N.
struct Character {
    long N = 1;
    RingElement apply(const RingElement& x) const { return x.pow(N); }
};

/// The Gamma_+/Gamma_- pairing: prod_{i,j} (1 - a_i^{j/(i,j)} b_{-j}^{i/(i,j)})^{(i,j)}.
/// pos[i-1] = a_i; neg[j-1] = b_{-j}, each b_{-j} nilpotent (NotNilpotent otherwise).
SymbolValue duality_pairing(const std::vector<RingElement>& pos,
                            const std::vector<RingElement>& neg);

/// The symbol via the closed product formula:
/// (-1)^{nm} [lambda^m DP(pos_u, neg_w)] / [mu^n DP(pos_w, neg_u)].
SymbolValue cc_symbol(const LaurentSeries& u, const LaurentSeries& w);

/// Characteristic-0 form with logarithmic-derivative residues:
/// (-1)^{nm} [lambda^m exp(sum_i delta_{-i}(u) delta_i(w)/i)]
///         / [mu^n    exp(sum_i delta_i(u) delta_{-i}(w)/i)].
/// The delta sums are assigned so the value agrees with cc_symbol.
SymbolValue cc_symbol_residue(const LaurentSeries& u, const LaurentSeries& w);

/// Field-coefficient specialization (-1)^{v(f)v(g)} (f^{v(g)}/g^{v(f)})(0).
SymbolValue tame_symbol(const LaurentSeries& f, const LaurentSeries& g);

/// Closed-point form: (-1)^{nm deg_p} N_{k(p)/k}(unsigned fraction); lands in
/// the base algebra. deg_p must match the declared extension (1 = none).
SymbolValue norm_symbol(const LaurentSeries& u, const LaurentSeries& w, int deg_p);

/// phi(-1)^{nm deg_p} phi(N(fraction)).
SymbolValue phi_symbol(const LaurentSeries& u, const LaurentSeries& w, const Character& phi,
                       int deg_p);

/// Norm residue symbol: phi_N with N = #B^*/m, tagged as a mu_m member.
/// Requires m | q-1 for the base field F_q.
SymbolValue hilbert_symbol(const LaurentSeries& u, const LaurentSeries& w, long m);

/// Element of G_m x K^Theta x K-hat^Theta: alpha, the (n, positive) factor,
/// and the (unit, negative-nilpotent) factor.
struct HeisenbergElement {
    RingElement alpha;
    long n = 0;
    std::vector<RingElement> pos;   // a_1..a_L of prod (1 - a_i z^i)
    RingElement mu;
    std::map<long, RingElement> neg;  // j -> b_{-j}, nilpotent

    std::string to_string() const;
};

HeisenbergElement heisenberg_from_series(const LaurentSeries& u, long pos_limit = -1);
HeisenbergElement heisenberg_identity(const AlgebraPtr& a, long pos_len);
/// (alpha, f, g)(alpha', f', g') = (alpha alpha' chi(f', g), f f', g g') with
/// chi((n, pos), (mu, neg)) = mu^n / DP(pos, neg); the slot and inversion
/// convention is pinned by commutator agreement with cc_symbol at v = 0.
HeisenbergElement heisenberg_mul(const HeisenbergElement& x, const HeisenbergElement& y);
HeisenbergElement heisenberg_inverse(const HeisenbergElement& x);
SymbolValue heisenberg_commutator(const HeisenbergElement& x, const HeisenbergElement& y);

}  // namespace ccsym

#endif
