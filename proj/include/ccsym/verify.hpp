#ifndef CCSYM_VERIFY_HPP
#define CCSYM_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ccsym/algebra.hpp"
#include "ccsym/curve.hpp"
#include "ccsym/laurent.hpp"

namespace ccsym {

/// Deterministic splitmix64 generator; identical streams on every platform.
class Rng {
  public:
    explicit Rng(uint64_t seed) : s_(seed) {}
    uint64_t next() {
        s_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long below(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }

  private:
    uint64_t s_;
};

RingElement random_element(const AlgebraPtr& a, Rng& rng);
RingElement random_unit(const AlgebraPtr& a, Rng& rng);
RingElement random_nilpotent(const AlgebraPtr& a, Rng& rng);

/// Random unit Laurent series: valuation in [vlo, vhi], nilpotent
/// coefficients below the valuation (up to `neg_span` of them), unit leading
/// coefficient, `width` coefficients from the valuation up. With
/// `exact` the series is a Laurent polynomial supported on that range;
/// otherwise its window ends at valuation + width.
LaurentSeries random_unit_series(const AlgebraPtr& a, Rng& rng, long vlo, long vhi, long neg_span,
                                 long width, bool exact = false);

/// Random unit of F_q(t) (x) B: numerator and denominator of degree <= maxdeg
/// with visibly nonzero reductions.
RationalFunction random_rational_function(const AlgebraPtr& B, Rng& rng, int maxdeg);

/// Enumerate all elements of a finite algebra (throws when there are more
/// than `cap`).
std::vector<RingElement> all_elements(const AlgebraPtr& a, long long cap = 1 << 20);

/// One named verification suite run: deterministic for a fixed seed.
struct SuiteResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> failure_notes;
    bool ok() const { return failures == 0; }
};

SuiteResult verify_witt(uint64_t seed, long cases);
SuiteResult verify_decompose(uint64_t seed, long cases);
SuiteResult verify_axioms(uint64_t seed, long cases);
SuiteResult verify_residue_vs_product(uint64_t seed, long cases);
SuiteResult verify_reciprocity(uint64_t seed, long cases);

/// Suite registry for the CLI: witt | decompose | axioms | residue-vs-product
/// | reciprocity. Throws BadIndex for unknown names.
SuiteResult run_suite(const std::string& name, uint64_t seed, long cases);
std::vector<std::string> suite_names();

}  // namespace ccsym

#endif
