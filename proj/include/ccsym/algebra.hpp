#ifndef CCSYM_ALGEBRA_HPP
#define CCSYM_ALGEBRA_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccsym/errors.hpp"

namespace ccsym {

class FieldDescriptor;
class AlgebraDescriptor;
class RingElement;

using FieldPtr = std::shared_ptr<const FieldDescriptor>;
using AlgebraPtr = std::shared_ptr<const AlgebraDescriptor>;

/// A coefficient field: the rationals, a prime field F_p, a simple extension
/// F_p[x]/(m), or a relative extension base[y]/(pi) of one of the former.
/// Relative extensions model residue fields k(p) of closed points over the
/// base field k; keeping the tower explicit makes the norm N_{k(p)/k} and
/// local expansions canonical.
class FieldDescriptor {
  public:
    static FieldPtr rationals();
    static FieldPtr prime(long p);
    /// F_{p^d} with the deterministic modulus: the lexicographically smallest
    /// (c_0,...,c_{d-1}) making x^d + c_{d-1}x^{d-1} + ... + c_0 irreducible.
    static FieldPtr extension(long p, int d);
    /// F_{p^d} with an explicit monic modulus (c_0,...,c_d), c_d = 1.
    /// Irreducibility is verified.
    static FieldPtr extension(long p, const std::vector<long>& modulus);

    long characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }
    /// Total degree over the prime field.
    int degree() const { return d1_ * r_; }
    bool is_relative() const { return base_ != nullptr; }
    /// Base field of a relative extension (k for k(p)); null otherwise.
    FieldPtr base() const { return base_; }
    /// Degree over the base field; 1 when not relative.
    int relative_degree() const { return r_; }
    /// Modulus over the prime field (simple extensions only; empty if d = 1).
    const std::vector<long>& modulus() const { return m1_; }
    /// Relative modulus as flattened base-field coordinate rows,
    /// (relative_degree + 1) rows of base-degree entries.
    const std::vector<long>& relative_modulus_rows() const { return m2_; }
    /// p^degree. Throws NotFinite in characteristic 0.
    long long cardinality() const;

    bool same_as(const FieldDescriptor& o) const;
    std::string to_string() const;

  private:
    friend class AlgebraDescriptor;
    friend class RingElement;
    friend FieldPtr detail_make_relative(FieldPtr base, int r, std::vector<long> relmod_rows);
    FieldDescriptor() = default;

    long p_ = 0;               // characteristic; 0 = rationals
    int d1_ = 1;               // degree of the simple part over the prime field
    std::vector<long> m1_;     // simple modulus c_0..c_{d1} (monic), empty if d1 == 1
    FieldPtr base_;            // non-null for relative extensions
    int r_ = 1;                // relative degree
    std::vector<long> m2_;     // relative modulus, (r_+1) rows of d1_ prime coords
};

/// The coefficient algebra: field part F (possibly a relative extension
/// k(p)/k) adjoined a nilpotent of index e, i.e. F[eps]/(eps^e).
/// e = 1 means the algebra is the field itself.
class AlgebraDescriptor : public std::enable_shared_from_this<AlgebraDescriptor> {
  public:
    static AlgebraPtr make(FieldPtr field, int e = 1);

    FieldPtr field() const { return field_; }
    /// k: the base of the relative tower when present, else the field itself.
    FieldPtr base_field() const { return field_->is_relative() ? field_->base() : field_; }
    int nilpotency_index() const { return e_; }
    long characteristic() const { return field_->characteristic(); }
    bool is_field() const { return e_ == 1; }
    bool is_finite() const { return characteristic() != 0; }
    /// [k(p):k]; 1 when no scalar extension is declared.
    int extension_degree() const { return field_->relative_degree(); }
    /// Dimension of the field part over the prime field.
    int field_dim() const { return field_->degree(); }
    /// Total dimension over the prime field.
    int dim() const { return field_dim() * e_; }
    long long cardinality() const;

    bool same_as(const AlgebraDescriptor& o) const;
    std::string to_string() const;

  private:
    friend class RingElement;
    AlgebraDescriptor() = default;
    FieldPtr field_;
    int e_ = 1;
};

/// #A^* = #A (1 - 1/#kappa), kappa the residue field. Throws NotFinite in
/// characteristic 0.
long long unit_group_order(const AlgebraPtr& a);

/// An element of an AlgebraDescriptor's algebra, stored as a coordinate
/// vector over the prime field in the basis {eps^s y^j x^i}. Immutable value
/// semantics; all arithmetic is exact.
class RingElement {
  public:
    RingElement() = default;  // empty element; only assignment is valid

    static RingElement zero(const AlgebraPtr& a);
    static RingElement one(const AlgebraPtr& a);
    static RingElement from_integer(const AlgebraPtr& a, long n);
    static RingElement from_rational(const AlgebraPtr& a, long num, long den);
    /// Generator of the simple field part (the grammar's `x`).
    static RingElement field_generator(const AlgebraPtr& a);
    /// Generator of the relative extension (the class of the uniformized
    /// variable; `x` in the grammar when the base is prime).
    static RingElement point_generator(const AlgebraPtr& a);
    /// The nilpotent generator eps. Throws BadIndex when e = 1.
    static RingElement epsilon(const AlgebraPtr& a);
    /// Element from raw prime-field coordinates (layout: eps-slab major,
    /// then relative, then simple). Finite characteristic only.
    static RingElement from_coords(const AlgebraPtr& a, std::vector<long> coords);

    bool valid() const { return alg_ != nullptr; }
    const AlgebraPtr& algebra() const { return alg_; }

    bool is_zero() const;
    bool is_one() const;
    /// true iff the residue-field image is nonzero.
    bool is_unit() const;
    bool is_nilpotent() const { return !is_unit(); }
    /// Least r >= 1 with x^r = 0. Throws NotNilpotent on units.
    int nilindex() const;
    /// true iff the image modulo the nilradical is zero.
    bool residue_is_zero() const;
    /// Image in the residue field, as an element of the e = 1 algebra.
    RingElement residue() const;
    /// The residue image lifted back into this algebra (eps-slabs cleared).
    RingElement residue_lift() const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement& operator*=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    friend RingElement operator/(const RingElement& a, const RingElement& b) {
        return a * b.inverse();
    }

    /// Throws NotAUnit on non-units.
    RingElement inverse() const;
    /// Integer power; negative exponents invert first.
    RingElement pow(long long k) const;

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }
    /// Total order for deterministic sorting (degree-reversed coordinate lex).
    static int compare(const RingElement& a, const RingElement& b);

    /// Coordinates over the base algebra k[eps]/(eps^e) in the relative basis
    /// {y^j}; length = extension_degree(). Identity when no extension.
    std::vector<RingElement> relative_blocks() const;
    static RingElement from_relative_blocks(const AlgebraPtr& a,
                                            const std::vector<RingElement>& blocks);

    /// Raw prime coordinates (finite characteristic).
    const std::vector<long>& coords() const { return fc_; }
    const std::vector<mpq_class>& rational_coords() const { return qc_; }

    std::string to_string() const;

  private:
    friend RingElement norm(const RingElement& x);
    friend RingElement embed(const RingElement& x, const AlgebraPtr& target);
    AlgebraPtr alg_;
    std::vector<long> fc_;        // finite characteristic coordinates
    std::vector<mpq_class> qc_;   // rational coordinates (one per eps slab)

    void check_same(const RingElement& o) const;
};

/// Scalar extension embedding B -> k(p) (x) B. The source must be the target's
/// base algebra (same e).
RingElement embed(const RingElement& x, const AlgebraPtr& target);

/// N_{k(p)/k} (x) id_B: determinant of multiplication by x as a k (x) B-linear
/// map. Throws NoExtension when the algebra declares no scalar extension.
RingElement norm(const RingElement& x);

/// exp(x) = sum x^k / k! for nilpotent x, characteristic 0.
RingElement exp_nilpotent(const RingElement& x);
/// log(u) = sum (-1)^{k+1} (u-1)^k / k for unipotent u, characteristic 0.
RingElement log_unipotent(const RingElement& u);

}  // namespace ccsym

#endif
