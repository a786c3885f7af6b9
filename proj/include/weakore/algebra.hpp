#pragma once

// Finite-dimensional algebras, coalgebras, weak bialgebras and weak Hopf algebras
// given by structure constants on a fixed basis.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weakore/errors.hpp"
#include "weakore/linalg.hpp"
#include "weakore/report.hpp"
#include "weakore/scalar.hpp"

namespace weakore {

/// One structure constant: coefficient c of b_k in b_i·b_j (or of b_i⊗b_j in Δ(b_k)).
struct StructureTerm {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Scalar c;
};

/// Linear functional on the basis.
struct Functional {
    Vector coeffs;

    Functional() = default;
    explicit Functional(Vector v) : coeffs(std::move(v)) {}

    std::size_t dim() const { return coeffs.dim(); }
    Scalar at(std::size_t i) const { return coeffs[i]; }
    Scalar operator()(const Vector& v) const { return coeffs.dot(v); }

    friend bool operator==(const Functional& a, const Functional& b) { return a.coeffs == b.coeffs; }
};

class Algebra {
public:
    /// Validates associativity on all basis triples and the unit on all basis elements.
    static Algebra make(Field field, std::vector<std::string> labels, std::vector<StructureTerm> mult,
                        Vector unit);

    Field field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    const Vector& one() const { return unit_; }
    Vector basis(std::size_t i) const { return Vector::unit(dim_, i, field_.one()); }
    Vector zero() const { return Vector(dim_); }

    const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    Vector multiply(const Vector& a, const Vector& b) const;
    Vector power(const Vector& a, unsigned n) const;

    /// Matrix of x ↦ a·x.
    Matrix left_multiplication(const Vector& a) const;
    /// Matrix of x ↦ x·a.
    Matrix right_multiplication(const Vector& a) const;
    bool is_central(const Vector& a) const;
    /// Two-sided inverse of a, if a is a unit.
    std::optional<Vector> inverse_of(const Vector& a) const;

    std::vector<StructureTerm> terms() const;
    std::string show(const Vector& v) const { return v.to_string(labels_); }

private:
    Algebra() = default;

    Field field_;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<Vector> table_;
    Vector unit_;
};

class Coalgebra {
public:
    /// Validates coassociativity and both counit axioms.
    static Coalgebra make(Field field, std::size_t dim, std::vector<StructureTerm> comult, Vector counit);
    /// Skips validation; used for deliberately broken inputs.
    static Coalgebra unchecked(Field field, std::size_t dim, std::vector<StructureTerm> comult, Vector counit);

    Field field() const { return field_; }
    std::size_t dim() const { return dim_; }

    /// Δ(b_k) as a vector on basis⊗basis (index i*dim+j).
    const Vector& coproduct(std::size_t k) const { return table_[k]; }
    Vector delta(const Vector& v) const;
    const Functional& counit() const { return counit_; }
    Scalar epsilon(const Vector& v) const { return counit_(v); }

    std::vector<StructureTerm> terms() const;

private:
    Coalgebra() = default;

    Field field_;
    std::size_t dim_ = 0;
    std::vector<Vector> table_;
    Functional counit_;
};

/// Report on coassociativity and the counit axioms.
AxiomReport check_coalgebra(const Coalgebra& c, const std::vector<std::string>& labels);

class WeakBialgebra {
public:
    /// Pairs the two structures without checking the compatibility axioms.
    WeakBialgebra(Algebra algebra, Coalgebra coalgebra);
    /// As above, then throws ValidationError when the compatibility report fails.
    static WeakBialgebra validated(Algebra algebra, Coalgebra coalgebra);

    const Algebra& algebra() const { return algebra_; }
    const Coalgebra& coalgebra() const { return coalgebra_; }
    Field field() const { return algebra_.field(); }
    std::size_t dim() const { return algebra_.dim(); }
    const std::vector<std::string>& labels() const { return algebra_.labels(); }

    const Vector& delta_one() const { return delta_one_; }
    Vector multiply(const Vector& a, const Vector& b) const { return algebra_.multiply(a, b); }
    Vector delta(const Vector& v) const { return coalgebra_.delta(v); }
    Scalar epsilon(const Vector& v) const { return coalgebra_.epsilon(v); }

    /// Componentwise product in the `legs`-fold tensor power.
    Vector tensor_multiply(const Vector& x, const Vector& y, std::size_t legs = 2) const;

    Vector eps_t(const Vector& r) const;
    Vector eps_s(const Vector& r) const;
    Vector eps_t_prime(const Vector& r) const;
    Vector eps_s_prime(const Vector& r) const;

    Matrix eps_t_matrix() const;
    Matrix eps_s_matrix() const;
    Matrix eps_t_prime_matrix() const;
    Matrix eps_s_prime_matrix() const;

    /// Table ε(b_i b_j), row-major.
    const std::vector<Scalar>& counit_pairing() const { return pairing_; }

private:
    Algebra algebra_;
    Coalgebra coalgebra_;
    Vector delta_one_;
    std::vector<Scalar> pairing_;
};

struct WeakHopfAlgebra {
    WeakBialgebra wb;
    Matrix antipode;

    Vector S(const Vector& v) const { return antipode.apply(v); }
};

AxiomReport check_weak_bialgebra(const WeakBialgebra& wb);
AxiomReport check_antipode(const WeakHopfAlgebra& h);
/// ε_t, ε_s, ε_t', ε_s' are idempotent.
AxiomReport check_counital_projections(const WeakBialgebra& wb);

struct CounitalImages {
    Vector eps_t;
    Vector eps_s;
    Vector eps_t_prime;
    Vector eps_s_prime;
};
CounitalImages counital_maps(const WeakBialgebra& wb, const Vector& r);

struct BaseSubalgebras {
    std::vector<Vector> target;  // R_t = Im ε_t
    std::vector<Vector> source;  // R_s = Im ε_s
};
BaseSubalgebras base_subalgebras(const WeakBialgebra& wb);

/// Tensor product with basis index a*dim(B)+b and labels "a⊗b".
WeakBialgebra tensor_product(const WeakBialgebra& a, const WeakBialgebra& b);
WeakHopfAlgebra tensor_product(const WeakHopfAlgebra& a, const WeakHopfAlgebra& b);

Functional convolution(const WeakBialgebra& wb, const Functional& f, const Functional& g);
/// μ(F⊗G)Δ as a matrix.
Matrix convolve_maps(const WeakBialgebra& wb, const Matrix& f, const Matrix& g);

/// The four equalities ε(ab) = ε(aε_t(b)) = ε(aε_s'(b)) = ε(ε_t'(a)b) = ε(ε_s(a)b).
AxiomReport weak_counit_identities(const WeakBialgebra& wb, const Vector& a, const Vector& b);
/// Same, over all basis pairs.
AxiomReport weak_counit_identities(const WeakBialgebra& wb);

/// Checks that `perm` (basis of a ↦ basis of b) carries every structure constant of a to b.
AxiomReport check_basis_isomorphism(const WeakBialgebra& a, const WeakBialgebra& b,
                                    const std::vector<std::size_t>& perm);

/// Applies a map given on basis indices to one leg of a tensor; the leg may expand to several legs.
template <class F>
Vector map_leg(const Vector& t, std::size_t dim, std::size_t legs, std::size_t leg, std::size_t out_legs, F&& f);

std::size_t ipow(std::size_t base, std::size_t exp);

// ---------------------------------------------------------------- implementation

template <class F>
Vector map_leg(const Vector& t, std::size_t dim, std::size_t legs, std::size_t leg, std::size_t out_legs, F&& f) {
    const std::size_t after = ipow(dim, legs - leg - 1);
    const std::size_t width = ipow(dim, out_legs);
    Accumulator acc(ipow(dim, legs - 1 + out_legs));
    for (const auto& [idx, c] : t.entries()) {
        std::size_t lo = idx % after;
        std::size_t mid = (idx / after) % dim;
        std::size_t hi = idx / after / dim;
        const Vector image = f(mid);
        for (const auto& [j, cj] : image.entries()) acc.add((hi * width + j) * after + lo, c * cj);
    }
    return acc.take();
}

}  // namespace weakore
