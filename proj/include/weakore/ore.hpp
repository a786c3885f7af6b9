#pragma once

// Skew polynomial rings H = R[x; σ, δ] over a finite-dimensional weak bialgebra R,
// in left normal form Σ a_i x^i with x·a = σ(a)x + δ(a).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weakore/algebra.hpp"

namespace weakore {

class OrePolynomial {
public:
    OrePolynomial() = default;
    explicit OrePolynomial(std::size_t dim) : dim_(dim) {}
    /// Coefficients a_0, a_1, ... (trailing zeros trimmed).
    OrePolynomial(std::size_t dim, std::vector<Vector> coeffs);

    static OrePolynomial monomial(const Vector& a, std::size_t degree);
    static OrePolynomial constant(const Vector& a) { return monomial(a, 0); }

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; 0 for the zero polynomial.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<Vector>& coeffs() const { return coeffs_; }
    Vector coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Vector(dim_); }

    OrePolynomial& add_scaled(const OrePolynomial& o, const Scalar& c);
    OrePolynomial& operator+=(const OrePolynomial& o) { return add_scaled(o, Scalar(1)); }
    OrePolynomial& operator-=(const OrePolynomial& o) { return add_scaled(o, Scalar(-1)); }
    friend OrePolynomial operator+(OrePolynomial a, const OrePolynomial& b) { return a += b; }
    friend OrePolynomial operator-(OrePolynomial a, const OrePolynomial& b) { return a -= b; }
    friend OrePolynomial operator*(const Scalar& c, OrePolynomial p);
    friend bool operator==(const OrePolynomial& a, const OrePolynomial& b);

    std::string to_string(const std::vector<std::string>& labels) const;

private:
    void trim();

    std::size_t dim_ = 0;
    std::vector<Vector> coeffs_;
};

/// Element of H^{⊗legs}: Σ (r_1⊗...⊗r_L)(x^{i_1}⊗...⊗x^{i_L}) keyed by the degree tuple.
class OreTensor {
public:
    using Key = std::vector<unsigned>;

    OreTensor() = default;
    OreTensor(std::size_t dim, std::size_t legs) : dim_(dim), legs_(legs) {}

    std::size_t dim() const { return dim_; }
    std::size_t legs() const { return legs_; }
    const std::map<Key, Vector>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Vector at(const Key& k) const;

    /// Adds c·coeff at degree key.
    void add(const Key& key, const Vector& coeff, const Scalar& c = Scalar(1));
    OreTensor& add_scaled(const OreTensor& o, const Scalar& c);
    OreTensor& operator+=(const OreTensor& o) { return add_scaled(o, Scalar(1)); }
    OreTensor& operator-=(const OreTensor& o) { return add_scaled(o, Scalar(-1)); }
    friend OreTensor operator+(OreTensor a, const OreTensor& b) { return a += b; }
    friend OreTensor operator-(OreTensor a, const OreTensor& b) { return a -= b; }
    friend bool operator==(const OreTensor& a, const OreTensor& b);

    /// p_1⊗...⊗p_L.
    static OreTensor pure(const std::vector<OrePolynomial>& factors);
    /// Embeds t ∈ R^{⊗L} in degree (0,...,0).
    static OreTensor from_base(std::size_t dim, std::size_t legs, const Vector& t);

    std::string to_string(const std::vector<std::string>& labels) const;

private:
    std::size_t dim_ = 0;
    std::size_t legs_ = 0;
    std::map<Key, Vector> terms_;
};

class OreAlgebra {
public:
    /// Validates σ (bijective unital algebra map) and δ (σ-derivation).
    static OreAlgebra make(WeakBialgebra base, Matrix sigma, Matrix delta, std::optional<Matrix> antipode = {});

    const WeakBialgebra& base() const { return *base_; }
    const std::optional<Matrix>& base_antipode() const { return antipode_; }
    const Matrix& sigma() const { return sigma_; }
    const Matrix& delta() const { return delta_; }
    std::size_t dim() const { return base_->dim(); }
    const std::vector<std::string>& labels() const { return base_->labels(); }

    OrePolynomial x() const;
    OrePolynomial one() const { return OrePolynomial::constant(base_->algebra().one()); }
    OrePolynomial basis_monomial(std::size_t k, std::size_t degree) const;

    /// P_{m,k}: x^m b = Σ_k P_{m,k}(b) x^k.
    const Matrix& shift(std::size_t m, std::size_t k) const;
    /// (b_p x^i)(b_q x^j) in normal form.
    const OrePolynomial& monomial_product(std::size_t p, std::size_t i, std::size_t q, std::size_t j) const;

    OrePolynomial multiply(const OrePolynomial& a, const OrePolynomial& b) const;
    OreTensor tensor_multiply(const OreTensor& a, const OreTensor& b) const;

    /// ε(ab) from the degree-0 part of ab only.
    Scalar epsilon_of_product(const OrePolynomial& a, const OrePolynomial& b) const;

    /// Basis of span{aδ(b) : a, b basis}.
    const std::vector<Vector>& a_delta_b_span() const;

    std::string show(const OrePolynomial& p) const { return p.to_string(labels()); }
    std::string monomial_label(std::size_t k, std::size_t degree) const;

private:
    struct Cache;

    std::shared_ptr<const WeakBialgebra> base_;
    std::optional<Matrix> antipode_;
    Matrix sigma_;
    Matrix delta_;
    std::shared_ptr<Cache> cache_;
};

OrePolynomial ore_multiply(const OreAlgebra& h, const OrePolynomial& p, const OrePolynomial& q);

/// Table of (g⊗x + x⊗1)^n = Σ C_{i,j} x^i⊗x^j with C_{i,j} ∈ R⊗R.
struct ExpansionCoefficients {
    std::size_t n = 0;
    OreTensor table;

    Vector C(unsigned i, unsigned j) const { return table.at({i, j}); }
};

/// C_{n,0} = 1⊗1, C_{i,0} = 0 for i < n, C_{0,n} = g^n⊗1 and the left legs of C_{0,j}, j < n, in span{aδ(b)}.
AxiomReport check_expansion_invariants(const OreAlgebra& h, const Vector& g, const ExpansionCoefficients& c);
/// Expands and asserts the invariants above.
ExpansionCoefficients expand_skew_power(const OreAlgebra& h, const Vector& g, std::size_t n);

/// H with Δ(x) = Δ(1)(g⊗x + x⊗1), ε(Σ a_i x^i) = ε(a_0) and optionally S(x) = s_x.
class OreExtension {
public:
    const OreAlgebra& ore() const { return ore_; }
    const Vector& g() const { return g_; }
    bool has_antipode() const { return s_x_.has_value(); }
    const OrePolynomial& antipode_of_x() const { return *s_x_; }

    OreTensor delta(const OrePolynomial& p) const;
    OreTensor delta_one() const;
    /// Δ on one leg of an L-leg tensor, giving L+1 legs.
    OreTensor delta_on_leg(const OreTensor& t, std::size_t leg) const;
    Scalar epsilon(const OrePolynomial& p) const;
    OrePolynomial antipode(const OrePolynomial& p) const;
    OrePolynomial eps_t(const OrePolynomial& p) const;
    OrePolynomial eps_s(const OrePolynomial& p) const;
    const ExpansionCoefficients& expansion(std::size_t n) const;

    /// Unchecked constructors, for data that is known or meant to violate the conditions.
    static OreExtension assume_coalgebra(OreAlgebra ore, Vector g);
    static OreExtension assume_antipode(OreExtension ext, OrePolynomial image_of_x);

private:
    struct Cache;

    OreExtension(OreAlgebra ore, Vector g);

    OreAlgebra ore_;
    Vector g_;
    std::optional<OrePolynomial> s_x_;
    std::shared_ptr<Cache> cache_;
};

/// Refuses with ConditionsFailed unless panov_sufficient passes.
OreExtension extend_coalgebra(const OreAlgebra& ore, const Vector& g);
/// Refuses with ConditionsFailed unless hopf_conditions passes; S(x) = -S(g)x.
OreExtension extend_antipode(const OreExtension& ext);

/// Adapter for skew-primitive checks inside H.
struct OreContext {
    using Element = OrePolynomial;
    using TensorElement = OreTensor;

    const OreExtension& ext;

    TensorElement delta(const Element& x) const { return ext.delta(x); }
    TensorElement delta_one() const { return ext.delta_one(); }
    TensorElement pure(const Element& a, const Element& b) const { return OreTensor::pure({a, b}); }
    TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) const {
        return ext.ore().tensor_multiply(a, b);
    }
    Element multiply(const Element& a, const Element& b) const { return ext.ore().multiply(a, b); }
    Element eps_t(const Element& x) const { return ext.eps_t(x); }
    Element eps_s(const Element& x) const { return ext.eps_s(x); }
    std::string show(const Element& x) const { return ext.ore().show(x); }
};

/// Exhaustive check of the weak bialgebra (and, when present, antipode) axioms on monomials of degree ≤ d.
AxiomReport verify_extension(const OreExtension& ext, std::size_t d = 3);

}  // namespace weakore
