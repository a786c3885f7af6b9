#pragma once

// Exact scalars: arbitrary-precision rationals or residues modulo a prime.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace weakore {

class Scalar;

/// The base field of an algebra instance: Q (modulus 0) or F_p.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    constexpr bool is_prime() const { return p_ != 0; }
    constexpr std::uint64_t modulus() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    /// Parses "a", "-a/b" (rationals) or an integer literal reduced mod p.
    Scalar parse(std::string_view text) const;
    /// Maps any scalar into this field (rationals reduce mod p when p is set).
    Scalar coerce(const Scalar& s) const;

    std::string describe() const;

    friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

private:
    constexpr explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of Q (lowest terms, positive denominator) or of F_p (value in [0, p)).
///
/// A rational operand meeting an F_p operand is reduced mod p first, so integer
/// literals such as Scalar(1) act as constants in every field. Two residues with
/// different moduli never mix.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    Scalar(long long v) : v_(mpq_class(static_cast<long>(v))) {}  // NOLINT(implicit)
    Scalar(int v) : Scalar(static_cast<long long>(v)) {}           // NOLINT(implicit)
    Scalar(long long num, long long den);
    explicit Scalar(mpq_class q);

    static Scalar residue(std::int64_t value, std::uint64_t p);

    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    std::uint64_t modulus() const;
    Field field() const;

    const mpq_class& rational() const;
    std::uint64_t residue_value() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Total order used only for canonical sorting (not field order).
    friend bool canonical_less(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    struct Residue {
        std::uint64_t value;
        std::uint64_t p;
    };
    explicit Scalar(Residue r) : v_(r) {}

    static Residue to_residue(const mpq_class& q, std::uint64_t p);
    // Brings *this and o into a common field; returns the modulus (0 = Q).
    std::uint64_t unify(const Scalar& o, Residue& other) const;
    template <class RationalOp, class ResidueOp>
    Scalar& combine(const Scalar& o, RationalOp rop, ResidueOp mop);

    std::variant<mpq_class, Residue> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace weakore
