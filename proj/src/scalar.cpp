#include "weakore/scalar.hpp"

#include <ostream>

namespace weakore {

namespace {

bool is_prime_number(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32) || !is_prime_number(p))
        throw ScalarError("field modulus must be a prime below 2^32, got " + std::to_string(p));
    return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    if (p_ == 0) return Scalar(v);
    return Scalar::residue(v, p_);
}

Scalar Field::coerce(const Scalar& s) const {
    if (p_ == 0) {
        if (!s.is_rational()) throw ScalarError("cannot lift a residue into the rationals");
        return s;
    }
    return s * one();
}

Scalar Field::parse(std::string_view text) const {
    std::string t(text);
    auto slash = t.find('/');
    mpz_class num, den(1);
    auto parse_int = [&](const std::string& part, mpz_class& out) {
        std::string s = part;
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        if (s.empty() || out.set_str(s, 10) != 0)
            throw ScalarError("malformed scalar '" + t + "'");
    };
    if (slash == std::string::npos) {
        parse_int(t, num);
    } else {
        parse_int(t.substr(0, slash), num);
        parse_int(t.substr(slash + 1), den);
        if (den == 0) throw ScalarError("zero denominator in '" + t + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return coerce(Scalar(q));
}

std::string Field::describe() const {
    return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long long num, long long den) {
    if (den == 0) throw ScalarError("zero denominator");
    mpq_class q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
    q.canonicalize();
    v_ = std::move(q);
}

Scalar::Scalar(mpq_class q) : v_(std::move(q)) {
    std::get<mpq_class>(v_).canonicalize();
}

Scalar Scalar::residue(std::int64_t value, std::uint64_t p) {
    std::int64_t m = value % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return Scalar(Residue{static_cast<std::uint64_t>(m), p});
}

std::uint64_t Scalar::modulus() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->p;
    return 0;
}

Field Scalar::field() const {
    std::uint64_t p = modulus();
    return p == 0 ? Field::rationals() : Field::prime(p);
}

const mpq_class& Scalar::rational() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return *q;
    throw ScalarError("scalar is a residue, not a rational");
}

std::uint64_t Scalar::residue_value() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->value;
    throw ScalarError("scalar is a rational, not a residue");
}

bool Scalar::is_zero() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return *q == 1;
    const auto& r = std::get<Residue>(v_);
    return r.value == 1 % r.p;
}

Scalar::Residue Scalar::to_residue(const mpq_class& q, std::uint64_t p) {
    std::uint64_t den = reduce_mpz(q.get_den(), p);
    if (den == 0)
        throw ScalarError("rational " + q.get_str() + " has no image mod " + std::to_string(p));
    std::uint64_t num = reduce_mpz(q.get_num(), p);
    return Residue{mul_mod(num, pow_mod(den, p - 2, p), p), p};
}

std::uint64_t Scalar::unify(const Scalar& o, Residue& other) const {
    const auto* mine = std::get_if<Residue>(&v_);
    const auto* theirs = std::get_if<Residue>(&o.v_);
    if (!mine && !theirs) return 0;
    std::uint64_t p = mine ? mine->p : theirs->p;
    if (mine && theirs && mine->p != theirs->p)
        throw ScalarError("field mismatch: F_" + std::to_string(mine->p) + " vs F_" +
                          std::to_string(theirs->p));
    other = theirs ? *theirs : to_residue(std::get<mpq_class>(o.v_), p);
    return p;
}

template <class RationalOp, class ResidueOp>
Scalar& Scalar::combine(const Scalar& o, RationalOp rop, ResidueOp mop) {
    Residue other{0, 0};
    std::uint64_t p = unify(o, other);
    if (p == 0) {
        rop(std::get<mpq_class>(v_), std::get<mpq_class>(o.v_));
        return *this;
    }
    if (is_rational()) v_ = to_residue(std::get<mpq_class>(v_), p);
    auto& self = std::get<Residue>(v_);
    self.value = mop(self.value, other.value, p);
    return *this;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    return combine(
        o, [](mpq_class& a, const mpq_class& b) { a += b; },
        [](std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; });
}

Scalar& Scalar::operator-=(const Scalar& o) {
    return combine(
        o, [](mpq_class& a, const mpq_class& b) { a -= b; },
        [](std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; });
}

Scalar& Scalar::operator*=(const Scalar& o) {
    return combine(
        o, [](mpq_class& a, const mpq_class& b) { a *= b; },
        [](std::uint64_t a, std::uint64_t b, std::uint64_t p) { return mul_mod(a, b, p); });
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw ScalarError("division by zero");
    Residue other{0, 0};
    std::uint64_t p = unify(o, other);
    if (p == 0) {
        std::get<mpq_class>(v_) /= std::get<mpq_class>(o.v_);
        return *this;
    }
    if (is_rational()) v_ = to_residue(std::get<mpq_class>(v_), p);
    auto& self = std::get<Residue>(v_);
    self.value = mul_mod(self.value, pow_mod(other.value, p - 2, p), p);
    return *this;
}

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

Scalar Scalar::operator-() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
    const auto& r = std::get<Residue>(v_);
    return Scalar(Residue{(r.p - r.value) % r.p, r.p});
}

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar::Residue other{0, 0};
    std::uint64_t p = a.unify(b, other);
    if (p == 0) return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
    Scalar::Residue mine = a.is_rational() ? Scalar::to_residue(std::get<mpq_class>(a.v_), p)
                                           : std::get<Scalar::Residue>(a.v_);
    return mine.value == other.value;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
    if (a.modulus() != b.modulus()) return a.modulus() < b.modulus();
    if (a.is_rational()) return std::get<mpq_class>(a.v_) < std::get<mpq_class>(b.v_);
    return std::get<Scalar::Residue>(a.v_).value < std::get<Scalar::Residue>(b.v_).value;
}

std::string Scalar::to_string() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return q->get_str();
    return std::to_string(std::get<Residue>(v_).value);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace weakore
