#include "weakore/ore.hpp"

#include <array>
#include <functional>
#include <mutex>

#include "weakore/coderivation.hpp"
#include "weakore/grouplike.hpp"
#include "weakore/panov.hpp"

namespace weakore {

// ---------------------------------------------------------------- OrePolynomial

OrePolynomial::OrePolynomial(std::size_t dim, std::vector<Vector> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.dim() != dim_) throw AlgebraError(ErrorKind::DimensionMismatch, "polynomial coefficient dimension");
    trim();
}

OrePolynomial OrePolynomial::monomial(const Vector& a, std::size_t degree) {
    std::vector<Vector> c(degree + 1, Vector(a.dim()));
    c[degree] = a;
    return OrePolynomial(a.dim(), std::move(c));
}

void OrePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

OrePolynomial& OrePolynomial::add_scaled(const OrePolynomial& o, const Scalar& c) {
    if (o.dim_ != dim_) throw AlgebraError(ErrorKind::DimensionMismatch, "polynomial dimensions differ");
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Vector(dim_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i].add_scaled(o.coeffs_[i], c);
    trim();
    return *this;
}

OrePolynomial operator*(const Scalar& c, OrePolynomial p) {
    for (auto& v : p.coeffs_) v *= c;
    p.trim();
    return p;
}

bool operator==(const OrePolynomial& a, const OrePolynomial& b) {
    return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
}

namespace {

std::string x_power(std::size_t i) {
    if (i == 0) return "1";
    if (i == 1) return "x";
    return "x^" + std::to_string(i);
}

std::string coefficient_times(const std::string& coeff, bool single, const std::string& right) {
    if (coeff == "1") return right;
    if (coeff == "-1") return "-" + right;
    return single ? coeff + "*" + right : "(" + coeff + ")*" + right;
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& labels, std::size_t legs) {
    std::vector<std::string> out{""};
    for (std::size_t l = 0; l < legs; ++l) {
        std::vector<std::string> next;
        next.reserve(out.size() * labels.size());
        for (const auto& prefix : out)
            for (const auto& s : labels) next.push_back(l == 0 ? s : prefix + "⊗" + s);
        out = std::move(next);
    }
    return out;
}

// Leg indices of a flat tensor index, leg 0 most significant.
void split_index(std::size_t idx, std::size_t dim, std::size_t legs, std::size_t* out) {
    for (std::size_t l = legs; l-- > 0;) {
        out[l] = idx % dim;
        idx /= dim;
    }
}

}  // namespace

std::string OrePolynomial::to_string(const std::vector<std::string>& labels) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        std::string c = coeffs_[i].to_string(labels);
        const auto& e = coeffs_[i].entries();
        if (i > 0 && e.size() == 1 && e[0].first < labels.size() && labels[e[0].first] == "1") c = e[0].second.to_string();
        std::string term = i == 0 ? c : coefficient_times(c, coeffs_[i].nnz() == 1, x_power(i));
        if (!out.empty()) out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
        else out = term;
    }
    return out;
}

// ---------------------------------------------------------------- OreTensor

Vector OreTensor::at(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Vector(ipow(dim_, legs_)) : it->second;
}

void OreTensor::add(const Key& key, const Vector& coeff, const Scalar& c) {
    if (key.size() != legs_) throw AlgebraError(ErrorKind::DimensionMismatch, "tensor key length");
    auto [it, inserted] = terms_.try_emplace(key, Vector(ipow(dim_, legs_)));
    it->second.add_scaled(coeff, c);
    if (it->second.is_zero()) terms_.erase(it);
}

OreTensor& OreTensor::add_scaled(const OreTensor& o, const Scalar& c) {
    if (o.dim_ != dim_ || o.legs_ != legs_) throw AlgebraError(ErrorKind::DimensionMismatch, "tensor shapes differ");
    for (const auto& [k, v] : o.terms_) add(k, v, c);
    return *this;
}

bool operator==(const OreTensor& a, const OreTensor& b) {
    return a.dim_ == b.dim_ && a.legs_ == b.legs_ && a.terms_ == b.terms_;
}

OreTensor OreTensor::pure(const std::vector<OrePolynomial>& factors) {
    if (factors.empty()) throw AlgebraError(ErrorKind::DimensionMismatch, "empty tensor");
    const std::size_t dim = factors.front().dim();
    OreTensor out(dim, factors.size());
    Key key(factors.size());
    std::function<void(std::size_t, const Vector&)> rec = [&](std::size_t l, const Vector& acc) {
        if (l == factors.size()) {
            out.add(key, acc);
            return;
        }
        const auto& cs = factors[l].coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (cs[i].is_zero()) continue;
            key[l] = static_cast<unsigned>(i);
            rec(l + 1, l == 0 ? cs[i] : tensor(acc, cs[i]));
        }
    };
    rec(0, Vector());
    return out;
}

OreTensor OreTensor::from_base(std::size_t dim, std::size_t legs, const Vector& t) {
    OreTensor out(dim, legs);
    out.add(Key(legs, 0u), t);
    return out;
}

std::string OreTensor::to_string(const std::vector<std::string>& labels) const {
    if (terms_.empty()) return "0";
    const auto tl = tensor_labels(labels, legs_);
    std::string out;
    for (const auto& [k, v] : terms_) {
        std::string c = v.to_string(tl);
        bool plain = true;
        std::string xs;
        for (std::size_t l = 0; l < legs_; ++l) {
            if (k[l] != 0) plain = false;
            xs += (l ? "⊗" : "") + x_power(k[l]);
        }
        std::string term = plain ? c : "(" + c + ")(" + xs + ")";
        out += out.empty() ? term : " + " + term;
    }
    return out;
}

// ---------------------------------------------------------------- OreAlgebra

struct OreAlgebra::Cache {
    std::mutex mutex;
    std::map<std::pair<std::size_t, std::size_t>, Matrix> shifts;  // (m, k) for k ≤ m
    std::size_t shift_rows = 0;                                     // shifts known for m < shift_rows
    Matrix zero;
    std::map<std::array<std::size_t, 4>, OrePolynomial> products;
    std::optional<std::vector<Vector>> adb;
};

OreAlgebra OreAlgebra::make(WeakBialgebra base, Matrix sigma, Matrix delta, std::optional<Matrix> antipode) {
    const std::size_t n = base.dim();
    if (sigma.rows() != n || sigma.cols() != n || delta.rows() != n || delta.cols() != n)
        throw AlgebraError(ErrorKind::DimensionMismatch, "sigma and delta must be dim x dim");
    if (antipode && (antipode->rows() != n || antipode->cols() != n))
        throw AlgebraError(ErrorKind::DimensionMismatch, "antipode must be dim x dim");
    const Algebra& A = base.algebra();
    if (!(sigma.apply(A.one()) == A.one())) throw AlgebraError(ErrorKind::NotAutomorphism, "sigma(1) != 1");
    const auto sc = sigma.columns();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(sigma.apply(A.product(i, j)) == A.multiply(sc[i], sc[j])))
                throw AlgebraError(ErrorKind::NotAutomorphism,
                                   "sigma(" + A.label(i) + "*" + A.label(j) + ") != sigma(" + A.label(i) +
                                       ")*sigma(" + A.label(j) + ")",
                                   {i, j});
    if (rank(sigma) != n) throw AlgebraError(ErrorKind::NotAutomorphism, "sigma is not bijective");
    if (auto bad = sigma_derivation_failure(A, sigma, delta))
        throw AlgebraError(ErrorKind::NotDerivation,
                           "Leibniz rule fails at (" + A.label(bad->first) + ", " + A.label(bad->second) + ")",
                           {bad->first, bad->second});
    is_sigma_derivation(A, sigma, delta);

    OreAlgebra h;
    h.base_ = std::make_shared<const WeakBialgebra>(std::move(base));
    h.antipode_ = std::move(antipode);
    h.sigma_ = std::move(sigma);
    h.delta_ = std::move(delta);
    h.cache_ = std::make_shared<Cache>();
    h.cache_->zero = Matrix(n, n);
    return h;
}

OrePolynomial OreAlgebra::x() const { return OrePolynomial::monomial(base_->algebra().one(), 1); }

OrePolynomial OreAlgebra::basis_monomial(std::size_t k, std::size_t degree) const {
    return OrePolynomial::monomial(base_->algebra().basis(k), degree);
}

std::string OreAlgebra::monomial_label(std::size_t k, std::size_t degree) const {
    const std::string& l = labels()[k];
    if (degree == 0) return l;
    return l == "1" ? x_power(degree) : l + "*" + x_power(degree);
}

const Matrix& OreAlgebra::shift(std::size_t m, std::size_t k) const {
    std::lock_guard lock(cache_->mutex);
    if (k > m) return cache_->zero;
    auto& s = cache_->shifts;
    for (std::size_t r = cache_->shift_rows; r <= m; ++r) {
        if (r == 0) {
            s[{0, 0}] = Matrix::identity(dim(), base_->field().one());
            continue;
        }
        for (std::size_t c = 0; c <= r; ++c) {
            Matrix p(dim(), dim());
            if (c >= 1) p = p + sigma_ * s.at({r - 1, c - 1});
            if (c <= r - 1) p = p + delta_ * s.at({r - 1, c});
            s[{r, c}] = std::move(p);
        }
    }
    cache_->shift_rows = std::max(cache_->shift_rows, m + 1);
    return s.at({m, k});
}

const OrePolynomial& OreAlgebra::monomial_product(std::size_t p, std::size_t i, std::size_t q, std::size_t j) const {
    const std::array<std::size_t, 4> key{p, i, q, j};
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->products.find(key);
        if (it != cache_->products.end()) return it->second;
    }
    const Algebra& A = base_->algebra();
    std::vector<Vector> coeffs(i + j + 1, Vector(dim()));
    const Vector bp = A.basis(p);
    for (std::size_t k = 0; k <= i; ++k) {
        Vector moved = shift(i, k).column(q);
        if (!moved.is_zero()) coeffs[k + j] = A.multiply(bp, moved);
    }
    OrePolynomial result(dim(), std::move(coeffs));
    std::lock_guard lock(cache_->mutex);
    return cache_->products.emplace(key, std::move(result)).first->second;
}

OrePolynomial OreAlgebra::multiply(const OrePolynomial& a, const OrePolynomial& b) const {
    if (a.dim() != dim() || b.dim() != dim()) throw AlgebraError(ErrorKind::DimensionMismatch, "polynomial dimension");
    if (a.is_zero() || b.is_zero()) return OrePolynomial(dim());
    std::vector<Accumulator> acc(a.degree() + b.degree() + 1, Accumulator(dim()));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (const auto& [p, c] : a.coeffs()[i].entries())
            for (std::size_t j = 0; j < b.coeffs().size(); ++j)
                for (const auto& [q, d] : b.coeffs()[j].entries()) {
                    const Scalar cd = c * d;
                    const auto& prod = monomial_product(p, i, q, j);
                    for (std::size_t k = 0; k < prod.coeffs().size(); ++k) acc[k].add_scaled(prod.coeffs()[k], cd);
                }
    std::vector<Vector> coeffs;
    coeffs.reserve(acc.size());
    for (auto& x : acc) coeffs.push_back(x.take());
    return OrePolynomial(dim(), std::move(coeffs));
}

OrePolynomial ore_multiply(const OreAlgebra& h, const OrePolynomial& p, const OrePolynomial& q) {
    return h.multiply(p, q);
}

OreTensor OreAlgebra::tensor_multiply(const OreTensor& a, const OreTensor& b) const {
    if (a.legs() != b.legs() || a.dim() != dim() || b.dim() != dim())
        throw AlgebraError(ErrorKind::DimensionMismatch, "tensor shapes differ");
    const std::size_t L = a.legs();
    const std::size_t n = dim();
    std::map<OreTensor::Key, Accumulator> acc;
    std::vector<std::size_t> pa(L), pb(L);
    std::vector<const OrePolynomial*> legs(L);
    OreTensor::Key key(L);

    for (const auto& [ka, va] : a.terms())
        for (const auto& [kb, vb] : b.terms())
            for (const auto& [ia, ca] : va.entries()) {
                split_index(ia, n, L, pa.data());
                for (const auto& [ib, cb] : vb.entries()) {
                    split_index(ib, n, L, pb.data());
                    bool zero = false;
                    for (std::size_t l = 0; l < L && !zero; ++l) {
                        legs[l] = &monomial_product(pa[l], ka[l], pb[l], kb[l]);
                        zero = legs[l]->is_zero();
                    }
                    if (zero) continue;
                    const Scalar c = ca * cb;
                    std::function<void(std::size_t, const Vector&)> rec = [&](std::size_t l, const Vector& t) {
                        if (l == L) {
                            auto it = acc.try_emplace(key, Accumulator(ipow(n, L))).first;
                            it->second.add_scaled(t, c);
                            return;
                        }
                        const auto& cs = legs[l]->coeffs();
                        for (std::size_t d = 0; d < cs.size(); ++d) {
                            if (cs[d].is_zero()) continue;
                            key[l] = static_cast<unsigned>(d);
                            rec(l + 1, l == 0 ? cs[d] : tensor(t, cs[d]));
                        }
                    };
                    rec(0, Vector());
                }
            }
    OreTensor out(n, L);
    for (auto& [k, x] : acc) {
        const Vector v = x.take();
        if (!v.is_zero()) out.add(k, v);
    }
    return out;
}

Scalar OreAlgebra::epsilon_of_product(const OrePolynomial& a, const OrePolynomial& b) const {
    Scalar total = base_->field().zero();
    const Vector b0 = b.coeff(0);
    if (b0.is_zero()) return total;
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
        if (a.coeffs()[k].is_zero()) continue;
        Vector moved = shift(k, 0).apply(b0);
        if (!moved.is_zero()) total += base_->epsilon(base_->multiply(a.coeffs()[k], moved));
    }
    return total;
}

const std::vector<Vector>& OreAlgebra::a_delta_b_span() const {
    {
        std::lock_guard lock(cache_->mutex);
        if (cache_->adb) return *cache_->adb;
    }
    const Algebra& A = base_->algebra();
    RowReducer rr(dim());
    const auto dc = delta_.columns();
    for (std::size_t a = 0; a < dim(); ++a)
        for (std::size_t b = 0; b < dim(); ++b)
            if (!dc[b].is_zero()) rr.add_row(A.multiply(A.basis(a), dc[b]));
    std::lock_guard lock(cache_->mutex);
    cache_->adb = rr.basis();
    return *cache_->adb;
}

// ---------------------------------------------------------------- expansion

namespace {

OreTensor skew_primitive_factor(const OreAlgebra& h, const Vector& g) {
    const Vector& one = h.base().algebra().one();
    OreTensor e(h.dim(), 2);
    e.add({0, 1}, tensor(g, one));
    e.add({1, 0}, tensor(one, one));
    return e;
}

}  // namespace

AxiomReport check_expansion_invariants(const OreAlgebra& h, const Vector& g, const ExpansionCoefficients& c) {
    AxiomReport r;
    const std::size_t n = c.n;
    const std::size_t dim = h.dim();
    const Algebra& A = h.base().algebra();
    const auto& one = A.one();
    const auto tl = tensor_labels(h.labels(), 2);
    const std::string tag = "n=" + std::to_string(n);

    Vector cn0 = c.C(static_cast<unsigned>(n), 0);
    r.check("C_n0_eq_one_tensor_one", cn0 == tensor(one, one), Witness{{n}, {tag}, cn0.to_string(tl), "1⊗1"});
    r.touch("C_i0_zero");
    for (std::size_t i = 0; i < n; ++i) {
        Vector ci0 = c.C(static_cast<unsigned>(i), 0);
        if (!ci0.is_zero()) r.fail("C_i0_zero", Witness{{n, i}, {tag, "i=" + std::to_string(i)}, ci0.to_string(tl), "0"});
    }
    Vector c0n = c.C(0, static_cast<unsigned>(n));
    Vector gn = tensor(A.power(g, static_cast<unsigned>(n)), one);
    r.check("C_0n_eq_g_pow_n_tensor_one", c0n == gn, Witness{{n}, {tag}, c0n.to_string(tl), gn.to_string(tl)});

    r.touch("C_0j_left_leg_in_span_a_delta_b");
    RowReducer span(dim);
    for (const auto& v : h.a_delta_b_span()) span.add_row(v);
    for (std::size_t j = 0; j < n; ++j) {
        Vector c0j = c.C(0, static_cast<unsigned>(j));
        std::vector<std::vector<Vector::Entry>> left(dim);
        for (const auto& [idx, v] : c0j.entries()) left[idx % dim].push_back({idx / dim, v});
        for (std::size_t q = 0; q < dim; ++q) {
            if (left[q].empty()) continue;
            Vector leg(dim, std::move(left[q]));
            if (!span.in_span(leg)) {
                r.fail("C_0j_left_leg_in_span_a_delta_b",
                       Witness{{n, j}, {tag, "j=" + std::to_string(j)}, c0j.to_string(tl), "span{a*delta(b)}⊗R"});
                break;
            }
        }
    }
    r.touch("support_within_total_degree");
    for (const auto& [k, v] : c.table.terms())
        if (k[0] + k[1] > n) {
            r.fail("support_within_total_degree",
                   Witness{{n, k[0], k[1]}, {tag, std::to_string(k[0]) + "," + std::to_string(k[1])}, v.to_string(tl), "0"});
        }
    return r;
}

ExpansionCoefficients expand_skew_power(const OreAlgebra& h, const Vector& g, std::size_t n) {
    const Vector& one = h.base().algebra().one();
    const OreTensor e = skew_primitive_factor(h, g);
    OreTensor power = OreTensor::from_base(h.dim(), 2, tensor(one, one));
    for (std::size_t i = 0; i < n; ++i) power = h.tensor_multiply(power, e);
    ExpansionCoefficients c{n, std::move(power)};
    const AxiomReport r = check_expansion_invariants(h, g, c);
    if (!r.passed()) throw InvariantViolation("expansion invariants fail:\n" + r.to_text());
    return c;
}

// ---------------------------------------------------------------- OreExtension

struct OreExtension::Cache {
    std::mutex mutex;
    std::map<std::size_t, ExpansionCoefficients> expansions;
    std::map<std::pair<std::size_t, std::size_t>, OreTensor> monomial_deltas;
    std::map<std::size_t, OrePolynomial> sx_powers;
};

OreExtension::OreExtension(OreAlgebra ore, Vector g)
    : ore_(std::move(ore)), g_(std::move(g)), cache_(std::make_shared<Cache>()) {
    if (g_.dim() != ore_.dim()) throw AlgebraError(ErrorKind::DimensionMismatch, "g has the wrong dimension");
}

OreExtension OreExtension::assume_coalgebra(OreAlgebra ore, Vector g) { return OreExtension(std::move(ore), std::move(g)); }

OreExtension OreExtension::assume_antipode(OreExtension ext, OrePolynomial image_of_x) {
    if (!ext.ore_.base_antipode()) throw AlgebraError(ErrorKind::ValidationError, "coefficient ring has no antipode");
    OreExtension out(ext.ore_, ext.g_);
    out.s_x_ = std::move(image_of_x);
    return out;
}

const ExpansionCoefficients& OreExtension::expansion(std::size_t n) const {
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->expansions.find(n);
        if (it != cache_->expansions.end()) return it->second;
    }
    ExpansionCoefficients c = n == 0 ? expand_skew_power(ore_, g_, 0)
                                     : ExpansionCoefficients{n, ore_.tensor_multiply(expansion(n - 1).table,
                                                                                     skew_primitive_factor(ore_, g_))};
    if (n > 0) {
        const AxiomReport r = check_expansion_invariants(ore_, g_, c);
        if (!r.passed()) throw InvariantViolation("expansion invariants fail:\n" + r.to_text());
    }
    std::lock_guard lock(cache_->mutex);
    return cache_->expansions.emplace(n, std::move(c)).first->second;
}

OreTensor OreExtension::delta_one() const { return OreTensor::from_base(ore_.dim(), 2, ore_.base().delta_one()); }

OreTensor OreExtension::delta(const OrePolynomial& p) const {
    const std::size_t n = ore_.dim();
    OreTensor out(n, 2);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        for (const auto& [k, c] : p.coeffs()[i].entries()) {
            const std::pair key{k, i};
            const OreTensor* d = nullptr;
            {
                std::lock_guard lock(cache_->mutex);
                auto it = cache_->monomial_deltas.find(key);
                if (it != cache_->monomial_deltas.end()) d = &it->second;
            }
            if (!d) {
                OreTensor t = ore_.tensor_multiply(
                    OreTensor::from_base(n, 2, ore_.base().coalgebra().coproduct(k)), expansion(i).table);
                std::lock_guard lock(cache_->mutex);
                d = &cache_->monomial_deltas.emplace(key, std::move(t)).first->second;
            }
            out.add_scaled(*d, c);
        }
    return out;
}

OreTensor OreExtension::delta_on_leg(const OreTensor& t, std::size_t leg) const {
    const std::size_t n = ore_.dim();
    const std::size_t L = t.legs();
    if (leg >= L) throw AlgebraError(ErrorKind::DimensionMismatch, "leg out of range");
    const Algebra& A = ore_.base().algebra();
    std::map<OreTensor::Key, std::vector<Vector::Entry>> collected;
    std::vector<std::size_t> parts(L);
    for (const auto& [key, v] : t.terms())
        for (const auto& [idx, c] : v.entries()) {
            split_index(idx, n, L, parts.data());
            const OreTensor d = delta(OrePolynomial::monomial(A.basis(parts[leg]), key[leg]));
            for (const auto& [dk, dv] : d.terms()) {
                OreTensor::Key nk;
                for (std::size_t l = 0; l < L; ++l) {
                    if (l == leg) {
                        nk.push_back(dk[0]);
                        nk.push_back(dk[1]);
                    } else {
                        nk.push_back(key[l]);
                    }
                }
                auto& bucket = collected[nk];
                for (const auto& [j, cj] : dv.entries()) {
                    std::size_t flat = 0;
                    for (std::size_t l = 0; l < L; ++l) {
                        if (l == leg) flat = (flat * n + j / n) * n + j % n;
                        else flat = flat * n + parts[l];
                    }
                    bucket.push_back({flat, c * cj});
                }
            }
        }
    OreTensor out(n, L + 1);
    const std::size_t width = ipow(n, L + 1);
    for (auto& [k, entries] : collected) out.add(k, Vector(width, std::move(entries)));
    return out;
}

Scalar OreExtension::epsilon(const OrePolynomial& p) const { return ore_.base().epsilon(p.coeff(0)); }

OrePolynomial OreExtension::eps_t(const OrePolynomial& p) const {
    const std::size_t n = ore_.dim();
    const Algebra& A = ore_.base().algebra();
    Accumulator acc(n);
    for (const auto& [idx, c] : ore_.base().delta_one().entries()) {
        Scalar e = ore_.epsilon_of_product(OrePolynomial::constant(A.basis(idx / n)), p);
        if (!e.is_zero()) acc.add(idx % n, c * e);
    }
    return OrePolynomial::constant(acc.take());
}

OrePolynomial OreExtension::eps_s(const OrePolynomial& p) const {
    const std::size_t n = ore_.dim();
    const Algebra& A = ore_.base().algebra();
    Accumulator acc(n);
    for (const auto& [idx, c] : ore_.base().delta_one().entries()) {
        Scalar e = ore_.epsilon_of_product(p, OrePolynomial::constant(A.basis(idx % n)));
        if (!e.is_zero()) acc.add(idx / n, c * e);
    }
    return OrePolynomial::constant(acc.take());
}

OrePolynomial OreExtension::antipode(const OrePolynomial& p) const {
    if (!s_x_) throw AlgebraError(ErrorKind::ValidationError, "extension has no antipode");
    const Matrix& S = *ore_.base_antipode();
    OrePolynomial out(ore_.dim());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i].is_zero()) continue;
        const OrePolynomial* power = nullptr;
        {
            std::lock_guard lock(cache_->mutex);
            auto it = cache_->sx_powers.find(i);
            if (it != cache_->sx_powers.end()) power = &it->second;
        }
        if (!power) {
            OrePolynomial q = ore_.one();
            for (std::size_t k = 0; k < i; ++k) q = ore_.multiply(q, *s_x_);
            std::lock_guard lock(cache_->mutex);
            power = &cache_->sx_powers.emplace(i, std::move(q)).first->second;
        }
        out += ore_.multiply(*power, OrePolynomial::constant(S.apply(p.coeffs()[i])));
    }
    return out;
}

OreExtension extend_coalgebra(const OreAlgebra& ore, const Vector& g) {
    const PanovVerdict v = panov_sufficient(ore.base(), ore.sigma(), ore.delta(), g);
    if (!v.passed) {
        const auto failed = v.report.failed_names();
        throw AlgebraError(ErrorKind::ConditionsFailed,
                           "sufficient conditions fail: " + (failed.empty() ? std::string("?") : failed.front()));
    }
    return OreExtension::assume_coalgebra(ore, g);
}

OreExtension extend_antipode(const OreExtension& ext) {
    const auto& S = ext.ore().base_antipode();
    if (!S) throw AlgebraError(ErrorKind::ValidationError, "coefficient ring has no antipode");
    const WeakHopfAlgebra h{ext.ore().base(), *S};
    const PanovVerdict v = hopf_conditions(h, ext.ore().sigma(), ext.ore().delta(), ext.g());
    if (!v.passed) {
        const auto failed = v.report.failed_names();
        throw AlgebraError(ErrorKind::ConditionsFailed,
                           "weak Hopf conditions fail: " + (failed.empty() ? std::string("?") : failed.front()));
    }
    return OreExtension::assume_antipode(ext, OrePolynomial::monomial(-S->apply(ext.g()), 1));
}

// ---------------------------------------------------------------- verification

namespace {

struct Monomial {
    std::size_t degree;
    std::size_t k;
    OrePolynomial p;
    std::string label;
};

std::vector<Monomial> monomials(const OreAlgebra& h, std::size_t d) {
    std::vector<Monomial> out;
    for (std::size_t deg = 0; deg <= d; ++deg)
        for (std::size_t k = 0; k < h.dim(); ++k) out.push_back({deg, k, h.basis_monomial(k, deg), h.monomial_label(k, deg)});
    return out;
}

// (ε⊗id) or (id⊗ε) on a two-leg tensor.
OrePolynomial counit_on_leg(const OreExtension& ext, const OreTensor& t, std::size_t leg) {
    const std::size_t n = ext.ore().dim();
    const Functional& eps = ext.ore().base().coalgebra().counit();
    OrePolynomial out(n);
    for (const auto& [k, v] : t.terms()) {
        if (k[leg] != 0) continue;
        std::vector<Vector::Entry> e;
        for (const auto& [idx, c] : v.entries()) {
            std::size_t killed = leg == 0 ? idx / n : idx % n;
            std::size_t kept = leg == 0 ? idx % n : idx / n;
            Scalar ev = eps.at(killed);
            if (!ev.is_zero()) e.push_back({kept, c * ev});
        }
        out += OrePolynomial::monomial(Vector(n, std::move(e)), k[1 - leg]);
    }
    return out;
}

// μ∘(F_0⊗...⊗F_{L-1}) with F_l = id or S.
OrePolynomial multiply_legs(const OreExtension& ext, const OreTensor& t, const std::vector<bool>& antipode_leg,
                            std::map<std::pair<std::size_t, std::size_t>, OrePolynomial>& s_cache) {
    const OreAlgebra& h = ext.ore();
    const std::size_t n = h.dim();
    const std::size_t L = t.legs();
    std::vector<std::size_t> parts(L);
    OrePolynomial out(n);
    for (const auto& [k, v] : t.terms())
        for (const auto& [idx, c] : v.entries()) {
            split_index(idx, n, L, parts.data());
            OrePolynomial prod = h.one();
            for (std::size_t l = 0; l < L; ++l) {
                const std::pair key{parts[l], static_cast<std::size_t>(k[l])};
                OrePolynomial factor = h.basis_monomial(key.first, key.second);
                if (antipode_leg[l]) {
                    auto it = s_cache.find(key);
                    if (it == s_cache.end()) it = s_cache.emplace(key, ext.antipode(factor)).first;
                    factor = it->second;
                }
                prod = h.multiply(prod, factor);
            }
            out.add_scaled(prod, c);
        }
    return out;
}

}  // namespace

AxiomReport verify_extension(const OreExtension& ext, std::size_t d) {
    AxiomReport r;
    const OreAlgebra& h = ext.ore();
    const std::size_t n = h.dim();
    const Algebra& A = h.base().algebra();
    const auto& labels = h.labels();
    const auto ms = monomials(h, d);
    const OrePolynomial x = h.x();
    auto show = [&](const OrePolynomial& p) { return h.show(p); };
    auto show_t = [&](const OreTensor& t) { return t.to_string(labels); };
    auto idx1 = [](const Monomial& m) { return std::vector<std::size_t>{m.degree, m.k}; };
    auto idx2 = [](const Monomial& a, const Monomial& b) {
        return std::vector<std::size_t>{a.degree, a.k, b.degree, b.k};
    };

    r.info("degree_bound", std::to_string(d));
    r.info("delta_x", show_t(ext.delta(x)));
    if (ext.has_antipode()) r.info("S_x", show(ext.antipode_of_x()));

    std::vector<OreTensor> deltas;
    for (const auto& m : ms) deltas.push_back(ext.delta(m.p));

    // Products of monomial pairs, reused by several checks.
    std::vector<std::vector<OrePolynomial>> prod(ms.size());
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = 0; b < ms.size(); ++b) prod[a].push_back(h.multiply(ms[a].p, ms[b].p));

    r.touch("delta_multiplicative");
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = 0; b < ms.size(); ++b) {
            OreTensor lhs = ext.delta(prod[a][b]);
            OreTensor rhs = h.tensor_multiply(deltas[a], deltas[b]);
            if (!(lhs == rhs))
                r.fail("delta_multiplicative", Witness{idx2(ms[a], ms[b]), {ms[a].label, ms[b].label}, show_t(lhs), show_t(rhs)});
        }

    r.touch("coassociativity");
    r.touch("counit_left");
    r.touch("counit_right");
    r.touch("delta_degree_compatible");
    for (std::size_t a = 0; a < ms.size(); ++a) {
        const auto& m = ms[a];
        OreTensor l3 = ext.delta_on_leg(deltas[a], 0);
        OreTensor r3 = ext.delta_on_leg(deltas[a], 1);
        if (!(l3 == r3)) r.fail("coassociativity", Witness{idx1(m), {m.label}, show_t(l3), show_t(r3)});
        OrePolynomial el = counit_on_leg(ext, deltas[a], 0);
        if (!(el == m.p)) r.fail("counit_left", Witness{idx1(m), {m.label}, show(el), m.label});
        OrePolynomial er = counit_on_leg(ext, deltas[a], 1);
        if (!(er == m.p)) r.fail("counit_right", Witness{idx1(m), {m.label}, show(er), m.label});
        bool within = true, top = false;
        for (const auto& [k, v] : deltas[a].terms()) {
            within = within && k[0] + k[1] <= m.degree;
            top = top || k[0] + k[1] == m.degree;
        }
        if (!within || !top) r.fail("delta_degree_compatible", Witness{idx1(m), {m.label}, show_t(deltas[a]), ""});
    }

    // ε(fg) for monomials f, g in degree ≤ d, and ε of products of pairs with a third monomial.
    std::vector<std::vector<Scalar>> eps_pair(ms.size());
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = 0; b < ms.size(); ++b) eps_pair[a].push_back(h.epsilon_of_product(ms[a].p, ms[b].p));
    auto mono_index = [&](std::size_t k, std::size_t deg) { return deg * n + k; };

    r.touch("counit_weak_mult_12");
    r.touch("counit_weak_mult_21");
    for (std::size_t b = 0; b < ms.size(); ++b) {
        struct Split {
            std::size_t left, right;
            Scalar c;
        };
        std::vector<Split> splits;
        for (const auto& [k, v] : deltas[b].terms())
            for (const auto& [idx, c] : v.entries())
                splits.push_back({mono_index(idx / n, k[0]), mono_index(idx % n, k[1]), c});
        for (std::size_t a = 0; a < ms.size(); ++a)
            for (std::size_t c = 0; c < ms.size(); ++c) {
                Scalar whole = h.epsilon_of_product(prod[a][b], ms[c].p);
                Scalar s12 = A.field().zero(), s21 = A.field().zero();
                for (const auto& s : splits) {
                    s12 += s.c * eps_pair[a][s.left] * eps_pair[s.right][c];
                    s21 += s.c * eps_pair[a][s.right] * eps_pair[s.left][c];
                }
                std::vector<std::size_t> key{ms[a].degree, ms[a].k, ms[b].degree, ms[b].k, ms[c].degree, ms[c].k};
                std::vector<std::string> lab{ms[a].label, ms[b].label, ms[c].label};
                if (!(whole == s12)) r.fail("counit_weak_mult_12", Witness{key, lab, whole.to_string(), s12.to_string()});
                if (!(whole == s21)) r.fail("counit_weak_mult_21", Witness{key, lab, whole.to_string(), s21.to_string()});
            }
    }

    {
        const Vector& one = A.one();
        const OreTensor d1 = ext.delta_one();
        const OreTensor d2 = ext.delta_on_leg(d1, 0);
        const Vector d1v = h.base().delta_one();
        const OreTensor left = OreTensor::from_base(n, 3, tensor(d1v, one));
        const OreTensor right = OreTensor::from_base(n, 3, tensor(one, d1v));
        OreTensor lr = h.tensor_multiply(left, right), rl = h.tensor_multiply(right, left);
        r.check("delta_unit_left", d2 == lr, Witness{{}, {"1"}, show_t(d2), show_t(lr)});
        r.check("delta_unit_right", d2 == rl, Witness{{}, {"1"}, show_t(d2), show_t(rl)});

        const OreTensor e = skew_primitive_factor(h, ext.g());
        OreTensor ed = h.tensor_multiply(e, d1), de = h.tensor_multiply(d1, e);
        r.check("delta_one_commutes_with_skew_factor", ed == de, Witness{{}, {"x"}, show_t(ed), show_t(de)});
    }

    OreContext ctx{ext};
    r.check("x_is_g1_primitive", is_skew_primitive(ctx, x, OrePolynomial::constant(ext.g()), h.one()),
            Witness{{}, {"x"}, show_t(ext.delta(x)), ""});

    r.touch("commutation_rule");
    {
        const OreTensor dx = ext.delta(x);
        const auto sc = h.sigma().columns();
        const auto dc = h.delta().columns();
        for (std::size_t k = 0; k < n; ++k) {
            OreTensor lhs = h.tensor_multiply(dx, OreTensor::from_base(n, 2, h.base().coalgebra().coproduct(k)));
            OreTensor rhs = h.tensor_multiply(OreTensor::from_base(n, 2, h.base().delta(sc[k])), dx) +
                            OreTensor::from_base(n, 2, h.base().delta(dc[k]));
            if (!(lhs == rhs)) r.fail("commutation_rule", Witness{{k}, {labels[k]}, show_t(lhs), show_t(rhs)});
        }
    }

    r.touch("eps_HxH_zero");
    r.touch("eps_t_hx_zero");
    r.touch("eps_s_hx_zero");
    for (const auto& a : ms) {
        const OrePolynomial ax = h.multiply(a.p, x);
        for (const auto& b : ms) {
            Scalar v = h.epsilon_of_product(ax, b.p);
            if (!v.is_zero()) r.fail("eps_HxH_zero", Witness{idx2(a, b), {a.label, b.label}, v.to_string(), "0"});
        }
        if (a.degree + 1 > d) continue;
        OrePolynomial t = ext.eps_t(ax), s = ext.eps_s(ax);
        if (!t.is_zero()) r.fail("eps_t_hx_zero", Witness{idx1(a), {a.label}, show(t), "0"});
        if (!s.is_zero()) r.fail("eps_s_hx_zero", Witness{idx1(a), {a.label}, show(s), "0"});
    }

    const auto source = base_subalgebras(h.base()).source;
    r.touch("R_s_commutes_with_x");
    for (std::size_t i = 0; i < source.size(); ++i) {
        const OrePolynomial a = OrePolynomial::constant(source[i]);
        OrePolynomial xa = h.multiply(x, a), ax = h.multiply(a, x);
        if (!(xa == ax)) r.fail("R_s_commutes_with_x", Witness{{i}, {A.show(source[i])}, show(xa), show(ax)});
    }

    {
        RowReducer rs(n), images(n);
        for (const auto& v : source) rs.add_row(v);
        bool ok = true;
        Witness w;
        for (const auto& m : ms) {
            OrePolynomial s = ext.eps_s(m.p);
            if (s.degree() > 0 || !rs.in_span(s.coeff(0))) {
                if (ok) w = Witness{idx1(m), {m.label}, show(s), "element of R_s"};
                ok = false;
                continue;
            }
            images.add_row(s.coeff(0));
        }
        if (ok && images.rank() != rs.rank())
            w = Witness{{}, {}, "rank " + std::to_string(images.rank()), "rank " + std::to_string(rs.rank())}, ok = false;
        r.check("H_s_eq_R_s", ok, w);
    }

    if (ext.has_antipode()) {
        std::map<std::pair<std::size_t, std::size_t>, OrePolynomial> s_cache;
        r.touch("antipode_eps_t");
        r.touch("antipode_eps_s");
        r.touch("antipode_S_h1_h2_S_h3");
        for (std::size_t a = 0; a < ms.size(); ++a) {
            const auto& m = ms[a];
            OrePolynomial t = multiply_legs(ext, deltas[a], {false, true}, s_cache);
            OrePolynomial et = ext.eps_t(m.p);
            if (!(t == et)) r.fail("antipode_eps_t", Witness{idx1(m), {m.label}, show(t), show(et)});
            OrePolynomial s = multiply_legs(ext, deltas[a], {true, false}, s_cache);
            OrePolynomial es = ext.eps_s(m.p);
            if (!(s == es)) r.fail("antipode_eps_s", Witness{idx1(m), {m.label}, show(s), show(es)});
            OrePolynomial sss = multiply_legs(ext, ext.delta_on_leg(deltas[a], 0), {true, false, true}, s_cache);
            OrePolynomial sm = ext.antipode(m.p);
            if (!(sss == sm)) r.fail("antipode_S_h1_h2_S_h3", Witness{idx1(m), {m.label}, show(sss), show(sm)});
        }
    }
    return r;
}

}  // namespace weakore
