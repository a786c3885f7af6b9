#include "weakore/algebra.hpp"

#include <algorithm>
#include <tuple>

namespace weakore {

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

namespace {

Witness witness_of(const std::vector<std::size_t>& idx, const std::vector<std::string>& labels,
                   std::string lhs, std::string rhs) {
    Witness w;
    w.indices = idx;
    for (auto i : idx) w.labels.push_back(labels[i]);
    w.lhs = std::move(lhs);
    w.rhs = std::move(rhs);
    return w;
}

Witness unit_witness(std::string lhs, std::string rhs) {
    return Witness{{}, {"1"}, std::move(lhs), std::move(rhs)};
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& labels, std::size_t legs) {
    std::vector<std::string> out{""};
    for (std::size_t l = 0; l < legs; ++l) {
        std::vector<std::string> next;
        for (const auto& prefix : out)
            for (const auto& s : labels) next.push_back(l ? prefix + "⊗" + s : s);
        out = std::move(next);
    }
    return out;
}

Vector coerce(const Field& f, const Vector& v) {
    std::vector<Vector::Entry> e;
    for (const auto& [i, c] : v.entries()) e.emplace_back(i, f.coerce(c));
    return Vector(v.dim(), std::move(e));
}

std::vector<Vector> build_table(const Field& field, std::size_t dim, std::size_t out_dim,
                                const std::vector<StructureTerm>& terms, bool coproduct) {
    const std::size_t slots = coproduct ? dim : dim * dim;
    std::vector<std::vector<Vector::Entry>> raw(slots);
    for (const auto& t : terms) {
        if (t.i >= dim || t.j >= dim || t.k >= dim)
            throw AlgebraError(ErrorKind::DimensionMismatch, "structure constant index out of range",
                               {t.i, t.j, t.k});
        Scalar c = field.coerce(t.c);
        if (coproduct)
            raw[t.k].emplace_back(t.i * dim + t.j, c);
        else
            raw[t.i * dim + t.j].emplace_back(t.k, c);
    }
    std::vector<Vector> table;
    table.reserve(slots);
    for (auto& r : raw) table.emplace_back(out_dim, std::move(r));
    return table;
}

}  // namespace

// ---------------------------------------------------------------- Algebra

Algebra Algebra::make(Field field, std::vector<std::string> labels, std::vector<StructureTerm> mult,
                      Vector unit) {
    Algebra a;
    a.field_ = field;
    a.dim_ = labels.size();
    if (a.dim_ == 0) throw AlgebraError(ErrorKind::ZeroDimension, "algebra must have positive dimension");
    if (unit.dim() != a.dim_) throw AlgebraError(ErrorKind::DimensionMismatch, "unit vector has wrong dimension");
    a.labels_ = std::move(labels);
    a.table_ = build_table(field, a.dim_, a.dim_, mult, false);
    a.unit_ = coerce(field, unit);

    const std::size_t n = a.dim_;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector& ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vector lhs = a.multiply(ij, a.basis(k));
                Vector rhs = a.multiply(a.basis(i), a.product(j, k));
                if (!(lhs == rhs))
                    throw AlgebraError(ErrorKind::NotAssociative,
                                       "(" + a.labels_[i] + "·" + a.labels_[j] + ")·" + a.labels_[k] + " = " +
                                           a.show(lhs) + " but " + a.labels_[i] + "·(" + a.labels_[j] + "·" +
                                           a.labels_[k] + ") = " + a.show(rhs),
                                       {i, j, k});
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        Vector b = a.basis(i);
        if (!(a.multiply(a.unit_, b) == b) || !(a.multiply(b, a.unit_) == b))
            throw AlgebraError(ErrorKind::UnitFails, "unit does not act as identity on " + a.labels_[i], {i});
    }
    return a;
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
    Accumulator acc(dim_);
    for (const auto& [i, ci] : a.entries())
        for (const auto& [j, cj] : b.entries()) acc.add_scaled(table_[i * dim_ + j], ci * cj);
    return acc.take();
}

Vector Algebra::power(const Vector& a, unsigned n) const {
    Vector r = unit_;
    while (n--) r = multiply(r, a);
    return r;
}

Matrix Algebra::left_multiplication(const Vector& a) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(a, basis(j)));
    return Matrix::from_columns(dim_, cols);
}

Matrix Algebra::right_multiplication(const Vector& a) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(basis(j), a));
    return Matrix::from_columns(dim_, cols);
}

bool Algebra::is_central(const Vector& a) const {
    for (std::size_t j = 0; j < dim_; ++j)
        if (!(multiply(a, basis(j)) == multiply(basis(j), a))) return false;
    return true;
}

std::optional<Vector> Algebra::inverse_of(const Vector& a) const {
    auto y = solve(left_multiplication(a), unit_);
    if (!y || !(multiply(*y, a) == unit_)) return std::nullopt;
    return y;
}

std::vector<StructureTerm> Algebra::terms() const {
    std::vector<StructureTerm> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& [k, c] : product(i, j).entries()) out.push_back({i, j, k, c});
    return out;
}

// ---------------------------------------------------------------- Coalgebra

Coalgebra Coalgebra::unchecked(Field field, std::size_t dim, std::vector<StructureTerm> comult, Vector counit) {
    if (dim == 0) throw AlgebraError(ErrorKind::ZeroDimension, "coalgebra must have positive dimension");
    if (counit.dim() != dim) throw AlgebraError(ErrorKind::DimensionMismatch, "counit has wrong dimension");
    Coalgebra c;
    c.field_ = field;
    c.dim_ = dim;
    c.table_ = build_table(field, dim, dim * dim, comult, true);
    c.counit_ = Functional(coerce(field, counit));
    return c;
}

Coalgebra Coalgebra::make(Field field, std::size_t dim, std::vector<StructureTerm> comult, Vector counit) {
    Coalgebra c = unchecked(field, dim, std::move(comult), std::move(counit));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
    AxiomReport r = check_coalgebra(c, labels);
    if (const auto* e = r.find("coassociativity"); !e->passed)
        throw AlgebraError(ErrorKind::NotCoassociative, "coassociativity fails", e->failures.front().indices);
    for (const char* name : {"counit_left", "counit_right"})
        if (const auto* e = r.find(name); !e->passed)
            throw AlgebraError(ErrorKind::CounitFails, std::string(name) + " fails", e->failures.front().indices);
    return c;
}

Vector Coalgebra::delta(const Vector& v) const {
    Accumulator acc(dim_ * dim_);
    for (const auto& [k, c] : v.entries()) acc.add_scaled(table_[k], c);
    return acc.take();
}

std::vector<StructureTerm> Coalgebra::terms() const {
    std::vector<StructureTerm> out;
    for (std::size_t k = 0; k < dim_; ++k)
        for (const auto& [p, c] : table_[k].entries()) out.push_back({p / dim_, p % dim_, k, c});
    std::sort(out.begin(), out.end(), [](const StructureTerm& a, const StructureTerm& b) {
        return std::tie(a.k, a.i, a.j) < std::tie(b.k, b.i, b.j);
    });
    return out;
}

AxiomReport check_coalgebra(const Coalgebra& c, const std::vector<std::string>& labels) {
    AxiomReport r;
    const std::size_t n = c.dim();
    auto cop = [&](std::size_t i) { return c.coproduct(i); };
    auto eps = [&](std::size_t i) {
        Scalar v = c.counit().at(i);
        return v.is_zero() ? Vector(1) : Vector(1, {{0, v}});
    };
    auto labels3 = tensor_labels(labels, 3);
    r.touch("coassociativity");
    r.touch("counit_left");
    r.touch("counit_right");
    for (std::size_t k = 0; k < n; ++k) {
        const Vector& d = c.coproduct(k);
        Vector lhs = map_leg(d, n, 2, 0, 2, cop);
        Vector rhs = map_leg(d, n, 2, 1, 2, cop);
        if (!(lhs == rhs))
            r.fail("coassociativity", witness_of({k}, labels, lhs.to_string(labels3), rhs.to_string(labels3)));
        Vector b = Vector::unit(n, k, c.field().one());
        Vector left = map_leg(d, n, 2, 0, 0, eps);
        if (!(left == b)) r.fail("counit_left", witness_of({k}, labels, left.to_string(labels), labels[k]));
        Vector right = map_leg(d, n, 2, 1, 0, eps);
        if (!(right == b)) r.fail("counit_right", witness_of({k}, labels, right.to_string(labels), labels[k]));
    }
    return r;
}

// ---------------------------------------------------------------- WeakBialgebra

WeakBialgebra::WeakBialgebra(Algebra algebra, Coalgebra coalgebra)
    : algebra_(std::move(algebra)), coalgebra_(std::move(coalgebra)) {
    if (algebra_.dim() != coalgebra_.dim())
        throw AlgebraError(ErrorKind::DimensionMismatch, "algebra and coalgebra dimensions differ");
    if (!(algebra_.field() == coalgebra_.field()))
        throw AlgebraError(ErrorKind::FieldMismatch, "algebra and coalgebra fields differ");
    delta_one_ = coalgebra_.delta(algebra_.one());
    const std::size_t n = dim();
    pairing_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pairing_.push_back(coalgebra_.epsilon(algebra_.product(i, j)));
}

WeakBialgebra WeakBialgebra::validated(Algebra algebra, Coalgebra coalgebra) {
    WeakBialgebra wb(std::move(algebra), std::move(coalgebra));
    AxiomReport r = check_weak_bialgebra(wb);
    if (!r.passed()) {
        const auto* e = r.find(r.failed_names().front());
        throw AlgebraError(ErrorKind::ValidationError, e->name + " fails", e->failures.front().indices);
    }
    return wb;
}

Vector WeakBialgebra::tensor_multiply(const Vector& x, const Vector& y, std::size_t legs) const {
    const std::size_t n = dim();
    Accumulator acc(ipow(n, legs));
    std::vector<std::size_t> px(legs), py(legs);
    for (const auto& [p, cp] : x.entries()) {
        for (std::size_t l = legs, v = p; l-- > 0; v /= n) px[l] = v % n;
        for (const auto& [q, cq] : y.entries()) {
            for (std::size_t l = legs, v = q; l-- > 0; v /= n) py[l] = v % n;
            Vector t = algebra_.product(px[0], py[0]);
            for (std::size_t l = 1; l < legs && !t.is_zero(); ++l) t = tensor(t, algebra_.product(px[l], py[l]));
            acc.add_scaled(t, cp * cq);
        }
    }
    return acc.take();
}

namespace {

enum class Counital { T, S, TPrime, SPrime };

Vector counital(const WeakBialgebra& wb, const Vector& r, Counital which) {
    const std::size_t n = wb.dim();
    const auto& pair = wb.counit_pairing();
    auto eps_left = [&](std::size_t i) {  // ε(b_i r)
        Scalar s(0);
        for (const auto& [m, c] : r.entries()) s += c * pair[i * n + m];
        return s;
    };
    auto eps_right = [&](std::size_t i) {  // ε(r b_i)
        Scalar s(0);
        for (const auto& [m, c] : r.entries()) s += c * pair[m * n + i];
        return s;
    };
    Accumulator acc(n);
    for (const auto& [p, c] : wb.delta_one().entries()) {
        std::size_t i = p / n, j = p % n;
        switch (which) {
            case Counital::T: acc.add(j, c * eps_left(i)); break;       // ε(1_1 r) 1_2
            case Counital::S: acc.add(i, c * eps_right(j)); break;      // ε(r 1_2) 1_1
            case Counital::TPrime: acc.add(j, c * eps_right(i)); break; // ε(r 1_1) 1_2
            case Counital::SPrime: acc.add(i, c * eps_left(j)); break;  // ε(1_2 r) 1_1
        }
    }
    return acc.take();
}

Matrix counital_matrix(const WeakBialgebra& wb, Counital which) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < wb.dim(); ++j) cols.push_back(counital(wb, wb.algebra().basis(j), which));
    return Matrix::from_columns(wb.dim(), cols);
}

}  // namespace

Vector WeakBialgebra::eps_t(const Vector& r) const { return counital(*this, r, Counital::T); }
Vector WeakBialgebra::eps_s(const Vector& r) const { return counital(*this, r, Counital::S); }
Vector WeakBialgebra::eps_t_prime(const Vector& r) const { return counital(*this, r, Counital::TPrime); }
Vector WeakBialgebra::eps_s_prime(const Vector& r) const { return counital(*this, r, Counital::SPrime); }
Matrix WeakBialgebra::eps_t_matrix() const { return counital_matrix(*this, Counital::T); }
Matrix WeakBialgebra::eps_s_matrix() const { return counital_matrix(*this, Counital::S); }
Matrix WeakBialgebra::eps_t_prime_matrix() const { return counital_matrix(*this, Counital::TPrime); }
Matrix WeakBialgebra::eps_s_prime_matrix() const { return counital_matrix(*this, Counital::SPrime); }

CounitalImages counital_maps(const WeakBialgebra& wb, const Vector& r) {
    return {wb.eps_t(r), wb.eps_s(r), wb.eps_t_prime(r), wb.eps_s_prime(r)};
}

// ---------------------------------------------------------------- checks

AxiomReport check_weak_bialgebra(const WeakBialgebra& wb) {
    AxiomReport r;
    const auto& A = wb.algebra();
    const auto& labels = wb.labels();
    const std::size_t n = wb.dim();
    const auto l2 = tensor_labels(labels, 2);
    const auto l3 = tensor_labels(labels, 3);

    r.touch("delta_multiplicative");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector lhs = wb.delta(A.product(i, j));
            Vector rhs = wb.tensor_multiply(wb.coalgebra().coproduct(i), wb.coalgebra().coproduct(j));
            if (!(lhs == rhs))
                r.fail("delta_multiplicative", witness_of({i, j}, labels, lhs.to_string(l2), rhs.to_string(l2)));
        }

    const Vector& d1 = wb.delta_one();
    auto cop = [&](std::size_t k) { return wb.coalgebra().coproduct(k); };
    Vector lhs = map_leg(d1, n, 2, 0, 2, cop);
    Vector left = tensor(d1, A.one());
    Vector right = tensor(A.one(), d1);
    Vector lr = wb.tensor_multiply(left, right, 3);
    Vector rl = wb.tensor_multiply(right, left, 3);
    r.check("delta_unit_left", lhs == lr, unit_witness(lhs.to_string(l3), lr.to_string(l3)));
    r.check("delta_unit_right", lhs == rl, unit_witness(lhs.to_string(l3), rl.to_string(l3)));

    const auto& pair = wb.counit_pairing();
    r.touch("counit_weak_mult_12");
    r.touch("counit_weak_mult_21");
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g) {
            const Vector& fg = A.product(f, g);
            const Vector& dg = wb.coalgebra().coproduct(g);
            for (std::size_t h = 0; h < n; ++h) {
                Scalar whole(0), s12(0), s21(0);
                for (const auto& [m, c] : fg.entries()) whole += c * pair[m * n + h];
                for (const auto& [p, c] : dg.entries()) {
                    std::size_t i = p / n, j = p % n;
                    s12 += c * pair[f * n + i] * pair[j * n + h];
                    s21 += c * pair[f * n + j] * pair[i * n + h];
                }
                if (!(whole == s12))
                    r.fail("counit_weak_mult_12", witness_of({f, g, h}, labels, whole.to_string(), s12.to_string()));
                if (!(whole == s21))
                    r.fail("counit_weak_mult_21", witness_of({f, g, h}, labels, whole.to_string(), s21.to_string()));
            }
        }
    return r;
}

Matrix convolve_maps(const WeakBialgebra& wb, const Matrix& f, const Matrix& g) {
    const std::size_t n = wb.dim();
    const auto fc = f.columns();
    const auto gc = g.columns();
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < n; ++k) {
        Accumulator acc(n);
        for (const auto& [p, c] : wb.coalgebra().coproduct(k).entries())
            acc.add_scaled(wb.multiply(fc[p / n], gc[p % n]), c);
        cols.push_back(acc.take());
    }
    return Matrix::from_columns(n, cols);
}

AxiomReport check_antipode(const WeakHopfAlgebra& h) {
    const auto& wb = h.wb;
    const std::size_t n = wb.dim();
    const auto& labels = wb.labels();
    if (h.antipode.rows() != n || h.antipode.cols() != n)
        throw AlgebraError(ErrorKind::DimensionMismatch, "antipode matrix has wrong shape");
    AxiomReport r;
    Matrix id = Matrix::identity(n, wb.field().one());
    Matrix t = convolve_maps(wb, id, h.antipode);
    Matrix s = convolve_maps(wb, h.antipode, id);
    Matrix et = wb.eps_t_matrix();
    Matrix es = wb.eps_s_matrix();
    const auto sc = h.antipode.columns();
    auto cop = [&](std::size_t k) { return wb.coalgebra().coproduct(k); };
    r.touch("antipode_eps_t");
    r.touch("antipode_eps_s");
    r.touch("antipode_S_r1_r2_S_r3");
    for (std::size_t k = 0; k < n; ++k) {
        Vector a = t.column(k), b = et.column(k);
        if (!(a == b)) r.fail("antipode_eps_t", witness_of({k}, labels, wb.algebra().show(a), wb.algebra().show(b)));
        a = s.column(k);
        b = es.column(k);
        if (!(a == b)) r.fail("antipode_eps_s", witness_of({k}, labels, wb.algebra().show(a), wb.algebra().show(b)));

        Vector d2 = map_leg(wb.coalgebra().coproduct(k), n, 2, 0, 2, cop);
        Accumulator acc(n);
        for (const auto& [p, c] : d2.entries()) {
            std::size_t i = p / (n * n), j = (p / n) % n, l = p % n;
            acc.add_scaled(wb.multiply(wb.multiply(sc[i], wb.algebra().basis(j)), sc[l]), c);
        }
        Vector lhs = acc.take();
        if (!(lhs == sc[k]))
            r.fail("antipode_S_r1_r2_S_r3",
                   witness_of({k}, labels, wb.algebra().show(lhs), wb.algebra().show(sc[k])));
    }
    return r;
}

AxiomReport check_counital_projections(const WeakBialgebra& wb) {
    AxiomReport r;
    const std::pair<const char*, Matrix> maps[] = {
        {"eps_t_idempotent", wb.eps_t_matrix()},
        {"eps_s_idempotent", wb.eps_s_matrix()},
        {"eps_t_prime_idempotent", wb.eps_t_prime_matrix()},
        {"eps_s_prime_idempotent", wb.eps_s_prime_matrix()},
    };
    for (const auto& [name, m] : maps) {
        Matrix sq = m * m;
        auto col = first_differing_column(sq, m);
        if (!col)
            r.touch(name);
        else
            r.fail(name, witness_of({*col}, wb.labels(), wb.algebra().show(sq.column(*col)),
                                    wb.algebra().show(m.column(*col))));
    }
    return r;
}

BaseSubalgebras base_subalgebras(const WeakBialgebra& wb) {
    BaseSubalgebras out{image_basis(wb.eps_t_matrix()), image_basis(wb.eps_s_matrix())};
    const Vector& one = wb.algebra().one();
    for (const auto& a : out.source)
        if (!(wb.delta(a) == wb.tensor_multiply(tensor(one, a), wb.delta_one())))
            throw InvariantViolation("element of Im(eps_s) fails the R_s membership identity");
    for (const auto& a : out.target)
        if (!(wb.delta(a) == wb.tensor_multiply(wb.delta_one(), tensor(a, one))))
            throw InvariantViolation("element of Im(eps_t) fails the R_t membership identity");
    return out;
}

// ---------------------------------------------------------------- tensor products

WeakBialgebra tensor_product(const WeakBialgebra& a, const WeakBialgebra& b) {
    if (!(a.field() == b.field()))
        throw AlgebraError(ErrorKind::FieldMismatch,
                           "cannot tensor " + a.field().describe() + " with " + b.field().describe());
    const std::size_t db = b.dim();
    std::vector<std::string> labels;
    for (const auto& x : a.labels())
        for (const auto& y : b.labels()) labels.push_back(x + "⊗" + y);
    auto combine = [db](const std::vector<StructureTerm>& ta, const std::vector<StructureTerm>& tb) {
        std::vector<StructureTerm> out;
        for (const auto& x : ta)
            for (const auto& y : tb) out.push_back({x.i * db + y.i, x.j * db + y.j, x.k * db + y.k, x.c * y.c});
        return out;
    };
    Algebra alg = Algebra::make(a.field(), std::move(labels), combine(a.algebra().terms(), b.algebra().terms()),
                                tensor(a.algebra().one(), b.algebra().one()));
    Coalgebra coalg = Coalgebra::make(a.field(), a.dim() * db, combine(a.coalgebra().terms(), b.coalgebra().terms()),
                                      tensor(a.coalgebra().counit().coeffs, b.coalgebra().counit().coeffs));
    WeakBialgebra out(std::move(alg), std::move(coalg));
    if (!check_weak_bialgebra(out).passed())
        throw InvariantViolation("tensor product of weak bialgebras fails the weak bialgebra axioms");
    return out;
}

WeakHopfAlgebra tensor_product(const WeakHopfAlgebra& a, const WeakHopfAlgebra& b) {
    WeakHopfAlgebra out{tensor_product(a.wb, b.wb), kron(a.antipode, b.antipode)};
    if (!check_antipode(out).passed())
        throw InvariantViolation("tensor product of weak Hopf algebras fails the antipode axioms");
    return out;
}

// ---------------------------------------------------------------- convolution and counit identities

Functional convolution(const WeakBialgebra& wb, const Functional& f, const Functional& g) {
    const std::size_t n = wb.dim();
    if (f.dim() != n || g.dim() != n) throw AlgebraError(ErrorKind::DimensionMismatch, "functional dimension");
    std::vector<Vector::Entry> e;
    for (std::size_t k = 0; k < n; ++k) {
        Scalar s(0);
        for (const auto& [p, c] : wb.coalgebra().coproduct(k).entries()) s += c * f.at(p / n) * g.at(p % n);
        if (!s.is_zero()) e.emplace_back(k, s);
    }
    return Functional(Vector(n, std::move(e)));
}

namespace {

constexpr std::array<const char*, 4> kCounitIdentityNames = {
    "eps_ab_eq_eps_a_eps_t_b",
    "eps_ab_eq_eps_a_eps_s_prime_b",
    "eps_ab_eq_eps_eps_t_prime_a_b",
    "eps_ab_eq_eps_eps_s_a_b",
};

std::array<Scalar, 4> counit_identity_values(const WeakBialgebra& wb, const Vector& a, const Vector& b,
                                             const CounitalImages& ia, const CounitalImages& ib) {
    return {wb.epsilon(wb.multiply(a, ib.eps_t)), wb.epsilon(wb.multiply(a, ib.eps_s_prime)),
            wb.epsilon(wb.multiply(ia.eps_t_prime, b)), wb.epsilon(wb.multiply(ia.eps_s, b))};
}

}  // namespace

AxiomReport weak_counit_identities(const WeakBialgebra& wb, const Vector& a, const Vector& b) {
    AxiomReport r;
    Scalar whole = wb.epsilon(wb.multiply(a, b));
    auto vals = counit_identity_values(wb, a, b, counital_maps(wb, a), counital_maps(wb, b));
    for (std::size_t t = 0; t < 4; ++t)
        r.check(kCounitIdentityNames[t], vals[t] == whole,
                Witness{{}, {wb.algebra().show(a), wb.algebra().show(b)}, whole.to_string(), vals[t].to_string()});
    r.info("eps_ab", whole.to_string());
    return r;
}

AxiomReport weak_counit_identities(const WeakBialgebra& wb) {
    AxiomReport r;
    const std::size_t n = wb.dim();
    std::vector<CounitalImages> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(counital_maps(wb, wb.algebra().basis(i)));
    for (auto name : kCounitIdentityNames) r.touch(name);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector a = wb.algebra().basis(i), b = wb.algebra().basis(j);
            Scalar whole = wb.counit_pairing()[i * n + j];
            auto vals = counit_identity_values(wb, a, b, images[i], images[j]);
            for (std::size_t t = 0; t < 4; ++t)
                if (!(vals[t] == whole))
                    r.fail(kCounitIdentityNames[t],
                           witness_of({i, j}, wb.labels(), whole.to_string(), vals[t].to_string()));
        }
    return r;
}

AxiomReport check_basis_isomorphism(const WeakBialgebra& a, const WeakBialgebra& b,
                                    const std::vector<std::size_t>& perm) {
    AxiomReport r;
    const std::size_t n = a.dim();
    std::vector<char> hit(b.dim(), 0);
    bool bijective = n == b.dim() && perm.size() == n;
    for (std::size_t i = 0; bijective && i < n; ++i) {
        if (perm[i] >= n || hit[perm[i]]) bijective = false;
        else hit[perm[i]] = 1;
    }
    r.check("bijection", bijective, Witness{{}, {"perm"}, std::to_string(perm.size()), std::to_string(b.dim())});
    if (!bijective) return r;

    auto push = [&](const Vector& v) {
        std::vector<Vector::Entry> e;
        for (const auto& [i, c] : v.entries()) e.emplace_back(perm[i], c);
        return Vector(n, std::move(e));
    };
    auto push2 = [&](const Vector& v) {
        std::vector<Vector::Entry> e;
        for (const auto& [p, c] : v.entries()) e.emplace_back(perm[p / n] * n + perm[p % n], c);
        return Vector(n * n, std::move(e));
    };
    r.touch("multiplication");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector x = push(a.algebra().product(i, j));
            const Vector& y = b.algebra().product(perm[i], perm[j]);
            if (!(x == y))
                r.fail("multiplication", witness_of({i, j}, a.labels(), b.algebra().show(x), b.algebra().show(y)));
        }
    r.check("unit", push(a.algebra().one()) == b.algebra().one(), unit_witness("", ""));
    r.touch("comultiplication");
    r.touch("counit");
    for (std::size_t k = 0; k < n; ++k) {
        if (!(push2(a.coalgebra().coproduct(k)) == b.coalgebra().coproduct(perm[k])))
            r.fail("comultiplication", witness_of({k}, a.labels(), "", ""));
        if (!(a.coalgebra().counit().at(k) == b.coalgebra().counit().at(perm[k])))
            r.fail("counit", witness_of({k}, a.labels(), a.coalgebra().counit().at(k).to_string(),
                                        b.coalgebra().counit().at(perm[k]).to_string()));
    }
    return r;
}

}  // namespace weakore
