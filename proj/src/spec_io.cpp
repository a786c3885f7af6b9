#include "weakore/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace weakore {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    throw AlgebraError(ErrorKind::ParseError, where + ": " + what);
}

Scalar read_scalar(const Field& f, const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return f.from_int(j.get<long long>());
        if (j.is_string()) return f.parse(j.get<std::string>());
    } catch (const ScalarError& e) {
        parse_fail(where, e.what());
    }
    parse_fail(where, "expected a scalar string or integer");
}

json write_scalar(const Scalar& s) {
    if (!s.is_rational()) return static_cast<long long>(s.residue_value());
    return s.to_string();
}

Vector read_vector(const Field& f, const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim) parse_fail(where, "expected a list of " + std::to_string(dim) + " scalars");
    std::vector<Vector::Entry> e;
    for (std::size_t i = 0; i < dim; ++i) e.push_back({i, read_scalar(f, j[i], where + "[" + std::to_string(i) + "]")});
    return Vector(dim, std::move(e));
}

json write_vector(const Field& f, const Vector& v) {
    json out = json::array();
    for (const auto& s : v.to_dense()) out.push_back(write_scalar(f.coerce(s)));
    return out;
}

Matrix read_matrix(const Field& f, const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim) parse_fail(where, "expected " + std::to_string(dim) + " columns");
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < dim; ++c) cols.push_back(read_vector(f, j[c], dim, where + "[" + std::to_string(c) + "]"));
    return Matrix::from_columns(dim, cols);
}

json write_matrix(const Field& f, const Matrix& m) {
    json out = json::array();
    for (const auto& c : m.columns()) out.push_back(write_vector(f, c));
    return out;
}

std::vector<StructureTerm> read_terms(const Field& f, const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array()) parse_fail(where, "expected a list of [i, j, k, c] rows");
    std::vector<StructureTerm> out;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const std::string w = where + "[" + std::to_string(r) + "]";
        const json& row = j[r];
        if (!row.is_array() || row.size() != 4) parse_fail(w, "expected [i, j, k, c]");
        std::size_t idx[3];
        for (int t = 0; t < 3; ++t) {
            if (!row[t].is_number_unsigned() || row[t].get<std::size_t>() >= dim)
                parse_fail(w, "index out of range");
            idx[t] = row[t].get<std::size_t>();
        }
        out.push_back({idx[0], idx[1], idx[2], read_scalar(f, row[3], w)});
    }
    return out;
}

json write_terms(const Field& f, std::vector<StructureTerm> terms) {
    std::sort(terms.begin(), terms.end(), [](const StructureTerm& a, const StructureTerm& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    json out = json::array();
    for (const auto& t : terms)
        if (!t.c.is_zero()) out.push_back(json::array({t.i, t.j, t.k, write_scalar(f.coerce(t.c))}));
    return out;
}

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) parse_fail("/", std::string("missing key '") + key + "'");
    return *it;
}

}  // namespace

AlgebraSpec parse_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw AlgebraError(ErrorKind::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object()) parse_fail("/", "expected an object");
    AlgebraSpec s;

    const json& field = require(j, "field");
    const std::string kind = field.value("kind", "");
    if (kind == "rationals") {
        s.field = Field::rationals();
    } else if (kind == "prime") {
        if (!field.contains("p") || !field["p"].is_number_unsigned()) parse_fail("/field", "prime field needs integer p");
        try {
            s.field = Field::prime(field["p"].get<std::uint64_t>());
        } catch (const std::exception& e) {
            parse_fail("/field/p", e.what());
        }
    } else {
        parse_fail("/field/kind", "expected 'rationals' or 'prime'");
    }

    const json& dimj = require(j, "dimension");
    if (!dimj.is_number_unsigned() || dimj.get<std::size_t>() == 0) parse_fail("/dimension", "expected a positive integer");
    const std::size_t dim = dimj.get<std::size_t>();
    if (j.contains("labels")) {
        const json& l = j["labels"];
        if (!l.is_array() || l.size() != dim) parse_fail("/labels", "expected " + std::to_string(dim) + " strings");
        for (const auto& x : l) {
            if (!x.is_string()) parse_fail("/labels", "labels must be strings");
            s.labels.push_back(x.get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < dim; ++i) s.labels.push_back("b" + std::to_string(i));
    }

    s.mult = read_terms(s.field, require(j, "mult"), dim, "/mult");
    s.unit = read_vector(s.field, require(j, "unit"), dim, "/unit");
    s.comult = read_terms(s.field, require(j, "comult"), dim, "/comult");
    s.counit = read_vector(s.field, require(j, "counit"), dim, "/counit");
    if (j.contains("antipode")) s.antipode = read_matrix(s.field, j["antipode"], dim, "/antipode");

    auto read_named = [&](const char* key, auto&& reader, auto& out) {
        if (!j.contains(key)) return;
        const json& m = j[key];
        if (!m.is_object()) parse_fail(std::string("/") + key, "expected an object");
        for (const auto& [name, value] : m.items()) out.emplace(name, reader(value, std::string("/") + key + "/" + name));
    };
    auto vec = [&](const json& v, const std::string& w) { return read_vector(s.field, v, dim, w); };
    auto mat = [&](const json& v, const std::string& w) { return read_matrix(s.field, v, dim, w); };
    read_named("elements", vec, s.elements);
    read_named("functionals", vec, s.functionals);
    read_named("maps", mat, s.maps);
    return s;
}

AlgebraSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AlgebraError(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

namespace {

// Indented layout with arrays of scalars kept on one line.
void pretty(std::string& out, const json& j, int depth) {
    const std::string pad(2 * depth, ' '), inner(2 * (depth + 1), ' ');
    auto flat = [](const json& a) {
        for (const auto& e : a)
            if (e.is_structured()) return false;
        return true;
    };
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out += inner + json(it.key()).dump() + ": ";
            pretty(out, it.value(), depth + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "}";
    } else if (j.is_array() && !j.empty() && !flat(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += inner;
            pretty(out, j[i], depth + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
    } else if (j.is_array()) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
        out += "]";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string emit_spec(const AlgebraSpec& s) {
    json j;
    j["field"] = s.field.is_prime() ? json{{"kind", "prime"}, {"p", s.field.modulus()}} : json{{"kind", "rationals"}};
    j["dimension"] = s.dim();
    j["labels"] = s.labels;
    j["mult"] = write_terms(s.field, s.mult);
    j["unit"] = write_vector(s.field, s.unit);
    j["comult"] = write_terms(s.field, s.comult);
    j["counit"] = write_vector(s.field, s.counit);
    if (s.antipode) j["antipode"] = write_matrix(s.field, *s.antipode);
    if (!s.elements.empty())
        for (const auto& [k, v] : s.elements) j["elements"][k] = write_vector(s.field, v);
    if (!s.functionals.empty())
        for (const auto& [k, v] : s.functionals) j["functionals"][k] = write_vector(s.field, v);
    if (!s.maps.empty())
        for (const auto& [k, v] : s.maps) j["maps"][k] = write_matrix(s.field, v);
    std::string out;
    pretty(out, j, 0);
    return out + "\n";
}

AlgebraSpec spec_from(const WeakBialgebra& wb, const std::optional<Matrix>& antipode) {
    AlgebraSpec s;
    s.field = wb.field();
    s.labels = wb.labels();
    s.mult = wb.algebra().terms();
    s.unit = wb.algebra().one();
    s.comult = wb.coalgebra().terms();
    s.counit = wb.coalgebra().counit().coeffs;
    s.antipode = antipode;
    return s;
}

WeakBialgebra build_weak_bialgebra(const AlgebraSpec& s) {
    try {
        Algebra a = Algebra::make(s.field, s.labels, s.mult, s.unit);
        Coalgebra c = Coalgebra::make(s.field, s.dim(), s.comult, s.counit);
        return WeakBialgebra::validated(std::move(a), std::move(c));
    } catch (const AlgebraError& e) {
        if (e.kind() == ErrorKind::ValidationError) throw;
        throw AlgebraError(ErrorKind::ValidationError, e.what(), e.witness());
    }
}

WeakHopfAlgebra build_weak_hopf_algebra(const AlgebraSpec& s) {
    if (!s.antipode) throw AlgebraError(ErrorKind::ValidationError, "spec has no antipode");
    WeakHopfAlgebra h{build_weak_bialgebra(s), *s.antipode};
    const AxiomReport r = check_antipode(h);
    if (!r.passed()) throw AlgebraError(ErrorKind::ValidationError, "antipode axioms fail:\n" + r.to_text());
    return h;
}

bool same_spec(const AlgebraSpec& a, const AlgebraSpec& b) {
    auto sorted = [](std::vector<StructureTerm> t, const Field& f) {
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>> out;
        for (const auto& x : t)
            if (!x.c.is_zero()) out.emplace_back(x.i, x.j, x.k, f.coerce(x.c).to_string());
        std::sort(out.begin(), out.end());
        return out;
    };
    return a.field == b.field && a.labels == b.labels && sorted(a.mult, a.field) == sorted(b.mult, b.field) &&
           a.unit == b.unit && sorted(a.comult, a.field) == sorted(b.comult, b.field) && a.counit == b.counit &&
           a.antipode == b.antipode && a.elements == b.elements && a.functionals == b.functionals && a.maps == b.maps;
}

}  // namespace weakore
