// weakore: command-line front end.
//
//   weakore check <spec>
//   weakore grouplikes --matrix <n> | --brute <spec>
//   weakore characters <spec> --verify <functional>
//   weakore panov <spec> [--sigma s] [--delta d] [--g g] [--hopf]
//   weakore ore build <spec> [--sigma s] [--delta d] [--g g] [--verify-degree d]
//   weakore example sweedler | matrix <n> | groupoid <Zm> <n> | section5 --group Zm --n n --rho .. --q ..
//
// Exit status: 0 all checks pass, 1 some check failed, 2 invalid input.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weakore/catalog.hpp"
#include "weakore/fixtures.hpp"
#include "weakore/grouplike.hpp"
#include "weakore/ore.hpp"
#include "weakore/panov.hpp"
#include "weakore/spec_io.hpp"

using namespace weakore;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

int emit(const AxiomReport& r) {
    std::cout << r.to_text();
    return r.passed() ? kPass : kFail;
}

template <class Map>
const auto& named(const Map& m, const std::string& name, const char* what) {
    auto it = m.find(name);
    if (it == m.end()) throw AlgebraError(ErrorKind::ParseError, std::string("spec has no ") + what + " named '" + name + "'");
    return it->second;
}

std::size_t parse_cyclic(const std::string& name) {
    if (name.size() < 2 || name[0] != 'Z') throw AlgebraError(ErrorKind::ParseError, "group must be Z<m>, got " + name);
    try {
        std::size_t m = std::stoul(name.substr(1));
        if (m == 0) throw std::invalid_argument("zero");
        return m;
    } catch (const std::exception&) {
        throw AlgebraError(ErrorKind::ParseError, "group must be Z<m>, got " + name);
    }
}

std::vector<Scalar> parse_scalars(const std::vector<std::string>& in) {
    std::vector<Scalar> out;
    for (const auto& s : in) {
        try {
            out.push_back(Field::rationals().parse(s));
        } catch (const ScalarError& e) {
            throw AlgebraError(ErrorKind::ParseError, e.what());
        }
    }
    return out;
}

int cmd_check(const std::string& path) {
    const AlgebraSpec spec = load_spec(path);
    const WeakBialgebra wb = build_weak_bialgebra(spec);
    AxiomReport r = check_weak_bialgebra(wb);
    r.merge(check_counital_projections(wb));
    if (spec.antipode) r.merge(check_antipode(WeakHopfAlgebra{wb, *spec.antipode}));
    return emit(r);
}

int cmd_grouplikes(std::size_t matrix_n, const std::string& brute) {
    if (!brute.empty()) {
        const WeakBialgebra wb = build_weak_bialgebra(load_spec(brute));
        const auto all = brute_force_weak_grouplikes(wb);
        std::cout << "INFO count_including_zero " << all.size() << "\n";
        for (const auto& g : all) std::cout << "GROUPLIKE " << wb.algebra().show(g) << "\n";
        return kPass;
    }
    const auto found = enumerate_weak_grouplikes_matrix(matrix_n);
    std::size_t invertible = 0;
    for (const auto& g : found.nonzero) invertible += g.is_invertible;
    std::cout << "INFO nonzero " << found.nonzero.size() << "\nINFO invertible " << invertible << "\n";
    const WeakHopfAlgebra m = matrix_algebra(matrix_n);
    for (const auto& g : found.nonzero)
        std::cout << "GROUPLIKE " << m.wb.algebra().show(g.element) << (g.is_invertible ? " invertible" : "") << "\n";
    return kPass;
}

int cmd_characters(const std::string& path, const std::string& name) {
    const AlgebraSpec spec = load_spec(path);
    const WeakBialgebra wb = build_weak_bialgebra(spec);
    const Functional chi(named(spec.functionals, name, "functional"));
    AxiomReport r;
    r.check("weak_left_character", is_weak_character(wb, chi, Side::Left));
    r.check("weak_right_character", is_weak_character(wb, chi, Side::Right));
    const auto inv = convolution_inverse(wb, chi);
    r.info("left_inverse", inv.left ? wb.algebra().show(inv.left->coeffs) : "none");
    r.info("right_inverse", inv.right ? wb.algebra().show(inv.right->coeffs) : "none");
    r.info("two_sided_inverse", inv.two_sided ? wb.algebra().show(inv.two_sided->coeffs) : "none");
    if (spec.antipode && r.passed()) r.merge(char_antipode_report(WeakHopfAlgebra{wb, *spec.antipode}, chi));
    return emit(r);
}

struct OreNames {
    std::string sigma = "sigma";
    std::string delta = "delta";
    std::string g = "g";
};

int cmd_panov(const std::string& path, const OreNames& names, bool hopf) {
    const AlgebraSpec spec = load_spec(path);
    const WeakBialgebra wb = build_weak_bialgebra(spec);
    const Matrix& sigma = named(spec.maps, names.sigma, "map");
    const Matrix& delta = named(spec.maps, names.delta, "map");
    const Vector& g = named(spec.elements, names.g, "element");
    if (hopf) {
        const WeakHopfAlgebra h = build_weak_hopf_algebra(spec);
        const PanovVerdict v = hopf_conditions(h, sigma, delta, g);
        std::cout << v.to_text(wb.labels());
        return v.passed ? kPass : kFail;
    }
    const PanovVerdict nec = panov_necessary(wb, sigma, delta, g);
    const PanovVerdict suf = panov_sufficient(wb, sigma, delta, g);
    std::cout << "# necessary\n" << nec.to_text(wb.labels()) << "# sufficient\n" << suf.to_text(wb.labels());
    return suf.passed ? kPass : kFail;
}

int cmd_ore_build(const std::string& path, const OreNames& names, std::size_t degree) {
    const AlgebraSpec spec = load_spec(path);
    const WeakBialgebra wb = build_weak_bialgebra(spec);
    if (spec.antipode) build_weak_hopf_algebra(spec);
    const OreAlgebra ore = OreAlgebra::make(wb, named(spec.maps, names.sigma, "map"), named(spec.maps, names.delta, "map"),
                                            spec.antipode);
    const Vector& g = named(spec.elements, names.g, "element");
    OreExtension ext = extend_coalgebra(ore, g);
    if (spec.antipode) {
        const PanovVerdict v = hopf_conditions(WeakHopfAlgebra{wb, *spec.antipode}, ore.sigma(), ore.delta(), g);
        if (v.passed) ext = extend_antipode(ext);
        else std::cout << "INFO antipode not extended\n";
    }
    return emit(verify_extension(ext, degree));
}

int cmd_example(const AlgebraSpec& spec, const std::string& output) {
    const std::string text = emit_spec(spec);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw AlgebraError(ErrorKind::ParseError, "cannot write " + output);
        out << text;
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weak Hopf algebras and their Ore extensions"};
    app.require_subcommand(1);

    std::string spec_path, brute, functional, output, group = "Z2";
    std::size_t matrix_n = 0, degree = 3, n = 1;
    std::vector<std::string> rho{"1", "-1"}, q{"1"};
    bool hopf = false;
    OreNames names;

    auto* check = app.add_subcommand("check", "weak bialgebra and antipode axioms");
    check->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);

    auto* gl = app.add_subcommand("grouplikes", "weak group-like elements");
    auto* gl_m = gl->add_option("--matrix", matrix_n, "enumerate in M_n(Q)")->check(CLI::PositiveNumber);
    auto* gl_b = gl->add_option("--brute", brute, "exhaustive search over a spec on F_p")->check(CLI::ExistingFile);
    gl_m->excludes(gl_b);
    gl->require_option(1);

    auto* ch = app.add_subcommand("characters", "classify a functional");
    ch->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
    ch->add_option("--verify", functional, "name of the functional")->required();

    auto add_names = [&](CLI::App* c) {
        c->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
        c->add_option("--sigma", names.sigma, "map name")->capture_default_str();
        c->add_option("--delta", names.delta, "map name")->capture_default_str();
        c->add_option("--g", names.g, "element name")->capture_default_str();
    };
    auto* pv = app.add_subcommand("panov", "extension conditions for R[x; sigma, delta]");
    add_names(pv);
    pv->add_flag("--hopf", hopf, "weak Hopf conditions");

    auto* ore = app.add_subcommand("ore", "Ore extensions");
    ore->require_subcommand(1);
    auto* build = ore->add_subcommand("build", "extend and verify");
    add_names(build);
    build->add_option("--verify-degree", degree, "degree bound")->capture_default_str()->check(CLI::Range(0, 8));

    auto* ex = app.add_subcommand("example", "emit a spec file");
    ex->require_subcommand(1);
    ex->add_option("-o,--output", output, "write to a file");
    ex->fallthrough();
    auto* ex_sw = ex->add_subcommand("sweedler", "QZ_2 with sigma(t) = -t, delta = 0, g = t");
    auto* ex_m = ex->add_subcommand("matrix", "M_n(Q)");
    ex_m->add_option("n", matrix_n)->required()->check(CLI::PositiveNumber);
    auto* ex_g = ex->add_subcommand("groupoid", "M_n(Q Z_m)");
    ex_g->add_option("group", group)->required();
    ex_g->add_option("n", n)->required()->check(CLI::PositiveNumber);
    auto* ex_5 = ex->add_subcommand("section5", "M_n(Q Z_m) with a solved alpha and delta = (1 - g)tau^l_alpha");
    ex_5->add_option("--group", group)->capture_default_str();
    ex_5->add_option("--n", n)->capture_default_str()->check(CLI::PositiveNumber);
    ex_5->add_option("--rho", rho, "rho(t^k), k = 0..m-1")->capture_default_str();
    auto* q_opt = ex_5->add_option("--q", q, "scales q_1..q_n (default all 1)");
    for (auto* sub : {ex_sw, ex_m, ex_g, ex_5}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kInvalid;
    }

    try {
        if (*check) return cmd_check(spec_path);
        if (*gl) return cmd_grouplikes(matrix_n, brute);
        if (*ch) return cmd_characters(spec_path, functional);
        if (*pv) return cmd_panov(spec_path, names, hopf);
        if (*build) return cmd_ore_build(spec_path, names, degree);
        if (*ex_sw) return cmd_example(sweedler_data_spec(), output);
        if (*ex_m) return cmd_example(matrix_spec(matrix_n), output);
        if (*ex_g) return cmd_example(groupoid_spec(parse_cyclic(group), n), output);
        if (*ex_5) {
            if (q_opt->count() == 0) q.assign(n, "1");
            return cmd_example(section5_spec(parse_cyclic(group), n, parse_scalars(rho), parse_scalars(q)), output);
        }
    } catch (const AlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
