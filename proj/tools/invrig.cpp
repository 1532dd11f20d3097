// invrig: command-line front end for the inverse-semiring library.
//
// Exit codes: 0 = run completed and all mathematical checks passed
// (property verdicts like "not E-unitary" are data, not failures),
// 1 = a mathematical check failed (a witness is reported),
// 2 = usage, parse or budget error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invrig/invrig.hpp"

namespace {

using namespace invrig;

struct Options {
    bool machine = false;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultSearchBudget;
};

// Line-delimited output: text mode prints `label: value`, machine mode
// prints `label=value` with a stable field order.
struct Reporter {
    bool machine;
    void line(const std::string& key, const std::string& value) {
        if (machine)
            std::cout << key << "=" << value << "\n";
        else
            std::cout << key << ": " << value << "\n";
    }
    void raw(const std::string& text) { std::cout << text; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RawTables builtin_raw(const std::string& name) {
    if (name == "B1") return builtins::B1().raw();
    if (name == "Z2") return builtins::Z2().raw();
    if (name == "If0") return builtins::If0().raw();
    if (name == "End_Z2_0") return builtins::End_Z2_0().raw();
    if (name == "Z2_0") return adjoin_zero_table(builtins::Z2()).raw();
    throw std::invalid_argument("unknown builtin: " + name +
                                " (known: B1, Z2, If0, End_Z2_0, Z2_0)");
}

RawTables load_raw(const std::string& file, const std::string& builtin) {
    if (!builtin.empty()) return builtin_raw(builtin);
    if (file.empty()) throw std::invalid_argument("need an input file or --builtin");
    return parse_tables(read_file(file));
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

Subset parse_gens(const FiniteModule& mod, const std::string& csv) {
    Subset s = 0;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) s = subset_with(s, mod.index_of(item));
    }
    return s;
}

int cmd_validate(const Options& opt, const std::string& file, const std::string& builtin) {
    Reporter rep{opt.machine};
    RawTables raw = load_raw(file, builtin);
    try {
        FiniteInverseSemiring r = validate(raw);
        LawReport lr = law_report(r, r.carrier());
        for (const auto& e : lr.entries) rep.line("law." + e.law, e.pass ? "pass" : "fail " + e.witness);
        rep.line("valid", yesno(lr.ok()));
        return lr.ok() ? 0 : 1;
    } catch (const ValidationError& err) {
        for (const auto& e : err.report.entries)
            if (!e.pass) rep.line("law." + e.law, "fail " + e.witness);
        rep.line("valid", "no");
        rep.line("error", err.what());
        return 1;
    }
}

int cmd_classify(const Options& opt, const std::string& file, const std::string& builtin) {
    Reporter rep{opt.machine};
    FiniteInverseSemiring r = validate(load_raw(file, builtin));
    auto c = classify(r);
    rep.line("tag", to_string(c.tag));
    rep.line("zero_one", r.names()[c.zero_one]);
    return 0;
}

int cmd_idempotents(const Options& opt, const std::string& file, const std::string& builtin) {
    Reporter rep{opt.machine};
    FiniteInverseSemiring r = validate(load_raw(file, builtin));
    FiniteModule self = self_module(r);
    rep.line("idempotents", subset_str(self, idempotent_subset(r)));
    FiniteInverseSemiring e = idempotent_semiring_of(r);
    rep.line("E.size", std::to_string(e.size()));
    rep.line("E.one", e.names()[e.one()]);
    if (!opt.machine) rep.raw(print_tables(e.raw()));
    return 0;
}

int cmd_groups(const Options& opt, const std::string& file, const std::string& builtin) {
    Reporter rep{opt.machine};
    FiniteInverseSemiring r = validate(load_raw(file, builtin));
    FiniteModule self = self_module(r);
    int z1 = idem(r, r.one());
    for (int z : subset_elements(idempotent_subset(r))) {
        Subset g = group_at(r, z);
        std::string tagnote;
        if (z == r.zero()) tagnote = " (two-sided ideal)";
        if (z == z1) tagnote += " (ring of scalars)";
        rep.line("G(" + r.names()[z] + ")", subset_str(self, g) + (opt.machine ? "" : tagnote));
    }
    return 0;
}

int cmd_ideals(const Options& opt, const std::string& file, const std::string& builtin,
               const std::string& side) {
    Reporter rep{opt.machine};
    FiniteInverseSemiring r = validate(load_raw(file, builtin));
    Sidedness s = Sidedness::two_sided;
    if (side == "left") s = Sidedness::left;
    if (side == "right") s = Sidedness::right;
    FiniteModule self = self_module(r, s);
    for (Subset i : all_submodules(self)) {
        std::string props;
        props += is_subtractive(self, i) ? "subtractive" : "not-subtractive";
        props += is_upward_closed(self, i) ? ",upward-closed" : "";
        bool principal = false;
        for (int g = 0; g < self.size(); ++g)
            if (submodule_generate(self, subset_with(0u, g)) == i) principal = true;
        props += principal ? ",principal" : "";
        rep.line("ideal " + subset_str(self, i), props);
    }
    return 0;
}

int cmd_closure(const Options& opt, const std::string& file, const std::string& builtin,
                const std::string& gens) {
    Reporter rep{opt.machine};
    FiniteInverseSemiring r = validate(load_raw(file, builtin));
    FiniteModule self = self_module(r);
    Subset g = parse_gens(self, gens);
    Subset sub = submodule_generate(self, g);
    rep.line("generated", subset_str(self, sub));
    rep.line("down_closure", subset_str(self, down_closure(self, sub)));
    rep.line("up_closure", subset_str(self, up_closure(self, sub)));
    rep.line("subtractive_closure", subset_str(self, subtractive_closure(self, g)));
    return 0;
}

int cmd_quotient(const Options& opt, const std::string& file, const std::string& builtin,
                 const std::string& gens) {
    Reporter rep{opt.machine};
    FiniteInverseSemiring r = validate(load_raw(file, builtin));
    FiniteModule self = self_module(r);
    Subset ideal = submodule_generate(self, parse_gens(self, gens));
    rep.line("ideal", subset_str(self, ideal));
    Congruence c = congruence_from_submodule(self, ideal);
    Subset kernel = kernel_of(self, c);
    rep.line("kernel", subset_str(self, kernel));
    rep.line("kernel_is_down_closure", yesno(kernel == down_closure(self, ideal)));
    FiniteInverseSemiring q = quotient_semiring(r, c);
    rep.line("classes", std::to_string(q.size()));
    if (!opt.machine) rep.raw(print_tables(q.raw()));
    // kernel = down-closure(S) is a theorem; failing it is an engine error.
    return kernel == down_closure(self, ideal) ? 0 : 1;
}

int cmd_lattice(const Options& opt, const std::string& file, const std::string& builtin) {
    Reporter rep{opt.machine};
    FiniteInverseSemiring r = validate(load_raw(file, builtin));
    FiniteModule self = self_module(r);

    // The restricted modular law is a theorem: any violation is exit 1.
    std::vector<Subset> subs = all_submodules(self);
    int checked = 0;
    for (Subset s2 : subs) {
        if (!is_subtractive(self, s2)) continue;
        for (Subset s1 : subs) {
            if (!subset_leq(s1, s2)) continue;
            for (Subset x : subs) {
                ++checked;
                if (!restricted_modular_check(self, s1, x, s2)) {
                    rep.line("restricted_modular_violation",
                             subset_str(self, s1) + " " + subset_str(self, x) + " " +
                                 subset_str(self, s2));
                    return 1;
                }
            }
        }
    }
    rep.line("restricted_modular", "holds (" + std::to_string(checked) + " triples)");

    auto report_violations = [&](const char* key, bool subtractive_only) {
        auto vs = find_modularity_counterexamples(self, subtractive_only);
        rep.line(key, std::to_string(vs.size()) + " violations");
        for (const auto& v : vs)
            rep.line(std::string(key) + ".witness", "s1=" + subset_str(self, v.s1) +
                                                        " s2=" + subset_str(self, v.s2) +
                                                        " x=" + subset_str(self, v.x));
    };
    report_violations("modular_law", false);
    report_violations("subtractive_modular_law", true);
    return 0;
}

int cmd_eunitary(const Options& opt, const std::string& file, const std::string& builtin) {
    Reporter rep{opt.machine};
    FiniteInverseSemiring r = validate(load_raw(file, builtin));
    EUnitaryEmbedding e = embed_eunitary(r);
    bool eu = !e.witness.has_value();
    rep.line("e_unitary", yesno(eu));
    rep.line("embedding_injective", yesno(e.injective));
    if (e.witness) rep.line("witness", r.names()[*e.witness]);
    // The theorem says the two verdicts coincide.
    return eu == e.injective ? 0 : 1;
}

int cmd_embed(const Options& opt, const std::string& file, const std::string& builtin) {
    Reporter rep{opt.machine};
    FiniteInverseSemiring r = validate(load_raw(file, builtin));
    EUnitaryEmbedding e = embed_eunitary(r);
    for (int x = 0; x < r.size(); ++x)
        rep.line("phi." + r.names()[x], e.target.names()[e.phi[x]]);
    rep.line("injective", yesno(e.injective));
    return 0;
}

int cmd_reflect(const Options& opt, const std::string& file, const std::string& builtin) {
    Reporter rep{opt.machine};
    FiniteInverseSemiring r = validate(load_raw(file, builtin));

    FiniteInverseSemiring ring = quotient_semiring(r, idempotent_subset(r));
    rep.line("ring_reflection.size", std::to_string(ring.size()));
    rep.line("ring_reflection.is_ring", yesno(classify(ring).tag == StructureTag::ring));
    if (!opt.machine) rep.raw(print_tables(ring.raw()));

    FiniteInverseSemiring e = idempotent_semiring_of(r);
    rep.line("idempotent_reflection.size", std::to_string(e.size()));
    std::vector<int> to_e(r.size());
    std::vector<bool> hit(e.size(), false);
    bool injective_on_idem = true;
    for (int x = 0; x < r.size(); ++x) {
        to_e[x] = e.index_of(r.names()[idem(r, x)]);
        hit[to_e[x]] = true;
        rep.line("idem_map." + r.names()[x], e.names()[to_e[x]]);
    }
    bool surjective = true;
    for (bool h : hit) surjective = surjective && h;
    for (int x : subset_elements(idempotent_subset(r)))
        for (int y : subset_elements(idempotent_subset(r)))
            if (x != y && to_e[x] == to_e[y]) injective_on_idem = false;
    bool hom = true;
    for (int x = 0; x < r.size() && hom; ++x)
        for (int y = 0; y < r.size() && hom; ++y)
            hom = to_e[r.add(x, y)] == e.add(to_e[x], to_e[y]) &&
                  to_e[r.mul(x, y)] == e.mul(to_e[x], to_e[y]);
    rep.line("idem_map.homomorphism", yesno(hom));
    rep.line("idem_map.surjective", yesno(surjective));
    rep.line("idem_map.injective_on_idempotents", yesno(injective_on_idem));
    return hom && surjective && injective_on_idem &&
                   classify(ring).tag == StructureTag::ring
               ? 0
               : 1;
}

int cmd_heart(const Options& opt, const std::string& file, const std::string& builtin) {
    Reporter rep{opt.machine};
    FiniteInverseSemiring r = validate(load_raw(file, builtin));
    FiniteModule self = self_module(r);
    Heart h = heart_of(r);
    rep.line("G(0)", subset_str(self, h.group_zero));
    rep.line("G(0_1)", subset_str(self, h.group_zero_one));
    rep.line("heart.size", std::to_string(h.heart.size()));
    rep.line("hom_injective", yesno(h.hom_injective));
    for (int x = 0; x < h.heart.size(); ++x)
        rep.line("hom." + h.heart.names()[x], r.names()[h.hom[x]]);
    if (!opt.machine) rep.raw(print_tables(h.heart.raw()));
    return 0;
}

int cmd_endsr(const Options& opt, const std::string& file, const std::string& builtin) {
    Reporter rep{opt.machine};
    RawMonoidTables x;
    if (builtin == "Z2_0")
        x = builtins::Z2_adjoined_monoid();
    else if (!builtin.empty())
        throw std::invalid_argument("unknown builtin monoid: " + builtin);
    else
        x = parse_monoid_tables(read_file(file));
    FiniteInverseSemiring e = endomorphism_semiring(x, opt.budget);
    rep.line("size", std::to_string(e.size()));
    rep.line("tag", to_string(classify(e).tag));
    if (!opt.machine) rep.raw(print_tables(e.raw()));
    return 0;
}

int cmd_poly(const Options& opt, const std::string& kind, const std::string& op,
             const std::vector<std::string>& args) {
    Reporter rep{opt.machine};
    if (kind == "bounded") {
        BoundedPolySemiring sr;
        auto need = [&](std::size_t n) {
            if (args.size() != n)
                throw std::invalid_argument("bounded operands are (expr, bound) pairs");
        };
        BoundedPoly result;
        if (op == "add" || op == "mul") {
            need(4);
            BoundedPoly a = parse_bounded_poly(args[0], args[1]);
            BoundedPoly b = parse_bounded_poly(args[2], args[3]);
            result = op == "add" ? sr.add(a, b) : sr.mul(a, b);
        } else if (op == "neg" || op == "idem") {
            need(2);
            BoundedPoly a = parse_bounded_poly(args[0], args[1]);
            result = op == "neg" ? sr.neg(a) : idem(sr, a);
        } else {
            throw std::invalid_argument("poly op must be add, mul, neg or idem");
        }
        rep.line("result", sr.show(result));
        return 0;
    }
    if (kind == "z0") {
        MultiPolySemiring sr{1};
        MultiPoly result = sr.zero();
        if (op == "add" || op == "mul") {
            if (args.size() != 2) throw std::invalid_argument("z0 " + op + " takes 2 operands");
            MultiPoly a = parse_z0_poly(args[0]), b = parse_z0_poly(args[1]);
            result = op == "add" ? sr.add(a, b) : sr.mul(a, b);
        } else if (op == "neg" || op == "idem") {
            if (args.size() != 1) throw std::invalid_argument("z0 " + op + " takes 1 operand");
            MultiPoly a = parse_z0_poly(args[0]);
            result = op == "neg" ? sr.neg(a) : idem(sr, a);
        } else {
            throw std::invalid_argument("poly op must be add, mul, neg or idem");
        }
        rep.line("result", sr.show(result));
        return 0;
    }
    throw std::invalid_argument("poly kind must be bounded or z0");
}

// The motivating computation (x^2+x) + (-x^2) carried out in the
// polynomial ring, in Z0[x], and in bounded polynomials.
int cmd_demo(const Options& opt) {
    Reporter rep{opt.machine};
    MultiPolySemiring z0x{1};
    MultiPoly p = parse_z0_poly("x^2 + x");
    MultiPoly q = parse_z0_poly("-x^2");
    MultiPoly sum = z0x.add(p, q);

    IntPoly ring_sum = ring_reflection(p) + ring_reflection(q);
    MultiPoly ring_as_z0(1, ring_sum.terms());

    BoundedPolySemiring bp;
    BoundedPoly bsum = bp.add(parse_bounded_poly("x^2 + x", "2"), parse_bounded_poly("-x^2", "2"));

    rep.line("ring", z0x.show(ring_as_z0));
    rep.line("z0poly", z0x.show(sum));
    rep.line("bounded", bp.show(bsum));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"inverse semiring toolkit"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("INVRIG_BUDGET")) opt.budget = std::strtoull(env, nullptr, 10);
    app.add_flag("--machine", opt.machine, "line-delimited machine-readable output");
    app.add_option("--seed", opt.seed, "seed for sampled checks");
    app.add_option("--budget", opt.budget, "search budget (overrides INVRIG_BUDGET)");

    std::string file, builtin, gens, side = "two-sided", kind = "bounded", op;
    std::vector<std::string> poly_args;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", file, "finite-structure file");
        sub->add_option("--builtin", builtin, "builtin structure name");
    };

    add_input(app.add_subcommand("validate", "check the inverse-semiring axioms exhaustively"));
    add_input(app.add_subcommand("classify", "ring / idempotent-semiring / neither"));
    add_input(app.add_subcommand("idempotents", "E(R) and its semiring structure"));
    add_input(app.add_subcommand("groups", "the group G(z) at each idempotent z"));
    auto* ideals = app.add_subcommand("ideals", "enumerate ideals with their properties");
    add_input(ideals);
    ideals->add_option("--side", side, "left, right or two-sided (default)");
    auto* closure = app.add_subcommand("closure", "submodule / order closures of a generating set");
    add_input(closure);
    closure->add_option("--gens", gens, "comma-separated element names")->required();
    auto* quot = app.add_subcommand("quotient", "quotient by the ideal generated by --gens");
    add_input(quot);
    quot->add_option("--gens", gens, "comma-separated element names")->required();
    add_input(app.add_subcommand("lattice", "modular-law analysis of the ideal lattices"));
    add_input(app.add_subcommand("eunitary", "E-unitary verdict and embedding injectivity"));
    add_input(app.add_subcommand("embed", "the map into (ring reflection) x E(R)"));
    add_input(app.add_subcommand("reflect", "ring and idempotent reflections"));
    add_input(app.add_subcommand("heart", "the heart I(z) and its map into R"));
    auto* endsr = app.add_subcommand("endsr", "endomorphism semiring of an inverse monoid");
    endsr->add_option("file", file, "monoid file");
    endsr->add_option("--builtin", builtin, "builtin monoid name (Z2_0)");
    auto* poly = app.add_subcommand("poly", "bounded / Z0 polynomial arithmetic");
    poly->add_option("--kind", kind, "bounded (default) or z0");
    poly->add_option("op", op, "add, mul, neg or idem")->required();
    poly->add_option("args", poly_args, "operands");
    app.add_subcommand("demo", "the degree-bound story in three carriers");

    // Let --machine / --seed / --budget appear after the verb as well.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::string verb = app.get_subcommands().front()->get_name();
        if (verb == "validate") return cmd_validate(opt, file, builtin);
        if (verb == "classify") return cmd_classify(opt, file, builtin);
        if (verb == "idempotents") return cmd_idempotents(opt, file, builtin);
        if (verb == "groups") return cmd_groups(opt, file, builtin);
        if (verb == "ideals") return cmd_ideals(opt, file, builtin, side);
        if (verb == "closure") return cmd_closure(opt, file, builtin, gens);
        if (verb == "quotient") return cmd_quotient(opt, file, builtin, gens);
        if (verb == "lattice") return cmd_lattice(opt, file, builtin);
        if (verb == "eunitary") return cmd_eunitary(opt, file, builtin);
        if (verb == "embed") return cmd_embed(opt, file, builtin);
        if (verb == "reflect") return cmd_reflect(opt, file, builtin);
        if (verb == "heart") return cmd_heart(opt, file, builtin);
        if (verb == "endsr") return cmd_endsr(opt, file, builtin);
        if (verb == "poly") return cmd_poly(opt, kind, op, poly_args);
        if (verb == "demo") return cmd_demo(opt);
        std::cerr << "unknown verb\n";
        return 2;
    } catch (const invrig::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const invrig::BudgetExceeded& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::logic_error& err) {
        // Engine self-check failure: a theorem did not hold.
        std::cerr << "engine error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
