// Command-line front end: aumann <command> <workspace.yaml> [args] [flags]
//
// Exit status is 0 exactly when every certificate, oracle check, chain check
// or axiom asserted by the command holds; 1 when one fails; 2 on input errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aumann/axioms.hpp"
#include "aumann/external.hpp"
#include "aumann/integral.hpp"
#include "aumann/mutants.hpp"
#include "aumann/text.hpp"
#include "aumann/workspace.hpp"

using namespace aumann;

namespace {

struct Flags {
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
    std::string epsilon = "auto";
    std::string w_samples;
    bool serial = false;
};

std::string join(const std::vector<std::string>& parts)
{
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
    return s;
}

void header(std::ostream& out, const std::string& command, const Workspace& ws, const Flags& f)
{
    out << "# aumann " << command << "\n"
        << "# workspace: " << ws.path << "\n"
        << "# dimension: " << ws.dimension << ", atoms: " << ws.atoms() << ", c: " << to_string(ws.cone().interior_point())
        << "\n"
        << "# flags: --seed " << f.seed << " --trials " << f.trials << " --epsilon-schedule " << f.epsilon
        << " --w-samples " << (f.w_samples.empty() ? "none" : f.w_samples) << " --serial-functional "
        << (f.serial ? "true" : "false") << "\n";
}

std::optional<Rational> epsilon_constant(const Flags& f)
{
    if (f.epsilon == "auto") return std::nullopt;
    const Rational k = parse_rational(f.epsilon);
    if (k < 0) throw ValidationError("--epsilon-schedule constant must be >= 0");
    return k;
}

UpperSet set_arg(const Workspace& ws, const std::string& text)
{
    auto it = ws.sets.find(text);
    if (it != ws.sets.end()) return it->second;
    return parse_set(text, ws.cone(), "argument '" + text + "'");
}

Vector vector_arg(const Workspace& ws, const std::string& text)
{
    const YAML::Node n = YAML::Load(text);
    detail::YamlReader rd("argument '" + text + "'");
    return rd.vector(n, ws.dimension);
}

AtomSet atoms_arg(const Workspace& ws, const std::vector<std::string>& names)
{
    AtomSet a;
    for (const auto& n : names) a.insert(ws.space().index_of(n));
    return a;
}

SetFunctional resolve_functional(const std::string& spec, const Workspace& ws)
{
    std::istringstream in(spec);
    std::string kind, measure;
    in >> kind >> measure;
    if (kind.rfind("external:", 0) == 0) {
        const std::string cmd = spec.substr(spec.find(':') + 1);
        if (cmd.empty()) throw ValidationError("external functional needs a command");
        return external_functional(cmd, ws);
    }
    if (measure.empty()) {
        if (ws.measures.size() == 1) {
            measure = ws.measures.begin()->first;
        } else if (ws.measures.count("mu")) {
            measure = "mu";
        } else {
            throw ValidationError("functional '" + spec + "' needs a measure name");
        }
    }
    const AtomicMeasure& mu = ws.measure(measure);
    if (kind == "builtin:integral" || kind == "integral") return integral_functional(mu, ws.cone(), measure);
    if (kind.rfind("mutant:", 0) == 0) return make_mutant(kind.substr(7), mu, ws.cone(), measure);
    throw ValidationError("unknown functional '" + spec + "' (builtin:integral <mu>, mutant:<name> <mu>, external:<cmd>)");
}

void print_certificate(std::ostream& out, const IntegralResult& r)
{
    out << "integral: " << format_set(r.value) << "\n"
        << "generators: " << format_vrep(r.value) << "\n"
        << "support certificate (w: support of integral | sum of mu(x) support(F(x), w)):\n";
    for (const auto& e : r.certificate) {
        out << "  " << to_string(e.normal) << ": " << to_string(e.lhs) << " | " << to_string(e.rhs)
            << (e.holds() ? "  ok" : "  MISMATCH") << "\n";
    }
    out << "status: " << (r.certified() ? "certified" : "CERTIFICATE FAILED") << "\n";
}

void print_counterexample(std::ostream& out, const Counterexample& cx, const AtomicSpace& sp, const std::string& pad)
{
    out << pad << "counterexample: " << cx.description << "\n";
    for (const auto& [k, v] : cx.parameters) out << pad << "  " << k << " = " << v << "\n";
    for (const auto& [k, f] : cx.functions) out << pad << "  " << k << " = " << format_function(f, sp) << "\n";
    if (!cx.lhs_label.empty()) out << pad << "  " << cx.lhs_label << " = " << format_set(cx.lhs) << "\n";
    if (!cx.rhs_label.empty()) out << pad << "  " << cx.rhs_label << " = " << format_set(cx.rhs) << "\n";
}

SampleSet samples_for(const Workspace& ws, const Flags& f)
{
    SampleSet s = default_samples(ws.cone(), ws.atoms(), f.seed);
    if (!f.w_samples.empty()) {
        detail::YamlReader rd("--w-samples");
        for (const auto& w : rd.vectors(YAML::Load(f.w_samples), ws.dimension)) {
            if (is_zero(w) || !ws.cone().dual_contains(w)) {
                throw ValidationError("--w-samples: " + to_string(w) + " is not in C+ \\ {0}");
            }
            s.w_samples.push_back(primitive(w));
        }
        sort_unique(s.w_samples);
    }
    return s;
}

bool print_axioms(std::ostream& out, const AxiomReport& rep, const SampleSet& s, const Workspace& ws)
{
    out << "samples: " << s.functions.size() << " functions, " << s.pairs.size() << " pairs, lambda {";
    for (std::size_t i = 0; i < s.lambdas.size(); ++i) out << (i ? ", " : "") << to_string(s.lambdas[i]);
    out << "}, " << s.chains.size() << " stabilising chains, " << s.parametric_chains.size()
        << " parametric chains, " << s.w_samples.size() << " nullity directions, " << s.xi_samples.size()
        << " indicator samples\n";
    for (const auto& r : rep.results) {
        out << "(" << r.code << ") " << r.title << ": " << to_string(r.status) << " [checked " << r.checked;
        if (r.skipped) out << ", skipped " << r.skipped;
        out << "]\n";
        for (const auto& n : r.notes) out << "    note: " << n << "\n";
        if (r.counterexample) print_counterexample(out, *r.counterexample, ws.space(), "    ");
    }
    out << "phi table (xi -> k with Φ(ξc + C) = kc + C):\n";
    for (const auto& e : rep.phi_table) out << "  " << format_scalars(e.xi) << " -> " << e.value.str() << "\n";
    out << "axioms: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return rep.passed();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Aumann integrals of polyhedral set-valued functions and an axiom checker for set-valued functionals"};
    app.require_subcommand(1);
    Flags flags;
    std::string ws_path;
    std::vector<std::string> args;

    auto add = [&](const std::string& name, const std::string& desc, const std::string& usage) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("workspace", ws_path, "workspace file")->required();
        // Operands are taken raw: CLI11 would split bracketed vectors like '[1, 1]'.
        sub->allow_extras();
        sub->footer("Operands: " + usage);
        sub->add_option("--seed", flags.seed, "seed for all random streams")->capture_default_str();
        sub->add_option("--trials", flags.trials, "random selections tried by the oracle")->capture_default_str();
        sub->add_option("--epsilon-schedule", flags.epsilon,
                        "parametric chains: 'auto' (first gap scaled by 1/n) or a constant K (K<c,w>/n)")
            ->capture_default_str();
        sub->add_option("--w-samples", flags.w_samples, "extra nullity directions, e.g. '[[1,2],[2,1]]'");
        sub->add_flag("--serial-functional", flags.serial, "evaluate the functional one call at a time");
        return sub;
    };
    add("integrate", "integrate a set-valued function", "F MU");
    add("integrate-over", "integrate over a set of atoms", "F MU [ATOM...]");
    add("oracle", "check the integral against random and extremal selections", "F MU");
    add("lattice", "lattice operations on sets",
        "OP ARGS: canon S | oplus S T | inf S... | sup S... | scale L S | support S W | member S Y | subset S T | "
        "equal S T | halfspace S W");
    add("chain-check", "monotone convergence check for a chain", "CHAIN MU");
    add("check-axioms", "test a functional against the six characterising properties",
        "FUNCTIONAL (builtin:integral MU | mutant:NAME MU | external:CMD)");
    add("reconstruct", "check axioms, reconstruct the measure and verify the representation", "FUNCTIONAL");

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    args = sub->remaining();
    for (const auto& a : args) {
        if (a.rfind("--", 0) == 0) {
            std::cerr << "error: unknown option '" << a << "'\n";
            return 2;
        }
    }
    std::ostream& out = std::cout;

    try {
        const Workspace ws = parse_workspace(ws_path);
        const Cone& c = ws.cone();
        auto need = [&](std::size_t n) {
            if (args.size() < n) throw ValidationError(command + ": expected at least " + std::to_string(n) + " arguments");
        };

        if (command == "integrate" || command == "integrate-over") {
            need(2);
            header(out, command, ws, flags);
            const auto& f = ws.function(args[0]);
            const auto& mu = ws.measure(args[1]);
            IntegralResult r;
            if (command == "integrate") {
                r = aumann_integral(f, mu, c);
            } else {
                const AtomSet a = atoms_arg(ws, {args.begin() + 2, args.end()});
                out << "atoms: {";
                for (auto it = a.begin(); it != a.end(); ++it) out << (it == a.begin() ? "" : ", ") << ws.space().name(*it);
                out << "}, mass " << to_string(mu.of(a)) << "\n";
                r = integral_over(f, mu, a, c);
            }
            print_certificate(out, r);
            return r.certified() ? 0 : 1;
        }

        if (command == "oracle") {
            need(2);
            header(out, command, ws, flags);
            const auto& f = ws.function(args[0]);
            const auto& mu = ws.measure(args[1]);
            const OracleReport rep = selection_oracle(f, mu, c, flags.trials, flags.seed);
            out << "integral: " << format_set(aumann_integral(f, mu, c).value) << "\n"
                << "containment: " << rep.containment_checked << " random selections\n"
                << "attainment: " << rep.points_attained << " generator points decomposed\n";
            for (const auto& d : rep.decompositions) {
                out << "  " << to_string(d.point) << " = sum of mu(x) f(x) with f = {";
                for (std::size_t i = 0; i < d.selection.size(); ++i) {
                    out << (i ? ", " : "") << ws.space().name(i) << ": " << to_string(d.selection[i]);
                }
                out << "}\n";
            }
            out << "upper-set check: " << (rep.upper_set_ok ? "ok" : "FAILED") << "\n";
            for (const auto& v : rep.violations) out << "violation: " << v << "\n";
            out << "oracle: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
            return rep.passed() ? 0 : 1;
        }

        if (command == "lattice") {
            need(2);
            header(out, command, ws, flags);
            const std::string& op = args[0];
            const std::vector<std::string> rest(args.begin() + 1, args.end());
            auto sets = [&] {
                std::vector<UpperSet> v;
                for (const auto& a : rest) v.push_back(set_arg(ws, a));
                return v;
            };
            auto exactly = [&](std::size_t n) {
                if (rest.size() != n) throw ValidationError("lattice " + op + ": expected " + std::to_string(n) + " operands");
            };
            if (op == "canon") {
                exactly(1);
                const UpperSet d = set_arg(ws, rest[0]);
                out << format_set(d) << "\n" << format_vrep(d) << "\n";
            } else if (op == "oplus") {
                exactly(2);
                out << format_set(oplus(set_arg(ws, rest[0]), set_arg(ws, rest[1]))) << "\n";
            } else if (op == "inf") {
                out << format_set(inf_set(sets(), ws.dimension)) << "\n";
            } else if (op == "sup") {
                out << format_set(sup_set(sets(), ws.dimension)) << "\n";
            } else if (op == "scale") {
                exactly(2);
                out << format_set(scale(parse_rational(rest[0]), set_arg(ws, rest[1]), c)) << "\n";
            } else if (op == "support") {
                exactly(2);
                out << to_string(support(set_arg(ws, rest[0]), vector_arg(ws, rest[1]))) << "\n";
            } else if (op == "member") {
                exactly(2);
                out << (member(set_arg(ws, rest[0]), vector_arg(ws, rest[1])) ? "true" : "false") << "\n";
            } else if (op == "subset") {
                exactly(2);
                out << (subset(set_arg(ws, rest[0]), set_arg(ws, rest[1])) ? "true" : "false") << "\n";
            } else if (op == "equal") {
                exactly(2);
                out << (set_equal(set_arg(ws, rest[0]), set_arg(ws, rest[1])) ? "true" : "false") << "\n";
            } else if (op == "halfspace") {
                exactly(2);
                out << format_set(supporting_halfspace(set_arg(ws, rest[0]), vector_arg(ws, rest[1]), c)) << "\n";
            } else {
                throw ValidationError("unknown lattice operation '" + op + "'");
            }
            return 0;
        }

        if (command == "chain-check") {
            need(2);
            header(out, command, ws, flags);
            const auto& mu = ws.measure(args[1]);
            ChainReport rep;
            if (auto it = ws.chains.find(args[0]); it != ws.chains.end()) {
                out << "chain " << args[0] << ": " << it->second.steps.size() << " steps (exact mode)\n";
                rep = monotone_limit_check(it->second, mu, c);
            } else if (auto jt = ws.parametric_chains.find(args[0]); jt != ws.parametric_chains.end()) {
                const auto& ch = jt->second;
                out << "chain " << args[0] << ": base ⊕ (ξc/n + C), n = 1.." << ch.length << ", xi = "
                    << format_scalars(ch.displacement) << " (tolerance mode)\n";
                const auto k = epsilon_constant(flags);
                const EpsilonSchedule eps =
                    k ? constant_epsilon(*k, c)
                      : auto_epsilon(aumann_integral(ch.step(1, c), mu, c).value, aumann_integral(ch.base, mu, c).value);
                rep = monotone_limit_check(ch, mu, c, eps);
            } else {
                throw ValidationError("unknown chain '" + args[0] + "'");
            }
            out << "precondition: " << (rep.precondition_ok ? "ok" : "VIOLATED") << "\n"
                << "monotone: " << (rep.monotone ? "ok" : "FAILED") << "\n"
                << "limit: " << (rep.limit_ok ? "ok" : "FAILED") << "\n";
            for (const auto& m : rep.messages) out << "  " << m << "\n";
            out << "chain-check: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
            return rep.passed() ? 0 : 1;
        }

        if (command == "check-axioms" || command == "reconstruct") {
            std::string spec = join(args);
            if (spec.empty() && ws.functional) spec = *ws.functional;
            if (spec.empty()) throw ValidationError(command + ": no functional given and none in the workspace");
            SetFunctional phi = resolve_functional(spec, ws);
            if (flags.serial) phi.serial = true;
            header(out, command, ws, flags);
            out << "functional: " << phi.name << " " << phi.params << "\n";
            const SampleSet s = samples_for(ws, flags);
            CheckOptions opt;
            opt.continuity.epsilon_constant = epsilon_constant(flags);
            opt.parallel = !phi.serial;
            const AxiomReport rep = check_all(phi, s, c, ws.atoms(), opt);
            bool ok = print_axioms(out, rep, s, ws);
            if (command == "check-axioms") return ok ? 0 : 1;

            if (rep.get("I").status != AxiomStatus::Pass) {
                out << "reconstruction: skipped (indicator property failed)\n";
                return 1;
            }
            const ReconstructedMeasure rm = reconstruct_measure(phi, ws.atoms(), c, flags.seed);
            out << "reconstructed measure:\n";
            for (std::size_t i = 0; i < rm.weights.size(); ++i) {
                out << "  " << ws.space().name(i) << ": " << (rm.weights[i] ? to_string(*rm.weights[i]) : "+inf") << "\n";
            }
            for (const auto& p : rm.problems) out << "  problem: " << p << "\n";
            ok = ok && rm.ok();
            if (!ok || !rm.finite()) {
                out << "representation: not verified (" << (rm.finite() ? "axiom failure" : "infinite-mass atom") << ")\n";
                out << "reconstruct: FAIL\n";
                return 1;
            }
            const RepresentationReport vr = verify_representation(phi, rm.measure(), c, flags.seed);
            out << "representation Φ(F) = ∫F dμ̂:\n";
            for (const auto& fam : vr.families) {
                out << "  " << fam.name << ": " << (fam.failures ? "FAIL" : "pass") << " [checked " << fam.checked;
                if (fam.skipped) out << ", skipped " << fam.skipped;
                out << "]\n";
                if (fam.counterexample) print_counterexample(out, *fam.counterexample, ws.space(), "    ");
            }
            ok = vr.passed();
            out << "reconstruct: " << (ok ? "PASS" : "FAIL") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const YAML::Exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
