#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: problem file in, canonical text or JSON out.
 *
 * Exit codes: 0 success or feasible, 1 infeasible or negative answer,
 * 2 parse or usage error, 3 undecided (failed precondition or a radicality
 * question on a positive-dimensional ideal).
 *
 * Needs CLI11 and nlohmann/json on the include path.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "error.hpp"
#include "groebner.hpp"
#include "ideal.hpp"
#include "interp.hpp"
#include "pde.hpp"
#include "problem.hpp"

namespace varinterp::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, undecided = 3 };

using Json = nlohmann::ordered_json;

/// Problem file content does not fit the command.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::string command;
    std::string file;
    std::optional<std::string> mode;
    std::string order = "grevlex";
    bool certificate = false;
    bool json = false;
};

/// "<g1, g2>"
inline std::string ideal_text(const std::vector<Polynomial>& gens) {
    std::string out = "<";
    for (std::size_t k = 0; k < gens.size(); ++k) out += (k ? ", " : "") + gens[k].to_string();
    return out + ">";
}

/// Canonical generators of an ideal: its reduced grevlex basis.
inline std::string canonical_text(const Ideal& j) {
    if (j.is_zero()) return "<0>";
    return ideal_text(j.groebner().elements);
}

/// "target = (c1)*(g1) + (c2)*(g2)", which re-parses and expands to the target.
inline std::string certificate_text(const Certificate& c) {
    std::string out = c.target.to_string() + " = ";
    if (c.generators.empty()) return out + "0";
    for (std::size_t k = 0; k < c.generators.size(); ++k) {
        if (k) out += " + ";
        out += "(" + c.cofactors[k].to_string() + ")*(" + c.generators[k].to_string() + ")";
    }
    return out;
}

inline Json strings(const std::vector<Polynomial>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

inline Json certificate_json(const Certificate& c) {
    return Json{{"target", c.target.to_string()}, {"generators", strings(c.generators)}, {"cofactors", strings(c.cofactors)}};
}

/// Collects text lines and a JSON document side by side; exactly one is printed.
class Report {
public:
    explicit Report(const Options& o) : json_(o.json) { doc_["command"] = o.command; }

    void line(const std::string& s) { text_ << s << '\n'; }
    Json& doc() { return doc_; }

    void flush(std::ostream& out) const {
        if (json_) out << doc_.dump(2) << '\n';
        else out << text_.str();
    }

private:
    bool json_;
    std::ostringstream text_;
    Json doc_;
};

namespace detail {

inline MonomialOrder order_of(const Options& o) {
    return o.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
}

inline const NamedIdeal& only_ideal_of(const ProblemFile& f, const NamedDatum& d) { return f.ideals[d.ideal_index]; }

inline std::string join_names(const std::vector<std::string>& names, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < names.size(); ++k) out += (k ? sep : "") + names[k];
    return out;
}

inline void require_ideals(const ProblemFile& f) {
    if (f.ideals.empty()) throw UsageError("problem declares no ideals");
}

inline void require_data(const ProblemFile& f) {
    if (f.data.empty()) throw UsageError("problem declares no data");
}

inline int groebner(const ProblemFile& f, const Options& o, Report& r) {
    require_ideals(f);
    auto order = order_of(o);
    r.doc()["order"] = order.name();
    Json list = Json::array();
    for (const auto& [name, j] : f.ideals) {
        Json entry{{"name", name}, {"generators", strings(j.generators())}};
        if (j.is_zero()) {
            r.line(name + " = <0>");
            entry["basis"] = Json::array();
            list.push_back(entry);
            continue;
        }
        const auto& gb = j.groebner(order);
        r.line(name + " = " + ideal_text(gb.elements));
        entry["basis"] = strings(gb.elements);
        if (o.certificate) {
            Json certs = Json::array();
            for (std::size_t k = 0; k < gb.elements.size(); ++k) {
                Certificate c{gb.elements[k], gb.generators, gb.expressions[k]};
                r.line("  " + certificate_text(c));
                certs.push_back(certificate_json(c));
            }
            entry["certificates"] = certs;
        }
        list.push_back(entry);
    }
    r.doc()["ideals"] = list;
    return ok;
}

inline int member(const ProblemFile& f, const Options& o, Report& r) {
    require_data(f);
    auto order = order_of(o);
    bool all = true;
    Json list = Json::array();
    for (const auto& d : f.data) {
        const Ideal& j = only_ideal_of(f, d).ideal;
        std::optional<Certificate> cert = j.is_zero() ? j.member(d.value) : membership_certificate(d.value, j.groebner(order));
        all = all && cert.has_value();
        std::string head = d.name + " = " + d.value.to_string();
        r.line(head + (cert ? " in " : " not in ") + d.ideal_name + " = " + ideal_text(j.generators()));
        Json entry{{"datum", d.name}, {"ideal", d.ideal_name}, {"polynomial", d.value.to_string()}, {"member", cert.has_value()}};
        if (cert && o.certificate) {
            r.line("  " + certificate_text(*cert));
            entry["certificate"] = certificate_json(*cert);
        }
        list.push_back(entry);
    }
    r.doc()["results"] = list;
    return all ? ok : negative;
}

inline int radical_member_cmd(const ProblemFile& f, Report& r) {
    require_data(f);
    bool all = true;
    Json list = Json::array();
    for (const auto& d : f.data) {
        const Ideal& j = only_ideal_of(f, d).ideal;
        bool in = radical_member(d.value, j);
        all = all && in;
        r.line(d.name + " = " + d.value.to_string() + (in ? " in " : " not in ") + "radical of " + d.ideal_name);
        list.push_back(Json{{"datum", d.name}, {"ideal", d.ideal_name}, {"polynomial", d.value.to_string()},
                            {"radical_member", in}});
    }
    r.doc()["results"] = list;
    return all ? ok : negative;
}

inline int intersect(const ProblemFile& f, const Options& o, Report& r) {
    require_ideals(f);
    std::vector<Ideal> ideals;
    std::vector<std::string> names;
    for (const auto& [name, j] : f.ideals) {
        ideals.push_back(j);
        names.push_back(name);
    }
    Ideal both = ideal_intersection(ideals);
    auto order = order_of(o);
    std::string label = join_names(names, " cap ");
    r.doc()["order"] = order.name();
    r.doc()["ideals"] = names;
    if (both.is_zero()) {
        r.line(label + " = <0>");
        r.doc()["basis"] = Json::array();
        return ok;
    }
    const auto& basis = both.groebner(order).elements;
    r.line(label + " = " + ideal_text(basis));
    r.doc()["basis"] = strings(basis);
    if (o.certificate) {
        Json certs = Json::array();
        for (const auto& g : basis) {
            for (std::size_t k = 0; k < ideals.size(); ++k) {
                auto c = ideals[k].member(g);
                if (!c) throw std::logic_error("intersection element escaped " + names[k]);
                r.line("  in " + names[k] + ": " + certificate_text(*c));
                Json cj = certificate_json(*c);
                cj["ideal"] = names[k];
                certs.push_back(cj);
            }
        }
        r.doc()["certificates"] = certs;
    }
    return ok;
}

inline int separate(const ProblemFile& f, const Options& o, Report& r) {
    if (f.ideals.size() != 2) throw UsageError("separate needs exactly two ideals");
    const auto& a = f.ideals[0];
    const auto& b = f.ideals[1];
    r.doc()["ideals"] = {a.name, b.name};
    std::optional<Separation> s;
    try {
        s = separator(a.ideal, b.ideal);
    } catch (const VarietiesIntersect&) {
        r.line("no separator: V(" + a.name + ") and V(" + b.name + ") intersect (1 not in " + a.name + " + " + b.name + ")");
        r.doc()["separable"] = false;
        return negative;
    }
    r.line("f = " + s->f.to_string());
    r.doc()["separable"] = true;
    r.doc()["f"] = s->f.to_string();
    if (o.certificate) {
        r.line("certificate f - 1 in " + a.name + ": " + certificate_text(s->one_on_first));
        r.line("certificate f in " + b.name + ": " + certificate_text(s->zero_on_second));
        r.doc()["certificates"] = {certificate_json(s->one_on_first), certificate_json(s->zero_on_second)};
    }
    return ok;
}

inline std::string union_label(const ProblemFile& f, std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < count; ++k) names.push_back(f.data[k].ideal_name);
    std::string s = join_names(names, " cap ");
    return count > 1 ? "(" + s + ")" : s;
}

inline std::string others_label(const ProblemFile& f, std::size_t skip) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < f.data.size(); ++k)
        if (k != skip) names.push_back(f.data[k].ideal_name);
    std::string s = join_names(names, " cap ");
    return names.size() > 1 ? "(" + s + ")" : s;
}

inline void print_certificates(const ProblemFile& f, const InterpolationResult& res, Report& r) {
    Json certs = Json::array();
    for (std::size_t k = 0; k < res.certificates.size(); ++k) {
        const auto& d = f.data[k];
        r.line("certificate f - " + d.name + " in " + d.ideal_name + ": " + certificate_text(res.certificates[k]));
        Json cj = certificate_json(res.certificates[k]);
        cj["datum"] = d.name;
        cj["ideal"] = d.ideal_name;
        certs.push_back(cj);
    }
    r.doc()["certificates"] = certs;
}

inline int interpolate(const ProblemFile& f, const Options& o, Report& r) {
    require_data(f);
    std::string mode = o.mode ? *o.mode : f.mode.value_or("sequential");
    auto problem = f.interpolation_problem();
    r.line("mode: " + mode);
    r.doc()["mode"] = mode;

    InterpolationResult res;
    if (mode == "disjoint") {
        res = interpolate_disjoint(problem);
    } else if (mode == "pair") {
        if (problem.size() != 2) throw UsageError("pair mode needs exactly two data lines");
        res = interpolate_pair(problem.ideals[0], problem.ideals[1], problem.data[0], problem.data[1]);
    } else if (mode == "sequential") {
        res = interpolate_sequential(problem);
    } else if (mode == "restricted") {
        res = interpolate_restricted(problem);
    } else {
        throw UsageError("unknown mode '" + mode + "'");
    }

    r.line(std::string("status: ") + to_string(res.status));
    r.doc()["status"] = to_string(res.status);
    if (mode == "sequential") {
        Json steps = Json::array();
        for (std::size_t m = 0; m < res.step_radicality.size(); ++m) {
            std::string label = union_label(f, m + 1) + " + " + f.data[m + 1].ideal_name;
            std::string verdict = to_string(res.step_radicality[m]);
            if (res.step_radicality[m] == Radicality::undecided) verdict += " (not zero-dimensional)";
            r.line("step " + std::to_string(m + 2) + ": " + label + " " + verdict);
            steps.push_back(Json{{"step", m + 2}, {"sum", label}, {"radicality", to_string(res.step_radicality[m])}});
        }
        r.doc()["steps"] = steps;
    }
    if (res.interpolant) {
        r.line("f = " + res.interpolant->to_string());
        r.doc()["f"] = res.interpolant->to_string();
        if (o.certificate) print_certificates(f, res, r);
    }
    Json witnesses = Json::array();
    for (const auto& w : res.witnesses) {
        std::string lhs, where;
        const auto& a = f.data[w.first];
        const auto& b = f.data[w.second];
        if (mode == "sequential") {
            lhs = "step " + std::to_string(w.second + 1) + ": f" + std::to_string(w.second) + " - " + b.name;
            where = union_label(f, w.second) + " + " + b.ideal_name;
        } else if (mode == "restricted") {
            lhs = a.name + " - " + b.name;
            where = a.ideal_name + " + " + others_label(f, w.first);
        } else {
            lhs = a.name + " - " + b.name;
            where = a.ideal_name + " + " + b.ideal_name;
        }
        std::string tested = canonical_text(w.tested);
        r.line("witness: " + lhs + " = " + w.difference.to_string() + " not in " + where + " = " + tested);
        witnesses.push_back(Json{{"first", a.name}, {"second", b.name}, {"difference", w.difference.to_string()},
                                 {"tested", where}, {"tested_basis", tested}});
    }
    if (!res.witnesses.empty()) r.doc()["witnesses"] = witnesses;

    switch (res.status) {
        case Status::feasible: return ok;
        case Status::infeasible: return negative;
        case Status::undecided_precondition: return undecided;
    }
    return undecided;
}

inline void print_split(const FischerSplit& s, const std::string& datum, const Options& o, Report& r) {
    r.line("f = " + s.kernel_part.to_string());
    r.line("h = " + s.cofactor.to_string());
    r.doc()["f"] = s.kernel_part.to_string();
    r.doc()["h"] = s.cofactor.to_string();
    if (o.certificate) {
        Certificate c{s.kernel_part - s.input, {s.modulus}, {-s.cofactor}};
        r.line("certificate f - " + datum + " in <q>: " + certificate_text(c));
        r.doc()["certificate"] = certificate_json(c);
    }
}

// The boundary datum and modulus for pde/harmonic. Several data lines are first
// combined by sequential interpolation on the union of their varieties.
struct Boundary {
    Polynomial p;
    Polynomial q;
    std::string datum;
    std::optional<InterpolationResult> failed;
};

inline Boundary boundary_of(const ProblemFile& f, Report& r) {
    require_data(f);
    Ideal modulus;
    Boundary b;
    if (f.data.size() == 1) {
        b.p = f.data[0].value;
        b.datum = f.data[0].name;
        modulus = f.ideals[f.data[0].ideal_index].ideal;
    } else {
        auto problem = f.interpolation_problem();
        auto res = interpolate_sequential(problem);
        if (!res.feasible()) {
            b.failed = res;
            return b;
        }
        b.p = *res.interpolant;
        b.datum = "p";
        r.line("p = " + b.p.to_string() + " (data combined by sequential interpolation)");
        r.doc()["p"] = b.p.to_string();
        modulus = canonical(ideal_intersection(problem.ideals));
    }
    auto gens = modulus.generators();
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); }), gens.end());
    if (gens.empty()) throw PreconditionError("boundary ideal is zero");
    b.q = gens.front();
    r.line("q = " + b.q.to_string());
    r.doc()["q"] = b.q.to_string();
    if (gens.size() > 1) {
        r.line("note: the ideal has " + std::to_string(gens.size()) +
               " generators; interpolating on V(q) for its first generator q, so uniqueness holds on V(q) only");
        r.doc()["note"] = "first generator used; uniqueness holds on V(q) only";
    }
    return b;
}

inline int boundary_failure(const ProblemFile& f, const InterpolationResult& res, Report& r) {
    const auto& w = res.witnesses.front();
    std::string where = union_label(f, w.second) + " + " + f.data[w.second].ideal_name;
    r.line("status: infeasible");
    r.line("witness: step " + std::to_string(w.second + 1) + ": f" + std::to_string(w.second) + " - " +
           f.data[w.second].name + " = " + w.difference.to_string() + " not in " + where + " = " + canonical_text(w.tested));
    r.doc()["status"] = "infeasible";
    r.doc()["witness"] = Json{{"difference", w.difference.to_string()}, {"tested", where}};
    return negative;
}

inline int pde(const ProblemFile& f, const Options& o, Report& r) {
    Boundary b = boundary_of(f, r);
    if (b.failed) return boundary_failure(f, *b.failed, r);
    if (f.op) {
        r.line("L = " + f.op->to_string());
        r.doc()["L"] = f.op->to_string();
    }
    print_split(pde_interpolate(b.p, b.q, f.op), b.datum, o, r);
    return ok;
}

inline int harmonic(const ProblemFile& f, const Options& o, Report& r) {
    if (f.op) throw UsageError("harmonic fixes the operator to the Laplacian; remove the operator line or use pde");
    Boundary b = boundary_of(f, r);
    if (b.failed) return boundary_failure(f, *b.failed, r);
    print_split(harmonic_interpolate(b.p, b.q), b.datum, o, r);
    return ok;
}

inline int check_compat(const ProblemFile& f, Report& r) {
    require_data(f);
    auto report = compatibility_check(f.interpolation_problem());
    Json list = Json::array();
    for (const auto& e : report.pairs) {
        const auto& a = f.data[e.first];
        const auto& b = f.data[e.second];
        std::string where = "V(" + a.ideal_name + ") cap V(" + b.ideal_name + ")";
        r.line(a.name + ", " + b.name + ": " + (e.compatible ? "compatible" : "incompatible") + " (" + a.name + " - " +
               b.name + " = " + e.difference.to_string() + (e.compatible ? " vanishes" : " does not vanish") + " on " +
               where + ")");
        list.push_back(Json{{"first", a.name}, {"second", b.name}, {"difference", e.difference.to_string()},
                            {"compatible", e.compatible}});
    }
    r.doc()["pairs"] = list;
    r.doc()["compatible"] = report.all_compatible();
    return report.all_compatible() ? ok : negative;
}

inline int is_radical_cmd(const ProblemFile& f, Report& r) {
    require_ideals(f);
    bool any_not = false, any_undecided = false;
    Json list = Json::array();
    for (const auto& [name, j] : f.ideals) {
        Radicality v = radicality(j);
        std::string text = to_string(v);
        if (v == Radicality::undecided) text += " (not zero-dimensional)";
        r.line(name + ": " + text);
        Json entry{{"name", name}, {"radicality", to_string(v)}};
        if (v != Radicality::undecided) {
            std::string rad = canonical_text(zero_dim_radical(j));
            if (v == Radicality::not_radical) r.line("  radical = " + rad);
            entry["radical"] = rad;
        }
        list.push_back(entry);
        any_not = any_not || v == Radicality::not_radical;
        any_undecided = any_undecided || v == Radicality::undecided;
    }
    r.doc()["ideals"] = list;
    return any_not ? negative : any_undecided ? undecided : ok;
}

inline ProblemFile load(const Options& o, std::istream& in) {
    if (o.file == "-") return parse_problem(in);
    std::ifstream file(o.file, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + o.file + "'");
    return parse_problem(file);
}

inline int dispatch(const Options& o, std::istream& in, Report& r) {
    ProblemFile f = load(o, in);
    if (o.command == "groebner") return groebner(f, o, r);
    if (o.command == "member") return member(f, o, r);
    if (o.command == "radical-member") return radical_member_cmd(f, r);
    if (o.command == "intersect") return intersect(f, o, r);
    if (o.command == "separate") return separate(f, o, r);
    if (o.command == "interpolate") return interpolate(f, o, r);
    if (o.command == "pde") return pde(f, o, r);
    if (o.command == "harmonic") return harmonic(f, o, r);
    if (o.command == "check-compat") return check_compat(f, r);
    if (o.command == "is-radical") return is_radical_cmd(f, r);
    throw UsageError("unknown command '" + o.command + "'");
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact interpolation on algebraic varieties and polynomial PDE boundary problems", "varinterp"};
    app.require_subcommand(1);

    struct Spec {
        const char* name;
        const char* help;
        bool certificate;
        bool order;
    };
    const Spec specs[] = {
        {"groebner", "reduced Groebner basis of every ideal", true, true},
        {"member", "membership of each datum in its ideal", true, true},
        {"radical-member", "membership of each datum in the radical of its ideal", false, false},
        {"intersect", "intersection of all ideals", true, true},
        {"separate", "polynomial equal to 1 on the first variety and 0 on the second", true, false},
        {"interpolate", "interpolant matching each datum on its variety", true, false},
        {"pde", "unique interpolant in the kernel of conj(L)(D) on a hypersurface", true, false},
        {"harmonic", "unique harmonic interpolant on a quadric", true, false},
        {"check-compat", "pairwise agreement of data on variety intersections", false, false},
        {"is-radical", "radicality of every zero-dimensional ideal", false, false},
    };
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("file", o.file, "problem file, or - for stdin")->required();
        sub->add_flag("--json", o.json, "machine-readable output");
        if (s.certificate) sub->add_flag("--certificate", o.certificate, "print cofactor certificates");
        if (s.order)
            sub->add_option("--order", o.order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
        if (std::string(s.name) == "interpolate")
            sub->add_option("--mode", o.mode, "solver")->check(CLI::IsMember(interpolation_modes()));
        sub->callback([&o, sub] { o.command = sub->get_name(); });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    Report report(o);
    try {
        int code = detail::dispatch(o, in, report);
        report.flush(out);
        return code;
    } catch (const ParseError& e) {
        err << "error: " << (o.file == "-" ? "<stdin>" : o.file) << ":" << e.what() << '\n';
        return usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const PreconditionError& e) {
        report.flush(out);
        err << "undecided: " << e.what() << '\n';
        return undecided;
    } catch (const RingMismatch& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace varinterp::cli
