#include "contlab/cli.hpp"

#include "contlab/document.hpp"
#include "contlab/search.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>

namespace contlab {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct CommonOpts {
    std::string format = "text";
    int jobs = 1;
    Idx fuel = 3;
    std::string sizes = "0..3";
    Nat budget = 10'000'000;

    ExecPolicy policy() const { return jobs == 1 ? ExecPolicy::serial() : ExecPolicy::with_jobs(jobs); }
    bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--jobs", o.jobs, "worker threads for instance sweeps")->check(CLI::PositiveNumber);
    cmd->add_option("--fuel", o.fuel, "default fuel for the list container");
    cmd->add_option("--budget", o.budget, "node limit for searches");
    cmd->add_option("--sizes", o.sizes, "size range for interpreted-monad checks, e.g. 0..3");
}

std::vector<Idx> parse_sizes(const std::string& spec) {
    auto dots = spec.find("..");
    std::vector<Idx> out;
    if (dots == std::string::npos) {
        out.push_back(static_cast<Idx>(std::stoul(spec)));
        return out;
    }
    Idx lo = static_cast<Idx>(std::stoul(spec.substr(0, dots)));
    Idx hi = static_cast<Idx>(std::stoul(spec.substr(dots + 2)));
    for (Idx n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

Json report_json(const EquationReport& rep) {
    Json eqs = Json::array();
    for (const auto& e : rep.equations) {
        Json je;
        je["tag"] = e.tag;
        if (!e.note.empty()) je["note"] = e.note;
        je["status"] = status_name(e.status());
        je["checked"] = e.checked;
        je["deferred"] = e.deferred;
        je["blocked"] = e.blocked;
        if (e.failure) je["counterexample"] = e.failure->bindings;
        eqs.push_back(std::move(je));
    }
    Json j;
    j["verdict"] = status_name(rep.overall());
    j["equations"] = std::move(eqs);
    return j;
}

void emit_report(const CommonOpts& o, const std::string& heading, const EquationReport& rep,
                 std::ostream& out) {
    if (o.json()) {
        Json j;
        j["command"] = heading;
        j.update(report_json(rep));
        out << j.dump(2) << "\n";
    } else {
        out << heading << "\n" << format_report(rep);
    }
}

int verdict_exit(const EquationReport& rep) { return rep.refuted() ? kRefuted : kOk; }

std::string law_summary(const DistLawData& law) {
    Json j;
    j["u1"] = Json::array();
    const Container& c1 = law.c1();
    Idx S2 = law.c2().shape_count();
    for (Idx s = 0; s < c1.shape_count(); ++s) {
        std::vector<Idx> fam(c1.pos(s), 0);
        for (Nat fr = 0; fr < law.u1[s].size(); ++fr) {
            if (law.u1[s][fr] != kNoIdx)
                j["u1"].push_back(Json{{"s", s}, {"f", fam}, {"out", law.u1[s][fr]}});
            for (std::size_t k = fam.size(); k-- > 0;) {
                if (++fam[k] < S2) break;
                fam[k] = 0;
            }
        }
    }
    return j["u1"].dump();
}

void write_or_print(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw Error("cannot write \"" + out_path + "\"");
        f << text;
    }
}

DistLawData law_of_document(const Document& doc) {
    if (doc.kind != Document::Kind::Law) throw Error("a law document is required here");
    return doc.law;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"workbench for finitary containers, their substitution structures and"
                 " distributive laws"};
    app.require_subcommand(1);

    CommonOpts o;

    // ---- check ----------------------------------------------------------
    auto* check = app.add_subcommand("check", "run the axiom or law equation suite");
    std::string check_monadic_ref, check_directed_ref, check_law_ref, check_composite_ref;
    std::string check_outer, check_inner;
    check->add_option("--monadic", check_monadic_ref, "monadic container ref");
    check->add_option("--directed", check_directed_ref, "directed container ref");
    check->add_option("--law", check_law_ref, "law ref or file");
    check->add_option("--composite", check_composite_ref, "composite document file");
    check->add_option("--outer", check_outer, "outer carrier (composite checks)");
    check->add_option("--inner", check_inner, "inner carrier (composite checks)");
    add_common(check, o);

    // ---- oracle ---------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "verify a law against the interpreted monads");
    std::string oracle_law, oracle_monadic;
    oracle->add_option("--law", oracle_law, "law ref or file");
    oracle->add_option("--monadic", oracle_monadic, "monadic container ref (monad-law check)");
    add_common(oracle, o);

    // ---- search ---------------------------------------------------------
    auto* search = app.add_subcommand("search", "enumerate every law between two carriers");
    std::string search_kind = "mnd-mnd", search_inner, search_outer, search_emit;
    long long expect_count = -1;
    search->add_option("--kind", search_kind)->check(CLI::IsMember({"mnd-mnd", "mnd-dir", "dir-mnd"}));
    search->add_option("--inner", search_inner)->required();
    search->add_option("--outer", search_outer)->required();
    search->add_option("--expect-count", expect_count, "fail unless exactly this many laws");
    search->add_option("--emit", search_emit, "write the laws to this file");
    add_common(search, o);

    // ---- refute ---------------------------------------------------------
    auto* refute = app.add_subcommand("refute", "bounded search for a law fragment over a fueled inner");
    std::string refute_inner, refute_outer, refute_emit;
    refute->add_option("--inner", refute_inner)->required();
    refute->add_option("--outer", refute_outer)->required();
    refute->add_option("--emit", refute_emit, "write a found fragment to this file");
    add_common(refute, o);

    // ---- compose --------------------------------------------------------
    auto* compose = app.add_subcommand("compose", "build the composite structure from a law");
    std::string compose_law, compose_out;
    compose->add_option("--law", compose_law)->required();
    compose->add_option("--out", compose_out, "write the composite document to this file");
    add_common(compose, o);

    // ---- extract-law ----------------------------------------------------
    auto* extract = app.add_subcommand("extract-law", "recover the law of a compatible composite");
    std::string extract_composite, extract_out;
    extract->add_option("--composite", extract_composite)->required();
    extract->add_option("--out", extract_out, "write the law document to this file");
    add_common(extract, o);

    // ---- nogo -----------------------------------------------------------
    auto* nogo = app.add_subcommand("nogo", "check the too-many-constants obstruction");
    std::string nogo_inner, nogo_outer;
    bool nogo_no_cross = false;
    nogo->add_option("--inner", nogo_inner)->required();
    nogo->add_option("--outer", nogo_outer)->required();
    nogo->add_flag("--no-cross-check", nogo_no_cross, "skip the bounded search cross-check");
    add_common(nogo, o);

    // ---- zoo ------------------------------------------------------------
    auto* zoo = app.add_subcommand("zoo", "print a builtin structure as a document");
    std::string zoo_ref, zoo_out;
    bool zoo_list = false;
    zoo->add_option("ref", zoo_ref, "builtin name");
    zoo->add_flag("--list", zoo_list, "list the builtin catalogue");
    zoo->add_option("--out", zoo_out, "write the document to this file");
    add_common(zoo, o);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (check->parsed()) {
            int worst = kOk;
            bool did = false;
            if (!check_monadic_ref.empty()) {
                MonadicContainer m = monadic_of(resolve_ref(check_monadic_ref, o.fuel));
                EquationReport rep = check_monadic(m, o.policy());
                emit_report(o, "check monadic " + check_monadic_ref, rep, out);
                worst = std::max(worst, verdict_exit(rep));
                did = true;
            }
            if (!check_directed_ref.empty()) {
                DirectedContainer d = directed_of(resolve_ref(check_directed_ref, o.fuel));
                EquationReport rep = check_directed(d, o.policy());
                emit_report(o, "check directed " + check_directed_ref, rep, out);
                worst = std::max(worst, verdict_exit(rep));
                did = true;
            }
            if (!check_law_ref.empty()) {
                DistLawData law = law_of_document(resolve_ref(check_law_ref, o.fuel));
                EquationReport rep = check_law(law, o.policy());
                emit_report(o, std::string("check law (") + law_kind_name(law.kind) + ") " +
                                   check_law_ref,
                            rep, out);
                worst = std::max(worst, verdict_exit(rep));
                did = true;
            }
            if (!check_composite_ref.empty()) {
                Document doc = resolve_ref(check_composite_ref, o.fuel);
                if (doc.kind != Document::Kind::Composite)
                    throw Error("--composite expects a composite document");
                CompatibleComposite comp =
                    make_compatible_composite(doc.comp_outer, doc.comp_inner, doc.monadic);
                EquationReport rep = check_compatible(comp, doc.comp_outer, doc.comp_inner, o.policy());
                emit_report(o, "check composite " + check_composite_ref, rep, out);
                worst = std::max(worst, verdict_exit(rep));
                did = true;
            }
            if (!did) {
                err << "usage error: check needs --monadic, --directed, --law or --composite\n";
                return kUsage;
            }
            return worst;
        }

        if (oracle->parsed()) {
            std::vector<Idx> sizes = parse_sizes(o.sizes);
            if (!oracle_law.empty()) {
                DistLawData law = law_of_document(resolve_ref(oracle_law, o.fuel));
                EquationReport rep = beck_oracle(law, sizes, o.policy());
                emit_report(o, "oracle law " + oracle_law, rep, out);
                return verdict_exit(rep);
            }
            if (!oracle_monadic.empty()) {
                MonadicContainer m = monadic_of(resolve_ref(oracle_monadic, o.fuel));
                EquationReport rep = monad_laws_oracle(m, sizes, o.policy());
                emit_report(o, "oracle monadic " + oracle_monadic, rep, out);
                return verdict_exit(rep);
            }
            err << "usage error: oracle needs --law or --monadic\n";
            return kUsage;
        }

        if (search->parsed() || refute->parsed()) {
            bool refuting = refute->parsed();
            SearchProblem p;
            p.budget = o.budget;
            std::string inner_ref = refuting ? refute_inner : search_inner;
            std::string outer_ref = refuting ? refute_outer : search_outer;
            LawKind kind = LawKind::MndMnd;
            if (!refuting) {
                kind = search_kind == "mnd-mnd" ? LawKind::MndMnd
                       : search_kind == "mnd-dir" ? LawKind::MndDir
                                                  : LawKind::DirMnd;
            }
            p.kind = kind;
            Document din = resolve_ref(inner_ref, o.fuel);
            Document dout = resolve_ref(outer_ref, o.fuel);
            p.slot1 = din.kind == Document::Kind::Directed ? directed_slot(din.directed)
                                                           : monadic_slot(monadic_of(din));
            p.slot2 = dout.kind == Document::Kind::Directed ? directed_slot(dout.directed)
                                                            : monadic_slot(monadic_of(dout));
            SearchVerdict v = refuting ? refute_bounded(p) : search_laws(p);

            if (o.json()) {
                Json j;
                j["command"] = refuting ? "refute" : "search";
                j["inner"] = inner_ref;
                j["outer"] = outer_ref;
                j["kind"] = law_kind_name(kind);
                j["verdict"] = verdict_name(v.kind);
                j["laws"] = v.laws.size();
                j["nodes"] = v.stats.nodes;
                out << j.dump(2) << "\n";
            } else {
                out << (refuting ? "refute " : "search ") << law_kind_name(kind) << " inner="
                    << inner_ref << " outer=" << outer_ref << "\n";
                out << "verdict: " << verdict_name(v.kind) << "  laws=" << v.laws.size()
                    << "  nodes=" << v.stats.nodes << "\n";
                for (const DistLawData& law : v.laws) out << "  u1 " << law_summary(law) << "\n";
            }
            std::string emit_path = refuting ? refute_emit : search_emit;
            if (!emit_path.empty()) {
                std::string text;
                for (const DistLawData& law : v.laws) {
                    Document doc = document_of_law(law);
                    doc.inner_ref = inner_ref;
                    doc.outer_ref = outer_ref;
                    text += print_document(doc);
                }
                write_or_print(text, emit_path, out);
            }
            if (v.kind == VerdictKind::BudgetExceeded) return kBudget;
            if (refuting) return v.kind == VerdictKind::BoundedUnsat ? kRefuted : kOk;
            if (expect_count >= 0 && v.laws.size() != static_cast<std::size_t>(expect_count))
                return kRefuted;
            return kOk;
        }

        if (compose->parsed()) {
            Document ldoc = resolve_ref(compose_law, o.fuel);
            DistLawData law = law_of_document(ldoc);
            if (law.kind != LawKind::MndMnd) throw Error("compose needs a mnd-mnd law");
            CompatibleComposite comp = composite_from_law(law, o.policy());
            EquationReport rep =
                check_compatible(comp, law.slot2.mnd, law.slot1.mnd, o.policy());
            emit_report(o, "compose " + compose_law, rep, out);
            Document doc = document_of_composite(comp, law.slot2.mnd, law.slot1.mnd,
                                                 ldoc.outer_ref, ldoc.inner_ref);
            write_or_print(print_document(doc), compose_out, out);
            return verdict_exit(rep);
        }

        if (extract->parsed()) {
            Document doc = resolve_ref(extract_composite, o.fuel);
            if (doc.kind != Document::Kind::Composite)
                throw Error("extract-law expects a composite document");
            CompatibleComposite comp =
                make_compatible_composite(doc.comp_outer, doc.comp_inner, doc.monadic);
            DistLawData law = law_from_composite(comp, doc.comp_outer, doc.comp_inner, o.policy());
            Document ldoc = document_of_law(law);
            ldoc.inner_ref = doc.inner_ref;
            ldoc.outer_ref = doc.outer_ref;
            write_or_print(print_document(ldoc), extract_out, out);
            return kOk;
        }

        if (nogo->parsed()) {
            MonadicContainer m1 = monadic_of(resolve_ref(nogo_inner, o.fuel));
            MonadicContainer m2 = monadic_of(resolve_ref(nogo_outer, o.fuel));
            NogoCertificate cert = nogo_certificate(m1, m2);
            Json j;
            j["command"] = "nogo";
            j["inner"] = nogo_inner;
            j["outer"] = nogo_outer;
            j["applicable"] = cert.applicable;
            j["reason"] = cert.reason;
            if (cert.applicable) {
                j["witness"] = Json{{"s", cert.witness.s},
                                    {"f", cert.witness.f},
                                    {"positions", Json::array({cert.position_a, cert.position_b})},
                                    {"constants", Json::array({cert.constant_a, cert.constant_b})}};
            }
            std::string cross;
            if (m1.base.fueled && !nogo_no_cross) {
                SearchProblem p;
                p.slot1 = monadic_slot(m1);
                p.slot2 = monadic_slot(m2);
                p.kind = LawKind::MndMnd;
                p.budget = o.budget;
                SearchVerdict v = refute_bounded(p);
                cross = verdict_name(v.kind);
                j["cross_check"] = cross;
                j["nodes"] = v.stats.nodes;
            }
            if (o.json()) {
                out << j.dump(2) << "\n";
            } else {
                out << "nogo inner=" << nogo_inner << " outer=" << nogo_outer << "\n";
                out << (cert.applicable ? "Applicable: " : "NotApplicable: ") << cert.reason << "\n";
                if (!cross.empty()) out << "bounded search cross-check: " << cross << "\n";
            }
            return cert.applicable ? kOk : kRefuted;
        }

        if (zoo->parsed()) {
            if (zoo_list || zoo_ref.empty()) {
                out << builtin_catalogue();
                return kOk;
            }
            Document doc = resolve_ref(zoo_ref, o.fuel);
            write_or_print(print_document(doc), zoo_out, out);
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "usage error: no command\n";
    return kUsage;
}

} // namespace contlab
