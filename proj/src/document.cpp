#include "contlab/document.hpp"

#include <fstream>
#include <json.hpp>

namespace contlab {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw Error(path + ": " + what);
}

Idx get_index(const Json& j, const std::string& path, Nat bound) {
    if (!j.is_number_unsigned()) fail(path, "expected a nonnegative index");
    Nat v = j.get<Nat>();
    if (v >= bound) fail(path, "index " + std::to_string(v) + " out of range (bound " +
                                   std::to_string(bound) + ")");
    return static_cast<Idx>(v);
}

std::vector<Idx> get_family(const Json& j, const std::string& path, std::size_t len, Nat bound) {
    if (!j.is_array()) fail(path, "expected an array");
    if (j.size() != len)
        fail(path, "expected " + std::to_string(len) + " entries, found " + std::to_string(j.size()));
    std::vector<Idx> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = get_index(j[i], path + "[" + std::to_string(i) + "]", bound);
    return out;
}

Container parse_carrier(const Json& j, const std::string& path) {
    if (!j.contains("shapes")) fail(path, "missing \"shapes\"");
    if (!j.contains("positions")) fail(path, "missing \"positions\"");
    const Json& shapes = j["shapes"];
    const Json& positions = j["positions"];
    if (!shapes.is_array()) fail(path + ".shapes", "expected an array of labels");
    if (!positions.is_array()) fail(path + ".positions", "expected an array of counts");
    if (shapes.size() != positions.size())
        fail(path, "\"shapes\" and \"positions\" must have equal length");
    std::vector<std::string> labels;
    std::vector<Idx> pos;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (!shapes[i].is_string()) fail(path + ".shapes[" + std::to_string(i) + "]", "expected a label");
        labels.push_back(shapes[i].get<std::string>());
        if (!positions[i].is_number_unsigned())
            fail(path + ".positions[" + std::to_string(i) + "]", "expected a count");
        pos.push_back(positions[i].get<Idx>());
    }
    Container c = make_finite_container(std::move(labels), std::move(pos));
    c.fueled = j.value("fueled", false);
    return c;
}

// family rank helpers: rows address families by their value lists
Nat family_rank(const std::vector<Idx>& fam, Idx radix) { return rank_uniform(fam, radix); }

MonadicContainer parse_monadic_fields(const Json& j, Container base, const std::string& path) {
    MonadicContainer m;
    m.base = std::move(base);
    Idx S = m.shape_count();
    if (!j.contains("iota")) fail(path, "missing \"iota\"");
    if (j["iota"].is_null()) {
        if (!m.base.fueled) fail(path + ".iota", "only fueled carriers may omit the unit shape");
        m.iota = kNoIdx;
    } else {
        m.iota = get_index(j["iota"], path + ".iota", S);
    }
    m.sigma.resize(S);
    m.pr.resize(S);
    for (Idx s = 0; s < S; ++s) {
        Nat fams = sat_pow(S, m.base.pos(s));
        if (fams > 20'000'000) fail(path, "family space too large");
        m.sigma[s].assign(fams, kNoIdx);
        m.pr[s].resize(fams);
    }
    if (!j.contains("sigma") || !j["sigma"].is_array()) fail(path, "missing \"sigma\" rows");
    std::size_t i = 0;
    for (const Json& row : j["sigma"]) {
        std::string rp = path + ".sigma[" + std::to_string(i++) + "]";
        Idx s = get_index(row.at("s"), rp + ".s", S);
        std::vector<Idx> fam = get_family(row.at("f"), rp + ".f", m.base.pos(s), S);
        Idx out = get_index(row.at("out"), rp + ".out", S);
        m.sigma[s][family_rank(fam, S)] = out;
    }
    if (!j.contains("pr") || !j["pr"].is_array()) fail(path, "missing \"pr\" rows");
    // allocate pr rows for known sigma entries
    for (Idx s = 0; s < S; ++s)
        for (Nat r = 0; r < m.sigma[s].size(); ++r)
            if (m.sigma[s][r] != kNoIdx)
                m.pr[s][r].assign(m.base.pos(m.sigma[s][r]), {kNoIdx, kNoIdx});
    i = 0;
    for (const Json& row : j["pr"]) {
        std::string rp = path + ".pr[" + std::to_string(i++) + "]";
        Idx s = get_index(row.at("s"), rp + ".s", S);
        std::vector<Idx> fam = get_family(row.at("f"), rp + ".f", m.base.pos(s), S);
        Nat fr = family_rank(fam, S);
        if (m.sigma[s][fr] == kNoIdx) fail(rp, "pr row for an undefined substitution");
        Idx p = get_index(row.at("p"), rp + ".p", m.base.pos(m.sigma[s][fr]));
        const Json& out = row.at("out");
        if (!out.is_array() || out.size() != 2) fail(rp + ".out", "expected a pair");
        Idx p1 = get_index(out[0], rp + ".out[0]", m.base.pos(s));
        Idx p2 = get_index(out[1], rp + ".out[1]", m.base.pos(fam[p1]));
        m.pr[s][fr][p] = {p1, p2};
    }
    for (Idx s = 0; s < S; ++s)
        for (Nat r = 0; r < m.sigma[s].size(); ++r) {
            if (m.sigma[s][r] == kNoIdx) {
                if (!m.base.fueled)
                    fail(path + ".sigma", "missing row for shape " + std::to_string(s) + " family #" +
                                              std::to_string(r) + " on a finite carrier");
                continue;
            }
            for (Idx p = 0; p < m.pr[s][r].size(); ++p)
                if (m.pr[s][r][p].first == kNoIdx)
                    fail(path + ".pr", "missing row for shape " + std::to_string(s) + " family #" +
                                           std::to_string(r) + " position " + std::to_string(p));
        }
    validate_monadic(m);
    return m;
}

DirectedContainer parse_directed_fields(const Json& j, Container base, const std::string& path) {
    DirectedContainer d;
    d.base = std::move(base);
    Idx S = d.shape_count();
    if (!j.contains("o") || !j["o"].is_array()) fail(path, "missing \"o\"");
    if (j["o"].size() != S) fail(path + ".o", "expected one root per shape");
    d.o.resize(S);
    for (Idx s = 0; s < S; ++s) d.o[s] = get_index(j["o"][s], path + ".o[" + std::to_string(s) + "]", d.base.pos(s));
    d.down.resize(S);
    d.oplus.resize(S);
    for (Idx s = 0; s < S; ++s) {
        d.down[s].assign(d.base.pos(s), kNoIdx);
        d.oplus[s].resize(d.base.pos(s));
    }
    std::size_t i = 0;
    if (!j.contains("down") || !j["down"].is_array()) fail(path, "missing \"down\" rows");
    for (const Json& row : j["down"]) {
        std::string rp = path + ".down[" + std::to_string(i++) + "]";
        Idx s = get_index(row.at("s"), rp + ".s", S);
        Idx p = get_index(row.at("p"), rp + ".p", d.base.pos(s));
        d.down[s][p] = get_index(row.at("out"), rp + ".out", S);
        d.oplus[s][p].assign(d.base.pos(d.down[s][p]), kNoIdx);
    }
    i = 0;
    if (!j.contains("oplus") || !j["oplus"].is_array()) fail(path, "missing \"oplus\" rows");
    for (const Json& row : j["oplus"]) {
        std::string rp = path + ".oplus[" + std::to_string(i++) + "]";
        Idx s = get_index(row.at("s"), rp + ".s", S);
        Idx p = get_index(row.at("p"), rp + ".p", d.base.pos(s));
        if (d.down[s][p] == kNoIdx) fail(rp, "row for an undefined subshape");
        Idx p2 = get_index(row.at("p2"), rp + ".p2", d.base.pos(d.down[s][p]));
        d.oplus[s][p][p2] = get_index(row.at("out"), rp + ".out", d.base.pos(s));
    }
    for (Idx s = 0; s < S; ++s)
        for (Idx p = 0; p < d.base.pos(s); ++p) {
            if (d.down[s][p] == kNoIdx) {
                if (!d.base.fueled) fail(path + ".down", "missing row on a finite carrier");
                continue;
            }
            for (Idx p2 = 0; p2 < d.oplus[s][p].size(); ++p2)
                if (d.oplus[s][p][p2] == kNoIdx) fail(path + ".oplus", "missing row");
        }
    validate_directed(d);
    return d;
}

Slot parse_slot(const Json& ref, const std::string& path, Slot::Flavor want, Idx default_fuel);

DistLawData parse_law_fields(const Json& j, LawKind kind, const std::string& path, Idx default_fuel) {
    if (!j.contains("inner")) fail(path, "missing \"inner\"");
    if (!j.contains("outer")) fail(path, "missing \"outer\"");
    Slot::Flavor f1 = kind == LawKind::MndDir ? Slot::Flavor::Directed : Slot::Flavor::Monadic;
    Slot::Flavor f2 = kind == LawKind::DirMnd ? Slot::Flavor::Directed : Slot::Flavor::Monadic;
    Slot s1 = parse_slot(j["inner"], path + ".inner", f1, default_fuel);
    Slot s2 = parse_slot(j["outer"], path + ".outer", f2, default_fuel);
    DistLawData law = make_law_skeleton(kind, std::move(s1), std::move(s2));
    const Container& c1 = law.c1();
    const Container& c2 = law.c2();
    Idx S1 = c1.shape_count();
    Idx S2 = c2.shape_count();

    auto row_base = [&](const Json& row, const std::string& rp) {
        Idx s = get_index(row.at("s"), rp + ".s", S1);
        std::vector<Idx> fam = get_family(row.at("f"), rp + ".f", c1.pos(s), S2);
        return std::pair<Idx, Nat>(s, family_rank(fam, S2));
    };

    std::size_t i = 0;
    for (const Json& row : j.value("u1", Json::array())) {
        std::string rp = path + ".u1[" + std::to_string(i++) + "]";
        auto [s, fr] = row_base(row, rp);
        law.u1[s][fr] = get_index(row.at("out"), rp + ".out", S2);
    }
    // u2/v rows depend on the u1 values; allocate what is known
    for (Idx s = 0; s < S1; ++s)
        for (Nat fr = 0; fr < law.u1[s].size(); ++fr)
            if (law.u1[s][fr] != kNoIdx) {
                law.u2[s][fr].assign(c2.pos(law.u1[s][fr]), kNoIdx);
                law.v1[s][fr].resize(c2.pos(law.u1[s][fr]));
                law.v2[s][fr].resize(c2.pos(law.u1[s][fr]));
            }
    i = 0;
    for (const Json& row : j.value("u2", Json::array())) {
        std::string rp = path + ".u2[" + std::to_string(i++) + "]";
        auto [s, fr] = row_base(row, rp);
        if (law.u1[s][fr] == kNoIdx) fail(rp, "u2 row for an undefined u1 entry");
        Idx q = get_index(row.at("q"), rp + ".q", c2.pos(law.u1[s][fr]));
        law.u2[s][fr][q] = get_index(row.at("out"), rp + ".out", S1);
    }
    for (Idx s = 0; s < S1; ++s)
        for (Nat fr = 0; fr < law.u1[s].size(); ++fr)
            for (Idx q = 0; q < law.u2[s][fr].size(); ++q)
                if (law.u2[s][fr][q] != kNoIdx) {
                    law.v1[s][fr][q].assign(c1.pos(law.u2[s][fr][q]), kNoIdx);
                    law.v2[s][fr][q].assign(c1.pos(law.u2[s][fr][q]), kNoIdx);
                }
    i = 0;
    for (const Json& row : j.value("v1", Json::array())) {
        std::string rp = path + ".v1[" + std::to_string(i++) + "]";
        auto [s, fr] = row_base(row, rp);
        if (law.u1[s][fr] == kNoIdx) fail(rp, "v1 row for an undefined u1 entry");
        Idx q = get_index(row.at("q"), rp + ".q", c2.pos(law.u1[s][fr]));
        if (law.u2[s][fr][q] == kNoIdx) fail(rp, "v1 row for an undefined u2 entry");
        Idx p = get_index(row.at("p"), rp + ".p", c1.pos(law.u2[s][fr][q]));
        law.v1[s][fr][q][p] = get_index(row.at("out"), rp + ".out", c1.pos(s));
    }
    i = 0;
    for (const Json& row : j.value("v2", Json::array())) {
        std::string rp = path + ".v2[" + std::to_string(i++) + "]";
        auto [s, fr] = row_base(row, rp);
        std::vector<Idx> fam = get_family(row.at("f"), rp + ".f", c1.pos(s), S2);
        if (law.u1[s][fr] == kNoIdx) fail(rp, "v2 row for an undefined u1 entry");
        Idx q = get_index(row.at("q"), rp + ".q", c2.pos(law.u1[s][fr]));
        if (law.u2[s][fr][q] == kNoIdx) fail(rp, "v2 row for an undefined u2 entry");
        Idx p = get_index(row.at("p"), rp + ".p", c1.pos(law.u2[s][fr][q]));
        if (law.v1[s][fr][q][p] == kNoIdx) fail(rp, "v2 row before its v1 entry");
        law.v2[s][fr][q][p] =
            get_index(row.at("out"), rp + ".out", c2.pos(fam[law.v1[s][fr][q][p]]));
    }
    // completeness for finite slot1
    if (!c1.fueled) {
        for (Idx s = 0; s < S1; ++s)
            for (Nat fr = 0; fr < law.u1[s].size(); ++fr) {
                if (law.u1[s][fr] == kNoIdx)
                    fail(path + ".u1", "missing row for shape " + std::to_string(s) + " family #" +
                                           std::to_string(fr));
                for (Idx q = 0; q < law.u2[s][fr].size(); ++q) {
                    if (law.u2[s][fr][q] == kNoIdx)
                        fail(path + ".u2", "missing row at s=" + std::to_string(s) + " q=" +
                                               std::to_string(q));
                    for (Idx p = 0; p < law.v1[s][fr][q].size(); ++p) {
                        if (law.v1[s][fr][q][p] == kNoIdx) fail(path + ".v1", "missing row");
                        if (law.v2[s][fr][q][p] == kNoIdx) fail(path + ".v2", "missing row");
                    }
                }
            }
    }
    validate_law(law);
    return law;
}

Document parse_json(const Json& j, const std::string& path, Idx default_fuel) {
    if (!j.is_object()) fail(path, "expected an object");
    std::string kind = j.value("kind", "");
    Document doc;
    if (kind == "container") {
        doc.kind = Document::Kind::Container;
        doc.container = parse_carrier(j, path);
    } else if (kind == "monadic") {
        doc.kind = Document::Kind::Monadic;
        doc.monadic = parse_monadic_fields(j, parse_carrier(j, path), path);
    } else if (kind == "directed") {
        doc.kind = Document::Kind::Directed;
        doc.directed = parse_directed_fields(j, parse_carrier(j, path), path);
    } else if (kind == "mnd-mnd" || kind == "mnd-dir" || kind == "dir-mnd") {
        doc.kind = Document::Kind::Law;
        LawKind lk = kind == "mnd-mnd" ? LawKind::MndMnd
                     : kind == "mnd-dir" ? LawKind::MndDir
                                         : LawKind::DirMnd;
        doc.law = parse_law_fields(j, lk, path, default_fuel);
        if (j["inner"].is_string()) doc.inner_ref = j["inner"].get<std::string>();
        if (j["outer"].is_string()) doc.outer_ref = j["outer"].get<std::string>();
    } else if (kind == "composite") {
        doc.kind = Document::Kind::Composite;
        if (!j.contains("outer") || !j.contains("inner")) fail(path, "composite needs carrier refs");
        Slot so = parse_slot(j["outer"], path + ".outer", Slot::Flavor::Monadic, default_fuel);
        Slot si = parse_slot(j["inner"], path + ".inner", Slot::Flavor::Monadic, default_fuel);
        doc.comp_outer = so.mnd;
        doc.comp_inner = si.mnd;
        if (j["outer"].is_string()) doc.outer_ref = j["outer"].get<std::string>();
        if (j["inner"].is_string()) doc.inner_ref = j["inner"].get<std::string>();
        doc.monadic = parse_monadic_fields(j, parse_carrier(j, path), path);
    } else {
        fail(path + ".kind", "unknown document kind \"" + kind + "\"");
    }
    return doc;
}

Json carrier_json(const Container& c) {
    Json j;
    j["shapes"] = c.labels;
    j["positions"] = c.positions;
    if (c.fueled) j["fueled"] = true;
    return j;
}

void monadic_json(Json& j, const MonadicContainer& m) {
    Json carrier = carrier_json(m.base);
    j["shapes"] = carrier["shapes"];
    j["positions"] = carrier["positions"];
    if (m.base.fueled) j["fueled"] = true;
    if (m.iota == kNoIdx) j["iota"] = nullptr;
    else j["iota"] = m.iota;
    Json sigma = Json::array();
    Json pr = Json::array();
    Idx S = m.shape_count();
    for (Idx s = 0; s < S; ++s) {
        std::vector<Idx> fam(m.base.pos(s), 0);
        for (Nat r = 0; r < m.sigma[s].size(); ++r) {
            if (m.sigma[s][r] != kNoIdx) {
                sigma.push_back(Json{{"s", s}, {"f", fam}, {"out", m.sigma[s][r]}});
                for (Idx p = 0; p < m.pr[s][r].size(); ++p)
                    pr.push_back(Json{{"s", s},
                                      {"f", fam},
                                      {"p", p},
                                      {"out", Json::array({m.pr[s][r][p].first, m.pr[s][r][p].second})}});
            }
            for (std::size_t k = fam.size(); k-- > 0;) {
                if (++fam[k] < S) break;
                fam[k] = 0;
            }
        }
    }
    j["sigma"] = std::move(sigma);
    j["pr"] = std::move(pr);
}

void directed_json(Json& j, const DirectedContainer& d) {
    Json carrier = carrier_json(d.base);
    j["shapes"] = carrier["shapes"];
    j["positions"] = carrier["positions"];
    if (d.base.fueled) j["fueled"] = true;
    j["o"] = d.o;
    Json down = Json::array();
    Json oplus = Json::array();
    for (Idx s = 0; s < d.shape_count(); ++s)
        for (Idx p = 0; p < d.base.pos(s); ++p) {
            if (d.down[s][p] == kNoIdx) continue;
            down.push_back(Json{{"s", s}, {"p", p}, {"out", d.down[s][p]}});
            for (Idx p2 = 0; p2 < d.oplus[s][p].size(); ++p2)
                oplus.push_back(Json{{"s", s}, {"p", p}, {"p2", p2}, {"out", d.oplus[s][p][p2]}});
        }
    j["down"] = std::move(down);
    j["oplus"] = std::move(oplus);
}

Json slot_json(const Slot& slot, const std::string& ref) {
    if (!ref.empty()) return Json(ref);
    Json j;
    if (slot.is_monadic()) {
        j["kind"] = "monadic";
        monadic_json(j, slot.mnd);
    } else {
        j["kind"] = "directed";
        directed_json(j, slot.dir);
    }
    return j;
}

Json law_json(const DistLawData& law, const std::string& inner_ref, const std::string& outer_ref) {
    Json j;
    j["kind"] = law_kind_name(law.kind);
    j["inner"] = slot_json(law.slot1, inner_ref);
    j["outer"] = slot_json(law.slot2, outer_ref);
    const Container& c1 = law.c1();
    Json u1 = Json::array(), u2 = Json::array(), v1 = Json::array(), v2 = Json::array();
    Idx S2 = law.c2().shape_count();
    for (Idx s = 0; s < c1.shape_count(); ++s) {
        std::vector<Idx> fam(c1.pos(s), 0);
        for (Nat fr = 0; fr < law.u1[s].size(); ++fr) {
            if (law.u1[s][fr] != kNoIdx) {
                u1.push_back(Json{{"s", s}, {"f", fam}, {"out", law.u1[s][fr]}});
                for (Idx q = 0; q < law.u2[s][fr].size(); ++q) {
                    if (law.u2[s][fr][q] == kNoIdx) continue;
                    u2.push_back(Json{{"s", s}, {"f", fam}, {"q", q}, {"out", law.u2[s][fr][q]}});
                    for (Idx p = 0; p < law.v1[s][fr][q].size(); ++p) {
                        v1.push_back(Json{
                            {"s", s}, {"f", fam}, {"q", q}, {"p", p}, {"out", law.v1[s][fr][q][p]}});
                        v2.push_back(Json{
                            {"s", s}, {"f", fam}, {"q", q}, {"p", p}, {"out", law.v2[s][fr][q][p]}});
                    }
                }
            }
            for (std::size_t k = fam.size(); k-- > 0;) {
                if (++fam[k] < S2) break;
                fam[k] = 0;
            }
        }
    }
    j["u1"] = std::move(u1);
    j["u2"] = std::move(u2);
    j["v1"] = std::move(v1);
    j["v2"] = std::move(v2);
    return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

Idx parse_count(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size() || v < 0) throw Error("");
        return static_cast<Idx>(v);
    } catch (...) {
        throw Error("invalid " + what + " \"" + s + "\"");
    }
}

Monoid parse_monoid_ref(const std::string& name) {
    if (name.size() > 1 && name[0] == 'z') {
        return cyclic_monoid(parse_count(name.substr(1), "monoid size"));
    }
    std::ifstream in(name);
    if (!in) throw Error("cannot open monoid file \"" + name + "\"");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error("monoid file \"" + name + "\": malformed JSON");
    if (!j.contains("size") || !j.contains("unit") || !j.contains("mult"))
        throw Error("monoid file needs \"size\", \"unit\" and \"mult\"");
    Idx size = j["size"].get<Idx>();
    Idx unit = get_index(j["unit"], "$.unit", size);
    std::vector<std::vector<Idx>> mult;
    if (!j["mult"].is_array() || j["mult"].size() != size) throw Error("$.mult: expected a square table");
    for (std::size_t r = 0; r < size; ++r)
        mult.push_back(get_family(j["mult"][r], "$.mult[" + std::to_string(r) + "]", size, size));
    return make_monoid(size, unit, std::move(mult));
}

Document builtin_or_empty(const std::string& ref, Idx default_fuel) {
    auto parts = split(ref, ':');
    const std::string& head = parts[0];
    auto arg = [&](std::size_t i) -> const std::string& {
        if (i >= parts.size()) throw Error("builtin \"" + ref + "\": missing parameter");
        return parts[i];
    };
    Document doc;
    if (head == "exception") {
        doc = document_of_monadic(mk_exception(parse_count(arg(1), "exception count")));
    } else if (head == "maybe") {
        doc = document_of_monadic(mk_maybe());
    } else if (head == "writer") {
        doc = document_of_monadic(mk_writer(parse_monoid_ref(arg(1))));
    } else if (head == "reader") {
        doc = document_of_monadic(mk_reader(parse_count(arg(1), "environment size")));
    } else if (head == "state") {
        doc = document_of_monadic(mk_state(parse_count(arg(1), "state size")));
    } else if (head == "list") {
        Idx fuel = parts.size() > 1 ? parse_count(arg(1), "fuel") : default_fuel;
        doc = document_of_monadic(mk_list(fuel));
    } else if (head == "writer-dir") {
        doc = document_of_directed(mk_writer_directed(parse_count(arg(1), "carrier size")));
    } else if (head == "reader-dir") {
        doc = document_of_directed(mk_reader_directed(parse_monoid_ref(arg(1))));
    } else if (head == "exception-law") {
        auto rest = split(ref.substr(head.size() + 1), '/');
        if (rest.size() != 2) throw Error("exception-law:<k>/<outer ref> expected");
        Document outer = resolve_ref(rest[1], default_fuel);
        doc = document_of_law(exception_law(parse_count(rest[0], "exception count"), monadic_of(outer)));
        doc.inner_ref = "exception:" + rest[0];
        doc.outer_ref = rest[1];
    } else if (head == "reader-law") {
        auto rest = split(ref.substr(head.size() + 1), '/');
        if (rest.size() != 2) throw Error("reader-law:<k>/<inner ref> expected");
        Document inner = resolve_ref(rest[1], default_fuel);
        doc = document_of_law(reader_law(monadic_of(inner), parse_count(rest[0], "environment size")));
        doc.inner_ref = rest[1];
        doc.outer_ref = "reader:" + rest[0];
    } else if (head == "reader-writer-law") {
        Idx a = parse_count(arg(1), "carrier size");
        Idx b = parse_count(arg(2), "environment size");
        doc = document_of_law(reader_writer_mixed_law(a, b));
        doc.inner_ref = "writer-dir:" + arg(1);
        doc.outer_ref = "reader:" + arg(2);
    } else {
        throw Error("unknown builtin \"" + ref + "\"");
    }
    return doc;
}

Slot parse_slot(const Json& ref, const std::string& path, Slot::Flavor want, Idx default_fuel) {
    Document doc;
    if (ref.is_string()) {
        doc = resolve_ref(ref.get<std::string>(), default_fuel);
    } else if (ref.is_object()) {
        doc = parse_json(ref, path, default_fuel);
    } else {
        fail(path, "expected a builtin name or an inline document");
    }
    if (want == Slot::Flavor::Monadic) {
        if (doc.kind != Document::Kind::Monadic) fail(path, "expected a monadic container here");
        return monadic_slot(doc.monadic);
    }
    if (doc.kind != Document::Kind::Directed) fail(path, "expected a directed container here");
    return directed_slot(doc.directed);
}

} // namespace

Document parse_document(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("$: malformed JSON");
    return parse_json(j, "$", 3);
}

std::string print_document(const Document& doc) {
    Json j;
    switch (doc.kind) {
    case Document::Kind::Container:
        j["kind"] = "container";
        j.update(carrier_json(doc.container));
        break;
    case Document::Kind::Monadic:
        j["kind"] = "monadic";
        monadic_json(j, doc.monadic);
        break;
    case Document::Kind::Directed:
        j["kind"] = "directed";
        directed_json(j, doc.directed);
        break;
    case Document::Kind::Law:
        j = law_json(doc.law, doc.inner_ref, doc.outer_ref);
        break;
    case Document::Kind::Composite:
        j["kind"] = "composite";
        j["outer"] = doc.outer_ref.empty() ? Json(slot_json(monadic_slot(doc.comp_outer), ""))
                                           : Json(doc.outer_ref);
        j["inner"] = doc.inner_ref.empty() ? Json(slot_json(monadic_slot(doc.comp_inner), ""))
                                           : Json(doc.inner_ref);
        monadic_json(j, doc.monadic);
        break;
    }
    return j.dump(2) + "\n";
}

Document resolve_ref(const std::string& ref, Idx default_fuel) {
    if (!ref.empty() && ref[0] == '{') return parse_document(ref);
    static const char* kBuiltins[] = {"exception", "maybe",      "writer",         "reader",
                                      "state",     "list",       "writer-dir",     "reader-dir",
                                      "exception-law", "reader-law", "reader-writer-law"};
    std::string head = ref.substr(0, ref.find(':'));
    for (const char* b : kBuiltins)
        if (head == b) return builtin_or_empty(ref, default_fuel);
    if (ref.size() > 5 && ref.substr(ref.size() - 5) == ".json") {
        std::ifstream in(ref);
        if (!in) throw Error("cannot open \"" + ref + "\"");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return parse_document(text);
    }
    return builtin_or_empty(ref, default_fuel);
}

std::string builtin_catalogue() {
    return "exception:<k>           monadic, one value shape plus k absorbing shapes\n"
           "maybe                   monadic, shorthand for exception:1\n"
           "writer:<z<n>|file>      monadic, monoid elements as shapes\n"
           "reader:<k>              monadic, one shape with k positions\n"
           "state:<k>               monadic, functions on k states as shapes\n"
           "list:<fuel>             monadic (fueled), lengths up to the fuel\n"
           "writer-dir:<k>          directed, k one-position shapes\n"
           "reader-dir:<z<n>|file>  directed, one shape over a monoid\n"
           "exception-law:<k>/<outer ref>   law with exceptions inside <outer>\n"
           "reader-law:<k>/<inner ref>      law with a k-reader outside <inner>\n"
           "reader-writer-law:<a>:<b>       mixed law of a b-reader over an a-writer\n";
}

Document document_of_monadic(MonadicContainer m) {
    Document doc;
    doc.kind = Document::Kind::Monadic;
    doc.monadic = std::move(m);
    return doc;
}

Document document_of_directed(DirectedContainer d) {
    Document doc;
    doc.kind = Document::Kind::Directed;
    doc.directed = std::move(d);
    return doc;
}

Document document_of_law(DistLawData law) {
    Document doc;
    doc.kind = Document::Kind::Law;
    doc.law = std::move(law);
    return doc;
}

Document document_of_composite(const CompatibleComposite& comp, MonadicContainer outer,
                               MonadicContainer inner, std::string outer_ref,
                               std::string inner_ref) {
    Document doc;
    doc.kind = Document::Kind::Composite;
    doc.monadic = comp.mc;
    doc.comp_outer = std::move(outer);
    doc.comp_inner = std::move(inner);
    doc.outer_ref = std::move(outer_ref);
    doc.inner_ref = std::move(inner_ref);
    return doc;
}

MonadicContainer monadic_of(const Document& doc) {
    if (doc.kind != Document::Kind::Monadic) throw Error("a monadic container is required here");
    return doc.monadic;
}

DirectedContainer directed_of(const Document& doc) {
    if (doc.kind != Document::Kind::Directed) throw Error("a directed container is required here");
    return doc.directed;
}

} // namespace contlab
