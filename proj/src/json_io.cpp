#include "minioncore/json_io.hpp"

#include <map>

#include "minioncore/errors.hpp"

namespace minioncore {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

int as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) {
        throw InputError(what + " must be an integer");
    }
    return j.get<int>();
}

bool as_flag(const Json& j) {
    if (j.is_boolean()) {
        return j.get<bool>();
    }
    const int v = as_int(j, "dual flag");
    if (v != 0 && v != 1) {
        throw InputError("dual flag must be 0, 1, true or false");
    }
    return v == 1;
}

Literal literal_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw InputError("a literal is [symbol, dual]");
    }
    return {as_int(j[0], "symbol"), as_flag(j[1])};
}

Json literal_json(const Literal& l) { return Json::array({l.symbol, l.dual}); }

Json atom_json(const Atom& a) {
    if (a.relation == Relation::Leq) {
        throw InputError("<= is not part of the description schema");
    }
    Json out;
    out["kind"] = a.relation == Relation::Triangle ? "tri" : "eq";
    out["lhs"] = literal_json(a.lhs);
    out["rhs"] = literal_json(a.rhs);
    return out;
}

std::string h_name(int s) { return "h" + std::to_string(s + 1); }

Json terms_json(const std::vector<Term>& terms, const std::function<std::string(int)>& name) {
    Json out = Json::array();
    for (const auto& t : terms) {
        out.push_back(to_string(t, name));
    }
    return out;
}

Json images_json(const std::vector<SymbolImage>& images, const std::function<std::string(int)>& name) {
    Json out = Json::array();
    for (std::size_t s = 0; s < images.size(); ++s) {
        Json e;
        e["symbol"] = name(static_cast<int>(s));
        e["sort"] = images[s].target;
        e["dual"] = images[s].dual;
        out.push_back(e);
    }
    return out;
}

Json member_json(const MultiOp& op) {
    Json out = Json::array();
    for (const auto& t : op) {
        out.push_back(to_hex(t));
    }
    return out;
}

}  // namespace

InputKind detect_input(const Json& j) {
    if (!j.is_object()) {
        throw InputError("input must be a JSON object");
    }
    if (j.contains("domain")) {
        return InputKind::Finite;
    }
    if (j.contains("k")) {
        return InputKind::Description;
    }
    if (j.contains("sorts")) {
        return InputKind::Relations;
    }
    if (j.contains("core")) {
        return InputKind::Core;
    }
    throw InputError("input has none of the fields \"domain\", \"k\", \"sorts\", \"core\"");
}

Json to_json(const TruthTable& t) {
    Json out;
    out["arity"] = t.arity();
    out["bits"] = to_hex(t);
    return out;
}

TruthTable truth_table_from_json(const Json& j) {
    const Json& bits = field(j, "bits");
    if (!bits.is_string()) {
        throw InputError("bits must be a hex string");
    }
    return from_hex(as_int(field(j, "arity"), "arity"), bits.get<std::string>());
}

RelationalInput relations_from_json(const Json& j) {
    RelationalInput in;
    const Json& sorts = field(j, "sorts");
    if (!sorts.is_array()) {
        throw InputError("sorts must be a list of carriers");
    }
    std::vector<std::map<int, int>> position;
    for (const auto& carrier : sorts) {
        if (!carrier.is_array() || carrier.empty()) {
            throw InputError("each carrier must be a nonempty list of element labels");
        }
        std::vector<int> labels;
        std::map<int, int> pos;
        for (const auto& v : carrier) {
            const int label = as_int(v, "element label");
            if (!pos.emplace(label, static_cast<int>(labels.size())).second) {
                throw InputError("carrier lists element " + std::to_string(label) + " twice");
            }
            labels.push_back(label);
        }
        in.signature.carriers.push_back(std::move(labels));
        position.push_back(std::move(pos));
    }
    const Json empty = Json::array();
    const Json& rels = j.contains("relations") ? j.at("relations") : empty;
    if (!rels.is_array()) {
        throw InputError("relations must be a list");
    }
    for (const auto& r : rels) {
        std::vector<int> type;
        for (const auto& s : field(r, "type")) {
            const int sort = as_int(s, "sort index");
            if (sort < 0 || sort >= in.signature.sort_count()) {
                throw InputError("relation type refers to sort " + std::to_string(sort) + " out of range");
            }
            type.push_back(sort);
        }
        std::vector<std::vector<int>> tuples;
        for (const auto& t : field(r, "tuples")) {
            if (!t.is_array() || t.size() != type.size()) {
                throw InputError("tuple length differs from the relation type");
            }
            std::vector<int> tuple;
            for (std::size_t x = 0; x < t.size(); ++x) {
                const int label = as_int(t[x], "tuple entry");
                const auto& pos = position[type[x]];
                const auto it = pos.find(label);
                if (it == pos.end()) {
                    throw InputError("element " + std::to_string(label) + " is not in the carrier of sort " +
                                     std::to_string(type[x]));
                }
                tuple.push_back(it->second);
            }
            tuples.push_back(std::move(tuple));
        }
        in.relations.push_back(TypedRelation::make(std::move(type), std::move(tuples)));
    }
    for (const auto& r : in.relations) {
        validate(in.signature, r);
    }
    return in;
}

Json to_json(const Signature& sig, const std::vector<TypedRelation>& relations) {
    Json out;
    out["sorts"] = sig.carriers;
    Json rels = Json::array();
    for (const auto& r : relations) {
        Json e;
        e["type"] = r.type;
        Json tuples = Json::array();
        for (const auto& t : r.tuples) {
            std::vector<int> labels;
            for (std::size_t x = 0; x < t.size(); ++x) {
                labels.push_back(sig.carriers[r.type[x]][t[x]]);
            }
            tuples.push_back(labels);
        }
        e["tuples"] = tuples;
        rels.push_back(e);
    }
    out["relations"] = rels;
    return out;
}

Description description_from_json(const Json& j) {
    const int k = as_int(field(j, "k"), "k");
    if (k < 0) {
        throw InputError("k must be nonnegative");
    }
    std::vector<Atom> atoms;
    const Json empty = Json::array();
    const Json& cons = j.contains("constraints") ? j.at("constraints") : empty;
    if (!cons.is_array()) {
        throw InputError("constraints must be a list");
    }
    for (const auto& c : cons) {
        const Json& kind = field(c, "kind");
        Relation rel;
        if (kind == "tri") {
            rel = Relation::Triangle;
        } else if (kind == "eq") {
            rel = Relation::Eq;
        } else {
            throw InputError("constraint kind must be \"tri\" or \"eq\"");
        }
        const Atom a{rel, literal_from_json(field(c, "lhs")), literal_from_json(field(c, "rhs"))};
        for (int s : {a.lhs.symbol, a.rhs.symbol}) {
            if (s < 0 || s >= k) {
                throw InputError("constraint refers to symbol " + std::to_string(s) + " out of range");
            }
        }
        atoms.push_back(a);
    }
    return Description::make(k, std::move(atoms));
}

Json to_json(const Description& d) {
    Json out;
    out["k"] = d.k;
    Json cons = Json::array();
    for (const auto& a : d.constraints) {
        cons.push_back(atom_json(a));
    }
    out["constraints"] = cons;
    return out;
}

Json to_json(const ReducedDescription& rd) {
    Json out;
    out["f"] = rd.f;
    out["g"] = rd.g;
    out["k"] = rd.symbols();
    Json cons = Json::array();
    for (const auto& a : rd.constraints) {
        cons.push_back(atom_json(a));
    }
    out["constraints"] = cons;
    return out;
}

FiniteStructure finite_from_json(const Json& j) {
    FiniteStructure psi;
    psi.domain = as_int(field(j, "domain"), "domain");
    const Json empty = Json::array();
    const Json& rels = j.contains("relations") ? j.at("relations") : empty;
    if (!rels.is_array()) {
        throw InputError("relations must be a list");
    }
    for (const auto& r : rels) {
        std::vector<std::vector<int>> tuples;
        for (const auto& t : field(r, "tuples")) {
            if (!t.is_array()) {
                throw InputError("a tuple must be a list");
            }
            std::vector<int> tuple;
            for (const auto& v : t) {
                tuple.push_back(as_int(v, "tuple entry"));
            }
            tuples.push_back(std::move(tuple));
        }
        psi.relations.push_back(std::move(tuples));
    }
    validate(psi);
    return psi;
}

MinionSpec minion_from_json(const Json& j, std::size_t budget) {
    MinionSpec out;
    auto from_relations = [&](const Signature& sig, const std::vector<TypedRelation>& rels) {
        if (sig.sort_count() == 0) {
            out.label = "T";
            return;
        }
        const IdempotentCore ic = idempotent_core(sig, rels, budget);
        if (ic.trivial) {
            out.label = "T";
            return;
        }
        if (!ic.signature.is_boolean()) {
            throw InputError("relations on carriers with more than two elements need the finite-domain input");
        }
        const Description d = extract_description(ic);
        out.sorts = d.k;
        out.atoms = d.constraints;
        out.label = "Pol";
    };
    switch (detect_input(j)) {
        case InputKind::Core: {
            const Json& name = j.at("core");
            if (!name.is_string()) {
                throw InputError("core must be a name such as \"A2\"");
            }
            const CoreId c = CoreId::parse(name.get<std::string>());
            out.label = to_string(c);
            if (c.tag != CoreTag::T) {
                out.sorts = c.sorts();
                out.atoms = core_atoms(c);
            }
            break;
        }
        case InputKind::Description: {
            const Description d = description_from_json(j);
            out.sorts = d.k;
            out.atoms = d.constraints;
            out.label = d.k == 0 ? "T" : "Clo";
            break;
        }
        case InputKind::Relations: {
            const auto in = relations_from_json(j);
            from_relations(in.signature, in.relations);
            break;
        }
        case InputKind::Finite: {
            const auto t = translate_finite(finite_from_json(j), budget);
            if (t.trivial) {
                out.label = "T";
            } else {
                from_relations(t.translation.signature, t.translation.relations);
            }
            break;
        }
    }
    return out;
}

Json report_json(const ClassificationReport& rep) {
    Json out;
    out["core"] = to_string(rep.core);
    out["digest"] = rep.digest;
    out["coreSorts"] = rep.core.sorts();
    if (!rep.idempotent.source_sort.empty()) {
        out["keptSorts"] = rep.idempotent.source_sort;
    }
    if (rep.description.k > 0) {
        const ReducedDescription& rd = rep.reduction.reduced;
        auto rd_name = [&](int s) { return rd.name(s); };
        out["description"] = to_json(rep.description);
        out["reduced"] = to_json(rd);
        Json map = Json::array();
        for (const auto& im : rep.reduction.symbol_map) {
            map.push_back(Json::array({im.target, im.dual}));
        }
        out["symbolMap"] = map;
        out["forward"] = terms_json(rep.forward, rd_name);
        out["backward"] = images_json(rep.backward, rd_name);
        out["forwardDescription"] = terms_json(rep.forward_description, h_name);
        out["backwardDescription"] = images_json(rep.backward_description, h_name);
    }
    out["log"] = rep.log;
    out["verified"] = rep.verified;
    return out;
}

Json report_json(const FiniteReport& rep) {
    Json out = report_json(rep.report);
    out["coreDomain"] = rep.labels;
    Json dict = Json::array();
    for (const auto& p : rep.sort_dictionary) {
        dict.push_back(Json::array({p[0], p[1]}));
    }
    out["sortDictionary"] = dict;
    return out;
}

Json translation_json(const FiniteTranslation& t) {
    Json out;
    out["digest"] = t.digest;
    out["trivial"] = t.trivial;
    out["coreDomain"] = t.labels;
    Json dict = Json::array();
    for (const auto& p : t.sort_dictionary) {
        dict.push_back(Json::array({p[0], p[1]}));
    }
    out["sortDictionary"] = dict;
    out["boolean"] = to_json(t.translation.signature, t.translation.relations);
    return out;
}

Json reduction_json(const Description& d, const Reduction& r) {
    Json out;
    out["description"] = to_json(d);
    out["reduced"] = to_json(r.reduced);
    Json map = Json::array();
    for (std::size_t s = 0; s < r.symbol_map.size(); ++s) {
        Json e;
        e["symbol"] = h_name(static_cast<int>(s));
        e["target"] = r.reduced.name(r.symbol_map[s].target);
        e["dual"] = r.symbol_map[s].dual;
        map.push_back(e);
    }
    out["symbolMap"] = map;
    Json constraints = Json::array();
    for (const auto& a : r.reduced.constraints) {
        constraints.push_back(to_string(a, [&](int s) { return r.reduced.name(s); }));
    }
    out["reducedText"] = constraints;
    return out;
}

Json minion_json(const TruncatedMinion& M) {
    Json out;
    out["sorts"] = M.sorts();
    out["cap"] = M.cap();
    Json levels = Json::array();
    for (int n = 1; n <= M.cap(); ++n) {
        Json level;
        level["arity"] = n;
        Json members = Json::array();
        for (const auto& op : M.at(n)) {
            members.push_back(member_json(op));
        }
        level["members"] = members;
        const auto gens = minor_generators(n, M.cap());
        Json gj = Json::array();
        for (const auto& g : gens) {
            Json e;
            e["target"] = g.target;
            e["alpha"] = g.alpha;
            gj.push_back(e);
        }
        level["generators"] = gj;
        Json minors = Json::array();
        for (const auto& op : M.at(n)) {
            Json row = Json::array();
            for (const auto& g : gens) {
                row.push_back(M.find(g.target, multi_minor(op, g.alpha, g.target)));
            }
            minors.push_back(row);
        }
        level["minors"] = minors;
        levels.push_back(level);
    }
    out["arities"] = levels;
    Json wit = Json::array();
    for (const auto& w : M.witnesses()) {
        wit.push_back(member_json(w));
    }
    out["witnesses"] = wit;
    return out;
}

}  // namespace minioncore
