// minioncore: classify multisorted Boolean clones and small-projection
// finite-domain clones up to minion homomorphism.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "minioncore/errors.hpp"
#include "minioncore/json_io.hpp"

using namespace minioncore;

namespace {

struct RunConfig {
    std::string input;
    int arity_cap = 4;
    std::size_t budget = 50'000'000;
    std::string format = "json";
    int max_k = 3;
};

Json read_input(const std::string& input) {
    std::string text;
    if (input.empty()) {
        throw InputError("--input is required");
    }
    if (input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (input.find_first_not_of(" \t\r\n") != std::string::npos &&
               input[input.find_first_not_of(" \t\r\n")] == '{') {
        text = input;
    } else {
        std::ifstream f(input);
        if (!f) {
            throw InputError("cannot read " + input);
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

VerifyOptions verify_options(const RunConfig& cfg) {
    VerifyOptions o;
    o.arity_cap = cfg.arity_cap;
    o.budget = cfg.budget;
    return o;
}

TruncatedMinion build(const MinionSpec& spec, int cap, bool witnesses, std::size_t budget) {
    MinionOptions mo;
    mo.cap = cap;
    mo.witnesses = witnesses;
    mo.budget = budget;
    if (spec.sorts == 0) {
        return from_core(CoreId::make(CoreTag::T), mo);
    }
    return from_atoms(spec.sorts, spec.atoms, mo);
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed, const std::string& cmd) {
    for (const char* f : allowed) {
        if (cfg.format == f) {
            return;
        }
    }
    throw InputError("format " + cfg.format + " is not available for " + cmd);
}

std::string classify_text(const Json& rep) {
    std::ostringstream out;
    out << "core: " << rep["core"].get<std::string>() << "\n";
    if (rep.contains("reduced")) {
        out << "forward:";
        for (const auto& t : rep["forwardDescription"]) {
            out << " " << t.get<std::string>();
        }
        out << "\nbackward:";
        for (const auto& b : rep["backwardDescription"]) {
            out << " " << b["symbol"].get<std::string>() << "->h" << b["sort"].get<int>() + 1
                << (b["dual"].get<bool>() ? "^d" : "");
        }
        out << "\n";
    }
    if (rep.contains("sortDictionary")) {
        out << "sorts:";
        for (const auto& p : rep["sortDictionary"]) {
            out << " {" << p[0].get<int>() << "," << p[1].get<int>() << "}";
        }
        out << "\n";
    }
    for (const auto& line : rep["log"]) {
        out << "  " << line.get<std::string>() << "\n";
    }
    out << "verified: " << (rep["verified"].get<bool>() ? "true" : "false") << "\n";
    return out.str();
}

std::string cmd_classify(const RunConfig& cfg) {
    require_format(cfg, {"json", "text"}, "classify");
    const Json in = read_input(cfg.input);
    Json rep;
    switch (detect_input(in)) {
        case InputKind::Relations: {
            const auto r = relations_from_json(in);
            rep = report_json(classify_relations(r.signature, r.relations, verify_options(cfg)));
            break;
        }
        case InputKind::Description: {
            const Description d = description_from_json(in);
            auto report = classify_description(d, verify_options(cfg));
            report.digest = text_digest(to_json(d).dump());
            rep = report_json(report);
            break;
        }
        case InputKind::Finite:
            rep = report_json(classify_finite(finite_from_json(in), verify_options(cfg)));
            break;
        case InputKind::Core:
            throw InputError("classify takes relations, a description or a finite structure");
    }
    if (!rep["verified"].get<bool>()) {
        throw VerificationError("report is not verified");
    }
    return cfg.format == "text" ? classify_text(rep) : rep.dump(2) + "\n";
}

std::string cmd_translate(const RunConfig& cfg) {
    require_format(cfg, {"json"}, "translate");
    const Json in = read_input(cfg.input);
    if (detect_input(in) != InputKind::Finite) {
        throw InputError("translate takes {\"domain\": l, \"relations\": [...]}");
    }
    return translation_json(translate_finite(finite_from_json(in), cfg.budget)).dump(2) + "\n";
}

std::string cmd_reduce(const RunConfig& cfg) {
    require_format(cfg, {"json", "text"}, "reduce");
    const Json in = read_input(cfg.input);
    Description d;
    if (detect_input(in) == InputKind::Description) {
        d = description_from_json(in);
    } else {
        const MinionSpec spec = minion_from_json(in, cfg.budget);
        if (detect_input(in) == InputKind::Core) {
            throw InputError("reduce takes relations, a description or a finite structure");
        }
        d = Description::make(spec.sorts, spec.atoms);
    }
    if (d.k == 0) {
        throw InputError("nothing to reduce: the minion is T");
    }
    const Reduction r = to_reduced(d);
    const Json out = reduction_json(d, r);
    if (cfg.format == "text") {
        std::string text = to_string(r.reduced) + "\n";
        return text;
    }
    return out.dump(2) + "\n";
}

std::string cmd_enumerate(const RunConfig& cfg) {
    require_format(cfg, {"json"}, "enumerate");
    const MinionSpec spec = minion_from_json(read_input(cfg.input), cfg.budget);
    Json out;
    out["minion"] = spec.label;
    out["arity"] = cfg.arity_cap;
    out["mode"] = cfg.arity_cap == 5 ? "symmetric5" : "full";
    Json members = Json::array();
    if (spec.sorts == 0) {
        members.push_back(Json::array());
    } else {
        EnumOptions eo;
        eo.arity = cfg.arity_cap;
        eo.budget = cfg.budget;
        eo.mode = cfg.arity_cap == 5 ? EnumMode::Symmetric5 : EnumMode::Full;
        for_each_solution(spec.sorts, spec.atoms, eo, [&](const MultiOp& op) {
            Json m = Json::array();
            for (const auto& t : op) {
                m.push_back(to_hex(t));
            }
            members.push_back(m);
        });
    }
    out["count"] = members.size();
    out["members"] = members;
    return out.dump(2) + "\n";
}

std::string cmd_hom(const RunConfig& cfg) {
    require_format(cfg, {"json", "text"}, "hom");
    const Json in = read_input(cfg.input);
    if (!in.is_object() || !in.contains("from") || !in.contains("to")) {
        throw InputError("hom takes {\"from\": minion, \"to\": minion}");
    }
    const MinionSpec a = minion_from_json(in["from"], cfg.budget);
    const MinionSpec b = minion_from_json(in["to"], cfg.budget);
    const int cap = std::min(cfg.arity_cap, 4);
    const TruncatedMinion M = build(a, cap, true, cfg.budget);
    const TruncatedMinion N = build(b, cap, true, cfg.budget);
    SearchOptions so;
    so.budget = cfg.budget;
    const auto hom = hom_search(M, N, so);
    Json out;
    out["from"] = a.label;
    out["to"] = b.label;
    out["cap"] = cap;
    out["exists"] = hom.has_value();
    if (hom) {
        Json binary = Json::array();
        for (std::size_t i = 0; i < M.size(2); ++i) {
            Json m = Json::array();
            for (const auto& t : M.at(2)[i]) {
                m.push_back(to_hex(t));
            }
            Json img = Json::array();
            for (const auto& t : N.at(2)[hom->binary()[i]]) {
                img.push_back(to_hex(t));
            }
            binary.push_back(Json::array({m, img}));
        }
        out["binary"] = binary;
    }
    if (cfg.format == "text") {
        return a.label + (hom ? " -> " : " -/-> ") + b.label + " (cap " + std::to_string(cap) + ")\n";
    }
    return out.dump(2) + "\n";
}

std::string cmd_core(const RunConfig& cfg) {
    require_format(cfg, {"json"}, "core");
    const MinionSpec spec = minion_from_json(read_input(cfg.input), cfg.budget);
    const int cap = std::min(cfg.arity_cap, 4);
    const TruncatedMinion M = build(spec, cap, false, cfg.budget);
    SearchOptions so;
    so.budget = cfg.budget;
    const TruncatedMinion core = compute_core_truncated(M, so);
    Json out;
    out["minion"] = spec.label;
    out["cap"] = cap;
    Json before = Json::array(), after = Json::array();
    for (int n = 1; n <= cap; ++n) {
        before.push_back(M.size(n));
        after.push_back(core.size(n));
    }
    out["sizes"] = before;
    out["coreSizes"] = after;
    out["isCore"] = before == after;
    out["core"] = minion_json(core);
    return out.dump(2) + "\n";
}

std::string cmd_poset(const RunConfig& cfg, bool format_given) {
    if (cfg.max_k < 1 || cfg.max_k > 12) {
        throw InputError("--max-k must lie in 1..12");
    }
    const std::string format = format_given ? cfg.format : "dot";
    if (format == "dot") {
        return poset_dot(cfg.max_k);
    }
    const auto covers = poset_covers(cfg.max_k);
    if (format == "text") {
        std::string out;
        for (const auto& [a, b] : covers) {
            out += to_string(a) + " < " + to_string(b) + "\n";
        }
        return out;
    }
    Json out;
    Json nodes = Json::array();
    for (const auto& c : all_cores(cfg.max_k)) {
        nodes.push_back(to_string(c));
    }
    out["nodes"] = nodes;
    Json edges = Json::array();
    for (const auto& [a, b] : covers) {
        edges.push_back(Json::array({to_string(a), to_string(b)}));
    }
    out["edges"] = edges;
    return out.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify multisorted Boolean clones up to minion homomorphism"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool input) {
        if (input) {
            sub->add_option("--input", cfg.input, "JSON file, inline JSON object, or - for stdin")->required();
        }
        sub->add_option("--arity-cap", cfg.arity_cap, "Arity cap for checks and enumeration")
            ->check(CLI::Range(2, 5));
        sub->add_option("--budget-ops", cfg.budget, "Enumeration and search budget")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
    };
    auto* classify = app.add_subcommand("classify", "Name the canonical core with verified witnesses");
    common(classify, true);
    auto* translate = app.add_subcommand("translate", "Translate small-projection relations to Boolean sorts");
    common(translate, true);
    auto* reduce = app.add_subcommand("reduce", "Reduce a description");
    common(reduce, true);
    auto* enumerate = app.add_subcommand("enumerate", "List the members of one arity");
    common(enumerate, true);
    auto* hom = app.add_subcommand("hom", "Search a truncated minion homomorphism");
    common(hom, true);
    auto* core = app.add_subcommand("core", "Compute the truncated minion core");
    common(core, true);
    auto* poset = app.add_subcommand("poset", "Hasse diagram of the canonical cores");
    common(poset, false);
    poset->add_option("--max-k", cfg.max_k, "Largest index of A_k, B_k, C_k, D_k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::string out;
        if (*classify) {
            out = cmd_classify(cfg);
        } else if (*translate) {
            out = cmd_translate(cfg);
        } else if (*reduce) {
            out = cmd_reduce(cfg);
        } else if (*enumerate) {
            out = cmd_enumerate(cfg);
        } else if (*hom) {
            out = cmd_hom(cfg);
        } else if (*core) {
            out = cmd_core(cfg);
        } else {
            out = cmd_poset(cfg, poset->count("--format") > 0);
        }
        std::cout << out;
        return 0;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
