#include "aaf/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "aaf/errors.hpp"
#include "aaf/generate.hpp"
#include "aaf/io.hpp"
#include "aaf/properties.hpp"
#include "aaf/reductions.hpp"
#include "aaf/semantics.hpp"
#include "aaf/translations.hpp"

namespace aaf {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file: " + path);
    out << content;
}

AF load_af(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    if (format == "tgf")
        return parse_tgf(text);
    return parse_apx(text);
}

std::string dump_af(const AF& f, const std::string& format) {
    return format == "tgf" ? serialize_tgf(f) : serialize_apx(f);
}

SemanticsId need_semantics(const std::string& name) {
    auto s = semantics_from_string(name);
    if (!s)
        throw Error("unknown semantics '" + name + "'");
    return *s;
}

TranslationRoute need_route(const std::string& token) {
    auto r = TranslationRoute::parse(token);
    if (!r)
        throw Error("unknown translation '" + token + "'");
    return *r;
}

Extension parse_set_flag(const std::string& csv) {
    std::vector<ArgumentId> members;
    std::string part;
    std::istringstream in(csv);
    while (std::getline(in, part, ',')) {
        auto b = part.find_first_not_of(" \t");
        auto e = part.find_last_not_of(" \t");
        if (b == std::string::npos)
            continue;
        members.push_back(ArgumentId::plain(part.substr(b, e - b + 1)));
    }
    return Extension(std::move(members));
}

std::string format_extension(const Extension& e) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < e.members().size(); ++i) {
        if (i)
            out << ",";
        out << e.members()[i].text();
    }
    out << "]";
    return out.str();
}

nlohmann::json extension_json(const Extension& e) {
    auto arr = nlohmann::json::array();
    for (const auto& a : e.members())
        arr.push_back(a.text());
    return arr;
}

nlohmann::json provenance_json(const ArgumentId& a) {
    nlohmann::json j;
    j["arg"] = a.text();
    switch (a.tag()) {
    case Tag::prime: j["kind"] = "prime"; j["of"] = a.base(); break;
    case Tag::bar: j["kind"] = "bar"; j["of"] = a.base(); break;
    case Tag::circ: j["kind"] = "circ"; j["of"] = a.base(); break;
    case Tag::bar_circ: j["kind"] = "bar_circ"; j["of"] = a.base(); break;
    case Tag::layer:
        j["kind"] = "layer";
        j["of"] = a.base();
        j["layer"] = a.index();
        break;
    case Tag::bar_circ_layer:
        j["kind"] = "bar_circ_layer";
        j["of"] = a.base();
        j["layer"] = a.index();
        break;
    case Tag::attack_pair:
        j["kind"] = "attack";
        j["source"] = a.base();
        j["target"] = a.second();
        break;
    case Tag::rule_index: j["kind"] = "rule"; j["index"] = a.index(); break;
    case Tag::clause_index: j["kind"] = "clause"; j["index"] = a.index(); break;
    case Tag::special_t:
    case Tag::special_s:
    case Tag::special_b: j["kind"] = "special"; break;
    case Tag::plain: j["kind"] = "original"; break;
    }
    return j;
}

struct SolveOpts {
    std::string file, format = "apx", semantics, via, target, problem = "enum", arg, set,
                dot_file;
    bool set_given = false;
    bool json = false;
};

int cmd_solve(const SolveOpts& o, std::ostream& out) {
    AF f = load_af(o.file, o.format);
    SemanticsId sigma = need_semantics(o.semantics);
    if (!o.dot_file.empty())
        write_file(o.dot_file, to_dot(f));

    auto answer = [&](bool yes) {
        if (o.json)
            out << nlohmann::json{{"answer", yes}}.dump() << "\n";
        else
            out << (yes ? "YES" : "NO") << "\n";
        return 0;
    };

    if ((o.problem == "cred" || o.problem == "skept") && o.arg.empty())
        throw Error("--problem " + o.problem + " needs --arg");
    if (o.problem == "ver" && !o.set_given)
        throw Error("--problem ver needs --set");

    std::optional<ExtensionSet> family;
    if (!o.via.empty()) {
        TranslationRoute route = need_route(o.via);
        SemanticsId target_sem;
        if (!o.target.empty()) {
            target_sem = need_semantics(o.target);
        } else {
            bool found = false;
            target_sem = sigma;
            for (const Claim& c : claim_matrix())
                if (c.source == sigma && c.route == route) {
                    target_sem = c.target;
                    found = true;
                    break;
                }
            if (!found)
                throw Error("no claim for " + to_string(sigma) + " via " + route.name() +
                            "; pass --target");
        }
        family = translated_route_extensions(f, target_sem, route);
    }

    if (o.problem == "enum") {
        ExtensionSet exts = family ? *family : extensions(f, sigma);
        for (const Extension& e : exts.sets())
            out << (o.json ? extension_json(e).dump() : format_extension(e)) << "\n";
        return 0;
    }
    if (o.problem == "cred" || o.problem == "skept") {
        ArgumentId a = ArgumentId::plain(o.arg);
        if (!f.contains(a))
            throw NotInFramework(o.arg);
        if (family) {
            bool cred = false, skept = true;
            for (const Extension& e : family->sets()) {
                cred = cred || e.contains(a);
                skept = skept && e.contains(a);
            }
            return answer(o.problem == "cred" ? cred : skept);
        }
        return answer(o.problem == "cred" ? credulous(f, sigma, a) : skeptical(f, sigma, a));
    }
    if (o.problem == "ver") {
        Extension s = parse_set_flag(o.set);
        if (family)
            return answer(family->contains(s));
        return answer(verify(f, sigma, s));
    }
    if (o.problem == "exists") {
        if (family)
            return answer(!family->empty());
        return answer(exists(f, sigma));
    }
    if (o.problem == "exists-ne") {
        if (family) {
            for (const Extension& e : family->sets())
                if (!e.empty())
                    return answer(true);
            return answer(false);
        }
        return answer(exists_nonempty(f, sigma));
    }
    throw Error("unknown problem '" + o.problem + "'");
}

struct TranslateOpts {
    std::string file, format = "apx", tr, out_file, map_file, dot_file;
};

int cmd_translate(const TranslateOpts& o, std::ostream& out) {
    AF f = load_af(o.file, o.format);
    TranslationOutput t = translate(f, need_route(o.tr));
    std::string text = dump_af(t.target, o.format);
    if (o.out_file.empty())
        out << text;
    else
        write_file(o.out_file, text);
    if (!o.dot_file.empty())
        write_file(o.dot_file, to_dot(t.target));
    if (!o.map_file.empty()) {
        nlohmann::json j;
        j["translation"] = t.route.name();
        auto orig = nlohmann::json::array();
        for (const auto& a : t.original_args)
            orig.push_back(a.text());
        j["original_args"] = orig;
        auto rem = nlohmann::json::array();
        for (const auto& r : t.remainder)
            rem.push_back(extension_json(r));
        j["remainder"] = rem;
        auto arg_map = nlohmann::json::array();
        ArgSet original(t.original_args);
        for (const auto& a : t.target.args())
            if (!original.contains(a))
                arg_map.push_back(provenance_json(a));
        j["arg_map"] = arg_map;
        write_file(o.map_file, j.dump(2) + "\n");
    }
    return 0;
}

struct CheckOpts {
    std::vector<std::string> claims;
    int n = 3;
    int samples = 0;
    std::vector<int> sizes = {4, 5, 6};
    std::vector<double> ps = {0.15, 0.3, 0.5};
    uint64_t seed = 1;
    int pairs = 500;
    bool json = false;
    bool serial = false;
    bool explore = false;
    std::string source, target, tr, strength = "faithful";
};

int cmd_check(const CheckOpts& o, std::ostream& out) {
    SweepConfig cfg;
    cfg.exhaustive_n = o.n;
    cfg.samples_per_cell = o.samples;
    cfg.sizes = o.sizes;
    cfg.ps = o.ps;
    cfg.seed = o.seed;
    cfg.modular_pairs = o.pairs;
    cfg.parallel = !o.serial;
    for (const auto& c : o.claims)
        if (c != "all")
            cfg.only.push_back(c);

    std::vector<CheckReport> reports;
    if (o.explore) {
        if (o.source.empty() || o.target.empty() || o.tr.empty())
            throw Error("--explore needs --source, --target and --tr");
        Strength st;
        if (o.strength == "exact") st = Strength::exact;
        else if (o.strength == "weakly-exact") st = Strength::weakly_exact;
        else if (o.strength == "faithful") st = Strength::faithful;
        else if (o.strength == "weakly-faithful") st = Strength::weakly_faithful;
        else throw Error("unknown strength '" + o.strength + "'");
        reports.push_back(explore_claim(need_semantics(o.source), need_semantics(o.target),
                                        need_route(o.tr), st, cfg));
    } else {
        reports = run_claims(cfg);
    }

    bool any_failure = false;
    for (const CheckReport& r : reports) {
        any_failure = any_failure || !r.pass();
        if (o.json) {
            out << to_json_line(r) << "\n";
        } else {
            std::ostringstream line;
            line << (r.pass() ? "PASS" : "FAIL") << " " << r.claim << ": instances=" << r.instances
                 << " failures=" << r.failure_count;
            out << line.str() << "\n";
            for (const Failure& f : r.failures)
                out << "  failing instance (" << f.detail << "):\n" << f.apx;
        }
    }
    return any_failure ? 1 : 0;
}

struct GenOpts {
    std::string format = "apx", out_file, dot_file;
    int n = 0;
    double p = 0.0;
    uint64_t seed = 0;
};

int cmd_gen(const GenOpts& o, std::ostream& out) {
    AF f = random_af(o.n, o.p, o.seed);
    std::string text = dump_af(f, o.format);
    if (o.out_file.empty())
        out << text;
    else
        write_file(o.out_file, text);
    if (!o.dot_file.empty())
        write_file(o.dot_file, to_dot(f));
    return 0;
}

struct ReduceOpts {
    std::string kind, file, query, out_file, note_file;
};

int cmd_reduce(const ReduceOpts& o, std::ostream& out, std::ostream& err) {
    nlohmann::json note;
    AF result = [&] {
        if (o.kind == "horn") {
            if (o.query.empty())
                throw Error("reduce horn needs --query");
            HornTheory t = parse_horn(read_file(o.file));
            AF f = horn_to_af(t, o.query);
            auto model = horn_minimal_model(t);
            bool in_model =
                std::find(model.begin(), model.end(), o.query) != model.end();
            Extension grd = grounded(f);
            bool t_in = grd.contains(ArgumentId::special_t());
            std::vector<ArgumentId> expected = {ArgumentId::special_t()};
            for (size_t i = 0; i < t.rules.size(); ++i)
                expected.push_back(ArgumentId::rule_argument(static_cast<int>(i) + 1));
            bool grd_is_rules = grd == Extension(expected);
            note["reduction"] = "horn";
            note["query"] = o.query;
            note["query_in_minimal_model"] = in_model;
            note["t_in_grounded"] = t_in;
            note["grounded_is_rules_plus_t"] = grd_is_rules;
            note["equivalence"] = "query in minimal model <=> __t in grounded extension "
                                  "<=> grounded = rule arguments + __t";
            note["equivalence_holds"] = (in_model == t_in) && (t_in == grd_is_rules);
            return f;
        }
        if (o.kind == "cnf") {
            Cnf3 phi = parse_dimacs(read_file(o.file));
            AF f = cnf_to_af(phi);
            note["reduction"] = "cnf";
            note["vars"] = phi.num_vars;
            note["clauses"] = phi.clauses.size();
            note["equivalence"] = "satisfiable <=> {__s} is not a stage extension";
            if (phi.num_vars <= 20) {
                bool sat = brute_sat(phi);
                bool s_stage =
                    verify(f, SemanticsId::stg,
                           Extension(std::vector<ArgumentId>{ArgumentId::special_s()}));
                note["satisfiable"] = sat;
                note["s_is_stage_extension"] = s_stage;
                note["equivalence_holds"] = (sat == !s_stage);
            } else {
                note["satisfiable"] = nullptr;
                note["s_is_stage_extension"] = nullptr;
                note["equivalence_holds"] = nullptr;
            }
            return f;
        }
        throw Error("reduce expects 'horn' or 'cnf'");
    }();

    std::string text = serialize_apx(result);
    if (o.out_file.empty())
        out << text;
    else
        write_file(o.out_file, text);
    if (o.note_file.empty())
        err << note.dump() << "\n";
    else
        write_file(o.note_file, note.dump(2) + "\n");
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"abstract argumentation frameworks: semantics, translations, checks"};
    app.require_subcommand(1);

    SolveOpts so;
    auto* solve = app.add_subcommand("solve", "compute extensions or decision problems");
    solve->add_option("file", so.file, "input framework")->required();
    solve->add_option("--semantics", so.semantics, "grd|adm|stb|com|prf|sem|stg")->required();
    solve->add_option("--format", so.format, "apx|tgf")->check(CLI::IsMember({"apx", "tgf"}));
    solve->add_option("--via-translation", so.via, "solve through a translation, e.g. tr3 or tr4.tr8");
    solve->add_option("--target", so.target, "target semantics for --via-translation");
    solve->add_option("--problem", so.problem, "enum|cred|skept|ver|exists|exists-ne")
        ->check(CLI::IsMember({"enum", "cred", "skept", "ver", "exists", "exists-ne"}));
    solve->add_option("--arg", so.arg, "argument for cred/skept");
    solve->add_option("--set", so.set, "comma-separated set for ver")
        ->expected(1)
        ->each([&so](const std::string&) { so.set_given = true; });
    solve->add_flag("--json", so.json, "JSON-lines output");
    solve->add_option("--dot", so.dot_file, "write DOT of the parsed framework");

    TranslateOpts to;
    auto* trans = app.add_subcommand("translate", "apply a translation");
    trans->add_option("file", to.file, "input framework")->required();
    trans->add_option("--tr", to.tr, "tr1..tr8 or a composition like tr4.tr8")->required();
    trans->add_option("--format", to.format, "apx|tgf")->check(CLI::IsMember({"apx", "tgf"}));
    trans->add_option("--out", to.out_file, "write the translated framework here");
    trans->add_option("--map", to.map_file, "write the JSON sidecar here");
    trans->add_option("--dot", to.dot_file, "write DOT of the translated framework");

    CheckOpts co;
    auto* check = app.add_subcommand("check", "verify translation claims and laws");
    check->add_option("--claim", co.claims, "claim name or prefix (default: all)");
    check->add_option("--n", co.n, "exhaustive sweep size (0 disables)");
    check->add_option("--samples", co.samples, "random samples per (size, p) cell");
    check->add_option("--sizes", co.sizes, "random sweep sizes")->delimiter(',');
    check->add_option("--ps", co.ps, "random sweep attack probabilities")->delimiter(',');
    check->add_option("--seed", co.seed, "sweep seed");
    check->add_option("--pairs", co.pairs, "sampled pairs for modular/monotone checks");
    check->add_flag("--json", co.json, "JSON-lines reports");
    check->add_flag("--serial", co.serial, "disable the parallel sweep");
    check->add_flag("--explore", co.explore, "probe a user-chosen claim");
    check->add_option("--source", co.source, "explore: source semantics");
    check->add_option("--target", co.target, "explore: target semantics");
    check->add_option("--tr", co.tr, "explore: translation route");
    check->add_option("--strength", co.strength,
                      "explore: exact|weakly-exact|faithful|weakly-faithful");

    GenOpts go;
    auto* gen = app.add_subcommand("gen", "generate a random framework");
    gen->add_option("--n", go.n, "number of arguments")->required();
    gen->add_option("--p", go.p, "attack probability")->required();
    gen->add_option("--seed", go.seed, "generator seed")->required();
    gen->add_option("--format", go.format, "apx|tgf")->check(CLI::IsMember({"apx", "tgf"}));
    gen->add_option("--out", go.out_file, "output file (default stdout)");
    gen->add_option("--dot", go.dot_file, "write DOT here");

    ReduceOpts ro;
    auto* reduce = app.add_subcommand("reduce", "build the Horn / 3-CNF gadget frameworks");
    reduce->add_option("kind", ro.kind, "horn|cnf")->required();
    reduce->add_option("file", ro.file, "input theory (text rules / DIMACS)")->required();
    reduce->add_option("--query", ro.query, "query atom (horn)");
    reduce->add_option("--out", ro.out_file, "write the framework here");
    reduce->add_option("--note", ro.note_file, "write the JSON equivalence note here");

    std::vector<const char*> argv;
    argv.push_back("afkit");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(solve))
            return cmd_solve(so, out);
        if (app.got_subcommand(trans))
            return cmd_translate(to, out);
        if (app.got_subcommand(check))
            return cmd_check(co, out);
        if (app.got_subcommand(gen))
            return cmd_gen(go, out);
        if (app.got_subcommand(reduce))
            return cmd_reduce(ro, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace aaf
