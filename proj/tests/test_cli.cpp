#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "aaf/cli.hpp"
#include "aaf/io.hpp"

#include "test_util.hpp"

using namespace aaf;
using namespace testutil;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream f(p, std::ios::binary);
    f << content;
    return p;
}

std::string example1_apx() { return serialize_apx(example1()); }

} // namespace

TEST_CASE("solve enumerates in canonical order") {
    auto file = write_temp("afkit_ex1.apx", example1_apx());
    CliResult r = cli({"solve", file.string(), "--semantics", "prf"});
    CHECK(r.code == 0);
    CHECK(r.out == "[a,c]\n[a,d]\n");

    CliResult stb = cli({"solve", file.string(), "--semantics", "stb"});
    CHECK(stb.out == "[a,d]\n");

    CliResult adm = cli({"solve", file.string(), "--semantics", "adm"});
    CHECK(adm.out == "[]\n[a]\n[c]\n[d]\n[a,c]\n[a,d]\n");

    CliResult json = cli({"solve", file.string(), "--semantics", "prf", "--json"});
    CHECK(json.out == "[\"a\",\"c\"]\n[\"a\",\"d\"]\n");
}

TEST_CASE("solve through translations") {
    auto file = write_temp("afkit_ex1.apx", example1_apx());
    CliResult tr3 = cli({"solve", file.string(), "--semantics", "stb", "--via-translation", "tr3"});
    CHECK(tr3.code == 0);
    CHECK(tr3.out == "[a,d]\n");

    CliResult tr8 = cli({"solve", file.string(), "--semantics", "grd", "--via-translation", "tr8"});
    CHECK(tr8.out == "[a]\n");

    CliResult composite =
        cli({"solve", file.string(), "--semantics", "grd", "--via-translation", "tr4.tr8"});
    CHECK(composite.out == "[a]\n");

    CliResult explicit_target = cli({"solve", file.string(), "--semantics", "stb",
                                     "--via-translation", "tr3", "--target", "stg"});
    CHECK(explicit_target.out == "[a,d]\n");

    CliResult unknown = cli({"solve", file.string(), "--semantics", "grd", "--via-translation",
                             "tr3"});
    CHECK(unknown.code == 2); // no claim covers grd via tr3
}

TEST_CASE("decision problems") {
    auto file = write_temp("afkit_ex1.apx", example1_apx());
    CHECK(cli({"solve", file.string(), "--semantics", "prf", "--problem", "cred", "--arg", "c"})
              .out == "YES\n");
    CHECK(cli({"solve", file.string(), "--semantics", "prf", "--problem", "skept", "--arg", "c"})
              .out == "NO\n");
    CHECK(cli({"solve", file.string(), "--semantics", "stb", "--problem", "ver", "--set", "a,d"})
              .out == "YES\n");
    CHECK(cli({"solve", file.string(), "--semantics", "stb", "--problem", "ver", "--set", ""})
              .out == "NO\n");
    CHECK(cli({"solve", file.string(), "--semantics", "adm", "--problem", "exists-ne"}).out ==
          "YES\n");

    auto self = write_temp("afkit_self.apx", "arg(a).\natt(a,a).\n");
    CHECK(cli({"solve", self.string(), "--semantics", "stb", "--problem", "exists"}).out == "NO\n");
    CHECK(cli({"solve", self.string(), "--semantics", "stb", "--problem", "skept", "--arg", "a"})
              .out == "YES\n");

    // usage errors
    CHECK(cli({"solve", file.string(), "--semantics", "prf", "--problem", "cred"}).code == 2);
    CHECK(cli({"solve", file.string(), "--semantics", "prf", "--problem", "ver"}).code == 2);
    CHECK(cli({"solve", file.string(), "--semantics", "nope"}).code == 2);
    CHECK(cli({"solve", "/nonexistent/x.apx", "--semantics", "prf"}).code == 2);
}

TEST_CASE("gen is deterministic and solve reads tgf") {
    CliResult a = cli({"gen", "--n", "4", "--p", "0.3", "--seed", "7"});
    CliResult b = cli({"gen", "--n", "4", "--p", "0.3", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    CliResult t = cli({"gen", "--n", "3", "--p", "0.5", "--seed", "9", "--format", "tgf"});
    auto file = write_temp("afkit_gen.tgf", t.out);
    CliResult solved = cli({"solve", file.string(), "--semantics", "grd", "--format", "tgf"});
    CHECK(solved.code == 0);
}

TEST_CASE("translate emits the framework and the sidecar") {
    auto file = write_temp("afkit_ex1.apx", example1_apx());
    auto out_file = fs::temp_directory_path() / "afkit_tr7.apx";
    auto map_file = fs::temp_directory_path() / "afkit_tr7.json";
    CliResult r = cli({"translate", file.string(), "--tr", "tr7", "--out", out_file.string(),
                       "--map", map_file.string()});
    CHECK(r.code == 0);

    std::ifstream apx(out_file);
    std::string text((std::istreambuf_iterator<char>(apx)), std::istreambuf_iterator<char>());
    // translated frameworks use reserved names, so they are re-parsed only
    // with the decorations intact
    CHECK(text.find("arg(a__p).") != std::string::npos);
    CHECK(text.find("arg(r__a__b).") != std::string::npos);

    std::ifstream map(map_file);
    nlohmann::json j = nlohmann::json::parse(map);
    CHECK(j["translation"] == "tr7");
    CHECK(j["original_args"].size() == 5);
    CHECK(j["remainder"].empty());
    CHECK(j["arg_map"].size() == 31 - 5);
    bool saw_attack_arg = false;
    for (const auto& entry : j["arg_map"])
        if (entry["kind"] == "attack" && entry["arg"] == "r__a__b") {
            saw_attack_arg = true;
            CHECK(entry["source"] == "a");
            CHECK(entry["target"] == "b");
        }
    CHECK(saw_attack_arg);

    CliResult tr3map = cli({"translate", file.string(), "--tr", "tr3", "--out", out_file.string(),
                            "--map", map_file.string()});
    CHECK(tr3map.code == 0);
    std::ifstream map3(map_file);
    nlohmann::json j3 = nlohmann::json::parse(map3);
    CHECK(j3["remainder"].size() == 1);
    CHECK(j3["remainder"][0] == nlohmann::json::array({"__t"}));
}

TEST_CASE("check subcommand") {
    CliResult r = cli({"check", "--claim", "adm-com-via-tr1", "--n", "2", "--pairs", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS adm-com-via-tr1") != std::string::npos);

    CliResult json = cli({"check", "--claim", "adm-com-via-tr1", "--n", "2", "--pairs", "0",
                          "--json"});
    CHECK(json.code == 0);
    nlohmann::json line = nlohmann::json::parse(json.out.substr(0, json.out.find('\n')));
    CHECK(line["pass"] == true);
    CHECK(line["instances"] == 16);

    CliResult explore =
        cli({"check", "--explore", "--source", "stg", "--target", "sem", "--tr", "tr5",
             "--strength", "exact", "--n", "2"});
    CHECK(explore.code == 1); // the probe finds counterexamples
}

TEST_CASE("reduce horn and cnf") {
    auto horn = write_temp("afkit_t.horn", "-> z\n");
    auto note_file = fs::temp_directory_path() / "afkit_note.json";
    CliResult r = cli({"reduce", "horn", horn.string(), "--query", "z", "--note",
                       note_file.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("arg(__t).") != std::string::npos);
    CHECK(r.out.find("att(r__1,z).") != std::string::npos);
    std::ifstream nf(note_file);
    nlohmann::json note = nlohmann::json::parse(nf);
    CHECK(note["query_in_minimal_model"] == true);
    CHECK(note["t_in_grounded"] == true);
    CHECK(note["equivalence_holds"] == true);

    auto cnf = write_temp("afkit_phi.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    CliResult c = cli({"reduce", "cnf", cnf.string(), "--note", note_file.string()});
    CHECK(c.code == 0);
    CHECK(c.out.find("arg(__s).") != std::string::npos);
    std::ifstream nf2(note_file);
    nlohmann::json note2 = nlohmann::json::parse(nf2);
    CHECK(note2["satisfiable"] == false);
    CHECK(note2["s_is_stage_extension"] == true);
    CHECK(note2["equivalence_holds"] == true);

    CHECK(cli({"reduce", "horn", horn.string()}).code == 2); // missing --query
    CHECK(cli({"reduce", "bogus", horn.string()}).code == 2);
}

TEST_CASE("usage basics") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"solve"}).code == 2);
}

TEST_CASE("installed binary behaves like the library front end") {
    auto file = write_temp("afkit_ex1.apx", example1_apx());
    auto out_file = fs::temp_directory_path() / "afkit_bin_out.txt";
    std::string cmd = std::string(AFKIT_BIN) + " solve " + file.string() +
                      " --semantics stb --via-translation tr3 > " + out_file.string();
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream out(out_file);
    std::string text((std::istreambuf_iterator<char>(out)), std::istreambuf_iterator<char>());
    CHECK(text == "[a,d]\n");
}
