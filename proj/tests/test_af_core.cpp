#include "doctest.h"

#include "aaf/af.hpp"
#include "aaf/errors.hpp"
#include "aaf/generate.hpp"
#include "aaf/io.hpp"

#include "test_util.hpp"

using namespace aaf;
using namespace testutil;

TEST_CASE("make_af validates its inputs") {
    AF single = make_af({id("a")}, {});
    CHECK(single.arg_count() == 1);
    CHECK(single.attack_count() == 0);

    AF ex1 = example1();
    CHECK(ex1.arg_count() == 5);
    CHECK(ex1.attack_count() == 6);
    CHECK(ex1.has_attack(id("d"), id("e")));
    CHECK_FALSE(ex1.has_attack(id("e"), id("d")));

    CHECK_THROWS_AS(make_af({}, {}), EmptyArguments);
    CHECK_THROWS_AS(make_af({id("a")}, {{id("a"), id("b")}}), DanglingAttack);
    CHECK_THROWS_AS(make_af({id("b")}, {{id("a"), id("b")}}), DanglingAttack);
}

TEST_CASE("argument names reject the reserved encoding") {
    CHECK_THROWS_AS(ArgumentId::plain(""), BadParameter);
    CHECK_THROWS_AS(ArgumentId::plain("a b"), BadParameter);
    CHECK_THROWS_AS(ArgumentId::plain("a__p"), ReservedName);
    CHECK_THROWS_AS(ArgumentId::plain("__t"), ReservedName);
    CHECK(ArgumentId::plain("my_arg").text() == "my_arg");

    // decorations encode injectively and compose
    ArgumentId a = id("a");
    CHECK(ArgumentId::primed(a).text() == "a__p");
    CHECK(ArgumentId::barred(a).text() == "a__n");
    CHECK(ArgumentId::circled(a).text() == "a__o");
    CHECK(ArgumentId::bar_circled(a).text() == "a__no");
    CHECK(ArgumentId::layered(a, 2).text() == "a__L2");
    CHECK(ArgumentId::bar_circ_layered(a, 1).text() == "a__no__L1");
    CHECK(ArgumentId::attack_argument(a, id("b")).text() == "r__a__b");
    CHECK(ArgumentId::special_t().text() == "__t");
    CHECK(ArgumentId::primed(ArgumentId::bar_circ_layered(a, 1)).text() == "a__no__L1__p");
    CHECK(ArgumentId::primed(a) != ArgumentId::barred(a));
}

TEST_CASE("union and subframework form a join-semilattice") {
    AF f = af({"a"}, {});
    AF g = af({"b"}, {{"b", "b"}});
    AF u = union_of(f, g);
    CHECK(u == af({"a", "b"}, {{"b", "b"}}));

    AF ex1 = example1();
    CHECK(union_of(ex1, ex1) == ex1);

    CHECK(is_subframework(ex1, ex1));
    CHECK(is_subframework(af({"a"}, {}), af({"a", "b"}, {{"a", "b"}})));
    CHECK_FALSE(is_subframework(af({"a"}, {{"a", "a"}}), af({"a", "b"}, {{"a", "b"}})));

    SplitMix64 rng(42);
    for (int k = 0; k < 200; ++k) {
        AF x = random_af(1 + rng.below(5), 0.3, rng.next());
        AF y = random_af(1 + rng.below(5), 0.4, rng.next());
        AF xy = union_of(x, y);
        CHECK(union_of(y, x) == xy); // commutative
        CHECK(is_subframework(x, xy));
        CHECK(is_subframework(y, xy));
        // least among common superframeworks: anything containing both contains the union
        AF sup = union_of(xy, random_af(3, 0.2, rng.next()));
        CHECK(is_subframework(xy, sup));
    }
}

TEST_CASE("range") {
    AF ex1 = example1();
    CHECK(range(ex1, ext({"a", "d"})) == ext({"a", "b", "c", "d", "e"}));
    CHECK(range(ex1, ext({})) == ext({}));
    CHECK(range(af({"a"}, {{"a", "a"}}), ext({"a"})) == ext({"a"}));
    CHECK_THROWS_AS(range(ex1, ext({"z"})), NotInFramework);

    SplitMix64 rng(7);
    for (int k = 0; k < 100; ++k) {
        AF f = random_af(5, 0.3, rng.next());
        // range is monotone in its argument
        Extension small = ext({"x1"});
        Extension big = ext({"x1", "x3"});
        CHECK(range(f, small).is_subset_of(range(f, big)));
    }
}

TEST_CASE("defends and characteristic") {
    AF ex1 = example1();
    CHECK(defends(ex1, ext({}), id("a")));
    CHECK_FALSE(defends(ex1, ext({}), id("b")));
    CHECK(defends(ex1, ext({"d"}), id("d")));
    CHECK_THROWS_AS(defends(ex1, ext({}), id("z")), NotInFramework);

    CHECK(characteristic(ex1, ext({})) == ext({"a"}));
    CHECK(characteristic(af({"a"}, {{"a", "a"}}), ext({})) == ext({}));

    // iterating from the empty set reaches the fixpoint {a}
    Extension s = ext({});
    for (;;) {
        Extension next = characteristic(ex1, s);
        if (next == s)
            break;
        s = next;
    }
    CHECK(s == ext({"a"}));

    SplitMix64 rng(11);
    for (int k = 0; k < 100; ++k) {
        AF f = random_af(5, 0.35, rng.next());
        CHECK(characteristic(f, ext({"x2"}))
                  .is_subset_of(characteristic(f, ext({"x2", "x4"}))));
    }
}

TEST_CASE("apx parsing and serialization") {
    AF f = parse_apx("arg(a).\narg(b).\natt(a,b).");
    CHECK(f == af({"a", "b"}, {{"a", "b"}}));

    // whitespace-insensitive, comments allowed, declarations may follow uses
    AF g = parse_apx("# comment\n att( a , b ).\narg(a).\n\narg( b ).\n");
    CHECK(g == f);

    CHECK(serialize_apx(example1()) ==
          "arg(a).\narg(b).\narg(c).\narg(d).\narg(e).\n"
          "att(a,b).\natt(c,b).\natt(c,d).\natt(d,c).\natt(d,e).\natt(e,e).\n");

    CHECK_THROWS_AS(parse_apx("att(a,b)."), SyntaxError);
    CHECK_THROWS_AS(parse_apx("arg(a)"), SyntaxError);
    CHECK_THROWS_AS(parse_apx("arg(a).\nnonsense"), SyntaxError);
    CHECK_THROWS_AS(parse_apx(""), EmptyArguments);
    CHECK_THROWS_AS(parse_apx("arg(a__p)."), ReservedName);
    CHECK_THROWS_AS(parse_apx("arg(__t)."), ReservedName);
}

TEST_CASE("tgf parsing and serialization") {
    AF f = parse_tgf("a\nb\n#\na b\n");
    CHECK(f == af({"a", "b"}, {{"a", "b"}}));
    CHECK(serialize_tgf(f) == "a\nb\n#\na b\n");

    CHECK_THROWS_AS(parse_tgf("a\n#\na b\n"), SyntaxError);  // b undeclared
    CHECK_THROWS_AS(parse_tgf("a\n#\n#\n"), SyntaxError);    // duplicate separator
    CHECK_THROWS_AS(parse_tgf("a__n\n#\n"), ReservedName);
}

TEST_CASE("serialization round-trips on generated frameworks") {
    SplitMix64 rng(5);
    for (int k = 0; k < 200; ++k) {
        AF f = random_af(1 + rng.below(7), 0.3, rng.next());
        CHECK(parse_apx(serialize_apx(f)) == f);
        CHECK(parse_tgf(serialize_tgf(f)) == f);
    }
}

TEST_CASE("random_af") {
    CHECK(random_af(3, 0.0, 99).attack_count() == 0);
    CHECK(random_af(3, 1.0, 99).attack_count() == 9);
    CHECK(random_af(4, 0.3, 7) == random_af(4, 0.3, 7));
    CHECK(random_af(1, 0.5, 1).arg_count() == 1);
    CHECK_THROWS_AS(random_af(0, 0.5, 1), BadParameter);
    CHECK_THROWS_AS(random_af(3, 1.5, 1), BadParameter);
}

TEST_CASE("enumerate_all_afs") {
    CHECK(enumerate_all_afs(1).size() == 2);
    CHECK(enumerate_all_afs(2).size() == 16);
    auto all3 = enumerate_all_afs(3);
    CHECK(all3.size() == 512);
    // all distinct
    std::vector<AF> sorted = all3;
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j)
            if (sorted[i] == sorted[j])
                FAIL("duplicate framework in enumeration");
    CHECK_THROWS_AS(enumerate_all_afs(4), BadParameter);
    CHECK(enumerate_all_afs(4, true).size() == 65536);
    CHECK_THROWS_AS(enumerate_all_afs(5, true), BadParameter);
}
