#include "doctest.h"

#include "lexont/metonymy.hpp"
#include "support.hpp"

using namespace lexont;

namespace {

ConceptSense cs(const std::string& lemma) { return ConceptSense(lemma, 1); }

struct OmeletWorld {
    Snapshot snap = testsupport::load_fixture("omelet.jsonl");
    TypeGraph graph = induce(snap);
};

// Four senses with nothing in common plus an outer relation and one bridge
// per slot type. Exercises double coercion without the fixture's hierarchy.
struct DisjointWorld {
    Snapshot snap;
    TypeGraph graph;

    explicit DisjointWorld(bool with_second_bridge) {
        AssertionStore store;
        store.add_assertion(Assertion(cs("p"), Dimension::HasProp, "fp", 1.0));
        store.add_assertion(Assertion(cs("q"), Dimension::HasProp, "fq", 1.0));
        store.add_assertion(Assertion(cs("a"), Dimension::HasProp, "fa", 1.0));
        store.add_assertion(Assertion(cs("b"), Dimension::HasProp, "fb", 1.0));
        store.add_signature(RelationSignature("REL", cs("p"), cs("q"), 1.0));
        store.add_signature(RelationSignature("BRIDGE1", cs("p"), cs("a"), 0.5));
        if (with_second_bridge) {
            store.add_signature(RelationSignature("BRIDGE2", cs("q"), cs("b"), 0.5));
        }
        snap = store.snapshot();
        graph = induce(snap);
    }
};

} // namespace

TEST_CASE("application parsing accepts sense tokens and stray spaces") {
    const Application a = Application::parse("WANT(omelet#1,beer#1)");
    CHECK(a.relation == "WANT");
    CHECK(a.arg1 == cs("omelet"));
    CHECK(a.arg2 == cs("beer"));
    CHECK(a.str() == "WANT(omelet#1, beer#1)");

    const Application b = Application::parse("  WANT ( omelet#1 , beer#2 )  ");
    CHECK(b.arg2 == ConceptSense("beer", 2));
    CHECK(Application::parse("want(omelet,beer)").arg1.sense == 1); // sense defaults

    for (const char* bad : {"", "WANT", "WANT(", "WANT(a)", "WANT(a,)", "WANT(a,b",
                            "(a,b)", "WANT(a,b))", "WANT(a,b) x", "WANT(a b,c)"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Application::parse(bad), Error);
    }
    CHECK_THROWS_AS(Application::parse("WANT(a#0,b)"), Error); // bad sense index
}

TEST_CASE("unify_arg is subtype unification") {
    OmeletWorld w;
    CHECK(unify_arg(cs("beer"), cs("beverage"), w.graph));
    CHECK(unify_arg(cs("beer"), cs("entity"), w.graph));
    CHECK(unify_arg(cs("beer"), cs("beer"), w.graph));
    CHECK_FALSE(unify_arg(cs("beverage"), cs("beer"), w.graph));
    CHECK_FALSE(unify_arg(cs("omelet"), cs("person"), w.graph));
    CHECK_FALSE(unify_arg(cs("granite"), cs("entity"), w.graph)); // isolated node
}

TEST_CASE("typecheck reports mismatched positions against the salient signature") {
    OmeletWorld w;

    const TypecheckResult ok = typecheck(Application::parse("WANT(person#1,beer#1)"), w.snap, w.graph);
    CHECK(ok.well_typed);
    CHECK(ok.mismatches.empty());
    CHECK(ok.signature.relation == "WANT");

    const TypecheckResult arg1 = typecheck(Application::parse("WANT(omelet#1,beer#1)"), w.snap, w.graph);
    CHECK_FALSE(arg1.well_typed);
    CHECK(arg1.mismatches == std::vector<int>{1});
    CHECK(arg1.signature.arg1 == cs("person"));

    const TypecheckResult arg2 = typecheck(Application::parse("EAT(person#1,beer#1)"), w.snap, w.graph);
    CHECK(arg2.mismatches == std::vector<int>{2});

    const TypecheckResult both = typecheck(Application::parse("EAT(granite#1,granite#1)"), w.snap, w.graph);
    CHECK(both.mismatches == std::vector<int>{1, 2});

    // Relation lookup ignores case.
    CHECK(typecheck(Application::parse("want(person#1,beer#1)"), w.snap, w.graph).well_typed);

    try {
        typecheck(Application::parse("FOO(person#1,beer#1)"), w.snap, w.graph);
        FAIL("expected UnknownRelationSignature");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownRelationSignature);
    }
}

TEST_CASE("typecheck accepts any signature, not only the most salient") {
    AssertionStore store;
    store.add_assertion(Assertion(cs("entity"), Dimension::HasProp, "old", 1.0));
    store.add_assertion(Assertion(cs("beer"), Dimension::HasProp, "old", 1.0));
    store.add_assertion(Assertion(cs("beer"), Dimension::HasProp, "drinkable", 1.0));
    store.add_assertion(Assertion(cs("person"), Dimension::HasProp, "old", 1.0));
    store.add_assertion(Assertion(cs("person"), Dimension::HasProp, "articulate", 1.0));
    store.add_assertion(Assertion(cs("food"), Dimension::HasProp, "old", 1.0));
    store.add_assertion(Assertion(cs("food"), Dimension::HasProp, "edible", 1.0));
    store.add_signature(RelationSignature("REL", cs("person"), cs("food"), 0.9));
    store.add_signature(RelationSignature("REL", cs("person"), cs("beer"), 0.5));
    const Snapshot snap = store.snapshot();
    const TypeGraph graph = induce(snap);

    // Fails the salient signature but fits the lighter one.
    const TypecheckResult ok = typecheck(Application::parse("REL(person#1,beer#1)"), snap, graph);
    CHECK(ok.well_typed);
    CHECK(ok.signature.weight == 0.5);

    // Fails both: the verdict cites the heaviest signature.
    const TypecheckResult bad = typecheck(Application::parse("REL(person#1,entity#1)"), snap, graph);
    CHECK_FALSE(bad.well_typed);
    CHECK(bad.mismatches == std::vector<int>{2});
    CHECK(bad.signature.weight == 0.9);
}

TEST_CASE("salient_relation prefers weight, then specific arguments, then name") {
    OmeletWorld w;
    // EAT at 0.9 beats WANT at 0.8; both fit (person, omelet).
    const RelationSignature eat = salient_relation(cs("person"), cs("omelet"), w.snap, w.graph);
    CHECK(eat.relation == "EAT");
    CHECK(eat.weight == 0.9);

    // Only WANT admits beverages.
    CHECK(salient_relation(cs("person"), cs("beverage"), w.snap, w.graph).relation == "WANT");

    try {
        salient_relation(cs("person"), cs("granite"), w.snap, w.graph);
        FAIL("expected NoBridgeRelation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoBridgeRelation);
    }

    AssertionStore store;
    store.add_assertion(Assertion(cs("entity"), Dimension::HasProp, "old", 1.0));
    store.add_assertion(Assertion(cs("person"), Dimension::HasProp, "old", 1.0));
    store.add_assertion(Assertion(cs("person"), Dimension::HasProp, "articulate", 1.0));
    store.add_assertion(Assertion(cs("food"), Dimension::HasProp, "old", 1.0));
    store.add_assertion(Assertion(cs("food"), Dimension::HasProp, "edible", 1.0));
    store.add_assertion(Assertion(cs("omelet"), Dimension::HasProp, "old", 1.0));
    store.add_assertion(Assertion(cs("omelet"), Dimension::HasProp, "edible", 1.0));
    store.add_assertion(Assertion(cs("omelet"), Dimension::HasProp, "folded", 1.0));

    SUBCASE("equal weights: the more specific second argument wins") {
        store.add_signature(RelationSignature("GIVE", cs("person"), cs("entity"), 0.5));
        store.add_signature(RelationSignature("FEED", cs("person"), cs("food"), 0.5));
        const Snapshot snap = store.snapshot();
        const TypeGraph graph = induce(snap);
        CHECK(salient_relation(cs("person"), cs("omelet"), snap, graph).relation == "FEED");
    }
    SUBCASE("then the more specific first argument") {
        store.add_signature(RelationSignature("FEED", cs("entity"), cs("food"), 0.5));
        store.add_signature(RelationSignature("HAND", cs("person"), cs("food"), 0.5));
        const Snapshot snap = store.snapshot();
        const TypeGraph graph = induce(snap);
        CHECK(salient_relation(cs("person"), cs("omelet"), snap, graph).relation == "HAND");
    }
    SUBCASE("then the relation name") {
        store.add_signature(RelationSignature("BEG", cs("person"), cs("food"), 0.5));
        store.add_signature(RelationSignature("ASK", cs("person"), cs("food"), 0.5));
        const Snapshot snap = store.snapshot();
        const TypeGraph graph = induce(snap);
        CHECK(salient_relation(cs("person"), cs("omelet"), snap, graph).relation == "ASK");
    }
}

TEST_CASE("resolving the omelet reading coerces through EAT") {
    OmeletWorld w;
    const ResolveResult r =
        resolve_metonymy(Application::parse("WANT(omelet#1,beer#1)"), w.snap, w.graph);
    REQUIRE(std::holds_alternative<CoercedReading>(r));
    const CoercedReading& reading = std::get<CoercedReading>(r);
    REQUIRE(reading.steps.size() == 1);
    CHECK(reading.steps[0].position == 1);
    CHECK(reading.steps[0].bridge.str() == "EAT(person#1, omelet#1)");
    CHECK(reading.rewritten.str() == "WANT(person#1, beer#1)");
    CHECK(typecheck(reading.rewritten, w.snap, w.graph).well_typed);
}

TEST_CASE("well-typed applications pass through untouched") {
    OmeletWorld w;
    const Application app = Application::parse("WANT(person#1,beer#1)");
    const ResolveResult r = resolve_metonymy(app, w.snap, w.graph);
    REQUIRE(std::holds_alternative<Application>(r));
    CHECK(std::get<Application>(r) == app);
}

TEST_CASE("a single unbridgeable mismatch keeps its own error code") {
    OmeletWorld w;
    try {
        resolve_metonymy(Application::parse("WANT(granite#1,beer#1)"), w.snap, w.graph);
        FAIL("expected NoBridgeRelation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoBridgeRelation);
    }
}

TEST_CASE("double mismatches coerce each position independently") {
    DisjointWorld w(true);
    const ResolveResult r = resolve_metonymy(Application::parse("REL(a#1,b#1)"), w.snap, w.graph);
    REQUIRE(std::holds_alternative<CoercedReading>(r));
    const CoercedReading& reading = std::get<CoercedReading>(r);
    REQUIRE(reading.steps.size() == 2);
    CHECK(reading.steps[0].position == 1);
    CHECK(reading.steps[0].bridge.str() == "BRIDGE1(p#1, a#1)");
    CHECK(reading.steps[1].position == 2);
    CHECK(reading.steps[1].bridge.str() == "BRIDGE2(q#1, b#1)");
    CHECK(reading.rewritten.str() == "REL(p#1, q#1)");
    CHECK(typecheck(reading.rewritten, w.snap, w.graph).well_typed);
}

TEST_CASE("a double mismatch without a bridge is unresolvable") {
    DisjointWorld w(false);
    try {
        resolve_metonymy(Application::parse("REL(a#1,b#1)"), w.snap, w.graph);
        FAIL("expected UnresolvableApplication");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnresolvableApplication);
    }
}
