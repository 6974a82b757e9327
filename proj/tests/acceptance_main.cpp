// Acceptance gate: eight end-to-end criteria, one PASS/FAIL line each.
// Exit code is the number of failed criteria, so 0 means accepted.

#include "../tools/cli.hpp"
#include "lattice_oracle.hpp"
#include "lexont/acquisition.hpp"
#include "lexont/hierarchy.hpp"
#include "lexont/metonymy.hpp"
#include "lexont/similarity.hpp"
#include "lexont/store.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace lexont;

namespace {

std::filesystem::path data_dir() { return std::filesystem::path(LEXONT_DATA_DIR); }

struct Failure {
    std::string detail;
};

void require(bool condition, const std::string& detail) {
    if (!condition) throw Failure{detail};
}

template <typename T>
void require_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream out;
        out << what << ": got " << got << ", want " << want;
        throw Failure{out.str()};
    }
}

std::string run_capture(const std::vector<std::string>& args, int expect_code) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(args, out, err);
    if (code != expect_code) {
        std::ostringstream detail;
        detail << "exit " << code << " (want " << expect_code << ") from";
        for (const auto& a : args) detail << " " << a;
        detail << "; stderr: " << err.str();
        throw Failure{detail.str()};
    }
    return out.str();
}

// --- criterion bodies -----------------------------------------------------

// Worked weighted-profile arithmetic on the book/publication fixture.
void check_weighted_arithmetic() {
    const Snapshot snap = load_jsonl(data_dir() / "fixtures/book_publication.jsonl");
    const ConceptSense book("book", 1);
    const ConceptSense publication("publication", 3);

    const FeatureSet fs = feature_set(book, publication, Dimension::HasProp, snap);
    require(fs.pairs.size() == 2, "expected two matched fillers");
    const double f_controversy = f_similarity(fs.pairs[0]);
    const double f_popularity = f_similarity(fs.pairs[1]);
    require(std::abs(f_popularity - 0.97) <= 1e-9,
            "f(popularity) = " + std::to_string(f_popularity) + ", want 0.97");
    require(std::abs(f_controversy - 0.98) <= 1e-9,
            "f(controversy) = " + std::to_string(f_controversy) + ", want 0.98");

    const double d = d_similarity(book, publication, Dimension::HasProp, snap);
    require(std::abs(d - 0.975) <= 1e-9, "d = " + std::to_string(d) + ", want 0.975");
}

// Subsumption conclusions from the hand-closed base fixture.
void check_closure_subsumption() {
    const TypeGraph g = induce(load_jsonl(data_dir() / "fixtures/closure.jsonl"), 0.0);
    auto cs = [](const char* lemma) { return ConceptSense(lemma, 1); };

    const std::pair<const char*, const char*> positives[] = {
        {"car", "vehicle"}, {"car", "physical"}, {"physical", "entity"},
        {"instrument", "artifact"}};
    for (const auto& [a, b] : positives) {
        require(g.is_subtype(cs(a), cs(b)),
                std::string(a) + " should be a subtype of " + b);
    }
    const std::pair<const char*, const char*> negatives[] = {
        {"vehicle", "car"}, {"human", "artifact"}, {"entity", "physical"}};
    for (const auto& [a, b] : negatives) {
        require(!g.is_subtype(cs(a), cs(b)),
                std::string(a) + " should not be a subtype of " + b);
    }
}

// Harvested object-of evidence groups car/computer below a node that admits
// couch only higher up, via ASSEMBLE.
void check_harvested_grouping() {
    FixtureProvider provider(data_dir() / "completions");
    const HarvestReport report =
        harvest(provider, load_concepts(data_dir() / "concepts/artifacts.txt"),
                load_templates(data_dir() / "templates/objectof.jsonl"));
    require(report.issues.empty(), "harvest reported issues");

    AssertionStore store;
    const Snapshot base = load_jsonl(data_dir() / "fixtures/artifacts_base.jsonl");
    for (const auto& a : base.assertions()) store.add_assertion(a);
    for (const auto& a : report.assertions) store.add_assertion(a);
    const TypeGraph g = induce(store.snapshot(), 0.0);

    const ConceptSense car("car", 1), computer("computer", 1), couch("couch", 1);
    const auto pair_lca = g.least_common_ancestors({car, computer});
    require(pair_lca.size() == 1, "lca(car, computer) not unique");
    const auto& pair_extent = g.nodes()[pair_lca[0]].extent;
    require(std::find(pair_extent.begin(), pair_extent.end(), couch) == pair_extent.end(),
            "lca(car, computer) should exclude couch");

    const auto triple_lca = g.least_common_ancestors({car, computer, couch});
    require(triple_lca.size() == 1, "lca(car, computer, couch) not unique");
    require(triple_lca[0] != pair_lca[0] && g.reachable(pair_lca[0], triple_lca[0]),
            "triple lca should sit strictly above the pair lca");
    const auto& intent = g.nodes()[triple_lca[0]].intent;
    require(std::find(intent.begin(), intent.end(),
                      Feature{Dimension::ObjectOf, "assemble"}) != intent.end(),
            "triple lca should carry ObjectOf:assemble");
}

// Resolving the classic mismatched reading through the CLI surface.
void check_metonymy_resolution() {
    const std::string store = (data_dir() / "fixtures/omelet.jsonl").string();
    const std::string out =
        run_capture({"resolve", "--store", store, "WANT(omelet#1,beer#1)"}, 0);
    require_eq(out,
               std::string("coercion: EAT(person#1, omelet#1)\n"
                           "rewritten: WANT(person#1, beer#1)\n"),
               "resolve output");
}

// Random boolean contexts against the naive subset oracle.
void check_lattice_oracle() {
    std::mt19937 rng(7161);
    int compared = 0;
    for (int round = 0; round < 240; ++round) {
        const int senses = 1 + static_cast<int>(rng() % 8);
        const int props = 1 + static_cast<int>(rng() % 8);
        std::vector<oracle::Row> rows;
        AssertionStore store;
        for (int s = 0; s < senses; ++s) {
            for (int p = 0; p < props; ++p) {
                if (rng() % 5 >= 2) continue;
                const std::string lemma = "c" + std::to_string(s);
                const std::string filler = "p" + std::to_string(p);
                rows.emplace_back(lemma + "#1", "HasProp", filler);
                store.add_assertion(
                    Assertion(ConceptSense(lemma, 1), Dimension::HasProp, filler, 1.0));
            }
        }
        if (rows.empty()) continue;
        ++compared;

        const oracle::Graph expected = oracle::induce(rows);
        const TypeGraph got = induce(store.snapshot(), 0.0);
        require(got.nodes().size() == expected.nodes.size(),
                "node count mismatch in round " + std::to_string(round));
        std::set<std::pair<std::size_t, std::size_t>> got_edges;
        for (std::size_t n = 0; n < got.nodes().size(); ++n) {
            std::vector<std::string> tokens;
            for (const auto& c : got.nodes()[n].extent) tokens.push_back(c.str());
            require(tokens == expected.nodes[n],
                    "extent mismatch in round " + std::to_string(round));
            for (std::size_t p : got.nodes()[n].parents) got_edges.emplace(n, p);
        }
        require(got_edges == expected.edges, "edge mismatch in round " + std::to_string(round));
    }
    require(compared >= 200, "only " + std::to_string(compared) + " non-empty contexts");
}

// Randomized similarity invariants.
void check_similarity_properties() {
    std::mt19937 rng(90125);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    const Dimension dims[] = {Dimension::HasProp, Dimension::InState, Dimension::AgentOf};

    for (int round = 0; round < 1000; ++round) {
        AssertionStore store;
        const int senses = 2 + static_cast<int>(rng() % 4);
        for (int s = 0; s < senses; ++s) {
            for (Dimension d : dims) {
                for (int f = 0; f < 5; ++f) {
                    if (rng() % 2) continue;
                    store.add_assertion(Assertion(ConceptSense("s" + std::to_string(s), 1), d,
                                                  "f" + std::to_string(f), weight(rng)));
                }
            }
        }
        const Snapshot snap = store.snapshot();
        const ConceptSense a("s0", 1);
        const ConceptSense b("s1", 1);
        const std::vector<Dimension> all(dims, dims + 3);

        const double ab = c_similarity(a, b, all, snap);
        const double ba = c_similarity(b, a, all, snap);
        require(ab == ba, "symmetry violated in round " + std::to_string(round));
        require(ab >= 0.0 && ab <= 1.0, "range violated in round " + std::to_string(round));

        // Identity on every dimension where the sense has fillers.
        std::vector<Dimension> populated;
        const Profile profile = snap.profile(a);
        for (Dimension d : dims) {
            if (!profile.at(d).empty()) populated.push_back(d);
        }
        if (!populated.empty()) {
            require(c_similarity(a, a, populated, snap) == 1.0,
                    "identity violated in round " + std::to_string(round));
        }

        // Fillers present on only one side never move the score.
        const double before = d_similarity(a, b, Dimension::HasProp, snap);
        store.add_assertion(
            Assertion(a, Dimension::HasProp, "only_here_" + std::to_string(round), weight(rng)));
        const double after = d_similarity(a, b, Dimension::HasProp, store.snapshot());
        require(before == after, "matched-only violated in round " + std::to_string(round));
    }
}

// Byte-identical stdout across repeated CLI runs.
void check_cli_determinism() {
    const std::string closure = (data_dir() / "fixtures/closure.jsonl").string();
    const std::string book_store = (data_dir() / "fixtures/book_publication.jsonl").string();
    const std::vector<std::vector<std::string>> commands = {
        {"induce", "--store", closure, "--out", "dot"},
        {"induce", "--store", closure, "--out", "json"},
        {"export", "--store", closure, "--format", "dot"},
        {"sim", "--store", book_store, "book#1", "publication#3", "--dims", "HasProp", "--per-dim"},
        {"acquire", "--templates", (data_dir() / "templates/book.jsonl").string(),
         "--concepts", (data_dir() / "concepts/book.txt").string(), "--fixtures",
         (data_dir() / "completions").string()},
    };
    for (const auto& command : commands) {
        const std::string first = run_capture(command, 0);
        const std::string second = run_capture(command, 0);
        require(!first.empty(), "empty output from " + command[0]);
        require(first == second, "nondeterministic output from " + command[0]);
    }
}

// Full harvesting pipeline with the environment-selected offline provider.
void check_offline_completeness() {
    const char* fixtures = std::getenv("COMPLETION_FIXTURES");
    require(fixtures && *fixtures, "COMPLETION_FIXTURES is not set");
    auto provider = make_provider_from_env();
    require(provider->name().rfind("fixtures:", 0) == 0,
            "environment selected a non-fixture provider: " + provider->name());

    const HarvestReport book =
        harvest(*provider, load_concepts(data_dir() / "concepts/book.txt"),
                load_templates(data_dir() / "templates/book.jsonl"));
    require(book.issues.empty(), "book harvest reported issues");
    require_eq(book.assertions.size(), std::size_t{72}, "book harvest size");

    const HarvestReport artifacts =
        harvest(*provider, load_concepts(data_dir() / "concepts/artifacts.txt"),
                load_templates(data_dir() / "templates/objectof.jsonl"));
    require(artifacts.issues.empty(), "artifacts harvest reported issues");
    require_eq(artifacts.assertions.size(), std::size_t{75}, "artifacts harvest size");
}

struct Criterion {
    int id;
    const char* summary;
    double budget_seconds; // 0 = untimed
    std::function<void()> body;
};

} // namespace

int main() {
    // A bare run outside ctest still works offline: point the provider
    // environment at the shipped fixtures unless the caller already did.
    const char* fixtures = std::getenv("COMPLETION_FIXTURES");
    if (!fixtures || !*fixtures) {
        ::setenv("COMPLETION_FIXTURES", (data_dir() / "completions").c_str(), 1);
    }

    const Criterion criteria[] = {
        {1, "weighted feature arithmetic (book vs publication)", 1.0, check_weighted_arithmetic},
        {2, "subsumption from the closed base fixture", 1.0, check_closure_subsumption},
        {3, "harvested evidence regroups car/computer/couch", 1.0, check_harvested_grouping},
        {4, "metonymy coercion through the CLI", 1.0, check_metonymy_resolution},
        {5, "induction equals the brute-force oracle", 30.0, check_lattice_oracle},
        {6, "similarity invariants on randomized stores", 0.0, check_similarity_properties},
        {7, "byte-identical CLI reruns", 0.0, check_cli_determinism},
        {8, "offline fixture-mode harvesting", 0.0, check_offline_completeness},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            criterion.body();
        } catch (const Failure& f) {
            detail = f.detail;
        } catch (const Error& e) {
            detail = std::string(e.code_name()) + ": " + e.what();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (detail.empty() && criterion.budget_seconds > 0.0 &&
            elapsed > criterion.budget_seconds) {
            std::ostringstream over;
            over << "took " << elapsed << "s, budget " << criterion.budget_seconds << "s";
            detail = over.str();
        }
        if (detail.empty()) {
            std::printf("PASS  %d  %s  (%.3fs)\n", criterion.id, criterion.summary, elapsed);
        } else {
            std::printf("FAIL  %d  %s  (%.3fs): %s\n", criterion.id, criterion.summary, elapsed,
                        detail.c_str());
            ++failures;
        }
    }
    if (failures == 0) {
        std::printf("all 8 criteria passed\n");
    } else {
        std::printf("%d of 8 criteria failed\n", failures);
    }
    return failures;
}
