#include "lexont/metonymy.hpp"

#include <algorithm>
#include <cctype>

namespace lexont {

namespace {

bool is_name_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '#';
}

// Strict specificity in the graph: x below y but not conversely.
bool more_specific(const ConceptSense& x, const ConceptSense& y, const TypeGraph& g) {
    return g.is_subtype(x, y) && !g.is_subtype(y, x);
}

// Salience order, totalized: weight, arg2 specificity, arg1 specificity,
// relation name, argument tuple.
bool more_salient(const RelationSignature& a, const RelationSignature& b, const TypeGraph& g) {
    if (a.weight != b.weight) return a.weight > b.weight;
    bool a2 = g.contains(a.arg2) && g.contains(b.arg2) && more_specific(a.arg2, b.arg2, g);
    bool b2 = g.contains(a.arg2) && g.contains(b.arg2) && more_specific(b.arg2, a.arg2, g);
    if (a2 != b2) return a2;
    bool a1 = g.contains(a.arg1) && g.contains(b.arg1) && more_specific(a.arg1, b.arg1, g);
    bool b1 = g.contains(a.arg1) && g.contains(b.arg1) && more_specific(b.arg1, a.arg1, g);
    if (a1 != b1) return a1;
    const std::string ka = relation_key(a.relation);
    const std::string kb = relation_key(b.relation);
    if (ka != kb) return ka < kb;
    if (a.arg1 != b.arg1) return a.arg1 < b.arg1;
    return a.arg2 < b.arg2;
}

std::vector<RelationSignature> salience_ordered(std::vector<RelationSignature> sigs,
                                                const TypeGraph& g) {
    // Candidates arrive canonically sorted; a challenger sweep keeps the
    // outcome independent of that starting order anyway.
    std::sort(sigs.begin(), sigs.end(), [&g](const RelationSignature& a, const RelationSignature& b) {
        return more_salient(a, b, g);
    });
    return sigs;
}

} // namespace

Application::Application(std::string_view relation_name, ConceptSense first, ConceptSense second)
    : relation(relation_name), arg1(std::move(first)), arg2(std::move(second)) {
    if (relation.empty()) {
        throw Error(ErrorCode::InvalidArgument, "application relation is empty");
    }
}

Application Application::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto take_name = [&](const char* what) {
        skip_ws();
        std::size_t begin = i;
        while (i < text.size() && is_name_char(text[i])) ++i;
        if (i == begin) {
            throw Error(ErrorCode::ParseError,
                        std::string("expected ") + what + " in application: " + std::string(text));
        }
        return std::string(text.substr(begin, i - begin));
    };
    auto expect = [&](char ch) {
        skip_ws();
        if (i >= text.size() || text[i] != ch) {
            throw Error(ErrorCode::ParseError, std::string("expected '") + ch +
                                                   "' in application: " + std::string(text));
        }
        ++i;
    };

    std::string name = take_name("relation name");
    expect('(');
    std::string first = take_name("first argument");
    expect(',');
    std::string second = take_name("second argument");
    expect(')');
    skip_ws();
    if (i != text.size()) {
        throw Error(ErrorCode::ParseError,
                    "trailing characters in application: " + std::string(text));
    }
    return Application(name, ConceptSense::parse(first), ConceptSense::parse(second));
}

std::string Application::str() const {
    return relation + "(" + arg1.str() + ", " + arg2.str() + ")";
}

bool unify_arg(const ConceptSense& c, const ConceptSense& sig_type, const TypeGraph& g) {
    return g.is_subtype(c, sig_type);
}

TypecheckResult typecheck(const Application& app, const Snapshot& s, const TypeGraph& g) {
    std::vector<RelationSignature> sigs = s.signatures_for(app.relation);
    if (sigs.empty()) {
        throw Error(ErrorCode::UnknownRelationSignature,
                    "no signature for relation: " + app.relation);
    }
    sigs = salience_ordered(std::move(sigs), g);
    for (const auto& sig : sigs) {
        if (g.contains(sig.arg1) && g.contains(sig.arg2) && unify_arg(app.arg1, sig.arg1, g) &&
            unify_arg(app.arg2, sig.arg2, g)) {
            return TypecheckResult{true, {}, sig};
        }
    }
    const RelationSignature& top = sigs.front();
    TypecheckResult result{false, {}, top};
    if (!g.contains(top.arg1) || !unify_arg(app.arg1, top.arg1, g)) result.mismatches.push_back(1);
    if (!g.contains(top.arg2) || !unify_arg(app.arg2, top.arg2, g)) result.mismatches.push_back(2);
    return result;
}

RelationSignature salient_relation(const ConceptSense& t_expected, const ConceptSense& t_actual,
                                   const Snapshot& s, const TypeGraph& g) {
    std::optional<RelationSignature> best;
    for (const auto& sig : s.signatures()) {
        // Signatures whose slot types the graph has never seen cannot take
        // part in unification.
        if (!g.contains(sig.arg1) || !g.contains(sig.arg2)) continue;
        if (!g.is_subtype(t_expected, sig.arg1)) continue;
        if (!g.is_subtype(t_actual, sig.arg2)) continue;
        if (!best || more_salient(sig, *best, g)) best = sig;
    }
    if (!best) {
        throw Error(ErrorCode::NoBridgeRelation, "no relation bridges " + t_expected.str() +
                                                     " and " + t_actual.str());
    }
    return *best;
}

ResolveResult resolve_metonymy(const Application& app, const Snapshot& s, const TypeGraph& g) {
    const TypecheckResult tc = typecheck(app, s, g);
    if (tc.well_typed) return app;

    CoercedReading reading{{}, app};
    const bool both = tc.mismatches.size() == 2;
    for (int position : tc.mismatches) {
        const ConceptSense& expected = position == 1 ? tc.signature.arg1 : tc.signature.arg2;
        const ConceptSense& actual = position == 1 ? app.arg1 : app.arg2;
        RelationSignature bridge_sig = [&] {
            try {
                return salient_relation(expected, actual, s, g);
            } catch (const Error& e) {
                if (both && e.code() == ErrorCode::NoBridgeRelation) {
                    throw Error(ErrorCode::UnresolvableApplication,
                                "cannot resolve " + app.str() + ": " + e.what());
                }
                throw;
            }
        }();
        reading.steps.push_back(
            {position, Application(bridge_sig.relation, expected, actual)});
        (position == 1 ? reading.rewritten.arg1 : reading.rewritten.arg2) = expected;
    }

    const TypecheckResult check = typecheck(reading.rewritten, s, g);
    if (!check.well_typed) {
        throw Error(ErrorCode::UnresolvableApplication,
                    "rewritten application fails its signature: " + reading.rewritten.str());
    }
    return reading;
}

} // namespace lexont
