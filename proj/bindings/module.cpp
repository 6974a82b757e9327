#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lexont/acquisition.hpp"
#include "lexont/core.hpp"
#include "lexont/errors.hpp"
#include "lexont/hierarchy.hpp"
#include "lexont/metonymy.hpp"
#include "lexont/reification.hpp"
#include "lexont/similarity.hpp"
#include "lexont/store.hpp"

namespace py = pybind11;
using namespace lexont;

PYBIND11_MODULE(_core, m) {
    m.doc() = "symbolic lexical semantics: ontology induction, similarity, "
              "metonymy resolution, masked-completion acquisition";
    m.attr("__version__") = "0.1.0";

    py::register_exception<Error>(m, "LexontError");

    py::enum_<Dimension>(m, "Dimension")
        .value("HasProp", Dimension::HasProp)
        .value("InState", Dimension::InState)
        .value("AgentOf", Dimension::AgentOf)
        .value("ObjectOf", Dimension::ObjectOf)
        .value("PartOf", Dimension::PartOf)
        .value("HasValue", Dimension::HasValue)
        .value("ParticipantIn", Dimension::ParticipantIn);

    py::enum_<Relation>(m, "Relation")
        .value("Eq", Relation::Eq)
        .value("Part", Relation::Part)
        .value("Inst", Relation::Inst)
        .value("Inhere", Relation::Inhere)
        .value("Exemp", Relation::Exemp)
        .value("Dep", Relation::Dep)
        .value("IsA", Relation::IsA)
        .value("Precedes", Relation::Precedes)
        .value("HasParticipant", Relation::HasParticipant)
        .value("HasAgent", Relation::HasAgent)
        .value("Realizes", Relation::Realizes)
        .value("TypeOf", Relation::TypeOf)
        .value("HasProp", Relation::HasProp)
        .value("InState", Relation::InState)
        .value("ObjectOf", Relation::ObjectOf)
        .value("HasValue", Relation::HasValue);

    py::enum_<Source>(m, "Source")
        .value("Fixture", Source::Fixture)
        .value("Harvested", Source::Harvested)
        .value("Manual", Source::Manual);

    py::enum_<CopularPattern>(m, "CopularPattern")
        .value("CommonNounComplement", CopularPattern::CommonNounComplement)
        .value("ProperNameIdentity", CopularPattern::ProperNameIdentity)
        .value("TraitAdjective", CopularPattern::TraitAdjective)
        .value("StateAdjective", CopularPattern::StateAdjective)
        .value("ActiveProgressive", CopularPattern::ActiveProgressive)
        .value("PassiveParticiple", CopularPattern::PassiveParticiple)
        .value("MeasurePhrase", CopularPattern::MeasurePhrase)
        .value("EventParticipation", CopularPattern::EventParticipation);

    m.def("parse_dimension", &parse_dimension, py::arg("name"));
    m.def("canonical_relation", &canonical_relation, py::arg("alias"));
    m.def("dimension_relation", &dimension_relation, py::arg("dimension"));
    m.def("relation_dimension", &relation_dimension, py::arg("relation"));

    py::class_<ConceptSense>(m, "ConceptSense")
        .def(py::init<std::string_view, int>(), py::arg("lemma"), py::arg("sense") = 1)
        .def_static("parse", &ConceptSense::parse, py::arg("token"))
        .def_readonly("lemma", &ConceptSense::lemma)
        .def_readonly("sense", &ConceptSense::sense)
        .def("__str__", &ConceptSense::str)
        .def("__repr__", [](const ConceptSense& c) { return "ConceptSense(" + c.str() + ")"; })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__",
             [](const ConceptSense& c) { return py::hash(py::make_tuple(c.lemma, c.sense)); });

    py::class_<PropertyRef>(m, "PropertyRef")
        .def(py::init<std::string_view, int>(), py::arg("surface"), py::arg("arity") = 1)
        .def_readonly("surface", &PropertyRef::surface)
        .def_readonly("arity", &PropertyRef::arity);

    py::class_<Trope>(m, "Trope")
        .def_readonly("name", &Trope::name)
        .def_readonly("source", &Trope::source);

    py::class_<Assertion>(m, "Assertion")
        .def(py::init<ConceptSense, Dimension, std::string_view, double, Source>(),
             py::arg("subject"), py::arg("dimension"), py::arg("filler"),
             py::arg("weight") = 1.0, py::arg("source") = Source::Manual)
        .def_readonly("subject", &Assertion::subject)
        .def_readonly("dimension", &Assertion::dimension)
        .def_readonly("filler", &Assertion::filler)
        .def_readonly("weight", &Assertion::weight)
        .def_readonly("source", &Assertion::source);

    py::class_<RelationSignature>(m, "RelationSignature")
        .def(py::init<std::string_view, ConceptSense, ConceptSense, double>(),
             py::arg("relation"), py::arg("arg1"), py::arg("arg2"), py::arg("weight") = 1.0)
        .def_readonly("relation", &RelationSignature::relation)
        .def_readonly("arg1", &RelationSignature::arg1)
        .def_readonly("arg2", &RelationSignature::arg2)
        .def_readonly("weight", &RelationSignature::weight);

    py::class_<WeightedFiller>(m, "WeightedFiller")
        .def_readonly("weight", &WeightedFiller::weight)
        .def_readonly("filler", &WeightedFiller::filler);

    py::class_<Profile>(m, "Profile")
        .def("at", &Profile::at, py::arg("dimension"))
        .def("assertion_count", &Profile::assertion_count)
        .def("dimensions", &Profile::dimensions);

    py::class_<Snapshot>(m, "Snapshot")
        .def(py::init<>())
        .def(py::init<std::vector<Assertion>, std::vector<RelationSignature>, std::uint64_t>(),
             py::arg("assertions"), py::arg("signatures") = std::vector<RelationSignature>{},
             py::arg("version") = 0)
        .def("assertions", &Snapshot::assertions)
        .def("signatures", &Snapshot::signatures)
        .def("version", &Snapshot::version)
        .def("empty", &Snapshot::empty)
        .def("extension", &Snapshot::extension, py::arg("filler"),
             py::arg("dimension") = std::nullopt)
        .def("profile", &Snapshot::profile, py::arg("concept"))
        .def("senses", &Snapshot::senses)
        .def("signatures_for", &Snapshot::signatures_for, py::arg("relation"));

    py::class_<AssertionStore>(m, "AssertionStore")
        .def(py::init<>())
        .def("add_assertion", &AssertionStore::add_assertion, py::arg("assertion"))
        .def("add_signature", &AssertionStore::add_signature, py::arg("signature"))
        .def("snapshot", &AssertionStore::snapshot)
        .def("assertion_count", &AssertionStore::assertion_count)
        .def("signature_count", &AssertionStore::signature_count);

    m.def("load_jsonl", &load_jsonl, py::arg("path"));
    m.def("save_jsonl", &save_jsonl, py::arg("snapshot"), py::arg("path"));
    m.def("to_jsonl", &to_jsonl, py::arg("snapshot"));

    py::class_<Feature>(m, "Feature")
        .def_readonly("dimension", &Feature::dimension)
        .def_readonly("filler", &Feature::filler)
        .def("__str__", &Feature::str);

    py::class_<TypeNode>(m, "TypeNode")
        .def_readonly("extent", &TypeNode::extent)
        .def_readonly("intent", &TypeNode::intent)
        .def_readonly("label", &TypeNode::label)
        .def_readonly("parents", &TypeNode::parents)
        .def_readonly("children", &TypeNode::children);

    py::class_<TypeGraph>(m, "TypeGraph")
        .def("nodes", &TypeGraph::nodes)
        .def("empty", &TypeGraph::empty)
        .def("contains", &TypeGraph::contains, py::arg("sense"))
        .def("node_of", &TypeGraph::node_of, py::arg("sense"))
        .def("is_subtype", &TypeGraph::is_subtype, py::arg("a"), py::arg("b"))
        .def("least_common_ancestors", &TypeGraph::least_common_ancestors, py::arg("senses"))
        .def("reachable", &TypeGraph::reachable, py::arg("from_node"), py::arg("to_node"))
        .def("to_dot", &TypeGraph::to_dot);

    m.def("induce", &induce, py::arg("snapshot"), py::arg("theta") = 0.0);
    m.def("export_dot", &export_dot, py::arg("graph"));

    py::class_<TaggedCopular>(m, "TaggedCopular")
        .def(py::init<std::string_view, CopularPattern, std::string_view>(), py::arg("subject"),
             py::arg("pattern"), py::arg("complement"))
        .def_readonly("subject", &TaggedCopular::subject)
        .def_readonly("pattern", &TaggedCopular::pattern)
        .def_readonly("complement", &TaggedCopular::complement);

    py::class_<NominalizationLexicon>(m, "NominalizationLexicon")
        .def(py::init<>())
        .def_static("load", &NominalizationLexicon::load, py::arg("path"))
        .def("add", &NominalizationLexicon::add, py::arg("surface"), py::arg("trope"))
        .def("find", &NominalizationLexicon::find, py::arg("surface"))
        .def("size", &NominalizationLexicon::size);

    py::class_<Triple>(m, "Triple")
        .def_readonly("head", &Triple::head)
        .def_readonly("relation", &Triple::relation)
        .def_readonly("tail", &Triple::tail)
        .def_readonly("weight", &Triple::weight)
        .def("__str__", &Triple::str);

    m.def("classify_copular", &classify_copular, py::arg("tagged"));
    m.def("nominalize", &nominalize, py::arg("property"), py::arg("lexicon"));
    m.def("reify", &reify, py::arg("assertion"), py::arg("lexicon"));
    m.def("reify_all", &reify_all, py::arg("snapshot"), py::arg("lexicon"));

    m.def("feature_set", &feature_set, py::arg("c1"), py::arg("c2"), py::arg("dimension"),
          py::arg("snapshot"));
    py::class_<FeaturePair>(m, "FeaturePair")
        .def(py::init([](double w1, std::string p1, double w2, std::string p2) {
                 return FeaturePair{w1, std::move(p1), w2, std::move(p2)};
             }),
             py::arg("w1"), py::arg("p1"), py::arg("w2"), py::arg("p2"))
        .def_readonly("w1", &FeaturePair::w1)
        .def_readonly("p1", &FeaturePair::p1)
        .def_readonly("w2", &FeaturePair::w2)
        .def_readonly("p2", &FeaturePair::p2);
    py::class_<FeatureSet>(m, "FeatureSet")
        .def_readonly("dimension", &FeatureSet::dimension)
        .def_readonly("pairs", &FeatureSet::pairs);
    m.def("f_similarity", &f_similarity, py::arg("pair"));
    m.def("d_similarity", &d_similarity, py::arg("c1"), py::arg("c2"), py::arg("dimension"),
          py::arg("snapshot"));
    m.def(
        "c_similarity",
        [](const ConceptSense& c1, const ConceptSense& c2, const std::vector<Dimension>& dims,
           const std::optional<std::map<Dimension, double>>& weights, const Snapshot& s) {
            return c_similarity(c1, c2, dims, weights, s);
        },
        py::arg("c1"), py::arg("c2"), py::arg("dims"), py::arg("dim_weights"), py::arg("snapshot"));
    m.def(
        "c_similarity",
        [](const ConceptSense& c1, const ConceptSense& c2, const std::vector<Dimension>& dims,
           const Snapshot& s) { return c_similarity(c1, c2, dims, s); },
        py::arg("c1"), py::arg("c2"), py::arg("dims"), py::arg("snapshot"));

    py::class_<Application>(m, "Application")
        .def(py::init<std::string_view, ConceptSense, ConceptSense>(), py::arg("relation"),
             py::arg("arg1"), py::arg("arg2"))
        .def_static("parse", &Application::parse, py::arg("text"))
        .def_readonly("relation", &Application::relation)
        .def_readonly("arg1", &Application::arg1)
        .def_readonly("arg2", &Application::arg2)
        .def("__str__", &Application::str)
        .def(py::self == py::self);

    py::class_<TypecheckResult>(m, "TypecheckResult")
        .def_readonly("well_typed", &TypecheckResult::well_typed)
        .def_readonly("mismatches", &TypecheckResult::mismatches)
        .def_readonly("signature", &TypecheckResult::signature);

    py::class_<CoercionStep>(m, "CoercionStep")
        .def_readonly("position", &CoercionStep::position)
        .def_readonly("bridge", &CoercionStep::bridge);

    py::class_<CoercedReading>(m, "CoercedReading")
        .def_readonly("steps", &CoercedReading::steps)
        .def_readonly("rewritten", &CoercedReading::rewritten);

    m.def("unify_arg", &unify_arg, py::arg("c"), py::arg("sig_type"), py::arg("graph"));
    m.def("typecheck", &typecheck, py::arg("application"), py::arg("snapshot"), py::arg("graph"));
    m.def("salient_relation", &salient_relation, py::arg("t_expected"), py::arg("t_actual"),
          py::arg("snapshot"), py::arg("graph"));
    m.def("resolve_metonymy", &resolve_metonymy, py::arg("application"), py::arg("snapshot"),
          py::arg("graph"));

    py::class_<MaskTemplate>(m, "MaskTemplate")
        .def(py::init<Dimension, std::string_view, int>(), py::arg("dimension"), py::arg("text"),
             py::arg("count") = 25)
        .def_readonly("dimension", &MaskTemplate::dimension)
        .def_readonly("text", &MaskTemplate::text)
        .def_readonly("count", &MaskTemplate::count);

    py::class_<RankedList>(m, "RankedList")
        .def_readonly("fillers", &RankedList::fillers)
        .def_readonly("requested", &RankedList::requested);

    py::class_<CompletionProvider>(m, "CompletionProvider")
        .def("complete", &CompletionProvider::complete, py::arg("prompt"), py::arg("max_items"))
        .def("name", &CompletionProvider::name);

    py::class_<FixtureProvider, CompletionProvider>(m, "FixtureProvider")
        .def(py::init<std::filesystem::path>(), py::arg("directory"))
        .def_static("key_for", &FixtureProvider::key_for, py::arg("prompt"))
        .def_static("write", &FixtureProvider::write, py::arg("directory"), py::arg("prompt"),
                    py::arg("text"));

    py::class_<HarvestIssue>(m, "HarvestIssue")
        .def_readonly("subject", &HarvestIssue::subject)
        .def_readonly("dimension", &HarvestIssue::dimension)
        .def_readonly("detail", &HarvestIssue::detail);

    py::class_<HarvestReport>(m, "HarvestReport")
        .def_readonly("assertions", &HarvestReport::assertions)
        .def_readonly("issues", &HarvestReport::issues);

    m.def("build_mask_prompt", &build_mask_prompt, py::arg("concept"), py::arg("template"));
    m.def("parse_completion_list", &parse_completion_list, py::arg("raw"), py::arg("requested"));
    m.def("rank_to_weight", &rank_to_weight, py::arg("rank"), py::arg("n"));
    m.def("harvest", &harvest, py::arg("provider"), py::arg("concepts"), py::arg("templates"));
    m.def("load_templates", &load_templates, py::arg("path"));
    m.def("load_concepts", &load_concepts, py::arg("path"));
}
