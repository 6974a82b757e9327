#pragma once

#include "lexont/core.hpp"
#include "lexont/store.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

namespace lexont {

// A masked probe sentence for one dimension. The text carries exactly one
// [MASK] and one {CONCEPT}; count is how many ranked fillers to request.
struct MaskTemplate {
    Dimension dimension;
    std::string text;
    int count = 25;

    MaskTemplate(Dimension dim, std::string_view text_value, int count_value);
};

std::vector<MaskTemplate> load_templates(const std::filesystem::path& path);

struct RankedList {
    std::vector<std::string> fillers; // normalized, distinct, rank order
    int requested = 0;
};

// Prompt sent to the provider: a fixed instruction header plus the template
// sentence with {CONCEPT} substituted. [MASK] stays literal.
std::string build_mask_prompt(const ConceptSense& c, const MaskTemplate& t);

// Splits raw completion text into ranked fillers: rank numerals and edge
// punctuation stripped, lowercased, deduplicated keeping first occurrence,
// truncated to `requested`. Throws EmptyCompletion when nothing parses.
RankedList parse_completion_list(const std::string& raw, int requested);

// Linear rank decay: (n - rank + 1) / n. Rank 1 maps to 1.0.
double rank_to_weight(int rank, int n);

// Where ranked completions come from. Implementations must be safe to call
// from multiple threads.
class CompletionProvider {
public:
    virtual ~CompletionProvider() = default;
    virtual std::string complete(const std::string& prompt, int max_items) = 0;
    virtual std::string name() const = 0;
};

// Remote JSON service: POST {"prompt", "max_items"}, response {"text"}.
// Three attempts, then ProviderError. Plain http endpoints only.
class HttpProvider : public CompletionProvider {
public:
    HttpProvider(std::string endpoint, std::string api_key);

    std::string complete(const std::string& prompt, int max_items) override;
    std::string name() const override { return "http:" + endpoint_; }

private:
    std::string endpoint_;
    std::string api_key_;
};

// Canned responses on disk, one file per prompt, named by the prompt's
// FNV-1a-64 hash. Keeps every harvesting path runnable with no network.
class FixtureProvider : public CompletionProvider {
public:
    explicit FixtureProvider(std::filesystem::path directory);

    std::string complete(const std::string& prompt, int max_items) override;
    std::string name() const override { return "fixtures:" + directory_.string(); }

    static std::string key_for(const std::string& prompt); // 16 hex chars
    static std::filesystem::path write(const std::filesystem::path& directory,
                                       const std::string& prompt, const std::string& text);

private:
    std::filesystem::path directory_;
};

std::uint64_t fnv1a64(std::string_view text);

// COMPLETION_FIXTURES (non-empty) forces fixture mode; otherwise
// COMPLETION_ENDPOINT/COMPLETION_API_KEY select the remote client. Neither
// set is a ProviderError.
std::unique_ptr<CompletionProvider> make_provider_from_env();

struct HarvestIssue {
    ConceptSense subject;
    Dimension dimension;
    std::string detail; // includes the failing error code
};

// Partial results always survive: failed (concept, template) pairs land in
// issues, successful ones in assertions.
struct HarvestReport {
    std::vector<Assertion> assertions; // sorted by identity key
    std::vector<HarvestIssue> issues;
};

// One provider call per (concept, template), weights by rank over the
// parsed list's length, mean-aggregated per (concept, dimension, filler),
// source = harvested.
HarvestReport harvest(CompletionProvider& provider, const std::vector<ConceptSense>& concepts,
                      const std::vector<MaskTemplate>& templates);

// One sense token per line; lines starting with # are comments.
std::vector<ConceptSense> load_concepts(const std::filesystem::path& path);

} // namespace lexont
