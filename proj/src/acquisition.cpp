#include "lexont/acquisition.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include <httplib.h>

namespace lexont {

namespace {

std::size_t count_occurrences(std::string_view text, std::string_view needle) {
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string_view::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

std::string read_file(const std::filesystem::path& path, ErrorCode missing_code) {
    std::ifstream in(path);
    if (!in) {
        throw Error(missing_code, "cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Drops "1.", "12)", "3:" style rank prefixes and "-"/"*" bullets.
std::string_view strip_rank_prefix(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t digits_begin = i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i > digits_begin) {
        while (i < line.size() && (line[i] == '.' || line[i] == ')' || line[i] == ':' ||
                                   line[i] == '-' || std::isspace(static_cast<unsigned char>(line[i])))) {
            ++i;
        }
        return line.substr(i);
    }
    i = digits_begin;
    if (i + 1 < line.size() && (line[i] == '-' || line[i] == '*') &&
        std::isspace(static_cast<unsigned char>(line[i + 1]))) {
        return line.substr(i + 2);
    }
    return line.substr(i);
}

std::string normalize_filler(std::string_view raw) {
    std::string_view body = strip_rank_prefix(raw);
    std::size_t end = body.size();
    while (end > 0) {
        char ch = body[end - 1];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '.' || ch == ',' ||
            ch == ';' || ch == ':' || ch == '!' || ch == '?') {
            --end;
        } else {
            break;
        }
    }
    std::string out(body.substr(0, end));
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

} // namespace

MaskTemplate::MaskTemplate(Dimension dim, std::string_view text_value, int count_value)
    : dimension(dim), text(text_value), count(count_value) {
    if (count < 1) {
        throw Error(ErrorCode::InvalidTemplate, "template count must be positive");
    }
    if (count_occurrences(text, "[MASK]") != 1) {
        throw Error(ErrorCode::InvalidTemplate,
                    "template needs exactly one [MASK]: " + text);
    }
    if (count_occurrences(text, "{CONCEPT}") != 1) {
        throw Error(ErrorCode::InvalidTemplate,
                    "template needs exactly one {CONCEPT}: " + text);
    }
}

std::vector<MaskTemplate> load_templates(const std::filesystem::path& path) {
    const std::string text = read_file(path, ErrorCode::IoError);
    std::vector<MaskTemplate> templates;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object()) {
            throw Error(ErrorCode::ParseError, where + ": invalid JSON template record");
        }
        if (!record.contains("dimension") || !record.contains("text")) {
            throw Error(ErrorCode::ParseError, where + ": template needs dimension and text");
        }
        try {
            templates.emplace_back(parse_dimension(record["dimension"].get<std::string>()),
                                   record["text"].get<std::string>(),
                                   record.value("count", 25));
        } catch (const Error& e) {
            throw Error(e.code(), where + ": " + e.what());
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::ParseError, where + ": " + e.what());
        }
    }
    return templates;
}

std::string build_mask_prompt(const ConceptSense& c, const MaskTemplate& t) {
    std::string sentence = t.text;
    const std::size_t pos = sentence.find("{CONCEPT}");
    sentence.replace(pos, 9, c.lemma);
    std::ostringstream out;
    out << "Provide exactly " << t.count
        << " plausible single-word replacements for the [MASK] in the following sentence. "
           "Answer with a numbered list, one replacement per line, ordered from most to "
           "least plausible.\n\n"
        << sentence << "\n";
    return out.str();
}

RankedList parse_completion_list(const std::string& raw, int requested) {
    if (requested < 1) {
        throw Error(ErrorCode::InvalidArgument, "requested count must be positive");
    }
    RankedList list;
    list.requested = requested;
    std::set<std::string> seen;
    std::istringstream in(raw);
    std::string line;
    while (std::getline(in, line)) {
        if (static_cast<int>(list.fillers.size()) >= requested) break;
        std::string filler = normalize_filler(line);
        if (filler.empty()) continue;
        if (seen.insert(filler).second) list.fillers.push_back(std::move(filler));
    }
    if (list.fillers.empty()) {
        throw Error(ErrorCode::EmptyCompletion, "completion text yielded no fillers");
    }
    return list;
}

double rank_to_weight(int rank, int n) {
    if (n < 1 || rank < 1 || rank > n) {
        throw Error(ErrorCode::RankOutOfRange, "rank " + std::to_string(rank) +
                                                   " outside 1.." + std::to_string(n));
    }
    return static_cast<double>(n - rank + 1) / static_cast<double>(n);
}

HttpProvider::HttpProvider(std::string endpoint, std::string api_key)
    : endpoint_(std::move(endpoint)), api_key_(std::move(api_key)) {
    if (endpoint_.rfind("http://", 0) != 0) {
        throw Error(ErrorCode::ProviderError,
                    "endpoint must be a plain http:// URL: " + endpoint_);
    }
}

std::string HttpProvider::complete(const std::string& prompt, int max_items) {
    const std::size_t authority = endpoint_.find("://") + 3;
    const std::size_t slash = endpoint_.find('/', authority);
    const std::string base =
        slash == std::string::npos ? endpoint_ : endpoint_.substr(0, slash);
    const std::string path = slash == std::string::npos ? "/" : endpoint_.substr(slash);

    nlohmann::json body = {{"prompt", prompt}, {"max_items", max_items}};
    const std::string payload = body.dump();

    std::string last_failure;
    for (int attempt = 1; attempt <= 3; ++attempt) {
        httplib::Client client(base);
        client.set_connection_timeout(5, 0);
        client.set_read_timeout(30, 0);
        httplib::Headers headers;
        if (!api_key_.empty()) {
            headers.emplace("Authorization", "Bearer " + api_key_);
        }
        auto res = client.Post(path, headers, payload, "application/json");
        if (!res) {
            last_failure = "transport error: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status < 200 || res->status >= 300) {
            last_failure = "status " + std::to_string(res->status);
            continue;
        }
        nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
        if (reply.is_discarded() || !reply.is_object() || !reply.contains("text") ||
            !reply["text"].is_string()) {
            throw Error(ErrorCode::ProviderError,
                        "malformed provider response (expected {\"text\": ...})");
        }
        return reply["text"].get<std::string>();
    }
    throw Error(ErrorCode::ProviderError,
                "3 attempts to " + endpoint_ + " failed; last: " + last_failure);
}

FixtureProvider::FixtureProvider(std::filesystem::path directory)
    : directory_(std::move(directory)) {
    if (!std::filesystem::is_directory(directory_)) {
        throw Error(ErrorCode::ProviderError,
                    "fixture directory missing: " + directory_.string());
    }
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string FixtureProvider::key_for(const std::string& prompt) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t hash = fnv1a64(prompt);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[hash & 0xF];
        hash >>= 4;
    }
    return out;
}

std::filesystem::path FixtureProvider::write(const std::filesystem::path& directory,
                                             const std::string& prompt,
                                             const std::string& text) {
    std::filesystem::create_directories(directory);
    const std::filesystem::path path = directory / (key_for(prompt) + ".txt");
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write fixture: " + path.string());
    }
    out << text;
    return path;
}

std::string FixtureProvider::complete(const std::string& prompt, int) {
    const std::filesystem::path path = directory_ / (key_for(prompt) + ".txt");
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ProviderError,
                    "no fixture for prompt (expected " + path.string() + ")");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::unique_ptr<CompletionProvider> make_provider_from_env() {
    const char* fixtures = std::getenv("COMPLETION_FIXTURES");
    if (fixtures && *fixtures) {
        return std::make_unique<FixtureProvider>(fixtures);
    }
    const char* endpoint = std::getenv("COMPLETION_ENDPOINT");
    if (endpoint && *endpoint) {
        const char* key = std::getenv("COMPLETION_API_KEY");
        return std::make_unique<HttpProvider>(endpoint, key ? key : "");
    }
    throw Error(ErrorCode::ProviderError,
                "set COMPLETION_FIXTURES or COMPLETION_ENDPOINT to choose a provider");
}

HarvestReport harvest(CompletionProvider& provider, const std::vector<ConceptSense>& concepts,
                      const std::vector<MaskTemplate>& templates) {
    struct Key {
        ConceptSense subject;
        Dimension dimension;
        std::string filler;
        auto operator<=>(const Key&) const = default;
    };
    struct Sum {
        double total = 0.0;
        int samples = 0;
    };

    HarvestReport report;
    std::map<Key, Sum> sums;
    for (const auto& subject : concepts) {
        for (const auto& tmpl : templates) {
            const std::string prompt = build_mask_prompt(subject, tmpl);
            try {
                const std::string raw = provider.complete(prompt, tmpl.count);
                const RankedList list = parse_completion_list(raw, tmpl.count);
                const int n = static_cast<int>(list.fillers.size());
                for (int rank = 1; rank <= n; ++rank) {
                    Key key{subject, tmpl.dimension, list.fillers[static_cast<std::size_t>(rank - 1)]};
                    Sum& sum = sums[key];
                    sum.total += rank_to_weight(rank, n);
                    sum.samples += 1;
                }
            } catch (const Error& e) {
                report.issues.push_back(
                    {subject, tmpl.dimension,
                     std::string(e.code_name()) + ": " + e.what()});
            }
        }
    }
    for (const auto& [key, sum] : sums) {
        report.assertions.emplace_back(key.subject, key.dimension, key.filler,
                                       sum.total / sum.samples, Source::Harvested);
    }
    return report;
}

std::vector<ConceptSense> load_concepts(const std::filesystem::path& path) {
    const std::string text = read_file(path, ErrorCode::IoError);
    std::vector<ConceptSense> concepts;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos || line[begin] == '#') continue;
        const std::size_t end = line.find_last_not_of(" \t");
        try {
            concepts.push_back(ConceptSense::parse(line.substr(begin, end - begin + 1)));
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError,
                        path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return concepts;
}

} // namespace lexont
