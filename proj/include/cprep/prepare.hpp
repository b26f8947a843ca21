#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cprep/document.hpp"

namespace cprep {

// --- URL / keyword filtering -----------------------------------------------

struct SiteLists {
    std::set<std::string> blacklist;  // domain patterns, suffix-matched
    std::set<std::string> whitelist;
    std::vector<std::string> keyword_blocklist;  // matched case-insensitively in text
    std::map<std::string, double> site_ratings;
    double rating_threshold = 0.5;
    double default_rating = 0.5;

    // Each path may be empty (that list stays empty). List files: one pattern
    // per line, '#' comments. Ratings file: domain<TAB>score.
    static SiteLists load(const std::string& blacklist_file, const std::string& whitelist_file,
                          const std::string& keywords_file, const std::string& ratings_file);
};

// Lowercased host of a URL, or "" when no domain can be extracted.
std::string domain_of(std::string_view url);

StageDecision filter_url(const Document& doc, const SiteLists& lists);

// --- Exact deduplication -----------------------------------------------------

struct ExactDedupStats {
    std::uint64_t url_dups = 0;
    std::uint64_t body_dups = 0;
};

// Keeps the first occurrence of each URL and of each normalized-body hash;
// order preserved. Body hash: FNV-1a over whitespace-normalized text.
StageOutput exact_dedup(std::vector<Document> docs, ExactDedupStats* stats = nullptr);

// --- Language identification -------------------------------------------------

// Character n-gram (n=1..4) rank profile; identification by out-of-place rank
// distance against the text's own profile.
struct LanguageProfile {
    std::string lang;
    std::vector<std::string> grams;                  // rank order, most frequent first
    std::unordered_map<std::string, int> rank_of;

    int depth() const { return static_cast<int>(grams.size()); }
};

LanguageProfile build_language_profile(std::string lang, std::string_view sample, int depth = 300);

// Profiles for "en" and "zh" built from embedded reference prose.
const std::vector<LanguageProfile>& builtin_profiles();

struct LangIdOptions {
    int profile_depth = 300;
    std::size_t min_chars = 20;       // shorter texts yield ("und", 0.0)
    double max_distance = 0.60;       // normalized rank distance above which we answer "und"
};

struct LangGuess {
    std::string lang = "und";
    double confidence = 0.0;
};

// Exposed for tests and threshold calibration: normalized out-of-place
// distance of text against one profile, in [0, 1].
double profile_distance(std::string_view text, const LanguageProfile& profile,
                        const LangIdOptions& opts = {});

LangGuess detect_language(std::string_view text, const std::vector<LanguageProfile>& profiles,
                          const LangIdOptions& opts = {});

// Replaces the built-in identifier when set (external classifier hook).
using LangClassifierHook = std::function<LangGuess(std::string_view)>;

struct LanguageFilterOptions {
    std::set<std::string> target_langs = {"en", "zh"};
    LangIdOptions langid;
    LangClassifierHook hook;  // optional
};

// Drops on detected-language mismatch, and drops detected-English documents
// containing CJK Unified Ideographs.
StageDecision filter_language(const Document& doc, const LanguageFilterOptions& opts,
                              const std::vector<LanguageProfile>& profiles = builtin_profiles(),
                              LangGuess* guess_out = nullptr);

// --- Stage runners -----------------------------------------------------------

struct PrepareOptions {
    std::string blacklist_file;
    std::string whitelist_file;
    std::string keywords_file;
    std::string ratings_file;
    double rating_threshold = 0.5;
    double default_rating = 0.5;
    LanguageFilterOptions language;
};

StageOutput stage_filter_url(std::vector<Document> docs, const SiteLists& lists, int threads);
// Fills doc.lang with the detected code for survivors.
StageOutput stage_filter_language(std::vector<Document> docs, const LanguageFilterOptions& opts,
                                  int threads);

} // namespace cprep
