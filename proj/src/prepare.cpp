#include "cprep/prepare.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "cprep/errors.hpp"
#include "cprep/parallel.hpp"
#include "cprep/reasons.hpp"
#include "cprep/text.hpp"

namespace cprep {

namespace {

std::vector<std::string> load_pattern_lines(const std::string& path) {
    std::vector<std::string> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw IoError("cannot open list file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = normalize_ws(line);
        if (!line.empty()) out.push_back(to_lower_ascii(line));
    }
    return out;
}

bool domain_matches(const std::string& domain, const std::string& pattern) {
    std::string_view pat = pattern;
    if (pat.starts_with("*.")) pat.remove_prefix(1);  // "*.x.com" behaves like ".x.com" suffix
    if (pat.starts_with(".")) {
        return domain.size() > pat.size() &&
               domain.compare(domain.size() - pat.size(), pat.size(), pat) == 0;
    }
    if (domain == pat) return true;
    // bare pattern also matches subdomains
    return domain.size() > pat.size() + 1 && domain[domain.size() - pat.size() - 1] == '.' &&
           domain.compare(domain.size() - pat.size(), pat.size(), pat) == 0;
}

bool in_list(const std::string& domain, const std::set<std::string>& patterns) {
    return std::any_of(patterns.begin(), patterns.end(),
                       [&](const std::string& p) { return domain_matches(domain, p); });
}

} // namespace

SiteLists SiteLists::load(const std::string& blacklist_file, const std::string& whitelist_file,
                          const std::string& keywords_file, const std::string& ratings_file) {
    SiteLists lists;
    for (auto& p : load_pattern_lines(blacklist_file)) lists.blacklist.insert(p);
    for (auto& p : load_pattern_lines(whitelist_file)) lists.whitelist.insert(p);
    lists.keyword_blocklist = load_pattern_lines(keywords_file);
    if (!ratings_file.empty()) {
        std::ifstream in(ratings_file);
        if (!in) throw IoError("cannot open ratings file: " + ratings_file);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw ConfigError("ratings file: missing tab at line " + std::to_string(line_no));
            std::string domain = to_lower_ascii(normalize_ws(line.substr(0, tab)));
            double score = 0.0;
            try {
                score = std::stod(line.substr(tab + 1));
            } catch (const std::exception&) {
                throw ConfigError("ratings file: bad score at line " + std::to_string(line_no));
            }
            if (score < 0.0 || score > 1.0)
                throw ConfigError("ratings file: score out of [0,1] at line " + std::to_string(line_no));
            lists.site_ratings[domain] = score;
        }
    }
    for (const auto& b : lists.blacklist)
        if (lists.whitelist.count(b))
            throw ConfigError("domain pattern on both blacklist and whitelist: " + b);
    return lists;
}

std::string domain_of(std::string_view url) {
    std::string_view rest = url;
    auto scheme = rest.find("://");
    if (scheme != std::string_view::npos) rest.remove_prefix(scheme + 3);
    auto end = rest.find_first_of("/?#");
    if (end != std::string_view::npos) rest = rest.substr(0, end);
    auto at = rest.rfind('@');
    if (at != std::string_view::npos) rest.remove_prefix(at + 1);
    auto colon = rest.find(':');
    if (colon != std::string_view::npos) rest = rest.substr(0, colon);
    if (rest.empty() || rest.find('.') == std::string_view::npos) return {};
    for (char c : rest)
        if (c == ' ' || c == '\t') return {};
    return to_lower_ascii(rest);
}

StageDecision filter_url(const Document& doc, const SiteLists& lists) {
    const std::string domain = domain_of(doc.url);
    if (!domain.empty()) {
        if (in_list(domain, lists.blacklist))
            return StageDecision::drop(reasons::kUrlBlacklist, domain);
        if (in_list(domain, lists.whitelist)) return StageDecision::keep();
    }
    if (!lists.keyword_blocklist.empty()) {
        const std::string lowered = to_lower_ascii(doc.text);
        for (const auto& kw : lists.keyword_blocklist)
            if (lowered.find(kw) != std::string::npos)
                return StageDecision::drop(reasons::kKeywordBlocklist, kw);
    }
    if (!domain.empty()) {
        auto it = lists.site_ratings.find(domain);
        double rating = it != lists.site_ratings.end() ? it->second : lists.default_rating;
        if (rating < lists.rating_threshold)
            return StageDecision::drop(reasons::kUrlLowRating, domain);
    }
    return StageDecision::keep();
}

StageOutput exact_dedup(std::vector<Document> docs, ExactDedupStats* stats) {
    StageOutput out;
    out.decisions.reserve(docs.size());
    std::unordered_set<std::string> seen_urls;
    std::unordered_set<std::uint64_t> seen_bodies;
    ExactDedupStats local;
    for (auto& doc : docs) {
        if (!doc.url.empty() && !seen_urls.insert(doc.url).second) {
            out.decisions.push_back(StageDecision::drop(reasons::kExactUrl, doc.url));
            ++local.url_dups;
            continue;
        }
        std::uint64_t body = fnv1a64(normalize_ws(doc.text));
        if (!seen_bodies.insert(body).second) {
            out.decisions.push_back(StageDecision::drop(reasons::kExactBody));
            ++local.body_dups;
            continue;
        }
        out.decisions.push_back(StageDecision::keep());
        out.docs.push_back(std::move(doc));
    }
    if (stats) *stats = local;
    return out;
}

// --- Language identification -------------------------------------------------

namespace {

// N-grams are extracted from lowercased text with whitespace runs mapped to a
// single '_', n = 1..4 over code points.
std::vector<std::pair<std::string, std::uint64_t>> ngram_counts(std::string_view text) {
    std::string norm = to_lower_ascii(normalize_ws(text));
    std::replace(norm.begin(), norm.end(), ' ', '_');

    // code point boundaries
    std::vector<std::size_t> bounds;
    bounds.reserve(norm.size() + 1);
    char32_t cp;
    for (std::size_t i = 0; i < norm.size(); i += utf8_decode(norm, i, cp)) bounds.push_back(i);
    bounds.push_back(norm.size());

    std::unordered_map<std::string, std::uint64_t> counts;
    const std::size_t ncp = bounds.size() - 1;
    for (std::size_t i = 0; i < ncp; ++i) {
        for (std::size_t n = 1; n <= 4 && i + n <= ncp; ++n) {
            counts[norm.substr(bounds[i], bounds[i + n] - bounds[i])]++;
        }
    }
    return {counts.begin(), counts.end()};
}

std::vector<std::pair<std::string, std::uint64_t>> top_grams(std::string_view text, int depth) {
    auto counts = ngram_counts(text);
    std::sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (static_cast<int>(counts.size()) > depth) counts.resize(depth);
    return counts;
}

} // namespace

LanguageProfile build_language_profile(std::string lang, std::string_view sample, int depth) {
    LanguageProfile profile;
    profile.lang = std::move(lang);
    auto grams = top_grams(sample, depth);
    profile.grams.reserve(grams.size());
    for (std::size_t i = 0; i < grams.size(); ++i) {
        profile.rank_of.emplace(grams[i].first, static_cast<int>(i));
        profile.grams.push_back(std::move(grams[i].first));
    }
    return profile;
}

double profile_distance(std::string_view text, const LanguageProfile& profile,
                        const LangIdOptions& opts) {
    auto grams = top_grams(text, opts.profile_depth);
    if (grams.empty() || profile.depth() == 0) return 1.0;
    const int penalty = profile.depth();
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < grams.size(); ++i) {
        auto it = profile.rank_of.find(grams[i].first);
        if (it == profile.rank_of.end())
            total += penalty;
        else
            total += static_cast<std::uint64_t>(std::abs(static_cast<int>(i) - it->second));
    }
    return static_cast<double>(total) / (static_cast<double>(grams.size()) * penalty);
}

LangGuess detect_language(std::string_view text, const std::vector<LanguageProfile>& profiles,
                          const LangIdOptions& opts) {
    if (profiles.empty() || count_codepoints(text) < opts.min_chars) return {"und", 0.0};
    double best = 2.0, runner = 2.0;
    const LanguageProfile* best_profile = nullptr;
    for (const auto& profile : profiles) {
        double d = profile_distance(text, profile, opts);
        if (d < best) {
            runner = best;
            best = d;
            best_profile = &profile;
        } else if (d < runner) {
            runner = d;
        }
    }
    if (!best_profile || best > opts.max_distance) return {"und", 0.0};
    double confidence = 1.0;
    if (profiles.size() > 1 && runner > 0.0)
        confidence = std::clamp((runner - best) / runner, 0.0, 1.0);
    return {best_profile->lang, confidence};
}

StageDecision filter_language(const Document& doc, const LanguageFilterOptions& opts,
                              const std::vector<LanguageProfile>& profiles, LangGuess* guess_out) {
    LangGuess guess =
        opts.hook ? opts.hook(doc.text) : detect_language(doc.text, profiles, opts.langid);
    if (guess_out) *guess_out = guess;
    if (!opts.target_langs.count(guess.lang))
        return StageDecision::drop(reasons::kLangMismatch, guess.lang);
    if (guess.lang == "en" && contains_cjk_unified(doc.text))
        return StageDecision::drop(reasons::kLangMixedCjk);
    return StageDecision::keep();
}

// --- Stage runners -----------------------------------------------------------

namespace {

StageOutput collect(std::vector<Document> docs, std::vector<StageDecision> decisions,
                    const std::vector<LangGuess>* guesses = nullptr) {
    StageOutput out;
    out.decisions = std::move(decisions);
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (!out.decisions[i].kept()) continue;
        if (guesses) docs[i].lang = (*guesses)[i].lang;
        out.docs.push_back(std::move(docs[i]));
    }
    return out;
}

} // namespace

StageOutput stage_filter_url(std::vector<Document> docs, const SiteLists& lists, int threads) {
    auto decisions = map_indexed<StageDecision>(
        docs.size(), [&](std::size_t i) { return filter_url(docs[i], lists); }, threads);
    return collect(std::move(docs), std::move(decisions));
}

StageOutput stage_filter_language(std::vector<Document> docs, const LanguageFilterOptions& opts,
                                  int threads) {
    const auto& profiles = builtin_profiles();
    struct Outcome {
        StageDecision decision;
        LangGuess guess;
    };
    auto outcomes = map_indexed<Outcome>(
        docs.size(),
        [&](std::size_t i) {
            Outcome o;
            o.decision = filter_language(docs[i], opts, profiles, &o.guess);
            return o;
        },
        threads);
    std::vector<StageDecision> decisions;
    std::vector<LangGuess> guesses;
    decisions.reserve(outcomes.size());
    guesses.reserve(outcomes.size());
    for (auto& o : outcomes) {
        decisions.push_back(std::move(o.decision));
        guesses.push_back(std::move(o.guess));
    }
    return collect(std::move(docs), std::move(decisions), &guesses);
}

} // namespace cprep
