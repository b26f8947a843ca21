#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cprep/document.hpp"

namespace cprep {

// --- Junk paragraph filtering -------------------------------------------------

// Reproducible stand-in for a trained junk classifier. Documented formula:
//   empty paragraph -> 1.0
//   score = min(1, phrase_weight * min(1, phrase_hits)
//                + link_weight   * min(1, 5 * linkish_tokens / tokens)
//                + (cp_len < short_cp_len ? short_weight : 0))
struct JunkHeuristic {
    std::vector<std::string> phrases;  // lowercase; empty -> bundled lexicon
    double phrase_weight = 0.7;
    double link_weight = 0.5;
    double short_weight = 0.3;
    std::size_t short_cp_len = 30;

    double operator()(std::string_view paragraph_text) const;
};

const std::vector<std::string>& default_boilerplate_phrases();
std::vector<std::string> load_phrase_file(const std::string& path);

struct JunkScorer {
    std::function<double(const Paragraph&)> score;  // null -> JunkHeuristic{}
    double threshold = 0.5;
};

// One status per paragraph; Junk iff score >= threshold. A throwing scorer
// fails open to Content and bumps *failures.
std::vector<ParaStatus> score_junk(const Document& doc, const JunkScorer& scorer,
                                   std::size_t* failures = nullptr);

// Junk runs touching the head or tail stay Junk; an isolated interior Junk
// flips to Content; interior runs of length >= 2 stay.
std::vector<ParaStatus> smooth_statuses(std::vector<ParaStatus> statuses);

// Rewrites doc.text to the Content paragraphs. Drops ("junk.empty") when no
// content survives. Throws std::logic_error on a status/paragraph mismatch.
StageDecision apply_junk_filter(Document& doc, const std::vector<ParaStatus>& statuses);

// --- Document-level heuristic rules -------------------------------------------

struct DocRuleThresholds {
    double punct_ratio_max = 0.5;
    double ellipsis_end_ratio_max = 0.3;
    double no_punct_end_ratio_max = 0.85;
    double abnormal_word_ratio_max = 0.2;
    double dup_sentence_frac_max = 0.3;
    double short_para_ratio_max = 0.7;
    std::size_t short_para_char_len = 10;
    std::array<double, 3> rep_ngram_frac_max = {0.20, 0.18, 0.16};
    double exam_loosen_multiplier = 1.5;
};

struct DocRuleMetrics {
    double punct_ratio = 0;
    double ellipsis_end_ratio = 0;
    double no_punct_end_ratio = 0;
    double abnormal_word_ratio = 0;
    double dup_sentence_frac = 0;
    double short_para_ratio = 0;
    std::array<double, 3> rep_ngram_frac = {0, 0, 0};
};

DocRuleMetrics compute_doc_metrics(const Document& doc, std::size_t short_para_char_len);

// Evaluates the seven rules in order; first violation wins. With loosen set,
// every threshold is multiplied by exam_loosen_multiplier.
StageDecision apply_document_rules(const Document& doc, const DocRuleThresholds& t,
                                   bool loosen = false);

// --- Quality filtering ---------------------------------------------------------

// Documented default heuristic:
//   empty -> 0
//   score = min(1, codepoints / 500) * min(1, 1.5 * unique_words / words)
double quality_score(const Document& doc);

struct QualityOptions {
    double threshold = 0.4;
    std::string scorer_url;  // optional external scorer; empty -> builtin heuristic
    int timeout_ms = 1000;
    bool fail_open = true;
};

// POSTs {"id","text"} to scorer_url expecting {"score": x}; nullopt on any
// transport or protocol failure.
std::optional<double> remote_quality_score(const Document& doc, const QualityOptions& opts);

StageDecision filter_quality(const Document& doc, const QualityOptions& opts,
                             std::size_t* scorer_failures = nullptr);

// --- PII redaction ---------------------------------------------------------------

struct PiiRule {
    std::string id;       // "email", "ipv4", "phone" get built-in validation
    std::string pattern;  // ECMAScript regex
    std::string token;    // e.g. "[EMAIL]"
};

struct PiiRules {
    std::vector<PiiRule> rules;

    static PiiRules defaults();
    // pattern-id<TAB>regex<TAB>token per line, '#' comments.
    static PiiRules load_file(const std::string& path);
};

struct PiiCounts {
    std::map<std::string, std::size_t> by_rule;
    void merge(const PiiCounts& other) {
        for (const auto& [k, v] : other.by_rule) by_rule[k] += v;
    }
};

// Compiles the rule set once; redact() is pure and thread-safe.
class PiiRedactor {
  public:
    explicit PiiRedactor(const PiiRules& rules);
    std::string redact(std::string_view text, PiiCounts* counts = nullptr) const;

  private:
    struct Compiled;
    std::vector<Compiled> compiled_;
  public:
    ~PiiRedactor();
    PiiRedactor(PiiRedactor&&) noexcept;
    PiiRedactor& operator=(PiiRedactor&&) noexcept;
};

std::string redact_pii(std::string_view text, const PiiRules& rules, PiiCounts* counts = nullptr);

// --- Stage runners -----------------------------------------------------------------

struct CleanOptions {
    JunkScorer junk;                 // junk.score null -> heuristic with lexicon below
    std::string boilerplate_file;    // optional lexicon override
    DocRuleThresholds doc_rules;
    std::set<std::string> exam_source_tags;
    QualityOptions quality;
    std::string pii_rules_file;      // optional rules override
};

struct CleanCounters {
    std::size_t junk_scorer_failures = 0;
    std::size_t quality_scorer_failures = 0;
    PiiCounts pii;
};

StageOutput stage_junk_filter(std::vector<Document> docs, const JunkScorer& scorer, int threads,
                              std::size_t* scorer_failures = nullptr);
StageOutput stage_doc_rules(std::vector<Document> docs, const DocRuleThresholds& t,
                            const std::set<std::string>& exam_source_tags, int threads);
StageOutput stage_quality(std::vector<Document> docs, const QualityOptions& opts, int threads,
                          std::size_t* scorer_failures = nullptr);
StageOutput stage_pii(std::vector<Document> docs, const PiiRedactor& redactor, int threads,
                      PiiCounts* counts = nullptr);

} // namespace cprep
