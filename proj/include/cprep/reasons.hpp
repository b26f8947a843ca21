#pragma once

#include <set>
#include <string>

namespace cprep::reasons {

// The closed set of drop-reason codes. Every Drop decision emitted by the
// pipeline carries exactly one of these.
inline const char* const kUrlBlacklist = "url.blacklist";
inline const char* const kKeywordBlocklist = "keyword.blocklist";
inline const char* const kUrlLowRating = "url.low_rating";
inline const char* const kExactUrl = "exact.url";
inline const char* const kExactBody = "exact.body";
inline const char* const kLangMismatch = "lang.mismatch";
inline const char* const kLangMixedCjk = "lang.mixed_cjk";
inline const char* const kJunkEmpty = "junk.empty";
inline const char* const kDocRulePunctRatio = "doc_rule.punct_ratio";
inline const char* const kDocRuleEllipsisEnd = "doc_rule.ellipsis_end";
inline const char* const kDocRuleNoPunctEnd = "doc_rule.no_punct_end";
inline const char* const kDocRuleAbnormalWord = "doc_rule.abnormal_word";
inline const char* const kDocRuleDupSentence = "doc_rule.dup_sentence";
inline const char* const kDocRuleShortPara = "doc_rule.short_para";
inline const char* const kDocRuleRepNgram = "doc_rule.rep_ngram";
inline const char* const kQualityLow = "quality.low";
inline const char* const kQualityUnavailable = "quality.unavailable";
inline const char* const kDedupDoc = "dedup.doc";
inline const char* const kDedupParaEmpty = "dedup.para_empty";
inline const char* const kDedupSentEmpty = "dedup.sent_empty";

inline const std::set<std::string>& known() {
    static const std::set<std::string> s = {
        kUrlBlacklist,      kKeywordBlocklist,   kUrlLowRating,
        kExactUrl,          kExactBody,          kLangMismatch,
        kLangMixedCjk,      kJunkEmpty,          kDocRulePunctRatio,
        kDocRuleEllipsisEnd, kDocRuleNoPunctEnd, kDocRuleAbnormalWord,
        kDocRuleDupSentence, kDocRuleShortPara,  kDocRuleRepNgram,
        kQualityLow,        kQualityUnavailable, kDedupDoc,
        kDedupParaEmpty,    kDedupSentEmpty,
    };
    return s;
}

} // namespace cprep::reasons
