#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cprep {

// One corpus record. Optional fields (url, lang, topic) use "" for absent;
// the JSONL writer omits empty optionals so round-trips are field-for-field.
struct Document {
    std::string id;
    std::string url;
    std::string source;
    std::string lang;
    std::string topic;
    std::string text;
    std::map<std::string, std::string> meta;

    bool operator==(const Document&) const = default;
};

enum class ParaStatus { Undecided, Content, Junk };

struct Paragraph {
    std::size_t index = 0;
    std::string text;
    ParaStatus status = ParaStatus::Undecided;
};

enum class Verdict { Keep, Drop };

// Keep/drop verdict with a machine-readable reason code from the documented
// closed set (see reasons.hpp).
struct StageDecision {
    Verdict verdict = Verdict::Keep;
    std::string reason;
    std::string detail;

    static StageDecision keep() { return {}; }
    static StageDecision drop(std::string reason_code, std::string detail_text = {}) {
        return {Verdict::Drop, std::move(reason_code), std::move(detail_text)};
    }
    bool kept() const { return verdict == Verdict::Keep; }
    bool dropped() const { return verdict == Verdict::Drop; }
};

// A stage's view of a corpus pass: surviving (possibly rewritten) documents and
// one decision per input document, aligned with the input order.
struct StageOutput {
    std::vector<Document> docs;
    std::vector<StageDecision> decisions;
};

} // namespace cprep
