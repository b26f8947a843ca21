#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "cprep/document.hpp"

#include "json.hpp"

namespace cprep {

nlohmann::json document_to_json(const Document& doc);
// Throws nlohmann::json::exception / std::runtime_error on malformed records.
Document document_from_json(const nlohmann::json& j);

// Streaming line-delimited JSON reader. Malformed lines (bad JSON, missing or
// duplicate id, empty id) are warned about and counted, never fatal.
class CorpusReader {
  public:
    explicit CorpusReader(const std::string& path);

    bool next(Document& out);
    std::size_t skipped() const { return skipped_; }
    std::size_t line_no() const { return line_no_; }

  private:
    std::ifstream in_;
    std::string path_;
    std::size_t skipped_ = 0;
    std::size_t line_no_ = 0;
    std::unordered_set<std::string> seen_ids_;
};

class CorpusWriter {
  public:
    explicit CorpusWriter(const std::string& path);
    void write(const Document& doc);
    std::size_t count() const { return count_; }

  private:
    std::ofstream out_;
    std::string path_;
    std::size_t count_ = 0;
};

struct ReadStats {
    std::size_t skipped = 0;
};

std::vector<Document> read_corpus(const std::string& path, ReadStats* stats = nullptr);
std::size_t write_corpus(const std::vector<Document>& docs, const std::string& path);

} // namespace cprep
