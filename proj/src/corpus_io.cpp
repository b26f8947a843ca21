#include "cprep/corpus_io.hpp"

#include <iostream>

#include "cprep/errors.hpp"

namespace cprep {

using nlohmann::json;

json document_to_json(const Document& doc) {
    json j;
    j["id"] = doc.id;
    if (!doc.url.empty()) j["url"] = doc.url;
    if (!doc.source.empty()) j["source"] = doc.source;
    if (!doc.lang.empty()) j["lang"] = doc.lang;
    if (!doc.topic.empty()) j["topic"] = doc.topic;
    j["text"] = doc.text;
    if (!doc.meta.empty()) j["meta"] = doc.meta;
    return j;
}

Document document_from_json(const json& j) {
    Document doc;
    doc.id = j.at("id").get<std::string>();
    doc.text = j.at("text").get<std::string>();
    if (j.contains("url")) doc.url = j.at("url").get<std::string>();
    if (j.contains("source")) doc.source = j.at("source").get<std::string>();
    if (j.contains("lang")) doc.lang = j.at("lang").get<std::string>();
    if (j.contains("topic")) doc.topic = j.at("topic").get<std::string>();
    if (j.contains("meta")) doc.meta = j.at("meta").get<std::map<std::string, std::string>>();
    return doc;
}

CorpusReader::CorpusReader(const std::string& path) : in_(path, std::ios::binary), path_(path) {
    if (!in_) throw IoError("cannot open corpus file: " + path);
}

bool CorpusReader::next(Document& out) {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            Document doc = document_from_json(j);
            if (doc.id.empty()) throw std::runtime_error("empty id");
            if (!seen_ids_.insert(doc.id).second) throw std::runtime_error("duplicate id '" + doc.id + "'");
            out = std::move(doc);
            return true;
        } catch (const std::exception& e) {
            ++skipped_;
            std::cerr << "warning: " << path_ << ":" << line_no_ << ": skipping malformed record ("
                      << e.what() << ")\n";
        }
    }
    return false;
}

CorpusWriter::CorpusWriter(const std::string& path) : out_(path, std::ios::binary), path_(path) {
    if (!out_) throw IoError("cannot open output file: " + path);
}

void CorpusWriter::write(const Document& doc) {
    out_ << document_to_json(doc).dump() << '\n';
    if (!out_) throw IoError("write failed: " + path_);
    ++count_;
}

std::vector<Document> read_corpus(const std::string& path, ReadStats* stats) {
    CorpusReader reader(path);
    std::vector<Document> docs;
    Document doc;
    while (reader.next(doc)) docs.push_back(std::move(doc));
    if (stats) stats->skipped = reader.skipped();
    return docs;
}

std::size_t write_corpus(const std::vector<Document>& docs, const std::string& path) {
    CorpusWriter writer(path);
    for (const auto& doc : docs) writer.write(doc);
    return writer.count();
}

} // namespace cprep
