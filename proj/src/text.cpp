#include "cprep/text.hpp"

#include <algorithm>
#include <cctype>

namespace cprep {

std::size_t utf8_decode(std::string_view s, std::size_t i, char32_t& cp) {
    const auto* p = reinterpret_cast<const unsigned char*>(s.data());
    unsigned char c = p[i];
    if (c < 0x80) {
        cp = c;
        return 1;
    }
    auto cont = [&](std::size_t k) { return i + k < s.size() && (p[i + k] & 0xC0) == 0x80; };
    if ((c & 0xE0) == 0xC0 && cont(1)) {
        cp = ((c & 0x1Fu) << 6) | (p[i + 1] & 0x3Fu);
        return 2;
    }
    if ((c & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        cp = ((c & 0x0Fu) << 12) | ((p[i + 1] & 0x3Fu) << 6) | (p[i + 2] & 0x3Fu);
        return 3;
    }
    if ((c & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        cp = ((c & 0x07u) << 18) | ((p[i + 1] & 0x3Fu) << 12) | ((p[i + 2] & 0x3Fu) << 6) |
             (p[i + 3] & 0x3Fu);
        return 4;
    }
    cp = 0xFFFD;
    return 1;
}

std::size_t count_codepoints(std::string_view s) {
    std::size_t n = 0;
    char32_t cp;
    for (std::size_t i = 0; i < s.size(); i += utf8_decode(s, i, cp)) ++n;
    return n;
}

bool is_space_cp(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
           cp == U'\v' || cp == 0x00A0 || cp == 0x3000;
}

bool is_cjk_ideograph(char32_t cp) {
    return (cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF) ||
           (cp >= 0xF900 && cp <= 0xFAFF);
}

bool is_cjk_context(char32_t cp) {
    return is_cjk_ideograph(cp) || (cp >= 0x3000 && cp <= 0x303F) ||
           (cp >= 0xFF00 && cp <= 0xFFEF);
}

bool contains_cjk_unified(std::string_view s) {
    char32_t cp;
    for (std::size_t i = 0; i < s.size(); i += utf8_decode(s, i, cp))
        if (cp >= 0x4E00 && cp <= 0x9FFF) return true;
    return false;
}

bool is_punct_cp(char32_t cp) {
    if (cp < 0x80) return std::ispunct(static_cast<unsigned char>(cp)) != 0;
    if (cp >= 0x2010 && cp <= 0x2027) return true; // dashes, quotes, ellipsis
    if (cp >= 0x3001 && cp <= 0x303F) return true; // CJK punctuation (excl. ideographic space)
    if (cp >= 0xFF01 && cp <= 0xFF0F) return true; // fullwidth ! " # ... /
    if (cp >= 0xFF1A && cp <= 0xFF20) return true; // fullwidth : ; < ... @
    if (cp >= 0xFF3B && cp <= 0xFF40) return true;
    if (cp >= 0xFF5B && cp <= 0xFF65) return true;
    return false;
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

std::string normalize_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    bool seen_any = false;
    std::size_t i = 0;
    while (i < s.size()) {
        char32_t cp;
        std::size_t len = utf8_decode(s, i, cp);
        if (is_space_cp(cp)) {
            pending_space = seen_any;
        } else {
            if (pending_space) out.push_back(' ');
            out.append(s.substr(i, len));
            pending_space = false;
            seen_any = true;
        }
        i += len;
    }
    return out;
}

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> words;
    std::string cur;
    std::size_t i = 0;
    while (i < s.size()) {
        char32_t cp;
        std::size_t len = utf8_decode(s, i, cp);
        if (is_space_cp(cp)) {
            if (!cur.empty()) words.push_back(std::move(cur)), cur.clear();
        } else if (is_cjk_ideograph(cp)) {
            if (!cur.empty()) words.push_back(std::move(cur)), cur.clear();
            words.emplace_back(s.substr(i, len));
        } else {
            cur.append(s.substr(i, len));
        }
        i += len;
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    return words;
}

std::size_t count_words(std::string_view s) {
    std::size_t n = 0;
    bool in_token = false;
    std::size_t i = 0;
    while (i < s.size()) {
        char32_t cp;
        std::size_t len = utf8_decode(s, i, cp);
        if (is_space_cp(cp)) {
            in_token = false;
        } else if (is_cjk_ideograph(cp)) {
            ++n;
            in_token = false;
        } else if (!in_token) {
            ++n;
            in_token = true;
        }
        i += len;
    }
    return n;
}

std::uint64_t fnv1a64(std::string_view s) {
    return fnv1a64(s.data(), s.size(), 0xcbf29ce484222325ULL);
}

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<Paragraph> split_paragraphs(std::string_view text) {
    std::vector<Paragraph> paras;
    std::size_t start = 0;
    std::size_t idx = 0;
    while (true) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            paras.push_back({idx++, std::string(text.substr(start)), ParaStatus::Undecided});
            break;
        }
        paras.push_back({idx++, std::string(text.substr(start, nl - start)), ParaStatus::Undecided});
        start = nl + 1;
    }
    return paras;
}

std::string join_paragraphs(const std::vector<Paragraph>& paras) {
    std::string out;
    for (std::size_t i = 0; i < paras.size(); ++i) {
        if (i) out.push_back('\n');
        out += paras[i].text;
    }
    return out;
}

namespace {

bool is_terminal_punct(char32_t cp) {
    return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x3002 /* 。 */ ||
           cp == 0xFF01 /* ！ */ || cp == 0xFF1F /* ？ */ || cp == 0xFF1B /* ； */;
}

bool is_ascii_terminal(char32_t cp) { return cp == U'.' || cp == U'!' || cp == U'?'; }

bool is_closing_mark(char32_t cp) {
    switch (cp) {
        case U'"': case U'\'': case U')': case U']': case U'}':
        case 0x2019: case 0x201D:           // ’ ”
        case 0x300D: case 0x300F:           // 」 』
        case 0x3009: case 0x300B:           // 〉 》
        case 0xFF09: case 0xFF3D:           // ） ］
            return true;
        default:
            return false;
    }
}

} // namespace

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> sentences;
    if (text.empty()) return sentences;

    std::size_t start = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp;
        std::size_t len = utf8_decode(text, i, cp);
        if (!is_terminal_punct(cp)) {
            i += len;
            continue;
        }
        std::size_t end = i + len;
        // attach trailing closing quotes/brackets
        while (end < text.size()) {
            char32_t q;
            std::size_t qlen = utf8_decode(text, end, q);
            if (!is_closing_mark(q)) break;
            end += qlen;
        }
        bool split_here = true;
        if (is_ascii_terminal(cp)) {
            if (end >= text.size()) {
                split_here = true;
            } else {
                char32_t next;
                utf8_decode(text, end, next);
                split_here = is_space_cp(next) || is_cjk_context(next);
            }
        }
        if (split_here) {
            sentences.emplace_back(text.substr(start, end - start));
            start = end;
        }
        i = end > i ? end : i + len;
    }
    if (start < text.size()) sentences.emplace_back(text.substr(start));
    return sentences;
}

} // namespace cprep
