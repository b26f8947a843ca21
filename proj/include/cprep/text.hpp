#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cprep/document.hpp"

namespace cprep {

// --- UTF-8 / code point helpers ------------------------------------------

// Decodes the code point starting at byte offset i. Returns the number of
// bytes consumed (1 for an invalid lead byte, cp set to U+FFFD).
std::size_t utf8_decode(std::string_view s, std::size_t i, char32_t& cp);

std::size_t count_codepoints(std::string_view s);

bool is_space_cp(char32_t cp);
// CJK Unified Ideographs base block (U+4E00..U+9FFF) plus ext. A and
// compatibility ideographs. Used for word segmentation and the token proxy.
bool is_cjk_ideograph(char32_t cp);
// Ideographs plus CJK punctuation / fullwidth forms; the "CJK context" that
// terminates a sentence after ASCII terminal punctuation.
bool is_cjk_context(char32_t cp);
// Strict base block U+4E00..U+9FFF; the language filter's mixed-script check.
bool contains_cjk_unified(std::string_view s);
bool is_punct_cp(char32_t cp);

std::string to_lower_ascii(std::string_view s);

// Trims leading/trailing whitespace and collapses interior runs to one space.
std::string normalize_ws(std::string_view s);

// Splits into words: whitespace-delimited runs, except each CJK ideograph is
// its own word.
std::vector<std::string> split_words(std::string_view s);
std::size_t count_words(std::string_view s);

// 64-bit FNV-1a. Stable across platforms; used for all content keys.
std::uint64_t fnv1a64(std::string_view s);
std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed);

// --- Segmentation ----------------------------------------------------------

// Splits on '\n'. Empty segments are preserved as zero-length paragraphs so
// join_paragraphs reconstructs the input exactly. Statuses all Undecided.
std::vector<Paragraph> split_paragraphs(std::string_view text);
std::string join_paragraphs(const std::vector<Paragraph>& paras);

// Splits after terminal punctuation {. ! ? 。 ！ ？ ；} with trailing closing
// quotes/brackets attached. ASCII terminals split only when followed by
// whitespace, a CJK character, or end of text, so "3.14" stays whole.
// Concatenation of the result reproduces the input.
std::vector<std::string> split_sentences(std::string_view text);

} // namespace cprep
