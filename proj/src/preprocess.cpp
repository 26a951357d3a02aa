#include "fuzzydoc/preprocess.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "default_stopwords.hpp"
#include "fuzzydoc/porter_stemmer.hpp"

namespace fuzzydoc {
namespace {

bool is_ascii_alnum(char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9');
}

char ascii_lower(char ch) { return (ch >= 'A' && ch <= 'Z') ? static_cast<char>(ch - 'A' + 'a') : ch; }

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) { return ascii_lower(x) == ascii_lower(y); });
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Decodes the entity body between '&' and ';'. Names are matched without
// regard to case so that lowercasing before or after stripping agrees.
bool decode_entity(std::string_view body, std::string& out) {
    static constexpr std::pair<std::string_view, char> named[] = {
        {"amp", '&'}, {"lt", '<'}, {"gt", '>'}, {"quot", '"'}, {"apos", '\''},
    };
    for (const auto& [name, ch] : named) {
        if (iequals(body, name)) {
            out.push_back(ch);
            return true;
        }
    }
    if (body.size() < 2 || body[0] != '#') return false;

    int base = 10;
    std::string_view digits = body.substr(1);
    if (digits[0] == 'x' || digits[0] == 'X') {
        base = 16;
        digits.remove_prefix(1);
    }
    if (digits.empty() || digits.size() > 8) return false;
    std::uint32_t cp = 0;
    for (char ch : digits) {
        int v;
        if (ch >= '0' && ch <= '9') v = ch - '0';
        else if (base == 16 && ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
        else if (base == 16 && ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
        else return false;
        cp = cp * static_cast<std::uint32_t>(base) + static_cast<std::uint32_t>(v);
    }
    if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    append_utf8(out, cp);
    return true;
}

std::string remove_tags(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '<') {
            std::size_t close = text.find('>', i + 1);
            if (close != std::string_view::npos) {
                out.push_back(' ');
                i = close + 1;
                continue;
            }
        }
        out.push_back(text[i]);
        ++i;
    }
    return out;
}

std::string decode_entities(std::string_view text) {
    // Longest entity body we recognise: "#x10FFFF" plus slack.
    constexpr std::size_t kMaxBody = 10;
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '&') {
            std::size_t semi = text.find(';', i + 1);
            if (semi != std::string_view::npos && semi - i - 1 <= kMaxBody &&
                decode_entity(text.substr(i + 1, semi - i - 1), out)) {
                i = semi + 1;
                continue;
            }
        }
        out.push_back(text[i]);
        ++i;
    }
    return out;
}

std::vector<std::string> filter_stopwords(std::vector<std::string> terms, const StopwordSet& stopwords) {
    if (stopwords.empty()) return terms;
    std::erase_if(terms, [&](const std::string& t) { return stopwords.contains(t); });
    return terms;
}

}  // namespace

PreprocessConfig PreprocessConfig::defaults() {
    PreprocessConfig config;
    config.stopwords = default_stopwords();
    return config;
}

std::string strip_markup(std::string_view text) { return decode_entities(remove_tags(text)); }

std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> words;
    std::string current;
    for (char ch : text) {
        if (is_ascii_alnum(ch)) {
            current.push_back(ascii_lower(ch));
        } else if (!current.empty()) {
            words.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

void append_bigrams(std::vector<std::string>& terms) {
    const std::size_t unigrams = terms.size();
    if (unigrams < 2) return;
    terms.reserve(2 * unigrams - 1);
    for (std::size_t i = 0; i + 1 < unigrams; ++i) {
        terms.push_back(terms[i] + '_' + terms[i + 1]);
    }
}

TermList tokenize(std::string_view text, const PreprocessConfig& config) {
    TermList out;
    out.terms = filter_stopwords(split_words(text), config.stopwords);
    if (config.bigrams) append_bigrams(out.terms);
    return out;
}

TermList remove_stopwords(TermList terms, const StopwordSet& stopwords) {
    terms.terms = filter_stopwords(std::move(terms.terms), stopwords);
    return terms;
}

TermList preprocess_document(const RawDocument& doc, const PreprocessConfig& config) {
    std::vector<std::string> words =
        config.strip_markup ? split_words(strip_markup(doc.content)) : split_words(doc.content);
    words = filter_stopwords(std::move(words), config.stopwords);
    if (config.stemming) {
        for (auto& w : words) {
            // A lone "s" stems to nothing; keep the surface form instead.
            std::string stemmed = porter_stem(w);
            if (!stemmed.empty()) w = std::move(stemmed);
        }
    }
    if (config.bigrams) append_bigrams(words);
    return TermList{doc.id, std::move(words)};
}

StopwordSet parse_stopwords(std::istream& in) {
    StopwordSet words;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r\n");
        std::string term = line.substr(first, last - first + 1);
        if (term.find_first_of(" \t") != std::string::npos) {
            throw std::invalid_argument("stopword contains whitespace: '" + term + "'");
        }
        std::transform(term.begin(), term.end(), term.begin(), ascii_lower);
        words.insert(std::move(term));
    }
    return words;
}

StopwordSet load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read stopword file: " + path);
    return parse_stopwords(in);
}

const StopwordSet& default_stopwords() {
    static const StopwordSet words = [] {
        std::istringstream in(detail::kDefaultStopwordText);
        return parse_stopwords(in);
    }();
    return words;
}

}  // namespace fuzzydoc
