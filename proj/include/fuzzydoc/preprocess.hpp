#pragma once

#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzydoc {

struct RawDocument {
    std::string id;
    std::string content;  // UTF-8
};

using StopwordSet = std::set<std::string, std::less<>>;

struct PreprocessConfig {
    bool strip_markup = true;
    StopwordSet stopwords;
    bool stemming = true;
    // Emit "a_b" phrase tokens for adjacent pairs after the unigrams.
    bool bigrams = false;

    // Markup stripping, default English stopwords, stemming on, no bigrams.
    static PreprocessConfig defaults();
};

struct TermList {
    std::string doc_id;
    std::vector<std::string> terms;
};

/// Removes `<...>` spans (each replaced by one space) and decodes the
/// entities &amp; &lt; &gt; &quot; &apos; &#NN; and &#xHH;. A `<` without a
/// closing `>` is kept as a literal character; unknown entities are kept
/// verbatim. Tags are removed before entities are decoded, so `&lt;b&gt;`
/// survives as the text "<b>".
std::string strip_markup(std::string_view text);

/// Lowercases and splits on every character outside [A-Za-z0-9]. Bytes of
/// multi-byte UTF-8 sequences count as separators, so terms are always
/// drawn from [a-z0-9].
std::vector<std::string> split_words(std::string_view text);

/// split_words, then stopword removal with config.stopwords, then bigram
/// emission when config.bigrams is set. Does not strip markup or stem.
TermList tokenize(std::string_view text, const PreprocessConfig& config);

TermList remove_stopwords(TermList terms, const StopwordSet& stopwords);

/// Appends one "t1_t2" token per adjacent pair, after the existing terms.
void append_bigrams(std::vector<std::string>& terms);

/// strip_markup -> split_words -> remove_stopwords -> stem -> bigrams, each
/// stage subject to its config flag.
TermList preprocess_document(const RawDocument& doc, const PreprocessConfig& config);

/// Parses a stopword file: one term per line, `#` starts a comment, blank
/// lines ignored. Terms are lowercased; a term containing whitespace is
/// rejected with std::invalid_argument.
StopwordSet parse_stopwords(std::istream& in);
StopwordSet load_stopwords(const std::string& path);

/// The bundled English list (data/stopwords_en.txt).
const StopwordSet& default_stopwords();

}  // namespace fuzzydoc
