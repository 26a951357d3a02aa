#include "fuzzydoc/porter_stemmer.hpp"

#include <array>
#include <cstddef>

namespace fuzzydoc {
namespace {

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

class Stemmer {
public:
    explicit Stemmer(std::string_view word) : w_(word) {}

    std::string run() && {
        step1a();
        step1b();
        step1c();
        step2();
        step3();
        step4();
        step5a();
        step5b();
        return std::move(w_);
    }

private:
    bool consonant(std::size_t i) const {
        switch (w_[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 || !consonant(i - 1);
        default:
            return true;
        }
    }

    // Number of VC sequences in w_[0, len): the m of [C](VC)^m[V].
    int measure(std::size_t len) const {
        int m = 0;
        std::size_t i = 0;
        while (i < len && consonant(i)) ++i;
        while (i < len) {
            while (i < len && !consonant(i)) ++i;
            if (i >= len) break;
            while (i < len && consonant(i)) ++i;
            ++m;
        }
        return m;
    }

    bool has_vowel(std::size_t len) const {
        for (std::size_t i = 0; i < len; ++i) {
            if (!consonant(i)) return true;
        }
        return false;
    }

    bool double_consonant(std::size_t len) const {
        return len >= 2 && w_[len - 1] == w_[len - 2] && consonant(len - 1);
    }

    // *o: stem ends consonant-vowel-consonant, last not w, x or y.
    bool cvc(std::size_t len) const {
        if (len < 3) return false;
        if (!consonant(len - 3) || consonant(len - 2) || !consonant(len - 1)) return false;
        char last = w_[len - 1];
        return last != 'w' && last != 'x' && last != 'y';
    }

    bool ends_with(std::string_view s) const {
        return w_.size() >= s.size() && std::string_view(w_).substr(w_.size() - s.size()) == s;
    }

    std::size_t stem_len(std::string_view suffix) const { return w_.size() - suffix.size(); }

    void replace_suffix(std::string_view suffix, std::string_view replacement) {
        w_.resize(stem_len(suffix));
        w_.append(replacement);
    }

    // Longest matching suffix wins; its stem must have measure > min_measure.
    template <std::size_t N>
    const Rule* longest_match(const std::array<Rule, N>& rules) const {
        const Rule* best = nullptr;
        for (const auto& r : rules) {
            if (ends_with(r.suffix) && (!best || r.suffix.size() > best->suffix.size())) best = &r;
        }
        return best;
    }

    void step1a() {
        if (ends_with("sses")) replace_suffix("sses", "ss");
        else if (ends_with("ies")) replace_suffix("ies", "i");
        else if (ends_with("ss")) return;
        else if (ends_with("s")) replace_suffix("s", "");
    }

    void step1b() {
        if (ends_with("eed")) {
            if (measure(stem_len("eed")) > 0) replace_suffix("eed", "ee");
            return;
        }
        bool stripped = false;
        for (std::string_view suffix : {std::string_view("ed"), std::string_view("ing")}) {
            if (ends_with(suffix) && has_vowel(stem_len(suffix))) {
                replace_suffix(suffix, "");
                stripped = true;
                break;
            }
        }
        if (!stripped) return;

        if (ends_with("at") || ends_with("bl") || ends_with("iz")) {
            w_.push_back('e');
        } else if (double_consonant(w_.size())) {
            char last = w_.back();
            if (last != 'l' && last != 's' && last != 'z') w_.pop_back();
        } else if (measure(w_.size()) == 1 && cvc(w_.size())) {
            w_.push_back('e');
        }
    }

    void step1c() {
        if (ends_with("y") && has_vowel(stem_len("y"))) w_.back() = 'i';
    }

    void step2() {
        static constexpr std::array<Rule, 20> rules{{
            {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},
            {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},
            {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
            {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
            {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
        }};
        if (const Rule* r = longest_match(rules); r && measure(stem_len(r->suffix)) > 0) {
            replace_suffix(r->suffix, r->replacement);
        }
    }

    void step3() {
        static constexpr std::array<Rule, 7> rules{{
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
            {"ical", "ic"},  {"ful", ""},   {"ness", ""},
        }};
        if (const Rule* r = longest_match(rules); r && measure(stem_len(r->suffix)) > 0) {
            replace_suffix(r->suffix, r->replacement);
        }
    }

    void step4() {
        static constexpr std::array<Rule, 19> rules{{
            {"al", ""},  {"ance", ""}, {"ence", ""}, {"er", ""},   {"ic", ""},
            {"able", ""}, {"ible", ""}, {"ant", ""},  {"ement", ""}, {"ment", ""},
            {"ent", ""}, {"ion", ""},  {"ou", ""},   {"ism", ""},  {"ate", ""},
            {"iti", ""}, {"ous", ""},  {"ive", ""},  {"ize", ""},
        }};
        const Rule* r = longest_match(rules);
        if (!r) return;
        std::size_t len = stem_len(r->suffix);
        if (measure(len) <= 1) return;
        if (r->suffix == "ion" && (len == 0 || (w_[len - 1] != 's' && w_[len - 1] != 't'))) return;
        w_.resize(len);
    }

    void step5a() {
        if (!ends_with("e")) return;
        std::size_t len = stem_len("e");
        int m = measure(len);
        if (m > 1 || (m == 1 && !cvc(len))) w_.pop_back();
    }

    void step5b() {
        if (measure(w_.size()) > 1 && double_consonant(w_.size()) && w_.back() == 'l') w_.pop_back();
    }

    std::string w_;
};

}  // namespace

std::string porter_stem(std::string_view word) {
    if (word.empty()) return {};
    return Stemmer(word).run();
}

}  // namespace fuzzydoc
