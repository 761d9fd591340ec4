#include "graphvol/word.hpp"

#include <algorithm>
#include <utility>

namespace graphvol {

Alphabet::Alphabet(std::initializer_list<char> symbols)
    : Alphabet(std::vector<char>(symbols)) {}

Alphabet::Alphabet(std::vector<char> symbols) : symbols_(std::move(symbols)) {
    std::sort(symbols_.begin(), symbols_.end());
    auto dup = std::unique(symbols_.begin(), symbols_.end());
    if (dup != symbols_.end())
        throw Error("unknown-generator", "duplicate symbol in alphabet");
    if (symbols_.empty())
        throw Error("unknown-generator", "alphabet must not be empty");
}

const Alphabet& Alphabet::xyz() {
    static const Alphabet a{'x', 'y', 'z'};
    return a;
}

bool Alphabet::contains(char symbol) const {
    return std::binary_search(symbols_.begin(), symbols_.end(), symbol);
}

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back().generator == l.generator && out.back().sign == -l.sign)
        out.pop_back();
    else
        out.push_back(l);
}

} // namespace

Word::Word(std::span<const Letter> raw) {
    letters_.reserve(raw.size());
    for (Letter l : raw) push_reduced(letters_, l);
}

Word::Word(std::initializer_list<Letter> raw)
    : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_back(it->inverse());
    Word w;
    w.letters_ = std::move(out); // reversal of a reduced word is reduced
    return w;
}

std::string Word::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += letters_[i].generator;
        if (letters_[i].sign < 0) out += '\'';
    }
    return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
    std::vector<Letter> out = lhs.letters_;
    out.reserve(out.size() + rhs.letters_.size());
    for (Letter l : rhs.letters_) push_reduced(out, l);
    Word w;
    w.letters_ = std::move(out);
    return w;
}

Word reduce(std::span<const Letter> raw, const Alphabet& alphabet) {
    for (Letter l : raw) {
        if (!alphabet.contains(l.generator))
            throw Error("unknown-generator",
                        std::string("generator '") + l.generator + "' is not in the alphabet");
        if (l.sign != 1 && l.sign != -1)
            throw Error("unknown-generator", "letter sign must be +1 or -1");
    }
    return Word(raw);
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    std::vector<Letter> raw;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(msg, 1, static_cast<int>(i) + 1);
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '*') {
            ++i;
            continue;
        }
        if (!alphabet.contains(c))
            throw Error("unknown-generator",
                        std::string("generator '") + c + "' is not in the alphabet");
        ++i;
        int sign = 1;
        if (i < text.size() && text[i] == '\'') {
            sign = -1;
            ++i;
        } else if (i < text.size() && text[i] == '^') {
            if (text.substr(i, 3) == "^-1") {
                sign = -1;
                i += 3;
            } else {
                throw fail("expected ^-1 after '^'");
            }
        }
        raw.push_back({c, sign});
    }
    return Word(raw);
}

Word cyclic_reduce(const Word& w) {
    const auto& ls = w.letters();
    std::size_t lo = 0, hi = ls.size();
    while (hi - lo >= 2 && ls[lo].generator == ls[hi - 1].generator &&
           ls[lo].sign == -ls[hi - 1].sign) {
        ++lo;
        --hi;
    }
    return Word(std::span<const Letter>(ls.data() + lo, hi - lo));
}

bool conjugate_test(const Word& u, const Word& v) {
    Word cu = cyclic_reduce(u);
    Word cv = cyclic_reduce(v);
    if (cu.size() != cv.size()) return false;
    if (cu.empty()) return true;
    // Doubling trick: cv is a rotation of cu iff cv occurs in cu+cu.
    const auto& a = cu.letters();
    const auto& b = cv.letters();
    const std::size_t n = a.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i)
            match = a[(shift + i) % n] == b[i];
        if (match) return true;
    }
    return false;
}

} // namespace graphvol
