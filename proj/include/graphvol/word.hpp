#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphvol/errors.hpp"

namespace graphvol {

// A signed generator letter. `sign` is +1 or -1.
struct Letter {
    char generator;
    int sign;

    Letter inverse() const { return {generator, -sign}; }
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Declared set of generator symbols; words are interpreted relative to one.
class Alphabet {
public:
    Alphabet(std::initializer_list<char> symbols);
    explicit Alphabet(std::vector<char> symbols);

    // The {x, y, z} alphabet used by the tangle-group verification suite.
    static const Alphabet& xyz();

    bool contains(char symbol) const;
    const std::vector<char>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<char> symbols_;
};

// A freely reduced word. The reduction invariant is enforced on construction;
// raw letter sequences only exist transiently inside reduce().
class Word {
public:
    Word() = default;
    explicit Word(std::span<const Letter> raw);
    Word(std::initializer_list<Letter> raw);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;

    // Canonical text form, e.g. "x y' x' z".
    std::string str() const;

    // Reduced concatenation.
    friend Word operator*(const Word& lhs, const Word& rhs);

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

// Freely reduces a raw letter sequence, validating symbols against the
// alphabet. Throws Error("unknown-generator") on a symbol outside it.
Word reduce(std::span<const Letter> raw, const Alphabet& alphabet);

// Parses a word from text. Letters are single symbols from the alphabet,
// inverses are marked by ' or ^-1, concatenation is juxtaposition or '*',
// whitespace is ignored. Example: "x y' x' z' x y x'".
Word parse_word(std::string_view text, const Alphabet& alphabet);

// Strips matching first/last letters until the word is cyclically reduced.
Word cyclic_reduce(const Word& w);

// True iff u and v are conjugate in the ambient free group: cyclic
// reductions must be rotations of one another.
bool conjugate_test(const Word& u, const Word& v);

} // namespace graphvol
