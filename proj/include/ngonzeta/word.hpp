#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ngonzeta {

// A word over the alphabet {x0, x1}, stored packed: the leftmost letter sits in
// the highest used bit, so for equal lengths comparing `bits` compares words
// lexicographically with x0 < x1.  The canonical order used everywhere is
// (length, then lex).  Empty word = e.
class Word {
  public:
    static constexpr unsigned kMaxLen = 56;

    constexpr Word() = default;

    static Word from_bits(std::uint64_t bits, unsigned len) {
        if (len > kMaxLen) throw std::invalid_argument("Word: length overflow");
        Word w;
        w.bits_ = bits;
        w.len_ = len;
        return w;
    }

    // Text form: "e" for the empty word, otherwise a '0'/'1' string.
    static Word from_text(std::string_view s) {
        if (s == "e") return Word();
        Word w;
        for (char c : s) {
            if (c != '0' && c != '1') throw std::invalid_argument("Word: bad letter");
            w = w.append(c - '0');
        }
        return w;
    }

    std::string text() const {
        if (empty()) return "e";
        std::string s(len_, '0');
        for (unsigned i = 0; i < len_; ++i) s[i] = static_cast<char>('0' + letter(i));
        return s;
    }

    constexpr unsigned size() const { return len_; }
    constexpr bool empty() const { return len_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }

    // Letter at position i, counted from the left, 0-indexed.
    constexpr int letter(unsigned i) const { return static_cast<int>((bits_ >> (len_ - 1 - i)) & 1u); }
    constexpr int front() const { return letter(0); }
    constexpr int back() const { return static_cast<int>(bits_ & 1u); }

    Word prepend(int a) const {
        if (len_ + 1 > kMaxLen) throw std::length_error("Word: too long");
        Word w;
        w.bits_ = bits_ | (static_cast<std::uint64_t>(a & 1) << len_);
        w.len_ = len_ + 1;
        return w;
    }

    Word append(int a) const {
        if (len_ + 1 > kMaxLen) throw std::length_error("Word: too long");
        Word w;
        w.bits_ = (bits_ << 1) | static_cast<std::uint64_t>(a & 1);
        w.len_ = len_ + 1;
        return w;
    }

    // Drop the first letter (pre: nonempty).
    Word tail() const {
        Word w;
        w.len_ = len_ - 1;
        w.bits_ = bits_ & ((std::uint64_t(1) << w.len_) - 1);
        return w;
    }

    // Drop the last letter (pre: nonempty).
    Word body() const {
        Word w;
        w.len_ = len_ - 1;
        w.bits_ = bits_ >> 1;
        return w;
    }

    static Word concat(Word u, Word v) {
        if (u.len_ + v.len_ > kMaxLen) throw std::length_error("Word: too long");
        Word w;
        w.len_ = u.len_ + v.len_;
        w.bits_ = (u.bits_ << v.len_) | v.bits_;
        return w;
    }

    // a^n for a single letter a.
    static Word power(int a, unsigned n) {
        Word w;
        for (unsigned i = 0; i < n; ++i) w = w.append(a);
        return w;
    }

    // Convergent words start with x0 and end with x1.
    constexpr bool convergent() const { return len_ >= 2 && front() == 0 && back() == 1; }

    // Duality involution: reverse the word and swap the letters (t -> 1-t on
    // the iterated integral).  Maps convergent words to convergent words and
    // preserves length.
    Word dual() const {
        Word w;
        for (unsigned i = 0; i < len_; ++i) w = w.append(1 - letter(len_ - 1 - i));
        return w;
    }

    // Number of leading x1 letters.
    unsigned leading_ones() const {
        unsigned n = 0;
        while (n < len_ && letter(n) == 1) ++n;
        return n;
    }

    // Number of trailing x0 letters.
    unsigned trailing_zeros() const {
        unsigned n = 0;
        while (n < len_ && (bits_ >> n & 1u) == 0) ++n;
        return n;
    }

    // Packed key realizing the canonical order as integer comparison.
    constexpr std::uint64_t key() const { return (static_cast<std::uint64_t>(len_) << kMaxLen) | bits_; }

    friend constexpr bool operator==(Word a, Word b) { return a.len_ == b.len_ && a.bits_ == b.bits_; }
    friend constexpr bool operator!=(Word a, Word b) { return !(a == b); }
    friend constexpr bool operator<(Word a, Word b) { return a.key() < b.key(); }
    friend constexpr bool operator>(Word a, Word b) { return b < a; }
    friend constexpr bool operator<=(Word a, Word b) { return !(b < a); }

  private:
    std::uint64_t bits_ = 0;
    unsigned len_ = 0;
};

inline Word operator""_w(const char* s, std::size_t n) { return Word::from_text(std::string_view(s, n)); }

// Word for Li_{m1,...,mr}: x0^{mr-1} x1 ... x0^{m1-1} x1 (leftmost block
// corresponds to the last composition entry).
Word word_from_composition(const std::vector<unsigned>& m);

// Inverse of word_from_composition (pre: w nonempty and ends with x1).
std::vector<unsigned> composition_from_word(Word w);

struct WordHash {
    std::size_t operator()(Word w) const { return std::hash<std::uint64_t>()(w.key()); }
};

struct WordPairHash {
    std::size_t operator()(const std::pair<Word, Word>& p) const {
        std::uint64_t a = p.first.key(), b = p.second.key();
        a ^= b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
        return std::hash<std::uint64_t>()(a);
    }
};

}  // namespace ngonzeta
