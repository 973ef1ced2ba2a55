#include "ngonzeta/word.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "ngonzeta/wordpoly.hpp"

namespace ngonzeta {

Word word_from_composition(const std::vector<unsigned>& m) {
    if (m.empty()) throw std::invalid_argument("word_from_composition: empty composition");
    Word w;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (*it == 0) throw std::invalid_argument("word_from_composition: zero part");
        w = Word::concat(w, Word::power(0, *it - 1));
        w = w.append(1);
    }
    return w;
}

std::vector<unsigned> composition_from_word(Word w) {
    if (w.empty() || w.back() != 1) throw std::invalid_argument("composition_from_word: word must end in x1");
    std::vector<unsigned> blocks;  // left-to-right block sizes m_r, ..., m_1
    unsigned run = 0;
    for (unsigned i = 0; i < w.size(); ++i) {
        if (w.letter(i) == 0) {
            ++run;
        } else {
            blocks.push_back(run + 1);
            run = 0;
        }
    }
    return {blocks.rbegin(), blocks.rend()};
}

namespace {

using ShuffleRow = std::vector<std::pair<Word, long long>>;

ShuffleRow shuffle_compute(Word u, Word v) {
    if (u.empty()) return {{v, 1}};
    if (v.empty()) return {{u, 1}};
    // Recurse on first letters through the memoized entry point.
    std::unordered_map<std::uint64_t, long long> acc;
    for (const auto& [w, c] : shuffle_words(u.tail(), v)) acc[w.prepend(u.front()).key()] += c;
    for (const auto& [w, c] : shuffle_words(u, v.tail())) acc[w.prepend(v.front()).key()] += c;
    ShuffleRow row;
    row.reserve(acc.size());
    for (const auto& [key, c] : acc) {
        row.emplace_back(Word::from_bits(key & ((std::uint64_t(1) << Word::kMaxLen) - 1),
                                         static_cast<unsigned>(key >> Word::kMaxLen)),
                         c);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

}  // namespace

const ShuffleRow& shuffle_words(Word u, Word v) {
    if (v < u) std::swap(u, v);  // shuffle is commutative
    static std::shared_mutex mu;
    static std::unordered_map<std::pair<Word, Word>, ShuffleRow, WordPairHash> memo;
    {
        std::shared_lock lock(mu);
        auto it = memo.find({u, v});
        if (it != memo.end()) return it->second;
    }
    ShuffleRow row = shuffle_compute(u, v);  // no lock held while recursing
    std::unique_lock lock(mu);
    return memo.emplace(std::make_pair(u, v), std::move(row)).first->second;
}

}  // namespace ngonzeta
