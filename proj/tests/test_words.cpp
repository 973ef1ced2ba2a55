#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>

#include "ngonzeta/word.hpp"
#include "ngonzeta/wordpoly.hpp"

using namespace ngonzeta;

namespace {

// Independent shuffle oracle: enumerate every interleaving explicitly.
void enumerate_interleavings(const std::string& u, const std::string& v, std::string& cur,
                             std::map<std::string, long long>& out) {
    if (u.empty() && v.empty()) {
        out[cur]++;
        return;
    }
    if (!u.empty()) {
        cur.push_back(u[0]);
        enumerate_interleavings(u.substr(1), v, cur, out);
        cur.pop_back();
    }
    if (!v.empty()) {
        cur.push_back(v[0]);
        enumerate_interleavings(u, v.substr(1), cur, out);
        cur.pop_back();
    }
}

std::map<std::string, long long> shuffle_oracle(const std::string& u, const std::string& v) {
    std::map<std::string, long long> out;
    std::string cur;
    enumerate_interleavings(u, v, cur, out);
    return out;
}

std::vector<std::string> all_words_up_to(unsigned maxlen) {
    std::vector<std::string> ws = {""};
    for (unsigned len = 1; len <= maxlen; ++len) {
        for (unsigned b = 0; b < (1u << len); ++b) {
            std::string s;
            for (unsigned i = 0; i < len; ++i) s.push_back(((b >> (len - 1 - i)) & 1) ? '1' : '0');
            ws.push_back(s);
        }
    }
    return ws;
}

}  // namespace

TEST_CASE("text round trip and structure") {
    CHECK(Word().text() == "e");
    CHECK(Word::from_text("e").empty());
    for (const auto& s : all_words_up_to(6)) {
        if (s.empty()) continue;
        Word w = Word::from_text(s);
        CHECK(w.text() == s);
        CHECK(w.size() == s.size());
        CHECK(w.front() == s.front() - '0');
        CHECK(w.back() == s.back() - '0');
        CHECK(w.tail().text() == (s.size() == 1 ? std::string("e") : s.substr(1)));
        CHECK(w.body().text() == (s.size() == 1 ? std::string("e") : s.substr(0, s.size() - 1)));
        CHECK(w.convergent() == (s.size() >= 2 && s.front() == '0' && s.back() == '1'));
    }
}

TEST_CASE("duality: reverse plus letter swap") {
    CHECK("001"_w.dual() == "011"_w);
    CHECK("01"_w.dual() == "01"_w);
    CHECK("0011"_w.dual() == "0011"_w);
    CHECK("0001"_w.dual() == "0111"_w);
    CHECK(Word().dual() == Word());
    for (const auto& s : all_words_up_to(6)) {
        if (s.empty()) continue;
        Word w = Word::from_text(s);
        CHECK(w.dual().dual() == w);
        CHECK(w.dual().size() == w.size());
        if (w.convergent()) CHECK(w.dual().convergent());
    }
}

TEST_CASE("canonical order: by length then lex with x0 < x1") {
    auto ws = all_words_up_to(5);
    // The generator emits exactly the canonical order.
    for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
        Word a = Word::from_text(ws[i].empty() ? "e" : ws[i]);
        Word b = Word::from_text(ws[i + 1].empty() ? "e" : ws[i + 1]);
        CHECK(a < b);
        CHECK(!(b < a));
    }
}

TEST_CASE("concat, power, prepend, append") {
    Word a = "01"_w, b = "110"_w;
    CHECK(Word::concat(a, b).text() == "01110");
    CHECK(Word::power(0, 3).text() == "000");
    CHECK(Word::power(1, 0).text() == "e");
    CHECK(a.prepend(1).text() == "101");
    CHECK(a.append(0).text() == "010");
    CHECK(("0011"_w).leading_ones() == 0);
    CHECK(("1101"_w).leading_ones() == 2);
    CHECK(("0100"_w).trailing_zeros() == 2);
}

TEST_CASE("composition encoding: leftmost block is the last entry") {
    // Li_{m1,...,mr} <-> x0^{mr-1} x1 ... x0^{m1-1} x1
    CHECK(word_from_composition({2}).text() == "01");
    CHECK(word_from_composition({1}).text() == "1");
    CHECK(word_from_composition({3, 5}).text() == "00001001");
    CHECK(word_from_composition({1, 2}).text() == "011");
    CHECK(word_from_composition({2, 1}).text() == "101");
    for (const auto& s : all_words_up_to(7)) {
        if (s.empty() || s.back() != '1') continue;
        Word w = Word::from_text(s);
        CHECK(word_from_composition(composition_from_word(w)) == w);
    }
    CHECK_THROWS(word_from_composition({}));
    CHECK_THROWS(composition_from_word("010"_w));
}

TEST_CASE("shuffle matches the interleaving oracle") {
    auto ws = all_words_up_to(4);
    for (const auto& su : ws) {
        for (const auto& sv : ws) {
            if (su.size() + sv.size() > 7) continue;
            Word u = Word::from_text(su.empty() ? "e" : su);
            Word v = Word::from_text(sv.empty() ? "e" : sv);
            auto expect = shuffle_oracle(su, sv);
            const auto& got = shuffle_words(u, v);
            REQUIRE(got.size() == expect.size());
            for (const auto& [w, c] : got) {
                REQUIRE(expect.count(w.text() == "e" ? "" : w.text()));
                CHECK(expect.at(w.text() == "e" ? "" : w.text()) == c);
            }
        }
    }
}

TEST_CASE("shuffle coefficient mass is binomial") {
    Word u = "0101"_w, v = "00111"_w;
    long long total = 0;
    for (const auto& [w, c] : shuffle_words(u, v)) {
        CHECK(w.size() == u.size() + v.size());
        total += c;
    }
    CHECK(total == 126);  // C(9,4)
}

TEST_CASE("WordPoly ring axioms (shuffle algebra)") {
    using P = WordPoly<Rat>;
    P a(Word::from_text("01"));
    P b = P(Word::from_text("1")) * Rat(3) - P(Word::from_text("001")) * Rat(1, 2);
    P c(Word::from_text("10"), Rat(-2));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * P::one()) == a);
    CHECK((a - a).is_zero());
    CHECK(a.coeff("01"_w) == Rat(1));
    CHECK(a.coeff("10"_w) == Rat(0));
}

TEST_CASE("WordPoly known product: x1 * x1 = 2 x1x1") {
    WordPoly<Rat> x1(Word::from_text("1"));
    auto p = x1 * x1;
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms()[0].first == "11"_w);
    CHECK(p.terms()[0].second == Rat(2));
}

TEST_CASE("WordPoly prepend and filters") {
    WordPoly<Rat> p = WordPoly<Rat>("01"_w) + WordPoly<Rat>("0011"_w, Rat(5));
    auto q = p.prepend(0);
    CHECK(q.coeff("001"_w) == Rat(1));
    CHECK(q.coeff("00011"_w) == Rat(5));
    CHECK(p.max_length() == 4);
    CHECK(p.filter_length(2).coeff("0011"_w) == Rat(0));
    CHECK(p.filter_length(2).coeff("01"_w) == Rat(1));
}
