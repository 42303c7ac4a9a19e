#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "ss/error.hpp"
#include "ss/exact/factor.hpp"
#include "ss/exact/matrix.hpp"
#include "ss/proprify/proprify.hpp"

using namespace ss;

namespace {

const char* kFib = "a->ab b->a";
const char* kPenta = "1->213 2->4 3->5 4->1 5->21";
const char* kTorus = "1->2 2->3 3->14 4->5 5->1425";
const char* kGolden4 = "a->Ab b->A A->aB B->a";
const char* kSqrt2 = "a->abdd b->bc c->d d->a";
const char* kExt3b = "1->16 2->122 3->12 4->3 5->124 6->15";

std::vector<std::string> return_word_strings(const Substitution& s, const ReturnWordSet& rw) {
    std::vector<std::string> out;
    for (const auto& w : rw.words) out.push_back(s.word_str(w));
    return out;
}

std::vector<std::string> xi_image_strings(const Substitution& xi) {
    std::vector<std::string> out;
    for (const auto& img : xi.images) out.push_back(xi.word_str(img, " "));
    return out;
}

}  // namespace

TEST_CASE("fibonacci proprification, everything frozen") {
    Substitution s = Substitution::parse(kFib);
    Proprification pr = proprify(s);

    CHECK(pr.power_k == 1);
    CHECK(pr.returns.anchor == 0);
    CHECK(return_word_strings(s, pr.returns) == std::vector<std::string>{"ab", "a"});
    CHECK(pr.returns.seed() == std::vector<int>{0, 1});
    CHECK(pr.tau.rules_str() == "a -> ab, b -> a");
    CHECK(xi_image_strings(pr.xi) == std::vector<std::string>{"0 1", "2", "0 1"});
    CHECK(pr.letter_map == std::vector<int>{0, 1, 0});
    CHECK(pr.left_proper_power == 2);
    CHECK(pr.eigen_power_witness == 1);
    CHECK(primitivity(pr.xi).witness_power == 3);
    CHECK(charpoly(pr.xi.incidence()) == IntPoly{0, 1} * IntPoly{-1, -1, 1});
}

TEST_CASE("five-letter example: return words, tau, xi as printed") {
    Substitution s = Substitution::parse(kPenta);
    Proprification pr = proprify(s);

    CHECK(pr.power_k == 3);
    CHECK(pr.returns.anchor == 0);
    CHECK(return_word_strings(s, pr.returns) == std::vector<std::string>{"142", "1352", "13"});
    CHECK(pr.tau.rules_str() == "a -> ababc, b -> abacabc, c -> abac");
    CHECK(is_left_proper(pr.tau));
    CHECK(is_right_proper(pr.tau));

    CHECK(pr.xi.alphabet_size() == 9);
    CHECK(xi_image_strings(pr.xi) ==
          std::vector<std::string>{"0 1 2", "3 4 5 6", "0 1 2 3 4 5 6 7 8", "0 1 2", "3 4 5 6",
                                   "0 1 2", "7 8 0 1 2 3 4 5 6 7 8", "0 1 2",
                                   "3 4 5 6 0 1 2 7 8"});
    CHECK(pr.letter_map == std::vector<int>{0, 3, 1, 0, 2, 4, 1, 0, 2});
    CHECK_FALSE(is_left_proper(pr.xi));
    CHECK(is_left_proper(pr.xi.power(2)));
    CHECK(pr.left_proper_power == 2);
    CHECK(pr.eigen_power_witness == 3);
    CHECK(primitivity(pr.xi).witness_power == 2);
    CHECK(charpoly(pr.xi.incidence()) == IntPoly{0, 1}.pow(6) * IntPoly{-1, -2, -5, 1});
}

TEST_CASE("torus fixture proprification") {
    Substitution s = Substitution::parse(kTorus);
    Proprification pr = proprify(s);

    CHECK(pr.power_k == 3);
    CHECK(return_word_strings(s, pr.returns) ==
          std::vector<std::string>{"14253", "1425253", "1425"});
    CHECK(pr.tau.rules_str() == "a -> abcaac, b -> abcabcaac, c -> abcac");
    CHECK(pr.xi.alphabet_size() == 16);
    CHECK(xi_image_strings(pr.xi) ==
          std::vector<std::string>{"0 1 2 3 4", "5 6 7 8 9 10 11", "12 13 14 15", "0 1 2 3 4",
                                   "0 1 2 3 4 12 13 14 15", "0 1 2 3 4", "5 6 7 8 9 10 11",
                                   "12 13 14 15", "0 1 2 3 4", "5 6 7 8 9 10 11", "12 13 14 15",
                                   "0 1 2 3 4 0 1 2 3 4 12 13 14 15", "0 1 2 3 4",
                                   "5 6 7 8 9 10 11", "12 13 14 15", "0 1 2 3 4 12 13 14 15"});
    CHECK(pr.left_proper_power == 2);
    CHECK(pr.eigen_power_witness == 3);
    CHECK(primitivity(pr.xi).witness_power == 2);
    CHECK(charpoly(pr.xi.incidence()) == IntPoly{0, 1}.pow(13) * IntPoly{-1, 5, -7, 1});
}

TEST_CASE("four-letter golden fixture proprification") {
    Substitution s = Substitution::parse(kGolden4);
    Proprification pr = proprify(s);

    CHECK(pr.power_k == 4);
    CHECK(return_word_strings(s, pr.returns) ==
          std::vector<std::string>{"aBAAbAb", "aAb", "a", "aBAb", "aB", "aBAAb", "aBA"});
    CHECK(pr.tau.rules_str() ==
          "a -> abcdcefcegacegf, b -> abcegf, c -> ac, d -> abcdcegf, e -> abce, "
          "f -> abcdcefcegf, g -> abcdceg");
    CHECK(pr.xi.alphabet_size() == 25);

    std::vector<std::string> xi = xi_image_strings(pr.xi);
    CHECK(xi[0] == "0 1 2 3 4 5 6");
    CHECK(xi[6] ==
          "17 18 19 20 21 10 15 16 22 23 24 0 1 2 3 4 5 6 10 15 16 22 23 24 17 18 19 20 21");
    CHECK(xi[10] == "0 1 2 3 4 5 6 10");
    CHECK(xi[21] == "10 15 16 17 18 19 20 21 10 15 16 22 23 24 17 18 19 20 21");
    CHECK(xi[24] == "10 11 12 13 14 10 15 16 22 23 24");

    CHECK(pr.left_proper_power == 2);
    CHECK(pr.eigen_power_witness == 4);
    CHECK(primitivity(pr.xi).witness_power == 3);
    CHECK(charpoly(pr.xi.incidence()) ==
          IntPoly{0, 1}.pow(18) * IntPoly{-1, 1}.pow(3) * IntPoly{1, -7, 1} * IntPoly{1, 1, 1});
}

TEST_CASE("four-letter quartic fixture proprification") {
    Substitution s = Substitution::parse(kSqrt2);
    Proprification pr = proprify(s);

    CHECK(pr.power_k == 2);
    CHECK(return_word_strings(s, pr.returns) ==
          std::vector<std::string>{"abddbc", "a", "abcd", "abdd", "abddbcd"});
    CHECK(pr.tau.rules_str() ==
          "a -> abcdeb, b -> abb, c -> abcbd, d -> abcdd, e -> abcdebd");
    CHECK(pr.xi.alphabet_size() == 22);

    std::vector<std::string> xi = xi_image_strings(pr.xi);
    CHECK(xi[0] == "0 1 2 3 4 5");
    CHECK(xi[6] == "0 1 2 3 4 5 6 6");
    CHECK(xi[10] == "6 11 12 13 14");
    CHECK(xi[14] == "11 12 13 14 11 12 13 14");
    CHECK(xi[21] == "11 12 13 14");

    CHECK(pr.left_proper_power == 2);
    CHECK(pr.eigen_power_witness == 2);
    CHECK(primitivity(pr.xi).witness_power == 3);
    CHECK(charpoly(pr.xi.incidence()) ==
          IntPoly{0, 1}.pow(17) * IntPoly{-1, 1} * IntPoly{1, -2, 7, -6, 1});
}

TEST_CASE("six-letter cubic-pair fixture proprification") {
    Substitution s = Substitution::parse(kExt3b);
    Proprification pr = proprify(s);

    CHECK(pr.power_k == 2);
    CHECK(return_word_strings(s, pr.returns) ==
          std::vector<std::string>{"16", "15", "124", "1223", "122", "12"});
    CHECK(pr.tau.rules_str() ==
          "a -> abac, b -> abad, c -> abaeef, d -> abaeeaeeae, e -> abaeeaee, f -> abaee");
    CHECK(pr.xi.alphabet_size() == 16);
    CHECK(xi_image_strings(pr.xi) ==
          std::vector<std::string>{
              "0 1", "2 3 0 1 4 5 6", "0 1", "2 3 0 1 7 8 9 10", "0 1", "2 3",
              "0 1 11 12 13 11 12 13 14 15", "0 1", "2 3", "0 1",
              "11 12 13 11 12 13 0 1 11 12 13 11 12 13 0 1 11 12 13", "0 1", "2 3",
              "0 1 11 12 13 11 12 13 0 1 11 12 13 11 12 13", "0 1", "2 3 0 1 11 12 13 11 12 13"});
    CHECK(pr.left_proper_power == 2);
    CHECK(pr.eigen_power_witness == 2);
    CHECK(primitivity(pr.xi).witness_power == 4);
    CHECK(charpoly(pr.xi.incidence()) ==
          IntPoly{0, 1}.pow(10) * IntPoly{-1, -2, -5, 1} * IntPoly{-1, 1, -2, 1});
}

TEST_CASE("degenerate and out-of-scope inputs") {
    CHECK_THROWS_AS(proprify(Substitution::parse("a->aa")), ScopeError);
    CHECK_THROWS_AS(proprify(Substitution::parse("a->ab b->ab")), ScopeError);
    CHECK_THROWS_AS(proprify(Substitution::parse("a->ab b->b")), ScopeError);
    CHECK_THROWS_AS(return_words(Substitution::parse("a->aa")), ScopeError);
}

TEST_CASE("pipeline on an already left-proper input") {
    Substitution tau = Substitution::parse("a->ababc b->abacabc c->abac");
    Proprification pr = proprify(tau);
    CHECK(pr.power_k == 1);
    CHECK(pr.left_proper_power <= 2);
    CHECK(primitivity(pr.xi).primitive);
}

TEST_CASE("letter map flattens the return words") {
    for (const char* rules : {kFib, kPenta, kTorus, kGolden4, kSqrt2, kExt3b}) {
        Proprification pr = proprify(Substitution::parse(rules));
        std::vector<int> flat;
        for (const auto& w : pr.returns.words) flat.insert(flat.end(), w.begin(), w.end());
        CHECK(pr.letter_map == flat);
    }
}

TEST_CASE("xi image lengths match tau images spelled out") {
    for (const char* rules : {kFib, kPenta, kTorus, kGolden4, kSqrt2, kExt3b}) {
        Proprification pr = proprify(Substitution::parse(rules));
        const auto& words = pr.returns.words;
        size_t b = 0;
        for (size_t i = 0; i < words.size(); ++i) {
            const auto& tr = pr.tau.images[i];
            for (size_t p = 1; p <= words[i].size(); ++p, ++b) {
                size_t expect = 0;
                if (p < words[i].size()) {
                    expect = words[static_cast<size_t>(tr[p - 1])].size();
                } else {
                    for (size_t q = words[i].size() - 1; q < tr.size(); ++q)
                        expect += words[static_cast<size_t>(tr[q])].size();
                }
                CHECK(pr.xi.images[b].size() == expect);
            }
        }
        CHECK(b == static_cast<size_t>(pr.xi.alphabet_size()));
    }
}

TEST_CASE("return words re-spell the fixed point") {
    for (const char* rules : {kFib, kPenta, kTorus, kGolden4, kSqrt2, kExt3b}) {
        Substitution s = Substitution::parse(rules);
        Proprification pr = proprify(s);
        Substitution p = s.power(pr.power_k);

        const size_t kLen = 10000;
        std::vector<int> u = fixed_point_prefix(p, {pr.returns.anchor, 1}, kLen);

        FixedPointSeed tau_seed = fixed_point_seed(pr.tau);
        CHECK(tau_seed.power == 1);
        CHECK(tau_seed.letter == 0);
        size_t tau_len = 64;
        std::vector<int> respelled;
        while (respelled.size() < kLen) {
            respelled.clear();
            std::vector<int> v = fixed_point_prefix(pr.tau, tau_seed, tau_len);
            for (int r : v) {
                const auto& w = pr.returns.words[static_cast<size_t>(r)];
                respelled.insert(respelled.end(), w.begin(), w.end());
                if (respelled.size() >= kLen) break;
            }
            tau_len *= 2;
        }
        respelled.resize(kLen);
        CHECK(respelled == u);
    }
}

TEST_CASE("xi fixed point maps onto the original fixed point") {
    for (const char* rules : {kFib, kPenta, kTorus, kGolden4, kSqrt2, kExt3b}) {
        Substitution s = Substitution::parse(rules);
        Proprification pr = proprify(s);
        Substitution p = s.power(pr.power_k);

        const size_t kLen = 10000;
        FixedPointSeed xi_seed = fixed_point_seed(pr.xi);
        CHECK(xi_seed.power == 1);
        CHECK(xi_seed.letter == 0);
        std::vector<int> w = fixed_point_prefix(pr.xi, xi_seed, kLen);
        std::vector<int> mapped;
        mapped.reserve(kLen);
        for (int b : w) mapped.push_back(pr.letter_map[static_cast<size_t>(b)]);
        CHECK(mapped == fixed_point_prefix(p, {pr.returns.anchor, 1}, kLen));
    }
}

TEST_CASE("return_substitution agrees with the proprification record") {
    Substitution s = Substitution::parse(kPenta);
    ReturnWordSet rw = return_words(s);
    CHECK(rw.power == 3);
    Substitution tau = return_substitution(s, rw);
    CHECK(tau.rules_str() == "a -> ababc, b -> abacabc, c -> abac");
    XiSubstitution xs = xi_substitution(tau, rw);
    CHECK(xs.xi.alphabet_size() == 9);
    CHECK(xs.letter_map == std::vector<int>{0, 3, 1, 0, 2, 4, 1, 0, 2});
}
