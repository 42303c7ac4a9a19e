#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ss/error.hpp"
#include "ss/substitution/substitution.hpp"

using namespace ss;

namespace {

const char* kFib = "a->ab b->a";
const char* kPenta = "1->213 2->4 3->5 4->1 5->21";
const char* kWm = "1->15 2->2122 3->122 4->13 5->14122";
const char* kSqrt2 = "a->abdd b->bc c->d d->a";
const char* kExt3b = "1->16 2->122 3->12 4->3 5->124 6->15";


std::vector<int> letters_of(const Substitution& s, const std::string& txt) {
    std::vector<int> out;
    for (char ch : txt) {
        std::string tok(1, ch);
        int found = -1;
        for (int i = 0; i < s.alphabet_size(); ++i)
            if (s.letters[static_cast<size_t>(i)] == tok) found = i;
        REQUIRE(found >= 0);
        out.push_back(found);
    }
    return out;
}

std::vector<int> random_word(std::mt19937& rng, int alphabet, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> pick(0, alphabet - 1);
    std::vector<int> w(static_cast<size_t>(len(rng)));
    for (int& x : w) x = pick(rng);
    return w;
}

}  // namespace

TEST_CASE("parsing: compact, spaced, multi-character, JSON") {
    Substitution fib = Substitution::parse(kFib);
    CHECK(fib.letters == std::vector<std::string>{"a", "b"});
    CHECK(fib.images == std::vector<std::vector<int>>{{0, 1}, {0}});

    Substitution spaced = Substitution::parse("a -> ab b -> a");
    CHECK(spaced.images == fib.images);

    Substitution lines = Substitution::parse("a->ab\nb->a");
    CHECK(lines.images == fib.images);

    Substitution commas = Substitution::parse("a->ab, b->a;");
    CHECK(commas.images == fib.images);

    Substitution penta = Substitution::parse(kPenta);
    CHECK(penta.letters == std::vector<std::string>{"1", "2", "3", "4", "5"});
    CHECK(penta.images[0] == std::vector<int>{1, 0, 2});
    CHECK(penta.images[4] == std::vector<int>{1, 0});

    Substitution multi = Substitution::parse("ab->ab cd, cd->ab");
    CHECK(multi.letters == std::vector<std::string>{"ab", "cd"});
    CHECK(multi.images == std::vector<std::vector<int>>{{0, 1}, {0}});

    Substitution js = Substitution::parse(R"({"rules": {"a": ["a","b"], "b": ["a"]}})");
    CHECK(js.letters == fib.letters);
    CHECK(js.images == fib.images);

    Substitution js2 = Substitution::parse(R"({"rules": {"a": "ab", "b": "a"}})");
    CHECK(js2.images == fib.images);
}

TEST_CASE("parsing: error cases carry location and letter") {
    CHECK_THROWS_WITH_AS(Substitution::parse("a-> b->a"),
                         doctest::Contains("image of 'a' is empty"), InputError);
    CHECK_THROWS_WITH_AS(Substitution::parse("a->ab\na->b"),
                         doctest::Contains("line 2: letter 'a' has two rules"), InputError);
    CHECK_THROWS_WITH_AS(Substitution::parse("a->ab b->ac"),
                         doctest::Contains("undeclared letter 'c'"), InputError);
    CHECK_THROWS_WITH_AS(Substitution::parse("ab"), doctest::Contains("expected '->'"),
                         InputError);
    CHECK_THROWS_WITH_AS(Substitution::parse("->ab"), doctest::Contains("missing left side"),
                         InputError);
    CHECK_THROWS_AS(Substitution::parse(""), InputError);
    CHECK_THROWS_WITH_AS(Substitution::parse(R"({"rules": {"a": []}})"),
                         doctest::Contains("image of 'a' is empty"), InputError);
    CHECK_THROWS_AS(Substitution::parse(R"({"oops": 1})"), InputError);
}

TEST_CASE("apply, power and printing") {
    Substitution fib = Substitution::parse(kFib);
    std::vector<int> a{0};
    CHECK(fib.word_str(fib.apply(a)) == "ab");
    CHECK(fib.word_str(fib.apply(fib.apply(a))) == "aba");
    Substitution fib3 = fib.power(3);
    CHECK(fib3.word_str(fib3.images[0]) == "abaab");
    CHECK(fib.rules_str() == "a -> ab, b -> a");
}

TEST_CASE("incidence matrices") {
    CHECK(Substitution::parse(kFib).incidence() == IntMat::from_rows({{1, 1}, {1, 0}}));
    CHECK(Substitution::parse(kSqrt2).incidence() ==
          IntMat::from_rows({{1, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 0, 0}, {2, 0, 1, 0}}));
    CHECK(Substitution::parse(kPenta).incidence() ==
          IntMat::from_rows({{1, 0, 0, 1, 1},
                             {1, 0, 0, 0, 1},
                             {1, 0, 0, 0, 0},
                             {0, 1, 0, 0, 0},
                             {0, 0, 1, 0, 0}}));
}

TEST_CASE("abelianization intertwines substitution and incidence") {
    std::mt19937 rng(20260815);
    for (const char* rules : {kFib, kPenta, kWm, kSqrt2, kExt3b}) {
        Substitution s = Substitution::parse(rules);
        IntMat m = s.incidence();
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> w = random_word(rng, s.alphabet_size(), 40);
            std::vector<Int> lhs = abelianization(s.alphabet_size(), s.apply(w));
            std::vector<Int> rhs = m.apply(abelianization(s.alphabet_size(), w));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("primitivity with witness powers") {
    CHECK(primitivity(Substitution::parse(kFib)).primitive);
    CHECK(primitivity(Substitution::parse(kFib)).witness_power == 2);
    CHECK(primitivity(Substitution::parse(kPenta)).witness_power == 4);
    CHECK(primitivity(Substitution::parse(kWm)).witness_power == 4);
    CHECK(primitivity(Substitution::parse(kSqrt2)).witness_power == 4);
    CHECK(primitivity(Substitution::parse(kExt3b)).witness_power == 6);
    CHECK_FALSE(primitivity(Substitution::parse("a->ab b->b")).primitive);
}

TEST_CASE("properness and left-proper powers") {
    Substitution tau = Substitution::parse("a->ababc b->abacabc c->abac");
    CHECK(is_left_proper(tau));
    CHECK(is_right_proper(tau));
    CHECK(is_proper(tau));

    CHECK(left_proper_power(Substitution::parse(kFib)) == 1);
    CHECK(left_proper_power(Substitution::parse(kExt3b)) == 2);
    CHECK_FALSE(left_proper_power(Substitution::parse(kPenta)).has_value());
    CHECK_FALSE(left_proper_power(Substitution::parse("a->ab b->ba")).has_value());
    CHECK_FALSE(is_left_proper(Substitution::parse(kPenta)));
}

TEST_CASE("fixed point seeds") {
    FixedPointSeed fib_seed = fixed_point_seed(Substitution::parse(kFib));
    CHECK(fib_seed.power == 1);
    CHECK(fib_seed.letter == 0);

    FixedPointSeed penta_seed = fixed_point_seed(Substitution::parse(kPenta));
    CHECK(penta_seed.power == 3);
    CHECK(penta_seed.letter == 0);

    FixedPointSeed swap_seed = fixed_point_seed(Substitution::parse("a->ba b->ab"));
    CHECK(swap_seed.power == 2);
    CHECK(swap_seed.letter == 0);
}

TEST_CASE("fixed point prefixes") {
    Substitution penta = Substitution::parse(kPenta);
    FixedPointSeed seed = fixed_point_seed(penta);
    CHECK(penta.word_str(fixed_point_prefix(penta, seed, 40)) ==
          "1421352142135213142135214213142135213142");

    Substitution fib = Substitution::parse(kFib);
    CHECK(fib.word_str(fixed_point_prefix(fib, fixed_point_seed(fib), 8)) == "abaababa");
    CHECK(fib.word_str(fixed_point_prefix(fib, fixed_point_seed(fib), 1)) == "a");

    std::vector<int> longer = fixed_point_prefix(penta, seed, 400);
    std::vector<int> shorter = fixed_point_prefix(penta, seed, 97);
    CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
}

TEST_CASE("prefix-suffix automaton enumerates image decompositions") {
    Substitution fib = Substitution::parse(kFib);
    PrefixSuffixAutomaton aut = prefix_suffix_automaton(fib);
    REQUIRE(aut.transitions.size() == 3);
    CHECK(aut.transitions[0].source == 0);
    CHECK(aut.transitions[0].target == 0);
    CHECK(aut.transitions[0].prefix.empty());
    CHECK(aut.transitions[0].suffix == std::vector<int>{1});
    CHECK(aut.transitions[1].prefix == std::vector<int>{0});
    CHECK(aut.transitions[1].suffix.empty());
    CHECK(aut.transitions[2].source == 1);
    CHECK(aut.transitions[2].prefix.empty());
    CHECK(aut.transitions[2].suffix.empty());

    CHECK(prefix_suffix_automaton(Substitution::parse(kPenta)).transitions.size() == 8);

    for (const char* rules : {kFib, kPenta, kWm, kSqrt2, kExt3b}) {
        Substitution s = Substitution::parse(rules);
        PrefixSuffixAutomaton a = prefix_suffix_automaton(s);
        std::vector<std::vector<int>> rebuilt(static_cast<size_t>(s.alphabet_size()));
        for (const PSTransition& t : a.transitions) {
            REQUIRE(t.position == static_cast<int>(rebuilt[static_cast<size_t>(t.source)].size()));
            CHECK(t.prefix == rebuilt[static_cast<size_t>(t.source)]);
            size_t img_len = s.images[static_cast<size_t>(t.source)].size();
            CHECK(t.prefix.size() + 1 + t.suffix.size() == img_len);
            rebuilt[static_cast<size_t>(t.source)].push_back(t.target);
        }
        CHECK(rebuilt == s.images);
    }
}

TEST_CASE("digit expansion of fixed point prefixes") {
    Substitution fib = Substitution::parse(kFib);
    DTExpansion empty = dumont_thomas_digits(fib, 0, 0);
    CHECK(empty.digits.empty());

    DTExpansion three = dumont_thomas_digits(fib, 0, 3);
    REQUIRE(three.digits.size() == 3);
    CHECK(three.digits[0].empty());
    CHECK(three.digits[1].empty());
    CHECK(three.digits[2] == std::vector<int>{0});
    IntMat m = fib.incidence();
    std::vector<Int> total(2, Int(0));
    IntMat mp = IntMat::identity(2);
    for (const auto& digit : three.digits) {
        std::vector<Int> term = mp.apply(abelianization(2, digit));
        for (size_t i = 0; i < total.size(); ++i) total[i] += term[i];
        mp = m * mp;
    }
    CHECK(total == std::vector<Int>{Int(2), Int(1)});
    CHECK(three.path.front() == 0);  // the fixed point reads "abaa": u[3] = a
}

TEST_CASE("digit expansion reconstruction on random positions") {
    std::mt19937 rng(7);
    Substitution penta3 = Substitution::parse(kPenta).power(3);
    Substitution fib = Substitution::parse(kFib);
    for (const Substitution& s : {penta3, fib}) {
        int n = s.alphabet_size();
        IntMat m = s.incidence();
        std::vector<int> u = fixed_point_prefix(s, {0, 1}, 260);
        std::uniform_int_distribution<int> pos(1, 200);
        for (int trial = 0; trial < 25; ++trial) {
            long long k = pos(rng);
            DTExpansion ex = dumont_thomas_digits(s, 0, k);

            std::vector<Int> total(static_cast<size_t>(n), Int(0));
            IntMat mp = IntMat::identity(n);
            for (const auto& digit : ex.digits) {
                std::vector<Int> term = mp.apply(abelianization(n, digit));
                for (size_t i = 0; i < total.size(); ++i) total[i] += term[i];
                mp = m * mp;
            }
            std::vector<int> prefix(u.begin(), u.begin() + k);
            CHECK(total == abelianization(n, prefix));
            CHECK(ex.path.front() == u[static_cast<size_t>(k)]);

            REQUIRE(!ex.digits.empty());
            CHECK(!ex.digits.back().empty());
            // each digit is a proper prefix of the image of the letter above
            for (size_t lvl = 0; lvl < ex.digits.size(); ++lvl) {
                int above = (lvl + 1 < ex.digits.size()) ? ex.path[lvl + 1] : 0;
                const auto& img = s.images[static_cast<size_t>(above)];
                REQUIRE(ex.digits[lvl].size() < img.size());
                CHECK(std::equal(ex.digits[lvl].begin(), ex.digits[lvl].end(), img.begin()));
            }
        }
    }
}

TEST_CASE("digit expansion rejects bad seeds") {
    Substitution penta = Substitution::parse(kPenta);
    CHECK_THROWS_AS(dumont_thomas_digits(penta, 0, 5), InputError);  // sigma(1) starts with 2
    Substitution fib = Substitution::parse(kFib);
    CHECK_THROWS_AS(dumont_thomas_digits(fib, 1, 5), InputError);
    CHECK(letters_of(fib, "ab") == std::vector<int>{0, 1});
}
