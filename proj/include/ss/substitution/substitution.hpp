#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ss/exact/matrix.hpp"

namespace ss {

// A substitution on a finite alphabet. Letters are indices into `letters`
// (declaration order); images are letter index sequences.
struct Substitution {
    std::vector<std::string> letters;
    std::vector<std::vector<int>> images;

    int alphabet_size() const { return static_cast<int>(letters.size()); }

    // Text rules: "a -> ab, b -> a" with rules split on commas, semicolons
    // or newlines. When every left side is a single character the images are
    // read character by character; otherwise letters are whitespace
    // separated tokens.
    static Substitution parse(const std::string& text);
    // {"rules": {"a": ["a","b"], ...}} or {"rules": {"a": "ab", ...}};
    // parse() dispatches here when the text opens with '{'.
    static Substitution parse_json(const std::string& text);
    static Substitution from_images(std::vector<std::string> letters,
                                    std::vector<std::vector<int>> images);

    std::vector<int> apply(const std::vector<int>& word) const;
    Substitution power(int k) const;

    // M[b][a] = number of occurrences of b in the image of a.
    IntMat incidence() const;

    std::string word_str(const std::vector<int>& word, const std::string& sep = "") const;
    std::string rules_str() const;
};

std::vector<Int> abelianization(int alphabet_size, const std::vector<int>& word);

struct PrimitivityResult {
    bool primitive = false;
    int witness_power = 0;  // smallest k with M^k entrywise positive
};

// Positivity of incidence powers up to the Wielandt bound (n-1)^2 + 1.
PrimitivityResult primitivity(const Substitution& s);

bool is_left_proper(const Substitution& s);
bool is_right_proper(const Substitution& s);
bool is_proper(const Substitution& s);

// Smallest k such that sigma^k is left proper (every image begins with the
// same letter), when such k exists.
std::optional<int> left_proper_power(const Substitution& s);

struct FixedPointSeed {
    int letter = 0;
    int power = 1;
};

// Smallest power k admitting a growing one-sided fixed point, with the
// alphabetically first usable seed letter: sigma^k(a) starts with a and has
// length at least 2.
FixedPointSeed fixed_point_seed(const Substitution& s);

// Prefix of that fixed point.
std::vector<int> fixed_point_prefix(const Substitution& s, const FixedPointSeed& seed,
                                    size_t length);

// One transition per image position: the image of `source` factors as
// prefix . target . suffix with `target` at `position`.
struct PSTransition {
    int source = 0;
    int position = 0;
    int target = 0;
    std::vector<int> prefix;
    std::vector<int> suffix;
};

// All decompositions of all images, ordered by (source, position).
struct PrefixSuffixAutomaton {
    std::vector<PSTransition> transitions;
};

PrefixSuffixAutomaton prefix_suffix_automaton(const Substitution& s);

// Digit expansion of a fixed point prefix. With u the one-sided fixed point
// seeded at `letter`, the length-k prefix factors uniquely as
// sigma^N(digit[N]) ... sigma(digit[1]) digit[0], each digit a proper prefix
// of the image of the preceding path letter and digit[N] nonempty, so
// ab(u_[0,k)) = sum_n M^n ab(digit[n]). path[n] is the letter entered after
// reading digit[n]; path[0] is the letter of u at position k.
struct DTExpansion {
    int letter = 0;
    long long position = 0;
    std::vector<std::vector<int>> digits;
    std::vector<int> path;
};

DTExpansion dumont_thomas_digits(const Substitution& s, int letter, long long k);

}  // namespace ss
