#pragma once

#include <optional>
#include <vector>

#include "ss/substitution/substitution.hpp"

namespace ss {

// Return words on an anchor letter of the fixed point of sigma^power,
// in breadth-first discovery order; words[0] is the seed word w0.
struct ReturnWordSet {
    int anchor = 0;
    int power = 1;
    std::vector<std::vector<int>> words;

    const std::vector<int>& seed() const { return words.front(); }
};

// xi together with the original letter each xi-letter stands for.
struct XiSubstitution {
    Substitution xi;
    std::vector<int> letter_map;
};

// Everything produced on the way from sigma to a left-proper power of xi.
struct Proprification {
    Substitution original;
    int power_k = 1;
    ReturnWordSet returns;
    Substitution tau;
    Substitution xi;
    std::vector<int> letter_map;
    int left_proper_power = 0;
    // l with the non-zero, non-one eigenvalues of M_xi equal to those of
    // M_sigma^l, when found within the search range.
    std::optional<int> eigen_power_witness;
};

// Discovers the return words of s on the fixed-point seed letter. The power
// of s actually decomposed starts at the fixed-point seed power and is
// raised until every return word r decomposes into at least |r| return
// words, which the xi construction requires.
ReturnWordSet return_words(const Substitution& s);

// tau over letters a, b, c, ...: the unique decomposition of
// sigma^power(r) as a product of return words.
Substitution return_substitution(const Substitution& s, const ReturnWordSet& rw);

// The re-lettered substitution over B = {(r, p) : 1 <= p <= |r|}, letters
// named "0", "1", ... in word-then-position order:
//   xi(r, p) = psi(tau(r)_p)              for p < |r|
//   xi(r, p) = psi(tau(r)_[|r|..|tau(r)|]) for p = |r|
// where psi spells a return word into its run of B-letters.
XiSubstitution xi_substitution(const Substitution& tau, const ReturnWordSet& rw);

Proprification proprify(const Substitution& s);

}  // namespace ss
