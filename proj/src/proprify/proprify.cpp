#include "ss/proprify/proprify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ss/error.hpp"
#include "ss/exact/factor.hpp"
#include "ss/exact/matrix.hpp"

namespace ss {

namespace {

constexpr int kMaxPowerBumps = 8;
constexpr size_t kMaxReturnWords = 20000;

// Pieces of a word cut at every occurrence of the anchor; the word must
// start with the anchor so the pieces cover it exactly.
std::vector<std::vector<int>> split_at_anchor(const std::vector<int>& word, int anchor) {
    require(!word.empty() && word.front() == anchor, "return word image lost its anchor");
    std::vector<std::vector<int>> pieces;
    size_t start = 0;
    for (size_t i = 1; i < word.size(); ++i) {
        if (word[i] == anchor) {
            pieces.emplace_back(word.begin() + static_cast<long>(start),
                                word.begin() + static_cast<long>(i));
            start = i;
        }
    }
    pieces.emplace_back(word.begin() + static_cast<long>(start), word.end());
    return pieces;
}

struct DiscoveryResult {
    ReturnWordSet rw;
    std::vector<std::vector<int>> tau_images;  // decompositions as word indices
    bool xi_feasible = false;
};

// One attempt at a fixed power: discover return words of p = s^power on the
// anchor by decomposing images breadth-first from the seed word.
DiscoveryResult discover(const Substitution& s, int anchor, int power) {
    Substitution p = s.power(power);

    // The seed return word: the fixed point up to the second anchor.
    std::vector<int> seed;
    {
        size_t want = 64;
        for (;;) {
            std::vector<int> u = fixed_point_prefix(p, {anchor, 1}, want);
            size_t second = 0;
            for (size_t i = 1; i < u.size(); ++i)
                if (u[i] == anchor) {
                    second = i;
                    break;
                }
            if (second > 0) {
                seed.assign(u.begin(), u.begin() + static_cast<long>(second));
                break;
            }
            require(want < (size_t(1) << 24), "anchor letter never returns");
            want *= 2;
        }
    }

    DiscoveryResult out;
    out.rw.anchor = anchor;
    out.rw.power = power;
    out.rw.words.push_back(seed);
    std::map<std::vector<int>, int> index{{seed, 0}};

    for (size_t i = 0; i < out.rw.words.size(); ++i) {
        std::vector<std::vector<int>> pieces = split_at_anchor(p.apply(out.rw.words[i]), anchor);
        std::vector<int> decomposition;
        for (auto& piece : pieces) {
            auto [it, fresh] = index.try_emplace(piece, static_cast<int>(out.rw.words.size()));
            if (fresh) out.rw.words.push_back(std::move(piece));
            decomposition.push_back(it->second);
        }
        out.tau_images.push_back(std::move(decomposition));
        require(out.rw.words.size() <= kMaxReturnWords, "return word discovery does not close");
    }

    if (out.rw.words.size() < 2)
        throw ScopeError("only one return word: the substitution generates a periodic system");

    out.xi_feasible = true;
    for (size_t i = 0; i < out.rw.words.size(); ++i)
        if (out.tau_images[i].size() < out.rw.words[i].size()) out.xi_feasible = false;
    return out;
}

DiscoveryResult discover_feasible(const Substitution& s) {
    PrimitivityResult prim = primitivity(s);
    if (!prim.primitive) throw ScopeError("substitution is not primitive");
    FixedPointSeed seed = fixed_point_seed(s);
    for (int j = 1; j <= kMaxPowerBumps; ++j) {
        DiscoveryResult r = discover(s, seed.letter, seed.power * j);
        if (r.xi_feasible) return r;
    }
    throw ScopeError("no power admits the xi construction within the search range");
}

std::string tau_letter_name(int i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "r" + std::to_string(i);
}

Substitution tau_from(const DiscoveryResult& d) {
    std::vector<std::string> letters;
    for (size_t i = 0; i < d.rw.words.size(); ++i)
        letters.push_back(tau_letter_name(static_cast<int>(i)));
    return Substitution::from_images(std::move(letters), d.tau_images);
}

// Multiset of irreducible factors with x and x - 1 removed.
std::vector<Factor> spectral_factors(const IntMat& m) {
    std::vector<Factor> out;
    for (const Factor& f : factor(charpoly(m))) {
        if (f.poly == IntPoly{0, 1}) continue;
        if (f.poly == IntPoly{-1, 1}) continue;
        out.push_back(f);
    }
    return out;
}

}  // namespace

ReturnWordSet return_words(const Substitution& s) { return discover_feasible(s).rw; }

Substitution return_substitution(const Substitution& s, const ReturnWordSet& rw) {
    DiscoveryResult d = discover(s, rw.anchor, rw.power);
    require(d.rw.words == rw.words, "return word set does not belong to this substitution");
    return tau_from(d);
}

XiSubstitution xi_substitution(const Substitution& tau, const ReturnWordSet& rw) {
    size_t n_words = rw.words.size();
    require(tau.alphabet_size() == static_cast<int>(n_words),
            "tau alphabet does not match the return words");

    std::vector<size_t> offset(n_words + 1, 0);
    for (size_t i = 0; i < n_words; ++i) offset[i + 1] = offset[i] + rw.words[i].size();
    size_t b_size = offset[n_words];

    auto spell = [&](int word_index, std::vector<int>& into) {
        for (size_t p = 0; p < rw.words[static_cast<size_t>(word_index)].size(); ++p)
            into.push_back(static_cast<int>(offset[static_cast<size_t>(word_index)] + p));
    };

    XiSubstitution out;
    std::vector<std::string> letters(b_size);
    std::vector<std::vector<int>> images(b_size);
    out.letter_map.resize(b_size);
    for (size_t i = 0; i < n_words; ++i) {
        const std::vector<int>& r = rw.words[i];
        const std::vector<int>& tr = tau.images[i];
        require(tr.size() >= r.size(), "tau image shorter than its return word");
        for (size_t p = 1; p <= r.size(); ++p) {
            size_t b = offset[i] + (p - 1);
            letters[b] = std::to_string(b);
            out.letter_map[b] = r[p - 1];
            if (p < r.size()) {
                spell(tr[p - 1], images[b]);
            } else {
                for (size_t q = r.size() - 1; q < tr.size(); ++q) spell(tr[q], images[b]);
            }
        }
    }
    out.xi = Substitution::from_images(std::move(letters), std::move(images));
    return out;
}

Proprification proprify(const Substitution& s) {
    DiscoveryResult d = discover_feasible(s);

    Proprification out;
    out.original = s;
    out.power_k = d.rw.power;
    out.tau = tau_from(d);
    XiSubstitution xs = xi_substitution(out.tau, d.rw);
    out.xi = std::move(xs.xi);
    out.letter_map = std::move(xs.letter_map);
    out.returns = std::move(d.rw);

    std::optional<int> lp = left_proper_power(out.xi);
    if (!lp) throw ScopeError("no power of xi is left-proper within the search range");
    out.left_proper_power = *lp;

    std::vector<Factor> xi_factors = spectral_factors(out.xi.incidence());
    IntMat m = s.incidence();
    IntMat mp = m;
    for (int l = 1; l <= 24; ++l) {
        if (l > 1) mp = mp * m;
        std::vector<Factor> mf = spectral_factors(mp);
        if (mf.size() == xi_factors.size() &&
            std::equal(mf.begin(), mf.end(), xi_factors.begin(), [](const Factor& x, const Factor& y) {
                return x.multiplicity == y.multiplicity && x.poly == y.poly;
            })) {
            out.eigen_power_witness = l;
            break;
        }
    }
    return out;
}

}  // namespace ss
