#include "ss/substitution/substitution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ss/error.hpp"

namespace ss {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Substitution Substitution::from_images(std::vector<std::string> letters,
                                       std::vector<std::vector<int>> images) {
    require(!letters.empty(), "alphabet is empty");
    require(letters.size() == images.size(), "one image per letter required");
    Substitution s;
    s.letters = std::move(letters);
    s.images = std::move(images);
    int n = s.alphabet_size();
    for (int a = 0; a < n; ++a) {
        if (s.images[static_cast<size_t>(a)].empty())
            throw InputError("image of '" + s.letters[static_cast<size_t>(a)] + "' is empty");
        for (int b : s.images[static_cast<size_t>(a)])
            if (b < 0 || b >= n) throw InputError("letter index out of range in an image");
    }
    return s;
}

Substitution Substitution::parse(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text);

    // Segments are separated by commas, semicolons or newlines; inside a
    // segment further rules may follow separated only by whitespace, so the
    // token before each '->' closes the previous image.
    struct RawRule {
        std::string lhs;
        std::vector<std::string> image;
        int line;
    };
    std::vector<RawRule> rules;
    int line = 1;
    size_t pos = 0;
    while (pos <= text.size()) {
        int seg_line = line;
        std::string seg;
        for (; pos < text.size(); ++pos) {
            char ch = text[pos];
            if (ch == '\n') ++line;
            if (ch == ',' || ch == ';' || ch == '\n') {
                ++pos;
                break;
            }
            seg.push_back(ch);
        }
        if (pos >= text.size()) ++pos;  // final segment consumed

        std::string spaced;
        for (size_t i = 0; i < seg.size();) {
            if (seg.compare(i, 2, "->") == 0) {
                spaced += " -> ";
                i += 2;
            } else {
                spaced.push_back(seg[i++]);
            }
        }
        std::vector<std::string> toks = split_ws(spaced);
        if (toks.empty()) continue;

        std::vector<size_t> arrows;
        for (size_t i = 0; i < toks.size(); ++i)
            if (toks[i] == "->") arrows.push_back(i);
        std::string where = "line " + std::to_string(seg_line) + ": ";
        if (arrows.empty()) throw InputError(where + "expected '->' in \"" + trim(seg) + "\"");
        if (arrows.front() == 0) throw InputError(where + "missing left side before '->'");
        if (arrows.front() > 1)
            throw InputError(where + "left side must be one letter, got \"" + toks[0] + " " +
                             toks[1] + "\"");
        for (size_t a = 0; a < arrows.size(); ++a) {
            size_t lhs_at = arrows[a] - 1;
            if (a > 0 && lhs_at <= arrows[a - 1])
                throw InputError(where + "missing left side before '->'");
            size_t img_end = (a + 1 < arrows.size()) ? arrows[a + 1] - 1 : toks.size();
            RawRule r;
            r.lhs = toks[lhs_at];
            r.image.assign(toks.begin() + static_cast<long>(arrows[a]) + 1,
                           toks.begin() + static_cast<long>(img_end));
            r.line = seg_line;
            rules.push_back(std::move(r));
        }
    }
    if (rules.empty()) throw InputError("no substitution rules found");

    std::vector<std::string> letters;
    std::map<std::string, int> index;
    for (const RawRule& r : rules) {
        if (index.count(r.lhs))
            throw InputError("line " + std::to_string(r.line) + ": letter '" + r.lhs +
                             "' has two rules");
        index[r.lhs] = static_cast<int>(letters.size());
        letters.push_back(r.lhs);
    }

    bool compact = std::all_of(rules.begin(), rules.end(),
                               [](const RawRule& r) { return r.lhs.size() == 1; });

    std::vector<std::vector<int>> images;
    for (const RawRule& r : rules) {
        std::string where = "line " + std::to_string(r.line) + ": ";
        std::vector<int> img;
        for (const std::string& tok : r.image) {
            if (compact) {
                for (char ch : tok) {
                    std::string one(1, ch);
                    auto it = index.find(one);
                    if (it == index.end())
                        throw InputError(where + "image of '" + r.lhs +
                                         "' uses undeclared letter '" + one + "'");
                    img.push_back(it->second);
                }
            } else {
                auto it = index.find(tok);
                if (it == index.end())
                    throw InputError(where + "image of '" + r.lhs + "' uses undeclared letter '" +
                                     tok + "'");
                img.push_back(it->second);
            }
        }
        if (img.empty()) throw InputError(where + "image of '" + r.lhs + "' is empty");
        images.push_back(std::move(img));
    }
    return from_images(std::move(letters), std::move(images));
}

Substitution Substitution::parse_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rules") || !j["rules"].is_object())
        throw InputError("JSON input must be an object with a \"rules\" object");

    const auto& rules = j["rules"];
    std::vector<std::string> letters;
    std::map<std::string, int> index;
    for (auto it = rules.begin(); it != rules.end(); ++it) {
        if (index.count(it.key())) throw InputError("letter '" + it.key() + "' has two rules");
        index[it.key()] = static_cast<int>(letters.size());
        letters.push_back(it.key());
    }
    bool compact = std::all_of(letters.begin(), letters.end(),
                               [](const std::string& l) { return l.size() == 1; });

    std::vector<std::vector<int>> images;
    for (auto it = rules.begin(); it != rules.end(); ++it) {
        std::vector<std::string> toks;
        if (it.value().is_array()) {
            for (const auto& v : it.value()) {
                if (!v.is_string())
                    throw InputError("image of '" + it.key() + "' must hold letter strings");
                toks.push_back(v.get<std::string>());
            }
        } else if (it.value().is_string()) {
            std::string w = it.value().get<std::string>();
            if (compact)
                for (char ch : w) toks.emplace_back(1, ch);
            else
                toks = split_ws(w);
        } else {
            throw InputError("image of '" + it.key() + "' must be a string or array");
        }
        std::vector<int> img;
        for (const std::string& tok : toks) {
            auto f = index.find(tok);
            if (f == index.end())
                throw InputError("image of '" + it.key() + "' uses undeclared letter '" + tok +
                                 "'");
            img.push_back(f->second);
        }
        if (img.empty()) throw InputError("image of '" + it.key() + "' is empty");
        images.push_back(std::move(img));
    }
    if (letters.empty()) throw InputError("no substitution rules found");
    return from_images(std::move(letters), std::move(images));
}

std::vector<int> Substitution::apply(const std::vector<int>& word) const {
    std::vector<int> out;
    size_t total = 0;
    for (int a : word) total += images[static_cast<size_t>(a)].size();
    out.reserve(total);
    for (int a : word) {
        const std::vector<int>& img = images[static_cast<size_t>(a)];
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

Substitution Substitution::power(int k) const {
    require(k >= 1, "substitution power must be positive");
    Substitution out = *this;
    for (int i = 1; i < k; ++i) {
        for (auto& img : out.images) img = apply(img);
    }
    return out;
}

IntMat Substitution::incidence() const {
    int n = alphabet_size();
    IntMat m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b : images[static_cast<size_t>(a)]) m.at(b, a) += 1;
    return m;
}

std::string Substitution::word_str(const std::vector<int>& word, const std::string& sep) const {
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += sep;
        out += letters[static_cast<size_t>(word[i])];
    }
    return out;
}

std::string Substitution::rules_str() const {
    bool compact = std::all_of(letters.begin(), letters.end(),
                               [](const std::string& l) { return l.size() == 1; });
    std::string out;
    for (int a = 0; a < alphabet_size(); ++a) {
        if (a) out += ", ";
        out += letters[static_cast<size_t>(a)] + " -> " +
               word_str(images[static_cast<size_t>(a)], compact ? "" : " ");
    }
    return out;
}

std::vector<Int> abelianization(int alphabet_size, const std::vector<int>& word) {
    std::vector<Int> v(static_cast<size_t>(alphabet_size), Int(0));
    for (int a : word) v[static_cast<size_t>(a)] += 1;
    return v;
}

PrimitivityResult primitivity(const Substitution& s) {
    int n = s.alphabet_size();
    IntMat m = s.incidence();
    // Boolean reachability under the Wielandt bound.
    std::vector<std::vector<bool>> reach(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) reach[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j) > 0;
    int bound = (n - 1) * (n - 1) + 1;
    auto all_positive = [&]() {
        for (const auto& row : reach)
            for (bool b : row)
                if (!b) return false;
        return true;
    };
    auto step = [&]() {
        std::vector<std::vector<bool>> nx(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (!reach[static_cast<size_t>(i)][static_cast<size_t>(k)]) continue;
                for (int j = 0; j < n; ++j)
                    if (m.at(k, j) > 0) nx[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
            }
        reach = std::move(nx);
    };
    for (int k = 1; k <= bound; ++k) {
        if (all_positive()) return {true, k};
        step();
    }
    if (all_positive()) return {true, bound + 1};
    return {false, 0};
}

bool is_left_proper(const Substitution& s) {
    for (const auto& img : s.images)
        if (img.front() != s.images.front().front()) return false;
    return true;
}

bool is_right_proper(const Substitution& s) {
    for (const auto& img : s.images)
        if (img.back() != s.images.front().back()) return false;
    return true;
}

bool is_proper(const Substitution& s) { return is_left_proper(s) && is_right_proper(s); }

std::optional<int> left_proper_power(const Substitution& s) {
    int n = s.alphabet_size();
    // Iterate the first-letter map; sigma^k is left proper iff f^k is constant.
    std::vector<int> f(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) f[static_cast<size_t>(a)] = s.images[static_cast<size_t>(a)].front();
    std::vector<int> fk = f;
    for (int k = 1; k <= 2 * n; ++k) {
        if (std::all_of(fk.begin(), fk.end(), [&](int v) { return v == fk[0]; })) return k;
        for (int a = 0; a < n; ++a) fk[static_cast<size_t>(a)] = f[static_cast<size_t>(fk[static_cast<size_t>(a)])];
    }
    return std::nullopt;
}

FixedPointSeed fixed_point_seed(const Substitution& s) {
    int n = s.alphabet_size();
    std::vector<int> f(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) f[static_cast<size_t>(a)] = s.images[static_cast<size_t>(a)].front();
    std::vector<Int> len(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) len[static_cast<size_t>(a)] = static_cast<long>(s.images[static_cast<size_t>(a)].size());

    std::vector<int> fk = f;
    std::vector<Int> lk = len;
    int bound = 2 * n * n + 2;
    for (int k = 1; k <= bound; ++k) {
        for (int a = 0; a < n; ++a) {
            if (fk[static_cast<size_t>(a)] == a && lk[static_cast<size_t>(a)] >= 2) return {a, k};
        }
        // advance one application of sigma
        std::vector<int> nf(static_cast<size_t>(n));
        std::vector<Int> nl(static_cast<size_t>(n), Int(0));
        for (int a = 0; a < n; ++a) {
            nf[static_cast<size_t>(a)] = fk[static_cast<size_t>(f[static_cast<size_t>(a)])];
            for (int b : s.images[static_cast<size_t>(a)]) nl[static_cast<size_t>(a)] += lk[static_cast<size_t>(b)];
        }
        // nf computed as f^k after f, i.e. f^(k+1); lengths likewise
        fk = std::move(nf);
        lk = std::move(nl);
    }
    throw ScopeError("substitution has no growing one-sided fixed point");
}

std::vector<int> fixed_point_prefix(const Substitution& s, const FixedPointSeed& seed,
                                    size_t length) {
    if (length == 0) return {};
    Substitution p = s.power(seed.power);
    std::vector<int> w{seed.letter};
    require(p.images[static_cast<size_t>(seed.letter)].front() == seed.letter,
            "seed letter does not start its own image");
    while (w.size() < length) {
        size_t prev = w.size();
        w = p.apply(w);
        require(w.size() > prev, "fixed point stopped growing");
    }
    w.resize(length);
    return w;
}

PrefixSuffixAutomaton prefix_suffix_automaton(const Substitution& s) {
    PrefixSuffixAutomaton aut;
    for (int a = 0; a < s.alphabet_size(); ++a) {
        const auto& img = s.images[static_cast<size_t>(a)];
        for (size_t i = 0; i < img.size(); ++i) {
            PSTransition t;
            t.source = a;
            t.position = static_cast<int>(i);
            t.target = img[i];
            t.prefix.assign(img.begin(), img.begin() + static_cast<long>(i));
            t.suffix.assign(img.begin() + static_cast<long>(i) + 1, img.end());
            aut.transitions.push_back(std::move(t));
        }
    }
    return aut;
}

DTExpansion dumont_thomas_digits(const Substitution& s, int letter, long long k) {
    if (letter < 0 || letter >= s.alphabet_size()) throw InputError("seed letter out of range");
    if (s.images[static_cast<size_t>(letter)].front() != letter)
        throw InputError("seed letter '" + s.letters[static_cast<size_t>(letter)] +
                         "' does not start its own image");
    if (k < 0) throw InputError("position is negative");

    DTExpansion ex;
    ex.letter = letter;
    ex.position = k;
    if (k == 0) return ex;

    // len[n][b] = |sigma^n(b)|; grow n until the seed's image covers k.
    int n = s.alphabet_size();
    Int rem(static_cast<long>(k));
    std::vector<std::vector<Int>> len;
    len.emplace_back(static_cast<size_t>(n), Int(1));
    while (len.back()[static_cast<size_t>(letter)] <= rem) {
        std::vector<Int> next(static_cast<size_t>(n), Int(0));
        for (int a = 0; a < n; ++a)
            for (int b : s.images[static_cast<size_t>(a)])
                next[static_cast<size_t>(a)] += len.back()[static_cast<size_t>(b)];
        len.push_back(std::move(next));
        require(len.size() < 4096, "fixed point stopped growing");
    }

    // Peel one level at a time: the length-rem prefix of sigma^level(cur)
    // starts with sigma^(level-1) applied to a proper prefix of the image
    // of cur; the digit is that prefix, the path continues at the image
    // letter after it.
    int level = static_cast<int>(len.size()) - 1;
    int cur = letter;
    ex.digits.resize(static_cast<size_t>(level));
    ex.path.resize(static_cast<size_t>(level));
    for (; level >= 1; --level) {
        const auto& img = s.images[static_cast<size_t>(cur)];
        const auto& sub_len = len[static_cast<size_t>(level) - 1];
        std::vector<int> digit;
        size_t i = 0;
        while (sub_len[static_cast<size_t>(img[i])] <= rem) {
            rem -= sub_len[static_cast<size_t>(img[i])];
            digit.push_back(img[i]);
            ++i;
        }
        cur = img[i];
        ex.digits[static_cast<size_t>(level) - 1] = std::move(digit);
        ex.path[static_cast<size_t>(level) - 1] = cur;
    }
    require(rem == 0, "digit expansion did not consume the full prefix");
    return ex;
}

}  // namespace ss
