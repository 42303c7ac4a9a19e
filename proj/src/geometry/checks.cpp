#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "ss/error.hpp"
#include "ss/geometry/geometry.hpp"

namespace ss {

namespace {

constexpr int kMaxGridDim = 4;
constexpr long kPathBudget = 5000000;
constexpr long kTargetBudget = 2000000;

struct CellKey {
    std::array<long long, kMaxGridDim> c{};
    bool operator==(const CellKey&) const = default;
};

struct CellHash {
    size_t operator()(const CellKey& k) const {
        size_t h = 1469598103934665603ull;
        for (long long v : k.c) h = (h ^ static_cast<size_t>(v)) * 1099511628211ull;
        return h;
    }
};

CellKey cell_of(const double* p, int dim, double h) {
    CellKey key;
    for (int i = 0; i < dim; ++i) key.c[i] = static_cast<long long>(std::floor(p[i] / h));
    return key;
}

double dist2(const double* p, const double* q, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) {
        double t = p[i] - q[i];
        s += t * t;
    }
    return s;
}

// Uniform grid over a private copy of the points: membership-radius tests
// scan the 3^d neighborhood, nearest-point queries expand shell by shell.
class GridIndex {
public:
    GridIndex(int dim, double h) : dim_(dim), h_(h) {
        require(dim >= 1 && dim <= kMaxGridDim, "grid index supports up to four dimensions");
        require(h > 0.0, "grid cell size must be positive");
    }

    void insert(const double* p) {
        int idx = static_cast<int>(pts_.size() / dim_);
        pts_.insert(pts_.end(), p, p + dim_);
        CellKey key = cell_of(p, dim_, h_);
        if (idx == 0) {
            cell_lo_ = key;
            cell_hi_ = key;
        } else {
            for (int i = 0; i < dim_; ++i) {
                cell_lo_.c[i] = std::min(cell_lo_.c[i], key.c[i]);
                cell_hi_.c[i] = std::max(cell_hi_.c[i], key.c[i]);
            }
        }
        cells_[key].push_back(idx);
    }

    bool empty() const { return pts_.empty(); }

    bool any_within(const double* q, double tol) const {
        if (tol > h_)
            throw InternalError("membership radius exceeds the grid cell size");
        double t2 = tol * tol;
        CellKey base = cell_of(q, dim_, h_);
        bool found = false;
        visit_shells(base, 1, [&](const std::vector<int>& bucket) {
            for (int idx : bucket)
                if (dist2(q, pts_.data() + static_cast<size_t>(idx) * dim_, dim_) <= t2) {
                    found = true;
                    return true;
                }
            return false;
        });
        return found;
    }

    double nearest(const double* q) const {
        if (pts_.empty()) return std::numeric_limits<double>::infinity();
        CellKey base = cell_of(q, dim_, h_);
        long long max_r = 0;
        for (int i = 0; i < dim_; ++i) {
            long long gap = std::max(std::llabs(base.c[i] - cell_lo_.c[i]),
                                     std::llabs(cell_hi_.c[i] - base.c[i]));
            max_r = std::max(max_r, gap);
        }
        double best2 = std::numeric_limits<double>::infinity();
        for (long long r = 0; r <= max_r + 1; ++r) {
            if (r > 0 && std::isfinite(best2) &&
                (static_cast<double>(r) - 1.0) * h_ > std::sqrt(best2))
                break;
            scan_shell(base, static_cast<int>(r), [&](const std::vector<int>& bucket) {
                for (int idx : bucket)
                    best2 = std::min(
                        best2, dist2(q, pts_.data() + static_cast<size_t>(idx) * dim_, dim_));
            });
        }
        return std::sqrt(best2);
    }

private:
    // Visits buckets of cells within Chebyshev radius `radius` of base;
    // the callback may stop the scan by returning true.
    void visit_shells(const CellKey& base, int radius,
                      const std::function<bool(const std::vector<int>&)>& cb) const {
        std::array<int, kMaxGridDim> off{};
        off.fill(-radius);
        for (;;) {
            CellKey key = base;
            for (int i = 0; i < dim_; ++i) key.c[i] += off[i];
            auto it = cells_.find(key);
            if (it != cells_.end() && cb(it->second)) return;
            int i = 0;
            for (; i < dim_; ++i) {
                if (off[i] < radius) {
                    off[i] += 1;
                    break;
                }
                off[i] = -radius;
            }
            if (i == dim_) return;
        }
    }

    // Visits buckets of cells at exact Chebyshev radius; returns whether
    // any grid cell existed on the shell.
    bool scan_shell(const CellKey& base, int radius,
                    const std::function<void(const std::vector<int>&)>& cb) const {
        bool any = false;
        std::array<int, kMaxGridDim> off{};
        off.fill(-radius);
        for (;;) {
            int cheb = 0;
            for (int i = 0; i < dim_; ++i) cheb = std::max(cheb, std::abs(off[i]));
            if (cheb == radius) {
                CellKey key = base;
                for (int i = 0; i < dim_; ++i) key.c[i] += off[i];
                auto it = cells_.find(key);
                if (it != cells_.end()) {
                    any = true;
                    cb(it->second);
                }
            }
            int i = 0;
            for (; i < dim_; ++i) {
                if (off[i] < radius) {
                    off[i] += 1;
                    break;
                }
                off[i] = -radius;
            }
            if (i == dim_) return any;
        }
    }

    int dim_;
    double h_;
    CellKey cell_lo_{};
    CellKey cell_hi_{};
    std::vector<double> pts_;
    std::unordered_map<CellKey, std::vector<int>, CellHash> cells_;
};

std::vector<double> column(const Projection& proj, int letter) {
    std::vector<double> t(proj.rows, 0.0);
    for (int i = 0; i < proj.rows; ++i) t[i] = proj.at(i, letter);
    return t;
}

std::vector<double> image_offset(const Projection& proj, const std::vector<int>& prefix) {
    std::vector<double> t(proj.rows, 0.0);
    for (int letter : prefix)
        for (int i = 0; i < proj.rows; ++i) t[i] += proj.at(i, letter);
    return t;
}

std::vector<double> mat_mul(const std::vector<double>& a, const std::vector<double>& b, int d) {
    std::vector<double> out(static_cast<size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            double aik = a[static_cast<size_t>(i) * d + k];
            if (aik == 0.0) continue;
            for (int j = 0; j < d; ++j)
                out[static_cast<size_t>(i) * d + j] += aik * b[static_cast<size_t>(k) * d + j];
        }
    return out;
}

void mat_apply(const std::vector<double>& a, const double* x, double* out, int d) {
    for (int i = 0; i < d; ++i) {
        double s = 0.0;
        for (int j = 0; j < d; ++j) s += a[static_cast<size_t>(i) * d + j] * x[j];
        out[i] = s;
    }
}

std::vector<double> mat_inverse(std::vector<double> a, int d) {
    std::vector<double> inv(static_cast<size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) inv[static_cast<size_t>(i) * d + i] = 1.0;
    for (int col = 0; col < d; ++col) {
        int piv = col;
        for (int r = col + 1; r < d; ++r)
            if (std::abs(a[static_cast<size_t>(r) * d + col]) >
                std::abs(a[static_cast<size_t>(piv) * d + col]))
                piv = r;
        require(std::abs(a[static_cast<size_t>(piv) * d + col]) > 0.0,
                "contraction matrix is singular");
        for (int j = 0; j < d; ++j) {
            std::swap(a[static_cast<size_t>(col) * d + j], a[static_cast<size_t>(piv) * d + j]);
            std::swap(inv[static_cast<size_t>(col) * d + j], inv[static_cast<size_t>(piv) * d + j]);
        }
        double p = a[static_cast<size_t>(col) * d + col];
        for (int j = 0; j < d; ++j) {
            a[static_cast<size_t>(col) * d + j] /= p;
            inv[static_cast<size_t>(col) * d + j] /= p;
        }
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            double f = a[static_cast<size_t>(r) * d + col];
            if (f == 0.0) continue;
            for (int j = 0; j < d; ++j) {
                a[static_cast<size_t>(r) * d + j] -= f * a[static_cast<size_t>(col) * d + j];
                inv[static_cast<size_t>(r) * d + j] -= f * inv[static_cast<size_t>(col) * d + j];
            }
        }
    }
    return inv;
}

}  // namespace

ExchangeReport exchange_check(const PointCloud& cloud, const Projection& proj, double tol,
                              double grid_h) {
    int n = cloud.size();
    int d = cloud.dim;
    if (n < 2) throw InputError("exchange check needs at least two points");
    if (d != proj.rows) throw InputError("cloud dimension does not match the projection");

    ExchangeReport rep;
    rep.translations.reserve(proj.cols);
    for (int letter = 0; letter < proj.cols; ++letter)
        rep.translations.push_back(column(proj, letter));

    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    for (int k = 0; k < n; ++k) {
        const double* p = cloud.point(k);
        for (int i = 0; i < d; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    }
    double diag2 = 0.0;
    for (int i = 0; i < d; ++i) diag2 += (hi[i] - lo[i]) * (hi[i] - lo[i]);
    rep.diameter = std::sqrt(diag2);
    if (!(rep.diameter > 0.0)) throw InputError("cloud is degenerate, all points coincide");

    rep.tolerance = tol > 0.0 ? tol : rep.diameter / 1000.0;
    rep.grid_h = grid_h > 0.0 ? grid_h : rep.diameter / 200.0;

    for (int k = 0; k + 1 < n; ++k) {
        const double* p = cloud.point(k);
        const double* q = cloud.point(k + 1);
        const std::vector<double>& t = rep.translations[cloud.tags[k]];
        for (int i = 0; i < d; ++i)
            rep.max_step_defect = std::max(rep.max_step_defect, std::abs(q[i] - p[i] - t[i]));
    }

    GridIndex idx(d, rep.tolerance);
    for (int k = 0; k < n; ++k) idx.insert(cloud.point(k));
    long hits = 0;
    std::vector<double> moved(d, 0.0);
    for (int k = 0; k < n; ++k) {
        const double* p = cloud.point(k);
        const std::vector<double>& t = rep.translations[cloud.tags[k]];
        for (int i = 0; i < d; ++i) moved[i] = p[i] + t[i];
        if (idx.any_within(moved.data(), rep.tolerance)) hits += 1;
    }
    rep.containment_ratio = static_cast<double>(hits) / n;

    std::unordered_map<CellKey, int, CellHash> cell_letter;
    for (int k = 0; k < n; ++k) {
        CellKey key = cell_of(cloud.point(k), d, rep.grid_h);
        auto [it, fresh] = cell_letter.try_emplace(key, cloud.tags[k]);
        if (!fresh && it->second != cloud.tags[k]) it->second = -1;
    }
    long multi = 0;
    for (const auto& kv : cell_letter)
        if (kv.second < 0) multi += 1;
    rep.overlap_fraction = cell_letter.empty()
                               ? 0.0
                               : static_cast<double>(multi) / static_cast<double>(cell_letter.size());
    return rep;
}

IfsReport ifs_residual(const Substitution& s, const Projection& proj, const PointCloud& cloud,
                       int depth, int sample) {
    int a = s.alphabet_size();
    int d = cloud.dim;
    if (d != proj.rows || proj.cols != a)
        throw InputError("cloud or projection does not match the substitution");
    if (depth < 0 || depth > 4) throw InputError("iteration depth must lie in [0, 4]");
    if (sample <= 0) throw InputError("sample size must be positive");

    std::vector<std::vector<int>> by_letter(a);
    for (int k = 0; k < cloud.size(); ++k) by_letter[cloud.tags[k]].push_back(k);

    // Length-`depth` transition chains into each letter, as the affine maps
    // x -> N^depth x + offset applied to the chain's source piece.
    struct Chain {
        int source = 0;
        std::vector<double> offset;
    };
    std::vector<std::vector<Chain>> chains(a);
    if (depth == 0) {
        for (int letter = 0; letter < a; ++letter)
            chains[letter].push_back({letter, std::vector<double>(d, 0.0)});
    } else {
        PrefixSuffixAutomaton psa = prefix_suffix_automaton(s);
        std::vector<std::vector<double>> n_pow(depth + 1);
        n_pow[0].assign(static_cast<size_t>(d) * d, 0.0);
        for (int i = 0; i < d; ++i) n_pow[0][static_cast<size_t>(i) * d + i] = 1.0;
        for (int j = 1; j <= depth; ++j) n_pow[j] = mat_mul(proj.contraction, n_pow[j - 1], d);

        std::vector<std::vector<double>> step(psa.transitions.size());
        for (size_t t = 0; t < psa.transitions.size(); ++t)
            step[t] = image_offset(proj, psa.transitions[t].prefix);

        // Walk backwards from the final letter: level j contributes N^j V ab(p).
        struct Frame {
            int letter;
            int level;
            std::vector<double> offset;
        };
        long frames = 0;
        for (int letter = 0; letter < a; ++letter) {
            std::vector<Frame> stack;
            stack.push_back({letter, 0, std::vector<double>(d, 0.0)});
            while (!stack.empty()) {
                Frame f = std::move(stack.back());
                stack.pop_back();
                if (++frames > kPathBudget)
                    throw InternalError("transition chain budget exceeded at depth " +
                                        std::to_string(depth));
                for (size_t t = 0; t < psa.transitions.size(); ++t) {
                    if (psa.transitions[t].target != f.letter) continue;
                    std::vector<double> off = f.offset;
                    std::vector<double> scaled(d, 0.0);
                    mat_apply(n_pow[f.level], step[t].data(), scaled.data(), d);
                    for (int i = 0; i < d; ++i) off[i] += scaled[i];
                    if (f.level + 1 == depth)
                        chains[letter].push_back({psa.transitions[t].source, std::move(off)});
                    else
                        stack.push_back({psa.transitions[t].source, f.level + 1, std::move(off)});
                }
            }
        }
    }

    IfsReport rep;
    rep.depth = depth;
    rep.max_residual.assign(a, 0.0);
    rep.mean_residual.assign(a, 0.0);

    std::vector<double> n_depth(static_cast<size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) n_depth[static_cast<size_t>(i) * d + i] = 1.0;
    for (int j = 0; j < depth; ++j) n_depth = mat_mul(proj.contraction, n_depth, d);

    for (int letter = 0; letter < a; ++letter) {
        if (by_letter[letter].empty() || chains[letter].empty()) continue;

        long total_paths = static_cast<long>(chains[letter].size());
        std::vector<double> targets;
        std::vector<double> mapped(d, 0.0);
        for (const Chain& ch : chains[letter]) {
            const std::vector<int>& src = by_letter[ch.source];
            if (src.empty()) continue;
            long quota = std::max<long>(1, kTargetBudget / std::max<long>(1, total_paths));
            long stride = std::max<long>(1, static_cast<long>(src.size()) / quota);
            for (size_t j = 0; j < src.size(); j += stride) {
                mat_apply(n_depth, cloud.point(src[j]), mapped.data(), d);
                for (int i = 0; i < d; ++i) targets.push_back(mapped[i] + ch.offset[i]);
            }
        }
        if (targets.empty()) continue;

        std::vector<double> lo(d, std::numeric_limits<double>::infinity());
        std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
        for (size_t j = 0; j < targets.size(); j += d)
            for (int i = 0; i < d; ++i) {
                lo[i] = std::min(lo[i], targets[j + i]);
                hi[i] = std::max(hi[i], targets[j + i]);
            }
        double diag = 0.0;
        for (int i = 0; i < d; ++i) diag += (hi[i] - lo[i]) * (hi[i] - lo[i]);
        double h = std::sqrt(diag) / 256.0;
        if (!(h > 0.0)) h = 1.0;
        GridIndex idx(d, h);
        for (size_t j = 0; j < targets.size(); j += d) idx.insert(targets.data() + j);

        const std::vector<int>& own = by_letter[letter];
        long stride = std::max<long>(1, static_cast<long>(own.size()) / sample);
        double worst = 0.0;
        double sum = 0.0;
        long count = 0;
        for (size_t j = 0; j < own.size(); j += stride) {
            double dist = idx.nearest(cloud.point(own[j]));
            worst = std::max(worst, dist);
            sum += dist;
            count += 1;
        }
        rep.max_residual[letter] = worst;
        rep.mean_residual[letter] = count ? sum / count : 0.0;
        rep.overall_max = std::max(rep.overall_max, worst);
    }
    return rep;
}

SeparationReport epsilon_separation(const Substitution& s, const Projection& proj, int n_max) {
    int a = s.alphabet_size();
    int d = proj.rows;
    if (proj.cols != a) throw InputError("projection width does not match the alphabet");
    if (n_max < 1 || n_max > 8) throw InputError("separation depth must lie in [1, 8]");
    if (proj.kind != ProjectionKind::kUsual)
        throw InputError("separation needs the usual projection's contraction");

    PrefixSuffixAutomaton psa = prefix_suffix_automaton(s);
    std::vector<std::vector<int>> by_source(a);
    for (size_t t = 0; t < psa.transitions.size(); ++t)
        by_source[psa.transitions[t].source].push_back(static_cast<int>(t));
    std::vector<std::vector<double>> step(psa.transitions.size());
    for (size_t t = 0; t < psa.transitions.size(); ++t)
        step[t] = image_offset(proj, psa.transitions[t].prefix);

    std::vector<double> n_inv = mat_inverse(proj.contraction, d);
    std::vector<std::vector<double>> inv_pow(n_max + 1);
    inv_pow[0].assign(static_cast<size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) inv_pow[0][static_cast<size_t>(i) * d + i] = 1.0;
    for (int j = 1; j <= n_max; ++j) inv_pow[j] = mat_mul(n_inv, inv_pow[j - 1], d);

    // values[n-1][target * a + start]: flattened d-vectors of digit sums.
    std::vector<std::vector<std::vector<double>>> values(
        n_max, std::vector<std::vector<double>>(static_cast<size_t>(a) * a));

    struct Frame {
        int letter;
        int depth;
        std::vector<double> value;
    };
    long steps = 0;
    for (int start = 0; start < a; ++start) {
        std::vector<Frame> stack;
        stack.push_back({start, 0, std::vector<double>(d, 0.0)});
        while (!stack.empty()) {
            Frame f = std::move(stack.back());
            stack.pop_back();
            for (int t : by_source[f.letter]) {
                if (++steps > kPathBudget)
                    throw InternalError("automaton path budget exceeded at depth " +
                                        std::to_string(f.depth + 1));
                std::vector<double> val = f.value;
                std::vector<double> scaled(d, 0.0);
                mat_apply(inv_pow[f.depth + 1], step[t].data(), scaled.data(), d);
                for (int i = 0; i < d; ++i) val[i] += scaled[i];
                std::vector<double>& bucket =
                    values[f.depth][static_cast<size_t>(psa.transitions[t].target) * a + start];
                bucket.insert(bucket.end(), val.begin(), val.end());
                if (f.depth + 1 < n_max)
                    stack.push_back({psa.transitions[t].target, f.depth + 1, std::move(val)});
            }
        }
    }

    SeparationReport rep;
    rep.n_max = n_max;
    rep.alphabet = a;
    rep.min_by_n.assign(n_max, std::numeric_limits<double>::infinity());
    rep.path_counts.assign(n_max, std::vector<long>(static_cast<size_t>(a) * a, 0));
    for (int n = 0; n < n_max; ++n) {
        for (size_t pair = 0; pair < values[n].size(); ++pair) {
            const std::vector<double>& flat = values[n][pair];
            long count = static_cast<long>(flat.size()) / d;
            rep.path_counts[n][pair] = count;
            for (long i = 0; i < count; ++i)
                for (long j = i + 1; j < count; ++j) {
                    double dd = dist2(flat.data() + i * d, flat.data() + j * d, d);
                    rep.min_by_n[n] = std::min(rep.min_by_n[n], std::sqrt(dd));
                }
        }
    }
    rep.overall_min = std::numeric_limits<double>::infinity();
    for (double v : rep.min_by_n) rep.overall_min = std::min(rep.overall_min, v);
    return rep;
}

PsiGraph psi_graph(const Substitution& s, const Projection& v, const Projection& vp,
                   int n_points) {
    int a = s.alphabet_size();
    if (v.cols != a || vp.cols != a)
        throw InputError("projection width does not match the alphabet");
    if (n_points <= 0) throw InputError("point count must be positive");

    PointCloud cv = rauzy_cloud(s, v, n_points);
    PointCloud cvp = rauzy_cloud(s, vp, n_points);

    PsiGraph g;
    g.dim_v = v.rows;
    g.dim_vp = vp.rows;
    g.alphabet = a;
    g.v_coords = std::move(cv.coords);
    g.vp_coords = std::move(cvp.coords);
    g.tags = std::move(cv.tags);

    FixedPointSeed seed = fixed_point_seed(s);
    Substitution sp = seed.power > 1 ? s.power(seed.power) : s;

    g.first_digit.assign(static_cast<size_t>(n_points) * a, 0);
    std::vector<int> cnt(a, 0);
    int k = 0;
    size_t kp = 0;
    while (k < n_points) {
        require(kp < g.tags.size(), "fixed point scan ran past the computed prefix");
        const std::vector<int>& w = sp.images[g.tags[kp]];
        std::fill(cnt.begin(), cnt.end(), 0);
        for (size_t j = 0; j < w.size() && k < n_points; ++j, ++k) {
            std::copy(cnt.begin(), cnt.end(),
                      g.first_digit.begin() + static_cast<size_t>(k) * a);
            cnt[w[j]] += 1;
        }
        kp += 1;
    }

    if (g.dim_v == g.dim_vp) {
        int d = g.dim_v;
        double worst = 0.0;
        for (int p = 0; p < n_points; ++p) {
            const int* digit = g.first_digit.data() + static_cast<size_t>(p) * a;
            for (int i = 0; i < d; ++i) {
                double expected = 0.0;
                for (int j = 0; j < a; ++j)
                    expected += (vp.at(i, j) - v.at(i, j)) * digit[j];
                double got = g.vp_coords[static_cast<size_t>(p) * d + i] -
                             g.v_coords[static_cast<size_t>(p) * d + i];
                worst = std::max(worst, std::abs(got - expected));
            }
        }
        g.translation_defect = worst;
    }
    return g;
}

}  // namespace ss
