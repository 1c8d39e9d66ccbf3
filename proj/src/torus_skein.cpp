#include "skein/torus_skein.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <iterator>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace skein {

// ---------------------------------------------------------------------------
// PBWMonomial

PBWMonomial PBWMonomial::generator(Vec2 x) {
    if (is_zero(x) || !in_first_quadrant(x))
        throw std::invalid_argument("PBWMonomial: generator outside the cone");
    PBWMonomial m;
    m.factors_.push_back(x);
    return m;
}

PBWMonomial PBWMonomial::from_sorted(std::vector<Vec2> factors) {
    PBWMonomial m;
    m.factors_ = std::move(factors);
    return m;
}

int PBWMonomial::delta_degree() const {
    int d = 0;
    for (Vec2 f : factors_) d += skein::delta_degree(f);
    return d;
}

Vec2 PBWMonomial::bidegree() const {
    Vec2 b{0, 0};
    for (Vec2 f : factors_) b = b + f;
    return b;
}

// total delta degree first, then lexicographic on factor sequences under the
// pbw order; this is the serialization order of elements
std::strong_ordering PBWMonomial::operator<=>(const PBWMonomial& o) const {
    if (auto c = delta_degree() <=> o.delta_degree(); c != 0) return c;
    std::size_t n = std::min(factors_.size(), o.factors_.size());
    for (std::size_t k = 0; k < n; ++k)
        if (auto c = pbw_compare(factors_[k], o.factors_[k]); c != 0) return c;
    return factors_.size() <=> o.factors_.size();
}

std::string PBWMonomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (k) out += '*';
        out += 'P';
        out += skein::to_string(factors_[k]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// SkeinElement

SkeinElement SkeinElement::unit(Cutoff cutoff) {
    SkeinElement u(cutoff);
    u.add_term(PBWMonomial{}, Scalar(1));
    return u;
}

SkeinElement SkeinElement::generator(Vec2 x, Cutoff cutoff) {
    SkeinElement g(cutoff);
    g.add_term(PBWMonomial::generator(x), Scalar(1));
    return g;
}

SkeinElement SkeinElement::constant(Scalar c, Cutoff cutoff) {
    SkeinElement g(cutoff);
    g.add_term(PBWMonomial{}, c);
    return g;
}

Scalar SkeinElement::coeff(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar{} : it->second;
}

void SkeinElement::add_term(const PBWMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    if (cutoff_ && m.delta_degree() > *cutoff_) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkeinElement SkeinElement::truncated(Cutoff cutoff) const {
    SkeinElement r(min_cutoff(cutoff_, cutoff));
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

SkeinElement SkeinElement::bidegree_part(Vec2 bidegree) const {
    SkeinElement r(cutoff_);
    for (const auto& [m, c] : terms_)
        if (m.bidegree() == bidegree) r.terms_.emplace(m, c);
    return r;
}

SkeinElement operator+(const SkeinElement& a, const SkeinElement& b) {
    SkeinElement r = a.truncated(b.cutoff_);
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

SkeinElement operator-(const SkeinElement& a, const SkeinElement& b) { return a + (-b); }

SkeinElement SkeinElement::operator-() const {
    SkeinElement r(cutoff_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SkeinElement SkeinElement::scaled(const Scalar& c) const {
    SkeinElement r(cutoff_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) {
        Scalar s = v * c;
        if (!s.is_zero()) r.terms_.emplace(m, std::move(s));
    }
    return r;
}

std::string SkeinElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        if (first) {
            if (v.has_negative_lead()) {
                out << "-";
                v = -v;
            }
        } else {
            out << (v.has_negative_lead() ? " - " : " + ");
            if (v.has_negative_lead()) v = -v;
        }
        first = false;
        if (m.is_unit()) {
            out << v.to_string();
        } else if (v.is_one()) {
            out << m.to_string();
        } else {
            out << v.to_string() << "*" << m.to_string();
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// rewriting

SkeinElement bracket(Vec2 x, Vec2 y) {
    if (is_zero(x) || is_zero(y)) throw std::invalid_argument("bracket: zero vector");
    if (!in_first_quadrant(x) || !in_first_quadrant(y))
        throw std::invalid_argument("bracket: generator outside the cone");
    SkeinElement r;
    std::int64_t d = det2(x, y);
    if (d == 0) return r;
    r.add_term(PBWMonomial::generator(x + y), quantum_integer(d));
    return r;
}

namespace {

// Rewrite data for an adjacent out-of-order pair P_u P_v (u > v):
//   P_u P_v = P_v P_u + {det2(u,v)} P_{u+v}.
// Memoized; the bracket coefficient is the only nontrivial payload. The cache
// behaves as a pure function table and supports concurrent readers.
struct PairRewrite {
    Vec2 sum;
    Scalar bracket_coeff;
};

struct PairKey {
    Vec2 u, v;
    bool operator<(const PairKey& o) const {
        if (u.i != o.u.i) return u.i < o.u.i;
        if (u.j != o.u.j) return u.j < o.u.j;
        if (v.i != o.v.i) return v.i < o.v.i;
        return v.j < o.v.j;
    }
};

class PairRewriteCache {
public:
    PairRewrite get(Vec2 u, Vec2 v) {
        PairKey key{u, v};
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        PairRewrite r{u + v, quantum_integer(det2(u, v))};
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(key, std::move(r)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<PairKey, PairRewrite> cache_;
};

PairRewriteCache& pair_cache() {
    static PairRewriteCache cache;
    return cache;
}

using Word = std::vector<Vec2>;

int count_inversions(const Word& w) {
    int inv = 0;
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
        for (std::size_t q = p + 1; q < w.size(); ++q)
            if (pbw_compare(w[p], w[q]) == std::strong_ordering::greater) ++inv;
    return inv;
}

// worklist key; popping the largest guarantees every contribution to a word
// has arrived before the word itself is rewritten
struct WorkKey {
    int length;
    int inversions;
    Word word;

    bool operator<(const WorkKey& o) const {
        if (length != o.length) return length < o.length;
        if (inversions != o.inversions) return inversions < o.inversions;
        for (std::size_t k = 0; k < word.size(); ++k) {
            if (word[k].i != o.word[k].i) return word[k].i < o.word[k].i;
            if (word[k].j != o.word[k].j) return word[k].j < o.word[k].j;
        }
        return false;
    }
};

int find_inversion(const Word& w, RewriteStrategy strategy) {
    if (strategy == RewriteStrategy::leftmost_first) {
        for (std::size_t p = 0; p + 1 < w.size(); ++p)
            if (pbw_compare(w[p], w[p + 1]) == std::strong_ordering::greater)
                return static_cast<int>(p);
        return -1;
    }
    for (std::size_t p = w.size(); p-- > 1;)
        if (pbw_compare(w[p - 1], w[p]) == std::strong_ordering::greater)
            return static_cast<int>(p - 1);
    return -1;
}

// Shared rewriting loop: seeds is a batch of (word, coefficient) tasks, all
// within the cutoff. Reconverging rewrite paths are merged through the
// worklist, so every intermediate word is processed at most once.
SkeinElement reduce_words(std::map<WorkKey, Scalar> pending, Cutoff cutoff,
                          RewriteStrategy strategy) {
    SkeinElement result(cutoff);
    while (!pending.empty()) {
        auto node = pending.extract(std::prev(pending.end()));
        const Word& w = node.key().word;
        const Scalar& c = node.mapped();
        int p = find_inversion(w, strategy);
        if (p < 0) {
            result.add_term(PBWMonomial::from_sorted(w), c);
            continue;
        }
        PairRewrite rw = pair_cache().get(w[p], w[p + 1]);

        Word swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        int inv = count_inversions(swapped);
        auto [sit, sfresh] = pending.try_emplace(
            WorkKey{node.key().length, inv, std::move(swapped)}, c);
        if (!sfresh) {
            sit->second += c;
            if (sit->second.is_zero()) pending.erase(sit);
        }

        if (rw.bracket_coeff.is_zero()) continue;
        Word contracted;
        contracted.reserve(w.size() - 1);
        contracted.insert(contracted.end(), w.begin(), w.begin() + p);
        contracted.push_back(rw.sum);
        contracted.insert(contracted.end(), w.begin() + p + 2, w.end());
        Scalar cc = c * rw.bracket_coeff;
        int cinv = count_inversions(contracted);
        auto [cit, cfresh] = pending.try_emplace(
            WorkKey{node.key().length - 1, cinv, std::move(contracted)}, std::move(cc));
        if (!cfresh) {
            cit->second += cc;
            if (cit->second.is_zero()) pending.erase(cit);
        }
    }
    return result;
}

void validate_word(std::span<const Vec2> word) {
    for (Vec2 f : word) {
        if (is_zero(f)) throw std::invalid_argument("normal_order: zero-vector factor");
        if (!in_first_quadrant(f))
            throw std::invalid_argument("normal_order: factor outside the cone");
    }
}

int word_delta(std::span<const Vec2> word) {
    int d = 0;
    for (Vec2 f : word) d += delta_degree(f);
    return d;
}

}  // namespace

SkeinElement normal_order(std::span<const Vec2> word, Cutoff cutoff,
                          RewriteStrategy strategy) {
    validate_word(word);
    if (!within_cutoff(cutoff, word_delta(word))) return SkeinElement(cutoff);
    Word w(word.begin(), word.end());
    std::map<WorkKey, Scalar> pending;
    pending.emplace(WorkKey{static_cast<int>(w.size()), count_inversions(w), std::move(w)},
                    Scalar(1));
    return reduce_words(std::move(pending), cutoff, strategy);
}

namespace {

struct SeedTask {
    Word word;
    Scalar coeff;
};

std::vector<SeedTask> collect_seeds(const SkeinElement& f, const SkeinElement& g,
                                    Cutoff cutoff) {
    std::vector<SeedTask> seeds;
    for (const auto& [ma, ca] : f.terms()) {
        int da = ma.delta_degree();
        for (const auto& [mb, cb] : g.terms()) {
            if (!within_cutoff(cutoff, da + mb.delta_degree())) continue;
            Word w;
            w.reserve(ma.factors().size() + mb.factors().size());
            w.insert(w.end(), ma.factors().begin(), ma.factors().end());
            w.insert(w.end(), mb.factors().begin(), mb.factors().end());
            seeds.push_back({std::move(w), ca * cb});
        }
    }
    return seeds;
}

std::map<WorkKey, Scalar> seeds_to_worklist(std::vector<SeedTask> seeds) {
    std::map<WorkKey, Scalar> pending;
    for (auto& s : seeds) {
        WorkKey key{static_cast<int>(s.word.size()), count_inversions(s.word),
                    std::move(s.word)};
        auto [it, fresh] = pending.try_emplace(std::move(key), std::move(s.coeff));
        if (!fresh) {
            it->second += s.coeff;
            if (it->second.is_zero()) pending.erase(it);
        }
    }
    return pending;
}

}  // namespace

SkeinElement multiply_serial(const SkeinElement& f, const SkeinElement& g) {
    Cutoff cutoff = min_cutoff(f.cutoff(), g.cutoff());
    return reduce_words(seeds_to_worklist(collect_seeds(f, g, cutoff)), cutoff,
                        RewriteStrategy::leftmost_first);
}

SkeinElement multiply(const SkeinElement& f, const SkeinElement& g) {
#ifdef _OPENMP
    Cutoff cutoff = min_cutoff(f.cutoff(), g.cutoff());
    std::vector<SeedTask> seeds = collect_seeds(f, g, cutoff);
    if (seeds.size() > 8 && omp_get_max_threads() > 1) {
        int nthreads = omp_get_max_threads();
        SkeinElement result(cutoff);
#pragma omp parallel num_threads(nthreads)
        {
            std::vector<SeedTask> mine;
#pragma omp for schedule(static) nowait
            for (std::size_t k = 0; k < seeds.size(); ++k) mine.push_back(std::move(seeds[k]));
            SkeinElement local = reduce_words(seeds_to_worklist(std::move(mine)), cutoff,
                                              RewriteStrategy::leftmost_first);
#pragma omp critical
            {
                for (const auto& [m, c] : local.terms()) result.add_term(m, c);
            }
        }
        return result;
    }
    return reduce_words(seeds_to_worklist(std::move(seeds)), cutoff,
                        RewriteStrategy::leftmost_first);
#else
    return multiply_serial(f, g);
#endif
}

SkeinElement operator*(const SkeinElement& a, const SkeinElement& b) {
    return multiply(a, b);
}

SkeinElement commutator(const SkeinElement& f, const SkeinElement& g) {
    return multiply(f, g) - multiply(g, f);
}

bool jacobi_check(Vec2 x, Vec2 y, Vec2 z) {
    if (is_zero(x) || is_zero(y) || is_zero(z))
        throw std::invalid_argument("jacobi_check: zero vector");
    std::int64_t a = det2(x, y), b = det2(y, z), c = det2(z, x);
    Scalar v = quantum_integer(a) * quantum_integer(b - c) +
               quantum_integer(b) * quantum_integer(c - a) +
               quantum_integer(c) * quantum_integer(a - b);
    return v.is_zero();
}

}  // namespace skein
