#include "skein/laurent.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace skein {

LaurentPoly LaurentPoly::monomial(mpz_class coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace_back(exp, std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : terms) {
        if (c == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().first == e) {
            p.terms_.back().second += c;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else {
            p.terms_.emplace_back(e, std::move(c));
        }
    }
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.front().first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.back().first;
}

const mpz_class& LaurentPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return terms_.back().second;
}

const mpz_class& LaurentPoly::trailing_coeff() const {
    if (terms_.empty()) throw std::domain_error("trailing_coeff of zero polynomial");
    return terms_.front().second;
}

mpz_class LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    if (k == 0) return *this;
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) p.terms_.emplace_back(e + k, c);
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) p.terms_.emplace_back(e, -c);
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (ia->first < ib->first) {
            r.terms_.push_back(*ia++);
        } else if (ib->first < ia->first) {
            r.terms_.push_back(*ib++);
        } else {
            mpz_class c = ia->second + ib->second;
            if (c != 0) r.terms_.emplace_back(ia->first, std::move(c));
            ++ia, ++ib;
        }
    }
    r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
    r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) {
        const auto& [e, c] = a.terms_[0];
        LaurentPoly r;
        r.terms_.reserve(b.terms_.size());
        for (const auto& [be, bc] : b.terms_) r.terms_.emplace_back(be + e, bc * c);
        return r;
    }
    if (b.is_monomial()) return b * a;

    // dense accumulation over the exponent span
    int lo = a.min_exp() + b.min_exp();
    int hi = a.max_exp() + b.max_exp();
    std::vector<mpz_class> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ae, ac] : a.terms_)
        for (const auto& [be, bc] : b.terms_)
            acc[static_cast<std::size_t>(ae + be - lo)] += ac * bc;
    LaurentPoly r;
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (acc[k] != 0) r.terms_.emplace_back(lo + static_cast<int>(k), std::move(acc[k]));
    return r;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (g == 1) return *this;
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) p.terms_.emplace_back(e, c / g);
    return p;
}

namespace {

// dense coefficient vector indexed by exponent, for genuine polynomials
std::vector<mpz_class> to_dense(const LaurentPoly& p) {
    std::vector<mpz_class> d(static_cast<std::size_t>(p.max_exp()) + 1);
    for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e)] = c;
    return d;
}

LaurentPoly from_dense(std::vector<mpz_class> d) {
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k] != 0) terms.emplace_back(static_cast<int>(k), std::move(d[k]));
    return LaurentPoly::from_terms(std::move(terms));
}

int dense_deg(const std::vector<mpz_class>& d) {
    for (std::size_t k = d.size(); k-- > 0;)
        if (d[k] != 0) return static_cast<int>(k);
    return -1;
}

// pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b
std::vector<mpz_class> prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    int da = dense_deg(a), db = dense_deg(b);
    const mpz_class& lb = b[static_cast<std::size_t>(db)];
    while (da >= db) {
        mpz_class top = a[static_cast<std::size_t>(da)];
        for (int k = 0; k <= da; ++k) a[static_cast<std::size_t>(k)] *= lb;
        for (int k = 0; k <= db; ++k)
            a[static_cast<std::size_t>(da - db + k)] -= top * b[static_cast<std::size_t>(k)];
        a[static_cast<std::size_t>(da)] = 0;
        da = dense_deg(a);
    }
    a.resize(static_cast<std::size_t>(std::max(da, 0)) + 1);
    return a;
}

void dense_make_primitive(std::vector<mpz_class>& d) {
    mpz_class g = 0;
    for (const auto& c : d) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& c : d) c /= g;
}

// gcd of primitive genuine polynomials via the primitive polynomial remainder
// sequence; returns a primitive result with unnormalized sign
LaurentPoly gcd_prs(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<mpz_class> u = to_dense(a), v = to_dense(b);
    if (dense_deg(u) < dense_deg(v)) std::swap(u, v);
    while (true) {
        int dv = dense_deg(v);
        if (dv < 0) return from_dense(std::move(u));
        if (dv == 0) return LaurentPoly::monomial(1);
        std::vector<mpz_class> r = prem(std::move(u), v);
        dense_make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
}

std::optional<LaurentPoly> try_divexact(const LaurentPoly& a, const LaurentPoly& b);

// Heuristic gcd (evaluate at a large power of two, take the integer gcd,
// reconstruct with balanced digits, verify by exact division). Falls back to
// the PRS when verification fails repeatedly. Inputs primitive, degree >= 1.
std::optional<LaurentPoly> gcd_heuristic(const LaurentPoly& a, const LaurentPoly& b) {
    std::size_t maxbits = 0;
    for (const auto& p : {&a, &b})
        for (const auto& [e, c] : p->terms())
            maxbits = std::max(maxbits, mpz_sizeinbase(c.get_mpz_t(), 2));

    unsigned long bits = static_cast<unsigned long>(maxbits) + 8;
    for (int attempt = 0; attempt < 5; ++attempt, bits = bits * 3 / 2 + 32) {
        auto eval = [bits](const LaurentPoly& p) {
            mpz_class v = 0, shifted;
            for (const auto& [e, c] : p.terms()) {
                mpz_mul_2exp(shifted.get_mpz_t(), c.get_mpz_t(),
                             bits * static_cast<unsigned long>(e));
                v += shifted;
            }
            return v;
        };
        mpz_class alpha = eval(a), beta = eval(b), gamma;
        mpz_gcd(gamma.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());

        // balanced base-2^bits digits
        std::vector<LaurentPoly::Term> digits;
        mpz_class half = mpz_class(1) << (bits - 1);
        int exp = 0;
        while (gamma != 0) {
            mpz_class digit;
            mpz_fdiv_r_2exp(digit.get_mpz_t(), gamma.get_mpz_t(), bits);
            if (digit > half) digit -= mpz_class(1) << bits;
            gamma -= digit;
            mpz_fdiv_q_2exp(gamma.get_mpz_t(), gamma.get_mpz_t(), bits);
            if (digit != 0) digits.emplace_back(exp, std::move(digit));
            ++exp;
        }
        LaurentPoly g = LaurentPoly::from_terms(std::move(digits)).primitive_part();
        if (g.is_zero()) continue;
        if (try_divexact(a, g) && try_divexact(b, g)) return g;
    }
    return std::nullopt;
}

std::optional<LaurentPoly> try_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return LaurentPoly{};
    if (b.is_monomial()) {
        const auto& [be, bc] = b.terms()[0];
        std::vector<LaurentPoly::Term> terms;
        terms.reserve(a.term_count());
        for (const auto& [e, c] : a.terms()) {
            mpz_class q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), bc.get_mpz_t());
            if (r != 0) return std::nullopt;
            terms.emplace_back(e - be, std::move(q));
        }
        return LaurentPoly::from_terms(std::move(terms));
    }
    int shift = a.min_exp() - b.min_exp();
    std::vector<mpz_class> u = to_dense(a.shifted(-a.min_exp()));
    std::vector<mpz_class> v = to_dense(b.shifted(-b.min_exp()));
    int du = dense_deg(u), dv = dense_deg(v);
    if (du < dv) return std::nullopt;
    std::vector<mpz_class> q(static_cast<std::size_t>(du - dv) + 1);
    const mpz_class& lv = v[static_cast<std::size_t>(dv)];
    while (du >= dv) {
        mpz_class qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), u[static_cast<std::size_t>(du)].get_mpz_t(),
                    lv.get_mpz_t());
        if (r != 0) return std::nullopt;
        for (int k = 0; k <= dv; ++k)
            u[static_cast<std::size_t>(du - dv + k)] -= qc * v[static_cast<std::size_t>(k)];
        q[static_cast<std::size_t>(du - dv)] = std::move(qc);
        du = dense_deg(u);
        if (du >= 0 && du < dv) return std::nullopt;  // nonzero remainder
    }
    if (du >= 0) return std::nullopt;
    return from_dense(std::move(q)).shifted(shift);
}

}  // namespace

LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = try_divexact(a, b);
    if (!q) throw std::domain_error("divexact: not divisible");
    return std::move(*q);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    auto normalize = [](LaurentPoly p) {
        if (!p.is_zero() && p.leading_coeff() < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    if (a.min_exp() < 0 || b.min_exp() < 0)
        throw std::domain_error("poly_gcd: arguments must be genuine polynomials");

    mpz_class c;
    mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    LaurentPoly pa = a.primitive_part(), pb = b.primitive_part();
    if (pa == pb) return normalize(pa * LaurentPoly::monomial(c));

    LaurentPoly g;
    if (pa.max_exp() == 0 || pb.max_exp() == 0) {
        g = LaurentPoly::monomial(1);
    } else if (auto h = gcd_heuristic(pa, pb)) {
        g = std::move(*h);
    } else {
        g = gcd_prs(pa, pb);
    }
    return normalize(g * LaurentPoly::monomial(c));
}

}  // namespace skein
