#include "skein/quantum_torus.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <sstream>
#include <vector>

#include "skein/series_ops.hpp"

namespace skein {

QTSeries QTSeries::unit(Cutoff cutoff) {
    QTSeries u(cutoff);
    u.add_term({0, 0}, Scalar(1));
    return u;
}

QTSeries QTSeries::generator(Vec2 x, Cutoff cutoff) {
    QTSeries g(cutoff);
    g.add_term(x, Scalar(1));
    return g;
}

QTSeries QTSeries::constant(Scalar c, Cutoff cutoff) {
    QTSeries g(cutoff);
    g.add_term({0, 0}, c);
    return g;
}

Scalar QTSeries::coeff(Vec2 x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Scalar{} : it->second;
}

void QTSeries::add_term(Vec2 x, const Scalar& c) {
    if (c.is_zero()) return;
    if (cutoff_) {
        if (!in_first_quadrant(x))
            throw std::domain_error(
                "QTSeries: truncated series only support the closed first quadrant");
        if (delta_degree(x) > *cutoff_) return;
    }
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QTSeries QTSeries::truncated(Cutoff cutoff) const {
    QTSeries r(min_cutoff(cutoff_, cutoff));
    for (const auto& [x, c] : terms_) r.add_term(x, c);
    return r;
}

QTSeries operator+(const QTSeries& a, const QTSeries& b) {
    QTSeries r = a.truncated(b.cutoff_);
    for (const auto& [x, c] : b.terms_) r.add_term(x, c);
    return r;
}

QTSeries operator-(const QTSeries& a, const QTSeries& b) { return a + (-b); }

QTSeries QTSeries::operator-() const {
    QTSeries r(cutoff_);
    for (const auto& [x, c] : terms_) r.terms_.emplace(x, -c);
    return r;
}

QTSeries QTSeries::scaled(const Scalar& c) const {
    QTSeries r(cutoff_);
    if (c.is_zero()) return r;
    for (const auto& [x, v] : terms_) {
        Scalar s = v * c;
        if (!s.is_zero()) r.terms_.emplace(x, std::move(s));
    }
    return r;
}

QTSeries qt_mul_serial(const QTSeries& f, const QTSeries& g) {
    QTSeries r(min_cutoff(f.cutoff(), g.cutoff()));
    for (const auto& [x, a] : f.terms())
        for (const auto& [y, b] : g.terms()) {
            Vec2 z = x + y;
            if (!within_cutoff(r.cutoff(), delta_degree(z))) continue;
            r.add_term(z, a * b * Scalar::s_power(static_cast<int>(det2(x, y))));
        }
    return r;
}

QTSeries qt_mul(const QTSeries& f, const QTSeries& g) {
#ifdef _OPENMP
    if (f.terms().size() > 1 && omp_get_max_threads() > 1) {
        Cutoff rc = min_cutoff(f.cutoff(), g.cutoff());
        std::vector<const std::pair<const Vec2, Scalar>*> left;
        left.reserve(f.terms().size());
        for (const auto& t : f.terms()) left.push_back(&t);

        QTSeries r(rc);
#pragma omp parallel
        {
            QTSeries local(rc);
#pragma omp for schedule(dynamic) nowait
            for (std::size_t k = 0; k < left.size(); ++k) {
                const auto& [x, a] = *left[k];
                for (const auto& [y, b] : g.terms()) {
                    Vec2 z = x + y;
                    if (!within_cutoff(rc, delta_degree(z))) continue;
                    local.add_term(z, a * b * Scalar::s_power(static_cast<int>(det2(x, y))));
                }
            }
#pragma omp critical
            {
                for (const auto& [x, c] : local.terms()) r.add_term(x, c);
            }
        }
        return r;
    }
#endif
    return qt_mul_serial(f, g);
}

QTSeries operator*(const QTSeries& a, const QTSeries& b) { return qt_mul(a, b); }

QTSeries phi_series(Vec2 x, int max_degree) {
    return dilog_series<QTSeries>(x, max_degree);
}

QTSeries phi_product_series(Vec2 x, int max_degree) {
    if (!in_first_quadrant(x) || delta_degree(x) < 1)
        throw std::domain_error(
            "phi_product_series requires a direction of positive delta degree in the "
            "closed first quadrant");
    QTSeries r{Cutoff(max_degree)};
    Scalar c(1);
    r.add_term({0, 0}, c);
    int kmax = max_degree / delta_degree(x);
    for (int k = 1; k <= kmax; ++k) {
        // c_k = s^{2k-1} c_{k-1} / (1 - s^{2k})
        Scalar ratio = Scalar::fraction(
            LaurentPoly::monomial(1, 2 * k - 1),
            LaurentPoly::from_terms({{0, mpz_class(1)}, {2 * k, mpz_class(-1)}}));
        c = c * ratio;
        r.add_term(x * k, c);
    }
    return r;
}

std::string QTSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [x, c] : terms_) {
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
        if (skein::is_zero(x)) {
            out << v.to_string();
        } else if (v.is_one()) {
            out << "X" << skein::to_string(x);
        } else {
            out << v.to_string() << "*X" << skein::to_string(x);
        }
    }
    return out.str();
}

VerificationReport verify_phi_pentagon(int max_degree) {
    VerificationReport report;
    report.check = "phi-pentagon";
    report.algebra = "quantum-torus";
    report.max_degree = max_degree;
    report.grid = true;
    ReportTimer timer(report);

    const Vec2 x{1, 0}, y{0, 1};
    QTSeries phi_x = phi_series(x, max_degree);
    QTSeries phi_y = phi_series(y, max_degree);
    QTSeries phi_xy = phi_series(x + y, max_degree);

    QTSeries lhs = phi_x * phi_y;
    QTSeries rhs = phi_y * phi_xy * phi_x;
    QTSeries diff = lhs - rhs;

    for (int i = 0; i <= max_degree; ++i)
        for (int j = 0; i + j <= max_degree; ++j) {
            ++report.bidegrees_checked;
            Scalar d = diff.coeff({i, j});
            if (!d.is_zero())
                report.record_failure({i, j}, d.to_string() + "*X" + skein::to_string({i, j}));
        }
    return report;
}

}  // namespace skein
