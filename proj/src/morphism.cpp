#include "skein/morphism.hpp"

#include <array>

#include "skein/dilog.hpp"
#include "skein/sampling.hpp"

namespace skein {

QTSeries project(const SkeinElement& f) {
    QTSeries r(f.cutoff());
    for (const auto& [m, c] : f.terms()) {
        // X_{w1} ... X_{wm} = s^{sum_{p<q} det2(w_p, w_q)} X_{w1 + ... + wm}
        const auto& w = m.factors();
        std::int64_t twist = 0;
        Vec2 total{0, 0};
        for (std::size_t p = 0; p < w.size(); ++p) {
            total = total + w[p];
            for (std::size_t q = p + 1; q < w.size(); ++q) twist += det2(w[p], w[q]);
        }
        r.add_term(total, c * Scalar::s_power(static_cast<int>(twist)));
    }
    return r;
}

namespace {

// random element with a few low-degree monomials and small coefficients
SkeinElement random_element(Sampler& sampler, int max_degree, Cutoff cutoff) {
    SkeinElement f(cutoff);
    int nterms = sampler.range(1, 3);
    for (int t = 0; t < nterms; ++t) {
        std::vector<Vec2> word;
        int degree_left = max_degree;
        int len = sampler.range(0, 2);
        for (int k = 0; k < len && degree_left > 0; ++k) {
            Vec2 v = sampler.first_quadrant_vec(2);
            if (delta_degree(v) > degree_left) continue;
            degree_left -= delta_degree(v);
            word.push_back(v);
        }
        Scalar c(sampler.range(-3, 3));
        if (sampler.range(0, 3) == 0) c = c * Scalar::s_power(sampler.range(-2, 2));
        // multiply into PBW form through the rewriting engine's public surface
        SkeinElement mono = SkeinElement::unit(cutoff);
        for (Vec2 v : word) mono = mono * SkeinElement::generator(v, cutoff);
        f = f + mono.scaled(c);
    }
    return f;
}

std::string first_difference(const QTSeries& diff) {
    const auto& [x, c] = *diff.terms().begin();
    return c.to_string() + "*X" + to_string(x);
}

}  // namespace

VerificationReport homomorphism_check(int max_degree, int samples, std::uint64_t seed) {
    VerificationReport report;
    report.check = "homomorphism";
    report.algebra = "torus-skein -> quantum-torus";
    report.max_degree = max_degree;
    ReportTimer timer(report);

    Sampler sampler(seed);
    Cutoff cutoff{max_degree};
    for (int n = 0; n < samples; ++n) {
        SkeinElement f, g;
        if (n == 0) {
            f = SkeinElement::generator({0, 1}, cutoff);
            g = SkeinElement::generator({1, 0}, cutoff);
        } else {
            f = random_element(sampler, max_degree, cutoff);
            g = random_element(sampler, max_degree, cutoff);
        }
        QTSeries via_skein = project(multiply(f, g));
        QTSeries via_torus = qt_mul(project(f), project(g));
        ++report.bidegrees_checked;
        if (!(via_skein == via_torus))
            report.record_failure((via_skein - via_torus).terms().begin()->first,
                                  first_difference(via_skein - via_torus));
    }
    return report;
}

VerificationReport dilog_compatibility_check(int max_degree) {
    VerificationReport report;
    report.check = "dilog-image";
    report.algebra = "torus-skein -> quantum-torus";
    report.max_degree = max_degree;
    ReportTimer timer(report);

    const std::array<Vec2, 3> directions{{{1, 0}, {0, 1}, {1, 1}}};
    for (Vec2 l : directions) {
        QTSeries image = project(skein_dilog(l, max_degree));
        QTSeries phi = phi_series(l, max_degree);
        ++report.bidegrees_checked;
        if (!(image == phi))
            report.record_failure(l, "project(Q" + to_string(l) + ") - Phi(X" + to_string(l) +
                                         ") = " + (image - phi).to_string());
    }
    return report;
}

}  // namespace skein
