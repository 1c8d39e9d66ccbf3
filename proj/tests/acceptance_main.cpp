// Acceptance suite: runs every acceptance criterion at its stated parameters
// and prints one pass/fail line per criterion. All comparisons are exact
// rational-function identities; there is no numerical tolerance anywhere.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "skein/dilog.hpp"
#include "skein/morphism.hpp"
#include "skein/quantum_torus.hpp"
#include "skein/sampling.hpp"
#include "skein/series_ops.hpp"

using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli = "skeindilog";
int g_failures = 0;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void outcome(int index, const std::string& name, bool ok, double elapsed_ms,
             const std::string& detail = "") {
    std::printf("%s  [%d] %-58s %9.0f ms%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                elapsed_ms, detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++g_failures;
}

struct CliRun {
    int exit_code = -1;
    nlohmann::json report;
    bool parsed = false;
};

CliRun run_cli(const std::string& args) {
    CliRun r;
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::string output;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.report = nlohmann::json::parse(output, nullptr, /*allow_exceptions=*/false);
    r.parsed = !r.report.is_discarded();
    return r;
}

// 1. pentagon in the torus skein algebra, all 45 bidegrees at N = 8, <= 5 min
void criterion_pentagon_skein() {
    auto t0 = Clock::now();
    CliRun r = run_cli("pentagon --algebra torus-skein --max-degree 8 --format json");
    double ms = ms_since(t0);
    bool ok = r.exit_code == 0 && r.parsed && r.report.value("status", "") == "pass" &&
              r.report.value("bidegrees_checked", 0) == 45 && ms <= 5 * 60 * 1000.0;
    outcome(1, "pentagon, torus-skein, N=8 (45 bidegrees, exact zero)", ok, ms);
}

// 2. pentagon in the quantum torus, all 91 bidegrees at N = 12, <= 1 min
void criterion_pentagon_qt() {
    auto t0 = Clock::now();
    CliRun r = run_cli("phi-pentagon --max-degree 12 --format json");
    double ms = ms_since(t0);
    bool ok = r.exit_code == 0 && r.parsed && r.report.value("status", "") == "pass" &&
              r.report.value("bidegrees_checked", 0) == 91 && ms <= 60 * 1000.0;
    outcome(2, "phi-pentagon, quantum torus, N=12 (91 bidegrees)", ok, ms);
}

// 3. bidegree-(2,2) identity: both sides are the canonical multiple
//    (s^2 + s^-2)/(s^2 - s^-2) of P_{(2,2)};
//    oracle: {4}/{2}^2 = {2}/{1}^2 - 2/{2}
void criterion_identity_2_2() {
    using namespace skein;
    auto t0 = Clock::now();
    auto primed = [](Vec2 v) {
        auto [k, v0] = primitive_decompose(v);
        return SkeinElement::generator(v).scaled(quantum_integer(k).inv());
    };
    const Vec2 x{1, 0}, y{0, 1};
    SkeinElement lhs = commutator(primed({2, 0}), primed({0, 2}));
    SkeinElement rhs =
        commutator(primed(x), primed(x + y * 2)) - primed({2, 2}).scaled(Scalar(2));

    Scalar expected = parse_scalar("(s^2 + s^-2)/(s^2 - s^-2)");
    Scalar lhs_oracle = quantum_integer(4) * (quantum_integer(2) * quantum_integer(2)).inv();
    Scalar rhs_oracle = quantum_integer(2) * (quantum_integer(1) * quantum_integer(1)).inv() -
                        Scalar(2) * quantum_integer(2).inv();
    SkeinElement target = SkeinElement::generator({2, 2}).scaled(expected);

    bool ok = lhs == rhs && lhs == target && lhs_oracle == expected && rhs_oracle == expected &&
              identity_2_2_check().passed;
    outcome(3, "bidegree-(2,2) identity reduces to (s^2 + s^-2)/(s^2 - s^-2)", ok,
            ms_since(t0));
}

// 4. Ad_{Q_x} P_y = P_y + P_{x+y} to degree 6 on >= 10 sampled det = +-1 pairs
void criterion_ad_action() {
    auto t0 = Clock::now();
    auto report = skein::ad_property_check(6, 10, 2026);
    double ms = ms_since(t0);
    bool ok = report.passed && report.bidegrees_checked >= 10 && ms <= 60 * 1000.0;
    outcome(4, "Ad-action, degree 6, 10 sampled det = +-1 pairs", ok, ms);
}

// 5. Jacobi certificate on 100 random lattice triples
void criterion_jacobi() {
    auto t0 = Clock::now();
    skein::Sampler sampler(424242);
    bool ok = true;
    for (int n = 0; n < 100; ++n)
        ok = ok && skein::jacobi_check(sampler.nonzero_vec(8), sampler.nonzero_vec(8),
                                       sampler.nonzero_vec(8));
    outcome(5, "Jacobi certificate, 100 random triples, exact zero", ok, ms_since(t0));
}

// 6. PBW confluence: leftmost-first vs rightmost-first on 200 random words
void criterion_confluence() {
    auto t0 = Clock::now();
    skein::Sampler sampler(8675309);
    const std::array<skein::Vec2, 10> pool{{{1, 0},
                                            {0, 1},
                                            {1, 1},
                                            {2, 0},
                                            {0, 2},
                                            {2, 1},
                                            {1, 2},
                                            {3, 1},
                                            {2, 2},
                                            {1, 3}}};
    bool ok = true;
    for (int n = 0; n < 200; ++n) {
        std::vector<skein::Vec2> w(static_cast<std::size_t>(sampler.range(0, 5)));
        for (auto& f : w) f = pool[static_cast<std::size_t>(sampler.range(0, 9))];
        auto left = skein::normal_order(w, skein::unbounded,
                                        skein::RewriteStrategy::leftmost_first);
        auto right = skein::normal_order(w, skein::unbounded,
                                         skein::RewriteStrategy::rightmost_first);
        ok = ok && left == right;
    }
    outcome(6, "PBW confluence, 200 random words of length <= 5", ok, ms_since(t0));
}

// 7. quotient map: homomorphism on 50 random pairs (degree <= 5) and
//    project(Q_l) = Phi(X_l) to degree 6 for the three directions
void criterion_quotient_map() {
    auto t0 = Clock::now();
    auto hom = skein::homomorphism_check(5, 50, 777);
    auto dilog = skein::dilog_compatibility_check(6);
    bool ok = hom.passed && hom.bidegrees_checked == 50 && dilog.passed &&
              dilog.bidegrees_checked == 3;
    outcome(7, "quotient map: 50 product pairs and project(Q_l) = Phi(X_l)", ok, ms_since(t0));
}

// 8. product form vs exponential form to degree 16:
//    prod_{n}(1 + s^{1+2n} X) = exp(sum_k (-1)^k X^k/(k{k})) = Phi^{-1}
void criterion_product_vs_exp() {
    auto t0 = Clock::now();
    skein::Vec2 x{1, 0};
    auto prod = skein::phi_product_series(x, 16);
    auto exp_form = skein::dilog_series<skein::QTSeries>(x, 16, /*inverted=*/true);
    auto phi = skein::phi_series(x, 16);
    double ms = ms_since(t0);
    bool ok = prod == exp_form &&
              skein::qt_mul(prod, phi) == skein::QTSeries::unit(skein::Cutoff(16)) &&
              ms <= 10 * 1000.0;
    outcome(8, "product form = exp((-1)^k exponent) = Phi^{-1}, degree 16", ok, ms);
}

}  // namespace

int main(int argc, char** argv) {
    for (int k = 1; k < argc; ++k)
        if (std::strcmp(argv[k], "--cli") == 0 && k + 1 < argc) g_cli = argv[++k];

    criterion_pentagon_skein();
    criterion_pentagon_qt();
    criterion_identity_2_2();
    criterion_ad_action();
    criterion_jacobi();
    criterion_confluence();
    criterion_quotient_map();
    criterion_product_vs_exp();

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
