#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skein/dilog.hpp"
#include "skein/expr.hpp"
#include "skein/morphism.hpp"
#include "skein/quantum_torus.hpp"

namespace {

int degree_ceiling() {
    if (const char* env = std::getenv("SKEINDILOG_DEGREE_CEILING")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (...) {
            std::cerr << "warning: ignoring invalid SKEINDILOG_DEGREE_CEILING\n";
        }
    }
    return 16;
}

int emit(const skein::VerificationReport& report, const std::string& format) {
    if (format == "json")
        std::cout << report.to_json() << "\n";
    else
        std::cout << report.to_text();
    return report.passed ? 0 : 1;
}

nlohmann::ordered_json terms_json(const skein::SkeinElement& e) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [m, c] : e.terms()) {
        nlohmann::ordered_json t;
        auto factors = nlohmann::ordered_json::array();
        for (skein::Vec2 f : m.factors()) factors.push_back({f.i, f.j});
        t["factors"] = factors;
        t["coefficient"] = c.to_string();
        arr.push_back(t);
    }
    return arr;
}

nlohmann::ordered_json terms_json(const skein::QTSeries& e) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [x, c] : e.terms()) {
        nlohmann::ordered_json t;
        t["vector"] = {x.i, x.j};
        t["coefficient"] = c.to_string();
        arr.push_back(t);
    }
    return arr;
}

template <class Element>
int emit_expansion(const std::string& expr, const std::string& algebra, int max_degree,
                   const Element& value, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["expr"] = expr;
        j["algebra"] = algebra;
        j["max_degree"] = max_degree;
        j["value"] = value.to_string();
        j["terms"] = terms_json(value);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << value.to_string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "skeindilog: exact verification of the dilogarithm pentagon identity in the "
        "torus skein algebra and the quantum torus"};
    app.require_subcommand(1);

    std::string format = "text";
    int threads = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--threads", threads, "worker threads (0 = runtime default)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    int ceiling = degree_ceiling();
    auto degree_option = [&](CLI::App* cmd, int& target, int def) {
        target = def;
        cmd->add_option("--max-degree", target, "delta-degree cutoff")
            ->check(CLI::Range(0, ceiling))
            ->capture_default_str();
    };

    std::string pentagon_algebra = "torus-skein";
    int pentagon_degree = 0;
    auto* pentagon = app.add_subcommand("pentagon", "verify Q_x Q_y = Q_y Q_{x+y} Q_x");
    pentagon->add_option("--algebra", pentagon_algebra, "algebra to verify in")
        ->check(CLI::IsMember({"torus-skein", "quantum-torus"}))
        ->capture_default_str();
    degree_option(pentagon, pentagon_degree, 6);

    int phi_degree = 0;
    auto* phi = app.add_subcommand(
        "phi-pentagon", "verify the quantum dilogarithm pentagon in the quantum torus");
    degree_option(phi, phi_degree, 8);

    auto* identity =
        app.add_subcommand("identity-2-2", "verify the bidegree-(2,2) commutator identity");

    int ad_degree = 0, ad_samples = 10;
    std::uint64_t ad_seed = 0;
    auto* ad = app.add_subcommand("ad-check", "verify Ad_{Q_x} P_y = P_y + P_{x+y}");
    degree_option(ad, ad_degree, 6);
    ad->add_option("--samples", ad_samples, "det = +-1 pairs to sample")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ad->add_option("--seed", ad_seed, "random seed")->capture_default_str();

    int jacobi_samples = 100;
    std::uint64_t jacobi_seed = 0;
    auto* jacobi =
        app.add_subcommand("jacobi", "check the Jacobi certificate on random triples");
    jacobi->add_option("--samples", jacobi_samples, "triples to sample")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    jacobi->add_option("--seed", jacobi_seed, "random seed")->capture_default_str();

    int hom_degree = 0, hom_samples = 50;
    std::uint64_t hom_seed = 0;
    auto* hom = app.add_subcommand(
        "homomorphism", "check project(f*g) = project(f)*project(g) on random pairs");
    degree_option(hom, hom_degree, 5);
    hom->add_option("--samples", hom_samples, "pairs to sample")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    hom->add_option("--seed", hom_seed, "random seed")->capture_default_str();

    int image_degree = 0;
    auto* image = app.add_subcommand(
        "dilog-image", "check project(Q_l) = Phi(X_l) for l = (1,0), (0,1), (1,1)");
    degree_option(image, image_degree, 6);

    std::string expand_expr, expand_algebra = "torus-skein";
    int expand_degree = 0;
    auto* expand = app.add_subcommand("expand", "evaluate an expression at the cutoff");
    expand->add_option("--expr", expand_expr,
                       "expression over P[i,j] / X[i,j], Q[i,j], Qinv[i,j] and scalars")
        ->required();
    expand->add_option("--algebra", expand_algebra, "algebra to evaluate in")
        ->check(CLI::IsMember({"torus-skein", "quantum-torus"}))
        ->capture_default_str();
    degree_option(expand, expand_degree, 6);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (*pentagon) {
            auto kind = pentagon_algebra == "torus-skein" ? skein::AlgebraKind::torus_skein
                                                          : skein::AlgebraKind::quantum_torus;
            return emit(skein::pentagon_check(pentagon_degree, kind), format);
        }
        if (*phi) return emit(skein::verify_phi_pentagon(phi_degree), format);
        if (*identity) return emit(skein::identity_2_2_check(), format);
        if (*ad) return emit(skein::ad_property_check(ad_degree, ad_samples, ad_seed), format);
        if (*jacobi) return emit(skein::jacobi_suite(jacobi_samples, jacobi_seed), format);
        if (*hom)
            return emit(skein::homomorphism_check(hom_degree, hom_samples, hom_seed), format);
        if (*image) return emit(skein::dilog_compatibility_check(image_degree), format);
        if (*expand) {
            if (expand_algebra == "torus-skein") {
                auto value = skein::evaluate_skein_expression(expand_expr, expand_degree);
                return emit_expansion(expand_expr, expand_algebra, expand_degree, value, format);
            }
            auto value = skein::evaluate_qt_expression(expand_expr, expand_degree);
            return emit_expansion(expand_expr, expand_algebra, expand_degree, value, format);
        }
    } catch (const skein::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
