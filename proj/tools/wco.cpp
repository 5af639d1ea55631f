#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wco/expr.hpp"
#include "wco/theorems.hpp"

namespace {

using wco::Complex;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kVersion = "wco 1.0.0";
constexpr const char* kSchema = "wco-report/1";

Complex parse_complex_value(const nlohmann::json& v) {
    if (v.is_number()) return Complex(v.get<double>());
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return Complex(v[0].get<double>(), v[1].get<double>());
    if (v.is_string()) {
        const wco::TruncatedSeries s = wco::parse_symbol_series(v.get<std::string>(), 1);
        if (std::abs(s.coeff(1)) > 1e-15)
            throw std::invalid_argument("params: expected a constant, got a function of z");
        return s.coeff(0);
    }
    throw std::invalid_argument("params: values must be numbers, [re, im] pairs, or strings");
}

ordered_json complex_json(Complex v) { return ordered_json::array({v.real(), v.imag()}); }

ordered_json params_json(const wco::ParamMap& params) {
    ordered_json out = ordered_json::object();
    for (const auto& [key, value] : params) out[key] = complex_json(value);
    return out;
}

ordered_json checks_json(const std::vector<wco::ResidualReport>& checks) {
    ordered_json out = ordered_json::array();
    for (const wco::ResidualReport& r : checks) {
        out.push_back({{"name", r.name},
                       {"value", r.value},
                       {"order", r.order},
                       {"tailBound", r.tailBound},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}});
    }
    return out;
}

struct Sampler {
    std::mt19937_64 rng;
    std::uniform_real_distribution<double> unit{0.0, 1.0};

    explicit Sampler(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(rng); }
    Complex disk(double radius) {
        const double r = radius * std::sqrt(unit(rng));
        const double t = 2.0 * M_PI * unit(rng);
        return Complex(r * std::cos(t), r * std::sin(t));
    }
    Complex phase() {
        const double t = 2.0 * M_PI * unit(rng);
        return Complex(std::cos(t), std::sin(t));
    }
};

wco::ParamMap draw_params(const std::string& family, Sampler& s, double radius) {
    wco::ParamMap p;
    if (family == "cs-2.3") {
        const Complex base = s.disk(radius);
        p["p"] = base;
        p["lambda"] = wco::solve_conjugation_lambda(base);
        p["a0"] = s.disk(radius);
        p["a1"] = s.disk(radius);
        p["c"] = Complex(s.uniform(0.2, 1.0)) * s.phase();
    } else if (family == "unitary") {
        p["q"] = s.disk(radius);
        p["mu1"] = s.phase();
        p["mu2"] = s.phase();
    } else if (family == "hermitian") {
        p["b0"] = s.disk(radius);
        p["b1"] = Complex(s.uniform(-0.5, 0.5));
        p["b2"] = Complex(s.uniform(-0.5, 0.5));
    } else if (family == "normal-interior") {
        p["p"] = s.disk(std::min(radius, 0.5));
        p["gamma"] = s.phase();
        p["delta"] = s.disk(0.8);
    } else if (family == "boundary-normal") {
        const Complex eta = s.phase();
        const Complex c = Complex(s.uniform(0.05, 0.25)) * s.phase();
        const wco::LinearFractionalMap phi = wco::make_boundary_selfmap(eta, c);
        p["a"] = phi.a();
        p["b"] = phi.b();
        p["c"] = phi.c();
        p["d"] = phi.d();
    } else if (family == "algebraic") {
        p["p"] = s.disk(0.4);
        p["c"] = Complex(s.uniform(0.3, 1.2)) * s.phase();
        p["a1"] = s.disk(0.4);
        p["a3"] = s.disk(0.2);
    } else {
        throw std::invalid_argument("certify: unknown family tag " + family);
    }
    return p;
}

int run_certify(const std::string& family, int order, double tol, std::uint64_t seed,
                int draws, const std::string& paramsText, double radius,
                const std::string& outPath) {
    static const std::set<std::string> kFamilies = {
        "cs-2.3", "unitary", "hermitian", "normal-interior", "boundary-normal", "algebraic"};
    if (kFamilies.count(family) == 0)
        throw std::invalid_argument("certify: unknown family tag " + family);
    const auto start = std::chrono::steady_clock::now();
    ordered_json report;
    report["schema"] = kSchema;
    report["version"] = kVersion;
    report["command"] = "certify";
    report["config"] = {{"family", family},   {"order", order}, {"tolerance", tol},
                        {"seed", seed},       {"draws", draws}, {"safetyRadius", radius},
                        {"explicitParams", !paramsText.empty()}};

    ordered_json runs = ordered_json::array();
    bool allPass = true;
    int rejections = 0;

    auto run_one = [&](int index, const wco::ParamMap& params) {
        ordered_json entry;
        entry["index"] = index;
        entry["params"] = params_json(params);
        try {
            const wco::CertificateReport r = wco::certify_theorem(family, params, order, tol);
            entry["checks"] = checks_json(r.checks);
            entry["pass"] = r.pass;
            allPass = allPass && r.pass;
        } catch (const std::invalid_argument& e) {
            entry["checks"] = checks_json({wco::make_report(e.what(), 1.0, order, 0.0, 0.0)});
            entry["pass"] = false;
            allPass = false;
        }
        runs.push_back(entry);
    };

    if (!paramsText.empty()) {
        const nlohmann::json raw = nlohmann::json::parse(paramsText);
        if (!raw.is_object()) throw std::invalid_argument("params: expected a JSON object");
        wco::ParamMap params;
        for (const auto& [key, value] : raw.items()) params[key] = parse_complex_value(value);
        run_one(0, params);
    } else {
        Sampler s(seed);
        for (int k = 0; k < draws; ++k) {
            bool done = false;
            for (int attempt = 0; attempt < 200 && !done; ++attempt) {
                const wco::ParamMap params = draw_params(family, s, radius);
                try {
                    const wco::CertificateReport r =
                        wco::certify_theorem(family, params, order, tol);
                    ordered_json entry;
                    entry["index"] = k;
                    entry["params"] = params_json(params);
                    entry["checks"] = checks_json(r.checks);
                    entry["pass"] = r.pass;
                    runs.push_back(entry);
                    allPass = allPass && r.pass;
                    done = true;
                } catch (const std::invalid_argument&) {
                    ++rejections;
                }
            }
            if (!done) {
                runs.push_back({{"index", k}, {"pass", false},
                                {"error", "no admissible draw after 200 attempts"}});
                allPass = false;
            }
        }
    }

    report["runs"] = runs;
    report["constructorRejections"] = rejections;
    report["verdict"] = allPass ? "pass" : "fail";
    report["durationMs"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const std::string body = report.dump(2);
    std::cout << body << std::endl;
    if (!outPath.empty()) {
        std::ofstream out(outPath);
        out << body << std::endl;
    }
    return allPass ? 0 : 1;
}

int run_classify(const std::string& psiText, const std::string& phiText, int order, double tol,
                 const std::string& outPath) {
    const auto start = std::chrono::steady_clock::now();
    const int ne = wco::recommended_eval_order(order, 4.0);
    const wco::TruncatedSeries psi = wco::parse_symbol_series(psiText, ne);
    const wco::TruncatedSeries phi = wco::parse_symbol_series(phiText, ne);

    ordered_json report;
    report["schema"] = kSchema;
    report["version"] = kVersion;
    report["command"] = "classify";
    report["config"] = {{"psi", psiText}, {"phi", phiText}, {"order", order},
                        {"tolerance", tol}};

    const wco::AlgebraicCertificate cert = wco::classify_algebraic(psi, phi, order, tol);
    bool pass = true;
    if (cert.algebraic) {
        ordered_json c;
        c["degree"] = cert.degree;
        c["case"] = wco::algebraic_case_name(cert.caseTag);
        c["A"] = complex_json(cert.A);
        c["B"] = complex_json(cert.B);
        c["C"] = complex_json(cert.C);
        if (cert.caseTag == wco::AlgebraicCase::InvolutionOddWeight) {
            c["fixedPoint"] = complex_json(cert.fixedPoint);
            c["oddConstant"] = complex_json(cert.oddConstant);
        }
        report["certificate"] = c;
        const wco::ResidualReport eq17 = wco::verify_case3_identity(psi, phi, cert, 8);
        report["checks"] = checks_json({cert.annihilator, eq17});
        pass = cert.annihilator.pass && eq17.pass;
        report["verdict"] = pass ? "pass" : "fail";
    } else {
        report["certificate"] = nullptr;
        report["reason"] = cert.failureReason;
        report["verdict"] = "not-algebraic-deg2";
    }
    report["durationMs"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const std::string body = report.dump(2);
    std::cout << body << std::endl;
    if (!outPath.empty()) {
        std::ofstream out(outPath);
        out << body << std::endl;
    }
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical certification of weighted composition operator structure on H^2"};
    app.require_subcommand(1);

    std::string family, paramsText, outPath;
    int order = 128, draws = 10;
    double tol = 1e-8, radius = 0.6;
    std::uint64_t seed = 1;

    CLI::App* certify = app.add_subcommand("certify", "Run a family certification sweep");
    certify->add_option("--family", family, "Family tag")->required();
    certify->add_option("--order", order, "Truncation order N");
    certify->add_option("--tol", tol, "Residual tolerance (0 = adaptive)");
    certify->add_option("--seed", seed, "Random seed");
    certify->add_option("--draws", draws, "Number of random parameter draws");
    certify->add_option("--params", paramsText, "Explicit parameters as a JSON object");
    certify->add_option("--safety-radius", radius, "Parameter sampling radius");
    certify->add_option("--out", outPath, "Also write the report to this path");

    std::string psiText, phiText;
    int clOrder = 96;
    double clTol = 0.0;
    std::string clOut;
    CLI::App* classify = app.add_subcommand("classify", "Classify algebraic degree <= 2");
    classify->add_option("--psi", psiText, "Weight symbol expression")->required();
    classify->add_option("--phi", phiText, "Composition symbol expression")->required();
    classify->add_option("--order", clOrder, "Truncation order N");
    classify->add_option("--tol", clTol, "Residual tolerance (0 = adaptive)");
    classify->add_option("--out", clOut, "Also write the report to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (certify->parsed()) {
            if (order < 8 || tol < 0.0 || radius <= 0.0 || radius >= 1.0 || draws < 1) {
                std::cerr << "invalid configuration" << std::endl;
                return 2;
            }
            return run_certify(family, order, tol, seed, draws, paramsText, radius, outPath);
        }
        if (clOrder < 8) {
            std::cerr << "invalid configuration" << std::endl;
            return 2;
        }
        return run_classify(psiText, phiText, clOrder, clTol, clOut);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return 2;
    }
}
