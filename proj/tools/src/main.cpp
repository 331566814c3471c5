#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "descent/census.hpp"
#include "descent/curve.hpp"
#include "descent/errors.hpp"
#include "descent/localsolve.hpp"
#include "descent/search.hpp"
#include "descent/sieve.hpp"
#include "descent/zerodim.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw descent::Error("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw descent::Error("cannot write " + path);
    out << text;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

descent::HyperellipticCurve load_curve(const std::string& file,
                                       const std::string& coeffs) {
    if (!coeffs.empty()) {
        std::vector<descent::BigRat> f;
        for (const auto& part : split_csv(coeffs))
            f.push_back(descent::parse_rat(part));
        return descent::new_curve(f);
    }
    if (file.empty())
        throw descent::Error("give a curve JSON file or --coeffs");
    return descent::curve_from_json_string(read_file(file));
}

std::string describe_endpoint(const descent::RealEndpoint& e) {
    if (e.infinite) return e.direction < 0 ? "-inf" : "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", e.approx.get_d());
    return buf;
}

void print_verdict_line(const descent::LocalVerdict& v) {
    std::string place = v.is_real_place ? "real" : std::to_string(v.p);
    std::string line = place + " " + (v.solvable ? "yes" : "no");
    if (v.solvable && v.is_real_place && v.real_interval) {
        line += " witness=x in [" + describe_endpoint(v.real_interval->lo) +
                ", " + describe_endpoint(v.real_interval->hi) + "]";
    } else if (v.solvable && v.witness) {
        line += " witness=x=" + v.witness->rep.get_str() + " chart=" +
                (v.witness->chart == descent::Chart::Direct ? "direct"
                                                            : "reciprocal") +
                " mod p^" + std::to_string(v.witness->depth);
    } else if (!v.solvable && !v.is_real_place) {
        line += " refutation=" + std::to_string(v.refutation.size()) +
                " residue classes";
    }
    std::cout << line << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "finite-abelian descent obstructions for hyperelliptic curves: local "
        "solvability, point search, Mordell-Weil sieving and a census "
        "pipeline"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- local ----------------------------------------------------------
    auto* local = app.add_subcommand(
        "local", "everywhere-local solvability over the critical places");
    std::string local_file, local_coeffs;
    local->add_option("curve", local_file, "curve JSON file ({\"f\": [...]})");
    local->add_option("--coeffs", local_coeffs,
                      "comma-separated coefficients f0,...,fn instead");
    local->callback([&] {
        auto c = load_curve(local_file, local_coeffs);
        auto [els, verdicts] = descent::is_els(c);
        for (const auto& v : verdicts) print_verdict_line(v);
        std::cout << (els ? "everywhere_locally_solvable"
                          : "not_everywhere_locally_solvable")
                  << "\n";
    });

    // ---- points ---------------------------------------------------------
    auto* points = app.add_subcommand("points",
                                      "rational point search up to a height");
    std::string points_file, points_coeffs;
    uint32_t points_height = 0;
    bool points_affine_only = false;
    points->add_option("curve", points_file, "curve JSON file");
    points->add_option("--coeffs", points_coeffs,
                       "comma-separated coefficients f0,...,fn instead");
    points->add_option("--height", points_height, "height bound for x")
        ->required();
    points->add_flag("--affine-only", points_affine_only,
                     "drop the points at infinity");
    points->callback([&] {
        auto c = load_curve(points_file, points_coeffs);
        descent::LocalConditions cond;
        cond.affine_only = points_affine_only;
        auto pts = descent::point_search(
            c, points_height, points_affine_only ? &cond : nullptr);
        json arr = json::array();
        for (const auto& P : pts)
            arr.push_back(json::parse(descent::point_to_json_string(P)));
        std::cout << arr.dump(2) << "\n";
    });

    // ---- sieve ----------------------------------------------------------
    auto* sieve = app.add_subcommand(
        "sieve",
        "run a sieve problem to a certificate (exit 0 survivors, 10 empty)");
    std::string sieve_problem, sieve_out;
    bool sieve_poonen = false;
    sieve->add_option("problem", sieve_problem, "SieveProblem JSON file");
    sieve->add_flag("--poonen", sieve_poonen,
                    "modulus-free product criterion instead of N-sieving");
    sieve->add_option("-o,--output", sieve_out,
                      "write the certificate here instead of stdout");

    auto* attach = sieve->add_subcommand(
        "attach", "upgrade a census record with an EMPTY certificate");
    std::string attach_log, attach_cert;
    attach->add_option("--log", attach_log, "census JSONL log")->required();
    attach->add_option("--cert", attach_cert, "certificate JSON file")
        ->required();
    attach->callback([&] {
        auto cert =
            descent::certificate_from_json_string(read_file(attach_cert));
        std::string id = descent::census_curve_id(cert.problem.curve.f);
        auto rec = descent::attach_sieve_result(attach_log, id, cert);
        std::cout << descent::census_record_to_json_string(rec) << "\n";
    });

    sieve->callback([&] {
        if (attach->parsed()) return;
        if (sieve_problem.empty())
            throw descent::Error("sieve needs a SieveProblem JSON file");
        auto prob =
            descent::sieve_problem_from_json_string(read_file(sieve_problem));
        auto cert = sieve_poonen ? descent::poonen_run(prob)
                                 : descent::sieve_run(prob);
        std::string text = descent::certificate_to_json_string(cert) + "\n";
        if (sieve_out.empty())
            std::cout << text;
        else
            write_file(sieve_out, text);
        rc = cert.outcome == "EMPTY" ? 10 : 0;
    });

    // ---- zerodim --------------------------------------------------------
    auto* zd = app.add_subcommand("zerodim",
                                  "zero-dimensional demonstrators");
    zd->require_subcommand(1);

    auto* cover = zd->add_subcommand(
        "cover-check",
        "transitive actions whose elements all fix a point have degree one");
    uint32_t cover_degree = 1;
    std::vector<std::string> cover_gens;
    cover->add_option("--degree", cover_degree, "degree n")->required();
    cover->add_option("--gen", cover_gens,
                      "permutation as comma-separated images of 1..n "
                      "(repeatable)");
    cover->callback([&] {
        descent::PermGroupSpec spec;
        spec.degree = cover_degree;
        for (const auto& g : cover_gens) {
            std::vector<uint32_t> perm;
            for (const auto& part : split_csv(g))
                perm.push_back(
                    static_cast<uint32_t>(std::stoul(part)));
            spec.generators.push_back(std::move(perm));
        }
        auto verdict = descent::fixed_point_cover_check(spec);
        json j;
        j["degree"] = spec.degree;
        j["generators"] = spec.generators;
        j["verdict"] = descent::to_string(verdict);
        std::cout << j.dump(2) << "\n";
    });

    auto* qh = zd->add_subcommand(
        "quad-hasse",
        "local-global comparison for the union of three quadratic schemes");
    std::string qh_d1, qh_d2;
    qh->add_option("d1", qh_d1, "first integer")->required();
    qh->add_option("d2", qh_d2, "second integer")->required();
    qh->callback([&] {
        descent::BigInt d1 = descent::parse_int(qh_d1);
        descent::BigInt d2 = descent::parse_int(qh_d2);
        auto res = descent::quad_etale_hasse_check(d1, d2);
        json j;
        j["d1"] = d1.get_str();
        j["d2"] = d2.get_str();
        j["d3"] = descent::BigInt(d1 * d2).get_str();
        j["everywhere_local"] = res.everywhere_local;
        j["global"] = res.global;
        std::cout << j.dump(2) << "\n";
    });

    // ---- census ---------------------------------------------------------
    auto* census = app.add_subcommand("census",
                                      "classify coefficient families");
    census->require_subcommand(1);

    auto* run = census->add_subcommand("run", "enumerate and classify");
    std::vector<uint32_t> run_degrees;
    std::vector<long> run_range{-1, 1};
    uint32_t run_height = 12;
    int run_genus = -1;
    std::string run_log;
    bool run_resume = false, run_nodedupe = false;
    run->add_option("--degrees", run_degrees, "degrees from 3..6")->required();
    run->add_option("--range", run_range, "coefficient range lo hi")
        ->expected(2);
    run->add_option("--height", run_height, "search height")->required();
    run->add_option("--log", run_log, "JSONL output log")->required();
    run->add_option("--genus", run_genus, "restrict to this genus");
    run->add_flag("--resume", run_resume, "skip ids already in the log");
    run->add_flag("--no-dedupe", run_nodedupe,
                  "keep every tuple instead of one per symmetry orbit");
    run->callback([&] {
        descent::FamilySpec spec;
        spec.degrees = run_degrees;
        spec.lo = run_range[0];
        spec.hi = run_range[1];
        if (run_genus >= 0)
            spec.genus = static_cast<uint32_t>(run_genus);
        spec.dedupe = !run_nodedupe;
        auto sum = descent::census_run(spec, run_height, run_log, run_resume);
        json j;
        j["total"] = sum.total;
        j["counts"] = sum.counts;
        std::cout << j.dump(2) << "\n";
    });

    auto* summary = census->add_subcommand("summary",
                                           "counts per classification");
    std::string summary_log;
    summary->add_option("log", summary_log, "JSONL log")->required();
    summary->callback([&] {
        auto sum = descent::census_summary(summary_log);
        json j;
        j["total"] = sum.total;
        j["counts"] = sum.counts;
        std::cout << j.dump(2) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const descent::LogCorruption& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const descent::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
