// Command implementations behind the CLI front end. Each command returns a
// RunReport: command echo, parameters, status (ok | refuted | error), wall
// time and a payload that is both machine-readable (JSON, schema 1) and
// pre-rendered as text. Exit codes: 0 = computed (the answer may be
// "refuted"), 1 = user error, 2 = internal consistency failure.
#pragma once

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "symideal/certificate.hpp"
#include "symideal/groebner.hpp"
#include "symideal/json_io.hpp"
#include "symideal/resolution.hpp"

namespace symideal {

struct RunReport {
    std::string command;
    json params = json::object();
    std::string status = "ok";  // ok | refuted | error
    long long wall_ms = 0;
    json payload = json::object();
    std::string text_body;
    int exit_code = 0;

    json to_json() const {
        return json{{"schema", 1},   {"command", command}, {"params", params},
                    {"status", status}, {"wall_ms", wall_ms}, {"payload", payload}};
    }

    std::string render(const std::string& format) const {
        if (format == "json") return to_json().dump(2);
        std::ostringstream out;
        out << "command: " << command << "\nstatus: " << status << " (" << wall_ms << " ms)\n";
        if (!text_body.empty()) out << text_body << "\n";
        return out.str();
    }
};

namespace detail {

template <typename Fn>
RunReport run_command(const std::string& command, json params, Fn&& fill) {
    RunReport report;
    report.command = command;
    report.params = std::move(params);
    auto start = std::chrono::steady_clock::now();
    try {
        fill(report);
    } catch (const ParseError& e) {
        report.status = "error";
        report.payload = {{"error", e.what()}};
        report.text_body = std::string("error: ") + e.what();
        report.exit_code = 1;
    } catch (const std::invalid_argument& e) {
        report.status = "error";
        report.payload = {{"error", e.what()}};
        report.text_body = std::string("error: ") + e.what();
        report.exit_code = 1;
    } catch (const std::domain_error& e) {
        report.status = "error";
        report.payload = {{"error", e.what()}};
        report.text_body = std::string("error: ") + e.what();
        report.exit_code = 1;
    } catch (const json::exception& e) {
        report.status = "error";
        report.payload = {{"error", e.what()}};
        report.text_body = std::string("error: ") + e.what();
        report.exit_code = 1;
    } catch (const std::exception& e) {
        report.status = "error";
        report.payload = {{"error", e.what()}};
        report.text_body = std::string("internal error: ") + e.what();
        report.exit_code = 2;
    }
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

inline std::string certificate_text(const Certificate& c) {
    std::ostringstream out;
    out << "target: " << c.target.to_text() << "\n";
    for (const auto& [generator, cofactor] : c.pairs)
        out << "  cofactor [" << cofactor.to_text() << "]  *  generator [" << generator.to_text()
            << "]\n";
    out << "verified: exact identity";
    return out.str();
}

}  // namespace detail

/// Certificate for (xy)^(2n-1) in J(2n).
inline RunReport cmd_certificate(int n, const std::string& method = "structured") {
    return detail::run_command(
        "certificate", {{"n", n}, {"method", method}}, [&](RunReport& report) {
            Certificate cert;
            if (method == "structured") {
                cert = build_certificate_structured(n).first;
            } else if (method == "generic") {
                VariableSet jr = j_ring();
                Polynomial target = (Polynomial::variable(jr, "x") *
                                     Polynomial::variable(jr, "y")).pow(2 * n - 1);
                auto got = build_certificate_generic(target, j_ideal(2 * n), 2 * n - 2);
                if (!got)
                    throw std::logic_error("generic constructor found no certificate");
                cert = *got;
            } else {
                throw std::invalid_argument("certificate: unknown method '" + method + "'");
            }
            auto check = verify_certificate(cert);
            if (!check.ok) throw std::logic_error("certificate failed verification");
            report.payload = {{"certificate", certificate_to_json(cert)}, {"verified", true}};
            report.text_body = detail::certificate_text(cert);
        });
}

/// Four-variable certificate for (x1-x2)^(2n-1) * sigma((x1-x2)^(2n-1)) with
/// sigma(x1) = xi, sigma(x2) = xj.
inline RunReport cmd_symmetric(int n, int i, int j) {
    return detail::run_command("symmetric", {{"n", n}, {"i", i}, {"j", j}},
                               [&](RunReport& report) {
                                   Certificate cert = symmetric_certificate(n, i, j);
                                   auto check = verify_certificate(cert);
                                   if (!check.ok)
                                       throw std::logic_error("certificate failed verification");
                                   report.payload = {{"certificate", certificate_to_json(cert)},
                                                     {"verified", true}};
                                   report.text_body = detail::certificate_text(cert);
                               });
}

/// Ideal spec: "J:N", "Ird:r:d", or the path of a JSON file with
/// {"variables": [...], "generators": [...]}.
inline Ideal parse_ideal_spec(const std::string& spec) {
    if (spec.rfind("J:", 0) == 0) {
        int N = std::stoi(spec.substr(2));
        return Ideal(j_ring(), j_ideal(N));
    }
    if (spec.rfind("Ird:", 0) == 0) {
        auto rest = spec.substr(4);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("ideal spec: expected Ird:r:d");
        return build_Ird(std::stoi(rest.substr(0, colon)), std::stoi(rest.substr(colon + 1)));
    }
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("ideal spec: cannot open file '" + spec + "'");
    json j = json::parse(in);
    return ideal_from_json(j);
}

inline RunReport cmd_member(const std::string& ideal_spec, const std::string& poly_text) {
    return detail::run_command(
        "member", {{"ideal", ideal_spec}, {"poly", poly_text}}, [&](RunReport& report) {
            Ideal ideal = parse_ideal_spec(ideal_spec);
            Polynomial p = parse_polynomial(poly_text, ideal.ring());
            Polynomial nf = normal_form(p, *ideal.groebner());
            bool member = nf.is_zero();
            report.status = member ? "ok" : "refuted";
            report.payload = {{"ideal", ideal_spec},
                              {"poly", p.to_text()},
                              {"member", member},
                              {"normal_form", nf.to_text()}};
            report.text_body = std::string(member ? "member" : "not a member") +
                               "\nnormal form: " + nf.to_text();
        });
}

/// Generators of the contraction J(N) /\ k[x,y].
inline RunReport cmd_contract(int N) {
    return detail::run_command("contract", {{"N", N}}, [&](RunReport& report) {
        if (N < 1) throw std::invalid_argument("contract: N must be >= 1");
        Ideal contraction = eliminate(Ideal(j_ring(), j_ideal(N)), {"d"});
        report.payload = generators_to_json(contraction.generators(), contraction.ring());
        std::ostringstream out;
        out << "contraction generators (" << contraction.generators().size() << "):";
        for (const auto& g : contraction.generators()) out << "\n  " << g.to_text();
        report.text_body = out.str();
    });
}

inline RunReport cmd_betti(int r, int d) {
    return detail::run_command("betti", {{"r", r}, {"d", d}}, [&](RunReport& report) {
        BettiTable actual = betti_table(build_Ird(r, d));
        report.payload = betti_to_json(actual);
        report.payload["diagram"] = actual.to_diagram();
        std::ostringstream out;
        out << "Betti table of R/I_" << r << "^(" << d << "):\n" << actual.to_diagram();
        if (r >= 1 && r <= 3) {
            BettiTable expected = conjectured_betti(r, d);
            bool matches = actual == expected;
            report.payload["conjectured"] = betti_to_json(expected);
            report.payload["matches_conjectured"] = matches;
            json diff = json::array();
            auto keys = expected.entries;
            for (const auto& [key, value] : actual.entries) keys.emplace(key, 0);
            for (const auto& [key, ignored] : keys) {
                long long a = actual.at(key.first, key.second);
                long long e = expected.at(key.first, key.second);
                if (a != e)
                    diff.push_back(
                        {{"i", key.first}, {"j", key.second}, {"actual", a}, {"conjectured", e}});
            }
            report.payload["diff"] = diff;
            out << (matches ? "matches the conjectured table"
                            : "DIFFERS from the conjectured table:");
            if (!matches)
                for (const auto& entry : diff)
                    out << "\n  beta(" << entry["i"] << "," << entry["j"]
                        << "): actual " << entry["actual"] << ", conjectured "
                        << entry["conjectured"];
        }
        report.text_body = out.str();
    });
}

inline RunReport cmd_conjecture35(int N) {
    return detail::run_command("conjecture", {{"which", "3.5"}, {"N", N}}, [&](RunReport& report) {
        Conjecture35Report rep = conjecture35_report(N);
        if (!rep.superset_holds)
            throw std::logic_error("conjecture 3.5: the superset inclusion is a theorem "
                                   "and failed to verify");
        report.status = rep.equality_holds ? "ok" : "refuted";
        json contraction = json::array(), conjectured = json::array();
        for (const auto& g : rep.contraction_generators) contraction.push_back(g.to_text());
        for (const auto& g : rep.conjectured_generators) conjectured.push_back(g.to_text());
        report.payload = {{"N", N},
                          {"superset_holds", rep.superset_holds},
                          {"equality_holds", rep.equality_holds},
                          {"witness", rep.witness ? json(rep.witness->to_text()) : json(nullptr)},
                          {"contraction_generators", contraction},
                          {"conjectured_generators", conjectured}};
        std::ostringstream out;
        out << "superset inclusion: holds\nequality: " << (rep.equality_holds ? "holds" : "FAILS");
        if (rep.witness) out << "\nwitness outside the monomial ideal: " << rep.witness->to_text();
        out << "\ncontraction generators:";
        for (const auto& g : rep.contraction_generators) out << "\n  " << g.to_text();
        report.text_body = out.str();
    });
}

inline RunReport cmd_conjecture41(int r, int n,
                                  std::optional<long long> budget_ms = std::nullopt) {
    json params = {{"which", "4.1"}, {"r", r}, {"n", n}};
    if (budget_ms) params["budget_ms"] = *budget_ms;
    return detail::run_command("conjecture", params, [&](RunReport& report) {
        std::optional<bool> holds;
        if (budget_ms)
            holds = conjecture41_check_budgeted(r, n, std::chrono::milliseconds(*budget_ms));
        else
            holds = conjecture41_check(r, n);
        if (!holds) {
            report.payload = {{"r", r}, {"n", n}, {"holds", nullptr}, {"timed_out", true}};
            report.text_body = "budget exhausted before an answer was reached";
            return;
        }
        report.status = *holds ? "ok" : "refuted";
        report.payload = {{"r", r}, {"n", n}, {"holds", *holds}, {"timed_out", false}};
        std::ostringstream out;
        out << "(t1...t" << r << ")^" << 2 * n - 1 << " in I_" << r << "^(" << n * r
            << "): " << (*holds ? "holds" : "REFUTED");
        report.text_body = out.str();
    });
}

/// Grid sweep over 1 <= r' <= r, 1 <= n' <= n with one worker thread per
/// instance; each instance carries independent state.
inline RunReport cmd_conjecture41_grid(int r, int n,
                                       std::optional<long long> budget_ms = std::nullopt) {
    json params = {{"which", "4.1"}, {"r", r}, {"n", n}, {"grid", true}};
    if (budget_ms) params["budget_ms"] = *budget_ms;
    return detail::run_command("conjecture", params, [&](RunReport& report) {
        if (r < 1 || n < 1) throw std::invalid_argument("conjecture 4.1: r, n must be >= 1");
        struct Cell {
            int r, n;
            std::optional<bool> holds;
        };
        std::vector<Cell> cells;
        for (int rr = 1; rr <= r; ++rr)
            for (int nn = 1; nn <= n; ++nn) cells.push_back({rr, nn, std::nullopt});
        std::vector<std::thread> workers;
        workers.reserve(cells.size());
        for (auto& cell : cells)
            workers.emplace_back([&cell, budget_ms] {
                cell.holds = budget_ms ? conjecture41_check_budgeted(
                                             cell.r, cell.n, std::chrono::milliseconds(*budget_ms))
                                       : std::optional<bool>(conjecture41_check(cell.r, cell.n));
            });
        for (auto& w : workers) w.join();

        bool any_refuted = false;
        json results = json::array();
        std::ostringstream out;
        for (const auto& cell : cells) {
            results.push_back({{"r", cell.r},
                               {"n", cell.n},
                               {"holds", cell.holds ? json(*cell.holds) : json(nullptr)},
                               {"timed_out", !cell.holds.has_value()}});
            out << "r=" << cell.r << " n=" << cell.n << ": "
                << (cell.holds ? (*cell.holds ? "holds" : "REFUTED") : "timeout") << "\n";
            if (cell.holds && !*cell.holds) any_refuted = true;
        }
        report.status = any_refuted ? "refuted" : "ok";
        report.payload = {{"results", results}};
        report.text_body = out.str();
    });
}

/// Re-verify a serialized certificate (either a bare certificate document or
/// a full RunReport with payload.certificate).
inline RunReport cmd_verify(const json& document, const std::string& source_name) {
    return detail::run_command("verify", {{"source", source_name}}, [&](RunReport& report) {
        const json* doc = &document;
        if (document.contains("payload") && document["payload"].contains("certificate"))
            doc = &document["payload"]["certificate"];
        else if (document.contains("certificate"))
            doc = &document["certificate"];
        Certificate cert = certificate_from_json(*doc);
        VerifyResult result = verify_certificate(cert);
        report.status = result.ok ? "ok" : "refuted";
        report.payload = {{"valid", result.ok}, {"residual", result.residual.to_text()}};
        report.text_body = std::string(result.ok ? "certificate verifies exactly"
                                                 : "certificate FAILS") +
                           "\nresidual: " + result.residual.to_text();
    });
}

inline RunReport cmd_verify_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        RunReport report;
        report.command = "verify";
        report.params = {{"source", path}};
        report.status = "error";
        report.payload = {{"error", "cannot open file '" + path + "'"}};
        report.text_body = "error: cannot open file '" + path + "'";
        report.exit_code = 1;
        return report;
    }
    json document;
    try {
        document = json::parse(in);
    } catch (const json::exception& e) {
        RunReport report;
        report.command = "verify";
        report.params = {{"source", path}};
        report.status = "error";
        report.payload = {{"error", e.what()}};
        report.text_body = std::string("error: ") + e.what();
        report.exit_code = 1;
        return report;
    }
    return cmd_verify(document, path);
}

}  // namespace symideal
