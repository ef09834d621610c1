#pragma once

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuspcalc/classifier.hpp"
#include "cuspcalc/cusp.hpp"
#include "cuspcalc/dual_graph.hpp"
#include "cuspcalc/errors.hpp"
#include "cuspcalc/graph_io.hpp"
#include "cuspcalc/linear_chain.hpp"
#include "cuspcalc/resolution.hpp"

namespace cuspcalc::cli {

// Exit codes: 0 success/true, 1 check-failure, 2 input error.
constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;

namespace detail {

inline nlohmann::json cusp_json(const MultiplicitySequence& ms) {
    return {{"written", ms.str()}, {"full", ms.full()}};
}

inline nlohmann::json clusters_json(const CuspResolutionGraph& res) {
    nlohmann::json clusters = nlohmann::json::array();
    for (const auto& c : res.clusters)
        clusters.push_back({{"A", c.a.str()}, {"B", c.b.str()}, {"o", c.o}});
    return clusters;
}

struct DataReport {
    bool genus_ok = false;
    long long c_prime_sq = 0;
    bool subtrees_contract = false;
    nlohmann::json json;
};

inline DataReport check_data(const NumericalData& nd) {
    DataReport rep;
    rep.genus_ok = genus_check(nd);
    rep.c_prime_sq = strict_transform_selfint(nd);
    const GlobalGraph global = assemble_global_graph(nd);
    rep.subtrees_contract = true;
    for (const auto& cusp : global.cusps) {
        try {
            const auto trace = contract_to_point(cusp.assembled);
            if (static_cast<int>(trace.steps.size()) != cusp.assembled.size())
                rep.subtrees_contract = false;
        } catch (const ContractionError&) {
            rep.subtrees_contract = false;
        }
    }
    rep.json = {{"degree", nd.degree()},
                {"cusps_written", {nd.cusps()[0].str(), nd.cusps()[1].str()}},
                {"cusps_full", {nd.cusps()[0].full(), nd.cusps()[1].full()}},
                {"genus_ok", rep.genus_ok},
                {"c_prime_sq", rep.c_prime_sq},
                {"subtrees_contract", rep.subtrees_contract}};
    return rep;
}

inline void print_data_report(std::ostream& out, const NumericalData& nd, const DataReport& rep) {
    out << nd.str() << "\n";
    out << "cusp 1: " << nd.cusps()[0].str() << " = " << nd.cusps()[0].str_full() << "\n";
    out << "cusp 2: " << nd.cusps()[1].str() << " = " << nd.cusps()[1].str_full() << "\n";
    out << "genus: " << (rep.genus_ok ? "ok" : "FAIL") << "\n";
    out << "(C')^2 = " << rep.c_prime_sq << "\n";
    out << "subtrees contract: " << (rep.subtrees_contract ? "ok" : "FAIL") << "\n";
}

inline long long scan_bound() {
    if (const char* env = std::getenv("CUSPCALC_MAX_DEGREE")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw InvalidArgument("CUSPCALC_MAX_DEGREE is not an integer");
        }
    }
    return 9;
}

} // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculus of weighted linear chains and cusp resolution dual graphs"};
    app.name("cuspcalc");
    bool want_json = false;
    bool want_dot = false;
    bool quiet = false;
    app.add_flag("--json", want_json, "emit JSON");
    app.add_flag("--dot", want_dot, "emit graphviz DOT (graph commands)");
    app.add_flag("--quiet", quiet, "suppress output, use the exit code");
    app.require_subcommand(1);

    std::string chain_op;
    std::string chain_arg1;
    std::string chain_arg2;
    auto* chain_cmd = app.add_subcommand("chain", "linear chain arithmetic");
    chain_cmd->fallthrough();
    chain_cmd->add_option("op", chain_op, "disc|adjoint|star|from-e")->required();
    auto* chain_arg1_opt = chain_cmd->add_option("arg1", chain_arg1, "first operand");
    auto* chain_arg2_opt = chain_cmd->add_option("arg2", chain_arg2, "second operand");

    std::string conv_from;
    std::string conv_to;
    std::string conv_input;
    auto* convert_cmd = app.add_subcommand("convert", "convert between cusp encodings");
    convert_cmd->fallthrough();
    convert_cmd->add_option("--from", conv_from, "char|mult|puiseux")->required();
    convert_cmd->add_option("--to", conv_to, "char|mult|puiseux")->required();
    convert_cmd->add_option("input", conv_input, "sequence text")->required();

    std::string resolve_input;
    auto* resolve_cmd = app.add_subcommand("resolve", "resolution dual graph of a cusp");
    resolve_cmd->fallthrough();
    resolve_cmd->add_option("char-seq", resolve_input, "characteristic sequence, e.g. \"(2;3)\"")
        ->required();

    int cls_family = 0;
    long long cls_a = 0;
    long long cls_b = 0;
    auto* classify_cmd = app.add_subcommand("classify", "build and check one table instance");
    classify_cmd->fallthrough();
    classify_cmd->add_option("--family", cls_family, "table row 1..4")->required();
    classify_cmd->add_option("--a", cls_a, "parameter a >= 1")->required();
    classify_cmd->add_option("--b", cls_b, "parameter b (>= 2 or 3 per row)")->required();

    std::string verify_input;
    auto* verify_cmd = app.add_subcommand("verify", "check numerical data");
    verify_cmd->fallthrough();
    verify_cmd->add_option("data", verify_input, "e.g. \"d=5 {(3),(2_3)}\"")->required();

    long long scan_max = -1;
    auto* scan_cmd = app.add_subcommand("scan", "scan small degrees for candidate data");
    scan_cmd->fallthrough();
    scan_cmd->add_option("--max-degree", scan_max, "largest degree to scan");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        if (chain_cmd->parsed()) {
            const std::size_t given = chain_arg1_opt->count() + chain_arg2_opt->count();
            auto need = [&](std::size_t n) {
                if (given != n)
                    throw InvalidArgument("chain " + chain_op + ": expected " + std::to_string(n) +
                                          " operand(s), got " + std::to_string(given));
            };
            std::string result;
            if (chain_op == "disc") {
                need(1);
                result = discriminant(LinearChain::parse(chain_arg1)).str();
            } else if (chain_op == "adjoint") {
                need(1);
                result = adjoint(LinearChain::parse(chain_arg1)).str();
            } else if (chain_op == "star") {
                need(2);
                result = star(LinearChain::parse(chain_arg1), LinearChain::parse(chain_arg2)).str();
            } else if (chain_op == "from-e") {
                need(1);
                result = chain_from_inductance(parse_rational(chain_arg1)).str();
            } else {
                throw InvalidArgument("unknown chain op '" + chain_op +
                                      "' (expected disc|adjoint|star|from-e)");
            }
            if (!quiet) {
                if (want_json)
                    out << nlohmann::json{{"op", chain_op}, {"result", result}}.dump() << "\n";
                else
                    out << result << "\n";
            }
            return exit_ok;
        }

        if (convert_cmd->parsed()) {
            for (const std::string& dir : {conv_from, conv_to})
                if (dir != "char" && dir != "mult" && dir != "puiseux")
                    throw InvalidArgument("unknown encoding '" + dir +
                                          "' (expected char|mult|puiseux)");
            CharacteristicSequence ch = [&] {
                if (conv_from == "char") return CharacteristicSequence::parse(conv_input);
                if (conv_from == "mult") return char_from_mult(MultiplicitySequence::parse(conv_input));
                return char_from_puiseux(PuiseuxPairs::parse(conv_input));
            }();
            std::string result;
            nlohmann::json extra = nlohmann::json::object();
            if (conv_to == "char") {
                result = ch.str();
                extra = {{"alphas", ch.alphas()}};
            } else if (conv_to == "mult") {
                const MultiplicitySequence ms = mult_from_char(ch);
                result = ms.str();
                extra = {{"full", ms.full()}};
            } else {
                result = puiseux_from_char(ch).str();
            }
            if (!quiet) {
                if (want_json) {
                    nlohmann::json j = {{"from", conv_from}, {"to", conv_to},
                                        {"input", conv_input}, {"output", result}};
                    j.update(extra);
                    out << j.dump() << "\n";
                } else {
                    out << result << "\n";
                }
            }
            return exit_ok;
        }

        if (resolve_cmd->parsed()) {
            const CuspResolutionGraph res = resolution_graph(CharacteristicSequence::parse(resolve_input));
            if (!quiet) {
                if (want_dot) {
                    out << to_dot(res.assembled, "cusp_resolution");
                } else if (want_json) {
                    out << nlohmann::json{{"char", CharacteristicSequence::parse(resolve_input).str()},
                                          {"g", res.g()},
                                          {"clusters", detail::clusters_json(res)},
                                          {"blowups", res.blowups()},
                                          {"graph", to_json(res.assembled)}}
                               .dump()
                        << "\n";
                } else {
                    out << "g = " << res.g() << "\n";
                    for (int i = 0; i < res.g(); ++i) {
                        const auto& c = res.clusters[static_cast<std::size_t>(i)];
                        out << "A" << i + 1 << " = " << c.a.str() << "  B" << i + 1 << " = "
                            << c.b.str() << "  o" << i + 1 << " = " << c.o << "\n";
                    }
                    out << "blow-ups = " << res.blowups() << "\n";
                }
            }
            return exit_ok;
        }

        if (classify_cmd->parsed() || verify_cmd->parsed()) {
            std::optional<FamilyParams> params;
            NumericalData nd = [&] {
                if (classify_cmd->parsed()) {
                    params.emplace(cls_family, cls_a, cls_b);
                    return family_data(*params);
                }
                return NumericalData::parse(verify_input);
            }();
            detail::DataReport rep = detail::check_data(nd);
            const bool pass = rep.genus_ok && rep.subtrees_contract && rep.c_prime_sq <= 0;
            if (!quiet) {
                if (want_json) {
                    nlohmann::json j = rep.json;
                    if (params) {
                        j["family"] = params->family;
                        j["a"] = params->a;
                        j["b"] = params->b;
                    }
                    out << j.dump() << "\n";
                } else {
                    if (params) out << "family " << params->str() << "\n";
                    detail::print_data_report(out, nd, rep);
                }
            }
            return pass ? exit_ok : exit_check_failed;
        }

        if (scan_cmd->parsed()) {
            const long long bound = detail::scan_bound();
            if (scan_max < 0) scan_max = bound;
            const auto records = scan_candidates(scan_max, bound);
            if (!quiet) {
                if (want_json) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& r : records) {
                        nlohmann::json j = {{"degree", r.data.degree()},
                                            {"cusps_written",
                                             {r.data.cusps()[0].str(), r.data.cusps()[1].str()}},
                                            {"cusps_full",
                                             {r.data.cusps()[0].full(), r.data.cusps()[1].full()}},
                                            {"genus_ok", r.genus_ok},
                                            {"c_prime_sq", r.c_prime_sq}};
                        j["family"] = r.family ? nlohmann::json{{"no", r.family->family},
                                                                {"a", r.family->a},
                                                                {"b", r.family->b}}
                                               : nlohmann::json(nullptr);
                        arr.push_back(std::move(j));
                    }
                    out << arr.dump() << "\n";
                } else {
                    for (const auto& r : records) {
                        out << r.data.str() << "  (C')^2=" << r.c_prime_sq << "  family ";
                        out << (r.family ? r.family->str() : "-") << "\n";
                    }
                }
            }
            return exit_ok;
        }
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const ContractionError& e) {
        err << "check failed: " << e.what() << "\n";
        return exit_check_failed;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_check_failed;
    }
    return exit_input_error;
}

} // namespace cuspcalc::cli
