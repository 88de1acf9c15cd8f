#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "nichols/json_io.hpp"

using namespace nichols;

namespace {

constexpr const char* kVersion = "1.0.0";

struct CommonOpts {
    Limits limits;
    std::string out;
    bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--workers", o.limits.workers, "worker threads (env NICHOLS_WORKERS overrides)");
    cmd->add_option("--seed", o.limits.seed, "sampling seed");
    cmd->add_option("--ceiling", o.limits.conductor_ceiling, "conductor ceiling (default 360)");
    cmd->add_option("--max-index", o.limits.max_index, "root-vector index cap");
    cmd->add_option("--out", o.out, "write the JSON report to this path instead of stdout");
    cmd->add_flag("--timing", o.timing, "include wall-clock timing in the report");
}

int emit(const CommonOpts& o, json result, int exit_code,
         std::chrono::steady_clock::time_point start) {
    json doc{{"tool", "nichols2"}, {"version", kVersion}, {"config", limits_to_json(o.limits)},
             {"result", std::move(result)}};
    if (o.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        doc["timing_ms"] = ms;
    }
    if (o.out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream f(o.out);
        f << doc.dump(2) << "\n";
    }
    return exit_code;
}

Cyc parse_or_die(const std::string& text, const std::string& flag) {
    try {
        return parse_scalar_literal(text);
    } catch (const ParseError& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification toolkit for rank-2 Nichols algebras of diagonal type"};
    app.require_subcommand(1);

    // classify
    CommonOpts c_classify;
    std::string cq11, cq12q21, cq22, cq12, cq21;
    auto* classify_cmd = app.add_subcommand("classify", "run both classifiers and compare");
    classify_cmd->add_option("--q11", cq11, "q11 literal")->required();
    classify_cmd->add_option("--q22", cq22, "q22 literal")->required();
    classify_cmd->add_option("--q12q21", cq12q21, "product q12*q21 literal");
    classify_cmd->add_option("--q12", cq12, "q12 literal (with --q21)");
    classify_cmd->add_option("--q21", cq21, "q21 literal (with --q12)");
    add_common(classify_cmd, c_classify);

    // conditions
    CommonOpts c_cond;
    std::string dq11, dq12, dq21, dq22;
    auto* cond_cmd = app.add_subcommand("conditions", "evaluate (A1)..(A8) with witnesses");
    cond_cmd->add_option("--q11", dq11)->required();
    cond_cmd->add_option("--q12", dq12)->required();
    cond_cmd->add_option("--q21", dq21)->required();
    cond_cmd->add_option("--q22", dq22)->required();
    add_common(cond_cmd, c_cond);

    // dims
    CommonOpts c_dims;
    std::string hq11, hq12, hq21, hq22;
    long hmax = 10, hcutoff = 12;
    auto* dims_cmd = app.add_subcommand("dims", "graded dimensions of B(V) up to a total degree");
    dims_cmd->add_option("--q11", hq11)->required();
    dims_cmd->add_option("--q12", hq12)->required();
    dims_cmd->add_option("--q21", hq21)->required();
    dims_cmd->add_option("--q22", hq22)->required();
    dims_cmd->add_option("--max", hmax, "maximal total degree (default 10)");
    dims_cmd->add_option("--cutoff", hcutoff, "hard cutoff (default 12)");
    add_common(dims_cmd, c_dims);

    // subquotient
    CommonOpts c_sub;
    std::string sq11, sq12, sq21, sq22;
    std::vector<long> sd1{2, 2}, sd2{1, 1};
    bool svalidate = false;
    long scutoff = 8;
    auto* sub_cmd = app.add_subcommand("subquotient", "braiding of a Yetter-Drinfeld submodule");
    sub_cmd->add_option("--q11", sq11)->required();
    sub_cmd->add_option("--q12", sq12)->required();
    sub_cmd->add_option("--q21", sq21)->required();
    sub_cmd->add_option("--q22", sq22)->required();
    sub_cmd->add_option("--d1", sd1, "degree of the first generator (two integers)")->expected(2);
    sub_cmd->add_option("--d2", sd2, "degree of the second generator (two integers)")->expected(2);
    sub_cmd->add_flag("--validate-w1", svalidate,
                      "also validate the generators (w_1, x_21) through the pairing");
    sub_cmd->add_option("--cutoff", scutoff, "skew-primitivity check cutoff (default 8)");
    add_common(sub_cmd, c_sub);

    // descent
    CommonOpts c_desc;
    std::string eq11, eq12, eq21, eq22;
    long max_steps = 64;
    auto* desc_cmd = app.add_subcommand("descent", "run the subquotient descent detector");
    desc_cmd->add_option("--q11", eq11)->required();
    desc_cmd->add_option("--q12", eq12)->required();
    desc_cmd->add_option("--q21", eq21)->required();
    desc_cmd->add_option("--q22", eq22)->required();
    desc_cmd->add_option("--max-steps", max_steps, "safety bound (default 64)");
    add_common(desc_cmd, c_desc);

    // enumerate
    CommonOpts c_enum;
    c_enum.limits.max_order = 30;
    long pipeline_conductor = 60;
    bool record_hits = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "sweep root-of-unity triples through both classifiers");
    enum_cmd->add_option("--max-order", c_enum.limits.max_order, "literal sweep order bound (default 30)");
    enum_cmd->add_option("--pipeline-conductor", pipeline_conductor,
                         "joint conductor bound of the cross-validation sweep (default 60)");
    enum_cmd->add_flag("--record-hits", record_hits, "record every finite hit of the literal sweep");
    add_common(enum_cmd, c_enum);

    // verify
    CommonOpts c_verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the cross-module invariant suite");
    add_common(verify_cmd, c_verify);

    CLI11_PARSE(app, argc, argv);
    auto start = std::chrono::steady_clock::now();

    try {
        if (*classify_cmd) {
            set_conductor_ceiling(c_classify.limits.conductor_ceiling);
            Cyc q11 = parse_or_die(cq11, "--q11"), q22 = parse_or_die(cq22, "--q22");
            Cyc q12, q21;
            if (!cq12q21.empty()) {
                q12 = parse_or_die(cq12q21, "--q12q21");
                q21 = Cyc(1);
            } else if (!cq12.empty() && !cq21.empty()) {
                q12 = parse_or_die(cq12, "--q12");
                q21 = parse_or_die(cq21, "--q21");
            } else {
                throw CLI::ValidationError("classify", "need --q12q21 or both --q12 and --q21");
            }
            DiagonalBraiding br(q11, q12, q21, q22);
            Verdict lit = classify_theorem(twist_class(br));
            Verdict pip = classify_pipeline(br, c_classify.limits);
            bool agree = lit.outcome == pip.outcome && lit.canonical() == pip.canonical();
            json result{{"braiding", braiding_to_json(br)},
                        {"theorem", verdict_to_json(lit)},
                        {"pipeline", verdict_to_json(pip)},
                        {"agreement", agree}};
            return emit(c_classify, result, agree ? 0 : 2, start);
        }
        if (*cond_cmd) {
            set_conductor_ceiling(c_cond.limits.conductor_ceiling);
            DiagonalBraiding br(parse_or_die(dq11, "--q11"), parse_or_die(dq12, "--q12"),
                                parse_or_die(dq21, "--q21"), parse_or_die(dq22, "--q22"));
            ConditionReport rep = evaluate_conditions(br, c_cond.limits);
            json result = condition_report_to_json(rep);
            result["braiding"] = braiding_to_json(br);
            return emit(c_cond, result, 0, start);
        }
        if (*dims_cmd) {
            set_conductor_ceiling(c_dims.limits.conductor_ceiling);
            auto br = std::make_shared<DiagonalBraiding>(
                parse_or_die(hq11, "--q11"), parse_or_die(hq12, "--q12"),
                parse_or_die(hq21, "--q21"), parse_or_die(hq22, "--q22"));
            NicholsOracle oracle(br, hcutoff);
            auto rep = oracle.hilbert_series(hmax);
            return emit(c_dims, hilbert_to_json(rep, *br), 0, start);
        }
        if (*sub_cmd) {
            set_conductor_ceiling(c_sub.limits.conductor_ceiling);
            auto br = std::make_shared<DiagonalBraiding>(
                parse_or_die(sq11, "--q11"), parse_or_die(sq12, "--q12"),
                parse_or_die(sq21, "--q21"), parse_or_die(sq22, "--q22"));
            MultiDegree d1{sd1[0], sd1[1]}, d2{sd2[0], sd2[1]};
            DiagonalBraiding target = subquotient_braiding(*br, d1, d2);
            json result{{"source", braiding_to_json(*br)},
                        {"d1", json::array({d1.a, d1.b})},
                        {"d2", json::array({d2.a, d2.b})},
                        {"target", braiding_to_json(target)}};
            if (svalidate) {
                RootVectorContext ctx(br, c_sub.limits.max_index);
                result["w1_x21_validation"] =
                    validation_to_json(validate_subquotient(ctx, ctx.w(1), ctx.z(1), scutoff));
            }
            return emit(c_sub, result, 0, start);
        }
        if (*desc_cmd) {
            set_conductor_ceiling(c_desc.limits.conductor_ceiling);
            DiagonalBraiding br(parse_or_die(eq11, "--q11"), parse_or_die(eq12, "--q12"),
                                parse_or_die(eq21, "--q21"), parse_or_die(eq22, "--q22"));
            DescentOutcome out = descent_chain(br, max_steps);
            return emit(c_desc, descent_to_json(out), 0, start);
        }
        if (*enum_cmd) {
            set_conductor_ceiling(c_enum.limits.conductor_ceiling);
            EnumerationResult res = enumerate_triples(c_enum.limits, pipeline_conductor, record_hits);
            return emit(c_enum, enumeration_to_json(res), res.has_disagreement() ? 2 : 0, start);
        }
        if (*verify_cmd) {
            VerifyResult res = run_verify_suite(c_verify.limits);
            return emit(c_verify, verify_to_json(res), res.ok() ? 0 : 2, start);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
