#include "nichols/enumerate.hpp"

#include <atomic>
#include <numeric>
#include <thread>

namespace nichols {

namespace {

long worker_count(const Limits& cfg) {
    long w = cfg.workers;
    if (const char* env = std::getenv("NICHOLS_WORKERS")) {
        long v = std::atol(env);
        if (v > 0) w = v;
    }
    if (w < 1) w = 1;
    return w;
}

// Runs tasks 0..n-1 on a fixed-size pool; each task writes only its own slot, so the
// merged result is independent of scheduling.
template <typename F>
void run_tasks(long n, long workers, F&& task) {
    if (workers <= 1 || n <= 1) {
        for (long i = 0; i < n; ++i) task(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    for (long t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                long i = next.fetch_add(1);
                if (i >= n) return;
                task(i);
            }
        });
    for (auto& th : pool) th.join();
}

struct LiteralSlice {
    long triples = 0;
    long finite = 0;
    std::map<CaseLabel, long> counts;
    std::vector<FiniteHit> hits;
};

struct AgreeSlice {
    long triples = 0;
    long finite = 0;
    long not_in_list = 0;
    long indeterminate = 0;
    long disagreements = 0;
    std::vector<std::string> notes;
};

std::string triple_str(long M, long al, long be, long ga) {
    auto part = [&](long e) {
        RootOfUnity r(e, M);
        return "z" + std::to_string(r.order) + ":" + std::to_string(r.exponent);
    };
    return "(" + part(al) + ", " + part(be) + ", " + part(ga) + ")";
}

} // namespace

EnumerationResult agreement_sweep(const Limits& cfg, long pipeline_conductor) {
    EnumerationResult out;
    out.config = cfg;
    out.pipeline_conductor = pipeline_conductor;

    std::vector<std::pair<long, long>> tasks; // (M, alpha)
    for (long M = 1; M <= pipeline_conductor; ++M)
        for (long al = 0; al < M; ++al) tasks.emplace_back(M, al);
    std::vector<AgreeSlice> slices(tasks.size());

    run_tasks((long)tasks.size(), worker_count(cfg), [&](long ti) {
        auto [M, al] = tasks[ti];
        AgreeSlice& s = slices[ti];
        for (long be = 0; be < M; ++be)
            for (long ga = 0; ga < M; ++ga) {
                long g = std::gcd(std::gcd(al, be), std::gcd(ga, M));
                if (g != 1) continue; // joint conductor < M; counted there
                TwistExp t{M, al, be, ga};
                ++s.triples;
                Verdict lit = classify_theorem_exp(t);
                Verdict pip = classify_pipeline_exp(t);
                switch (pip.outcome) {
                    case Outcome::Finite: ++s.finite; break;
                    case Outcome::NotInList: ++s.not_in_list; break;
                    default: ++s.indeterminate; break;
                }
                bool agree = lit.outcome == pip.outcome && lit.canonical() == pip.canonical();
                if (!agree) {
                    ++s.disagreements;
                    if (s.notes.size() < 4) {
                        std::string note = triple_str(M, al, be, ga) + ": literal " +
                                           outcome_name(lit.outcome) + "/" +
                                           (lit.canonical() ? lit.canonical()->str() : "-") +
                                           " vs pipeline " + outcome_name(pip.outcome) + "/" +
                                           (pip.canonical() ? pip.canonical()->str() : "-");
                        if (!pip.evidence.empty()) note += " [" + pip.evidence.front() + "]";
                        s.notes.push_back(std::move(note));
                    }
                }
            }
    });

    for (const auto& s : slices) {
        out.pipeline_triples += s.triples;
        out.pipeline_finite += s.finite;
        out.pipeline_not_in_list += s.not_in_list;
        out.pipeline_indeterminate += s.indeterminate;
        out.disagreements += s.disagreements;
        for (const auto& n : s.notes)
            if (out.disagreement_notes.size() < 100) out.disagreement_notes.push_back(n);
    }
    return out;
}

EnumerationResult enumerate_triples(const Limits& cfg, long pipeline_conductor, bool record_hits) {
    EnumerationResult out = agreement_sweep(cfg, pipeline_conductor);
    out.literal_max_order = cfg.max_order;
    out.record_hits = record_hits;

    // Primitive roots of each order up to the bound, in (order, exponent) order.
    std::vector<std::pair<long, long>> roots; // (order, exponent)
    for (long n = 1; n <= cfg.max_order; ++n)
        for (long k = (n == 1 ? 0 : 1); k < n; ++k)
            if (n == 1 || std::gcd(k, n) == 1) roots.emplace_back(n, k);

    std::vector<LiteralSlice> slices(roots.size());
    run_tasks((long)roots.size(), worker_count(cfg), [&](long i1) {
        auto [n1, k1] = roots[i1];
        LiteralSlice& s = slices[i1];
        for (auto [n2, k2] : roots)
            for (auto [n3, k3] : roots) {
                long M = std::lcm(std::lcm(n1, n2), n3);
                TwistExp t{M, k1 * (M / n1), k2 * (M / n2), k3 * (M / n3)};
                ++s.triples;
                std::vector<CaseLabel> labels = theorem_labels_exp(t);
                if (labels.empty()) continue;
                ++s.finite;
                // hit counts follow the unswapped orientation, matching the per-item
                // congruence counting
                for (const CaseLabel& l : theorem_labels_direct_exp(t)) ++s.counts[l];
                if (record_hits) s.hits.push_back({t.M, t.al, t.be, t.ga, labels});
            }
    });

    for (const auto& s : slices) {
        out.literal_triples += s.triples;
        out.literal_finite += s.finite;
        for (const auto& [l, c] : s.counts) out.label_counts[l] += c;
        if (record_hits)
            out.finite_hits.insert(out.finite_hits.end(), s.hits.begin(), s.hits.end());
    }
    return out;
}

} // namespace nichols
