#pragma once

#include <map>
#include <string>
#include <vector>

#include "nichols/classify.hpp"

namespace nichols {

struct FiniteHit {
    long M = 1;
    long al = 0, be = 0, ga = 0; // exponents of (q11, q12q21, q22) at conductor M
    std::vector<CaseLabel> labels;
};

struct EnumerationResult {
    Limits config;
    long literal_max_order = 0;
    long literal_triples = 0;
    long literal_finite = 0;
    std::map<CaseLabel, long> label_counts; // finite hits per label, literal sweep

    long pipeline_conductor = 0;
    long pipeline_triples = 0;
    long pipeline_finite = 0;
    long pipeline_not_in_list = 0;
    long pipeline_indeterminate = 0;

    long disagreements = 0;
    std::vector<std::string> disagreement_notes; // capped

    bool record_hits = false;
    std::vector<FiniteHit> finite_hits; // literal sweep, present when record_hits

    bool has_disagreement() const { return disagreements > 0 || pipeline_indeterminate > 0; }
};

/// Literal sweep over all root-of-unity triples with each order <= cfg.max_order,
/// followed by the cross-validation sweep: all triples with joint conductor <=
/// pipeline_conductor run through both classifiers, any mismatch of outcome or
/// canonical label recorded as a disagreement. Deterministic order (orders ascending,
/// exponents ascending); work is distributed over cfg.workers threads with results
/// merged in input order.
EnumerationResult enumerate_triples(const Limits& cfg, long pipeline_conductor = 60,
                                    bool record_hits = false);

/// Cross-validation part only (used by the acceptance suite).
EnumerationResult agreement_sweep(const Limits& cfg, long pipeline_conductor);

} // namespace nichols
