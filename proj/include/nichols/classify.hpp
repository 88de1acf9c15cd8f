#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "nichols/conditions.hpp"

namespace nichols {

/// Itemized case of the classification list: part 1 (single case), part 2 items 1-7,
/// part 3 items 1-7, part 4 items 1-8, part 5 items 1-5.
struct CaseLabel {
    int part = 0;
    int item = 0;
    auto operator<=>(const CaseLabel&) const = default;
    std::string str() const { return std::to_string(part) + "." + std::to_string(item); }
};

enum class Outcome { Finite, NotInList, Indeterminate };

struct Verdict {
    Outcome outcome = Outcome::Indeterminate;
    std::vector<CaseLabel> labels; // sorted, unique; nonempty iff outcome == Finite
    bool basis_swapped = false;
    std::vector<std::string> evidence;

    std::optional<CaseLabel> canonical() const {
        if (labels.empty()) return std::nullopt;
        return labels.front();
    }
};

const char* outcome_name(Outcome o);

/// One of the six relation families forced by w_a = 0.
struct SixFamily {
    int family = 0;        // 1..6
    std::string relations; // defining relations with a substituted
};

/// Literal transcription of the classification list: tests tc and its swap against
/// every itemized condition. Non-root-of-unity entries yield NotInList through the
/// R_n membership tests.
Verdict classify_theorem(const TwistClass& tc);

/// Condition-pipeline decider: (A1)..(A8), the z_2 = 0 shortcut, the invariant a,
/// the six families and the per-family scalar tests, mirroring the order of the
/// source analysis. Independent of classify_theorem by construction.
Verdict classify_pipeline(const DiagonalBraiding& br, const Limits& limits = {});

/// The subset of the six families whose defining relations tc satisfies exactly.
std::vector<SixFamily> six_families(const TwistClass& tc, long a);

// Exponent-level fast paths (used by the enumeration sweeps; same logic).
std::vector<CaseLabel> theorem_labels_exp(const TwistExp& t); // both orientations, sorted unique
std::vector<CaseLabel> theorem_labels_direct_exp(const TwistExp& t); // unswapped orientation only
Verdict classify_theorem_exp(const TwistExp& t);
Verdict classify_pipeline_exp(const TwistExp& t, int depth = 0);

} // namespace nichols
