#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chainlab/ring.hpp"

namespace chainlab {

using json = nlohmann::ordered_json;

// The pinned ring suite, in fixed order. Index constants below.
std::vector<std::string> pinned_suite_specs();
std::vector<ring_table> build_suite();

enum suite_index : std::size_t {
    SU_Z2 = 0, SU_Z3, SU_Z4, SU_Z5, SU_Z6, SU_Z8, SU_Z9, SU_F4,
    SU_F2T2, SU_F2T3, SU_F2T4, SU_F3T2, SU_F2XY_FULL, SU_F2XY,
    SU_F2XF2, SU_GR42, SU_RAMIFIED, SU_COUNT
};

struct criterion_result {
    int index = 0;
    std::string title;
    bool pass = false;
    std::string detail;  // deterministic, included in JSON
    double seconds = 0.0; // human output only
};

struct acceptance_result {
    std::vector<criterion_result> criteria;
    bool all_pass = false;
};

// Runs criteria 1..8 once, then repeats them and compares the serialized
// reports byte for byte (criterion 9).
acceptance_result run_acceptance_suite();

// Deterministic JSON payload: no timings, stable field order.
json suite_report_json(const acceptance_result& r);

} // namespace chainlab
