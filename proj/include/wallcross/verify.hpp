#ifndef WALLCROSS_VERIFY_HPP
#define WALLCROSS_VERIFY_HPP

// The acceptance grids: oracle equivalence, Segre identities, sign identities,
// leading terms, hidden-data independence and model axioms.

#include <json.hpp>

#include <string>
#include <vector>

namespace wallcross {

struct GridBounds {
    int q_min = 0;
    int q_max = 3;
    int d_max = 8;
    int r_max = 2;
    int pair_range = 3; // pairings swept over -pair_range..pair_range
};

struct VerifyOptions {
    GridBounds l0;                  // criteria 1 and 6
    GridBounds l1{0, 2, 9, 1, 2};   // criterion 2
    // q = 2 walls with zeta^2 in {-4, -8} all have d >= 11; include the d = 11 ones.
    bool l1_include_q2 = true;
    // Mutation hook: flips the sign of epsilon(zeta, w) wherever the checks use it.
    bool flip_epsilon = false;
    unsigned seed = 20240611;
};

struct PropertyResult {
    int id = 0;
    std::string name;
    bool passed = true;
    long checked = 0;
    std::string counterexample; // first failure, empty on success
    std::string note;
    double seconds = 0;
};

// Names in criterion order: oracle_l0, oracle_l1, odd_classes, segre, structural,
// leading, hidden_data, scale, e_S, simple_type.
const std::vector<std::string>& property_names();

// Accepts a name from property_names() or the criterion number as a string.
PropertyResult run_property(const std::string& name, const VerifyOptions& options);
std::vector<PropertyResult> run_all(const VerifyOptions& options);

// Parses "q=0..3,d<=8,r<=2,p<=3" into `bounds`; unspecified keys keep their values.
GridBounds parse_grid(const std::string& text, GridBounds bounds);

nlohmann::json results_to_json(const std::vector<PropertyResult>& results);

} // namespace wallcross

#endif
