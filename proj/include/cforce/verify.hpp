#pragma once

#include <string>
#include <vector>

namespace cforce::verify {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct Suite {
    std::string name;
    std::vector<Check> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct Options {
    int threads = 1;
};

// Each suite re-derives every claimed value with the exhaustive solvers and
// embeds its own corpus parameters and seeds, so runs are reproducible with
// no external data.
Suite tree_formula(const Options& opt = {});      // structural tree solver vs exhaustive search
Suite tree_counting(const Options& opt = {});     // minimum-set count formula vs enumeration
Suite single_clique(const Options& opt = {});     // single-clique solver vs exhaustive search
Suite known_values(const Options& opt = {});      // hypercube/torus/pendant-family values and spreads
Suite snark_bound(const Options& opt = {});       // flower snark construction and exact small cases
Suite extremal(const Options& opt = {});          // Fc = 1 and Fc = n-1 characterizations, n <= 6
Suite bounds(const Options& opt = {});            // inequalities and containment laws over small graphs
Suite engine_properties(const Options& opt = {}); // randomized closure laws

// Suite group names accepted by the CLI: trees, clique, extremal, snark,
// bounds, spreads, all.
std::vector<Suite> run_suites(const std::string& which, const Options& opt = {});

}  // namespace cforce::verify
