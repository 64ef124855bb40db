#ifndef CVBENCH_MATCHING_HPP
#define CVBENCH_MATCHING_HPP

#include <string>
#include <vector>

#include "cvbench/fock.hpp"
#include "cvbench/state_spec.hpp"

namespace cvbench {

// The benchmarked families of the matched-⟨n⟩ comparison. Fock states enter
// as parameter-free isotropic references at integer targets.
enum class MatchFamily {
    SqueezedVacuum,  // S(r)|0⟩
    Subtracted1,     // a S(r)|0⟩  (≡ S(r)|1⟩)
    Subtracted2,     // a² S(r)|0⟩
    EvenCat,
    OddCat,
    Fock
};

const char* family_name(MatchFamily family);
MatchFamily family_from_name(const std::string& name);
std::vector<MatchFamily> all_families();

struct MatchSolution {
    MatchFamily family = MatchFamily::Fock;
    double target_n = 0.0;
    double parameter = 0.0;  // r for squeezed families, α for cats, n for Fock
    double r_db = 0.0;       // populated for squeezed families
    double achieved_n = 0.0;
    bool feasible = false;
    std::string reason;      // empty when feasible
};

// Closed-form inversion for S|0⟩ and aS|0⟩; bisection on the fock-core
// pipeline's ⟨n⟩(r) for a²S|0⟩. `cutoff` seeds the pipeline evaluations.
MatchSolution solve_squeezed_family(MatchFamily family, double target_n, int cutoff = 80);

MatchSolution solve_cat_alpha(CatParity parity, double target_n);

MatchSolution solve_family(MatchFamily family, double target_n, int cutoff = 80);

std::vector<MatchSolution> matched_set(double target_n, const std::vector<MatchFamily>& families,
                                       int cutoff = 80);

// StateSpec for a feasible solution (throws domain_error otherwise).
StateSpec matched_spec(const MatchSolution& solution, double theta, int cutoff);

// CSV rows: family,target_n,parameter,r_db_or_alpha,achieved_n,feasible,reason
std::string match_csv_header();
std::string match_csv_row(const MatchSolution& solution);

} // namespace cvbench

#endif
