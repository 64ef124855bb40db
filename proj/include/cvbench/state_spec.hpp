#ifndef CVBENCH_STATE_SPEC_HPP
#define CVBENCH_STATE_SPEC_HPP

#include <string>

#include "cvbench/fock.hpp"

namespace cvbench {

// Declarative recipe for a benchmark state. Canonical text form:
//
//   fock{n=1,cutoff=80}
//   coherent{re=1.6,im=0,cutoff=80}
//   even_cat{re=1.6,im=0,cutoff=80}
//   odd_cat{re=1.6,im=0,cutoff=80}
//   squeezed_fock{r_db=6,theta=0,n=0,cutoff=80}
//   subtracted_squeezed{r_db=6,theta=0,k=2,cutoff=80}
//
// Keys may appear in any order when parsing; `alpha=` is accepted as a
// synonym for `re=`; `im`, `theta` and `cutoff` may be omitted (defaults 0,
// 0 and 80). format() always emits every key in the order above with 17
// significant digits, so format/parse round-trips are lossless.
enum class Family { Fock, Coherent, EvenCat, OddCat, SqueezedFock, SubtractedSqueezed };

struct StateSpec {
    Family family = Family::Fock;
    int n = 0;                  // Fock / SqueezedFock index
    cdouble alpha{0.0, 0.0};    // Coherent / cat amplitude
    double r_db = 0.0;          // squeezed families
    double theta = 0.0;
    int k = 1;                  // subtraction order, 1 or 2
    int cutoff = 80;

    bool operator==(const StateSpec&) const = default;
};

const char* family_tag(Family family);

std::string format(const StateSpec& spec);
StateSpec parse_state_spec(const std::string& text);

// Parameter-range validation shared by parse and build.
void validate(const StateSpec& spec);

FockVector build_state(const StateSpec& spec);

StateSpec with_cutoff(StateSpec spec, int cutoff);

// Smallest cutoff (>= spec.cutoff) expected to keep the closed-form tail
// below `tail_target`; a cheap envelope estimate, re-checked by the guard.
int recommended_cutoff(const StateSpec& spec, double tail_target);

// Builds at an automatically chosen cutoff: starts from the recommendation,
// grows by 1.5x until the construction succeeds and the realized tail mass
// is below `tail_target`. Throws truncation_error if max_cutoff is reached.
FockVector build_state_auto(const StateSpec& spec, double tail_target = 1e-12,
                            int max_cutoff = 1408);

// 17-significant-digit decimal formatting used for all text output.
std::string format_double(double value);

} // namespace cvbench

#endif
