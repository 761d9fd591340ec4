#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graphvol/word.hpp"

namespace graphvol {

// Machine verification of the incompressibility claims for the surfaces in
// the trivial 3-tangle exterior, whose fundamental group is free on x, y, z.
// Each claim asserts that an inclusion-induced map on fundamental groups is
// injective; the check folds the image words and compares the subgroup rank
// with the generator count (valid because free groups are Hopfian).

// Image words of the surface generators under inclusion, as computed in the
// tangle exterior.
namespace tangle_words {

// Surface F1 (twice-punctured disk): e1 -> x, e2 -> q (z x' z') q^-1 with
// q = x y' x' z' x y x'.
Word f1_e1();
Word f1_e2();

// Surface F2: e1 -> y, e2 -> (z x' z') (x y' x') (z x z').
Word f2_e1();
Word f2_e2();

// Surface G (thrice-punctured sphere): g1, g2 are the products of the F1
// resp. F2 generator images.
Word g_g1();
Word g_g2();

// Third generator of the twice-punctured torus F2 u U2 u G.
Word fug_e3();

// Generators of the five-punctured sphere F1 u F2 u G.
Word ffg_g1();
Word ffg_g2();
Word ffg_g3();
Word ffg_g4();

// Replacement generator g2' = g1 g3 g1^-1 g2 g1 g3^-1 g1^-1 and its freely
// reduced image word.
Word ffg_g2_replacement();
Word ffg_g2_replacement_expected();

} // namespace tangle_words

struct ClaimResult {
    std::string id;               // "3.1" .. "3.5"
    std::string surface;          // human-readable surface name
    std::size_t generator_count;  // number of image words
    int rank;                     // rank of the folded subgroup
    bool injective;               // rank == generator_count
    bool pass;
};

struct ConjugacyCaseResult {
    std::size_t cyclic_length_g1;
    std::size_t cyclic_length_g2;
    bool conjugate;
    bool pass; // expectation: different cyclic lengths, not conjugate (16 vs 10)
};

struct ClaimSuiteReport {
    std::vector<ClaimResult> claims;
    bool replacement_word_matches; // reduced g2' image equals the expected word
    ConjugacyCaseResult case_one;

    bool all_pass() const;
};

// Runs the five injectivity checks and the annulus-boundary non-conjugacy
// case on the hard-coded image families.
ClaimSuiteReport claim_suite();

} // namespace graphvol
