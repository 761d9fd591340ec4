#include "graphvol/claims.hpp"

#include <array>

#include "graphvol/subgroup_graph.hpp"

namespace graphvol {

namespace tangle_words {

namespace {
Word parse(std::string_view text) { return parse_word(text, Alphabet::xyz()); }
} // namespace

Word f1_e1() { return parse("x"); }

Word f1_e2() {
    // q (z x' z') q^-1 with q = x y' x' z' x y x'; reduced length 17.
    return parse("x y' x' z' x y x' z x' z' x y' x' z x y x'");
}

Word f2_e1() { return parse("y"); }

Word f2_e2() { return parse("z x' z' x y' x' z x z'"); }

Word g_g1() { return parse("x y' x' z' x y x' z x' z' x y' x' z x y"); }

Word g_g2() { return parse("z x' z' x y' x' z x z' y"); }

Word fug_e3() { return parse("z x' z' x"); }

Word ffg_g1() { return parse("x"); }

Word ffg_g2() { return parse("x y' x' z' x y x' z x' z' x y' x' z x y x'"); }

Word ffg_g3() { return parse("y"); }

Word ffg_g4() { return parse("z x' z' x y' x' z x z'"); }

Word ffg_g2_replacement() {
    const Word g1 = ffg_g1(), g2 = ffg_g2(), g3 = ffg_g3();
    return g1 * g3 * g1.inverse() * g2 * g1 * g3.inverse() * g1.inverse();
}

Word ffg_g2_replacement_expected() { return parse("z' x y x' z x' z' x y' x' z"); }

} // namespace tangle_words

namespace {

ClaimResult run_claim(std::string id, std::string surface, const std::vector<Word>& images) {
    ClaimResult r;
    r.id = std::move(id);
    r.surface = std::move(surface);
    r.generator_count = images.size();
    r.rank = fold(images, Alphabet::xyz()).rank();
    r.injective = r.rank == static_cast<int>(r.generator_count);
    r.pass = r.injective;
    return r;
}

} // namespace

bool ClaimSuiteReport::all_pass() const {
    for (const ClaimResult& c : claims)
        if (!c.pass) return false;
    return replacement_word_matches && case_one.pass;
}

ClaimSuiteReport claim_suite() {
    using namespace tangle_words;
    ClaimSuiteReport report;

    report.claims.push_back(run_claim("3.1", "F1", {f1_e1(), f1_e2()}));
    report.claims.push_back(run_claim("3.2", "F2", {f2_e1(), f2_e2()}));
    report.claims.push_back(run_claim("3.3", "G", {g_g1(), g_g2()}));
    report.claims.push_back(run_claim("3.4", "F2+U2+G", {f2_e1(), g_g1(), fug_e3()}));
    report.claims.push_back(run_claim(
        "3.5", "F1+F2+G", {ffg_g1(), ffg_g2_replacement(), ffg_g3(), ffg_g4()}));

    report.replacement_word_matches =
        ffg_g2_replacement() == ffg_g2_replacement_expected();

    // Annulus boundaries landing on G's two generators: cyclically reduced
    // words of different lengths cannot be conjugate.
    const Word u = cyclic_reduce(g_g1());
    const Word v = cyclic_reduce(g_g2());
    report.case_one.cyclic_length_g1 = u.size();
    report.case_one.cyclic_length_g2 = v.size();
    report.case_one.conjugate = conjugate_test(g_g1(), g_g2());
    report.case_one.pass = report.case_one.cyclic_length_g1 == 16 &&
                           report.case_one.cyclic_length_g2 == 10 &&
                           !report.case_one.conjugate;
    return report;
}

} // namespace graphvol
