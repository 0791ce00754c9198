#include <doctest.h>

#include "pairstab/io.hpp"
#include "pairstab/repro.hpp"

using namespace pairstab;

TEST_CASE("distinguished weights match hand values for a k-range") {
    for (int k = 3; k <= 20; ++k) {
        Sl3Pair pair = sl3_pair(k);
        CHECK(weight_of_homogeneous(pair.v) == Weight{k - 1, k - 3});
        WeightPolytope supp = support_polytope(pair.w0);
        CHECK(supp.support() ==
              std::vector<Weight>{Weight{0, 2 * k - 1}, Weight{2 * k - 1, 0}});
        RepVector eta2 = act_lie(2, 3, act_lie(2, 3, pair.v));
        CHECK(eval_functional(Functional::l3, weight_of_homogeneous(eta2)) == 2 * k + 2);
    }
}

TEST_CASE("perturbed anchor vector leaves the kernel and is caught") {
    int k = 12;
    Sl3Pair pair = sl3_pair(k);
    RepVector broken = pair.w0;
    Monomial m = Monomial::sl3(0, {1, 2 * k - 1, 0}, {1, 0, 0});
    broken.terms.at(m) = Rational(-2 * k);  // instead of -(2k+1)
    CHECK_FALSE(contract(broken).is_zero());
    CHECK_THROWS(io::vector_from_json(io::vector_to_json(broken)));
}

TEST_CASE("scenario reports are deterministic") {
    ScenarioReport a = verify_sl2_reducible(3, 60, 42);
    ScenarioReport b = verify_sl2_reducible(3, 60, 42);
    CHECK(io::report_to_json(a).dump() == io::report_to_json(b).dump());
    ScenarioReport c = verify_sl3(12, 2, 16, {1});
    ScenarioReport d = verify_sl3(12, 2, 16, {1});
    CHECK(io::report_to_json(c).dump() == io::report_to_json(d).dump());
}

TEST_CASE("small-scale verifier runs pass") {
    CHECK(verify_sl2_reducible(4, 90, 3).overall());
    CHECK(verify_sl2_irreducible(5, 7, 10, 3).overall());
    CHECK(verify_lemma_codim_sprime(12, 2, 3).overall());
    CHECK(verify_lemma_codim_s(12, 4, 3).overall());
    CHECK(verify_stability_remark(12, 3, 6, 50).overall());
}

TEST_CASE("scenario preconditions") {
    CHECK_THROWS(verify_sl2_reducible(2, 10, 1));
    CHECK_THROWS(verify_sl3(2, 1, 10, {1}));
    CHECK_THROWS(verify_sl2_irreducible(8, 5, 10, 1));
}

TEST_CASE("exploratory warnings below the guaranteed range") {
    ScenarioReport r = verify_sl3(5, 1, 8, {1});
    REQUIRE(!r.warnings.empty());
    CHECK(r.warnings[0].find("exploratory") != std::string::npos);
}
