#include "assocform/associated.hpp"
#include "assocform/errors.hpp"
#include "assocform/milnor.hpp"
#include "assocform/parse.hpp"
#include "assocform/witnesses.hpp"

#include <doctest.h>

using namespace assocform;

TEST_CASE("interior witness shapes") {
    CHECK(build_interior_witness(3, 3) == parse_form("z1*z2*z3", 3));
    CHECK(build_interior_witness(2, 5) == parse_form("z1^3*z2^2 + z1^2*z2^3", 2));
    CHECK(build_interior_witness(4, 3).terms().size() == 4);
    CHECK_THROWS_AS(build_interior_witness(2, 3), UnsupportedPairError);
    CHECK_THROWS_AS(build_interior_witness(2, 2), UnsupportedPairError);
}

TEST_CASE("witness span") {
    for (const auto& [n, m] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {3, 3}}) {
        CAPTURE(n);
        CAPTURE(m);
        const WitnessReport r = verify_witness_span(n, m);
        CHECK(r.passed());
        CHECK(r.achieved_dim == r.target_dim);
    }
}

TEST_CASE("q0") {
    CHECK(build_q0(4) == parse_form("z1^4 + z1^2*z2^2 + z2^4", 2));
    CHECK(build_q0(5) == parse_form("z1^4*z2 + z1*z2^4", 2));
    CHECK(build_q0(6) == parse_form("z1^5*z2 + z1*z2^5", 2));
    CHECK_THROWS_AS(build_q0(2), DegreeError);
    CHECK(associated_form(build_q0(5)).form ==
          parse_form("-(1/60)*z1^6 + (1/12)*z1^3*z2^3 - (1/60)*z2^6", 2));
    CHECK(associated_form(build_q0(6)).form ==
          parse_form("-(1/120)*z1^8 + (7/60)*z1^4*z2^4 - (1/120)*z2^8", 2));
}

TEST_CASE("perturbation search") {
    const Form w = build_interior_witness(3, 3);
    CHECK_FALSE(is_nondegenerate(w));
    const auto found = search_nondegenerate_near(w, 1, 50);
    REQUIRE(found);
    CHECK(is_nondegenerate(*found));
    CHECK(!hessian_determinant(associated_form(*found).form).is_zero());
    // deterministic
    CHECK(*search_nondegenerate_near(w, 1, 50) == *found);

    // a nondegenerate witness is returned unchanged
    const Form w24 = build_interior_witness(2, 5);
    if (is_nondegenerate(w24)) CHECK(*search_nondegenerate_near(w24, 3, 1) == w24);
}
