#include "doctest.h"
#include "property_checks.hpp"

// Reduced-size run of the randomized invariant suite; the acceptance binary
// runs the full 1,000-profile version per n.
TEST_SUITE("properties") {

TEST_CASE("randomized invariants hold at n=3,4,5") {
    for (int n : {3, 4, 5}) {
        const ieff::tests::PropertyOutcome outcome =
            ieff::tests::check_properties(n, 250, 1000 + n);
        INFO("n=", n, ": ", outcome.first_failure);
        CHECK(outcome.profiles_checked == 250);
        CHECK(outcome.violations == 0);
    }
}

}  // TEST_SUITE
