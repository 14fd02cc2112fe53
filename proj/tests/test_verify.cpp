#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcomb/verify.hpp"

using namespace qcomb;

TEST_CASE("a mutated L_q is caught by the product-based criteria") {
    VerifyOptions opts;
    opts.gen = mutated_generators();
    for (int id : {1, 4, 8}) {
        const CheckResult r = run_criterion(id, opts);
        CHECK_MESSAGE(!r.pass, "criterion ", id, " passed with a broken generator");
        CHECK_FALSE(r.detail.empty());
    }
    const CheckResult r4 = run_criterion(4, opts);
    CHECK(r4.detail.find("matrix product") != std::string::npos);
}

TEST_CASE("criteria independent of the generators still pass") {
    // Deep level: same inputs for criteria 2 and 5, but no wall-clock budget under a loaded test run.
    VerifyOptions opts;
    opts.level = Level::Deep;
    opts.gen = mutated_generators();
    CHECK(run_criterion(2, opts).pass);
    CHECK(run_criterion(5, opts).pass);
}

TEST_CASE("report formatting") {
    CheckResult r;
    r.id = 3;
    r.name = "x";
    r.pass = true;
    r.detail = "ok";
    CHECK(format_result(r).rfind("PASS  [3] x", 0) == 0);
    CHECK_THROWS(run_criterion(0, VerifyOptions{}));
    CHECK_THROWS(run_criterion(10, VerifyOptions{}));
}
