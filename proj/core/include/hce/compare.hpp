#pragma once

#include <string>
#include <vector>

#include "hce/specseq.hpp"

namespace hce {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Expected homology of the two-block algebra (a, n, w) at height 1.
HomologySummary expected_atomic_summary(long p, int a, int n, int w);

/// Expected weight-p E2 entries for Euclidean inputs at height 1.
Page expected_euclidean_e2(long p, int n, int k);

/// The documented d^(p-1) assertion for a Euclidean weight-p page, when the
/// page has a free class on the top line and torsion on the zero line.
std::vector<DifferentialAssertion> documented_euclidean_assertions(const Page& page, long p);

/// The documented death of the single weight-p torsion class on a surface
/// page.
std::vector<DifferentialAssertion> documented_surface_assertions(const Page& page, long p);

/// Runs every acceptance criterion; one result per criterion.
std::vector<CriterionResult> run_acceptance(int threads = 1);

}  // namespace hce
