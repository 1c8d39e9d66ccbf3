#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skein/lattice.hpp"

namespace skein {

struct BidegreeFailure {
    Vec2 bidegree;
    std::string difference;  // serialized nonzero difference at that bidegree
};

// Structured outcome of a verifier run.
struct VerificationReport {
    std::string check;
    std::string algebra;
    int max_degree = 0;
    bool passed = true;
    // bidegrees (or sampled cases, for the randomized suites) examined
    int bidegrees_checked = 0;
    std::vector<BidegreeFailure> failures;
    std::int64_t elapsed_ms = 0;
    // render the per-bidegree triangle in text output
    bool grid = false;

    void record_failure(Vec2 bidegree, std::string difference);

    std::string to_json() const;  // schema-stable, two-space indented
    std::string to_text() const;
};

// Wall-clock scope timer filling report.elapsed_ms on destruction.
class ReportTimer {
public:
    explicit ReportTimer(VerificationReport& report);
    ~ReportTimer();
    ReportTimer(const ReportTimer&) = delete;
    ReportTimer& operator=(const ReportTimer&) = delete;

private:
    VerificationReport& report_;
    std::int64_t start_;
};

}  // namespace skein
