#include "skein/report.hpp"

#include <chrono>
#include <json.hpp>
#include <sstream>

namespace skein {

void VerificationReport::record_failure(Vec2 bidegree, std::string difference) {
    passed = false;
    failures.push_back({bidegree, std::move(difference)});
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["algebra"] = algebra;
    j["max_degree"] = max_degree;
    j["status"] = passed ? "pass" : "fail";
    j["bidegrees_checked"] = bidegrees_checked;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        nlohmann::ordered_json jf;
        jf["bidegree"] = {f.bidegree.i, f.bidegree.j};
        jf["difference"] = f.difference;
        j["failures"].push_back(jf);
    }
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "check: " << check << "\n";
    out << "algebra: " << algebra << "\n";
    out << "max degree: " << max_degree << "\n";
    out << "cases checked: " << bidegrees_checked << "\n";
    if (grid) {
        out << "bidegree grid (rows i, columns j; '.' zero difference, 'X' nonzero):\n";
        for (int i = 0; i <= max_degree; ++i) {
            out << " ";
            for (int j = 0; i + j <= max_degree; ++j) {
                bool bad = false;
                for (const auto& f : failures)
                    if (f.bidegree == Vec2{i, j}) bad = true;
                out << ' ' << (bad ? 'X' : '.');
            }
            out << "\n";
        }
    }
    for (const auto& f : failures)
        out << "FAIL at " << to_string(f.bidegree) << ": " << f.difference << "\n";
    out << "status: " << (passed ? "PASS" : "FAIL") << "\n";
    out << "elapsed: " << elapsed_ms << " ms\n";
    return out.str();
}

namespace {
std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
}  // namespace

ReportTimer::ReportTimer(VerificationReport& report) : report_(report), start_(now_ms()) {}

ReportTimer::~ReportTimer() { report_.elapsed_ms = now_ms() - start_; }

}  // namespace skein
