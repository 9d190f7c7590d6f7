#include "ugnsr/report.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace ugnsr {

const char* kToolVersion = "0.1.0";

bool VerificationReport::all_pass() const {
    for (const auto& c : cases)
        if (c.status == CaseStatus::fail) return false;
    return true;
}

void VerificationReport::absorb(const CheckReport& r, double wall_ms) {
    const double per_case = r.cases.empty() ? 0.0 : wall_ms / static_cast<double>(r.cases.size());
    for (const auto& c : r.cases)
        cases.push_back({c.id, c.pass ? CaseStatus::pass : CaseStatus::fail, c.details, per_case});
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

const char* status_name(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        default: return "skip";
    }
}

} // namespace

std::string VerificationReport::to_json(bool with_timing) const {
    std::ostringstream os;
    os << "{\"suite\":\"" << json_escape(suite) << "\",";
    os << "\"tool_version\":\"" << json_escape(tool_version) << "\",";
    os << "\"parameters\":{";
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        if (i) os << ",";
        os << "\"" << json_escape(parameters[i].first) << "\":\""
           << json_escape(parameters[i].second) << "\"";
    }
    os << "},\"cases\":[";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (i) os << ",";
        os << "{\"id\":\"" << json_escape(cases[i].id) << "\",\"status\":\""
           << status_name(cases[i].status) << "\"";
        if (!cases[i].details.empty())
            os << ",\"details\":\"" << json_escape(cases[i].details) << "\"";
        os << "}";
    }
    os << "],\"all_pass\":" << (all_pass() ? "true" : "false");
    if (with_timing) {
        os << ",\"timing_ms\":[";
        for (std::size_t i = 0; i < cases.size(); ++i) {
            if (i) os << ",";
            os << cases[i].wall_ms;
        }
        os << "]";
    }
    os << "}";
    return os.str();
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "suite: " << suite << " (version " << tool_version << ")\n";
    for (const auto& [k, v] : parameters) os << "  " << k << " = " << v << "\n";
    int failed = 0;
    for (const auto& c : cases) {
        os << "  [" << status_name(c.status) << "] " << c.id;
        if (c.wall_ms > 0.05) {
            std::ostringstream t;
            t.setf(std::ios::fixed);
            t.precision(1);
            t << c.wall_ms;
            os << " (" << t.str() << " ms)";
        }
        if (!c.details.empty()) os << " -- " << c.details;
        os << "\n";
        failed += c.status == CaseStatus::fail;
    }
    os << (failed == 0 ? "all cases passed" : std::to_string(failed) + " case(s) FAILED") << "\n";
    return os.str();
}

std::vector<ReportCase> run_cases(
    const std::vector<std::function<std::vector<ReportCase>()>>& producers, int jobs) {
    std::vector<std::vector<ReportCase>> results(producers.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < producers.size(); ++i) results[i] = producers[i]();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= producers.size()) return;
                results[i] = producers[i]();
            }
        };
        std::vector<std::thread> pool;
        const int n = std::min<int>(jobs, static_cast<int>(producers.size()));
        pool.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<ReportCase> flat;
    for (auto& r : results)
        for (auto& c : r) flat.push_back(std::move(c));
    return flat;
}

} // namespace ugnsr
