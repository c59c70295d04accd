#pragma once

#include <chrono>
#include <nlohmann/json.hpp>
#include <sstream>

#include "rmatrix.hpp"

namespace qyb {

// Deterministic check report: command echo, one line per check, overall
// status equal to the conjunction.
struct Report {
    std::string command;
    uint64_t seed = 0;
    bool seeded = false;
    struct Entry {
        std::string name;
        bool pass = true;
        std::string detail;
        long elapsed_ms = 0;
    };
    std::vector<Entry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& detail = "", long ms = 0) {
        entries.push_back({name, pass, detail, ms});
    }
    void absorb(const std::string& prefix, const CheckReport& rep, long ms = 0) {
        for (const auto& item : rep.items)
            entries.push_back({prefix.empty() ? item.name : prefix + ": " + item.name, item.pass, item.detail, ms});
    }

    std::string text() const {
        std::ostringstream os;
        os << "# " << command << "\n";
        if (seeded) os << "# seed: " << seed << "\n";
        for (const auto& e : entries) {
            os << (e.pass ? "PASS" : "FAIL") << "  " << e.name;
            if (!e.detail.empty()) os << "  (" << e.detail << ")";
            if (e.elapsed_ms > 0) os << "  [" << e.elapsed_ms << " ms]";
            os << "\n";
        }
        os << (all_pass() ? "OK" : "FAILED") << "  " << entries.size() << " checks\n";
        return os.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        if (seeded) j["seed"] = seed;
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& e : entries) {
            nlohmann::json c;
            c["name"] = e.name;
            c["pass"] = e.pass;
            if (!e.detail.empty()) c["detail"] = e.detail;
            if (e.elapsed_ms > 0) c["elapsed_ms"] = e.elapsed_ms;
            checks.push_back(std::move(c));
        }
        j["checks"] = std::move(checks);
        j["pass"] = all_pass();
        return j;
    }
};

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace qyb
