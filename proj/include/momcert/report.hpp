#pragma once

// JSON form of certificate bundles and case lists.
//
// Canonical output leaves out wall_time_ms and the worker count, the only
// fields that vary between otherwise identical runs.

#include "momcert/certifier.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace momcert {

struct JsonOptions {
    bool canonical = false;
};

inline nlohmann::json to_json(const Interval& iv) { return nlohmann::json::array({iv.lo, iv.hi}); }

inline nlohmann::json to_json(const Box& b)
{
    return {{"e2", to_json(b.e2)}, {"e3", to_json(b.e3)}, {"e4", to_json(b.e4)}, {"dim", b.dim}};
}

inline nlohmann::json to_json(const std::vector<TripleType>& triples)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const TripleType& t : triples) arr.push_back(t.indices());
    return arr;
}

inline nlohmann::json to_json(const CaseReport& r, const JsonOptions& opt = {})
{
    nlohmann::json failures = nlohmann::json::array();
    for (const Box& b : r.failures) failures.push_back(to_json(b));
    nlohmann::json j = {
        {"case_id", r.case_id},
        {"label", r.label},
        {"triples", to_json(r.triples)},
        {"boxes_processed", r.boxes_processed},
        {"boxes_discarded", r.boxes_discarded},
        {"max_depth_reached", r.max_depth_reached},
        {"min_lower_bound", r.min_lower_bound},
        {"status", to_string(r.status)},
        {"failures", failures},
    };
    if (!opt.canonical) j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

inline nlohmann::json to_json(const Strategy& s, const JsonOptions& opt = {})
{
    nlohmann::json j = {
        {"mode", to_string(s.mode)}, {"depth", s.depth},         {"budget", s.budget},
        {"root_levels", s.root_levels}, {"use_f2", s.use_f2}, {"max_failures", s.max_failures},
    };
    if (!opt.canonical) j["workers"] = s.workers;
    return j;
}

inline nlohmann::json to_json(const CertificateBundle& b, const JsonOptions& opt = {})
{
    nlohmann::json cases = nlohmann::json::array();
    for (const CaseReport& r : b.cases) cases.push_back(to_json(r, opt));
    return {
        {"threshold", b.threshold},
        {"eps_model", b.eps_model},
        {"strategy", to_json(b.strategy, opt)},
        {"domain", to_json(b.domain)},
        {"all_passed", b.all_passed()},
        {"cases", cases},
    };
}

inline std::string dump(const CertificateBundle& b, const JsonOptions& opt = {})
{
    return to_json(b, opt).dump(2) + "\n";
}

/// The case list as a data file: [{id, triples:[[p,q,r],...]}, ...].
inline nlohmann::json cases_to_json(const std::vector<CaseSpec>& cases)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const CaseSpec& cs : cases) arr.push_back({{"id", cs.id}, {"triples", to_json(cs.triples)}});
    return arr;
}

/// Write via a temporary file in the same directory, then rename over `path`.
inline void write_atomically(const std::filesystem::path& path, const std::string& content)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        os << content;
        os.flush();
        if (!os) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

} // namespace momcert
