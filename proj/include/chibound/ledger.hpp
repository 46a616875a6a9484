#ifndef CHIBOUND_LEDGER_HPP
#define CHIBOUND_LEDGER_HPP

#include <cstdint>
#include <fstream>
#include <string>

#include "json.hpp"

#include "chibound/colorer.hpp"

namespace chibound {

inline constexpr const char* kToolVersion = "chibound 0.1.0";

/// One JSONL record per event, append-only.  Records from parallel workers
/// are merged by the caller in index order, so file content is deterministic
/// for a fixed (seed, count).
struct LedgerRecord {
    std::string kind; // run | anomaly | bound-check
    std::string graph6;
    std::string caseId;
    int colorsUsed = 0;
    int oracleChi = 0;
    int oracleOmega = 0;
    std::uint64_t seed = 0;
    std::int64_t durationMillis = 0;

    nlohmann::ordered_json toJson() const;
};

nlohmann::ordered_json anomalyToJson(const Anomaly& a);

class LedgerWriter {
public:
    explicit LedgerWriter(const std::string& path);
    void append(const nlohmann::ordered_json& j);

private:
    std::ofstream out_;
};

/// --ledger flag, else CHIBOUND_LEDGER, else the built-in default.
std::string defaultLedgerPath();

} // namespace chibound

#endif
