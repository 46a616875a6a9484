#include "chibound/ledger.hpp"

#include <cstdlib>

namespace chibound {

nlohmann::ordered_json LedgerRecord::toJson() const {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["graph6"] = graph6;
    j["caseId"] = caseId;
    j["colorsUsed"] = colorsUsed;
    j["oracleChi"] = oracleChi;
    j["oracleOmega"] = oracleOmega;
    j["seed"] = seed;
    j["durationMillis"] = durationMillis;
    j["toolVersion"] = kToolVersion;
    return j;
}

nlohmann::ordered_json anomalyToJson(const Anomaly& a) {
    nlohmann::ordered_json j;
    j["kind"] = "anomaly";
    j["graph6"] = a.graph6;
    j["claimId"] = a.claimId;
    j["check"] = checkName(a.check);
    j["witness"] = a.witness;
    j["bound"] = a.bound;
    j["timestampMs"] = a.timestampMs;
    j["toolVersion"] = kToolVersion;
    return j;
}

LedgerWriter::LedgerWriter(const std::string& path) : out_(path, std::ios::app) {
    if (!out_) fail(Errc::InvalidArgument, "cannot open ledger file: " + path);
}

void LedgerWriter::append(const nlohmann::ordered_json& j) {
    out_ << j.dump() << '\n';
    out_.flush();
}

std::string defaultLedgerPath() {
    if (const char* env = std::getenv("CHIBOUND_LEDGER")) return env;
    return "chibound-ledger.jsonl";
}

} // namespace chibound
