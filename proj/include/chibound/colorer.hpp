#ifndef CHIBOUND_COLORER_HPP
#define CHIBOUND_COLORER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "chibound/coloring.hpp"
#include "chibound/decompose.hpp"
#include "chibound/graph.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

/// Which theorem/lemma/subcase produced the coloring.
enum class CaseId {
    SMALL_OMEGA,        // clique number <= 2, exact search capped at 3
    K3P2_FALLBACK,      // K3+P2 present, exact search capped at 6
    THM11,              // d1 contains an edge plus a far vertex
    CODOMINO_C1C2,
    CODOMINO_SWAP,      // triangles exchanged, then the C1/C2 assembly
    CODOMINO1,
    CODOMINO2,
    CODOMINO3_CASE2,    // cross edge between the D1 and D3 splits
    CODOMINO3_EMPTY,    // no such cross edge
    CODOMINO_FINAL,
    X1,
    X2,
    COTWINC5_Y,
    COTWINC5_YFREE,
    CHI37,
    COA,
    THM13_SMALL_OMEGA,  // common neighborhood of the d2 pair near-stable
    THM13_OMEGA2,
    RESIDUAL_EXACT,
};

const char* caseName(CaseId id);

/// Replayable checks a recorded anomaly can express.  The witness layout is
/// fixed per kind so a violation can be re-established from (graph, anomaly)
/// alone.
enum class AnomalyCheck {
    StableSet,          // witness = set; violated when an edge lies inside
    ComponentsLe2,      // witness = set; some component exceeds two vertices
    EdgesAtMost,        // witness = set, bound; more than `bound` edges inside
    CardinalityAtMost,  // witness = set, bound
    OmegaAtMost,        // witness = set, bound
    ChiAtMostCap,       // witness = all vertices; chromatic number > bound
    NeighborCount12,    // witness = [x, a1, a2, a3]; |N(x) cap {a}| not in {1,2}
    B2NeighborType,     // witness = [x, u1, u2, u3]; N(x) among the u's is not
                        // one of {u1,u2}, {u2,u3}, {u2}, {u1,u3}
    X2TypeU3NotU2,      // witness = [x, u2, u3]; not (x~u3 and not x~u2)
    X2B3Type,           // witness = [x, u2, u3]; x~u2 or x~u3
    HubCover,           // witness = [y, h1..h4]; y sees none of the hubs
    HubNot1,            // witness = [y, h1..h4]; y sees exactly one hub
    D2EdgeCover,        // witness = [z, h1..h4]; z complete to no hub edge
    CoaEdgeEndpoint,    // witness = [a, b, u1, u3]; edge ab, neither complete to {u1,u3}
    TwoSetEdges,        // witness = [a1, a2, b1, b2]; both edges present
    CompleteToPair,     // witness = [z, a, b]; z not complete to {a, b}
    SwapC1C2Empty,      // witness = swapped roles [u1,u2,u3,v1,v2,v3]
    DPartitionCover,    // witness = [w, v1, v2, v3, u1, u2, u3, x(or -1)]
};

const char* checkName(AnomalyCheck check);

std::ostream& operator<<(std::ostream& os, CaseId id);
std::ostream& operator<<(std::ostream& os, AnomalyCheck check);

/// A machine-found counterexample to a structural claim, replayable from the
/// stored graph and witness.
struct Anomaly {
    std::string graph6;
    std::string claimId;
    AnomalyCheck check = AnomalyCheck::StableSet;
    std::vector<int> witness;
    int bound = 0;
    std::int64_t timestampMs = 0;
};

/// True iff the recorded violation still reproduces on g.
bool replayAnomaly(const Graph& g, const Anomaly& a);

struct StableSetEntry {
    VertexSet vertices;
    std::string claim;
};

struct WitnessRecord {
    std::string pattern;
    std::vector<int> vertices;
};

struct CaseTrace {
    CaseId caseId = CaseId::RESIDUAL_EXACT;
    std::vector<StableSetEntry> stableSets; // ordered; a partition of V
    std::vector<WitnessRecord> witnesses;
    std::vector<Anomaly> anomalies;
};

struct ColorOutcome {
    Coloring coloring;
    CaseTrace trace;
};

/// Deterministic JSON rendering of a trace (timestamps omitted).
nlohmann::ordered_json traceToJson(const CaseTrace& t);

class ClassViolationError : public Error {
public:
    explicit ClassViolationError(MembershipCertificate cert);
    const MembershipCertificate& certificate() const { return cert_; }

private:
    MembershipCertificate cert_;
};

/// The full engine: dispatches over the case ladder and always returns a
/// proper coloring.  Throws ClassViolationError when g has an induced P3+P2
/// or K4.  Claim failures are recorded as anomalies and resolved by exact
/// search.
ColorOutcome color(const Graph& g);

// Individual case engines; callable directly when their preconditions hold.
ColorOutcome colorTheorem11(const Graph& g, int v1, int v2, int v3);
ColorOutcome colorCoDomino(const Graph& g, const Embedding& emb);
ColorOutcome colorCoTwinC5(const Graph& g, const Embedding& emb);
ColorOutcome colorTheorem13(const Graph& g, int v1, int v2);

enum class XVariant { X1, X2 };
ColorOutcome colorX(const Graph& g, const Embedding& emb, XVariant variant);

enum class ChiVariant { Chi37, CoA };
ColorOutcome colorChi37CoA(const Graph& g, const Embedding& emb, ChiVariant variant);

/// The three-subset 3-coloring.  The sets must partition V(g); every stated
/// hypothesis is checked and a failure raises Errc::HypothesisViolation
/// naming the condition.
Coloring threePartColor(const Graph& g, VertexSet v1, VertexSet v2, VertexSet v3);

} // namespace chibound

#endif
