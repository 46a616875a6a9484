#include "chibound/colorer.hpp"
#include <ostream>

#include <algorithm>
#include <chrono>
#include <utility>

#include "chibound/oracle.hpp"

namespace chibound {

namespace {

std::int64_t nowMs() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

int adjCount(const Graph& g, int x, std::initializer_list<int> anchors) {
    int c = 0;
    for (int a : anchors) c += g.adjacent(x, a) ? 1 : 0;
    return c;
}

// admissible B2 neighborhood types around a codomino: {u1,u2}, {u2,u3},
// {u2}, {u1,u3}
bool codominoB2TypeOk(bool a1, bool a2, bool a3) {
    if (a1 && a2 && !a3) return true;
    if (!a1 && a2 && a3) return true;
    if (!a1 && a2 && !a3) return true;
    if (a1 && !a2 && a3) return true;
    return false;
}

std::vector<StableSetEntry> exactClasses(const Coloring& c, const std::string& claim) {
    std::vector<StableSetEntry> sets;
    for (int color = 1; color <= c.k; ++color) {
        VertexSet s;
        for (std::size_t v = 0; v < c.assignment.size(); ++v)
            if (c.assignment[v] == color) s.add(int(v));
        sets.push_back({s, claim});
    }
    return sets;
}

/// Accumulates checked stable sets for one proof case; any failed claim is
/// recorded as an anomaly and switches the attempt into fallback mode.
class CaseAttempt {
public:
    CaseAttempt(const Graph& g, CaseId id) : g_(g), caseId_(id) {}

    void setCase(CaseId id) { caseId_ = id; }
    CaseId caseId() const { return caseId_; }
    bool failed() const { return failed_; }

    void witness(std::string pattern, std::vector<int> verts) {
        witnesses_.push_back({std::move(pattern), std::move(verts)});
    }

    void anomaly(AnomalyCheck check, std::vector<int> witness, int bound,
                 const std::string& claimId) {
        anomalies_.push_back(
            {graph6Encode(g_), claimId, check, std::move(witness), bound, nowMs()});
        failed_ = true;
    }

    bool checkStable(VertexSet s, const std::string& claimId) {
        if (isStableSet(g_, s)) return true;
        anomaly(AnomalyCheck::StableSet, s.toVector(), 0, claimId);
        return false;
    }

    bool checkComponentsLe2(VertexSet s, const std::string& claimId) {
        if (componentsAtMostTwo(g_, s)) return true;
        anomaly(AnomalyCheck::ComponentsLe2, s.toVector(), 0, claimId);
        return false;
    }

    bool checkEdgesAtMost(VertexSet s, int bound, const std::string& claimId) {
        if (edgesInsideAtMost(g_, s, bound) <= bound) return true;
        anomaly(AnomalyCheck::EdgesAtMost, s.toVector(), bound, claimId);
        return false;
    }

    bool checkCardAtMost(VertexSet s, int bound, const std::string& claimId) {
        if (s.size() <= bound) return true;
        anomaly(AnomalyCheck::CardinalityAtMost, s.toVector(), bound, claimId);
        return false;
    }

    bool addStable(VertexSet s, const std::string& claimId) {
        if (s.empty()) return true;
        if (!checkStable(s, claimId)) return false;
        sets_.push_back({s, claimId});
        return true;
    }

    bool addTwoColor(VertexSet s, const std::string& claimId) {
        if (s.empty()) return true;
        auto halves = twoColorCliquePairs(g_, s);
        if (!halves) {
            anomaly(AnomalyCheck::ComponentsLe2, s.toVector(), 0, claimId);
            return false;
        }
        if (!halves->first.empty()) sets_.push_back({halves->first, claimId});
        if (!halves->second.empty()) sets_.push_back({halves->second, claimId});
        return true;
    }

    ColorOutcome finish(bool ok);

    const Graph& graph() const { return g_; }

private:
    const Graph& g_;
    CaseId caseId_;
    bool failed_ = false;
    std::vector<StableSetEntry> sets_;
    std::vector<WitnessRecord> witnesses_;
    std::vector<Anomaly> anomalies_;
};

/// Exact search with an escalating color cap.  A missed cap is itself an
/// anomaly (the claimed bound failed); the search then continues so the
/// returned coloring is always proper.
ColorOutcome exactSearch(const Graph& g, CaseId id, int cap,
                         std::vector<WitnessRecord> witnesses,
                         std::vector<Anomaly> anomalies) {
    Coloring c;
    if (g.n() == 0) {
        return {Coloring{{}, 0}, CaseTrace{id, {}, std::move(witnesses), std::move(anomalies)}};
    }
    int lower = std::max(1, cliqueNumber(g).value);
    bool found = false;
    std::vector<int> caps{cap};
    if (cap < 7) caps.push_back(7);
    for (int attemptCap : caps) {
        for (int k = lower; k <= attemptCap && !found; ++k) {
            if (auto r = kColorable(g, k)) {
                c = std::move(*r);
                found = true;
            }
        }
        if (found) break;
        anomalies.push_back({graph6Encode(g),
                             std::string(caseName(id)) + ":chi-cap-" + std::to_string(attemptCap),
                             AnomalyCheck::ChiAtMostCap, VertexSet::range(g.n()).toVector(),
                             attemptCap, nowMs()});
        lower = attemptCap + 1;
    }
    if (!found) c = exactChromatic(g).certificate;
    CaseTrace trace{id, exactClasses(c, "exact-search"), std::move(witnesses), std::move(anomalies)};
    return {std::move(c), std::move(trace)};
}

ColorOutcome CaseAttempt::finish(bool ok) {
    if (!ok || failed_) {
        return exactSearch(g_, CaseId::RESIDUAL_EXACT, 7, std::move(witnesses_),
                           std::move(anomalies_));
    }
    VertexSet covered;
    for (const auto& entry : sets_) {
        if (!(covered & entry.vertices).empty())
            fail(Errc::Internal, "stable sets overlap in case " + std::string(caseName(caseId_)));
        covered |= entry.vertices;
    }
    if (covered != VertexSet::range(g_.n()))
        fail(Errc::Internal, "stable sets do not cover V in case " + std::string(caseName(caseId_)));

    Coloring c;
    c.assignment.assign(std::size_t(g_.n()), 0);
    int k = 0;
    for (const auto& entry : sets_) {
        ++k;
        for (int v : entry.vertices) c.assignment[std::size_t(v)] = k;
    }
    c.k = k;
    if (!validate(g_, c)) fail(Errc::Internal, "assembled coloring is improper");
    return {std::move(c), CaseTrace{caseId_, std::move(sets_), std::move(witnesses_),
                                    std::move(anomalies_)}};
}

// -- three-subset 3-coloring -------------------------------------------------

struct ThreePartFailure {
    AnomalyCheck check = AnomalyCheck::StableSet;
    std::vector<int> witness;
    int bound = 0;
    std::string condition;
};

struct ThreePartOutcome {
    std::vector<VertexSet> sets; // empty on failure
    ThreePartFailure failure;
    bool ok = false;
};

/// Operative hypothesis checks plus the constructive 3-coloring.  The caller
/// guarantees v1, v2, v3 are disjoint; `universe` is their union.
ThreePartOutcome threePartCore(const Graph& g, VertexSet v1, VertexSet v2, VertexSet v3,
                               VertexSet universe) {
    ThreePartOutcome out;
    auto failWith = [&](AnomalyCheck check, std::vector<int> witness, int bound,
                        std::string condition) {
        out.failure = {check, std::move(witness), bound, std::move(condition)};
        return out;
    };

    if (edgesInsideAtMost(g, v1, 1) > 1)
        return failWith(AnomalyCheck::EdgesAtMost, v1.toVector(), 1, "V1-edge-bound");
    if (!componentsAtMostTwo(g, v2))
        return failWith(AnomalyCheck::ComponentsLe2, v2.toVector(), 0, "V2-k3p3-free");
    if (!isStableSet(g, v3))
        return failWith(AnomalyCheck::StableSet, v3.toVector(), 0, "V3-stable");
    if (cliqueNumber(induced(g, v1 | v2)).value > 2)
        return failWith(AnomalyCheck::OmegaAtMost, (v1 | v2).toVector(), 2, "V1V2-k3-free");
    if (!componentsAtMostTwo(g, v1 | v3))
        return failWith(AnomalyCheck::ComponentsLe2, (v1 | v3).toVector(), 0, "V1V3-k3p3-free");
    if (!componentsAtMostTwo(g, v2 | v3))
        return failWith(AnomalyCheck::ComponentsLe2, (v2 | v3).toVector(), 0, "V2V3-k3p3-free");
    for (int v : v1 | v2) {
        VertexSet side = v1.contains(v) ? v1 : v2;
        VertexSet m = universe - g.neighborSet(v);
        m.remove(v);
        if (firstEdgeInside(g, m - side))
            return failWith(AnomalyCheck::EdgesAtMost, (m - side).toVector(), 0, "Mv-edge-free");
    }

    std::vector<VertexSet> sets;
    if (v1.empty()) {
        auto halves = twoColorCliquePairs(g, v2); // components checked above
        sets = {halves->first, halves->second, v3};
    } else if (auto edge = firstEdgeInside(g, v1)) {
        const int v = edge->first;
        VertexSet m = universe - g.neighborSet(v);
        m.remove(v);
        VertexSet s1 = g.neighborSet(v) & universe;
        VertexSet s2 = m & v1;
        s2.add(v);
        VertexSet s3 = m - v1;
        sets = {s1, s2, s3};
    } else {
        const int v = v1.first();
        VertexSet m = universe - g.neighborSet(v);
        m.remove(v);
        VertexSet s1 = (g.neighborSet(v) & v3) | (v1 & m);
        VertexSet s2 = g.neighborSet(v) & v2;
        VertexSet s3 = m - v1;
        s3.add(v);
        sets = {s1, s2, s3};
    }
    for (const VertexSet& s : sets)
        if (!isStableSet(g, s))
            return failWith(AnomalyCheck::StableSet, s.toVector(), 0, "derived-set-stable");
    out.sets = std::move(sets);
    out.ok = true;
    return out;
}

bool threePartApply(const Graph& g, CaseAttempt& att, VertexSet v1, VertexSet v2, VertexSet v3,
                    const std::string& prefix) {
    ThreePartOutcome res = threePartCore(g, v1, v2, v3, v1 | v2 | v3);
    if (!res.ok) {
        att.anomaly(res.failure.check, std::move(res.failure.witness), res.failure.bound,
                    prefix + ":tpc-" + res.failure.condition);
        return false;
    }
    for (const VertexSet& s : res.sets)
        if (!att.addStable(s, prefix + ":tpc-set")) return false;
    return true;
}

/// Orients (a, b) so the first set satisfies the one-edge hypothesis, then
/// applies the three-subset coloring with v3 = rest.
bool threePartOriented(const Graph& g, CaseAttempt& att, VertexSet a, VertexSet b, VertexSet rest,
                       const std::string& prefix) {
    if (edgesInsideAtMost(g, a, 1) <= 1) return threePartApply(g, att, a, b, rest, prefix);
    if (edgesInsideAtMost(g, b, 1) <= 1) return threePartApply(g, att, b, a, rest, prefix);
    att.anomaly(AnomalyCheck::EdgesAtMost, a.toVector(), 1, prefix + ":tpc-V1-orient");
    return false;
}

// -- codomino ------------------------------------------------------------------

struct CoRoles {
    int v1, v2, v3, u1, u2, u3;
};

CoRoles coRolesOf(const Pattern& p, const Embedding& e) {
    auto at = [&](const char* r) { return e.map[std::size_t(p.roleIndex(r))]; };
    return {at("v1"), at("v2"), at("v3"), at("u1"), at("u2"), at("u3")};
}

bool addSplits(CaseAttempt& att, const TriangleDecomposition& dec, const std::string& prefix) {
    for (int i = 0; i < 3; ++i) {
        VertexSet s = dec.a2Split[std::size_t(i)];
        s.add(dec.partner(i));
        if (!att.addStable(s, prefix + ":a2split" + std::to_string(i + 1))) return false;
    }
    return true;
}

std::optional<std::array<VertexSet, 4>> classifyB2(const Graph& g,
                                                   const TriangleDecomposition& dec,
                                                   const CoRoles& r, CaseAttempt& att,
                                                   const std::string& prefix) {
    if (!att.checkStable(dec.b[1], prefix + ":B2-stable")) return std::nullopt;
    std::array<VertexSet, 4> c{};
    for (int x : dec.b[1]) {
        const bool a1 = g.adjacent(x, r.u1);
        const bool a2 = g.adjacent(x, r.u2);
        const bool a3 = g.adjacent(x, r.u3);
        if (!codominoB2TypeOk(a1, a2, a3)) {
            att.anomaly(AnomalyCheck::B2NeighborType, {x, r.u1, r.u2, r.u3}, 0,
                        prefix + ":B2-neighbor-type");
            return std::nullopt;
        }
        if (a1 && a2) c[0].add(x);
        else if (a2 && a3) c[1].add(x);
        else if (a2) c[2].add(x);
        else c[3].add(x);
    }
    return c;
}

/// The assembly for a nonempty C1 or C2: one of B3 / B1-A0 collapses to a
/// stable set, the combined remainder is a disjoint union of edges.
bool c1c2Assembly(CaseAttempt& att, const TriangleDecomposition& dec,
                  const std::array<VertexSet, 4>& c, const std::string& prefix) {
    if (!att.addStable(dec.b[1], prefix + ":B2-set")) return false;
    if (!c[0].empty()) {
        if (!att.addStable(dec.b[2], prefix + ":B3-stable")) return false;
        if (!att.addTwoColor(dec.b[0], prefix + ":B1-components")) return false;
    } else {
        if (!att.addStable(dec.b[0] - dec.a0, prefix + ":B1mA0-stable")) return false;
        if (!att.addTwoColor(dec.b[2] | dec.a0, prefix + ":B3A0-components")) return false;
    }
    return addSplits(att, dec, prefix);
}

bool coDominoBody(const Graph& g, const Embedding& emb, CaseAttempt& att) {
    const CoRoles r = coRolesOf(patternByName("codomino"), emb);
    att.witness("codomino", emb.map);
    const TriangleDecomposition dec = aroundTriangle(g, {r.v1, r.v2, r.v3});

    auto cOpt = classifyB2(g, dec, r, att, "CODOMINO");
    if (!cOpt) return false;
    const auto& c = *cOpt;

    if (!c[0].empty() || !c[1].empty()) {
        att.setCase(CaseId::CODOMINO_C1C2);
        return c1c2Assembly(att, dec, c, "CODOMINO_C1C2");
    }

    if (!att.checkCardAtMost(c[2], 1, "CODOMINO:C3-card")) return false;
    const int x = c[2].first(); // -1 when C3 is empty

    const VertexSet nv1v2 = g.neighborSet(r.v1) & g.neighborSet(r.v2) & dec.a2;
    const VertexSet nv2v3 = g.neighborSet(r.v2) & g.neighborSet(r.v3) & dec.a2;

    VertexSet singles;
    for (int w : nv1v2 | nv2v3) {
        const int cnt = adjCount(g, w, {r.u1, r.u2, r.u3});
        if (cnt == 0 || cnt == 3) {
            att.anomaly(AnomalyCheck::NeighborCount12, {w, r.u1, r.u2, r.u3}, 0,
                        "CODOMINO:A2NV2-ucount");
            return false;
        }
        if (cnt == 1) singles.add(w);
    }

    if (!singles.empty()) {
        // exchange the two triangles and redo the C1/C2 argument there
        att.setCase(CaseId::CODOMINO_SWAP);
        const TriangleDecomposition sdec = aroundTriangle(g, {r.u1, r.u2, r.u3});
        const CoRoles sr{r.u1, r.u2, r.u3, r.v1, r.v2, r.v3};
        auto scOpt = classifyB2(g, sdec, sr, att, "CODOMINO_SWAP");
        if (!scOpt) return false;
        if ((*scOpt)[0].empty() && (*scOpt)[1].empty()) {
            att.anomaly(AnomalyCheck::SwapC1C2Empty, {r.u1, r.u2, r.u3, r.v1, r.v2, r.v3}, 0,
                        "CODOMINO_SWAP:C1C2-empty");
            return false;
        }
        return c1c2Assembly(att, sdec, *scOpt, "CODOMINO_SWAP");
    }

    // every A2-neighbor of v2 now sees exactly two of the u's
    auto firstOfType = [&](VertexSet side, int a, int b) {
        for (int w : side)
            if (g.adjacent(w, a) && g.adjacent(w, b)) return w;
        return -1;
    };

    int anchor = firstOfType(nv1v2, r.u1, r.u2);
    bool mirrored = false;
    if (anchor < 0) {
        anchor = firstOfType(nv2v3, r.u2, r.u3);
        mirrored = anchor >= 0;
    }
    const VertexSet b1ma0 = dec.b[0] - dec.a0;
    if (anchor >= 0) {
        att.setCase(CaseId::CODOMINO1);
        att.witness("codomino1-anchor", {anchor});
        if (!mirrored) {
            if (!att.checkEdgesAtMost(dec.b[2], 1, "CODOMINO1:B3-edges")) return false;
            if (!threePartOriented(g, att, b1ma0, dec.b[2], dec.a0, "CODOMINO1")) return false;
        } else {
            if (!att.checkEdgesAtMost(b1ma0, 1, "CODOMINO1:B1mA0-edges")) return false;
            if (!threePartOriented(g, att, dec.b[2], b1ma0, dec.a0, "CODOMINO1")) return false;
        }
        if (!att.addStable(dec.b[1], "CODOMINO1:B2-set")) return false;
        return addSplits(att, dec, "CODOMINO1");
    }

    if (x >= 0) {
        int anchor2 = -1;
        bool mirrored2 = false;
        for (int w : nv1v2)
            if (g.adjacent(w, r.u2) && g.adjacent(w, r.u3) && g.adjacent(w, x)) {
                anchor2 = w;
                break;
            }
        if (anchor2 < 0) {
            for (int w : nv2v3)
                if (g.adjacent(w, r.u1) && g.adjacent(w, r.u2) && g.adjacent(w, x)) {
                    anchor2 = w;
                    mirrored2 = true;
                    break;
                }
        }
        if (anchor2 >= 0) {
            att.setCase(CaseId::CODOMINO2);
            att.witness("codomino2-anchor", {anchor2});
            if (!mirrored2) {
                if (!att.checkEdgesAtMost(b1ma0, 1, "CODOMINO2:B1mA0-edges")) return false;
                if (!threePartOriented(g, att, b1ma0, dec.b[2], dec.a0, "CODOMINO2")) return false;
            } else {
                if (!att.checkEdgesAtMost(dec.b[2], 1, "CODOMINO2:B3-edges")) return false;
                if (!threePartOriented(g, att, dec.b[2], b1ma0, dec.a0, "CODOMINO2")) return false;
            }
            if (!att.addStable(dec.b[1], "CODOMINO2:B2-set")) return false;
            return addSplits(att, dec, "CODOMINO2");
        }
    }

    // split A2 around both triangles
    VertexSet d1, d2, d3, d4;
    const VertexSet d5 = g.neighborSet(r.v1) & g.neighborSet(r.v3) & dec.a2;
    for (int w : nv1v2) {
        const bool a1 = g.adjacent(w, r.u1), a2 = g.adjacent(w, r.u2), a3 = g.adjacent(w, r.u3);
        if (!a1 && a2 && a3) d1.add(w);
        else if (a1 && !a2 && a3) d2.add(w);
        else {
            att.anomaly(AnomalyCheck::DPartitionCover,
                        {w, r.v1, r.v2, r.v3, r.u1, r.u2, r.u3, x}, 0, "CODOMINO3:D-partition");
            return false;
        }
    }
    for (int w : nv2v3) {
        const bool a1 = g.adjacent(w, r.u1), a2 = g.adjacent(w, r.u2), a3 = g.adjacent(w, r.u3);
        if (a1 && a2 && !a3) d3.add(w);
        else if (a1 && !a2 && a3) d4.add(w);
        else {
            att.anomaly(AnomalyCheck::DPartitionCover,
                        {w, r.v1, r.v2, r.v3, r.u1, r.u2, r.u3, x}, 0, "CODOMINO3:D-partition");
            return false;
        }
    }

    const VertexSet b2rest = dec.b[1] - c[2]; // B2 minus the C3 vertex

    if (d1.empty() && d3.empty()) {
        att.setCase(CaseId::CODOMINO_FINAL);
        if (!att.addStable(d2 | d4, "CODOMINO_FINAL:A2NV2-stable")) return false;
        if (!att.addStable(dec.b[1], "CODOMINO_FINAL:B2-set")) return false;
        VertexSet left = dec.b[0];
        left.add(r.v2);
        left.add(r.v3);
        if (!att.addTwoColor(left, "CODOMINO_FINAL:B1v2v3")) return false;
        VertexSet right = dec.b[2];
        right.add(r.v1);
        if (!att.addTwoColor(right, "CODOMINO_FINAL:B3v1")) return false;
        return att.addStable(d5, "CODOMINO_FINAL:NV1V3-stable");
    }

    // first cross edge between the two inner splits, scanning d1 ascending
    std::optional<std::pair<int, int>> cross;
    for (int a : d1) {
        VertexSet hits = VertexSet::fromBits(g.row64(a)) & d3;
        if (!hits.empty()) {
            cross = {a, hits.first()};
            break;
        }
    }

    if (cross) {
        att.setCase(CaseId::CODOMINO3_CASE2);
        const auto [ca, cb] = *cross;
        VertexSet inner = dec.b[0] | dec.b[2];
        inner.remove(r.u1);
        inner.remove(r.u2);
        inner.remove(r.u3);
        const VertexSet na = g.neighborSet(ca);
        const VertexSet nb = g.neighborSet(cb);

        if (!att.addStable(inner - na, "CODOMINO3:I-mNu")) return false;
        if (!att.addStable((inner & na) - nb, "CODOMINO3:I-Nu-mNu2")) return false;
        VertexSet third = inner & na & nb;
        third.add(r.u2);
        if (!att.addStable(third, "CODOMINO3:I-NuNu2-u2")) return false;

        VertexSet s4 = d1;
        s4.add(r.u1);
        s4.add(r.v3);
        if (x >= 0) s4.add(x);
        if (!att.addStable(s4, "CODOMINO3:D1-u1-x-v3")) return false;
        if (!att.addStable(d2 | d4 | b2rest, "CODOMINO3:D2D4C4")) return false;
        VertexSet s6 = d3;
        s6.add(r.u3);
        s6.add(r.v1);
        if (!att.addStable(s6, "CODOMINO3:D3-u3-v1")) return false;
        VertexSet s7 = d5;
        s7.add(r.v2);
        return att.addStable(s7, "CODOMINO3:D5-v2");
    }

    att.setCase(CaseId::CODOMINO3_EMPTY);
    VertexSet s1 = d1 | d3;
    if (x >= 0) s1.add(x);
    if (!att.addStable(s1, "CODOMINO3:D1D3x")) return false;
    if (!att.addStable(d2 | d4 | b2rest, "CODOMINO3:D2D4C4")) return false;
    VertexSet left = dec.b[0];
    left.add(r.v2);
    left.add(r.v3);
    if (!att.addTwoColor(left, "CODOMINO3:B1v2v3")) return false;
    VertexSet right = dec.b[2];
    right.add(r.v1);
    if (!att.addTwoColor(right, "CODOMINO3:B3v1")) return false;
    return att.addStable(d5, "CODOMINO3:D5");
}

// -- X1 / X2 -------------------------------------------------------------------

bool xBody(const Graph& g, const Embedding& emb, XVariant variant, CaseAttempt& att) {
    const Pattern& p = patternByName(variant == XVariant::X1 ? "x1" : "x2");
    auto at = [&](const char* role) { return emb.map[std::size_t(p.roleIndex(role))]; };
    const int v1 = at("v1"), v2 = at("v2"), v3 = at("v3");
    att.witness(p.name, emb.map);
    const TriangleDecomposition dec = aroundTriangle(g, {v1, v2, v3});
    const VertexSet b1ma0 = dec.b[0] - dec.a0;

    if (variant == XVariant::X1) {
        att.setCase(CaseId::X1);
        const std::array<VertexSet, 3> parts{b1ma0, dec.b[1], dec.b[2]};
        std::vector<int> edged;
        for (int i = 0; i < 3; ++i)
            if (firstEdgeInside(g, parts[std::size_t(i)])) edged.push_back(i);
        if (edged.size() > 1) {
            auto e1 = *firstEdgeInside(g, parts[std::size_t(edged[0])]);
            auto e2 = *firstEdgeInside(g, parts[std::size_t(edged[1])]);
            att.anomaly(AnomalyCheck::TwoSetEdges, {e1.first, e1.second, e2.first, e2.second}, 0,
                        "X1:edged-exclusion");
            return false;
        }
        const int which = edged.empty() ? 0 : edged[0];
        // the edged part rides with A0 (a disjoint union of edges), the
        // other two are stable on their own
        if (!att.addTwoColor(parts[std::size_t(which)] | dec.a0, "X1:edged-with-A0")) return false;
        for (int i = 0; i < 3; ++i) {
            if (i == which) continue;
            if (!att.addStable(parts[std::size_t(i)], "X1:stable-part")) return false;
        }
        return addSplits(att, dec, "X1");
    }

    att.setCase(CaseId::X2);
    const int u1 = at("u1"), u2 = at("u2"), u3 = at("u3"), u = at("u");
    VertexSet d1, d2, d3, d4, d5, d6;
    VertexSet b2rest = dec.b[1];
    b2rest.remove(u);
    for (int y : b2rest) {
        if (!(g.adjacent(y, u3) && !g.adjacent(y, u2))) {
            att.anomaly(AnomalyCheck::X2TypeU3NotU2, {y, u2, u3}, 0, "X2:B2-type");
            return false;
        }
        (g.adjacent(y, u1) ? d1 : d2).add(y);
    }
    for (int y : b1ma0) {
        if (!(g.adjacent(y, u3) && !g.adjacent(y, u2))) {
            att.anomaly(AnomalyCheck::X2TypeU3NotU2, {y, u2, u3}, 0, "X2:B1mA0-type");
            return false;
        }
        (g.adjacent(y, u1) ? d4 : d3).add(y);
    }
    for (int y : dec.b[2]) {
        if (y == u3) {
            d5.add(y); // u3 itself sees u1 through the chord and joins D5
            continue;
        }
        if (g.adjacent(y, u2) || g.adjacent(y, u3)) {
            att.anomaly(AnomalyCheck::X2B3Type, {y, u2, u3}, 0, "X2:B3-type");
            return false;
        }
        (g.adjacent(y, u1) ? d5 : d6).add(y);
    }
    // the embedded u2 sits in A0 but is adjacent to u; it rides with D1/D4,
    // whose members were all type-checked to avoid u2
    VertexSet inner = d1 | d4;
    inner.add(u2);
    if (!att.addStable(inner, "X2:D1D4u2")) return false;
    if (!att.addStable(d2 | d3, "X2:D2D3")) return false;
    VertexSet loose = (dec.a0 | d6);
    loose.remove(u2);
    loose.add(u);
    if (!att.addStable(loose, "X2:A0uD6")) return false;
    if (!att.addStable(d5, "X2:D5")) return false;
    return addSplits(att, dec, "X2");
}

// -- co-twin-C5 ------------------------------------------------------------------

bool coTwinBody(const Graph& g, const Embedding& emb, CaseAttempt& att) {
    const Pattern& ctc = patternByName("cotwinc5");
    att.witness("cotwinc5", emb.map);

    if (auto y = containsInduced(g, patternByName("yfam"))) {
        att.setCase(CaseId::COTWINC5_Y);
        const Pattern& yp = patternByName("yfam");
        att.witness("yfam", y->map);
        auto at = [&](const char* role) { return y->map[std::size_t(yp.roleIndex(role))]; };
        const TriangleDecomposition dec = aroundTriangle(g, {at("v1"), at("v2"), at("u")});
        const VertexSet b1ma0 = dec.b[0] - dec.a0;

        if (!att.checkEdgesAtMost(dec.b[1], 1, "COTWINC5_Y:B2-edges")) return false;
        auto e1 = firstEdgeInside(g, b1ma0);
        auto e3 = firstEdgeInside(g, dec.b[2]);
        if (e1 && e3) {
            att.anomaly(AnomalyCheck::TwoSetEdges, {e1->first, e1->second, e3->first, e3->second},
                        0, "COTWINC5_Y:B1mA0-or-B3");
            return false;
        }
        const VertexSet single = e1 ? dec.b[2] : b1ma0;
        const VertexSet other = e1 ? b1ma0 : dec.b[2];
        if (!att.addStable(single, "COTWINC5_Y:edge-free-part")) return false;
        if (!threePartApply(g, att, dec.b[1], other, dec.a0, "COTWINC5_Y")) return false;
        return addSplits(att, dec, "COTWINC5_Y");
    }

    att.setCase(CaseId::COTWINC5_YFREE);
    auto at = [&](const char* role) { return emb.map[std::size_t(ctc.roleIndex(role))]; };
    const int v1 = at("v1"), v2 = at("v2"), v3 = at("v3");
    const int v4 = at("v4"), v5 = at("v5"), v6 = at("v6");

    VertexSet m = jointComplementSet(g, v1, v2);
    VertexSet base = m;
    base.add(v1);
    base.add(v2);
    if (!att.addTwoColor(base, "COTWINC5_YFREE:v1v2M")) return false;

    VertexSet nn = g.neighborSet(v1) | g.neighborSet(v2);
    for (int v : {v1, v2, v3, v5}) nn.remove(v);

    // hub edges in fixed priority order; the tail spots are chosen so that
    // v3 and v5 never share a group with one of their neighbors
    const std::array<std::pair<int, int>, 5> hubEdges{
        std::pair{v3, v4}, {v4, v5}, {v3, v6}, {v4, v6}, {v5, v6}};
    std::array<VertexSet, 5> groups{};
    for (int y : nn) {
        const int cnt = adjCount(g, y, {v3, v4, v5, v6});
        if (cnt == 0) {
            att.anomaly(AnomalyCheck::HubCover, {y, v3, v4, v5, v6}, 0,
                        "COTWINC5_YFREE:hub-cover");
            return false;
        }
        if (cnt == 1) {
            att.anomaly(AnomalyCheck::HubNot1, {y, v3, v4, v5, v6}, 0,
                        "COTWINC5_YFREE:D1-empty");
            return false;
        }
        int idx = -1;
        for (int i = 0; i < 5; ++i) {
            auto [a, b] = hubEdges[std::size_t(i)];
            if (g.adjacent(y, a) && g.adjacent(y, b)) {
                idx = i;
                break;
            }
        }
        if (idx < 0) {
            att.anomaly(AnomalyCheck::D2EdgeCover, {y, v3, v4, v5, v6}, 0,
                        "COTWINC5_YFREE:D2-edge-cover");
            return false;
        }
        groups[std::size_t(idx)].add(y);
    }
    groups[1].add(v3);
    groups[3].add(v5);
    for (int i = 0; i < 5; ++i)
        if (!att.addStable(groups[std::size_t(i)],
                           "COTWINC5_YFREE:group" + std::to_string(i + 1)))
            return false;
    return true;
}

// -- chi37 / co-A ----------------------------------------------------------------

bool chiCoABody(const Graph& g, const Embedding& emb, ChiVariant variant, CaseAttempt& att) {
    const Pattern& p = patternByName(variant == ChiVariant::Chi37 ? "chi37" : "coa");
    auto at = [&](const char* role) { return emb.map[std::size_t(p.roleIndex(role))]; };
    const int v1 = at("v1"), v2 = at("v2"), v3 = at("v3");
    att.witness(p.name, emb.map);
    const TriangleDecomposition dec = aroundTriangle(g, {v1, v2, v3});
    const VertexSet b1ma0 = dec.b[0] - dec.a0;

    if (variant == ChiVariant::Chi37) {
        att.setCase(CaseId::CHI37);
        if (!att.addStable(dec.b[1], "CHI37:B2-stable")) return false;
        auto e1 = firstEdgeInside(g, b1ma0);
        auto e3 = firstEdgeInside(g, dec.b[2]);
        if (e1 && e3) {
            att.anomaly(AnomalyCheck::TwoSetEdges, {e1->first, e1->second, e3->first, e3->second},
                        0, "CHI37:B1mA0-or-B3");
            return false;
        }
        if (!threePartOriented(g, att, b1ma0, dec.b[2], dec.a0, "CHI37")) return false;
        return addSplits(att, dec, "CHI37");
    }

    att.setCase(CaseId::COA);
    const int u1 = at("u1"), u3 = at("u3");
    for (int z : dec.b[1]) {
        if (!(g.adjacent(z, u1) && g.adjacent(z, u3))) {
            att.anomaly(AnomalyCheck::CompleteToPair, {z, u1, u3}, 0, "COA:B2-complete-u1u3");
            return false;
        }
    }
    VertexSet complete = dec.b[1];
    for (int y : b1ma0)
        if (g.adjacent(y, u1) && g.adjacent(y, u3)) complete.add(y);
    const VertexSet rest = b1ma0 - complete;
    if (auto e = firstEdgeInside(g, rest)) {
        att.anomaly(AnomalyCheck::CoaEdgeEndpoint, {e->first, e->second, u1, u3}, 0,
                    "COA:B1mA0-edge-endpoint");
        return false;
    }
    if (!att.addStable(complete, "COA:complete-u1u3")) return false;
    if (!att.addStable(rest, "COA:B1mA0-rest")) return false;
    if (!att.addTwoColor(dec.b[2] | dec.a0, "COA:B3A0-components")) return false;
    return addSplits(att, dec, "COA");
}

// -- theorem engines -------------------------------------------------------------

bool thm11Body(const Graph& g, int v1, int v2, int v3, CaseAttempt& att) {
    const FiveSetSplit five = fiveSetSplit(g, v1, v2, v3); // validates the configuration
    att.witness("p2up1-in-d1", {v1, v2, v3});
    VertexSet base = jointComplementSet(g, v1, v2);
    base.add(v1);
    base.add(v2);
    if (!att.addTwoColor(base, "THM11:v1v2M-components")) return false;
    static const char* names[5] = {"THM11:S1-stable", "THM11:S2-stable", "THM11:S3-stable",
                                   "THM11:S4-stable", "THM11:S5-stable"};
    for (int i = 0; i < 5; ++i)
        if (!att.addStable(five.sets[std::size_t(i)], names[i])) return false;
    return true;
}

bool thm13Body(const Graph& g, int v1, int v2, CaseAttempt& att) {
    att.witness("d2-nonadjacent-pair", {v1, v2});
    VertexSet side1 = g.neighborSet(v1) - g.neighborSet(v2);
    VertexSet side2 = g.neighborSet(v2) - g.neighborSet(v1);
    if (firstEdgeInside(g, side1)) {
        auto e2 = firstEdgeInside(g, side2);
        if (e2) {
            auto e1 = *firstEdgeInside(g, side1);
            att.anomaly(AnomalyCheck::TwoSetEdges, {e1.first, e1.second, e2->first, e2->second},
                        0, "THM13:one-side-edge-free");
            return false;
        }
        std::swap(v1, v2);
        std::swap(side1, side2);
    }

    const VertexSet common = g.neighborSet(v1) & g.neighborSet(v2);
    const auto nvEdge = firstEdgeInside(g, g.neighborSet(v1));
    if (isStableSet(g, common) && !nvEdge) {
        // neither written subcase applies when N(v1) is edge-free with a
        // stable common neighborhood; the residual exact path covers it
        att.setCase(CaseId::RESIDUAL_EXACT);
        return false;
    }
    if (isStableSet(g, common) && nvEdge) {
        att.setCase(CaseId::THM13_SMALL_OMEGA);
        if (!att.addStable(common, "THM13:NV1NV2-stable")) return false;
        if (!att.addStable(side1, "THM13:NV1mNV2-stable")) return false;
        const auto [a, b] = *nvEdge;
        const TriangleDecomposition dec = aroundTriangle(g, {v1, a, b});
        VertexSet left = dec.b[1] | dec.a0;
        left.add(v1);
        if (!att.addTwoColor(left, "THM13:B2A0v1-components")) return false;
        if (!att.addTwoColor(dec.b[2], "THM13:B3-components")) return false;
        return att.addStable(dec.a2Split[2], "THM13:NaNb-stable");
    }

    att.setCase(CaseId::THM13_OMEGA2);
    if (!att.addStable(side1, "THM13:NV1mNV2-stable")) return false;

    const VertexSet outside = VertexSet::range(g.n()) - g.neighborSet(v2);
    const auto tri = firstTriangleInside(g, outside);
    if (!tri) fail(Errc::Internal, "d2 vertex without a triangle outside its neighborhood");
    const auto [t1, t2, t3] = *tri;

    VertexSet singles[3], pairs[3]; // pairs[i] pairs t_{i+1} with t_{i+2} (mod), see below
    for (int y : g.neighborSet(v2)) {
        const bool a = g.adjacent(y, t1), b = g.adjacent(y, t2), c = g.adjacent(y, t3);
        const int cnt = (a ? 1 : 0) + (b ? 1 : 0) + (c ? 1 : 0);
        if (cnt == 0 || cnt == 3) {
            att.anomaly(AnomalyCheck::NeighborCount12, {y, t1, t2, t3}, 0, "THM13:E-cover");
            return false;
        }
        if (cnt == 1) {
            (a ? singles[0] : b ? singles[1] : singles[2]).add(y);
        } else {
            (!c ? pairs[0] : !a ? pairs[1] : pairs[2]).add(y); // {t1,t2}, {t2,t3}, {t3,t1}
        }
    }
    for (int i = 0; i < 3; ++i)
        if (!att.checkCardAtMost(singles[i], 1, "THM13:Ei-card")) return false;
    for (int i = 0; i < 3; ++i)
        if (!att.addStable(singles[i] | pairs[i], "THM13:Ei-Eii1-stable")) return false;

    VertexSet far = jointComplementSet(g, v1, v2);
    if (auto e = firstEdgeInside(g, far)) {
        const VertexSet nx1 = g.neighborSet(e->first);
        const VertexSet nx2 = g.neighborSet(e->second);
        VertexSet s5 = far - nx1;
        s5.add(v1);
        s5.add(v2);
        if (!att.addStable(s5, "THM13:A-mNx1")) return false;
        if (!att.addStable((far & nx1) - nx2, "THM13:A-Nx1-mNx2")) return false;
        return att.addStable(far & nx1 & nx2, "THM13:A-Nx1Nx2");
    }
    VertexSet s5 = far;
    s5.add(v1);
    s5.add(v2);
    return att.addStable(s5, "THM13:A-stable");
}

} // namespace

// -- public surface ---------------------------------------------------------------

const char* caseName(CaseId id) {
    switch (id) {
    case CaseId::SMALL_OMEGA: return "SMALL_OMEGA";
    case CaseId::K3P2_FALLBACK: return "K3P2_FALLBACK";
    case CaseId::THM11: return "THM11";
    case CaseId::CODOMINO_C1C2: return "CODOMINO_C1C2";
    case CaseId::CODOMINO_SWAP: return "CODOMINO_SWAP";
    case CaseId::CODOMINO1: return "CODOMINO1";
    case CaseId::CODOMINO2: return "CODOMINO2";
    case CaseId::CODOMINO3_CASE2: return "CODOMINO3_CASE2";
    case CaseId::CODOMINO3_EMPTY: return "CODOMINO3_EMPTY";
    case CaseId::CODOMINO_FINAL: return "CODOMINO_FINAL";
    case CaseId::X1: return "X1";
    case CaseId::X2: return "X2";
    case CaseId::COTWINC5_Y: return "COTWINC5_Y";
    case CaseId::COTWINC5_YFREE: return "COTWINC5_YFREE";
    case CaseId::CHI37: return "CHI37";
    case CaseId::COA: return "COA";
    case CaseId::THM13_SMALL_OMEGA: return "THM13_SMALL_OMEGA";
    case CaseId::THM13_OMEGA2: return "THM13_OMEGA2";
    case CaseId::RESIDUAL_EXACT: return "RESIDUAL_EXACT";
    }
    return "UNKNOWN";
}

const char* checkName(AnomalyCheck check) {
    switch (check) {
    case AnomalyCheck::StableSet: return "stable-set";
    case AnomalyCheck::ComponentsLe2: return "components-le-2";
    case AnomalyCheck::EdgesAtMost: return "edges-at-most";
    case AnomalyCheck::CardinalityAtMost: return "cardinality-at-most";
    case AnomalyCheck::OmegaAtMost: return "omega-at-most";
    case AnomalyCheck::ChiAtMostCap: return "chi-at-most-cap";
    case AnomalyCheck::NeighborCount12: return "neighbor-count-1-2";
    case AnomalyCheck::B2NeighborType: return "b2-neighbor-type";
    case AnomalyCheck::X2TypeU3NotU2: return "x2-type-u3-not-u2";
    case AnomalyCheck::X2B3Type: return "x2-b3-type";
    case AnomalyCheck::HubCover: return "hub-cover";
    case AnomalyCheck::HubNot1: return "hub-not-1";
    case AnomalyCheck::D2EdgeCover: return "d2-edge-cover";
    case AnomalyCheck::CoaEdgeEndpoint: return "coa-edge-endpoint";
    case AnomalyCheck::TwoSetEdges: return "two-set-edges";
    case AnomalyCheck::CompleteToPair: return "complete-to-pair";
    case AnomalyCheck::SwapC1C2Empty: return "swap-c1c2-empty";
    case AnomalyCheck::DPartitionCover: return "d-partition-cover";
    }
    return "unknown";
}

std::ostream& operator<<(std::ostream& os, CaseId id) { return os << caseName(id); }
std::ostream& operator<<(std::ostream& os, AnomalyCheck check) { return os << checkName(check); }

bool replayAnomaly(const Graph& g, const Anomaly& a) {
    auto setOf = [&](const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    };
    const auto& w = a.witness;
    switch (a.check) {
    case AnomalyCheck::StableSet:
        return !isStableSet(g, setOf(w));
    case AnomalyCheck::ComponentsLe2:
        return !componentsAtMostTwo(g, setOf(w));
    case AnomalyCheck::EdgesAtMost:
        return edgesInsideAtMost(g, setOf(w), a.bound) > a.bound;
    case AnomalyCheck::CardinalityAtMost:
        return int(w.size()) > a.bound;
    case AnomalyCheck::OmegaAtMost:
        return cliqueNumber(induced(g, setOf(w))).value > a.bound;
    case AnomalyCheck::ChiAtMostCap:
        return exactChromatic(g).value > a.bound;
    case AnomalyCheck::NeighborCount12: {
        const int c = adjCount(g, w[0], {w[1], w[2], w[3]});
        return c == 0 || c == 3;
    }
    case AnomalyCheck::B2NeighborType:
        return !codominoB2TypeOk(g.adjacent(w[0], w[1]), g.adjacent(w[0], w[2]),
                                 g.adjacent(w[0], w[3]));
    case AnomalyCheck::X2TypeU3NotU2:
        return !(g.adjacent(w[0], w[2]) && !g.adjacent(w[0], w[1]));
    case AnomalyCheck::X2B3Type:
        return g.adjacent(w[0], w[1]) || g.adjacent(w[0], w[2]);
    case AnomalyCheck::HubCover:
        return adjCount(g, w[0], {w[1], w[2], w[3], w[4]}) == 0;
    case AnomalyCheck::HubNot1:
        return adjCount(g, w[0], {w[1], w[2], w[3], w[4]}) == 1;
    case AnomalyCheck::D2EdgeCover: {
        for (std::size_t i = 1; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (g.adjacent(w[i], w[j]) && g.adjacent(w[0], w[i]) && g.adjacent(w[0], w[j]))
                    return false;
        return true;
    }
    case AnomalyCheck::CoaEdgeEndpoint:
        return g.adjacent(w[0], w[1]) && !(g.adjacent(w[0], w[2]) && g.adjacent(w[0], w[3])) &&
               !(g.adjacent(w[1], w[2]) && g.adjacent(w[1], w[3]));
    case AnomalyCheck::TwoSetEdges:
        return g.adjacent(w[0], w[1]) && g.adjacent(w[2], w[3]);
    case AnomalyCheck::CompleteToPair:
        return !(g.adjacent(w[0], w[1]) && g.adjacent(w[0], w[2]));
    case AnomalyCheck::SwapC1C2Empty: {
        // recompute C1'/C2' of the exchanged decomposition
        const TriangleDecomposition dec = aroundTriangle(g, {w[0], w[1], w[2]}, false);
        for (int x : dec.b[1]) {
            const bool a1 = g.adjacent(x, w[3]), a2 = g.adjacent(x, w[4]), a3 = g.adjacent(x, w[5]);
            if ((a1 && a2 && !a3) || (!a1 && a2 && a3)) return false;
        }
        return true;
    }
    case AnomalyCheck::DPartitionCover: {
        const int x = w[0];
        const int v1 = w[1], v2 = w[2], v3 = w[3];
        const int u1 = w[4], u2 = w[5], u3 = w[6];
        const bool b1 = g.adjacent(x, u1), b2 = g.adjacent(x, u2), b3 = g.adjacent(x, u3);
        if (g.adjacent(x, v1) && g.adjacent(x, v2) && !g.adjacent(x, v3))
            return !((!b1 && b2 && b3) || (b1 && !b2 && b3));
        if (!g.adjacent(x, v1) && g.adjacent(x, v2) && g.adjacent(x, v3))
            return !((b1 && b2 && !b3) || (b1 && !b2 && b3));
        return true; // not on either side: the partition claim cannot hold
    }
    }
    return false;
}

nlohmann::ordered_json traceToJson(const CaseTrace& t) {
    nlohmann::ordered_json j;
    j["caseId"] = caseName(t.caseId);
    j["stableSets"] = nlohmann::ordered_json::array();
    for (const auto& s : t.stableSets)
        j["stableSets"].push_back({{"vertices", s.vertices.toVector()}, {"claim", s.claim}});
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : t.witnesses)
        j["witnesses"].push_back({{"pattern", w.pattern}, {"vertices", w.vertices}});
    j["anomalies"] = nlohmann::ordered_json::array();
    for (const auto& a : t.anomalies)
        j["anomalies"].push_back({{"claimId", a.claimId},
                                  {"check", checkName(a.check)},
                                  {"witness", a.witness},
                                  {"bound", a.bound}});
    return j;
}

ClassViolationError::ClassViolationError(MembershipCertificate cert)
    : Error(Errc::ClassViolation, "graph contains an induced " + cert.violated),
      cert_(std::move(cert)) {}

ColorOutcome colorTheorem11(const Graph& g, int v1, int v2, int v3) {
    CaseAttempt att(g, CaseId::THM11);
    return att.finish(thm11Body(g, v1, v2, v3, att));
}

ColorOutcome colorCoDomino(const Graph& g, const Embedding& emb) {
    if (!embeddingValid(g, patternByName("codomino"), emb))
        fail(Errc::InvalidConfiguration, "embedding is not a codomino occurrence");
    CaseAttempt att(g, CaseId::CODOMINO_C1C2);
    return att.finish(coDominoBody(g, emb, att));
}

ColorOutcome colorX(const Graph& g, const Embedding& emb, XVariant variant) {
    const Pattern& p = patternByName(variant == XVariant::X1 ? "x1" : "x2");
    if (!embeddingValid(g, p, emb))
        fail(Errc::InvalidConfiguration, "embedding does not match the requested variant");
    CaseAttempt att(g, variant == XVariant::X1 ? CaseId::X1 : CaseId::X2);
    return att.finish(xBody(g, emb, variant, att));
}

ColorOutcome colorCoTwinC5(const Graph& g, const Embedding& emb) {
    if (!embeddingValid(g, patternByName("cotwinc5"), emb))
        fail(Errc::InvalidConfiguration, "embedding is not a co-twin-C5 occurrence");
    CaseAttempt att(g, CaseId::COTWINC5_YFREE);
    return att.finish(coTwinBody(g, emb, att));
}

ColorOutcome colorChi37CoA(const Graph& g, const Embedding& emb, ChiVariant variant) {
    const Pattern& p = patternByName(variant == ChiVariant::Chi37 ? "chi37" : "coa");
    if (!embeddingValid(g, p, emb))
        fail(Errc::InvalidConfiguration, "embedding does not match the requested variant");
    CaseAttempt att(g, variant == ChiVariant::Chi37 ? CaseId::CHI37 : CaseId::COA);
    return att.finish(chiCoABody(g, emb, variant, att));
}

ColorOutcome colorTheorem13(const Graph& g, int v1, int v2) {
    if (v1 < 0 || v1 >= g.n() || v2 < 0 || v2 >= g.n() || v1 == v2)
        fail(Errc::InvalidConfiguration, "need two distinct in-range vertices");
    if (g.adjacent(v1, v2))
        fail(Errc::InvalidConfiguration, "the two vertices must be nonadjacent");
    const D1D2Partition dd = d1d2(g);
    if (!dd.d2.contains(v1) || !dd.d2.contains(v2))
        fail(Errc::InvalidConfiguration, "both vertices must lie in d2");
    CaseAttempt att(g, CaseId::THM13_OMEGA2);
    return att.finish(thm13Body(g, v1, v2, att));
}

Coloring threePartColor(const Graph& g, VertexSet v1, VertexSet v2, VertexSet v3) {
    auto violated = [](const std::string& condition) {
        fail(Errc::HypothesisViolation, "three-subset hypothesis failed: " + condition);
    };
    if (!(v1 & v2).empty() || !(v1 & v3).empty() || !(v2 & v3).empty())
        violated("sets-overlap");
    if ((v1 | v2 | v3) != VertexSet::range(g.n())) violated("sets-dont-cover");
    if (v1.empty()) violated("V1-empty");
    if (v2.empty()) violated("V2-empty");
    if (v3.empty()) violated("V3-empty");
    // neighborhood condition on V3, as stated
    for (int v : v3) {
        for (int i = 0; i < 2; ++i) {
            const VertexSet vi = i == 0 ? v1 : v2;
            const VertexSet vo = i == 0 ? v2 : v1;
            const VertexSet inSide = g.neighborSet(v) & vi;
            if (inSide.empty()) continue;
            const VertexSet otherNbrs = g.neighborSet(v) & vo;
            VertexSet expected;
            for (int x : vi)
                if (!((g.row64(x) & otherNbrs.bits()) == otherNbrs.bits())) expected.add(x);
            if (inSide != expected) violated("V3-neighborhood");
        }
    }
    ThreePartOutcome res = threePartCore(g, v1, v2, v3, VertexSet::range(g.n()));
    if (!res.ok) violated(res.failure.condition);

    Coloring c;
    c.assignment.assign(std::size_t(g.n()), 0);
    int k = 0;
    for (const VertexSet& s : res.sets) {
        if (s.empty()) continue;
        ++k;
        for (int v : s) c.assignment[std::size_t(v)] = k;
    }
    c.k = k;
    return c;
}

ColorOutcome color(const Graph& g) {
    MembershipCertificate cert = isClassMember(g);
    if (!cert.member) throw ClassViolationError(std::move(cert));
    if (g.n() > 64) fail(Errc::UnsupportedSize, "coloring engine needs n <= 64");
    if (g.n() == 0) return exactSearch(g, CaseId::SMALL_OMEGA, 3, {}, {});

    if (cliqueNumber(g).value <= 2) return exactSearch(g, CaseId::SMALL_OMEGA, 3, {}, {});

    if (auto e = containsInduced(g, patternByName("k3up2"))) {
        std::vector<WitnessRecord> wits{{"k3up2", e->map}};
        return exactSearch(g, CaseId::K3P2_FALLBACK, 6, std::move(wits), {});
    }

    const D1D2Partition dd = d1d2(g);
    {
        const Graph d1g = induced(g, dd.d1);
        if (auto e = containsInduced(d1g, patternP2uP1())) {
            const std::vector<int> verts = dd.d1.toVector();
            return colorTheorem11(g, verts[std::size_t(e->map[0])],
                                  verts[std::size_t(e->map[1])],
                                  verts[std::size_t(e->map[2])]);
        }
    }

    if (auto e = containsInduced(g, patternByName("codomino"))) return colorCoDomino(g, *e);
    if (auto e = containsInduced(g, patternByName("x1"))) return colorX(g, *e, XVariant::X1);
    if (auto e = containsInduced(g, patternByName("x2"))) return colorX(g, *e, XVariant::X2);
    if (auto e = containsInduced(g, patternByName("cotwinc5"))) return colorCoTwinC5(g, *e);
    if (auto e = containsInduced(g, patternByName("chi37")))
        return colorChi37CoA(g, *e, ChiVariant::Chi37);
    if (auto e = containsInduced(g, patternByName("coa")))
        return colorChi37CoA(g, *e, ChiVariant::CoA);

    if (auto pair = firstNonadjacentPairInside(g, dd.d2))
        return colorTheorem13(g, pair->first, pair->second);

    return exactSearch(g, CaseId::RESIDUAL_EXACT, 7, {}, {});
}

} // namespace chibound
