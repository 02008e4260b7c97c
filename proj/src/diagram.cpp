#include "knotwork/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

namespace knotwork {

int PlanarDiagram::arcCount() const {
    std::set<int> labels;
    for (const auto& c : crossings_)
        for (int a : c.arcs) labels.insert(a);
    return static_cast<int>(labels.size());
}

ArcIndex buildArcIndex(const PlanarDiagram& d) {
    ArcIndex idx;
    const auto& cs = d.crossings();
    for (int ci = 0; ci < static_cast<int>(cs.size()); ++ci)
        for (int s = 0; s < 4; ++s) idx[cs[ci].arcs[s]].push_back({ci, s});
    return idx;
}

ValidationReport validateDiagram(const PlanarDiagram& d) {
    ValidationReport rep;
    if (d.freeLoops() < 0) rep.violations.push_back("negative free loop count");
    std::set<int> ids;
    for (const auto& c : d.crossings()) {
        if (!ids.insert(c.id).second)
            rep.violations.push_back("duplicate crossing id " + std::to_string(c.id));
        for (int a : c.arcs)
            if (a <= 0)
                rep.violations.push_back("nonpositive arc label " + std::to_string(a) +
                                         " at crossing " + std::to_string(c.id));
    }
    ArcIndex idx = buildArcIndex(d);
    for (const auto& [arc, ends] : idx) {
        if (ends.size() != 2)
            rep.violations.push_back("arc multiplicity: arc " + std::to_string(arc) +
                                     " appears " + std::to_string(ends.size()) + " times");
    }
    if (!rep.valid()) return rep;

    // Closed traversal must cover every arc exactly once per direction.
    try {
        Components comps = traverseComponents(d);
        std::size_t covered = 0;
        for (const auto& s : comps.strands) covered += s.size();
        if (covered != idx.size())
            rep.violations.push_back("component traversal does not cover all arcs");
    } catch (const std::exception& e) {
        rep.violations.push_back(std::string("component traversal failed: ") + e.what());
    }
    return rep;
}

namespace {

void requireTwoEnds(const ArcIndex& idx) {
    for (const auto& [arc, ends] : idx)
        if (ends.size() != 2)
            throw std::invalid_argument("invalid diagram: arc " + std::to_string(arc) +
                                        " has multiplicity " + std::to_string(ends.size()));
}

// Walk out of a crossing entered at `into` along `arc`: pass through to the
// opposite slot and follow that arc to its far end.
StrandPass nextPass(const PlanarDiagram& d, const ArcIndex& idx, const StrandPass& cur) {
    const Crossing& c = d.crossings()[cur.into.crossing];
    int outSlot = (cur.into.slot + 2) % 4;
    int outArc = c.arcs[outSlot];
    const auto& ends = idx.at(outArc);
    ArcEnd here{cur.into.crossing, outSlot};
    ArcEnd far = (ends[0] == here) ? ends[1] : ends[0];
    return {outArc, far};
}

}  // namespace

Components traverseComponents(const PlanarDiagram& d) {
    ArcIndex idx = buildArcIndex(d);
    requireTwoEnds(idx);
    Components out;
    out.freeLoops = d.freeLoops();
    std::set<int> visited;
    for (const auto& [arc, ends] : idx) {
        if (visited.count(arc)) continue;
        std::vector<StrandPass> strand;
        StrandPass start{arc, ends[1]};  // arc runs end0 -> end1 by default
        StrandPass cur = start;
        do {
            visited.insert(cur.arc);
            out.componentOfArc[cur.arc] = static_cast<int>(out.strands.size());
            strand.push_back(cur);
            cur = nextPass(d, idx, cur);
        } while (!(cur.arc == start.arc && cur.into == start.into));
        out.strands.push_back(std::move(strand));
    }
    return out;
}

int countComponents(const PlanarDiagram& d) {
    auto rep = validateDiagram(d);
    if (!rep.valid()) throw std::invalid_argument("invalid diagram: " + rep.violations.front());
    return traverseComponents(d).count();
}

Orientation orientWithFlips(const PlanarDiagram& d, const std::vector<bool>& flip) {
    ArcIndex idx = buildArcIndex(d);
    Components comps = traverseComponents(d);
    Orientation o;
    for (std::size_t k = 0; k < comps.strands.size(); ++k) {
        bool rev = k < flip.size() && flip[k];
        for (const auto& pass : comps.strands[k]) {
            const auto& ends = idx.at(pass.arc);
            // Default traversal enters at ends[1], i.e. the arc runs 0 -> 1.
            int dir = (pass.into == ends[1]) ? 1 : -1;
            o.arcDir[pass.arc] = rev ? -dir : dir;
        }
    }
    return o;
}

Orientation defaultOrientation(const PlanarDiagram& d) { return orientWithFlips(d, {}); }

namespace {

// True when the oriented arc points into the given end.
bool pointsInto(const ArcIndex& idx, const Orientation& o, int arc, const ArcEnd& end) {
    const auto& ends = idx.at(arc);
    int dir = o.arcDir.at(arc);
    if (end == ends[1]) return dir == 1;
    if (end == ends[0]) return dir == -1;
    throw std::logic_error("arc end mismatch");
}

}  // namespace

int crossingSign(const PlanarDiagram& d, const Orientation& o, int crossingIdx) {
    ArcIndex idx = buildArcIndex(d);
    const Crossing& c = d.crossings()[crossingIdx];
    bool underIn0 = pointsInto(idx, o, c.arcs[0], {crossingIdx, 0});
    bool overIn3 = pointsInto(idx, o, c.arcs[3], {crossingIdx, 3});
    // Slots sit at S,E,N,W; under runs S->N when entering slot 0.
    int ux = 0, uy = underIn0 ? 1 : -1;
    int ox = overIn3 ? 1 : -1, oy = 0;
    return ox * uy - oy * ux;
}

int writhe(const PlanarDiagram& d, const Orientation& o) {
    ArcIndex idx = buildArcIndex(d);
    int w = 0;
    for (int ci = 0; ci < d.crossingCount(); ++ci) {
        const Crossing& c = d.crossings()[ci];
        bool underIn0 = pointsInto(idx, o, c.arcs[0], {ci, 0});
        bool overIn3 = pointsInto(idx, o, c.arcs[3], {ci, 3});
        w += (underIn0 == overIn3) ? 1 : -1;
    }
    return w;
}

int writhe(const PlanarDiagram& d) { return writhe(d, defaultOrientation(d)); }

PlanarDiagram mirrored(const PlanarDiagram& d) {
    std::vector<Crossing> cs = d.crossings();
    for (auto& c : cs) c.arcs = {c.arcs[1], c.arcs[2], c.arcs[3], c.arcs[0]};
    return PlanarDiagram(std::move(cs), d.freeLoops());
}

std::vector<std::vector<FaceCorner>> traceFaces(const PlanarDiagram& d) {
    ArcIndex idx = buildArcIndex(d);
    requireTwoEnds(idx);
    // A dart is identified by the end it points into.
    std::set<std::pair<int, int>> seen;  // (crossing, slot) of consumed incoming darts
    std::vector<std::vector<FaceCorner>> faces;
    for (int ci = 0; ci < d.crossingCount(); ++ci) {
        for (int s = 0; s < 4; ++s) {
            if (seen.count({ci, s})) continue;
            std::vector<FaceCorner> face;
            int c = ci, slot = s;
            do {
                seen.insert({c, slot});
                int outSlot = (slot + 3) % 4;
                face.push_back({c, outSlot});
                int arc = d.crossings()[c].arcs[outSlot];
                const auto& ends = idx.at(arc);
                ArcEnd here{c, outSlot};
                ArcEnd far = (ends[0] == here) ? ends[1] : ends[0];
                c = far.crossing;
                slot = far.slot;
            } while (!seen.count({c, slot}));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

bool connected(const PlanarDiagram& d) {
    if (d.crossingCount() == 0) return d.freeLoops() <= 1;
    if (d.freeLoops() > 0) return false;
    ArcIndex idx = buildArcIndex(d);
    requireTwoEnds(idx);
    std::vector<bool> seen(d.crossingCount(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
            const auto& ends = idx.at(d.crossings()[c].arcs[s]);
            for (const auto& e : ends) {
                if (!seen[e.crossing]) {
                    seen[e.crossing] = true;
                    ++reached;
                    stack.push_back(e.crossing);
                }
            }
        }
    }
    return reached == d.crossingCount();
}

std::vector<PlanarDiagram> splitDiagram(const PlanarDiagram& d) {
    std::vector<PlanarDiagram> parts;
    ArcIndex idx = buildArcIndex(d);
    requireTwoEnds(idx);
    std::vector<int> part(d.crossingCount(), -1);
    int nparts = 0;
    for (int start = 0; start < d.crossingCount(); ++start) {
        if (part[start] >= 0) continue;
        int id = nparts++;
        std::vector<int> stack{start};
        part[start] = id;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s)
                for (const auto& e : idx.at(d.crossings()[c].arcs[s]))
                    if (part[e.crossing] < 0) {
                        part[e.crossing] = id;
                        stack.push_back(e.crossing);
                    }
        }
    }
    for (int p = 0; p < nparts; ++p) {
        std::vector<Crossing> cs;
        for (int ci = 0; ci < d.crossingCount(); ++ci)
            if (part[ci] == p) cs.push_back(d.crossings()[ci]);
        parts.emplace_back(std::move(cs), 0);
    }
    for (int k = 0; k < d.freeLoops(); ++k) parts.emplace_back(std::vector<Crossing>{}, 1);
    return parts;
}

namespace {

struct Relabeling {
    std::map<int, int> map;
    int next = 1;
    int get(int arc) {
        auto it = map.find(arc);
        if (it != map.end()) return it->second;
        map[arc] = next;
        return next++;
    }
};

std::string serializeWith(const PlanarDiagram& d, Relabeling& rl) {
    std::vector<std::array<int, 4>> tuples;
    for (const auto& c : d.crossings()) {
        std::array<int, 4> t{rl.get(c.arcs[0]), rl.get(c.arcs[1]), rl.get(c.arcs[2]),
                             rl.get(c.arcs[3])};
        std::array<int, 4> rot{t[2], t[3], t[0], t[1]};
        tuples.push_back(std::min(t, rot));
    }
    std::sort(tuples.begin(), tuples.end());
    std::ostringstream out;
    for (const auto& t : tuples) out << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ';';
    out << "L" << d.freeLoops();
    return out.str();
}

// Label arcs by traversal order starting from the given pass, continuing
// through remaining components in the order of their smallest assigned label
// candidates; used by the exact canonical form.
void labelFromStart(const PlanarDiagram& d, const ArcIndex& idx, const StrandPass& start,
                    Relabeling& rl, std::set<int>& visited) {
    StrandPass cur = start;
    do {
        visited.insert(cur.arc);
        rl.get(cur.arc);
        cur = nextPass(d, idx, cur);
    } while (!(cur.arc == start.arc && cur.into == start.into));
}

std::string bestFromSuffix(const PlanarDiagram& d, const ArcIndex& idx, Relabeling rl,
                           std::set<int> visited) {
    // Find any unvisited arc; if none, serialize.
    int pending = -1;
    for (const auto& [arc, ends] : idx)
        if (!visited.count(arc)) {
            pending = arc;
            break;
        }
    if (pending < 0) return serializeWith(d, rl);

    // Branch over every dart of the component containing an unvisited arc.
    std::string best;
    for (const auto& [arc, ends] : idx) {
        if (visited.count(arc)) continue;
        for (int e = 0; e < 2; ++e) {
            Relabeling rl2 = rl;
            std::set<int> vis2 = visited;
            labelFromStart(d, idx, {arc, ends[e]}, rl2, vis2);
            std::string s = bestFromSuffix(d, idx, std::move(rl2), std::move(vis2));
            if (best.empty() || s < best) best = std::move(s);
        }
    }
    return best;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

std::string canonicalString(const PlanarDiagram& d) {
    ArcIndex idx = buildArcIndex(d);
    requireTwoEnds(idx);
    if (idx.empty()) return "L" + std::to_string(d.freeLoops());
    Relabeling rl;
    std::set<int> visited;
    return bestFromSuffix(d, idx, rl, visited);
}

std::string fastCanonicalKey(const PlanarDiagram& d) {
    ArcIndex idx = buildArcIndex(d);
    requireTwoEnds(idx);
    const int n = d.crossingCount();
    if (n == 0) return "L" + std::to_string(d.freeLoops());

    // Short color refinement to pick a stable traversal start.
    std::vector<std::uint64_t> color(n, 1);
    for (int round = 0; round < 3; ++round) {
        std::vector<std::uint64_t> next(n);
        for (int ci = 0; ci < n; ++ci) {
            std::array<std::uint64_t, 4> feat{};
            for (int s = 0; s < 4; ++s) {
                const auto& ends = idx.at(d.crossings()[ci].arcs[s]);
                ArcEnd here{ci, s};
                ArcEnd far = (ends[0] == here) ? ends[1] : ends[0];
                feat[s] = mix(color[far.crossing], static_cast<std::uint64_t>(far.slot) * 7u + s);
            }
            std::array<std::uint64_t, 4> rot{feat[2], feat[3], feat[0], feat[1]};
            const auto& f = std::min(feat, rot);
            std::uint64_t h = color[ci];
            for (auto v : f) h = mix(h, v);
            next[ci] = h;
        }
        color = std::move(next);
    }
    int bestC = 0;
    for (int ci = 1; ci < n; ++ci)
        if (color[ci] < color[bestC]) bestC = ci;

    Relabeling rl;
    std::set<int> visited;
    // Start on the arc entering the chosen crossing's under-in slot.
    int arc0 = d.crossings()[bestC].arcs[0];
    labelFromStart(d, idx, {arc0, {bestC, 0}}, rl, visited);
    for (const auto& [arc, ends] : idx)
        if (!visited.count(arc)) labelFromStart(d, idx, {arc, ends[1]}, rl, visited);
    return serializeWith(d, rl);
}

bool equalUpToRelabeling(const PlanarDiagram& a, const PlanarDiagram& b) {
    if (a.crossingCount() != b.crossingCount() || a.freeLoops() != b.freeLoops()) return false;
    return canonicalString(a) == canonicalString(b);
}

PlanarDiagram relabeledDense(const PlanarDiagram& d) {
    ArcIndex idx = buildArcIndex(d);
    requireTwoEnds(idx);
    Relabeling rl;
    std::set<int> visited;
    for (const auto& [arc, ends] : idx)
        if (!visited.count(arc)) labelFromStart(d, idx, {arc, ends[1]}, rl, visited);
    std::vector<Crossing> cs = d.crossings();
    int nextId = 1;
    for (auto& c : cs) {
        c.id = nextId++;
        for (auto& a : c.arcs) a = rl.get(a);
    }
    return PlanarDiagram(std::move(cs), d.freeLoops());
}

}  // namespace knotwork
