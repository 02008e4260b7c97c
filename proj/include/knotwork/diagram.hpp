#ifndef KNOTWORK_DIAGRAM_HPP
#define KNOTWORK_DIAGRAM_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace knotwork {

// One crossing of a planar diagram.  arcs lists the four incident arc labels
// counterclockwise starting at the incoming under-strand, so the under-strand
// runs arcs[0] -> arcs[2] and the over-strand joins arcs[1] and arcs[3].
struct Crossing {
    int id = 0;
    std::array<int, 4> arcs{};
};

struct ArcEnd {
    int crossing = -1;  // index into the crossing vector
    int slot = -1;      // 0..3
    bool operator==(const ArcEnd& o) const { return crossing == o.crossing && slot == o.slot; }
};

// Per-arc polylines plus template annotations, carried only by
// template-built diagrams and dropped by any rewriting operation.
struct DiagramGeometry {
    std::map<int, std::vector<std::array<double, 2>>> arcPaths;
    std::map<int, std::array<double, 2>> crossingPos;  // keyed by crossing id
    std::vector<double> meridianX;
    std::vector<std::array<double, 4>> seamSegments;  // x0,y0,x1,y1
    std::vector<std::array<double, 2>> bandCorePath;
    struct BoxLabel {
        std::string text;
        double x = 0, y = 0;
    };
    std::vector<BoxLabel> boxLabels;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

class PlanarDiagram {
public:
    PlanarDiagram() = default;
    PlanarDiagram(std::vector<Crossing> crossings, int freeLoops)
        : crossings_(std::move(crossings)), freeLoops_(freeLoops) {}

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossingCount() const { return static_cast<int>(crossings_.size()); }
    int freeLoops() const { return freeLoops_; }
    int arcCount() const;

    const std::shared_ptr<const DiagramGeometry>& geometry() const { return geometry_; }
    void setGeometry(std::shared_ptr<const DiagramGeometry> g) { geometry_ = std::move(g); }

private:
    std::vector<Crossing> crossings_;
    int freeLoops_ = 0;
    std::shared_ptr<const DiagramGeometry> geometry_;
};

// Both ends of every arc label, in deterministic (crossing, slot) order.
using ArcIndex = std::map<int, std::vector<ArcEnd>>;
ArcIndex buildArcIndex(const PlanarDiagram& d);

ValidationReport validateDiagram(const PlanarDiagram& d);

// A strand pass enters a crossing at `into` along `arc`.
struct StrandPass {
    int arc = 0;
    ArcEnd into;
};

struct Components {
    std::vector<std::vector<StrandPass>> strands;  // crossing-traversing components
    std::map<int, int> componentOfArc;
    int freeLoops = 0;
    int count() const { return static_cast<int>(strands.size()) + freeLoops; }
};

Components traverseComponents(const PlanarDiagram& d);
int countComponents(const PlanarDiagram& d);

// Direction per arc: +1 means the arc runs from its first indexed end to its
// second; derived from component traversal plus per-component flips.
struct Orientation {
    std::map<int, int> arcDir;
};

Orientation defaultOrientation(const PlanarDiagram& d);
Orientation orientWithFlips(const PlanarDiagram& d, const std::vector<bool>& flip);

// +1 or -1; requires the orientation to cover the crossing's arcs.
int crossingSign(const PlanarDiagram& d, const Orientation& o, int crossingIdx);
int writhe(const PlanarDiagram& d, const Orientation& o);
int writhe(const PlanarDiagram& d);  // default orientation

PlanarDiagram mirrored(const PlanarDiagram& d);

// Face of the rotation system: corners (crossing, k) spanning slots k..k+1.
struct FaceCorner {
    int crossing = 0;
    int corner = 0;
    bool operator==(const FaceCorner& o) const { return crossing == o.crossing && corner == o.corner; }
};
std::vector<std::vector<FaceCorner>> traceFaces(const PlanarDiagram& d);

bool connected(const PlanarDiagram& d);
std::vector<PlanarDiagram> splitDiagram(const PlanarDiagram& d);

// Relabel arcs densely as 1..n in traversal order; drops geometry.
PlanarDiagram relabeledDense(const PlanarDiagram& d);

// Exact canonical form (minimum over traversal starts) and a cheaper
// deterministic key for search memoization.
std::string canonicalString(const PlanarDiagram& d);
std::string fastCanonicalKey(const PlanarDiagram& d);
bool equalUpToRelabeling(const PlanarDiagram& a, const PlanarDiagram& b);

}  // namespace knotwork

#endif
