#ifndef KNOTWORK_BUILDER_HPP
#define KNOTWORK_BUILDER_HPP

#include <map>
#include <vector>

#include "knotwork/diagram.hpp"

namespace knotwork {

// Incremental diagram assembly.  A wire is a future arc; it must end up with
// exactly two crossing-slot uses, possibly after splicing wires together.
class DiagramBuilder {
public:
    int wire();

    // Slots counterclockwise from the incoming under-strand.
    void crossing(int underIn, int east, int underOut, int west);

    // Join the dangling ends of two distinct open wires into one arc.
    void splice(int a, int b);

    // Close a wire onto itself; a wire with no crossings becomes a free loop.
    void closeLoop(int w);

    void addFreeLoop() { ++extraLoops_; }

    struct Result {
        PlanarDiagram diagram;
        std::map<int, int> arcOfWire;  // original wire id -> final arc label
    };
    Result build() const;

private:
    int find(int w) const;
    void merge(int a, int b);

    mutable std::vector<int> parent_;
    std::vector<int> uses_;          // per representative, slot uses
    std::vector<bool> closed_;       // per representative
    std::vector<Crossing> crossings_;
    int extraLoops_ = 0;
};

// Two horizontal strands crossing once; inputs on the left, outputs on the
// right, top-left pairs with bottom-right.
void crossingHoriz(DiagramBuilder& b, int topL, int botL, int topR, int botR, bool bottomOver);

// Two vertical strands crossing once; inputs on top, outputs on the bottom.
void crossingVert(DiagramBuilder& b, int topL, int topR, int botL, int botR, bool leftOver);

}  // namespace knotwork

#endif
