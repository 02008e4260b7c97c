#include "knotwork/builder.hpp"

#include <stdexcept>

namespace knotwork {

int DiagramBuilder::wire() {
    int id = static_cast<int>(parent_.size());
    parent_.push_back(id);
    uses_.push_back(0);
    closed_.push_back(false);
    return id;
}

int DiagramBuilder::find(int w) const {
    if (w < 0 || w >= static_cast<int>(parent_.size())) throw std::out_of_range("unknown wire");
    while (parent_[w] != w) {
        parent_[w] = parent_[parent_[w]];
        w = parent_[w];
    }
    return w;
}

void DiagramBuilder::merge(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent_[rb] = ra;
    uses_[ra] += uses_[rb];
}

void DiagramBuilder::crossing(int underIn, int east, int underOut, int west) {
    Crossing c;
    c.id = static_cast<int>(crossings_.size()) + 1;
    c.arcs = {underIn, east, underOut, west};
    for (int w : c.arcs) {
        int r = find(w);
        if (closed_[r]) throw std::logic_error("wire already closed");
        if (++uses_[r] > 2) throw std::logic_error("wire used more than twice");
    }
    crossings_.push_back(c);
}

void DiagramBuilder::splice(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) {
        closeLoop(a);
        return;
    }
    if (closed_[ra] || closed_[rb]) throw std::logic_error("splicing a closed wire");
    if (uses_[ra] + uses_[rb] > 2) throw std::logic_error("splice would overfill arc");
    merge(ra, rb);
}

void DiagramBuilder::closeLoop(int w) {
    int r = find(w);
    if (closed_[r]) throw std::logic_error("wire already closed");
    if (uses_[r] != 0) throw std::logic_error("closing a wire that touches crossings");
    closed_[r] = true;
    ++extraLoops_;
}

DiagramBuilder::Result DiagramBuilder::build() const {
    // Assign dense arc labels per wire class.
    std::map<int, int> labelOfRep;
    int next = 1;
    std::vector<Crossing> cs = crossings_;
    for (auto& c : cs)
        for (auto& a : c.arcs) {
            int r = find(a);
            auto it = labelOfRep.find(r);
            if (it == labelOfRep.end()) {
                labelOfRep[r] = next;
                a = next++;
            } else {
                a = it->second;
            }
        }
    for (int w = 0; w < static_cast<int>(parent_.size()); ++w) {
        int r = find(w);
        if (closed_[r]) continue;
        if (uses_[r] != 2 && uses_[r] != 0)
            throw std::logic_error("wire " + std::to_string(w) + " left dangling");
        if (uses_[r] == 0)
            throw std::logic_error("wire " + std::to_string(w) + " unused and not closed");
    }
    Result res;
    res.diagram = PlanarDiagram(std::move(cs), extraLoops_);
    for (int w = 0; w < static_cast<int>(parent_.size()); ++w) {
        auto it = labelOfRep.find(find(w));
        if (it != labelOfRep.end()) res.arcOfWire[w] = it->second;
    }
    return res;
}

void crossingHoriz(DiagramBuilder& b, int topL, int botL, int topR, int botR, bool bottomOver) {
    if (bottomOver)
        b.crossing(topL, botL, botR, topR);
    else
        b.crossing(botL, botR, topR, topL);
}

void crossingVert(DiagramBuilder& b, int topL, int topR, int botL, int botR, bool leftOver) {
    if (leftOver)
        b.crossing(topR, topL, botL, botR);
    else
        b.crossing(topL, botL, botR, topR);
}

}  // namespace knotwork
