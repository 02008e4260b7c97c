#ifndef KNOTWORK_TEST_HELPERS_HPP
#define KNOTWORK_TEST_HELPERS_HPP

#include "knotwork/builder.hpp"
#include "knotwork/diagram.hpp"

namespace knotwork::testing {

// Trace closure of the 2-braid with k like crossings.  bottomOver picks the
// handedness; with both strands oriented along the braid, bottomOver gives
// negative crossings (k = 3 is a left trefoil diagram).
inline PlanarDiagram twoBraidClosure(int k, bool bottomOver = true) {
    DiagramBuilder b;
    if (k <= 0) {
        int t = b.wire(), bo = b.wire();
        b.closeLoop(t);
        b.closeLoop(bo);
        return b.build().diagram;
    }
    std::vector<int> top(k + 1), bot(k + 1);
    for (int i = 0; i <= k; ++i) {
        top[i] = b.wire();
        bot[i] = b.wire();
    }
    for (int i = 0; i < k; ++i) crossingHoriz(b, top[i], bot[i], top[i + 1], bot[i + 1], bottomOver);
    b.splice(top[k], top[0]);
    b.splice(bot[k], bot[0]);
    return b.build().diagram;
}

// Standard 3-crossing trefoil PD code.
inline PlanarDiagram trefoil() {
    std::vector<Crossing> cs = {
        {1, {1, 4, 2, 5}},
        {2, {3, 6, 4, 1}},
        {3, {5, 2, 6, 3}},
    };
    return PlanarDiagram(cs, 0);
}

inline PlanarDiagram positiveKink() {
    std::vector<Crossing> cs = {{1, {1, 1, 2, 2}}};
    return PlanarDiagram(cs, 0);
}

inline PlanarDiagram negativeKink() {
    std::vector<Crossing> cs = {{1, {1, 2, 2, 1}}};
    return PlanarDiagram(cs, 0);
}

inline PlanarDiagram unknotLoop() { return PlanarDiagram({}, 1); }

}  // namespace knotwork::testing

#endif
