#include "knotwork/pd_io.hpp"

#include <cctype>
#include <sstream>

namespace knotwork {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skipWs() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool atEnd() {
        skipWs();
        return pos >= text.size();
    }
    char peek() {
        skipWs();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        skipWs();
        if (pos >= text.size() || text[pos] != c)
            throw PdParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    bool consume(char c) {
        skipWs();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool consumeWord(const std::string& w) {
        skipWs();
        if (text.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    long parseInt() {
        skipWs();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw PdParseError("expected integer", start);
        return std::stol(text.substr(start, pos - start));
    }
};

}  // namespace

PlanarDiagram parsePD(const std::string& text) {
    Cursor c{text};
    if (!c.consumeWord("PD")) throw PdParseError("expected 'PD'", c.pos);
    c.expect('[');
    std::vector<Crossing> crossings;
    int loops = 0;
    bool expectCrossing = c.peek() == 'X';
    while (expectCrossing) {
        std::size_t xpos = c.pos;
        if (!c.consumeWord("X")) throw PdParseError("expected 'X'", c.pos);
        c.expect('(');
        Crossing cr;
        cr.id = static_cast<int>(crossings.size()) + 1;
        for (int i = 0; i < 4; ++i) {
            long v = c.parseInt();
            if (v <= 0) throw PdParseError("arc labels must be positive", xpos);
            cr.arcs[i] = static_cast<int>(v);
            if (i < 3) c.expect(',');
        }
        std::size_t before = c.pos;
        if (c.consume(',')) {
            // A fifth entry inside the tuple is a format violation.
            c.pos = before;
            throw PdParseError("crossing must list exactly 4 arcs", before);
        }
        c.expect(')');
        crossings.push_back(cr);
        expectCrossing = c.consume(',');
    }
    if (c.consume(';')) {
        if (!c.consumeWord("loops")) throw PdParseError("expected 'loops'", c.pos);
        c.expect('=');
        long v = c.parseInt();
        if (v < 0) throw PdParseError("loops must be nonnegative", c.pos);
        loops = static_cast<int>(v);
    }
    c.expect(']');
    if (!c.atEnd()) throw PdParseError("trailing input", c.pos);

    PlanarDiagram d(std::move(crossings), loops);
    auto rep = validateDiagram(d);
    if (!rep.valid()) throw PdParseError(rep.violations.front(), text.size());
    return d;
}

std::string serializePD(const PlanarDiagram& d) {
    std::ostringstream out;
    out << "PD[";
    bool first = true;
    for (const auto& c : d.crossings()) {
        if (!first) out << ", ";
        first = false;
        out << "X(" << c.arcs[0] << "," << c.arcs[1] << "," << c.arcs[2] << "," << c.arcs[3] << ")";
    }
    if (d.freeLoops() > 0) out << "; loops=" << d.freeLoops();
    out << "]";
    return out.str();
}

std::string gaussCode(const PlanarDiagram& d) {
    Components comps = traverseComponents(d);
    Orientation o = defaultOrientation(d);
    std::ostringstream out;
    bool firstComp = true;
    for (const auto& strand : comps.strands) {
        if (!firstComp) out << " | ";
        firstComp = false;
        bool first = true;
        for (const auto& pass : strand) {
            const Crossing& cr = d.crossings()[pass.into.crossing];
            bool under = pass.into.slot % 2 == 0;
            int sign = crossingSign(d, o, pass.into.crossing);
            if (!first) out << " ";
            first = false;
            out << (under ? "U" : "O") << (sign > 0 ? "+" : "-") << cr.id;
        }
    }
    for (int k = 0; k < d.freeLoops(); ++k) {
        if (!firstComp) out << " | ";
        firstComp = false;
        out << "0";
    }
    return out.str();
}

}  // namespace knotwork
