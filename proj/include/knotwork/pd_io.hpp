#ifndef KNOTWORK_PD_IO_HPP
#define KNOTWORK_PD_IO_HPP

#include <stdexcept>
#include <string>

#include "knotwork/diagram.hpp"

namespace knotwork {

struct PdParseError : std::runtime_error {
    std::size_t position;
    PdParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Format: PD[X(a,b,c,d), X(e,f,g,h), ...; loops=k], whitespace-insensitive.
PlanarDiagram parsePD(const std::string& text);
std::string serializePD(const PlanarDiagram& d);

// One line per component: O/U-prefixed signed crossing ids, components
// separated by '|'.  Free loops render as empty components.
std::string gaussCode(const PlanarDiagram& d);

}  // namespace knotwork

#endif
