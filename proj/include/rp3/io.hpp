#pragma once

#include <string>

#include "rp3/diagram.hpp"

namespace rp3 {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line format:
//   boundary <arc> <arc> ...      (projective only)
//   crossing <id> <a> <b> <c> <d>
//   loop <count>
//   virtual <count>               (virtual only)
//   orient <arc> +|-              (+ : the arc runs toward its smaller end)
//   # comment
ProjectiveDiagram parse_projective(const std::string& text);
VirtualDiagram parse_virtual(const std::string& text);

std::string serialize(const ProjectiveDiagram& d);
std::string serialize(const VirtualDiagram& d);

std::string read_file(const std::string& path);

}  // namespace rp3
