#pragma once

#include <string>

#include "acceptance_suite.hpp"
#include "rp3/io.hpp"
#include "rp3/projective.hpp"

inline rp3::ProjectiveDiagram fixture_p(const std::string& name) {
    return rp3::orient(rp3::parse_projective(rp3::read_file(acceptance::fixture_path(name))));
}
inline rp3::VirtualDiagram fixture_v(const std::string& name) {
    return rp3::orient(rp3::parse_virtual(rp3::read_file(acceptance::fixture_path(name))));
}
// Virtual model of a projective fixture.
inline rp3::VirtualDiagram fixture_pi(const std::string& name) { return rp3::orient(rp3::pi(fixture_p(name))); }
