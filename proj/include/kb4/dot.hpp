#pragma once

#include "kb4/complex.hpp"
#include "kb4/frame.hpp"

#include <string>

namespace kb4
{

// Facets drawn as cliques (isolated vertices stay single nodes); vertices
// labelled colour:tag, facet labels listed beside each facet.
std::string to_dot( const simplicial_model& s );

// Worlds as nodes with their labels; loops carry the alive set, other edges
// the agents that cannot tell the two worlds apart.
std::string to_dot( const epistemic_model& m );

} // namespace kb4
