#pragma once

// Synchronous crash-failure model with a full-information protocol.
//
// Each round every live agent sends its local state to all others. An agent
// may crash during a round, in which case only an arbitrary subset of the
// other agents receives its message, and it sends nothing afterwards. At most
// `max_crashes` agents crash in total over all rounds. The local state of an
// agent is its input before round 1 and, after round r, the set of
// (sender, state after round r-1) pairs it received, its own included.
//
// Each final global state yields the simplex of its surviving agents' local
// states; the facets are the inclusion-maximal ones.

#include "kb4/complex.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kb4
{

struct crash_parameters
{
    std::vector< std::string > agents;
    // One or more input assignments, each listing one value per agent.
    std::vector< std::vector< std::string > > inputs;
    int rounds = 1;
    int max_crashes = 0;
};

struct crash_complex
{
    chromatic_complex complex; // vertex tags hold the canonical view strings
    std::map< int, std::set< std::pair< agent_id, std::string > > > observed_inputs; // per vertex
};

crash_complex gen_crash_complex( const crash_parameters& p );

// Labels each facet with input<x>@b for every input x of agent b that occurs
// in the union of the facet's views.
simplicial_model label_inputs( const crash_complex& c );

simplicial_model gen_crash_model( const crash_parameters& p );

} // namespace kb4
