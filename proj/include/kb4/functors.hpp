#pragma once

// Translations between simplicial models and proper partial epistemic models.
//
// kappa: worlds are the facets, X ~a Y iff a colours a vertex of X n Y, and a
// simplicial map f sends X to every facet containing f(X).
//
// sigma: one vertex per (agent a, class [w]_a) for a alive in w, one facet
// X_w = { v_a^w | a in live(w) } per world, and a morphism f sends v_a^w to
// v_a^{w'} for any w' in f(w). sigma requires a proper input.

#include "kb4/complex.hpp"
#include "kb4/frame.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace kb4
{

epistemic_model kappa( const simplicial_model& s );
epistemic_model kappa( const chromatic_complex& c );
frame_morphism kappa( const simplicial_map& f, const chromatic_complex& src, const chromatic_complex& dst );

// The sigma complex together with the bookkeeping that identifies its parts.
struct sigma_construction
{
    simplicial_model model;
    std::vector< std::size_t > facet_of_world;
    // (agent, least world of the agent's class) -> vertex id
    std::map< std::pair< agent_id, world_id >, int > vertex_of_class;

    [[nodiscard]] int vertex_at( const epistemic_model& m, agent_id a, world_id w ) const;
};

// Throws when m is not proper.
sigma_construction build_sigma( const epistemic_model& m );
simplicial_model sigma( const epistemic_model& m );
simplicial_map sigma( const frame_morphism& f, const epistemic_model& src, const epistemic_model& dst );

// w -> index of X_w in kappa(sigma(m)), validated as an isomorphism of models;
// nothing when validation fails.
std::optional< std::vector< world_id > > roundtrip_frame( const epistemic_model& m );

// u -> the vertex of sigma(kappa(c)) it corresponds to, validated as a
// chromatic bijection preserving simplexes (and labels) both ways.
std::optional< simplicial_map > roundtrip_complex( const simplicial_model& s );
std::optional< simplicial_map > roundtrip_complex( const chromatic_complex& c );

} // namespace kb4
