#pragma once

// Seeded random instances for property tests and the acceptance harness.

#include "kb4/complex.hpp"
#include "kb4/formula.hpp"
#include "kb4/frame.hpp"
#include "kb4/logic.hpp"

#include <optional>
#include <random>

namespace kb4
{

using rng = std::mt19937_64;

// 1..max_agents agents, 0..max_atoms_per_agent atoms each, at least one atom overall.
vocabulary random_vocabulary( rng& r, std::size_t max_agents = 3, std::size_t max_atoms_per_agent = 2 );

// Valid complex with 1..max_facets facets (fewer after absorbing non-maximal generators).
chromatic_complex random_complex( rng& r, const vocabulary& vocab, std::size_t max_facets = 6 );
simplicial_model random_simplicial_model( rng& r, const vocabulary& vocab, std::size_t max_facets = 6 );

// PER model with 1..max_worlds worlds; not necessarily proper.
epistemic_model random_model( rng& r, const vocabulary& vocab, std::size_t max_worlds = 6 );
// Rejection-samples random_model until the result is proper.
epistemic_model random_proper_model( rng& r, const vocabulary& vocab, std::size_t max_worlds = 6 );

// Uniform mix of every connective, including the derived ones, up to the AST depth.
formula random_formula( rng& r, const vocabulary& vocab, std::size_t max_depth );

// Guarded positive formula with up to max_depth nested &, |, K_a above the
// alive_B -> psi leaves. Needs an atom in the vocabulary.
formula random_guarded_formula( rng& r, const vocabulary& vocab, std::size_t max_depth );

// Negation-free formula over atoms, &, | and K_a with no aliveness guards.
formula random_positive_formula( rng& r, const vocabulary& vocab, std::size_t max_depth );

struct random_map
{
    chromatic_complex target;
    simplicial_map map;
};

// A complex receiving a random colour-preserving quotient of src, plus extra facets.
random_map random_map_from( rng& r, const chromatic_complex& src, std::size_t max_extra_facets = 2 );

struct pointed_morphism
{
    simplicial_model src, dst;
    pointed_map map;
};

// Labels are drawn per target vertex over its own agent's atoms and pulled
// back, with arbitrary atoms of dead agents added on both sides, so the map
// always satisfies the label condition.
pointed_morphism random_pointed_morphism( rng& r, const vocabulary& vocab, std::size_t max_facets = 4 );

struct gain_counterexample
{
    pointed_morphism morphism;
    formula phi;
};

// Searches random pointed morphisms and positive formulas for a case where the
// target satisfies the formula and the source does not.
std::optional< gain_counterexample > find_unguarded_counterexample( std::uint64_t seed, std::size_t attempts );

} // namespace kb4
