#pragma once

// Semantic checks of axiom schemes and derived tautologies over exhaustively
// enumerated small partial epistemic models.
//
// Schemes are instantiated with every formula up to a given depth over the
// model's atoms, true and false. Only a formula's extension (the set of
// worlds where it holds) matters for the truth of an instance, so the
// instantiation set is computed as the distinct extensions reachable within
// the depth bound, each kept with a smallest witness formula.

#include "kb4/formula.hpp"
#include "kb4/frame.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kb4
{

struct model_bounds
{
    std::size_t agents = 1;
    std::size_t worlds = 1; // models with 1..worlds worlds; only the empty model when 0
    std::size_t atoms = 0;
    bool proper_only = false;
};

inline constexpr std::uint64_t max_enumeration_candidates = 10'000'000;

// Agents a, b, c, ... and atoms p, q, r, ... with atom i owned by agent i mod n.
vocabulary sweep_vocabulary( std::size_t agents, std::size_t atoms );

// Number of candidate models before the properness filter.
std::uint64_t count_candidates( const model_bounds& b );

// Streams every model within the bounds in a fixed order. Relations are
// generated as PERs directly: a domain subset plus a set partition of it.
// Throws when the candidate count exceeds max_enumeration_candidates.
void for_each_model( const model_bounds& b, const std::function< void( const epistemic_model& ) >& visit );
std::vector< epistemic_model > enumerate_models( const model_bounds& b );

// All morphisms between two frames (images chosen among the saturated sets).
std::vector< frame_morphism > enumerate_frame_morphisms( const epistemic_model& src, const epistemic_model& dst );

enum class scheme
{
    K,
    B,
    four,
    five,
    T,
    NE,
    SA,
};

std::string to_string( scheme s );
std::optional< scheme > parse_scheme( std::string_view name );

struct instantiation
{
    formula witness;
    std::vector< bool > extension;
};

std::vector< instantiation > instantiations( const epistemic_model& m, std::size_t depth );

struct scheme_counterexample
{
    scheme axiom;
    world_id world;
    std::optional< agent_id > agent;
    std::optional< formula > phi, psi;
};

// The instance of the scheme for agent a (ignored by NE) and formulas phi, psi.
formula scheme_instance( scheme s, const vocabulary& vocab, agent_id a, const formula& phi, const formula& psi );

std::vector< scheme_counterexample > check_scheme( const epistemic_model& m, scheme s, std::size_t depth );

enum class tautology
{
    dead_knows_everything,   // dead a -> K a phi
    alive_knows_alive,       // alive a -> K a alive a
    alive_satisfies_t,       // alive a -> (K a phi -> phi)
    only_alive_matters,      // K a phi <-> (alive a -> K a phi)
};

std::string to_string( tautology t );

struct theorem_failure
{
    tautology which;
    world_id world;
    agent_id agent;
    formula phi;
};

std::vector< theorem_failure > check_theorems( const epistemic_model& m, std::size_t depth );

struct sweep_options
{
    std::size_t agents = 2;
    std::size_t worlds = 3;
    std::size_t atoms = 2;
    std::size_t depth = 3;
    bool proper_only = false;
    // Empty: K, B, 4, 5 on the sweep plus NE, SA on its proper models.
    std::vector< scheme > schemes;
};

struct scheme_tally
{
    scheme axiom;
    bool proper_models_only;
    std::uint64_t models = 0;
    std::uint64_t failing_models = 0;
    std::uint64_t counterexamples = 0;
    std::optional< std::string > example; // first counterexample, rendered
};

struct sweep_summary
{
    sweep_options options;
    std::uint64_t models = 0;
    std::uint64_t proper_models = 0;
    std::vector< scheme_tally > schemes;
    std::uint64_t theorem_failures = 0;
    std::optional< std::string > theorem_example;
    std::chrono::duration< double > elapsed{};

    [[nodiscard]] bool ok() const;
};

sweep_summary soundness_sweep( const sweep_options& o );

} // namespace kb4
