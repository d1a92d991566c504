#pragma once

#include "kb4/complex.hpp"
#include "kb4/vocabulary.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kb4
{

using world_id = int;

// A binary relation over worlds 0..n-1, stored as a dense matrix.
class relation
{
public:
    relation() = default;
    explicit relation( std::size_t n ) : _n{ n }, _bits( n * n, 0 ) {}

    [[nodiscard]] std::size_t size() const { return _n; }
    [[nodiscard]] bool operator()( world_id u, world_id v ) const { return _bits[ index( u, v ) ] != 0; }
    void set( world_id u, world_id v, bool value = true ) { _bits[ index( u, v ) ] = value ? 1 : 0; }

    [[nodiscard]] std::vector< std::pair< world_id, world_id > > pairs() const;
    [[nodiscard]] std::vector< world_id > successors( world_id u ) const;
    [[nodiscard]] bool empty() const;

    bool operator==( const relation& ) const = default;

private:
    [[nodiscard]] std::size_t index( world_id u, world_id v ) const
    {
        return static_cast< std::size_t >( u ) * _n + static_cast< std::size_t >( v );
    }

    std::size_t _n = 0;
    std::vector< std::uint8_t > _bits;
};

// Kripke model whose accessibility relations are meant to be PERs. With empty
// labels it doubles as a bare partial epistemic frame.
struct epistemic_model
{
    vocabulary vocab;
    std::vector< std::string > world_names;
    std::vector< atom_set > labels;
    std::vector< relation > rel; // one per agent

    epistemic_model() = default;
    epistemic_model( vocabulary v, std::vector< std::string > names );

    [[nodiscard]] std::size_t world_count() const { return world_names.size(); }
    [[nodiscard]] std::optional< world_id > find_world( std::string_view name ) const;
    [[nodiscard]] world_id world( std::string_view name ) const; // throws on unknown world

    [[nodiscard]] bool related( agent_id a, world_id u, world_id v ) const { return rel[ a ]( u, v ); }
    void relate( agent_id a, world_id u, world_id v );    // adds (u,v) and (v,u)
    [[nodiscard]] agent_set alive( world_id w ) const;     // live(w); the complement is dead(w)
};

enum class per_fault
{
    symmetry,
    transitivity,
};

struct per_violation
{
    per_fault fault;
    agent_id agent;
    world_id from, to; // the missing pair
};

// Every missing pair witnessing a symmetry or transitivity failure; empty iff
// each relation is a PER.
std::vector< per_violation > validate_per( const epistemic_model& m );

// Smallest symmetric and transitive superset.
relation per_closure( const relation& r );
void close_relations( epistemic_model& m );

agent_set alive_set( const epistemic_model& m, world_id w ); // throws on unknown world

struct properness
{
    bool proper;
    // (w, w) when no agent is alive in w, otherwise (w, w') with w' not
    // distinguished from w by any agent alive in w.
    std::optional< std::pair< world_id, world_id > > witness;

    explicit operator bool() const { return proper; }
};

properness is_proper( const epistemic_model& m );

// { w' | w ~a w' for all a in u }; all worlds when u is empty.
std::vector< world_id > saturate( const epistemic_model& m, agent_set u, world_id w );

struct frame_morphism
{
    std::vector< std::vector< world_id > > image; // sorted, one set per source world

    bool operator==( const frame_morphism& ) const = default;
};

// u -> sat_{live(u)}(u): the identity arrow, single-valued on proper models.
frame_morphism identity_morphism( const epistemic_model& m );

check_result check_frame_morphism( const frame_morphism& f, const epistemic_model& src, const epistemic_model& dst );
check_result check_model_morphism( const frame_morphism& f, const epistemic_model& src, const epistemic_model& dst );

// sat_{live(u)}(w) taken in `target`, for the source world u and a chosen w in g(f(u)).
std::vector< world_id > composite_image( const epistemic_model& src, const epistemic_model& target, world_id u,
                                         world_id w );

// (g . f) with the first representative choice at every world.
frame_morphism compose_morphisms( const frame_morphism& f, const frame_morphism& g, const epistemic_model& src,
                                  const epistemic_model& target );

// A bijection of worlds preserving labels and every relation in both
// directions, or nothing when the models are not isomorphic.
std::optional< std::vector< world_id > > check_frame_iso( const epistemic_model& m, const epistemic_model& n );

} // namespace kb4
