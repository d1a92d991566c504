#pragma once

#include "kb4/complex.hpp"
#include "kb4/formula.hpp"
#include "kb4/frame.hpp"

#include <optional>
#include <vector>

namespace kb4
{

// M,w |= f, with K_a f true iff f holds at every w' ~a w.
bool eval_kripke( const epistemic_model& m, world_id w, const formula& f );

// C,X |= f, with K_a f true iff f holds at every facet Y with a in chi(X n Y).
bool eval_simplicial( const simplicial_model& s, std::size_t facet, const formula& f );

struct evaluation
{
    std::vector< bool > truth; // per world or facet
    bool all = true;
};

evaluation eval_all( const epistemic_model& m, const formula& f );
evaluation eval_all( const simplicial_model& s, const formula& f );

struct guard_check
{
    bool guarded;
    std::optional< formula > offending;

    explicit operator bool() const { return guarded; }
};

// Membership in  f ::= alive_B -> psi | f & f | f | f | K_a f, where psi is
// built from atoms of AP_B with ~ and &.
guard_check is_guarded_positive( const formula& f, const vocabulary& vocab );

enum class gain_verdict
{
    vacuous,   // target does not satisfy the formula
    confirmed, // both ends satisfy it
    violation, // target satisfies it, source does not
};

const char* to_string( gain_verdict v );

struct pointed_map
{
    simplicial_map map;
    std::size_t source_facet;
    std::size_t target_facet;
};

// Validates the pointed morphism (f(X) inside Y) without restricting the formula.
gain_verdict check_pullback( const simplicial_model& src, const simplicial_model& dst, const pointed_map& f,
                             const formula& phi );

// As check_pullback, but rejects formulas outside the guarded positive
// fragment. A violation contradicts knowledge gain and signals a bug.
gain_verdict check_knowledge_gain( const simplicial_model& src, const simplicial_model& dst, const pointed_map& f,
                                   const formula& phi );

} // namespace kb4
