#pragma once

#include "kb4/vocabulary.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kb4
{

struct vertex
{
    int id;
    agent_id colour;
    std::string tag; // free-form, e.g. a crash-model view

    bool operator==( const vertex& ) const = default;
};

// Sorted vertex ids.
using simplex = std::vector< int >;

// A chromatic simplicial complex stored by its facets; the simplex family is
// their downward closure and is never materialized.
struct chromatic_complex
{
    vocabulary vocab;
    std::vector< vertex > vertices;
    std::vector< simplex > facets;
    std::vector< std::string > facet_names; // empty, or one (possibly empty) name per facet

    [[nodiscard]] const vertex* find_vertex( int id ) const;
    [[nodiscard]] agent_id colour( int id ) const;
    [[nodiscard]] agent_set colours( const simplex& s ) const;
    [[nodiscard]] std::optional< int > vertex_of_colour( const simplex& s, agent_id a ) const;

    // Declared name, or "#i" when the facet is unnamed.
    [[nodiscard]] std::string facet_name( std::size_t i ) const;
    // Resolves a declared name or a canonical index ("3" or "#3").
    [[nodiscard]] std::optional< std::size_t > find_facet( std::string_view key ) const;

    [[nodiscard]] bool is_simplex( const simplex& s ) const;
    [[nodiscard]] std::vector< std::size_t > facets_containing( const simplex& s ) const;
};

struct simplicial_model
{
    chromatic_complex complex;
    std::vector< atom_set > labels; // one per facet

    [[nodiscard]] const vocabulary& vocab() const { return complex.vocab; }
};

enum class complex_fault
{
    duplicate_vertex,
    unknown_colour,
    unknown_vertex,
    empty_facet,
    colour_clash,
    non_maximal,
    orphan_vertex,
    label_mismatch,
};

struct complex_violation
{
    complex_fault fault;
    std::string detail;
};

std::string to_string( complex_fault f );

// Lists every violated invariant; empty iff the complex is valid.
std::vector< complex_violation > validate_complex( const chromatic_complex& c );
std::vector< complex_violation > validate_model( const simplicial_model& m );

// Inclusion-maximal members of `generators`, each sorted, in lexicographic
// order. Throws when a generator repeats a colour or names an unknown vertex.
std::vector< simplex > facets_from_generators( const chromatic_complex& c, std::vector< simplex > generators );

// Sorts vertices by id, facet contents, and facets (carrying names and labels along).
void canonicalize( chromatic_complex& c );
void canonicalize( simplicial_model& m );

struct purity
{
    bool pure;
    int dimension; // |facet| - 1 when pure, -1 otherwise or for the empty complex
};

purity is_pure( const chromatic_complex& c );

// The unique face of `facet` coloured by u; throws unless u is a subset of its colours.
simplex subface( const chromatic_complex& c, const simplex& facet, agent_set u );

struct check_result
{
    bool holds = true;
    std::string counterexample;

    explicit operator bool() const { return holds; }
    static check_result fail( std::string why ) { return { false, std::move( why ) }; }
};

struct simplicial_map
{
    std::map< int, int > vertex_map;

    [[nodiscard]] int operator()( int v ) const;
    [[nodiscard]] simplex image( const simplex& s ) const;
    bool operator==( const simplicial_map& ) const = default;
};

simplicial_map identity_map( const chromatic_complex& c );
// (second . first)
simplicial_map compose( const simplicial_map& first, const simplicial_map& second );

check_result check_simplicial_map( const simplicial_map& f, const chromatic_complex& src, const chromatic_complex& dst );
check_result check_simplicial_model_morphism( const simplicial_map& f, const simplicial_model& src,
                                              const simplicial_model& dst );

} // namespace kb4
