#include "fixtures.hpp"

#include "kb4/complex.hpp"

#include <doctest.h>

#include <algorithm>

using namespace kb4;

namespace
{

chromatic_complex abc_complex( std::vector< std::pair< int, agent_id > > vertices, std::vector< simplex > facets )
{
    chromatic_complex c;
    c.vocab = vocabulary( { "a", "b", "c" } );
    for ( auto [ id, colour ] : vertices )
        c.vertices.push_back( { id, colour, "" } );
    c.facets = std::move( facets );
    return c;
}

bool has_fault( const std::vector< complex_violation >& v, complex_fault f )
{
    return std::any_of( v.begin(), v.end(), [ & ]( const auto& x ) { return x.fault == f; } );
}

} // namespace

TEST_CASE( "the one-round crash complex is valid" )
{
    auto s = fixtures::complex_file( "crash-complex.json" );
    CHECK( validate_model( s ).empty() );
    CHECK( s.complex.vertices.size() == 12 );
    CHECK( s.complex.facets.size() == 13 );
    CHECK_FALSE( is_pure( s.complex ).pure );
}

TEST_CASE( "every invariant violation is reported" )
{
    auto edge = abc_complex( { { 0, 0 }, { 1, 1 } }, { { 0, 1 } } );
    CHECK( validate_complex( edge ).empty() );

    auto dup = abc_complex( { { 0, 0 }, { 0, 1 } }, { { 0 } } );
    CHECK( has_fault( validate_complex( dup ), complex_fault::duplicate_vertex ) );

    auto colour = abc_complex( { { 0, 7 } }, { { 0 } } );
    CHECK( has_fault( validate_complex( colour ), complex_fault::unknown_colour ) );

    auto unknown = abc_complex( { { 0, 0 } }, { { 0, 5 } } );
    CHECK( has_fault( validate_complex( unknown ), complex_fault::unknown_vertex ) );

    auto empty = abc_complex( { { 0, 0 } }, { { 0 }, {} } );
    CHECK( has_fault( validate_complex( empty ), complex_fault::empty_facet ) );

    auto clash = abc_complex( { { 0, 0 }, { 1, 0 } }, { { 0, 1 } } );
    CHECK( has_fault( validate_complex( clash ), complex_fault::colour_clash ) );

    auto nested = abc_complex( { { 0, 0 }, { 1, 1 } }, { { 0, 1 }, { 0 } } );
    CHECK( has_fault( validate_complex( nested ), complex_fault::non_maximal ) );

    auto twice = abc_complex( { { 0, 0 } }, { { 0 }, { 0 } } );
    CHECK( validate_complex( twice ).size() == 1 );

    auto orphan = abc_complex( { { 0, 0 }, { 1, 1 } }, { { 0 } } );
    CHECK( has_fault( validate_complex( orphan ), complex_fault::orphan_vertex ) );

    simplicial_model m{ edge, {} };
    CHECK( has_fault( validate_model( m ), complex_fault::label_mismatch ) );
}

TEST_CASE( "facets from generators keeps maximal sets" )
{
    auto c = abc_complex( { { 0, 0 }, { 1, 1 }, { 2, 2 }, { 3, 0 } }, {} );
    auto f = facets_from_generators( c, { { 1 }, { 2, 0, 1 }, { 0, 1 }, { 3 }, { 3 } } );
    CHECK( f == std::vector< simplex >{ { 0, 1, 2 }, { 3 } } );
    CHECK_THROWS_AS( facets_from_generators( c, { { 0, 3 } } ), error );

    auto crash = fixtures::complex_file( "crash-complex.json" ).complex;
    CHECK( facets_from_generators( crash, crash.facets ) == crash.facets );
}

TEST_CASE( "canonicalize carries names and labels" )
{
    simplicial_model s{ abc_complex( { { 1, 1 }, { 0, 0 } }, { { 1 }, { 0 } } ), {} };
    s.complex.facet_names = { "y", "x" };
    s.complex.vocab.add_atom( "p", 0 );
    s.labels = { {}, { 0 } };
    canonicalize( s );
    CHECK( s.complex.vertices.front().id == 0 );
    CHECK( s.complex.facets == std::vector< simplex >{ { 0 }, { 1 } } );
    CHECK( s.complex.facet_names == std::vector< std::string >{ "x", "y" } );
    CHECK( s.labels == std::vector< atom_set >{ { 0 }, {} } );
    CHECK( s.complex.find_facet( "y" ) == 1 );
    CHECK( s.complex.find_facet( "#0" ) == 0 );
    CHECK( s.complex.find_facet( "1" ) == 1 );
    CHECK_FALSE( s.complex.find_facet( "2" ) );
}

TEST_CASE( "purity and subfaces" )
{
    CHECK( is_pure( chromatic_complex{} ).dimension == -1 );
    auto tri = abc_complex( { { 0, 0 }, { 1, 1 }, { 2, 2 } }, { { 0, 1, 2 } } );
    CHECK( is_pure( tri ).pure );
    CHECK( is_pure( tri ).dimension == 2 );
    CHECK( subface( tri, tri.facets[ 0 ], agent_bit( 0 ) | agent_bit( 2 ) ) == simplex{ 0, 2 } );
    auto edge = abc_complex( { { 0, 0 }, { 1, 1 } }, { { 0, 1 } } );
    CHECK_THROWS_AS( subface( edge, edge.facets[ 0 ], agent_bit( 2 ) ), error );
}

TEST_CASE( "simplicial maps" )
{
    auto edge = fixtures::complex_file( "edge.json" );
    auto tri = fixtures::complex_file( "two-triangles.json" );
    simplicial_map g{ { { 0, 0 }, { 1, 1 } } };
    CHECK( check_simplicial_map( g, edge.complex, tri.complex ) );
    CHECK( check_simplicial_map( identity_map( tri.complex ), tri.complex, tri.complex ) );

    CHECK_FALSE( check_simplicial_map( simplicial_map{ { { 0, 0 } } }, edge.complex, tri.complex ) );
    CHECK_FALSE( check_simplicial_map( simplicial_map{ { { 0, 0 }, { 1, 2 } } }, edge.complex, tri.complex ) );

    // Folding the two triangles together is a map; the identity into a
    // complex without the triangle is not.
    simplicial_map fold{ { { 0, 0 }, { 1, 1 }, { 2, 2 }, { 3, 2 } } };
    CHECK( check_simplicial_map( fold, tri.complex, tri.complex ) );
    auto wide = abc_complex( { { 0, 0 }, { 1, 1 }, { 2, 2 }, { 3, 1 } }, { { 0, 1, 2 }, { 2, 3 } } );
    auto small = abc_complex( { { 0, 0 }, { 1, 1 }, { 2, 2 }, { 3, 1 } }, { { 0, 1 }, { 2, 3 } } );
    simplicial_map id{ { { 0, 0 }, { 1, 1 }, { 2, 2 }, { 3, 3 } } };
    CHECK_FALSE( check_simplicial_map( id, wide, small ) );

    CHECK( compose( g, fold ) == simplicial_map{ { { 0, 0 }, { 1, 1 } } } );
}

TEST_CASE( "model morphisms check labels on the live atoms" )
{
    vocabulary v( { "a", "b", "c" } );
    auto p = v.add_atom( "p", 0 );
    auto r = v.add_atom( "r", 2 );
    auto edge = abc_complex( { { 0, 0 }, { 1, 1 } }, { { 0, 1 } } );
    auto tri = abc_complex( { { 0, 0 }, { 1, 1 }, { 2, 2 } }, { { 0, 1, 2 } } );
    edge.vocab = v;
    tri.vocab = v;
    simplicial_map g{ { { 0, 0 }, { 1, 1 } } };

    // r belongs to c, which is dead in the edge, so it may differ.
    CHECK( check_simplicial_model_morphism( g, { edge, { { p } } }, { tri, { { p, r } } } ) );
    CHECK_FALSE( check_simplicial_model_morphism( g, { edge, { { p } } }, { tri, { { r } } } ) );
}
