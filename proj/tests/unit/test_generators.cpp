#include "kb4/functors.hpp"
#include "kb4/generators.hpp"

#include <doctest.h>

using namespace kb4;

TEST_CASE( "random instances are valid" )
{
    rng r( 21 );
    for ( int trial = 0; trial < 300; ++trial )
    {
        auto vocab = random_vocabulary( r );
        CHECK( vocab.agent_count() >= 1 );
        CHECK( vocab.agent_count() <= 3 );
        CHECK( vocab.atom_count() >= 1 );

        auto s = random_simplicial_model( r, vocab );
        CHECK( validate_model( s ).empty() );
        CHECK( s.complex.facets.size() <= 6 );

        auto m = random_model( r, vocab );
        CHECK( validate_per( m ).empty() );
        CHECK( m.world_count() >= 1 );
        CHECK( m.world_count() <= 6 );
        CHECK( is_proper( random_proper_model( r, vocab ) ) );
    }
}

TEST_CASE( "random guarded formulas are guarded" )
{
    rng r( 22 );
    for ( int trial = 0; trial < 500; ++trial )
    {
        auto vocab = random_vocabulary( r );
        auto f = random_guarded_formula( r, vocab, 4 );
        auto g = is_guarded_positive( f, vocab );
        CAPTURE( to_string( f, vocab ) );
        CHECK( g );
    }
}

TEST_CASE( "random maps and pointed morphisms are morphisms" )
{
    rng r( 23 );
    for ( int trial = 0; trial < 300; ++trial )
    {
        auto vocab = random_vocabulary( r );
        auto c = random_complex( r, vocab, 4 );
        auto [ d, f ] = random_map_from( r, c );
        CHECK( validate_complex( d ).empty() );
        CHECK( check_simplicial_map( f, c, d ) );

        auto p = random_pointed_morphism( r, vocab );
        CHECK( validate_model( p.src ).empty() );
        CHECK( validate_model( p.dst ).empty() );
        CHECK( check_simplicial_model_morphism( p.map.map, p.src, p.dst ) );
        const auto image = p.map.map.image( p.src.complex.facets[ p.map.source_facet ] );
        const auto& target = p.dst.complex.facets[ p.map.target_facet ];
        CHECK( std::includes( target.begin(), target.end(), image.begin(), image.end() ) );
    }
}

TEST_CASE( "a fixed seed reproduces the same instances" )
{
    rng r1( 99 ), r2( 99 );
    for ( int trial = 0; trial < 20; ++trial )
    {
        auto v1 = random_vocabulary( r1 );
        auto v2 = random_vocabulary( r2 );
        REQUIRE( v1 == v2 );
        auto s1 = random_simplicial_model( r1, v1 );
        auto s2 = random_simplicial_model( r2, v2 );
        CHECK( s1.complex.facets == s2.complex.facets );
        CHECK( s1.labels == s2.labels );
        CHECK( random_formula( r1, v1, 4 ) == random_formula( r2, v2, 4 ) );
    }
}

TEST_CASE( "unguarded positive formulas can lose truth" )
{
    auto found = find_unguarded_counterexample( 1, 20000 );
    REQUIRE( found );
    const auto& m = found->morphism;
    CHECK( check_pullback( m.src, m.dst, m.map, found->phi ) == gain_verdict::violation );
    CHECK_FALSE( is_guarded_positive( found->phi, m.src.vocab() ) );
}
