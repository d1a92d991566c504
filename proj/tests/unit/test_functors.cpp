#include "fixtures.hpp"

#include "kb4/functors.hpp"
#include "kb4/generators.hpp"

#include <doctest.h>

using namespace kb4;

TEST_CASE( "kappa of the crash complex is the crash frame" )
{
    auto c = fixtures::complex_file( "crash-complex.json" );
    auto m = fixtures::frame_file( "crash-frame.json" );
    auto k = kappa( c );
    CHECK( validate_per( k ).empty() );
    CHECK( is_proper( k ) );
    auto iso = check_frame_iso( k, m );
    REQUIRE( iso );
    // Facet names survive as world names, and the witness respects them.
    for ( std::size_t w = 0; w < k.world_count(); ++w )
        CHECK( k.world_names[ w ] == m.world_names[ ( *iso )[ w ] ] );
}

TEST_CASE( "kappa relates facets sharing a coloured vertex" )
{
    // w1 = {c1,a1,b1}, w2 = {a1,b1,c2}, w3 = {c2,a2,b2}
    chromatic_complex c;
    c.vocab = vocabulary( { "a", "b", "c" } );
    c.vertices = { { 0, 0, "a1" }, { 1, 0, "a2" }, { 2, 1, "b1" }, { 3, 1, "b2" }, { 4, 2, "c1" }, { 5, 2, "c2" } };
    c.facets = { { 0, 2, 4 }, { 0, 2, 5 }, { 1, 3, 5 } };
    REQUIRE( validate_complex( c ).empty() );
    auto m = kappa( c );
    CHECK( m.related( 0, 0, 1 ) );
    CHECK( m.related( 1, 0, 1 ) );
    CHECK_FALSE( m.related( 2, 0, 1 ) );
    CHECK( m.related( 2, 1, 2 ) );
    CHECK_FALSE( m.related( 0, 1, 2 ) );
    CHECK_FALSE( m.related( 0, 0, 2 ) );
    CHECK( is_pure( c ).pure );
    for ( world_id w = 0; w < 3; ++w )
        CHECK( m.alive( w ) == 0b111 );
}

TEST_CASE( "kappa of a simplicial map is the set of facets over the image" )
{
    auto edge = fixtures::complex_file( "edge.json" );
    auto tri = fixtures::complex_file( "two-triangles.json" );
    simplicial_map g{ { { 0, 0 }, { 1, 1 } } };
    auto f = kappa( g, edge.complex, tri.complex );
    REQUIRE( f.image.size() == 1 );
    CHECK( f.image[ 0 ] == std::vector< world_id >{ 0, 1 } );
    CHECK( check_frame_morphism( f, kappa( edge ), kappa( tri ) ) );
}

TEST_CASE( "sigma rejects improper models" )
{
    auto bad = fixtures::frame_file( "improper-frame.json" );
    CHECK_THROWS_WITH_AS( sigma( bad ), doctest::Contains( "w'2" ), error );
}

TEST_CASE( "sigma of the crash frame" )
{
    auto m = fixtures::frame_file( "crash-frame.json" );
    auto s = sigma( m );
    CHECK( validate_model( s ).empty() );
    CHECK( s.complex.vertices.size() == 12 );
    CHECK( s.complex.facets.size() == 13 );
    auto c = fixtures::complex_file( "crash-complex.json" );
    CHECK( check_frame_iso( kappa( s ), kappa( c ) ) );
    CHECK( roundtrip_frame( m ) );
    CHECK( roundtrip_complex( c ) );
    CHECK( roundtrip_complex( c.complex ) );
}

TEST_CASE( "sigma of a morphism sends class vertices along" )
{
    auto src = fixtures::frame_file( "edge-frame.json" );
    auto dst = fixtures::frame_file( "two-worlds-frame.json" );
    frame_morphism f{ { { 0, 1 } } };
    auto g = sigma( f, src, dst );
    CHECK( check_simplicial_map( g, sigma( src ).complex, sigma( dst ).complex ) );
    // kappa(sigma(f)) is f up to the round-trip isomorphisms, which are the
    // identity on world indices here.
    CHECK( kappa( g, sigma( src ).complex, sigma( dst ).complex ) == f );
}

TEST_CASE( "round trips on random inputs" )
{
    rng r( 3 );
    for ( int trial = 0; trial < 300; ++trial )
    {
        auto vocab = random_vocabulary( r );
        auto m = random_proper_model( r, vocab, 6 );
        CHECK( roundtrip_frame( m ) );
        auto s = random_simplicial_model( r, vocab, 6 );
        CHECK( roundtrip_complex( s ) );
        CHECK( is_proper( kappa( s ) ) );
        CHECK( validate_per( kappa( s ) ).empty() );
    }
}

TEST_CASE( "kappa preserves identities and composition on random maps" )
{
    rng r( 5 );
    for ( int trial = 0; trial < 300; ++trial )
    {
        auto vocab = random_vocabulary( r );
        auto c = random_complex( r, vocab, 3 );
        auto [ d, f ] = random_map_from( r, c );
        auto [ e, g ] = random_map_from( r, d );
        REQUIRE( check_simplicial_map( f, c, d ) );
        REQUIRE( check_simplicial_map( g, d, e ) );

        auto kc = kappa( c );
        auto kd = kappa( d );
        auto ke = kappa( e );
        auto kf = kappa( f, c, d );
        auto kg = kappa( g, d, e );
        CHECK( check_frame_morphism( kf, kc, kd ) );
        CHECK( kappa( identity_map( c ), c, c ) == identity_morphism( kc ) );
        CHECK( kappa( compose( f, g ), c, e ) == compose_morphisms( kf, kg, kc, ke ) );
    }
}

TEST_CASE( "converting to a complex and back through JSON gives an isomorphic frame" )
{
    rng r( 6 );
    std::vector< epistemic_model > frames{ fixtures::frame_file( "crash-frame.json" ),
                                           fixtures::frame_file( "proper-frame.json" ) };
    for ( int trial = 0; trial < 100; ++trial )
    {
        auto vocab = random_vocabulary( r );
        frames.push_back( random_proper_model( r, vocab ) );
    }
    for ( const auto& m : frames )
    {
        auto complex = model_from_json( json::parse( to_json( sigma( m ) ).dump() ) );
        REQUIRE( complex.kind == model_kind::complex );
        auto back = model_from_json( json::parse( to_json( kappa( complex.complex ) ).dump() ) );
        REQUIRE( back.kind == model_kind::frame );
        CHECK( check_frame_iso( back.frame, m ) );
    }
}
