#include "fixtures.hpp"

#include "kb4/functors.hpp"
#include "kb4/generators.hpp"
#include "kb4/logic.hpp"

#include <doctest.h>

using namespace kb4;

namespace
{

struct claim
{
    const char* world;
    const char* text;
};

// Satisfaction claims about the one-round crash model with their expected truth.
const claim claims[] = {
    { "w1", "K a (input1@a & input2@b & input3@c)" },
    { "w3", "K a (input1@a & input2@b & input3@c)" },
    { "w3", "K b (input1@a & input2@b)" },
    { "w3", "~K b input3@c" },
    { "w4", "K a (input1@a & input2@b)" },
    { "w4", "K b (input1@a & input2@b)" },
    { "w4", "~K a input3@c & ~K b input3@c" },
    { "w1", "K a K b (input1@a & input2@b)" },
    { "w1", "~K a K b input3@c" },
    { "w3", "alive b & alive a" },
    { "w3", "dead c" },
    { "w1", "~K a alive c" },
    { "w4", "K b dead c & K a dead c" },
};

} // namespace

TEST_CASE( "crash-model claims hold in both semantics" )
{
    auto s = fixtures::complex_file( "crash-complex.json" );
    auto m = fixtures::frame_file( "crash-frame.json" );
    auto k = kappa( s );
    for ( const auto& c : claims )
    {
        CAPTURE( c.world );
        CAPTURE( c.text );
        auto phi = parse_formula( c.text, s.vocab() );
        CHECK( eval_simplicial( s, *s.complex.find_facet( c.world ), phi ) );
        CHECK( eval_kripke( k, k.world( c.world ), phi ) );
        CHECK( eval_kripke( m, m.world( c.world ), phi ) );
    }
}

TEST_CASE( "aliveness matches the loops and the facet colours" )
{
    rng r( 9 );
    for ( int trial = 0; trial < 200; ++trial )
    {
        auto vocab = random_vocabulary( r );
        auto m = random_model( r, vocab, 5 );
        auto s = random_simplicial_model( r, vocab, 5 );
        for ( std::size_t a = 0; a < vocab.agent_count(); ++a )
        {
            auto alive = formula::alive( static_cast< agent_id >( a ) );
            for ( world_id w = 0; w < static_cast< world_id >( m.world_count() ); ++w )
                CHECK( eval_kripke( m, w, alive ) == m.related( static_cast< agent_id >( a ), w, w ) );
            for ( std::size_t x = 0; x < s.complex.facets.size(); ++x )
                CHECK( eval_simplicial( s, x, alive ) ==
                       contains( s.complex.colours( s.complex.facets[ x ] ), static_cast< agent_id >( a ) ) );
        }
    }
}

TEST_CASE( "simplicial and Kripke evaluation agree through kappa" )
{
    rng r( 13 );
    for ( int trial = 0; trial < 500; ++trial )
    {
        auto vocab = random_vocabulary( r );
        auto s = random_simplicial_model( r, vocab, 6 );
        auto k = kappa( s );
        auto phi = random_formula( r, vocab, 5 );
        CHECK( eval_all( s, phi ).truth == eval_all( k, phi ).truth );
    }
}

TEST_CASE( "evaluation rejects unknown points" )
{
    auto s = fixtures::complex_file( "edge.json" );
    CHECK_THROWS_AS( eval_simplicial( s, 1, formula::top() ), error );
    CHECK_THROWS_AS( eval_kripke( kappa( s ), -1, formula::top() ), error );
}

TEST_CASE( "guarded positive fragment" )
{
    vocabulary v( { "a", "b", "c" } );
    v.add_atom( "p", 0 );
    v.add_atom( "q", 1 );
    v.add_atom( "r", 2 );
    auto guarded = [ & ]( const char* s ) { return static_cast< bool >( is_guarded_positive( parse_formula( s, v ), v ) ); };

    CHECK( guarded( "alive a -> p@a" ) );
    CHECK( guarded( "alive{a,b} -> (p@a & ~q@b)" ) );
    CHECK( guarded( "K b (alive a -> p@a)" ) );
    CHECK( guarded( "(alive a -> p@a) & K c (alive{b,c} -> ~(q@b & r@c))" ) );
    CHECK( guarded( "(alive a -> p@a) | (alive b -> q@b)" ) );
    CHECK_FALSE( guarded( "alive a -> p@a | q@b" ) );
    CHECK( guarded( "alive{a,b} -> p@a | q@b" ) );

    CHECK_FALSE( guarded( "p@a" ) );
    CHECK_FALSE( guarded( "K a r@c" ) );
    CHECK_FALSE( guarded( "alive a -> r@c" ) );
    CHECK_FALSE( guarded( "~(alive a -> p@a)" ) );
    CHECK_FALSE( guarded( "alive a -> K a p@a" ) );
    CHECK_FALSE( guarded( "alive a -> true" ) );
    CHECK_FALSE( guarded( "alive a" ) );

    auto g = is_guarded_positive( parse_formula( "K a (alive a -> r@c)", v ), v );
    REQUIRE( g.offending );
    CHECK( to_string( *g.offending, v ) == "r@c" );
}

TEST_CASE( "knowledge gain on the edge into a triangle" )
{
    auto g = load_gain_instance( fixtures::data( "gain.json" ) );
    const auto& vocab = g.src.vocab();
    CHECK( check_knowledge_gain( g.src, g.dst, g.map, parse_formula( "alive c -> p@c", vocab ) ) ==
           gain_verdict::confirmed );
    CHECK( check_knowledge_gain( g.src, g.dst, g.map, parse_formula( "K a (alive a -> q@a)", vocab ) ) ==
           gain_verdict::confirmed );
    CHECK( check_knowledge_gain( g.src, g.dst, g.map, parse_formula( "alive a -> ~q@a", vocab ) ) ==
           gain_verdict::vacuous );
    CHECK_THROWS_AS( check_knowledge_gain( g.src, g.dst, g.map, parse_formula( "K a p@c", vocab ) ), error );
    CHECK( check_pullback( g.src, g.dst, g.map, parse_formula( "K a p@c", vocab ) ) == gain_verdict::violation );

    auto off = g.map;
    off.map.vertex_map[ 1 ] = 2;
    CHECK_THROWS_AS( check_pullback( g.src, g.dst, off, formula::top() ), error );
}

TEST_CASE( "random guarded formulas never lose truth along pointed morphisms" )
{
    rng r( 17 );
    for ( int trial = 0; trial < 1000; ++trial )
    {
        auto vocab = random_vocabulary( r );
        auto m = random_pointed_morphism( r, vocab );
        auto phi = random_guarded_formula( r, vocab, 4 );
        REQUIRE( is_guarded_positive( phi, vocab ) );
        CHECK( check_knowledge_gain( m.src, m.dst, m.map, phi ) != gain_verdict::violation );
    }
}
