#include "fixtures.hpp"

#include "kb4/frame.hpp"
#include "kb4/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace kb4;

namespace
{

// Adds implied pairs one at a time until nothing changes.
relation naive_closure( relation r )
{
    const auto n = static_cast< world_id >( r.size() );
    bool changed = true;
    while ( changed )
    {
        changed = false;
        for ( world_id u = 0; u < n; ++u )
            for ( world_id v = 0; v < n; ++v )
            {
                if ( !r( u, v ) )
                    continue;
                if ( !r( v, u ) )
                {
                    r.set( v, u );
                    changed = true;
                }
                for ( world_id w = 0; w < n; ++w )
                    if ( r( v, w ) && !r( u, w ) )
                    {
                        r.set( u, w );
                        changed = true;
                    }
            }
    }
    return r;
}

} // namespace

TEST_CASE( "PER validation names the missing pairs" )
{
    auto m = fixtures::empty_frame( { "a" }, 3 );
    m.rel[ 0 ].set( 0, 1 );
    auto v = validate_per( m );
    REQUIRE_FALSE( v.empty() );
    CHECK( v.front().fault == per_fault::symmetry );
    CHECK( v.front().from == 1 );
    CHECK( v.front().to == 0 );
    // The symmetric closure {(0,1),(1,0)} needs the loops too.
    CHECK( std::any_of( v.begin(), v.end(), []( auto& x ) { return x.fault == per_fault::transitivity && x.from == 0 && x.to == 0; } ) );

    auto chain = fixtures::frame_file( "non-per-frame.json" );
    auto c = validate_per( chain );
    CHECK( c.size() == 2 );
    close_relations( chain );
    CHECK( validate_per( chain ).empty() );

    CHECK( validate_per( fixtures::frame_file( "crash-frame.json" ) ).empty() );
}

TEST_CASE( "PER closure matches a naive fixpoint" )
{
    rng r( 7 );
    for ( int trial = 0; trial < 300; ++trial )
    {
        const auto n = static_cast< std::size_t >( trial % 6 + 1 );
        relation rel( n );
        for ( std::size_t u = 0; u < n; ++u )
            for ( std::size_t v = 0; v < n; ++v )
                if ( std::bernoulli_distribution( 0.2 )( r ) )
                    rel.set( static_cast< world_id >( u ), static_cast< world_id >( v ) );
        auto closed = per_closure( rel );
        CHECK( closed == naive_closure( rel ) );
        CHECK( per_closure( closed ) == closed );
    }
}

TEST_CASE( "alive sets are read off the loops" )
{
    auto m = fixtures::frame_file( "crash-frame.json" );
    CHECK( alive_set( m, m.world( "w1" ) ) == 0b111 );
    CHECK( alive_set( m, m.world( "w3" ) ) == 0b011 );
    CHECK( alive_set( m, m.world( "w10" ) ) == 0b101 );
    CHECK( alive_set( m, m.world( "w12" ) ) == 0b100 );
    CHECK_THROWS_AS( alive_set( m, 13 ), error );
    CHECK_THROWS_AS( (void)m.world( "w13" ), error );
}

TEST_CASE( "properness" )
{
    CHECK( is_proper( fixtures::frame_file( "proper-frame.json" ) ) );
    CHECK( is_proper( fixtures::frame_file( "crash-frame.json" ) ) );

    auto bad = fixtures::frame_file( "improper-frame.json" );
    auto p = is_proper( bad );
    REQUIRE_FALSE( p );
    CHECK( *p.witness == std::pair{ bad.world( "w'2" ), bad.world( "w'1" ) } );

    auto dead = fixtures::empty_frame( { "a" }, 1 );
    auto q = is_proper( dead );
    REQUIRE_FALSE( q );
    CHECK( *q.witness == std::pair{ 0, 0 } );

    CHECK( is_proper( fixtures::empty_frame( { "a" }, 0 ) ) );
}

TEST_CASE( "saturation" )
{
    auto m = fixtures::frame_file( "crash-frame.json" );
    auto w = [ & ]( const char* name ) { return m.world( name ); };
    CHECK( saturate( m, 0, w( "w1" ) ).size() == 13 );
    CHECK( saturate( m, agent_bit( 0 ), w( "w1" ) ) == std::vector{ w( "w1" ), w( "w2" ), w( "w3" ) } );
    CHECK( saturate( m, agent_bit( 0 ) | agent_bit( 1 ), w( "w1" ) ) == std::vector{ w( "w1" ) } );
    // a is dead in w11, so nothing is a-related to it.
    CHECK( saturate( m, agent_bit( 0 ), w( "w11" ) ).empty() );
}

TEST_CASE( "frame morphisms" )
{
    auto src = fixtures::frame_file( "edge-frame.json" );
    auto dst = fixtures::frame_file( "two-worlds-frame.json" );
    frame_morphism f{ { { 0, 1 } } };
    CHECK( check_frame_morphism( f, src, dst ) );
    CHECK_FALSE( check_frame_morphism( frame_morphism{ { { 0 } } }, src, dst ) );
    CHECK_FALSE( check_frame_morphism( frame_morphism{ { {} } }, src, dst ) );
    CHECK_FALSE( check_frame_morphism( frame_morphism{}, src, dst ) );

    auto id = identity_morphism( dst );
    CHECK( check_frame_morphism( id, dst, dst ) );
    CHECK( compose_morphisms( f, id, src, dst ) == f );
    CHECK( compose_morphisms( identity_morphism( src ), f, src, dst ) == f );

    // Preservation fails when the image of related worlds is unrelated.
    auto two = fixtures::empty_frame( { "a" }, 2 );
    two.relate( 0, 0, 1 );
    two.relate( 0, 0, 0 );
    two.relate( 0, 1, 1 );
    auto apart = fixtures::empty_frame( { "a" }, 2 );
    apart.relate( 0, 0, 0 );
    apart.relate( 0, 1, 1 );
    CHECK_FALSE( check_frame_morphism( frame_morphism{ { { 0 }, { 1 } } }, two, apart ) );
    CHECK_FALSE( check_frame_morphism( frame_morphism{ { { 0 }, { 1 } } }, apart, two ) );
    CHECK( check_frame_morphism( frame_morphism{ { { 0 }, { 0 } } }, two, apart ) );
}

TEST_CASE( "model morphisms compare live atoms" )
{
    vocabulary v( { "a", "b" } );
    auto p = v.add_atom( "p", 0 );
    auto q = v.add_atom( "q", 1 );
    epistemic_model src( v, { "u" } );
    src.relate( 0, 0, 0 );
    epistemic_model dst( v, { "x" } );
    dst.relate( 0, 0, 0 );
    dst.relate( 1, 0, 0 );
    src.labels[ 0 ] = { p };
    dst.labels[ 0 ] = { p, q };
    frame_morphism f{ { { 0 } } };
    CHECK( check_model_morphism( f, src, dst ) );
    dst.labels[ 0 ] = { q };
    CHECK_FALSE( check_model_morphism( f, src, dst ) );
}

TEST_CASE( "isomorphism search" )
{
    rng r( 11 );
    for ( int trial = 0; trial < 200; ++trial )
    {
        auto vocab = random_vocabulary( r );
        auto m = random_model( r, vocab, 6 );
        const auto n = m.world_count();
        std::vector< world_id > perm( n );
        std::iota( perm.begin(), perm.end(), 0 );
        std::shuffle( perm.begin(), perm.end(), r );

        epistemic_model p( vocab, m.world_names );
        for ( std::size_t w = 0; w < n; ++w )
            p.labels[ perm[ w ] ] = m.labels[ w ];
        for ( std::size_t a = 0; a < m.rel.size(); ++a )
            for ( auto [ u, v ] : m.rel[ a ].pairs() )
                p.rel[ a ].set( perm[ u ], perm[ v ] );

        auto iso = check_frame_iso( m, p );
        REQUIRE( iso );
        for ( std::size_t a = 0; a < m.rel.size(); ++a )
            for ( world_id u = 0; u < static_cast< world_id >( n ); ++u )
                for ( world_id v = 0; v < static_cast< world_id >( n ); ++v )
                    CHECK( m.rel[ a ]( u, v ) == p.rel[ a ]( ( *iso )[ u ], ( *iso )[ v ] ) );

        if ( vocab.atom_count() > 0 )
        {
            auto changed = p;
            auto& l = changed.labels[ 0 ];
            if ( l.contains( 0 ) )
                l.erase( 0 );
            else
                l.insert( 0 );
            // Only a genuinely different labelling multiset is guaranteed non-isomorphic.
            std::multiset< atom_set > before( m.labels.begin(), m.labels.end() );
            std::multiset< atom_set > after( changed.labels.begin(), changed.labels.end() );
            if ( before != after )
                CHECK_FALSE( check_frame_iso( m, changed ) );
        }
    }
}
