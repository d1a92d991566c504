#include "kb4/vocabulary.hpp"

#include <doctest.h>

using namespace kb4;

TEST_CASE( "agents are validated" )
{
    CHECK_THROWS_AS( vocabulary( { "a", "a" } ), error );
    CHECK_THROWS_AS( vocabulary( { "" } ), error );
    vocabulary v( { "a", "b" } );
    CHECK( v.agent_count() == 2 );
    CHECK( v.all_agents() == 0b11 );
    CHECK( v.agent( "b" ) == 1 );
    CHECK_THROWS_AS( (void)v.agent( "z" ), error );
}

TEST_CASE( "atoms are owned and deduplicated" )
{
    vocabulary v( { "a", "b" } );
    auto p = v.add_atom( "p", 0 );
    CHECK( v.add_atom( "p", 0 ) == p );
    auto q = v.add_atom( "p", 1 );
    CHECK( q != p );
    CHECK( v.atom_string( q ) == "p@b" );
    CHECK( v.parse_atom( "p@b" ) == q );
    CHECK_THROWS_AS( (void)v.parse_atom( "p" ), error );
    CHECK_THROWS_AS( (void)v.parse_atom( "p@z" ), error );
    CHECK_THROWS_AS( (void)v.parse_atom( "r@a" ), error );
}

TEST_CASE( "atoms of a group and restriction" )
{
    vocabulary v( { "a", "b", "c" } );
    auto p = v.add_atom( "p", 0 );
    auto q = v.add_atom( "q", 1 );
    auto r = v.add_atom( "r", 2 );
    CHECK( v.atoms_of( agent_bit( 0 ) | agent_bit( 2 ) ) == atom_set{ p, r } );
    CHECK( restrict_to( { p, q, r }, agent_bit( 1 ), v ) == atom_set{ q } );
    CHECK( v.agents_string( agent_bit( 0 ) | agent_bit( 2 ) ) == "a,c" );
}

TEST_CASE( "agent sets as bitmasks" )
{
    CHECK( members( 0b101 ) == std::vector< agent_id >{ 0, 2 } );
    CHECK( is_subset( 0b001, 0b101 ) );
    CHECK_FALSE( is_subset( 0b010, 0b101 ) );
    CHECK( popcount( 0b111 ) == 3 );
}
