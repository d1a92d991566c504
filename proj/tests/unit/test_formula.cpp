#include "kb4/formula.hpp"
#include "kb4/generators.hpp"

#include <doctest.h>

using namespace kb4;

namespace
{

vocabulary abc()
{
    vocabulary v( { "a", "b", "c" } );
    v.add_atom( "p", 0 );
    v.add_atom( "q", 1 );
    v.add_atom( "input1", 0 );
    return v;
}

} // namespace

TEST_CASE( "derived connectives expand on construction" )
{
    auto v = abc();
    auto p = formula::atom( 0 );
    auto q = formula::atom( 1 );
    CHECK( parse_formula( "p@a | q@b", v ) ==
           formula::negation( formula::conjunction( formula::negation( p ), formula::negation( q ) ) ) );
    CHECK( parse_formula( "p@a -> q@b", v ) == formula::disjunction( formula::negation( p ), q ) );
    CHECK( parse_formula( "dead a", v ) == formula::knows( 0, formula::bottom() ) );
    CHECK( parse_formula( "alive b", v ) == formula::negation( formula::knows( 1, formula::bottom() ) ) );
    CHECK( parse_formula( "alive{c,a}", v ) == formula::conjunction( formula::alive( 0 ), formula::alive( 2 ) ) );
    CHECK_THROWS_AS( formula::alive_all( 0 ), error );
}

TEST_CASE( "precedence and associativity" )
{
    auto v = abc();
    auto f = [ & ]( const char* s ) { return parse_formula( s, v ); };
    CHECK( f( "p@a & q@b | input1@a" ) == f( "(p@a & q@b) | input1@a" ) );
    CHECK( f( "p@a -> q@b -> input1@a" ) == f( "p@a -> (q@b -> input1@a)" ) );
    CHECK( f( "~K a p@a & q@b" ) == f( "(~(K a p@a)) & q@b" ) );
    CHECK( f( "K a K b p@a" ) == formula::knows( 0, formula::knows( 1, formula::atom( 0 ) ) ) );
    CHECK( f( "!p@a" ) == f( "~p@a" ) );
    CHECK( f( "p@a & q@b & input1@a" ) == f( "(p@a & q@b) & input1@a" ) );
}

TEST_CASE( "atoms named like keywords" )
{
    vocabulary v( { "a" } );
    v.add_atom( "K", 0 );
    v.add_atom( "alive", 0 );
    CHECK( parse_formula( "K@a", v ) == formula::atom( 0 ) );
    CHECK( parse_formula( "K a alive@a", v ) == formula::knows( 0, formula::atom( 1 ) ) );
    CHECK( parse_formula( to_string( formula::knows( 0, formula::atom( 0 ) ), v ), v ) ==
           formula::knows( 0, formula::atom( 0 ) ) );
}

TEST_CASE( "parse errors carry positions" )
{
    auto v = abc();
    auto position = [ & ]( const char* s ) -> std::size_t {
        try
        {
            parse_formula( s, v );
        }
        catch ( const parse_error& e )
        {
            return e.position();
        }
        return 999;
    };
    CHECK( position( "p@a &" ) == 5 );
    CHECK( position( "K z p@a" ) == 2 );
    CHECK( position( "p@a & r@a" ) == 6 );
    CHECK( position( "p@z" ) == 2 );
    CHECK( position( "(p@a" ) == 4 );
    CHECK( position( "p@a )" ) == 4 );
    CHECK( position( "p@a $" ) == 4 );
    CHECK( position( "alive{}" ) == 6 );
}

TEST_CASE( "printing then parsing is the identity" )
{
    rng r( 1 );
    for ( int trial = 0; trial < 2000; ++trial )
    {
        auto vocab = random_vocabulary( r );
        auto f = random_formula( r, vocab, 5 );
        auto text = to_string( f, vocab );
        auto g = parse_formula( text, vocab );
        CHECK( g == f );
        CHECK( to_string( g, vocab ) == text );
    }
}

TEST_CASE( "sugar is printed back" )
{
    auto v = abc();
    CHECK( to_string( parse_formula( "alive a -> K a p@a", v ), v ) == "~alive a | K a p@a" );
    CHECK( to_string( parse_formula( "dead b & true", v ), v ) == "dead b & true" );
    CHECK( to_string( parse_formula( "~(p@a & q@b)", v ), v ) == "~(p@a & q@b)" );
}

TEST_CASE( "depth and size" )
{
    auto v = abc();
    auto f = parse_formula( "K a (p@a & ~q@b)", v );
    CHECK( f.depth() == 3 );
    CHECK( f.size() == 5 );
    CHECK( formula::atom( 0 ).depth() == 0 );
}
