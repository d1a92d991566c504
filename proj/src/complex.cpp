#include "kb4/complex.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace kb4
{

namespace
{

std::string simplex_string( const simplex& s )
{
    std::string out = "{";
    for ( std::size_t i = 0; i < s.size(); ++i )
        out += ( i ? "," : "" ) + std::to_string( s[ i ] );
    return out + "}";
}

simplex sorted( simplex s )
{
    std::sort( s.begin(), s.end() );
    return s;
}

bool subset_of( const simplex& sub, const simplex& sup )
{
    return std::includes( sup.begin(), sup.end(), sub.begin(), sub.end() );
}

} // namespace

const vertex* chromatic_complex::find_vertex( int id ) const
{
    auto it = std::lower_bound( vertices.begin(), vertices.end(), id,
                                []( const vertex& v, int key ) { return v.id < key; } );
    if ( it != vertices.end() && it->id == id )
        return &*it;
    // Unsorted (not yet canonicalized) input.
    for ( const auto& v : vertices )
        if ( v.id == id )
            return &v;
    return nullptr;
}

agent_id chromatic_complex::colour( int id ) const
{
    if ( const auto* v = find_vertex( id ) )
        return v->colour;
    throw error( "unknown vertex " + std::to_string( id ) );
}

agent_set chromatic_complex::colours( const simplex& s ) const
{
    agent_set out = 0;
    for ( auto v : s )
        out |= agent_bit( colour( v ) );
    return out;
}

std::optional< int > chromatic_complex::vertex_of_colour( const simplex& s, agent_id a ) const
{
    for ( auto v : s )
        if ( colour( v ) == a )
            return v;
    return std::nullopt;
}

std::string chromatic_complex::facet_name( std::size_t i ) const
{
    if ( i < facet_names.size() && !facet_names[ i ].empty() )
        return facet_names[ i ];
    return "#" + std::to_string( i );
}

std::optional< std::size_t > chromatic_complex::find_facet( std::string_view key ) const
{
    for ( std::size_t i = 0; i < facet_names.size(); ++i )
        if ( facet_names[ i ] == key )
            return i;

    if ( !key.empty() && key.front() == '#' )
        key.remove_prefix( 1 );
    std::size_t index = 0;
    auto [ end, ec ] = std::from_chars( key.data(), key.data() + key.size(), index );
    if ( ec == std::errc{} && end == key.data() + key.size() && !key.empty() && index < facets.size() )
        return index;
    return std::nullopt;
}

bool chromatic_complex::is_simplex( const simplex& s ) const
{
    auto key = sorted( s );
    return std::any_of( facets.begin(), facets.end(), [ & ]( const simplex& f ) { return subset_of( key, f ); } );
}

std::vector< std::size_t > chromatic_complex::facets_containing( const simplex& s ) const
{
    auto key = sorted( s );
    std::vector< std::size_t > out;
    for ( std::size_t i = 0; i < facets.size(); ++i )
        if ( subset_of( key, facets[ i ] ) )
            out.push_back( i );
    return out;
}

std::string to_string( complex_fault f )
{
    switch ( f )
    {
    case complex_fault::duplicate_vertex: return "duplicate vertex";
    case complex_fault::unknown_colour: return "unknown colour";
    case complex_fault::unknown_vertex: return "unknown vertex";
    case complex_fault::empty_facet: return "empty facet";
    case complex_fault::colour_clash: return "colour clash";
    case complex_fault::non_maximal: return "non-maximal facet";
    case complex_fault::orphan_vertex: return "orphan vertex";
    case complex_fault::label_mismatch: return "label mismatch";
    }
    return "?";
}

std::vector< complex_violation > validate_complex( const chromatic_complex& c )
{
    std::vector< complex_violation > out;
    auto report = [ & ]( complex_fault f, std::string detail ) { out.push_back( { f, std::move( detail ) } ); };

    std::set< int > ids;
    for ( const auto& v : c.vertices )
    {
        if ( !ids.insert( v.id ).second )
            report( complex_fault::duplicate_vertex, "vertex " + std::to_string( v.id ) + " declared twice" );
        if ( v.colour < 0 || static_cast< std::size_t >( v.colour ) >= c.vocab.agent_count() )
            report( complex_fault::unknown_colour, "vertex " + std::to_string( v.id ) + " has no valid colour" );
    }

    if ( !c.facet_names.empty() && c.facet_names.size() != c.facets.size() )
        report( complex_fault::label_mismatch, "facet name count differs from facet count" );

    std::set< int > used;
    for ( std::size_t i = 0; i < c.facets.size(); ++i )
    {
        const auto& facet = c.facets[ i ];
        const auto name = c.facet_name( i );
        if ( facet.empty() )
        {
            report( complex_fault::empty_facet, "facet " + name + " is empty" );
            continue;
        }

        agent_set seen = 0;
        for ( auto v : facet )
        {
            used.insert( v );
            if ( !ids.contains( v ) )
            {
                report( complex_fault::unknown_vertex, "facet " + name + " uses undeclared vertex " + std::to_string( v ) );
                continue;
            }
            auto a = c.colour( v );
            if ( a < 0 || static_cast< std::size_t >( a ) >= c.vocab.agent_count() )
                continue;
            if ( contains( seen, a ) )
            {
                report( complex_fault::colour_clash,
                        "facet " + name + " has two vertices coloured " + c.vocab.agent_name( a ) );
            }
            seen |= agent_bit( a );
        }
        if ( std::set< int >( facet.begin(), facet.end() ).size() != facet.size() )
            report( complex_fault::duplicate_vertex, "facet " + name + " repeats a vertex" );
    }

    for ( std::size_t i = 0; i < c.facets.size(); ++i )
    {
        if ( c.facets[ i ].empty() )
            continue;
        auto x = sorted( c.facets[ i ] );
        for ( std::size_t j = 0; j < c.facets.size(); ++j )
        {
            if ( i == j )
                continue;
            auto y = sorted( c.facets[ j ] );
            // Equal facets are reported once, on the later index.
            if ( subset_of( x, y ) && ( x != y || i > j ) )
            {
                report( complex_fault::non_maximal, "facet " + c.facet_name( i ) + " " + simplex_string( x ) +
                                                        " is contained in facet " + c.facet_name( j ) );
                break;
            }
        }
    }

    for ( const auto& v : c.vertices )
        if ( !used.contains( v.id ) )
            report( complex_fault::orphan_vertex, "vertex " + std::to_string( v.id ) + " lies in no facet" );

    return out;
}

std::vector< complex_violation > validate_model( const simplicial_model& m )
{
    auto out = validate_complex( m.complex );
    if ( m.labels.size() != m.complex.facets.size() )
        out.push_back( { complex_fault::label_mismatch, "label count differs from facet count" } );
    for ( std::size_t i = 0; i < m.labels.size(); ++i )
        for ( auto p : m.labels[ i ] )
            if ( p < 0 || static_cast< std::size_t >( p ) >= m.vocab().atom_count() )
                out.push_back( { complex_fault::label_mismatch,
                                 "facet " + m.complex.facet_name( i ) + " uses an undeclared atom" } );
    return out;
}

std::vector< simplex > facets_from_generators( const chromatic_complex& c, std::vector< simplex > generators )
{
    for ( auto& g : generators )
    {
        g = sorted( std::move( g ) );
        g.erase( std::unique( g.begin(), g.end() ), g.end() );
        agent_set seen = 0;
        for ( auto v : g )
        {
            auto a = c.colour( v );
            if ( contains( seen, a ) )
                throw error( "generator " + simplex_string( g ) + " repeats colour " + c.vocab.agent_name( a ) );
            seen |= agent_bit( a );
        }
    }

    // Larger sets first, so a set only needs comparing against kept ones.
    std::sort( generators.begin(), generators.end(), []( const simplex& x, const simplex& y ) {
        return x.size() != y.size() ? x.size() > y.size() : x < y;
    } );
    generators.erase( std::unique( generators.begin(), generators.end() ), generators.end() );

    std::vector< simplex > kept;
    for ( auto& g : generators )
    {
        if ( g.empty() )
            continue;
        bool absorbed = std::any_of( kept.begin(), kept.end(), [ & ]( const simplex& k ) { return subset_of( g, k ); } );
        if ( !absorbed )
            kept.push_back( std::move( g ) );
    }
    std::sort( kept.begin(), kept.end() );
    return kept;
}

namespace
{

std::vector< std::size_t > canonical_order( chromatic_complex& c )
{
    std::sort( c.vertices.begin(), c.vertices.end(), []( const vertex& x, const vertex& y ) { return x.id < y.id; } );
    for ( auto& f : c.facets )
        std::sort( f.begin(), f.end() );

    std::vector< std::size_t > order( c.facets.size() );
    std::iota( order.begin(), order.end(), 0 );
    std::stable_sort( order.begin(), order.end(),
                      [ & ]( std::size_t i, std::size_t j ) { return c.facets[ i ] < c.facets[ j ]; } );

    auto permute = [ & ]< typename T >( std::vector< T >& v ) {
        if ( v.size() != order.size() )
            return;
        std::vector< T > out;
        out.reserve( v.size() );
        for ( auto i : order )
            out.push_back( std::move( v[ i ] ) );
        v = std::move( out );
    };
    permute( c.facets );
    permute( c.facet_names );
    return order;
}

} // namespace

void canonicalize( chromatic_complex& c )
{
    canonical_order( c );
}

void canonicalize( simplicial_model& m )
{
    auto order = canonical_order( m.complex );
    if ( m.labels.size() != order.size() )
        return;
    std::vector< atom_set > labels;
    labels.reserve( order.size() );
    for ( auto i : order )
        labels.push_back( std::move( m.labels[ i ] ) );
    m.labels = std::move( labels );
}

purity is_pure( const chromatic_complex& c )
{
    if ( c.facets.empty() )
        return { true, -1 };
    auto size = c.facets.front().size();
    for ( const auto& f : c.facets )
        if ( f.size() != size )
            return { false, -1 };
    return { true, static_cast< int >( size ) - 1 };
}

simplex subface( const chromatic_complex& c, const simplex& facet, agent_set u )
{
    if ( !is_subset( u, c.colours( facet ) ) )
        throw error( "colours " + c.vocab.agents_string( u ) + " do not all occur in " + simplex_string( facet ) );
    simplex out;
    for ( auto v : facet )
        if ( contains( u, c.colour( v ) ) )
            out.push_back( v );
    return sorted( std::move( out ) );
}

int simplicial_map::operator()( int v ) const
{
    auto it = vertex_map.find( v );
    if ( it == vertex_map.end() )
        throw error( "map is undefined on vertex " + std::to_string( v ) );
    return it->second;
}

simplex simplicial_map::image( const simplex& s ) const
{
    simplex out;
    out.reserve( s.size() );
    for ( auto v : s )
        out.push_back( ( *this )( v ) );
    std::sort( out.begin(), out.end() );
    out.erase( std::unique( out.begin(), out.end() ), out.end() );
    return out;
}

simplicial_map identity_map( const chromatic_complex& c )
{
    simplicial_map f;
    for ( const auto& v : c.vertices )
        f.vertex_map.emplace( v.id, v.id );
    return f;
}

simplicial_map compose( const simplicial_map& first, const simplicial_map& second )
{
    simplicial_map out;
    for ( auto [ v, w ] : first.vertex_map )
        out.vertex_map.emplace( v, second( w ) );
    return out;
}

check_result check_simplicial_map( const simplicial_map& f, const chromatic_complex& src, const chromatic_complex& dst )
{
    if ( src.vocab.agent_names() != dst.vocab.agent_names() )
        return check_result::fail( "source and target are coloured by different agent sets" );
    for ( const auto& v : src.vertices )
    {
        auto it = f.vertex_map.find( v.id );
        if ( it == f.vertex_map.end() )
            return check_result::fail( "vertex " + std::to_string( v.id ) + " has no image" );
        const auto* target = dst.find_vertex( it->second );
        if ( !target )
            return check_result::fail( "vertex " + std::to_string( v.id ) + " maps to unknown vertex " +
                                       std::to_string( it->second ) );
        if ( target->colour != v.colour )
            return check_result::fail( "vertex " + std::to_string( v.id ) + " coloured " +
                                       src.vocab.agent_name( v.colour ) + " maps to vertex " +
                                       std::to_string( target->id ) + " coloured " +
                                       dst.vocab.agent_name( target->colour ) );
    }
    for ( std::size_t i = 0; i < src.facets.size(); ++i )
    {
        auto img = f.image( src.facets[ i ] );
        if ( !dst.is_simplex( img ) )
            return check_result::fail( "image " + simplex_string( img ) + " of facet " + src.facet_name( i ) +
                                       " is not a simplex of the target" );
    }
    return {};
}

check_result check_simplicial_model_morphism( const simplicial_map& f, const simplicial_model& src,
                                              const simplicial_model& dst )
{
    if ( auto r = check_simplicial_map( f, src.complex, dst.complex ); !r )
        return r;
    if ( src.vocab() != dst.vocab() )
        return check_result::fail( "source and target declare different atoms" );

    const auto& vocab = src.vocab();
    for ( std::size_t x = 0; x < src.complex.facets.size(); ++x )
    {
        auto alive = src.complex.colours( src.complex.facets[ x ] );
        auto here = restrict_to( src.labels.at( x ), alive, vocab );
        for ( auto y : dst.complex.facets_containing( f.image( src.complex.facets[ x ] ) ) )
        {
            if ( restrict_to( dst.labels.at( y ), alive, vocab ) != here )
                return check_result::fail( "labels of facet " + src.complex.facet_name( x ) + " and facet " +
                                           dst.complex.facet_name( y ) + " disagree on atoms of " +
                                           vocab.agents_string( alive ) );
        }
    }
    return {};
}

} // namespace kb4
