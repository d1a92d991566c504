#include "kb4/functors.hpp"

#include <algorithm>
#include <set>

namespace kb4
{

namespace
{

epistemic_model kappa_frame( const chromatic_complex& c )
{
    std::vector< std::string > names;
    for ( std::size_t i = 0; i < c.facets.size(); ++i )
        names.push_back( c.facet_name( i ) );
    epistemic_model m( c.vocab, std::move( names ) );

    // Colour -> vertex per facet, so X ~a Y iff both carry the same a-vertex.
    const auto agents = c.vocab.agent_count();
    std::vector< std::vector< int > > by_colour( c.facets.size(), std::vector< int >( agents, -1 ) );
    for ( std::size_t i = 0; i < c.facets.size(); ++i )
        for ( auto v : c.facets[ i ] )
            by_colour[ i ][ c.colour( v ) ] = v;

    for ( std::size_t a = 0; a < agents; ++a )
        for ( std::size_t x = 0; x < c.facets.size(); ++x )
            for ( std::size_t y = 0; y < c.facets.size(); ++y )
                if ( by_colour[ x ][ a ] >= 0 && by_colour[ x ][ a ] == by_colour[ y ][ a ] )
                    m.rel[ a ].set( static_cast< world_id >( x ), static_cast< world_id >( y ) );
    return m;
}

// Least member of [w]_a.
world_id class_representative( const epistemic_model& m, agent_id a, world_id w )
{
    for ( world_id v = 0; v < static_cast< world_id >( m.world_count() ); ++v )
        if ( m.related( a, w, v ) )
            return v;
    throw error( "agent " + m.vocab.agent_name( a ) + " is dead in " + m.world_names.at( w ) );
}

} // namespace

epistemic_model kappa( const chromatic_complex& c )
{
    return kappa_frame( c );
}

epistemic_model kappa( const simplicial_model& s )
{
    auto m = kappa_frame( s.complex );
    m.labels = s.labels;
    m.labels.resize( m.world_count() );
    return m;
}

frame_morphism kappa( const simplicial_map& f, const chromatic_complex& src, const chromatic_complex& dst )
{
    frame_morphism out;
    out.image.reserve( src.facets.size() );
    for ( const auto& x : src.facets )
    {
        std::vector< world_id > img;
        for ( auto z : dst.facets_containing( f.image( x ) ) )
            img.push_back( static_cast< world_id >( z ) );
        out.image.push_back( std::move( img ) );
    }
    return out;
}

int sigma_construction::vertex_at( const epistemic_model& m, agent_id a, world_id w ) const
{
    return vertex_of_class.at( { a, class_representative( m, a, w ) } );
}

sigma_construction build_sigma( const epistemic_model& m )
{
    if ( auto p = is_proper( m ); !p )
    {
        auto [ w, v ] = *p.witness;
        if ( w == v )
            throw error( "model is not proper: no agent is alive in " + m.world_names[ w ] );
        throw error( "model is not proper: no agent alive in " + m.world_names[ w ] + " distinguishes it from " +
                     m.world_names[ v ] );
    }

    sigma_construction out;
    auto& c = out.model.complex;
    c.vocab = m.vocab;

    // Vertices are numbered by (representative world, agent).
    for ( world_id w = 0; w < static_cast< world_id >( m.world_count() ); ++w )
        for ( auto a : members( m.alive( w ) ) )
            if ( class_representative( m, a, w ) == w )
            {
                auto id = static_cast< int >( c.vertices.size() );
                out.vertex_of_class.emplace( std::pair{ a, w }, id );
                c.vertices.push_back( { id, a, m.world_names[ w ] } );
            }

    for ( world_id w = 0; w < static_cast< world_id >( m.world_count() ); ++w )
    {
        simplex facet;
        for ( auto a : members( m.alive( w ) ) )
            facet.push_back( out.vertex_at( m, a, w ) );
        std::sort( facet.begin(), facet.end() );
        c.facets.push_back( std::move( facet ) );
        c.facet_names.push_back( m.world_names[ w ] );
        out.model.labels.push_back( m.labels.at( w ) );
    }

    // Canonical facet order; remember where each world's facet went.
    std::vector< simplex > by_world = c.facets;
    canonicalize( out.model );
    out.facet_of_world.resize( m.world_count() );
    for ( std::size_t w = 0; w < by_world.size(); ++w )
    {
        auto it = std::find( c.facets.begin(), c.facets.end(), by_world[ w ] );
        out.facet_of_world[ w ] = static_cast< std::size_t >( it - c.facets.begin() );
    }
    return out;
}

simplicial_model sigma( const epistemic_model& m )
{
    return build_sigma( m ).model;
}

simplicial_map sigma( const frame_morphism& f, const epistemic_model& src, const epistemic_model& dst )
{
    auto from = build_sigma( src );
    auto to = build_sigma( dst );
    simplicial_map out;
    for ( auto [ key, id ] : from.vertex_of_class )
    {
        auto [ a, w ] = key;
        auto target_world = f.image.at( w ).at( 0 );
        out.vertex_map.emplace( id, to.vertex_at( dst, a, target_world ) );
    }
    return out;
}

std::optional< std::vector< world_id > > roundtrip_frame( const epistemic_model& m )
{
    auto construction = build_sigma( m );
    auto back = kappa( construction.model );

    std::vector< world_id > witness;
    for ( auto f : construction.facet_of_world )
        witness.push_back( static_cast< world_id >( f ) );

    std::set< world_id > distinct( witness.begin(), witness.end() );
    if ( distinct.size() != m.world_count() || back.world_count() != m.world_count() )
        return std::nullopt;

    for ( world_id u = 0; u < static_cast< world_id >( m.world_count() ); ++u )
    {
        if ( m.labels[ u ] != back.labels[ witness[ u ] ] )
            return std::nullopt;
        for ( world_id v = 0; v < static_cast< world_id >( m.world_count() ); ++v )
            for ( std::size_t a = 0; a < m.rel.size(); ++a )
                if ( m.rel[ a ]( u, v ) != back.rel[ a ]( witness[ u ], witness[ v ] ) )
                    return std::nullopt;
    }
    return witness;
}

std::optional< simplicial_map > roundtrip_complex( const simplicial_model& s )
{
    const auto& c = s.complex;
    auto frame = kappa( s );
    auto construction = build_sigma( frame );
    const auto& image_complex = construction.model.complex;

    simplicial_map forward;
    for ( std::size_t z = 0; z < c.facets.size(); ++z )
        for ( auto u : c.facets[ z ] )
        {
            auto target = construction.vertex_at( frame, c.colour( u ), static_cast< world_id >( z ) );
            auto [ it, fresh ] = forward.vertex_map.emplace( u, target );
            if ( !fresh && it->second != target )
                return std::nullopt; // two facets through u disagree
        }

    // Bijective and chromatic.
    if ( forward.vertex_map.size() != c.vertices.size() || image_complex.vertices.size() != c.vertices.size() )
        return std::nullopt;
    std::set< int > hit;
    for ( auto [ u, v ] : forward.vertex_map )
    {
        const auto* target = image_complex.find_vertex( v );
        if ( !target || target->colour != c.colour( u ) || !hit.insert( v ).second )
            return std::nullopt;
    }

    // Facets correspond one to one, labels included; the simplex families
    // then agree as downward closures.
    std::set< std::pair< simplex, atom_set > > expected;
    for ( std::size_t y = 0; y < image_complex.facets.size(); ++y )
        expected.emplace( image_complex.facets[ y ], construction.model.labels[ y ] );
    std::set< std::pair< simplex, atom_set > > mapped;
    for ( std::size_t x = 0; x < c.facets.size(); ++x )
        mapped.emplace( forward.image( c.facets[ x ] ), x < s.labels.size() ? s.labels[ x ] : atom_set{} );
    if ( expected != mapped )
        return std::nullopt;
    return forward;
}

std::optional< simplicial_map > roundtrip_complex( const chromatic_complex& c )
{
    return roundtrip_complex( simplicial_model{ c, std::vector< atom_set >( c.facets.size() ) } );
}

} // namespace kb4
