#include "kb4/frame.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace kb4
{

std::vector< std::pair< world_id, world_id > > relation::pairs() const
{
    std::vector< std::pair< world_id, world_id > > out;
    for ( std::size_t u = 0; u < _n; ++u )
        for ( std::size_t v = 0; v < _n; ++v )
            if ( _bits[ u * _n + v ] )
                out.emplace_back( static_cast< world_id >( u ), static_cast< world_id >( v ) );
    return out;
}

std::vector< world_id > relation::successors( world_id u ) const
{
    std::vector< world_id > out;
    for ( std::size_t v = 0; v < _n; ++v )
        if ( _bits[ index( u, static_cast< world_id >( v ) ) ] )
            out.push_back( static_cast< world_id >( v ) );
    return out;
}

bool relation::empty() const
{
    return std::none_of( _bits.begin(), _bits.end(), []( auto b ) { return b != 0; } );
}

epistemic_model::epistemic_model( vocabulary v, std::vector< std::string > names )
    : vocab{ std::move( v ) }, world_names{ std::move( names ) }, labels( world_names.size() ),
      rel( vocab.agent_count(), relation( world_names.size() ) )
{
}

std::optional< world_id > epistemic_model::find_world( std::string_view name ) const
{
    auto it = std::find( world_names.begin(), world_names.end(), name );
    if ( it == world_names.end() )
        return std::nullopt;
    return static_cast< world_id >( it - world_names.begin() );
}

world_id epistemic_model::world( std::string_view name ) const
{
    if ( auto w = find_world( name ) )
        return *w;
    throw error( "unknown world '" + std::string( name ) + "'" );
}

void epistemic_model::relate( agent_id a, world_id u, world_id v )
{
    rel.at( a ).set( u, v );
    rel.at( a ).set( v, u );
}

agent_set epistemic_model::alive( world_id w ) const
{
    agent_set out = 0;
    for ( std::size_t a = 0; a < rel.size(); ++a )
        if ( rel[ a ]( w, w ) )
            out |= agent_bit( static_cast< agent_id >( a ) );
    return out;
}

std::vector< per_violation > validate_per( const epistemic_model& m )
{
    std::vector< per_violation > out;
    const auto n = static_cast< world_id >( m.world_count() );
    for ( std::size_t a = 0; a < m.rel.size(); ++a )
    {
        const auto& r = m.rel[ a ];
        auto sym = [ & ]( world_id u, world_id v ) { return r( u, v ) || r( v, u ); };
        std::set< std::pair< world_id, world_id > > reported;

        for ( world_id u = 0; u < n; ++u )
            for ( world_id v = 0; v < n; ++v )
                if ( r( u, v ) && !r( v, u ) && reported.emplace( v, u ).second )
                    out.push_back( { per_fault::symmetry, static_cast< agent_id >( a ), v, u } );

        // Transitivity is judged on the symmetric closure, so a lone (u,v)
        // also reports the missing loops.
        for ( world_id u = 0; u < n; ++u )
            for ( world_id v = 0; v < n; ++v )
            {
                if ( !sym( u, v ) )
                    continue;
                for ( world_id w = 0; w < n; ++w )
                    if ( sym( v, w ) && !r( u, w ) && reported.emplace( u, w ).second )
                        out.push_back( { per_fault::transitivity, static_cast< agent_id >( a ), u, w } );
            }
    }
    return out;
}

relation per_closure( const relation& r )
{
    relation out = r;
    const auto n = static_cast< world_id >( r.size() );
    for ( world_id u = 0; u < n; ++u )
        for ( world_id v = 0; v < n; ++v )
            if ( r( u, v ) )
                out.set( v, u );
    // Warshall
    for ( world_id k = 0; k < n; ++k )
        for ( world_id u = 0; u < n; ++u )
            if ( out( u, k ) )
                for ( world_id v = 0; v < n; ++v )
                    if ( out( k, v ) )
                        out.set( u, v );
    return out;
}

void close_relations( epistemic_model& m )
{
    for ( auto& r : m.rel )
        r = per_closure( r );
}

agent_set alive_set( const epistemic_model& m, world_id w )
{
    if ( w < 0 || static_cast< std::size_t >( w ) >= m.world_count() )
        throw error( "unknown world " + std::to_string( w ) );
    return m.alive( w );
}

properness is_proper( const epistemic_model& m )
{
    const auto n = static_cast< world_id >( m.world_count() );
    for ( world_id w = 0; w < n; ++w )
    {
        auto live = m.alive( w );
        if ( live == 0 )
            return { false, std::pair{ w, w } };
        for ( world_id v = 0; v < n; ++v )
        {
            if ( v == w )
                continue;
            bool distinguished = false;
            for ( auto a : members( live ) )
                if ( !m.related( a, w, v ) )
                {
                    distinguished = true;
                    break;
                }
            if ( !distinguished )
                return { false, std::pair{ w, v } };
        }
    }
    return { true, std::nullopt };
}

std::vector< world_id > saturate( const epistemic_model& m, agent_set u, world_id w )
{
    if ( w < 0 || static_cast< std::size_t >( w ) >= m.world_count() )
        throw error( "unknown world " + std::to_string( w ) );
    const auto agents = members( u );
    std::vector< world_id > out;
    for ( world_id v = 0; v < static_cast< world_id >( m.world_count() ); ++v )
        if ( std::all_of( agents.begin(), agents.end(), [ & ]( agent_id a ) { return m.related( a, w, v ); } ) )
            out.push_back( v );
    return out;
}

frame_morphism identity_morphism( const epistemic_model& m )
{
    frame_morphism f;
    for ( world_id u = 0; u < static_cast< world_id >( m.world_count() ); ++u )
        f.image.push_back( saturate( m, m.alive( u ), u ) );
    return f;
}

check_result check_frame_morphism( const frame_morphism& f, const epistemic_model& src, const epistemic_model& dst )
{
    if ( src.vocab.agent_names() != dst.vocab.agent_names() )
        return check_result::fail( "source and target have different agent sets" );
    if ( f.image.size() != src.world_count() )
        return check_result::fail( "morphism is not total on the source worlds" );

    const auto n = static_cast< world_id >( src.world_count() );
    for ( world_id u = 0; u < n; ++u )
    {
        const auto& img = f.image[ u ];
        if ( img.empty() )
            return check_result::fail( "image of " + src.world_names[ u ] + " is empty" );
        for ( auto v : img )
            if ( v < 0 || static_cast< std::size_t >( v ) >= dst.world_count() )
                return check_result::fail( "image of " + src.world_names[ u ] + " names an unknown world" );
    }

    for ( std::size_t a = 0; a < src.rel.size(); ++a )
        for ( auto [ u, v ] : src.rel[ a ].pairs() )
            for ( auto u2 : f.image[ u ] )
                for ( auto v2 : f.image[ v ] )
                    if ( !dst.rel[ a ]( u2, v2 ) )
                        return check_result::fail( src.world_names[ u ] + " ~" + src.vocab.agent_name( static_cast< agent_id >( a ) ) +
                                                   " " + src.world_names[ v ] + " but " + dst.world_names[ u2 ] +
                                                   " and " + dst.world_names[ v2 ] + " are not related" );

    for ( world_id u = 0; u < n; ++u )
    {
        auto img = f.image[ u ];
        std::sort( img.begin(), img.end() );
        img.erase( std::unique( img.begin(), img.end() ), img.end() );
        auto live = src.alive( u );
        bool generated = std::any_of( img.begin(), img.end(),
                                      [ & ]( world_id w ) { return saturate( dst, live, w ) == img; } );
        if ( !generated )
            return check_result::fail( "image of " + src.world_names[ u ] + " is not sat_{" +
                                       src.vocab.agents_string( live ) + "} of any of its members" );
    }
    return {};
}

check_result check_model_morphism( const frame_morphism& f, const epistemic_model& src, const epistemic_model& dst )
{
    if ( auto r = check_frame_morphism( f, src, dst ); !r )
        return r;
    if ( src.vocab != dst.vocab )
        return check_result::fail( "source and target declare different atoms" );
    for ( world_id u = 0; u < static_cast< world_id >( src.world_count() ); ++u )
    {
        auto live = src.alive( u );
        auto here = restrict_to( src.labels[ u ], live, src.vocab );
        for ( auto v : f.image[ u ] )
            if ( restrict_to( dst.labels[ v ], live, src.vocab ) != here )
                return check_result::fail( "labels of " + src.world_names[ u ] + " and " + dst.world_names[ v ] +
                                           " disagree on atoms of " + src.vocab.agents_string( live ) );
    }
    return {};
}

std::vector< world_id > composite_image( const epistemic_model& src, const epistemic_model& target, world_id u,
                                         world_id w )
{
    return saturate( target, src.alive( u ), w );
}

frame_morphism compose_morphisms( const frame_morphism& f, const frame_morphism& g, const epistemic_model& src,
                                  const epistemic_model& target )
{
    frame_morphism out;
    out.image.reserve( f.image.size() );
    for ( world_id u = 0; u < static_cast< world_id >( f.image.size() ); ++u )
    {
        auto v = f.image.at( u ).at( 0 );
        auto w = g.image.at( v ).at( 0 );
        out.image.push_back( composite_image( src, target, u, w ) );
    }
    return out;
}

namespace
{

using world_signature = std::tuple< agent_set, atom_set, std::vector< std::size_t > >;

world_signature signature( const epistemic_model& m, world_id w )
{
    std::vector< std::size_t > degrees;
    for ( const auto& r : m.rel )
        degrees.push_back( r.successors( w ).size() );
    return { m.alive( w ), m.labels[ w ], std::move( degrees ) };
}

class iso_search
{
public:
    iso_search( const epistemic_model& m, const epistemic_model& n ) : _m{ m }, _n{ n }
    {
        for ( world_id w = 0; w < static_cast< world_id >( m.world_count() ); ++w )
            _sig_m.push_back( signature( m, w ) );
        for ( world_id w = 0; w < static_cast< world_id >( n.world_count() ); ++w )
            _sig_n.push_back( signature( n, w ) );
        _map.assign( m.world_count(), -1 );
        _used.assign( n.world_count(), false );
    }

    std::optional< std::vector< world_id > > run()
    {
        auto a = _sig_m;
        auto b = _sig_n;
        std::sort( a.begin(), a.end() );
        std::sort( b.begin(), b.end() );
        if ( a != b )
            return std::nullopt;
        if ( extend( 0 ) )
            return _map;
        return std::nullopt;
    }

private:
    bool consistent( world_id u, world_id image ) const
    {
        for ( world_id v = 0; v <= u; ++v )
        {
            auto v_image = v == u ? image : _map[ v ];
            for ( std::size_t a = 0; a < _m.rel.size(); ++a )
                if ( _m.rel[ a ]( u, v ) != _n.rel[ a ]( image, v_image ) ||
                     _m.rel[ a ]( v, u ) != _n.rel[ a ]( v_image, image ) )
                    return false;
        }
        return true;
    }

    bool extend( world_id u )
    {
        if ( u == static_cast< world_id >( _map.size() ) )
            return true;
        for ( world_id cand = 0; cand < static_cast< world_id >( _used.size() ); ++cand )
        {
            if ( _used[ cand ] || _sig_n[ cand ] != _sig_m[ u ] || !consistent( u, cand ) )
                continue;
            _map[ u ] = cand;
            _used[ cand ] = true;
            if ( extend( u + 1 ) )
                return true;
            _used[ cand ] = false;
            _map[ u ] = -1;
        }
        return false;
    }

    const epistemic_model& _m;
    const epistemic_model& _n;
    std::vector< world_signature > _sig_m, _sig_n;
    std::vector< world_id > _map;
    std::vector< bool > _used;
};

} // namespace

std::optional< std::vector< world_id > > check_frame_iso( const epistemic_model& m, const epistemic_model& n )
{
    if ( m.world_count() != n.world_count() || m.rel.size() != n.rel.size() ||
         m.vocab != n.vocab )
        return std::nullopt;
    return iso_search( m, n ).run();
}

} // namespace kb4
