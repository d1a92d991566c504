#include "kb4/vocabulary.hpp"

#include <algorithm>

namespace kb4
{

std::vector< agent_id > members( agent_set s )
{
    std::vector< agent_id > out;
    while ( s != 0 )
    {
        out.push_back( std::countr_zero( s ) );
        s &= s - 1;
    }
    return out;
}

vocabulary::vocabulary( std::vector< std::string > agent_names ) : _agents{ std::move( agent_names ) }
{
    if ( _agents.size() > max_agents )
        throw error( "at most " + std::to_string( max_agents ) + " agents are supported" );

    for ( std::size_t i = 0; i < _agents.size(); ++i )
    {
        const auto& name = _agents[ i ];
        if ( name.empty() || name.find_first_of( "@,{}() \t" ) != std::string::npos )
            throw error( "invalid agent name '" + name + "'" );
        if ( std::find( _agents.begin(), _agents.begin() + i, name ) != _agents.begin() + i )
            throw error( "duplicate agent '" + name + "'" );
    }
}

atom_id vocabulary::add_atom( std::string name, agent_id owner )
{
    if ( owner < 0 || static_cast< std::size_t >( owner ) >= _agents.size() )
        throw error( "atom '" + name + "' has no valid owner" );
    if ( name.empty() || name.find( '@' ) != std::string::npos )
        throw error( "invalid atom name '" + name + "'" );

    auto key = name + "@" + _agents[ owner ];
    if ( auto it = _atom_index.find( key ); it != _atom_index.end() )
        return it->second;

    auto id = static_cast< atom_id >( _atoms.size() );
    _atoms.push_back( { std::move( name ), owner } );
    _atom_index.emplace( std::move( key ), id );
    return id;
}

agent_set vocabulary::all_agents() const
{
    if ( _agents.size() == max_agents )
        return ~agent_set{ 0 };
    return ( agent_set{ 1 } << _agents.size() ) - 1;
}

std::optional< agent_id > vocabulary::find_agent( std::string_view name ) const
{
    auto it = std::find( _agents.begin(), _agents.end(), name );
    if ( it == _agents.end() )
        return std::nullopt;
    return static_cast< agent_id >( it - _agents.begin() );
}

agent_id vocabulary::agent( std::string_view name ) const
{
    if ( auto a = find_agent( name ) )
        return *a;
    throw error( "unknown agent '" + std::string( name ) + "'" );
}

std::optional< atom_id > vocabulary::find_atom( std::string_view name, agent_id owner ) const
{
    if ( owner < 0 || static_cast< std::size_t >( owner ) >= _agents.size() )
        return std::nullopt;
    auto it = _atom_index.find( std::string( name ) + "@" + _agents[ owner ] );
    if ( it == _atom_index.end() )
        return std::nullopt;
    return it->second;
}

std::string vocabulary::atom_string( atom_id p ) const
{
    const auto& at = _atoms.at( p );
    return at.name + "@" + _agents.at( at.owner );
}

atom_id vocabulary::parse_atom( std::string_view text ) const
{
    auto at = text.rfind( '@' );
    if ( at == std::string_view::npos )
        throw error( "atom '" + std::string( text ) + "' is not of the form name@agent" );
    auto owner = find_agent( text.substr( at + 1 ) );
    if ( !owner )
        throw error( "atom '" + std::string( text ) + "' has unknown owner" );
    if ( auto p = find_atom( text.substr( 0, at ), *owner ) )
        return *p;
    throw error( "undeclared atom '" + std::string( text ) + "'" );
}

std::string vocabulary::agents_string( agent_set s ) const
{
    std::string out;
    for ( auto a : members( s ) )
    {
        if ( !out.empty() )
            out += ",";
        out += _agents.at( a );
    }
    return out;
}

atom_set vocabulary::atoms_of( agent_set s ) const
{
    atom_set out;
    for ( std::size_t p = 0; p < _atoms.size(); ++p )
        if ( contains( s, _atoms[ p ].owner ) )
            out.insert( static_cast< atom_id >( p ) );
    return out;
}

atom_set restrict_to( const atom_set& labels, agent_set s, const vocabulary& vocab )
{
    atom_set out;
    for ( auto p : labels )
        if ( contains( s, vocab.atom_at( p ).owner ) )
            out.insert( p );
    return out;
}

} // namespace kb4
