#include "kb4/crashgen.hpp"

#include <algorithm>
#include <cctype>

namespace kb4
{

namespace
{

struct local_state
{
    std::string text; // canonical nested view
    std::set< std::pair< agent_id, std::string > > inputs;
};

using global_state = std::vector< std::pair< agent_id, std::string > >; // (agent, view) of survivors

class crash_enumerator
{
public:
    crash_enumerator( std::size_t agents, int rounds, int max_crashes, std::map< std::pair< agent_id, std::string >, local_state >& views )
        : _agents{ agents }, _rounds{ rounds }, _max_crashes{ max_crashes }, _views{ views }
    {
    }

    void run( const std::vector< std::string >& assignment, std::set< global_state >& out )
    {
        std::vector< local_state > states;
        for ( std::size_t a = 0; a < _agents; ++a )
            states.push_back( { assignment[ a ], { { static_cast< agent_id >( a ), assignment[ a ] } } } );
        round( 1, static_cast< agent_set >( ( agent_set{ 1 } << _agents ) - 1 ), 0, states, out );
    }

private:
    void round( int r, agent_set alive, int crashed, const std::vector< local_state >& states,
                std::set< global_state >& out )
    {
        if ( r > _rounds )
        {
            global_state g;
            for ( auto a : members( alive ) )
            {
                g.emplace_back( a, states[ a ].text );
                _views.emplace( g.back(), states[ a ] );
            }
            out.insert( std::move( g ) );
            return;
        }

        // Subsets of the live agents crash this round, within the budget.
        for ( agent_set crashers = alive;; crashers = ( crashers - 1 ) & alive )
        {
            if ( popcount( crashers ) + crashed <= _max_crashes && crashers != alive )
                deliver( r, alive, crashed, crashers, states, out );
            if ( crashers == 0 )
                break;
        }
    }

    // Picks, for each crasher, the survivors that still receive its message.
    void deliver( int r, agent_set alive, int crashed, agent_set crashers, const std::vector< local_state >& states,
                  std::set< global_state >& out )
    {
        const auto survivors = alive & ~crashers;
        const auto crash_list = members( crashers );
        std::vector< agent_set > receivers( crash_list.size(), 0 );

        auto emit = [ & ] {
            std::vector< local_state > next( states.size() );
            for ( auto a : members( survivors ) )
            {
                local_state s;
                s.text = "{";
                bool first = true;
                for ( std::size_t b = 0; b < _agents; ++b )
                {
                    auto sender = static_cast< agent_id >( b );
                    bool heard = contains( survivors, sender );
                    if ( !heard )
                    {
                        auto it = std::find( crash_list.begin(), crash_list.end(), sender );
                        heard = it != crash_list.end() && contains( receivers[ it - crash_list.begin() ], a );
                    }
                    if ( !heard )
                        continue;
                    s.text += ( first ? "" : "," ) + std::to_string( b ) + ":" + states[ b ].text;
                    first = false;
                    s.inputs.insert( states[ b ].inputs.begin(), states[ b ].inputs.end() );
                }
                s.text += "}";
                next[ a ] = std::move( s );
            }
            round( r + 1, survivors, crashed + popcount( crashers ), next, out );
        };

        // Odometer over receiver subsets of the survivors.
        while ( true )
        {
            emit();
            std::size_t i = 0;
            for ( ; i < receivers.size(); ++i )
            {
                receivers[ i ] = ( receivers[ i ] - survivors ) & survivors;
                if ( receivers[ i ] != 0 )
                    break;
            }
            if ( i == receivers.size() )
                return;
        }
    }

    std::size_t _agents;
    int _rounds;
    int _max_crashes;
    std::map< std::pair< agent_id, std::string >, local_state >& _views;
};

// Agent indices in view strings are replaced by names for display.
std::string display_view( const std::string& text, const vocabulary& vocab )
{
    std::string out;
    for ( std::size_t i = 0; i < text.size(); )
    {
        if ( ( text[ i ] == '{' || text[ i ] == ',' ) && i + 1 < text.size() && std::isdigit( static_cast< unsigned char >( text[ i + 1 ] ) ) )
        {
            auto colon = text.find( ':', i + 1 );
            if ( colon != std::string::npos )
            {
                auto index = std::stoi( text.substr( i + 1, colon - i - 1 ) );
                out += text[ i ];
                out += vocab.agent_name( index ) + ":";
                i = colon + 1;
                continue;
            }
        }
        out += text[ i++ ];
    }
    return out;
}

} // namespace

crash_complex gen_crash_complex( const crash_parameters& p )
{
    vocabulary vocab( p.agents );
    const auto n = p.agents.size();
    if ( n == 0 )
        throw error( "at least one agent is required" );
    if ( p.rounds < 1 )
        throw error( "at least one round is required" );
    if ( p.max_crashes < 0 || static_cast< std::size_t >( p.max_crashes ) >= n )
        throw error( "the crash bound must leave at least one survivor (max-crashes < number of agents)" );
    if ( p.inputs.empty() )
        throw error( "at least one input assignment is required" );
    for ( const auto& assignment : p.inputs )
    {
        if ( assignment.size() != n )
            throw error( "each input assignment needs exactly one value per agent" );
        for ( const auto& x : assignment )
            if ( x.empty() || !std::all_of( x.begin(), x.end(), []( char ch ) {
                     return std::isalnum( static_cast< unsigned char >( ch ) ) || ch == '_';
                 } ) )
                throw error( "input value '" + x + "' must be alphanumeric" );
    }

    for ( std::size_t a = 0; a < n; ++a )
    {
        std::set< std::string > values;
        for ( const auto& assignment : p.inputs )
            values.insert( assignment[ a ] );
        for ( const auto& x : values )
            vocab.add_atom( "input" + x, static_cast< agent_id >( a ) );
    }

    std::map< std::pair< agent_id, std::string >, local_state > views;
    std::set< global_state > states;
    crash_enumerator enumerator( n, p.rounds, p.max_crashes, views );
    for ( const auto& assignment : p.inputs )
        enumerator.run( assignment, states );

    crash_complex out;
    auto& c = out.complex;
    c.vocab = vocab;
    std::map< std::pair< agent_id, std::string >, int > ids;
    for ( const auto& [ key, state ] : views )
    {
        auto id = static_cast< int >( c.vertices.size() );
        ids.emplace( key, id );
        c.vertices.push_back( { id, key.first, display_view( state.text, vocab ) } );
        out.observed_inputs.emplace( id, state.inputs );
    }

    std::vector< simplex > generators;
    for ( const auto& g : states )
    {
        simplex s;
        for ( const auto& key : g )
            s.push_back( ids.at( key ) );
        generators.push_back( std::move( s ) );
    }
    c.facets = facets_from_generators( c, std::move( generators ) );
    canonicalize( c );
    return out;
}

simplicial_model label_inputs( const crash_complex& c )
{
    simplicial_model out{ c.complex, {} };
    const auto& vocab = c.complex.vocab;
    for ( const auto& facet : c.complex.facets )
    {
        atom_set labels;
        for ( auto v : facet )
            for ( const auto& [ owner, value ] : c.observed_inputs.at( v ) )
                if ( auto p = vocab.find_atom( "input" + value, owner ) )
                    labels.insert( *p );
        out.labels.push_back( std::move( labels ) );
    }
    return out;
}

simplicial_model gen_crash_model( const crash_parameters& p )
{
    return label_inputs( gen_crash_complex( p ) );
}

} // namespace kb4
