#include "kb4/verify.hpp"

#include <algorithm>
#include <set>

namespace kb4
{

namespace
{

using extension = std::vector< bool >;

// Bell numbers give the partitions of a k-element domain; summed over the
// domain subsets this is B(n+1).
std::uint64_t bell( std::size_t n )
{
    std::vector< std::uint64_t > row{ 1 };
    for ( std::size_t i = 0; i < n; ++i )
    {
        std::vector< std::uint64_t > next{ row.back() };
        for ( auto x : row )
            next.push_back( next.back() + x );
        row = std::move( next );
    }
    return row.front();
}

std::uint64_t saturating_mul( std::uint64_t x, std::uint64_t y )
{
    if ( x != 0 && y > UINT64_MAX / x )
        return UINT64_MAX;
    return x * y;
}

// Every PER on n worlds as a list of classes, each class a world bitmask.
std::vector< std::vector< std::uint32_t > > all_pers( std::size_t n )
{
    std::vector< std::vector< std::uint32_t > > out;
    for ( std::uint32_t domain = 0; domain < ( std::uint32_t{ 1 } << n ); ++domain )
    {
        std::vector< int > worlds;
        for ( std::size_t w = 0; w < n; ++w )
            if ( domain & ( 1u << w ) )
                worlds.push_back( static_cast< int >( w ) );

        // Restricted growth strings over the domain.
        std::vector< int > block( worlds.size(), 0 );
        while ( true )
        {
            std::vector< std::uint32_t > classes;
            for ( std::size_t i = 0; i < worlds.size(); ++i )
            {
                if ( static_cast< std::size_t >( block[ i ] ) == classes.size() )
                    classes.push_back( 0 );
                classes[ block[ i ] ] |= 1u << worlds[ i ];
            }
            out.push_back( std::move( classes ) );

            int i = static_cast< int >( worlds.size() ) - 1;
            for ( ; i > 0; --i )
            {
                int top = *std::max_element( block.begin(), block.begin() + i );
                if ( block[ i ] <= top )
                {
                    ++block[ i ];
                    std::fill( block.begin() + i + 1, block.end(), 0 );
                    break;
                }
            }
            if ( i <= 0 )
                break;
        }
    }
    return out;
}

std::string world_name( std::size_t w )
{
    return "w" + std::to_string( w );
}

extension box( const epistemic_model& m, agent_id a, const extension& e )
{
    const auto n = m.world_count();
    extension out( n, true );
    for ( std::size_t w = 0; w < n; ++w )
        for ( std::size_t v = 0; v < n && out[ w ]; ++v )
            if ( m.rel[ a ]( static_cast< world_id >( w ), static_cast< world_id >( v ) ) && !e[ v ] )
                out[ w ] = false;
    return out;
}

extension negate( extension e )
{
    e.flip();
    return e;
}

extension meet( const extension& x, const extension& y )
{
    extension out( x.size() );
    for ( std::size_t i = 0; i < x.size(); ++i )
        out[ i ] = x[ i ] && y[ i ];
    return out;
}

extension implies( const extension& x, const extension& y )
{
    extension out( x.size() );
    for ( std::size_t i = 0; i < x.size(); ++i )
        out[ i ] = !x[ i ] || y[ i ];
    return out;
}

formula big_and( std::vector< formula > parts )
{
    if ( parts.empty() )
        return formula::top();
    auto out = parts.front();
    for ( std::size_t i = 1; i < parts.size(); ++i )
        out = formula::conjunction( out, parts[ i ] );
    return out;
}

std::vector< agent_id > all_agent_ids( const vocabulary& vocab )
{
    std::vector< agent_id > out;
    for ( std::size_t a = 0; a < vocab.agent_count(); ++a )
        out.push_back( static_cast< agent_id >( a ) );
    return out;
}

std::string describe_model( const epistemic_model& m )
{
    std::string out = std::to_string( m.world_count() ) + " worlds;";
    for ( std::size_t a = 0; a < m.vocab.agent_count(); ++a )
    {
        out += " " + m.vocab.agent_name( static_cast< agent_id >( a ) ) + ":{";
        bool first = true;
        for ( auto [ u, v ] : m.rel[ a ].pairs() )
        {
            out += ( first ? "" : "," ) + std::string( "(" ) + m.world_names[ u ] + "," + m.world_names[ v ] + ")";
            first = false;
        }
        out += "}";
    }
    out += "; labels:";
    for ( std::size_t w = 0; w < m.world_count(); ++w )
    {
        out += " " + m.world_names[ w ] + "={";
        bool first = true;
        for ( auto p : m.labels[ w ] )
        {
            out += ( first ? "" : "," ) + m.vocab.atom_string( p );
            first = false;
        }
        out += "}";
    }
    return out;
}

std::string describe( const epistemic_model& m, const scheme_counterexample& c )
{
    auto phi = c.phi.value_or( formula::top() );
    auto psi = c.psi.value_or( formula::top() );
    auto instance = scheme_instance( c.axiom, m.vocab, c.agent.value_or( 0 ), phi, psi );
    return to_string( c.axiom ) + " fails at " + m.world_names[ c.world ] + ": " + to_string( instance, m.vocab ) +
           " [model: " + describe_model( m ) + "]";
}

} // namespace

vocabulary sweep_vocabulary( std::size_t agents, std::size_t atoms )
{
    if ( agents == 0 || agents > 26 )
        throw error( "agent count must be between 1 and 26" );
    std::vector< std::string > names;
    for ( std::size_t a = 0; a < agents; ++a )
        names.emplace_back( 1, static_cast< char >( 'a' + a ) );
    vocabulary vocab( names );
    static const std::string letters = "pqrstuvwxyz";
    for ( std::size_t i = 0; i < atoms; ++i )
    {
        std::string name( 1, letters[ i % letters.size() ] );
        if ( i >= letters.size() )
            name += std::to_string( i / letters.size() );
        vocab.add_atom( name, static_cast< agent_id >( i % agents ) );
    }
    return vocab;
}

std::uint64_t count_candidates( const model_bounds& b )
{
    if ( b.worlds == 0 )
        return 1;
    std::uint64_t total = 0;
    for ( std::size_t n = 1; n <= b.worlds; ++n )
    {
        std::uint64_t count = 1;
        for ( std::size_t a = 0; a < b.agents; ++a )
            count = saturating_mul( count, bell( n + 1 ) );
        for ( std::size_t i = 0; i < n * b.atoms; ++i )
            count = saturating_mul( count, 2 );
        total = count > UINT64_MAX - total ? UINT64_MAX : total + count;
    }
    return total;
}

void for_each_model( const model_bounds& b, const std::function< void( const epistemic_model& ) >& visit )
{
    const auto vocab = sweep_vocabulary( b.agents, b.atoms );
    if ( auto c = count_candidates( b ); c > max_enumeration_candidates )
        throw error( "enumeration bounds too large: " + std::to_string( c ) + " candidate models (limit " +
                     std::to_string( max_enumeration_candidates ) + ")" );

    std::vector< std::size_t > sizes;
    if ( b.worlds == 0 )
        sizes.push_back( 0 );
    for ( std::size_t n = 1; n <= b.worlds; ++n )
        sizes.push_back( n );

    for ( auto n : sizes )
    {
        const auto pers = all_pers( n );
        const std::size_t label_choices = std::size_t{ 1 } << b.atoms;
        std::vector< std::string > names;
        for ( std::size_t w = 0; w < n; ++w )
            names.push_back( world_name( w ) );

        std::vector< std::size_t > choice( b.agents, 0 );
        while ( true )
        {
            epistemic_model frame( vocab, names );
            for ( std::size_t a = 0; a < b.agents; ++a )
                for ( auto cls : pers[ choice[ a ] ] )
                    for ( std::size_t u = 0; u < n; ++u )
                        for ( std::size_t v = 0; v < n; ++v )
                            if ( ( cls >> u & 1 ) && ( cls >> v & 1 ) )
                                frame.rel[ a ].set( static_cast< world_id >( u ), static_cast< world_id >( v ) );

            if ( !b.proper_only || is_proper( frame ) )
            {
                std::vector< std::size_t > label( n, 0 );
                while ( true )
                {
                    epistemic_model m = frame;
                    for ( std::size_t w = 0; w < n; ++w )
                        for ( std::size_t p = 0; p < b.atoms; ++p )
                            if ( label[ w ] >> p & 1 )
                                m.labels[ w ].insert( static_cast< atom_id >( p ) );
                    visit( m );

                    std::size_t w = 0;
                    for ( ; w < n; ++w )
                    {
                        if ( ++label[ w ] < label_choices )
                            break;
                        label[ w ] = 0;
                    }
                    if ( w == n )
                        break;
                }
            }

            std::size_t a = 0;
            for ( ; a < b.agents; ++a )
            {
                if ( ++choice[ a ] < pers.size() )
                    break;
                choice[ a ] = 0;
            }
            if ( a == b.agents )
                break;
        }
    }
}

std::vector< epistemic_model > enumerate_models( const model_bounds& b )
{
    std::vector< epistemic_model > out;
    for_each_model( b, [ & ]( const epistemic_model& m ) { out.push_back( m ); } );
    return out;
}

std::vector< frame_morphism > enumerate_frame_morphisms( const epistemic_model& src, const epistemic_model& dst )
{
    const auto n = src.world_count();
    std::vector< std::vector< std::vector< world_id > > > options( n );
    std::uint64_t total = 1;
    for ( std::size_t u = 0; u < n; ++u )
    {
        std::set< std::vector< world_id > > distinct;
        auto live = src.alive( static_cast< world_id >( u ) );
        for ( std::size_t w = 0; w < dst.world_count(); ++w )
            distinct.insert( saturate( dst, live, static_cast< world_id >( w ) ) );
        options[ u ].assign( distinct.begin(), distinct.end() );
        total = saturating_mul( total, options[ u ].size() );
    }
    if ( total > max_enumeration_candidates )
        throw error( "too many candidate morphisms: " + std::to_string( total ) );

    std::vector< frame_morphism > out;
    if ( total == 0 )
        return out;
    std::vector< std::size_t > choice( n, 0 );
    while ( true )
    {
        frame_morphism f;
        for ( std::size_t u = 0; u < n; ++u )
            f.image.push_back( options[ u ][ choice[ u ] ] );
        if ( check_frame_morphism( f, src, dst ) )
            out.push_back( std::move( f ) );

        std::size_t u = 0;
        for ( ; u < n; ++u )
        {
            if ( ++choice[ u ] < options[ u ].size() )
                break;
            choice[ u ] = 0;
        }
        if ( u == n )
            break;
    }
    return out;
}

std::string to_string( scheme s )
{
    switch ( s )
    {
    case scheme::K: return "K";
    case scheme::B: return "B";
    case scheme::four: return "4";
    case scheme::five: return "5";
    case scheme::T: return "T";
    case scheme::NE: return "NE";
    case scheme::SA: return "SA";
    }
    return "?";
}

std::optional< scheme > parse_scheme( std::string_view name )
{
    for ( auto s : { scheme::K, scheme::B, scheme::four, scheme::five, scheme::T, scheme::NE, scheme::SA } )
        if ( to_string( s ) == name )
            return s;
    return std::nullopt;
}

std::vector< instantiation > instantiations( const epistemic_model& m, std::size_t depth )
{
    const auto n = m.world_count();
    std::vector< instantiation > out;
    std::set< extension > seen;
    auto add = [ & ]( formula f, extension e ) {
        if ( seen.insert( e ).second )
            out.push_back( { std::move( f ), std::move( e ) } );
    };

    add( formula::top(), extension( n, true ) );
    add( formula::bottom(), extension( n, false ) );
    for ( std::size_t p = 0; p < m.vocab.atom_count(); ++p )
    {
        extension e( n );
        for ( std::size_t w = 0; w < n; ++w )
            e[ w ] = m.labels[ w ].contains( static_cast< atom_id >( p ) );
        add( formula::atom( static_cast< atom_id >( p ) ), std::move( e ) );
    }

    for ( std::size_t d = 1; d <= depth; ++d )
    {
        const auto before = out.size();
        for ( std::size_t i = 0; i < before; ++i )
        {
            add( formula::negation( out[ i ].witness ), negate( out[ i ].extension ) );
            for ( std::size_t a = 0; a < m.vocab.agent_count(); ++a )
                add( formula::knows( static_cast< agent_id >( a ), out[ i ].witness ),
                     box( m, static_cast< agent_id >( a ), out[ i ].extension ) );
            for ( std::size_t j = i + 1; j < before; ++j )
                add( formula::conjunction( out[ i ].witness, out[ j ].witness ),
                     meet( out[ i ].extension, out[ j ].extension ) );
        }
        if ( out.size() == before )
            break;
    }
    return out;
}

formula scheme_instance( scheme s, const vocabulary& vocab, agent_id a, const formula& phi, const formula& psi )
{
    using F = formula;
    switch ( s )
    {
    case scheme::K:
        return F::implication( F::knows( a, F::implication( phi, psi ) ),
                               F::implication( F::knows( a, phi ), F::knows( a, psi ) ) );
    case scheme::B: return F::implication( phi, F::knows( a, F::negation( F::knows( a, F::negation( phi ) ) ) ) );
    case scheme::four: return F::implication( F::knows( a, phi ), F::knows( a, F::knows( a, phi ) ) );
    case scheme::five:
        return F::implication( F::negation( F::knows( a, phi ) ), F::knows( a, F::negation( F::knows( a, phi ) ) ) );
    case scheme::T: return F::implication( F::knows( a, phi ), phi );
    case scheme::NE:
    {
        auto out = F::alive( 0 );
        for ( std::size_t b = 1; b < vocab.agent_count(); ++b )
            out = F::disjunction( out, F::alive( static_cast< agent_id >( b ) ) );
        return out;
    }
    case scheme::SA:
    {
        std::vector< formula > others;
        for ( auto b : all_agent_ids( vocab ) )
            if ( b != a )
                others.push_back( F::dead( b ) );
        auto rest = big_and( others );
        auto guard = others.empty() ? F::alive( a ) : F::conjunction( F::alive( a ), rest );
        return F::implication( guard, F::knows( a, rest ) );
    }
    }
    throw error( "unknown scheme" );
}

std::vector< scheme_counterexample > check_scheme( const epistemic_model& m, scheme s, std::size_t depth )
{
    const auto n = m.world_count();
    const auto agents = all_agent_ids( m.vocab );
    std::vector< scheme_counterexample > out;
    auto report = [ & ]( const extension& truth, std::optional< agent_id > a, std::optional< formula > phi,
                         std::optional< formula > psi ) {
        for ( std::size_t w = 0; w < n; ++w )
            if ( !truth[ w ] )
                out.push_back( { s, static_cast< world_id >( w ), a, phi, psi } );
    };

    const extension none( n, false );
    std::vector< extension > live( agents.size() );
    for ( auto a : agents )
        live[ a ] = negate( box( m, a, none ) );

    if ( s == scheme::NE )
    {
        extension truth( n, false );
        for ( auto a : agents )
            for ( std::size_t w = 0; w < n; ++w )
                truth[ w ] = truth[ w ] || live[ a ][ w ];
        report( truth, std::nullopt, std::nullopt, std::nullopt );
        return out;
    }
    if ( s == scheme::SA )
    {
        for ( auto a : agents )
        {
            extension rest( n, true );
            for ( auto b : agents )
                if ( b != a )
                    rest = meet( rest, negate( live[ b ] ) );
            report( implies( meet( live[ a ], rest ), box( m, a, rest ) ), a, std::nullopt, std::nullopt );
        }
        return out;
    }

    const auto inst = instantiations( m, depth );
    for ( auto a : agents )
    {
        std::vector< extension > boxed;
        for ( const auto& i : inst )
            boxed.push_back( box( m, a, i.extension ) );

        for ( std::size_t i = 0; i < inst.size(); ++i )
        {
            const auto& phi = inst[ i ].extension;
            const auto& kphi = boxed[ i ];
            switch ( s )
            {
            case scheme::K:
                for ( std::size_t j = 0; j < inst.size(); ++j )
                    report( implies( box( m, a, implies( phi, inst[ j ].extension ) ), implies( kphi, boxed[ j ] ) ), a,
                            inst[ i ].witness, inst[ j ].witness );
                break;
            case scheme::B: report( implies( phi, box( m, a, negate( box( m, a, negate( phi ) ) ) ) ), a, inst[ i ].witness, {} ); break;
            case scheme::four: report( implies( kphi, box( m, a, kphi ) ), a, inst[ i ].witness, {} ); break;
            case scheme::five: report( implies( negate( kphi ), box( m, a, negate( kphi ) ) ), a, inst[ i ].witness, {} ); break;
            case scheme::T: report( implies( kphi, phi ), a, inst[ i ].witness, {} ); break;
            default: break;
            }
        }
    }
    return out;
}

std::string to_string( tautology t )
{
    switch ( t )
    {
    case tautology::dead_knows_everything: return "dead a -> K a phi";
    case tautology::alive_knows_alive: return "alive a -> K a alive a";
    case tautology::alive_satisfies_t: return "alive a -> (K a phi -> phi)";
    case tautology::only_alive_matters: return "K a phi <-> (alive a -> K a phi)";
    }
    return "?";
}

std::vector< theorem_failure > check_theorems( const epistemic_model& m, std::size_t depth )
{
    const auto n = m.world_count();
    std::vector< theorem_failure > out;
    auto report = [ & ]( tautology t, const extension& truth, agent_id a, const formula& phi ) {
        for ( std::size_t w = 0; w < n; ++w )
            if ( !truth[ w ] )
                out.push_back( { t, static_cast< world_id >( w ), a, phi } );
    };

    const auto inst = instantiations( m, depth );
    for ( auto a : all_agent_ids( m.vocab ) )
    {
        const auto dead = box( m, a, extension( n, false ) );
        const auto live = negate( dead );
        report( tautology::alive_knows_alive, implies( live, box( m, a, live ) ), a, formula::top() );
        for ( const auto& i : inst )
        {
            const auto kphi = box( m, a, i.extension );
            report( tautology::dead_knows_everything, implies( dead, kphi ), a, i.witness );
            report( tautology::alive_satisfies_t, implies( live, implies( kphi, i.extension ) ), a, i.witness );
            const auto guarded = implies( live, kphi );
            report( tautology::only_alive_matters, meet( implies( kphi, guarded ), implies( guarded, kphi ) ), a,
                    i.witness );
        }
    }
    return out;
}

bool sweep_summary::ok() const
{
    if ( theorem_failures != 0 )
        return false;
    return std::all_of( schemes.begin(), schemes.end(), []( const auto& t ) { return t.counterexamples == 0; } );
}

sweep_summary soundness_sweep( const sweep_options& o )
{
    const auto start = std::chrono::steady_clock::now();
    sweep_summary out;
    out.options = o;
    if ( o.schemes.empty() )
    {
        for ( auto s : { scheme::K, scheme::B, scheme::four, scheme::five } )
            out.schemes.push_back( { s, o.proper_only, 0, 0, 0, std::nullopt } );
        for ( auto s : { scheme::NE, scheme::SA } )
            out.schemes.push_back( { s, true, 0, 0, 0, std::nullopt } );
    }
    else
        for ( auto s : o.schemes )
            out.schemes.push_back( { s, o.proper_only, 0, 0, 0, std::nullopt } );

    model_bounds bounds{ o.agents, o.worlds, o.atoms, o.proper_only };
    for_each_model( bounds, [ & ]( const epistemic_model& m ) {
        ++out.models;
        const bool proper = static_cast< bool >( is_proper( m ) );
        if ( proper )
            ++out.proper_models;

        for ( auto& tally : out.schemes )
        {
            if ( tally.proper_models_only && !proper )
                continue;
            ++tally.models;
            auto found = check_scheme( m, tally.axiom, o.depth );
            if ( found.empty() )
                continue;
            ++tally.failing_models;
            tally.counterexamples += found.size();
            if ( !tally.example )
                tally.example = describe( m, found.front() );
        }

        auto failures = check_theorems( m, o.depth );
        out.theorem_failures += failures.size();
        if ( !failures.empty() && !out.theorem_example )
        {
            const auto& f = failures.front();
            out.theorem_example = to_string( f.which ) + " fails at " + m.world_names[ f.world ] + " for agent " +
                                  m.vocab.agent_name( f.agent ) + " with phi = " + to_string( f.phi, m.vocab ) +
                                  " [model: " + describe_model( m ) + "]";
        }
    } );
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

} // namespace kb4
