#include "kb4/generators.hpp"

#include <algorithm>

namespace kb4
{

namespace
{

std::size_t uniform( rng& r, std::size_t lo, std::size_t hi )
{
    return std::uniform_int_distribution< std::size_t >( lo, hi )( r );
}

bool coin( rng& r, double p = 0.5 )
{
    return std::bernoulli_distribution( p )( r );
}

agent_set random_nonempty_subset( rng& r, std::size_t agents )
{
    return static_cast< agent_set >( uniform( r, 1, ( std::size_t{ 1 } << agents ) - 1 ) );
}

atom_set random_atoms( rng& r, const atom_set& pool )
{
    atom_set out;
    for ( auto p : pool )
        if ( coin( r ) )
            out.insert( p );
    return out;
}

// Pool vertices by id (colour per id); keeps the vertices used by a facet and
// renumbers them monotonically. `renamed` receives old id -> new id.
chromatic_complex build_complex( const vocabulary& vocab, const std::vector< agent_id >& pool,
                                 std::vector< simplex > generators, std::map< int, int >& renamed )
{
    chromatic_complex c;
    c.vocab = vocab;
    for ( std::size_t i = 0; i < pool.size(); ++i )
        c.vertices.push_back( { static_cast< int >( i ), pool[ i ], "" } );
    auto facets = facets_from_generators( c, std::move( generators ) );

    std::set< int > used;
    for ( const auto& f : facets )
        used.insert( f.begin(), f.end() );
    chromatic_complex out;
    out.vocab = vocab;
    renamed.clear();
    for ( auto v : used )
    {
        auto id = static_cast< int >( out.vertices.size() );
        renamed[ v ] = id;
        out.vertices.push_back( { id, pool[ v ], vocab.agent_name( pool[ v ] ) + std::to_string( id ) } );
    }
    for ( auto f : facets )
    {
        for ( auto& v : f )
            v = renamed.at( v );
        out.facets.push_back( std::move( f ) );
    }
    canonicalize( out );
    return out;
}

// A random generator simplex drawing one pool vertex per chosen colour.
simplex random_simplex( rng& r, const std::vector< std::vector< int > >& by_colour )
{
    std::vector< agent_id > usable;
    for ( std::size_t a = 0; a < by_colour.size(); ++a )
        if ( !by_colour[ a ].empty() )
            usable.push_back( static_cast< agent_id >( a ) );
    simplex s;
    while ( s.empty() )
        for ( auto a : usable )
            if ( coin( r ) )
                s.push_back( by_colour[ a ][ uniform( r, 0, by_colour[ a ].size() - 1 ) ] );
    return s;
}

formula random_leaf( rng& r, const vocabulary& vocab )
{
    auto roll = uniform( r, 0, 9 );
    if ( roll == 0 || vocab.atom_count() == 0 )
        return coin( r ) ? formula::top() : formula::bottom();
    return formula::atom( static_cast< atom_id >( uniform( r, 0, vocab.atom_count() - 1 ) ) );
}

agent_id random_agent( rng& r, const vocabulary& vocab )
{
    return static_cast< agent_id >( uniform( r, 0, vocab.agent_count() - 1 ) );
}

formula random_propositional( rng& r, const std::vector< atom_id >& atoms, std::size_t depth )
{
    if ( depth == 0 || coin( r, 0.4 ) )
        return formula::atom( atoms[ uniform( r, 0, atoms.size() - 1 ) ] );
    if ( coin( r ) )
        return formula::negation( random_propositional( r, atoms, depth - 1 ) );
    return formula::conjunction( random_propositional( r, atoms, depth - 1 ), random_propositional( r, atoms, depth - 1 ) );
}

formula random_guard( rng& r, const vocabulary& vocab )
{
    while ( true )
    {
        auto b = random_nonempty_subset( r, vocab.agent_count() );
        auto pool = vocab.atoms_of( b );
        if ( pool.empty() )
            continue;
        std::vector< atom_id > atoms( pool.begin(), pool.end() );
        return formula::implication( formula::alive_all( b ), random_propositional( r, atoms, 2 ) );
    }
}

} // namespace

vocabulary random_vocabulary( rng& r, std::size_t max_agents, std::size_t max_atoms_per_agent )
{
    auto agents = uniform( r, 1, max_agents );
    std::vector< std::string > names;
    for ( std::size_t a = 0; a < agents; ++a )
        names.emplace_back( 1, static_cast< char >( 'a' + a ) );
    vocabulary vocab( names );
    static const std::string letters = "pqrs";
    for ( std::size_t a = 0; a < agents; ++a )
    {
        auto count = uniform( r, 0, max_atoms_per_agent );
        if ( a + 1 == agents && vocab.atom_count() == 0 )
            count = std::max< std::size_t >( count, 1 );
        for ( std::size_t i = 0; i < count; ++i )
            vocab.add_atom( std::string( 1, letters[ i % letters.size() ] ), static_cast< agent_id >( a ) );
    }
    return vocab;
}

chromatic_complex random_complex( rng& r, const vocabulary& vocab, std::size_t max_facets )
{
    const auto n = vocab.agent_count();
    const auto k = uniform( r, 1, max_facets );
    std::vector< agent_id > pool;
    std::vector< std::vector< int > > by_colour( n );
    for ( std::size_t a = 0; a < n; ++a )
        for ( std::size_t i = 0, m = uniform( r, 1, k ); i < m; ++i )
        {
            by_colour[ a ].push_back( static_cast< int >( pool.size() ) );
            pool.push_back( static_cast< agent_id >( a ) );
        }

    std::vector< simplex > generators;
    for ( std::size_t i = 0; i < k; ++i )
        generators.push_back( random_simplex( r, by_colour ) );
    std::map< int, int > renamed;
    return build_complex( vocab, pool, std::move( generators ), renamed );
}

simplicial_model random_simplicial_model( rng& r, const vocabulary& vocab, std::size_t max_facets )
{
    simplicial_model s{ random_complex( r, vocab, max_facets ), {} };
    const auto all = vocab.atoms_of( vocab.all_agents() );
    for ( std::size_t x = 0; x < s.complex.facets.size(); ++x )
        s.labels.push_back( random_atoms( r, all ) );
    return s;
}

epistemic_model random_model( rng& r, const vocabulary& vocab, std::size_t max_worlds )
{
    const auto n = uniform( r, 1, max_worlds );
    std::vector< std::string > names;
    for ( std::size_t w = 0; w < n; ++w )
        names.push_back( "w" + std::to_string( w ) );
    epistemic_model m( vocab, names );
    for ( std::size_t a = 0; a < vocab.agent_count(); ++a )
    {
        const auto classes = uniform( r, 1, n );
        std::vector< int > block( n, -1 );
        for ( std::size_t w = 0; w < n; ++w )
            if ( coin( r, 0.8 ) )
                block[ w ] = static_cast< int >( uniform( r, 0, classes - 1 ) );
        for ( std::size_t u = 0; u < n; ++u )
            for ( std::size_t v = 0; v < n; ++v )
                if ( block[ u ] >= 0 && block[ u ] == block[ v ] )
                    m.rel[ a ].set( static_cast< world_id >( u ), static_cast< world_id >( v ) );
    }
    const auto all = vocab.atoms_of( vocab.all_agents() );
    for ( auto& l : m.labels )
        l = random_atoms( r, all );
    return m;
}

epistemic_model random_proper_model( rng& r, const vocabulary& vocab, std::size_t max_worlds )
{
    for ( int attempt = 0; attempt < 100000; ++attempt )
        if ( auto m = random_model( r, vocab, max_worlds ); is_proper( m ) )
            return m;
    throw error( "no proper model found by rejection sampling" );
}

formula random_formula( rng& r, const vocabulary& vocab, std::size_t max_depth )
{
    if ( max_depth == 0 || coin( r, 0.25 ) )
        return random_leaf( r, vocab );
    const auto d = max_depth - 1;
    switch ( uniform( r, 0, 7 ) )
    {
    case 0: return formula::negation( random_formula( r, vocab, d ) );
    case 1: return formula::conjunction( random_formula( r, vocab, d ), random_formula( r, vocab, d ) );
    case 2: return formula::disjunction( random_formula( r, vocab, d ), random_formula( r, vocab, d ) );
    case 3: return formula::implication( random_formula( r, vocab, d ), random_formula( r, vocab, d ) );
    case 4: return coin( r ) ? formula::alive( random_agent( r, vocab ) ) : formula::dead( random_agent( r, vocab ) );
    default: return formula::knows( random_agent( r, vocab ), random_formula( r, vocab, d ) );
    }
}

formula random_guarded_formula( rng& r, const vocabulary& vocab, std::size_t max_depth )
{
    if ( vocab.atom_count() == 0 )
        throw error( "guarded formulas need at least one atom" );
    if ( max_depth == 0 || coin( r, 0.3 ) )
        return random_guard( r, vocab );
    const auto d = max_depth - 1;
    switch ( uniform( r, 0, 3 ) )
    {
    case 0: return formula::conjunction( random_guarded_formula( r, vocab, d ), random_guarded_formula( r, vocab, d ) );
    case 1: return formula::disjunction( random_guarded_formula( r, vocab, d ), random_guarded_formula( r, vocab, d ) );
    default: return formula::knows( random_agent( r, vocab ), random_guarded_formula( r, vocab, d ) );
    }
}

formula random_positive_formula( rng& r, const vocabulary& vocab, std::size_t max_depth )
{
    if ( max_depth == 0 || coin( r, 0.3 ) )
        return vocab.atom_count() == 0 ? formula::top()
                                       : formula::atom( static_cast< atom_id >( uniform( r, 0, vocab.atom_count() - 1 ) ) );
    const auto d = max_depth - 1;
    switch ( uniform( r, 0, 3 ) )
    {
    case 0: return formula::conjunction( random_positive_formula( r, vocab, d ), random_positive_formula( r, vocab, d ) );
    case 1: return formula::disjunction( random_positive_formula( r, vocab, d ), random_positive_formula( r, vocab, d ) );
    default: return formula::knows( random_agent( r, vocab ), random_positive_formula( r, vocab, d ) );
    }
}

random_map random_map_from( rng& r, const chromatic_complex& src, std::size_t max_extra_facets )
{
    const auto& vocab = src.vocab;
    const auto n = vocab.agent_count();

    // Per colour, source vertices land on a random pool of target vertices;
    // a pool may also hold vertices outside the image.
    std::vector< agent_id > pool;
    std::vector< std::vector< int > > by_colour( n );
    std::map< int, int > image;
    for ( std::size_t a = 0; a < n; ++a )
    {
        std::vector< int > sources;
        for ( const auto& v : src.vertices )
            if ( v.colour == static_cast< agent_id >( a ) )
                sources.push_back( v.id );
        const auto size = uniform( r, 1, std::max< std::size_t >( sources.size(), 1 ) + 1 );
        for ( std::size_t i = 0; i < size; ++i )
        {
            by_colour[ a ].push_back( static_cast< int >( pool.size() ) );
            pool.push_back( static_cast< agent_id >( a ) );
        }
        for ( auto v : sources )
            image[ v ] = by_colour[ a ][ uniform( r, 0, size - 1 ) ];
    }

    std::vector< simplex > generators;
    for ( const auto& f : src.facets )
    {
        simplex g;
        for ( auto v : f )
            g.push_back( image.at( v ) );
        // Sometimes grow the image by vertices of colours absent from it.
        if ( coin( r, 0.4 ) )
        {
            agent_set present = 0;
            for ( auto v : f )
                present |= agent_bit( src.colour( v ) );
            for ( std::size_t a = 0; a < n; ++a )
                if ( !contains( present, static_cast< agent_id >( a ) ) && coin( r ) )
                    g.push_back( by_colour[ a ][ uniform( r, 0, by_colour[ a ].size() - 1 ) ] );
        }
        generators.push_back( std::move( g ) );
    }
    for ( std::size_t i = 0, extra = uniform( r, 0, max_extra_facets ); i < extra; ++i )
        generators.push_back( random_simplex( r, by_colour ) );

    random_map out;
    std::map< int, int > renamed;
    out.target = build_complex( vocab, pool, std::move( generators ), renamed );
    for ( auto [ v, w ] : image )
        out.map.vertex_map[ v ] = renamed.at( w );
    return out;
}

pointed_morphism random_pointed_morphism( rng& r, const vocabulary& vocab, std::size_t max_facets )
{
    auto c = random_complex( r, vocab, max_facets );
    auto [ d, f ] = random_map_from( r, c );

    std::map< int, atom_set > local;
    for ( const auto& v : d.vertices )
        local[ v.id ] = random_atoms( r, vocab.atoms_of( agent_bit( v.colour ) ) );

    auto label = [ & ]( const chromatic_complex& k, const simplex& facet, auto vertex_of ) {
        atom_set l;
        for ( auto v : facet )
        {
            const auto& own = local.at( vertex_of( v ) );
            l.insert( own.begin(), own.end() );
        }
        auto dead = random_atoms( r, vocab.atoms_of( vocab.all_agents() & ~k.colours( facet ) ) );
        l.insert( dead.begin(), dead.end() );
        return l;
    };

    pointed_morphism out;
    out.src.complex = c;
    out.dst.complex = d;
    for ( const auto& x : c.facets )
        out.src.labels.push_back( label( c, x, [ & ]( int v ) { return f( v ); } ) );
    for ( const auto& y : d.facets )
        out.dst.labels.push_back( label( d, y, []( int v ) { return v; } ) );

    const auto x = uniform( r, 0, c.facets.size() - 1 );
    const auto targets = d.facets_containing( f.image( c.facets[ x ] ) );
    out.map = { f, x, targets[ uniform( r, 0, targets.size() - 1 ) ] };
    return out;
}

std::optional< gain_counterexample > find_unguarded_counterexample( std::uint64_t seed, std::size_t attempts )
{
    rng r( seed );
    for ( std::size_t i = 0; i < attempts; ++i )
    {
        auto vocab = random_vocabulary( r );
        auto m = random_pointed_morphism( r, vocab );
        for ( int j = 0; j < 8; ++j )
        {
            auto phi = random_positive_formula( r, vocab, 2 );
            if ( check_pullback( m.src, m.dst, m.map, phi ) == gain_verdict::violation )
                return gain_counterexample{ std::move( m ), std::move( phi ) };
        }
    }
    return std::nullopt;
}

} // namespace kb4
