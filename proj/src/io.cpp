#include "kb4/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kb4
{

namespace
{

const json& field( const json& j, const char* key, const char* where )
{
    if ( !j.is_object() || !j.contains( key ) )
        throw input_error( std::string( where ) + ": missing \"" + key + "\"" );
    return j.at( key );
}

std::string text( const json& j, const char* where )
{
    if ( !j.is_string() )
        throw input_error( std::string( where ) + ": expected a string, got " + j.dump() );
    return j.get< std::string >();
}

int integer( const json& j, const char* where )
{
    if ( !j.is_number_integer() )
        throw input_error( std::string( where ) + ": expected an integer, got " + j.dump() );
    return j.get< int >();
}

const json& array( const json& j, const char* where )
{
    if ( !j.is_array() )
        throw input_error( std::string( where ) + ": expected an array" );
    return j;
}

agent_id agent_named( const vocabulary& vocab, const json& j, const char* where )
{
    auto name = text( j, where );
    if ( auto a = vocab.find_agent( name ) )
        return *a;
    throw input_error( std::string( where ) + ": unknown agent '" + name + "'" );
}

atom_set labels_from_json( const vocabulary& vocab, const json& j, const std::string& where )
{
    atom_set out;
    for ( const auto& p : array( j, where.c_str() ) )
    {
        try
        {
            out.insert( vocab.parse_atom( text( p, where.c_str() ) ) );
        }
        catch ( const input_error& )
        {
            throw;
        }
        catch ( const error& e )
        {
            throw input_error( where + ": " + e.what() );
        }
    }
    return out;
}

json labels_to_json( const vocabulary& vocab, const atom_set& labels )
{
    json out = json::array();
    for ( auto p : labels )
        out.push_back( vocab.atom_string( p ) );
    return out;
}

json vocabulary_to_json( const vocabulary& vocab, json& out )
{
    out[ "agents" ] = vocab.agent_names();
    json atoms = json::array();
    for ( const auto& p : vocab.atoms() )
        atoms.push_back( { { "name", p.name }, { "owner", vocab.agent_name( p.owner ) } } );
    out[ "atoms" ] = atoms;
    return out;
}

world_id world_named( const epistemic_model& m, const json& j, const char* where )
{
    auto name = text( j, where );
    if ( auto w = m.find_world( name ) )
        return *w;
    throw input_error( std::string( where ) + ": unknown world '" + name + "'" );
}

std::size_t facet_named( const simplicial_model& s, const json& j, const char* where )
{
    auto key = j.is_number_integer() ? std::to_string( j.get< int >() ) : text( j, where );
    if ( auto x = s.complex.find_facet( key ) )
        return *x;
    throw input_error( std::string( where ) + ": unknown facet '" + key + "'" );
}

simplicial_model complex_operand( const json& j, const std::filesystem::path& base, const char* where )
{
    json source = j;
    if ( j.is_string() )
    {
        std::filesystem::path p = j.get< std::string >();
        source = read_json_file( p.is_absolute() ? p : base / p );
    }
    auto m = model_from_json( source );
    if ( m.kind != model_kind::complex )
        throw input_error( std::string( where ) + ": expected a simplicial model" );
    return m.complex;
}

} // namespace

json read_json_file( const std::filesystem::path& path )
{
    std::ifstream in( path );
    if ( !in )
        throw input_error( "cannot open " + path.string() );
    try
    {
        return json::parse( in );
    }
    catch ( const json::parse_error& e )
    {
        throw input_error( path.string() + ": malformed JSON at byte " + std::to_string( e.byte ) + ": " + e.what() );
    }
}

void write_text_file( const std::filesystem::path& path, const std::string& contents )
{
    std::ofstream out( path );
    if ( !out )
        throw input_error( "cannot write " + path.string() );
    out << contents;
}

vocabulary vocabulary_from_json( const json& j )
{
    std::vector< std::string > names;
    for ( const auto& a : array( field( j, "agents", "model" ), "agents" ) )
        names.push_back( text( a, "agents" ) );
    vocabulary vocab = [ & ] {
        try
        {
            return vocabulary( names );
        }
        catch ( const error& e )
        {
            throw input_error( std::string( "agents: " ) + e.what() );
        }
    }();
    if ( j.contains( "atoms" ) )
        for ( const auto& p : array( j.at( "atoms" ), "atoms" ) )
            vocab.add_atom( text( field( p, "name", "atom" ), "atom name" ), agent_named( vocab, field( p, "owner", "atom" ), "atom owner" ) );
    return vocab;
}

simplicial_model simplicial_model_from_json( const json& j )
{
    simplicial_model s;
    auto& c = s.complex;
    c.vocab = vocabulary_from_json( j );
    for ( const auto& v : array( field( j, "vertices", "complex" ), "vertices" ) )
    {
        vertex x{ integer( field( v, "id", "vertex" ), "vertex id" ),
                  agent_named( c.vocab, field( v, "colour", "vertex" ), "vertex colour" ), "" };
        if ( v.contains( "tag" ) )
            x.tag = text( v.at( "tag" ), "vertex tag" );
        c.vertices.push_back( std::move( x ) );
    }
    bool named = false;
    for ( const auto& f : array( field( j, "facets", "complex" ), "facets" ) )
    {
        simplex x;
        for ( const auto& v : array( field( f, "vertices", "facet" ), "facet vertices" ) )
            x.push_back( integer( v, "facet vertex" ) );
        std::sort( x.begin(), x.end() );
        c.facets.push_back( std::move( x ) );
        std::string name = f.contains( "name" ) ? text( f.at( "name" ), "facet name" ) : "";
        named = named || !name.empty();
        c.facet_names.push_back( std::move( name ) );
        s.labels.push_back( f.contains( "labels" ) ? labels_from_json( c.vocab, f.at( "labels" ), "facet labels" ) : atom_set{} );
    }
    if ( !named )
        c.facet_names.clear();
    canonicalize( s );
    return s;
}

epistemic_model epistemic_model_from_json( const json& j )
{
    auto vocab = vocabulary_from_json( j );
    std::vector< std::string > names;
    std::vector< atom_set > labels;
    for ( const auto& w : array( field( j, "worlds", "model" ), "worlds" ) )
    {
        auto name = text( field( w, "name", "world" ), "world name" );
        if ( std::find( names.begin(), names.end(), name ) != names.end() )
            throw input_error( "duplicate world '" + name + "'" );
        names.push_back( name );
        labels.push_back( w.contains( "labels" ) ? labels_from_json( vocab, w.at( "labels" ), "labels of " + name ) : atom_set{} );
    }
    epistemic_model m( vocab, names );
    m.labels = std::move( labels );
    if ( j.contains( "rel" ) )
    {
        const auto& rel = j.at( "rel" );
        if ( !rel.is_object() )
            throw input_error( "rel: expected an object keyed by agent" );
        for ( const auto& [ agent, pairs ] : rel.items() )
        {
            auto a = m.vocab.find_agent( agent );
            if ( !a )
                throw input_error( "rel: unknown agent '" + agent + "'" );
            for ( const auto& p : array( pairs, "rel pairs" ) )
            {
                if ( !p.is_array() || p.size() != 2 )
                    throw input_error( "rel: each pair must be [world, world], got " + p.dump() );
                m.relate( *a, world_named( m, p[ 0 ], "rel" ), world_named( m, p[ 1 ], "rel" ) );
            }
        }
    }
    return m;
}

json to_json( const simplicial_model& s )
{
    const auto& c = s.complex;
    json out = json::object();
    vocabulary_to_json( c.vocab, out );
    json vertices = json::array();
    for ( const auto& v : c.vertices )
        vertices.push_back( { { "id", v.id }, { "colour", c.vocab.agent_name( v.colour ) }, { "tag", v.tag } } );
    out[ "vertices" ] = vertices;
    json facets = json::array();
    for ( std::size_t x = 0; x < c.facets.size(); ++x )
    {
        json f = json::object();
        if ( x < c.facet_names.size() && !c.facet_names[ x ].empty() )
            f[ "name" ] = c.facet_names[ x ];
        f[ "vertices" ] = c.facets[ x ];
        f[ "labels" ] = labels_to_json( c.vocab, x < s.labels.size() ? s.labels[ x ] : atom_set{} );
        facets.push_back( f );
    }
    out[ "facets" ] = facets;
    return out;
}

json to_json( const epistemic_model& m )
{
    json out = json::object();
    vocabulary_to_json( m.vocab, out );
    json worlds = json::array();
    for ( std::size_t w = 0; w < m.world_count(); ++w )
        worlds.push_back( { { "name", m.world_names[ w ] }, { "labels", labels_to_json( m.vocab, m.labels[ w ] ) } } );
    out[ "worlds" ] = worlds;
    json rel = json::object();
    for ( std::size_t a = 0; a < m.vocab.agent_count(); ++a )
    {
        json pairs = json::array();
        for ( auto [ u, v ] : m.rel[ a ].pairs() )
            pairs.push_back( { m.world_names[ u ], m.world_names[ v ] } );
        rel[ m.vocab.agent_name( static_cast< agent_id >( a ) ) ] = pairs;
    }
    out[ "rel" ] = rel;
    return out;
}

loaded_model model_from_json( const json& j )
{
    if ( !j.is_object() )
        throw input_error( "model: expected a JSON object" );
    loaded_model out;
    if ( j.contains( "facets" ) )
    {
        out.kind = model_kind::complex;
        out.complex = simplicial_model_from_json( j );
    }
    else if ( j.contains( "worlds" ) )
    {
        out.kind = model_kind::frame;
        out.frame = epistemic_model_from_json( j );
    }
    else
        throw input_error( "model: neither \"facets\" nor \"worlds\" present" );
    return out;
}

loaded_model load_model( const std::filesystem::path& path )
{
    try
    {
        return model_from_json( read_json_file( path ) );
    }
    catch ( const input_error& e )
    {
        if ( std::string( e.what() ).starts_with( path.string() ) )
            throw;
        throw input_error( path.string() + ": " + e.what() );
    }
}

simplicial_map simplicial_map_from_json( const json& j )
{
    const auto& map = field( j, "map", "morphism" );
    if ( !map.is_object() )
        throw input_error( "map: expected an object of vertex id -> vertex id" );
    simplicial_map f;
    for ( const auto& [ key, value ] : map.items() )
    {
        int v = 0;
        std::istringstream in( key );
        if ( !( in >> v ) || !in.eof() )
            throw input_error( "map: vertex key '" + key + "' is not an integer" );
        f.vertex_map[ v ] = integer( value, "map value" );
    }
    return f;
}

frame_morphism frame_morphism_from_json( const json& j, const epistemic_model& src, const epistemic_model& dst )
{
    const auto& map = field( j, "map", "morphism" );
    if ( !map.is_object() )
        throw input_error( "map: expected an object of world -> list of worlds" );
    frame_morphism f;
    f.image.resize( src.world_count() );
    std::vector< bool > seen( src.world_count(), false );
    for ( const auto& [ key, value ] : map.items() )
    {
        auto u = src.find_world( key );
        if ( !u )
            throw input_error( "map: unknown source world '" + key + "'" );
        seen[ *u ] = true;
        for ( const auto& w : array( value, "map image" ) )
            f.image[ *u ].push_back( world_named( dst, w, "map image" ) );
        std::sort( f.image[ *u ].begin(), f.image[ *u ].end() );
        f.image[ *u ].erase( std::unique( f.image[ *u ].begin(), f.image[ *u ].end() ), f.image[ *u ].end() );
    }
    for ( std::size_t u = 0; u < seen.size(); ++u )
        if ( !seen[ u ] )
            throw input_error( "map: no image for world '" + src.world_names[ u ] + "'" );
    return f;
}

json to_json( const simplicial_map& f )
{
    json map = json::object();
    for ( auto [ v, w ] : f.vertex_map )
        map[ std::to_string( v ) ] = w;
    return { { "map", map } };
}

json to_json( const frame_morphism& f, const epistemic_model& src, const epistemic_model& dst )
{
    json map = json::object();
    for ( std::size_t u = 0; u < f.image.size(); ++u )
    {
        json image = json::array();
        for ( auto w : f.image[ u ] )
            image.push_back( dst.world_names[ w ] );
        map[ src.world_names[ u ] ] = image;
    }
    return { { "map", map } };
}

gain_instance load_gain_instance( const std::filesystem::path& path )
{
    auto j = read_json_file( path );
    const auto base = path.parent_path();
    gain_instance out;
    out.src = complex_operand( field( j, "src", "knowledge-gain file" ), base, "src" );
    out.dst = complex_operand( field( j, "dst", "knowledge-gain file" ), base, "dst" );
    out.map.map = simplicial_map_from_json( j );
    out.map.source_facet = facet_named( out.src, field( j, "at", "knowledge-gain file" ), "at" );
    out.map.target_facet = facet_named( out.dst, field( j, "to", "knowledge-gain file" ), "to" );
    return out;
}

json to_json( const sweep_summary& s )
{
    json schemes = json::array();
    for ( const auto& t : s.schemes )
    {
        json entry = { { "scheme", to_string( t.axiom ) },
                       { "proper_models_only", t.proper_models_only },
                       { "models", t.models },
                       { "failing_models", t.failing_models },
                       { "counterexamples", t.counterexamples } };
        if ( t.example )
            entry[ "example" ] = *t.example;
        schemes.push_back( entry );
    }
    json out = { { "bounds",
                   { { "agents", s.options.agents },
                     { "worlds", s.options.worlds },
                     { "atoms", s.options.atoms },
                     { "depth", s.options.depth },
                     { "proper_only", s.options.proper_only } } },
                 { "models", s.models },
                 { "proper_models", s.proper_models },
                 { "schemes", schemes },
                 { "theorem_failures", s.theorem_failures },
                 { "ok", s.ok() },
                 { "seconds", s.elapsed.count() } };
    if ( s.theorem_example )
        out[ "theorem_example" ] = *s.theorem_example;
    return out;
}

} // namespace kb4
