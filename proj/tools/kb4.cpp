// kb4: command-line front end.
//
// Exit status: 0 success or property true, 1 property false, 2 input error.

#include "kb4/crashgen.hpp"
#include "kb4/dot.hpp"
#include "kb4/functors.hpp"
#include "kb4/io.hpp"
#include "kb4/logic.hpp"
#include "kb4/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

namespace
{

using namespace kb4;

constexpr int property_false = 1;
constexpr int input_failure = 2;

void emit( const std::string& contents, const std::string& out )
{
    if ( out.empty() )
        std::cout << contents;
    else
        write_text_file( out, contents );
}

std::string world_pair( const epistemic_model& m, std::pair< world_id, world_id > p )
{
    return "(" + m.world_names[ p.first ] + ", " + m.world_names[ p.second ] + ")";
}

std::string describe_facet( const chromatic_complex& c, std::size_t x )
{
    std::string out = c.facet_name( x ) + " = {";
    bool first = true;
    for ( auto v : c.facets[ x ] )
    {
        out += ( first ? "" : ", " ) + std::to_string( v );
        first = false;
    }
    return out + "}";
}

int validate( const std::string& file, bool close )
{
    auto m = load_model( file );
    if ( m.kind == model_kind::complex )
    {
        auto problems = validate_model( m.complex );
        for ( const auto& p : problems )
            std::cout << "violation (" << to_string( p.fault ) << "): " << p.detail << "\n";
        if ( !problems.empty() )
            return property_false;
        const auto& c = m.complex.complex;
        auto pure = is_pure( c );
        std::cout << "valid simplicial model: " << c.vertices.size() << " vertices, " << c.facets.size() << " facets, "
                  << ( pure.pure ? "pure of dimension " + std::to_string( pure.dimension ) : std::string( "impure" ) )
                  << "\n";
        return 0;
    }

    auto& frame = m.frame;
    if ( close )
        close_relations( frame );
    auto problems = validate_per( frame );
    for ( const auto& p : problems )
        std::cout << "violation (" << ( p.fault == per_fault::symmetry ? "symmetry" : "transitivity" ) << ") for agent "
                  << frame.vocab.agent_name( p.agent ) << ": missing pair " << world_pair( frame, { p.from, p.to } )
                  << "\n";
    if ( !problems.empty() )
        return property_false;
    auto proper = is_proper( frame );
    if ( !proper )
    {
        auto [ w, v ] = *proper.witness;
        if ( w == v )
            std::cout << "not proper: no agent is alive in " << frame.world_names[ w ] << "; counterexample "
                      << world_pair( frame, { w, v } ) << "\n";
        else
            std::cout << "not proper: no agent alive in " << frame.world_names[ w ] << " distinguishes it from "
                      << frame.world_names[ v ] << "; counterexample " << world_pair( frame, { w, v } ) << "\n";
        return property_false;
    }
    std::cout << "valid proper partial epistemic model: " << frame.world_count() << " worlds\n";
    return 0;
}

int convert( const std::string& file, const std::string& to, const std::string& out )
{
    auto m = load_model( file );
    if ( to == "frame" )
    {
        auto frame = m.kind == model_kind::frame ? m.frame : kappa( m.complex );
        emit( to_json( frame ).dump( 2 ) + "\n", out );
        return 0;
    }
    if ( m.kind == model_kind::complex )
    {
        emit( to_json( m.complex ).dump( 2 ) + "\n", out );
        return 0;
    }
    if ( auto p = is_proper( m.frame ); !p )
    {
        std::cerr << "cannot convert: model is not proper; counterexample " << world_pair( m.frame, *p.witness ) << "\n";
        return property_false;
    }
    emit( to_json( sigma( m.frame ) ).dump( 2 ) + "\n", out );
    return 0;
}

int check( const std::string& file, const std::string& at, const std::string& text )
{
    auto m = load_model( file );
    const auto& vocab = m.kind == model_kind::complex ? m.complex.vocab() : m.frame.vocab;
    auto phi = parse_formula( text, vocab );

    std::vector< std::pair< std::string, bool > > results;
    if ( m.kind == model_kind::complex )
    {
        const auto& c = m.complex.complex;
        if ( at == "all" )
        {
            auto e = eval_all( m.complex, phi );
            for ( std::size_t x = 0; x < e.truth.size(); ++x )
                results.emplace_back( c.facet_name( x ), e.truth[ x ] );
        }
        else
        {
            auto x = c.find_facet( at );
            if ( !x )
                throw error( "unknown facet '" + at + "'" );
            results.emplace_back( c.facet_name( *x ), eval_simplicial( m.complex, *x, phi ) );
        }
    }
    else if ( at == "all" )
    {
        auto e = eval_all( m.frame, phi );
        for ( std::size_t w = 0; w < e.truth.size(); ++w )
            results.emplace_back( m.frame.world_names[ w ], e.truth[ w ] );
    }
    else
        results.emplace_back( at, eval_kripke( m.frame, m.frame.world( at ), phi ) );

    bool all = true;
    for ( const auto& [ where, value ] : results )
    {
        std::cout << where << ": " << ( value ? "true" : "false" ) << "\n";
        all = all && value;
    }
    return all ? 0 : property_false;
}

int morphism( const std::string& file, const std::string& src_file, const std::string& dst_file )
{
    auto j = read_json_file( file );
    auto src = load_model( src_file );
    auto dst = load_model( dst_file );
    if ( src.kind != dst.kind )
        throw input_error( "source and target must both be simplicial models or both be epistemic models" );

    check_result r;
    if ( src.kind == model_kind::complex )
        r = check_simplicial_model_morphism( simplicial_map_from_json( j ), src.complex, dst.complex );
    else
        r = check_model_morphism( frame_morphism_from_json( j, src.frame, dst.frame ), src.frame, dst.frame );
    if ( !r )
    {
        std::cout << "not a morphism: " << r.counterexample << "\n";
        return property_false;
    }
    std::cout << "morphism of " << ( src.kind == model_kind::complex ? "simplicial" : "epistemic" ) << " models\n";
    return 0;
}

int roundtrip( const std::string& file )
{
    auto m = load_model( file );
    if ( m.kind == model_kind::frame )
    {
        if ( auto p = is_proper( m.frame ); !p )
        {
            std::cout << "not proper; counterexample " << world_pair( m.frame, *p.witness ) << "\n";
            return property_false;
        }
        auto witness = roundtrip_frame( m.frame );
        if ( !witness )
        {
            std::cout << "no isomorphism between the model and kappa(sigma(model))\n";
            return property_false;
        }
        auto back = kappa( sigma( m.frame ) );
        std::cout << "kappa(sigma(M)) is isomorphic to M; world -> facet world of kappa(sigma(M)):\n";
        for ( std::size_t w = 0; w < witness->size(); ++w )
            std::cout << "  " << m.frame.world_names[ w ] << " -> " << back.world_names[ ( *witness )[ w ] ] << "\n";
        return 0;
    }

    auto witness = roundtrip_complex( m.complex );
    if ( !witness )
    {
        std::cout << "no isomorphism between the complex and sigma(kappa(complex))\n";
        return property_false;
    }
    auto back = sigma( kappa( m.complex ) );
    std::cout << "sigma(kappa(C)) is isomorphic to C; vertex -> vertex of sigma(kappa(C)):\n";
    for ( auto [ v, w ] : witness->vertex_map )
    {
        const auto* image = back.complex.find_vertex( w );
        std::cout << "  " << v << " -> " << w << " (" << m.complex.vocab().agent_name( m.complex.complex.colour( v ) )
                  << ", class of " << ( image ? image->tag : "?" ) << ")\n";
    }
    return 0;
}

std::vector< std::string > split( const std::string& s )
{
    std::vector< std::string > out;
    std::stringstream in( s );
    std::string item;
    while ( std::getline( in, item, ',' ) )
        out.push_back( item );
    return out;
}

int gen_crash( const std::string& agents, const std::vector< std::string >& inputs, int rounds, int max_crashes,
               const std::string& out, const std::string& dot )
{
    crash_parameters p;
    p.agents = split( agents );
    for ( const auto& assignment : inputs )
        p.inputs.push_back( split( assignment ) );
    p.rounds = rounds;
    p.max_crashes = max_crashes;
    auto model = gen_crash_model( p );

    std::map< std::size_t, std::size_t > by_size;
    for ( const auto& f : model.complex.facets )
        ++by_size[ f.size() ];
    std::cerr << model.complex.facets.size() << " facets, " << model.complex.vertices.size() << " vertices; facets by dimension:";
    for ( auto [ size, count ] : by_size )
        std::cerr << " " << size - 1 << ":" << count;
    std::cerr << "\n";

    emit( to_json( model ).dump( 2 ) + "\n", out );
    if ( !dot.empty() )
        write_text_file( dot, to_dot( model ) );
    return 0;
}

int sweep( sweep_options o, const std::vector< std::string >& schemes )
{
    for ( const auto& name : schemes )
    {
        auto s = parse_scheme( name );
        if ( !s )
            throw input_error( "unknown scheme '" + name + "' (expected K, B, 4, 5, T, NE or SA)" );
        o.schemes.push_back( *s );
    }
    auto summary = soundness_sweep( o );
    std::cout << to_json( summary ).dump( 2 ) << "\n";
    return summary.ok() ? 0 : property_false;
}

int knowledge_gain( const std::string& file, const std::string& text, bool unguarded )
{
    auto g = load_gain_instance( file );
    auto phi = parse_formula( text, g.src.vocab() );
    auto verdict = unguarded ? check_pullback( g.src, g.dst, g.map, phi ) : check_knowledge_gain( g.src, g.dst, g.map, phi );
    std::cout << to_string( verdict ) << ": " << describe_facet( g.dst.complex, g.map.target_facet )
              << ( eval_simplicial( g.dst, g.map.target_facet, phi ) ? " satisfies" : " does not satisfy" )
              << " the formula; " << describe_facet( g.src.complex, g.map.source_facet )
              << ( eval_simplicial( g.src, g.map.source_facet, phi ) ? " satisfies" : " does not satisfy" ) << " it\n";
    return verdict == gain_verdict::violation ? property_false : 0;
}

int export_dot( const std::string& file, const std::string& out )
{
    auto m = load_model( file );
    emit( m.kind == model_kind::complex ? to_dot( m.complex ) : to_dot( m.frame ), out );
    return 0;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Epistemic logic KB4 over simplicial and partial epistemic models" };
    app.require_subcommand( 1 );
    std::function< int() > run;

    std::string file, out, to, at, formula_text, src, dst, dot, agents = "a,b,c";
    bool close = false, proper_only = false, unguarded = false;
    std::vector< std::string > inputs, schemes;
    int rounds = 1, max_crashes = 0;
    sweep_options sweep_opts;

    auto* cmd = app.add_subcommand( "validate", "Check model invariants (PER and properness, or complex validity)" );
    cmd->add_option( "file", file, "Model file" )->required();
    cmd->add_flag( "--close", close, "Apply the PER closure before validating" );
    cmd->callback( [ & ] { run = [ & ] { return validate( file, close ); }; } );

    cmd = app.add_subcommand( "convert", "Translate between simplicial and epistemic models" );
    cmd->add_option( "file", file, "Model file" )->required();
    cmd->add_option( "--to", to, "Target format" )->required()->check( CLI::IsMember( { "frame", "complex" } ) );
    cmd->add_option( "--out", out, "Output file (default: stdout)" );
    cmd->callback( [ & ] { run = [ & ] { return convert( file, to, out ); }; } );

    cmd = app.add_subcommand( "check", "Evaluate a formula" );
    cmd->add_option( "--model", file, "Model file" )->required();
    cmd->add_option( "--at", at, "World name, facet name or index, or 'all'" )->required();
    cmd->add_option( "--formula", formula_text, "Formula" )->required();
    cmd->callback( [ & ] { run = [ & ] { return check( file, at, formula_text ); }; } );

    cmd = app.add_subcommand( "morphism", "Check a morphism between two models of the same kind" );
    cmd->add_option( "file", file, "Morphism file" )->required();
    cmd->add_option( "--src", src, "Source model" )->required();
    cmd->add_option( "--dst", dst, "Target model" )->required();
    cmd->callback( [ & ] { run = [ & ] { return morphism( file, src, dst ); }; } );

    cmd = app.add_subcommand( "roundtrip", "Exhibit kappa(sigma(M)) ~ M or sigma(kappa(C)) ~ C" );
    cmd->add_option( "file", file, "Model file" )->required();
    cmd->callback( [ & ] { run = [ & ] { return roundtrip( file ); }; } );

    cmd = app.add_subcommand( "gen-crash", "Generate the synchronous crash-failure model" );
    cmd->add_option( "--agents", agents, "Comma-separated agent names" )->capture_default_str();
    cmd->add_option( "--inputs", inputs, "Comma-separated input values, one per agent (repeatable)" )->required();
    cmd->add_option( "--rounds", rounds, "Number of rounds" )->capture_default_str();
    cmd->add_option( "--max-crashes", max_crashes, "Total crash bound" )->capture_default_str();
    cmd->add_option( "--out", out, "Output file (default: stdout)" );
    cmd->add_option( "--dot", dot, "Also write a DOT drawing" );
    cmd->callback( [ & ] { run = [ & ] { return gen_crash( agents, inputs, rounds, max_crashes, out, dot ); }; } );

    cmd = app.add_subcommand( "soundness-sweep", "Check axiom schemes over all small models" );
    cmd->add_option( "--agents", sweep_opts.agents, "Number of agents" )->capture_default_str();
    cmd->add_option( "--worlds", sweep_opts.worlds, "Maximum number of worlds" )->capture_default_str();
    cmd->add_option( "--atoms", sweep_opts.atoms, "Number of atoms" )->capture_default_str();
    cmd->add_option( "--depth", sweep_opts.depth, "Instantiation depth" )->capture_default_str();
    cmd->add_flag( "--proper-only", proper_only, "Only proper models" );
    cmd->add_option( "--scheme", schemes, "Scheme to check (repeatable): K, B, 4, 5, T, NE, SA" );
    cmd->callback( [ & ] {
        run = [ & ] {
            sweep_opts.proper_only = proper_only;
            return sweep( sweep_opts, schemes );
        };
    } );

    cmd = app.add_subcommand( "knowledge-gain", "Check that a formula pulls back along a pointed morphism" );
    cmd->add_option( "--morphism", file, "Knowledge-gain file" )->required();
    cmd->add_option( "--formula", formula_text, "Guarded positive formula" )->required();
    cmd->add_flag( "--allow-unguarded", unguarded, "Accept formulas outside the guarded positive fragment" );
    cmd->callback( [ & ] { run = [ & ] { return knowledge_gain( file, formula_text, unguarded ); }; } );

    cmd = app.add_subcommand( "export-dot", "Draw a model in DOT" );
    cmd->add_option( "file", file, "Model file" )->required();
    cmd->add_option( "--out", out, "Output file (default: stdout)" );
    cmd->callback( [ & ] { run = [ & ] { return export_dot( file, out ); }; } );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        auto code = app.exit( e );
        return code == 0 ? 0 : input_failure;
    }

    try
    {
        return run();
    }
    catch ( const std::exception& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return input_failure;
    }
}
