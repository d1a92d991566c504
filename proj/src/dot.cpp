#include "kb4/dot.hpp"

#include <map>
#include <set>
#include <sstream>

namespace kb4
{

namespace
{

std::string quoted( const std::string& s )
{
    std::string out = "\"";
    for ( char ch : s )
    {
        if ( ch == '\n' )
        {
            out += "\\n";
            continue;
        }
        if ( ch == '"' || ch == '\\' )
            out += '\\';
        out += ch;
    }
    return out + "\"";
}

std::string label_text( const vocabulary& vocab, const atom_set& labels )
{
    std::string out = "{";
    bool first = true;
    for ( auto p : labels )
    {
        out += ( first ? "" : "," ) + vocab.atom_string( p );
        first = false;
    }
    return out + "}";
}

} // namespace

std::string to_dot( const simplicial_model& s )
{
    const auto& c = s.complex;
    std::ostringstream out;
    out << "graph complex {\n  node [shape=circle, style=filled, fillcolor=white];\n";
    for ( const auto& v : c.vertices )
        out << "  v" << v.id << " [label=" << quoted( c.vocab.agent_name( v.colour ) + ":" + v.tag ) << "];\n";

    std::set< std::pair< int, int > > edges;
    for ( const auto& f : c.facets )
        for ( std::size_t i = 0; i < f.size(); ++i )
            for ( std::size_t j = i + 1; j < f.size(); ++j )
                edges.emplace( f[ i ], f[ j ] );
    for ( auto [ u, v ] : edges )
        out << "  v" << u << " -- v" << v << ";\n";

    for ( std::size_t x = 0; x < c.facets.size(); ++x )
    {
        std::string text = c.facet_name( x );
        if ( x < s.labels.size() )
            text += " " + label_text( c.vocab, s.labels[ x ] );
        out << "  f" << x << " [shape=note, style=\"\", label=" << quoted( text ) << "];\n";
        for ( auto v : c.facets[ x ] )
            out << "  f" << x << " -- v" << v << " [style=dotted];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot( const epistemic_model& m )
{
    std::ostringstream out;
    out << "graph frame {\n  node [shape=box];\n";
    const auto n = static_cast< world_id >( m.world_count() );
    for ( world_id w = 0; w < n; ++w )
        out << "  w" << w << " [label=" << quoted( m.world_names[ w ] + "\n" + label_text( m.vocab, m.labels[ w ] ) )
            << "];\n";
    for ( world_id u = 0; u < n; ++u )
        for ( world_id v = u; v < n; ++v )
        {
            agent_set related = 0;
            for ( std::size_t a = 0; a < m.vocab.agent_count(); ++a )
                if ( m.related( static_cast< agent_id >( a ), u, v ) || m.related( static_cast< agent_id >( a ), v, u ) )
                    related |= agent_bit( static_cast< agent_id >( a ) );
            if ( related != 0 )
                out << "  w" << u << " -- w" << v << " [label=" << quoted( m.vocab.agents_string( related ) ) << "];\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace kb4
