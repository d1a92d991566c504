#include "kb4/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace kb4
{

struct formula::node
{
    formula_kind kind;
    int value = -1; // atom or agent
    std::optional< formula > first, second;
    std::size_t depth = 0;
    std::size_t size = 1;
};

formula formula::top()
{
    static const formula t{ std::make_shared< const node >( node{ formula_kind::top, -1, {}, {} } ) };
    return t;
}

formula formula::bottom()
{
    static const formula b{ std::make_shared< const node >( node{ formula_kind::bottom, -1, {}, {} } ) };
    return b;
}

formula formula::atom( atom_id p )
{
    return formula{ std::make_shared< const node >( node{ formula_kind::atom, p, {}, {} } ) };
}

formula formula::negation( formula f )
{
    auto d = f.depth() + 1;
    auto s = f.size() + 1;
    return formula{ std::make_shared< const node >( node{ formula_kind::negation, -1, std::move( f ), {}, d, s } ) };
}

formula formula::conjunction( formula l, formula r )
{
    auto d = std::max( l.depth(), r.depth() ) + 1;
    auto s = l.size() + r.size() + 1;
    return formula{ std::make_shared< const node >(
        node{ formula_kind::conjunction, -1, std::move( l ), std::move( r ), d, s } ) };
}

formula formula::knows( agent_id a, formula f )
{
    auto d = f.depth() + 1;
    auto s = f.size() + 1;
    return formula{ std::make_shared< const node >( node{ formula_kind::knows, a, std::move( f ), {}, d, s } ) };
}

formula formula::disjunction( formula l, formula r )
{
    return negation( conjunction( negation( std::move( l ) ), negation( std::move( r ) ) ) );
}

formula formula::implication( formula l, formula r )
{
    return disjunction( negation( std::move( l ) ), std::move( r ) );
}

formula formula::dead( agent_id a )
{
    return knows( a, bottom() );
}

formula formula::alive( agent_id a )
{
    return negation( dead( a ) );
}

formula formula::alive_all( agent_set b )
{
    auto agents = members( b );
    if ( agents.empty() )
        throw error( "alive{} needs at least one agent" );
    auto out = alive( agents.front() );
    for ( std::size_t i = 1; i < agents.size(); ++i )
        out = conjunction( std::move( out ), alive( agents[ i ] ) );
    return out;
}

formula_kind formula::kind() const
{
    return _node->kind;
}

atom_id formula::atom_id_of() const
{
    return _node->value;
}

agent_id formula::agent() const
{
    return _node->value;
}

const formula& formula::operand() const
{
    return *_node->first;
}

const formula& formula::left() const
{
    return *_node->first;
}

const formula& formula::right() const
{
    return *_node->second;
}

std::size_t formula::depth() const
{
    return _node->depth;
}

std::size_t formula::size() const
{
    return _node->size;
}

bool operator==( const formula& x, const formula& y )
{
    if ( x._node == y._node )
        return true;
    if ( x.kind() != y.kind() || x.size() != y.size() )
        return false;
    switch ( x.kind() )
    {
    case formula_kind::top:
    case formula_kind::bottom: return true;
    case formula_kind::atom: return x.atom_id_of() == y.atom_id_of();
    case formula_kind::negation: return x.operand() == y.operand();
    case formula_kind::knows: return x.agent() == y.agent() && x.operand() == y.operand();
    case formula_kind::conjunction: return x.left() == y.left() && x.right() == y.right();
    }
    return false;
}

namespace
{

// Printing precedence: 1 = disjunction, 2 = conjunction, 3 = unary/primary.
struct printer
{
    const vocabulary& vocab;

    static bool is_dead( const formula& f )
    {
        return f.kind() == formula_kind::knows && f.operand().kind() == formula_kind::bottom;
    }

    // ~(~l & ~r) prints as l | r.
    static bool is_disjunction( const formula& f )
    {
        return f.kind() == formula_kind::negation && f.operand().kind() == formula_kind::conjunction &&
               f.operand().left().kind() == formula_kind::negation &&
               f.operand().right().kind() == formula_kind::negation;
    }

    static int level( const formula& f )
    {
        if ( is_disjunction( f ) )
            return 1;
        if ( f.kind() == formula_kind::conjunction )
            return 2;
        return 3;
    }

    std::string print( const formula& f, int required ) const
    {
        auto text = raw( f );
        return level( f ) < required ? "(" + text + ")" : text;
    }

    std::string raw( const formula& f ) const
    {
        switch ( f.kind() )
        {
        case formula_kind::top: return "true";
        case formula_kind::bottom: return "false";
        case formula_kind::atom: return vocab.atom_string( f.atom_id_of() );
        case formula_kind::conjunction: return print( f.left(), 2 ) + " & " + print( f.right(), 3 );
        case formula_kind::knows:
            if ( is_dead( f ) )
                return "dead " + vocab.agent_name( f.agent() );
            return "K " + vocab.agent_name( f.agent() ) + " " + print( f.operand(), 3 );
        case formula_kind::negation:
            if ( is_disjunction( f ) )
                return print( f.operand().left().operand(), 1 ) + " | " + print( f.operand().right().operand(), 2 );
            if ( is_dead( f.operand() ) )
                return "alive " + vocab.agent_name( f.operand().agent() );
            return "~" + print( f.operand(), 3 );
        }
        return "?";
    }
};

enum class token_kind
{
    name,
    at,
    tilde,
    amp,
    bar,
    arrow,
    lparen,
    rparen,
    lbrace,
    rbrace,
    comma,
    end,
};

struct token
{
    token_kind kind;
    std::string text;
    std::size_t position;
};

bool name_char( char c )
{
    return std::isalnum( static_cast< unsigned char >( c ) ) || c == '_' || c == '\'' || c == '.';
}

std::vector< token > tokenize( std::string_view text )
{
    std::vector< token > out;
    std::size_t i = 0;
    while ( i < text.size() )
    {
        char c = text[ i ];
        if ( std::isspace( static_cast< unsigned char >( c ) ) )
        {
            ++i;
            continue;
        }
        if ( name_char( c ) )
        {
            auto start = i;
            while ( i < text.size() && name_char( text[ i ] ) )
                ++i;
            out.push_back( { token_kind::name, std::string( text.substr( start, i - start ) ), start } );
            continue;
        }
        if ( c == '-' && i + 1 < text.size() && text[ i + 1 ] == '>' )
        {
            out.push_back( { token_kind::arrow, "->", i } );
            i += 2;
            continue;
        }
        token_kind kind;
        switch ( c )
        {
        case '@': kind = token_kind::at; break;
        case '~':
        case '!': kind = token_kind::tilde; break;
        case '&': kind = token_kind::amp; break;
        case '|': kind = token_kind::bar; break;
        case '(': kind = token_kind::lparen; break;
        case ')': kind = token_kind::rparen; break;
        case '{': kind = token_kind::lbrace; break;
        case '}': kind = token_kind::rbrace; break;
        case ',': kind = token_kind::comma; break;
        default: throw parse_error( std::string( "unexpected character '" ) + c + "'", i );
        }
        out.push_back( { kind, std::string( 1, c ), i } );
        ++i;
    }
    out.push_back( { token_kind::end, "", text.size() } );
    return out;
}

class parser
{
public:
    parser( std::string_view text, const vocabulary& vocab ) : _tokens{ tokenize( text ) }, _vocab{ vocab } {}

    formula parse()
    {
        auto f = implication();
        if ( peek().kind != token_kind::end )
            throw parse_error( "unexpected '" + peek().text + "'", peek().position );
        return f;
    }

private:
    const token& peek( std::size_t ahead = 0 ) const
    {
        return _tokens[ std::min( _pos + ahead, _tokens.size() - 1 ) ];
    }

    const token& next() { return _tokens[ std::min( _pos++, _tokens.size() - 1 ) ]; }

    bool accept( token_kind k )
    {
        if ( peek().kind != k )
            return false;
        ++_pos;
        return true;
    }

    const token& expect( token_kind k, const char* what )
    {
        if ( peek().kind != k )
            throw parse_error( std::string( "expected " ) + what + ( peek().kind == token_kind::end
                                                                         ? std::string( ", found end of input" )
                                                                         : ", found '" + peek().text + "'" ),
                               peek().position );
        return next();
    }

    agent_id agent_name()
    {
        const auto& t = expect( token_kind::name, "an agent name" );
        if ( auto a = _vocab.find_agent( t.text ) )
            return *a;
        throw parse_error( "unknown agent '" + t.text + "'", t.position );
    }

    formula implication()
    {
        auto lhs = disjunction();
        if ( accept( token_kind::arrow ) )
            return formula::implication( std::move( lhs ), implication() );
        return lhs;
    }

    formula disjunction()
    {
        auto lhs = conjunction();
        while ( accept( token_kind::bar ) )
            lhs = formula::disjunction( std::move( lhs ), conjunction() );
        return lhs;
    }

    formula conjunction()
    {
        auto lhs = unary();
        while ( accept( token_kind::amp ) )
            lhs = formula::conjunction( std::move( lhs ), unary() );
        return lhs;
    }

    bool keyword( std::string_view word ) const
    {
        return peek().kind == token_kind::name && peek().text == word && peek( 1 ).kind != token_kind::at;
    }

    formula unary()
    {
        if ( accept( token_kind::tilde ) )
            return formula::negation( unary() );
        if ( keyword( "K" ) )
        {
            next();
            auto a = agent_name();
            return formula::knows( a, unary() );
        }
        return primary();
    }

    formula primary()
    {
        if ( accept( token_kind::lparen ) )
        {
            auto f = implication();
            expect( token_kind::rparen, "')'" );
            return f;
        }
        if ( keyword( "true" ) )
        {
            next();
            return formula::top();
        }
        if ( keyword( "false" ) )
        {
            next();
            return formula::bottom();
        }
        if ( keyword( "dead" ) )
        {
            next();
            return formula::dead( agent_name() );
        }
        if ( keyword( "alive" ) )
        {
            next();
            if ( accept( token_kind::lbrace ) )
            {
                agent_set group = agent_bit( agent_name() );
                while ( accept( token_kind::comma ) )
                    group |= agent_bit( agent_name() );
                expect( token_kind::rbrace, "'}'" );
                return formula::alive_all( group );
            }
            return formula::alive( agent_name() );
        }

        const auto& name = expect( token_kind::name, "a formula" );
        expect( token_kind::at, "'@' after atom name" );
        const auto& owner = expect( token_kind::name, "an agent name" );
        auto a = _vocab.find_agent( owner.text );
        if ( !a )
            throw parse_error( "unknown atom owner '" + owner.text + "'", owner.position );
        auto p = _vocab.find_atom( name.text, *a );
        if ( !p )
            throw parse_error( "undeclared atom '" + name.text + "@" + owner.text + "'", name.position );
        return formula::atom( *p );
    }

    std::vector< token > _tokens;
    const vocabulary& _vocab;
    std::size_t _pos = 0;
};

} // namespace

std::string to_string( const formula& f, const vocabulary& vocab )
{
    return printer{ vocab }.raw( f );
}

formula parse_formula( std::string_view text, const vocabulary& vocab )
{
    return parser( text, vocab ).parse();
}

} // namespace kb4
