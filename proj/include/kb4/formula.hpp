#pragma once

#include "kb4/vocabulary.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace kb4
{

enum class formula_kind
{
    top,
    bottom,
    atom,
    negation,
    conjunction,
    knows,
};

// Immutable formula tree over p | ~f | f & f | K_a f, with true and false as
// primitives. Every other connective is sugar and is expanded on construction:
//
//   f | g      ~(~f & ~g)
//   f -> g     ~f | g
//   dead a     K_a false
//   alive a    ~dead a
//   alive{B}   conjunction of alive b, b in B, left-nested in agent order
//
// Subtrees are shared, so copies are cheap.
class formula
{
public:
    static formula top();
    static formula bottom();
    static formula atom( atom_id p );
    static formula negation( formula f );
    static formula conjunction( formula l, formula r );
    static formula knows( agent_id a, formula f );

    static formula disjunction( formula l, formula r );
    static formula implication( formula l, formula r );
    static formula dead( agent_id a );
    static formula alive( agent_id a );
    static formula alive_all( agent_set b ); // b must be non-empty

    [[nodiscard]] formula_kind kind() const;
    [[nodiscard]] atom_id atom_id_of() const;
    [[nodiscard]] agent_id agent() const;
    [[nodiscard]] const formula& operand() const; // negation and knows
    [[nodiscard]] const formula& left() const;    // conjunction
    [[nodiscard]] const formula& right() const;   // conjunction

    [[nodiscard]] std::size_t depth() const;
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] const void* identity() const { return _node.get(); }

    friend bool operator==( const formula& x, const formula& y );

private:
    struct node;
    explicit formula( std::shared_ptr< const node > n ) : _node{ std::move( n ) } {}

    std::shared_ptr< const node > _node;
};

// Re-parses to the same tree.
std::string to_string( const formula& f, const vocabulary& vocab );

class parse_error : public error
{
public:
    parse_error( const std::string& what, std::size_t position )
        : error( what + " at position " + std::to_string( position ) ), _position{ position }
    {
    }

    [[nodiscard]] std::size_t position() const { return _position; }

private:
    std::size_t _position;
};

// Grammar, loosest first (-> is right associative):
//   f    := impl
//   impl := or ('->' impl)?
//   or   := and ('|' and)*
//   and  := un ('&' un)*
//   un   := '~' un | 'K' AGENT un | prim
//   prim := 'true' | 'false' | 'alive' AGENT | 'dead' AGENT
//         | 'alive' '{' AGENT (',' AGENT)* '}' | NAME '@' AGENT | '(' f ')'
formula parse_formula( std::string_view text, const vocabulary& vocab );

} // namespace kb4
