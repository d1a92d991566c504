#include "kb4/logic.hpp"

#include <algorithm>
#include <unordered_map>

namespace kb4
{

namespace
{

struct memo_key
{
    const void* node;
    std::size_t place;
    bool operator==( const memo_key& ) const = default;
};

struct memo_hash
{
    std::size_t operator()( const memo_key& k ) const
    {
        return std::hash< const void* >{}( k.node ) ^ ( k.place * 0x9e3779b97f4a7c15ULL );
    }
};

// Pointed evaluation with a (subformula, world) memo table.
class kripke_evaluator
{
public:
    explicit kripke_evaluator( const epistemic_model& m ) : _m{ m } {}

    bool eval( world_id w, const formula& f )
    {
        switch ( f.kind() )
        {
        case formula_kind::top: return true;
        case formula_kind::bottom: return false;
        case formula_kind::atom: return _m.labels[ w ].contains( f.atom_id_of() );
        case formula_kind::negation: return !eval( w, f.operand() );
        case formula_kind::conjunction: return eval( w, f.left() ) && eval( w, f.right() );
        case formula_kind::knows: break;
        }

        memo_key key{ f.identity(), static_cast< std::size_t >( w ) };
        if ( auto it = _memo.find( key ); it != _memo.end() )
            return it->second;
        const auto& r = _m.rel[ f.agent() ];
        bool result = true;
        for ( world_id v = 0; v < static_cast< world_id >( _m.world_count() ) && result; ++v )
            if ( r( w, v ) )
                result = eval( v, f.operand() );
        _memo.emplace( key, result );
        return result;
    }

private:
    const epistemic_model& _m;
    std::unordered_map< memo_key, bool, memo_hash > _memo;
};

// Works on facets and vertices directly, independent of the Kripke route.
class simplicial_evaluator
{
public:
    explicit simplicial_evaluator( const simplicial_model& s ) : _s{ s }
    {
        const auto& c = s.complex;
        const auto agents = c.vocab.agent_count();
        _by_colour.assign( c.facets.size(), std::vector< int >( agents, -1 ) );
        for ( std::size_t x = 0; x < c.facets.size(); ++x )
            for ( auto v : c.facets[ x ] )
            {
                _by_colour[ x ][ c.colour( v ) ] = v;
                _star[ v ].push_back( x );
            }
    }

    bool eval( std::size_t x, const formula& f )
    {
        switch ( f.kind() )
        {
        case formula_kind::top: return true;
        case formula_kind::bottom: return false;
        case formula_kind::atom: return _s.labels[ x ].contains( f.atom_id_of() );
        case formula_kind::negation: return !eval( x, f.operand() );
        case formula_kind::conjunction: return eval( x, f.left() ) && eval( x, f.right() );
        case formula_kind::knows: break;
        }

        memo_key key{ f.identity(), x };
        if ( auto it = _memo.find( key ); it != _memo.end() )
            return it->second;
        bool result = true;
        // Facets sharing X's a-coloured vertex; none when a is dead in X.
        if ( auto v = _by_colour[ x ][ f.agent() ]; v >= 0 )
            for ( auto y : _star.at( v ) )
                if ( !eval( y, f.operand() ) )
                {
                    result = false;
                    break;
                }
        _memo.emplace( key, result );
        return result;
    }

private:
    const simplicial_model& _s;
    std::vector< std::vector< int > > _by_colour;
    std::unordered_map< int, std::vector< std::size_t > > _star;
    std::unordered_map< memo_key, bool, memo_hash > _memo;
};

} // namespace

bool eval_kripke( const epistemic_model& m, world_id w, const formula& f )
{
    if ( w < 0 || static_cast< std::size_t >( w ) >= m.world_count() )
        throw error( "unknown world " + std::to_string( w ) );
    return kripke_evaluator( m ).eval( w, f );
}

bool eval_simplicial( const simplicial_model& s, std::size_t facet, const formula& f )
{
    if ( facet >= s.complex.facets.size() )
        throw error( "no facet with index " + std::to_string( facet ) );
    return simplicial_evaluator( s ).eval( facet, f );
}

evaluation eval_all( const epistemic_model& m, const formula& f )
{
    kripke_evaluator ev( m );
    evaluation out;
    for ( world_id w = 0; w < static_cast< world_id >( m.world_count() ); ++w )
    {
        out.truth.push_back( ev.eval( w, f ) );
        out.all = out.all && out.truth.back();
    }
    return out;
}

evaluation eval_all( const simplicial_model& s, const formula& f )
{
    simplicial_evaluator ev( s );
    evaluation out;
    for ( std::size_t x = 0; x < s.complex.facets.size(); ++x )
    {
        out.truth.push_back( ev.eval( x, f ) );
        out.all = out.all && out.truth.back();
    }
    return out;
}

namespace
{

bool is_alive_literal( const formula& f )
{
    return f.kind() == formula_kind::negation && f.operand().kind() == formula_kind::knows &&
           f.operand().operand().kind() == formula_kind::bottom;
}

// Agents B of an alive_B conjunction, or nothing.
std::optional< agent_set > alive_group( const formula& f )
{
    if ( is_alive_literal( f ) )
        return agent_bit( f.operand().agent() );
    if ( f.kind() != formula_kind::conjunction )
        return std::nullopt;
    auto l = alive_group( f.left() );
    auto r = alive_group( f.right() );
    if ( !l || !r )
        return std::nullopt;
    return *l | *r;
}

// Offending subterm of a propositional formula over AP_B, if any.
std::optional< formula > outside_propositional( const formula& f, agent_set b, const vocabulary& vocab )
{
    switch ( f.kind() )
    {
    case formula_kind::atom:
        if ( contains( b, vocab.atom_at( f.atom_id_of() ).owner ) )
            return std::nullopt;
        return f;
    case formula_kind::negation: return outside_propositional( f.operand(), b, vocab );
    case formula_kind::conjunction:
        if ( auto bad = outside_propositional( f.left(), b, vocab ) )
            return bad;
        return outside_propositional( f.right(), b, vocab );
    default: return f;
    }
}

std::optional< formula > outside_fragment( const formula& f, const vocabulary& vocab )
{
    switch ( f.kind() )
    {
    case formula_kind::conjunction:
        if ( auto bad = outside_fragment( f.left(), vocab ) )
            return bad;
        return outside_fragment( f.right(), vocab );
    case formula_kind::knows:
        return outside_fragment( f.operand(), vocab );
    case formula_kind::negation:
    {
        // ~(~l & ~r) is l | r; with l = ~alive_B it is alive_B -> r.
        const auto& inner = f.operand();
        if ( inner.kind() != formula_kind::conjunction || inner.left().kind() != formula_kind::negation ||
             inner.right().kind() != formula_kind::negation )
            return f;
        const auto& l = inner.left().operand();
        const auto& r = inner.right().operand();

        std::optional< formula > guard_problem;
        if ( l.kind() == formula_kind::negation )
            if ( auto group = alive_group( l.operand() ) )
            {
                guard_problem = outside_propositional( r, *group, vocab );
                if ( !guard_problem )
                    return std::nullopt;
            }

        auto bad = outside_fragment( l, vocab );
        if ( !bad )
            bad = outside_fragment( r, vocab );
        if ( bad && guard_problem )
            return guard_problem;
        return bad;
    }
    default: return f;
    }
}

} // namespace

guard_check is_guarded_positive( const formula& f, const vocabulary& vocab )
{
    auto bad = outside_fragment( f, vocab );
    return { !bad.has_value(), std::move( bad ) };
}

const char* to_string( gain_verdict v )
{
    switch ( v )
    {
    case gain_verdict::vacuous: return "vacuous";
    case gain_verdict::confirmed: return "confirmed";
    case gain_verdict::violation: return "VIOLATION";
    }
    return "?";
}

gain_verdict check_pullback( const simplicial_model& src, const simplicial_model& dst, const pointed_map& f,
                             const formula& phi )
{
    if ( f.source_facet >= src.complex.facets.size() || f.target_facet >= dst.complex.facets.size() )
        throw error( "pointed facet out of range" );
    if ( auto r = check_simplicial_model_morphism( f.map, src, dst ); !r )
        throw error( "not a morphism of simplicial models: " + r.counterexample );
    auto img = f.map.image( src.complex.facets[ f.source_facet ] );
    const auto& y = dst.complex.facets[ f.target_facet ];
    if ( !std::includes( y.begin(), y.end(), img.begin(), img.end() ) )
        throw error( "image of facet " + src.complex.facet_name( f.source_facet ) + " is not inside facet " +
                     dst.complex.facet_name( f.target_facet ) );

    if ( !eval_simplicial( dst, f.target_facet, phi ) )
        return gain_verdict::vacuous;
    return eval_simplicial( src, f.source_facet, phi ) ? gain_verdict::confirmed : gain_verdict::violation;
}

gain_verdict check_knowledge_gain( const simplicial_model& src, const simplicial_model& dst, const pointed_map& f,
                                   const formula& phi )
{
    if ( auto g = is_guarded_positive( phi, src.vocab() ); !g )
        throw error( "formula is not guarded positive; offending subterm: " + to_string( *g.offending, src.vocab() ) );
    return check_pullback( src, dst, f, phi );
}

} // namespace kb4
