#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kb4
{

using agent_id = int;
using atom_id = int;

// Sets of agents are bitmasks; a vocabulary holds at most 32 agents.
using agent_set = std::uint32_t;

inline constexpr std::size_t max_agents = 32;

constexpr agent_set agent_bit( agent_id a ) { return agent_set{ 1 } << a; }
constexpr bool contains( agent_set s, agent_id a ) { return ( s & agent_bit( a ) ) != 0; }
constexpr bool is_subset( agent_set sub, agent_set sup ) { return ( sub & ~sup ) == 0; }
inline int popcount( agent_set s ) { return std::popcount( s ); }

std::vector< agent_id > members( agent_set s );

using atom_set = std::set< atom_id >;

class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct atom
{
    std::string name;
    agent_id owner;

    bool operator==( const atom& ) const = default;
};

// The fixed agent set A and the owner-partitioned atoms AP = U_a AP_a.
class vocabulary
{
public:
    vocabulary() = default;
    explicit vocabulary( std::vector< std::string > agent_names );

    // Returns the id of (name, owner), adding it when new.
    atom_id add_atom( std::string name, agent_id owner );

    [[nodiscard]] std::size_t agent_count() const { return _agents.size(); }
    [[nodiscard]] std::size_t atom_count() const { return _atoms.size(); }
    [[nodiscard]] agent_set all_agents() const;

    [[nodiscard]] const std::string& agent_name( agent_id a ) const { return _agents.at( a ); }
    [[nodiscard]] const std::vector< std::string >& agent_names() const { return _agents; }
    [[nodiscard]] const atom& atom_at( atom_id p ) const { return _atoms.at( p ); }
    [[nodiscard]] const std::vector< atom >& atoms() const { return _atoms; }

    [[nodiscard]] std::optional< agent_id > find_agent( std::string_view name ) const;
    [[nodiscard]] agent_id agent( std::string_view name ) const; // throws on unknown agent
    [[nodiscard]] std::optional< atom_id > find_atom( std::string_view name, agent_id owner ) const;

    // Atoms serialize as "name@agent".
    [[nodiscard]] std::string atom_string( atom_id p ) const;
    [[nodiscard]] atom_id parse_atom( std::string_view text ) const;
    [[nodiscard]] std::string agents_string( agent_set s ) const;

    // Atoms owned by some agent of s, i.e. AP_s.
    [[nodiscard]] atom_set atoms_of( agent_set s ) const;

    bool operator==( const vocabulary& other ) const
    {
        return _agents == other._agents && _atoms == other._atoms;
    }

private:
    std::vector< std::string > _agents;
    std::vector< atom > _atoms;
    std::unordered_map< std::string, atom_id > _atom_index;
};

// L intersected with AP_s.
atom_set restrict_to( const atom_set& labels, agent_set s, const vocabulary& vocab );

} // namespace kb4
