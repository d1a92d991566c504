#pragma once

#include "kb4/io.hpp"

#include <filesystem>
#include <string>

namespace fixtures
{

inline std::filesystem::path data( const std::string& name )
{
    return std::filesystem::path( KB4_TEST_DATA ) / name;
}

inline kb4::simplicial_model complex_file( const std::string& name )
{
    return kb4::load_model( data( name ) ).complex;
}

inline kb4::epistemic_model frame_file( const std::string& name )
{
    return kb4::load_model( data( name ) ).frame;
}

// Model with the given agents, worlds w0..w{n-1} and no atoms.
inline kb4::epistemic_model empty_frame( std::vector< std::string > agents, std::size_t worlds )
{
    std::vector< std::string > names;
    for ( std::size_t w = 0; w < worlds; ++w )
        names.push_back( "w" + std::to_string( w ) );
    return kb4::epistemic_model( kb4::vocabulary( std::move( agents ) ), names );
}

} // namespace fixtures
