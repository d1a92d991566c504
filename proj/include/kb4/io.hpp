#pragma once

// JSON reading and writing.
//
//   complex / simplicial model:
//     {"agents":["a","b"], "atoms":[{"name":"p","owner":"a"}],
//      "vertices":[{"id":0,"colour":"a","tag":"..."}],
//      "facets":[{"name":"w1","vertices":[0,1],"labels":["p@a"]}]}
//   epistemic model:
//     {"agents":[...], "atoms":[...], "worlds":[{"name":"w1","labels":["p@a"]}],
//      "rel":{"a":[["w1","w1"],["w1","w2"]]}}
//   simplicial map:  {"map":{"0":3,"1":4}}
//   frame morphism:  {"map":{"w0":["w1","w2"]}}
//   knowledge gain:  {"src":<path or model>,"dst":<path or model>,"map":{...},"at":"X","to":"Y"}
//
// A relation pair implies its reverse; transitivity is never added on
// reading. Writing lists every pair, sorted.

#include "kb4/complex.hpp"
#include "kb4/frame.hpp"
#include "kb4/logic.hpp"
#include "kb4/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace kb4
{

using json = nlohmann::json;

// Malformed input files; the CLI reports these as input errors.
class input_error : public error
{
public:
    using error::error;
};

json read_json_file( const std::filesystem::path& path );
void write_text_file( const std::filesystem::path& path, const std::string& text );

vocabulary vocabulary_from_json( const json& j );
simplicial_model simplicial_model_from_json( const json& j );
epistemic_model epistemic_model_from_json( const json& j );

json to_json( const simplicial_model& s );
json to_json( const epistemic_model& m );

enum class model_kind
{
    complex,
    frame,
};

struct loaded_model
{
    model_kind kind;
    simplicial_model complex; // when kind == complex
    epistemic_model frame;    // when kind == frame
};

// Chooses the format by the presence of "facets" or "worlds".
loaded_model model_from_json( const json& j );
loaded_model load_model( const std::filesystem::path& path );

simplicial_map simplicial_map_from_json( const json& j );
frame_morphism frame_morphism_from_json( const json& j, const epistemic_model& src, const epistemic_model& dst );
json to_json( const simplicial_map& f );
json to_json( const frame_morphism& f, const epistemic_model& src, const epistemic_model& dst );

struct gain_instance
{
    simplicial_model src, dst;
    pointed_map map;
};

// Relative model paths resolve against the directory of the morphism file.
gain_instance load_gain_instance( const std::filesystem::path& path );

json to_json( const sweep_summary& s );

} // namespace kb4
