/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CFFKIT_GUARD_IO_HH
#define CFFKIT_GUARD_IO_HH 1

#include <cffkit/model.hh>

#include <json.hpp>

#include <string>

namespace cffkit
{
    using Json = nlohmann::ordered_json;

    auto to_json(const SetSystem & s) -> Json;
    auto to_json(const SimpleGraph & g) -> Json;
    auto to_json(const GraphCovering & c) -> Json;
    auto to_json(const HostGraphSpec & h) -> Json;
    auto to_json(const BicliqueCover & bc) -> Json;

    // Unknown members are ignored, so annotated outputs (e.g. an lll
    // covering with its parameters) still parse as the base type.
    auto set_system_from_json(const Json & j) -> SetSystem;
    auto graph_from_json(const Json & j) -> SimpleGraph;
    auto covering_from_json(const Json & j) -> GraphCovering;
    auto host_from_json(const Json & j) -> HostGraphSpec;
    auto biclique_cover_from_json(const Json & j) -> BicliqueCover;

    /// Host vertex id to its JSON form (subset list, edge pair, or index).
    auto encode_vertex(const HostGraphSpec & h, bool left_side, std::uint64_t id) -> Json;
    auto decode_vertex(const HostGraphSpec & h, bool left_side, const Json & j) -> std::uint64_t;

    /// "t n" header then t rows of n '0'/'1' characters.
    auto to_matrix_text(const SetSystem & s) -> std::string;
    auto set_system_from_matrix_text(const std::string & text) -> SetSystem;

    /// Accepts either JSON or the matrix text format.
    auto parse_set_system(const std::string & text) -> SetSystem;

    /// Compact single-line dump followed by a newline; byte-stable.
    auto dump(const Json & j) -> std::string;

    auto read_file(const std::string & path) -> std::string;
    auto write_file(const std::string & path, const std::string & contents) -> void;
    auto read_json_file(const std::string & path) -> Json;
}

#endif
