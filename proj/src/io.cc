/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <cffkit/io.hh>
#include <cffkit/errors.hh>

#include <fstream>
#include <sstream>

using std::string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    template <typename T_>
    auto get_field(const cffkit::Json & j, const char * name) -> T_
    {
        if (! j.is_object() || ! j.contains(name))
            throw cffkit::UsageError(string("missing field \"") + name + "\"");
        try {
            return j.at(name).get<T_>();
        }
        catch (const nlohmann::json::exception &) {
            throw cffkit::UsageError(string("field \"") + name + "\" has the wrong type");
        }
    }

    auto edges_from_json(const cffkit::Json & j) -> vector<cffkit::Edge>
    {
        vector<cffkit::Edge> edges;
        for (auto & e : j) {
            if (! e.is_array() || e.size() != 2)
                throw cffkit::UsageError("edges must be two-element arrays");
            edges.emplace_back(e[0].get<uint32_t>(), e[1].get<uint32_t>());
        }
        return edges;
    }
}

auto cffkit::to_json(const SetSystem & s) -> Json
{
    Json j;
    j["n_points"] = s.n_points();
    j["blocks"] = s.blocks();
    return j;
}

auto cffkit::to_json(const SimpleGraph & g) -> Json
{
    Json j;
    j["n_vertices"] = g.n_vertices();
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({ u, v });
    j["edges"] = edges;
    return j;
}

auto cffkit::to_json(const GraphCovering & c) -> Json
{
    Json j;
    j["graph"] = to_json(c.graph());
    j["sets"] = c.sets();
    j["w"] = c.w();
    j["d"] = c.d();
    return j;
}

auto cffkit::to_json(const HostGraphSpec & host) -> Json
{
    Json j;
    std::visit([&] (const auto & h) {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, BiIntersectionHost>) {
            j["kind"] = "bi_intersection";
            j["t"] = h.t;
            j["r"] = h.r;
            j["w"] = h.w;
        }
        else if constexpr (std::is_same_v<T, KneserHost>) {
            j["kind"] = "kneser";
            j["t"] = h.t;
            j["k"] = h.k;
        }
        else if constexpr (std::is_same_v<T, ExplicitHost>) {
            j["kind"] = "explicit";
            j["n_left"] = h.n_left;
            j["n_right"] = h.n_right;
            Json edges = Json::array();
            for (auto [l, r] : h.edges)
                edges.push_back({ l, r });
            j["edges"] = edges;
        }
        else {
            j["kind"] = "derived_h";
            j["graph"] = to_json(h.graph);
            j["w"] = h.w;
        }
    }, host);
    return j;
}

auto cffkit::encode_vertex(const HostGraphSpec & host, bool left_side, uint64_t id) -> Json
{
    return std::visit([&] (const auto & h) -> Json {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, BiIntersectionHost>)
            return unrank_subset(id, left_side ? h.r : h.w, h.t);
        else if constexpr (std::is_same_v<T, KneserHost>)
            return unrank_subset(id, h.k, h.t);
        else if constexpr (std::is_same_v<T, ExplicitHost>)
            return id;
        else {
            if (left_side) {
                if (id >= h.graph.n_edges())
                    throw EncodingError("edge index out of range");
                auto [u, v] = h.graph.edges()[id];
                return Json::array({ u, v });
            }
            return unrank_subset(id, h.w, h.graph.n_vertices());
        }
    }, host);
}

auto cffkit::decode_vertex(const HostGraphSpec & host, bool left_side, const Json & j) -> uint64_t
{
    auto subset_of = [&] (uint32_t size, uint32_t universe) -> uint64_t {
        if (! j.is_array() || j.size() != size)
            throw UsageError("host vertex must be a " + std::to_string(size) + "-element list");
        auto s = j.get<Subset>();
        return rank_subset(s, universe);
    };

    return std::visit([&] (const auto & h) -> uint64_t {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, BiIntersectionHost>)
            return subset_of(left_side ? h.r : h.w, h.t);
        else if constexpr (std::is_same_v<T, KneserHost>)
            return subset_of(h.k, h.t);
        else if constexpr (std::is_same_v<T, ExplicitHost>) {
            if (! j.is_number_unsigned())
                throw UsageError("explicit host vertices are non-negative integers");
            auto id = j.get<uint64_t>();
            if (id >= (left_side ? h.n_left : h.n_right))
                throw UsageError("explicit host vertex out of range");
            return id;
        }
        else {
            if (left_side) {
                if (! j.is_array() || j.size() != 2)
                    throw UsageError("derived host left vertices are edges [u,v]");
                auto idx = h.graph.edge_index(j[0].get<uint32_t>(), j[1].get<uint32_t>());
                if (! idx)
                    throw UsageError("derived host left vertex is not an edge of the graph");
                return *idx;
            }
            return subset_of(h.w, h.graph.n_vertices());
        }
    }, host);
}

auto cffkit::to_json(const BicliqueCover & bc) -> Json
{
    Json j;
    j["host"] = to_json(bc.host);
    if (bc.d)
        j["d"] = *bc.d;
    else
        j["d"] = "unbounded";
    Json list = Json::array();
    for (auto & b : bc.bicliques) {
        Json left = Json::array(), right = Json::array();
        for (auto id : b.left)
            left.push_back(encode_vertex(bc.host, true, id));
        for (auto id : b.right)
            right.push_back(encode_vertex(bc.host, false, id));
        Json item;
        item["left"] = left;
        item["right"] = right;
        list.push_back(item);
    }
    j["bicliques"] = list;
    return j;
}

auto cffkit::set_system_from_json(const Json & j) -> SetSystem
{
    return SetSystem(get_field<uint32_t>(j, "n_points"), get_field<vector<Block>>(j, "blocks"));
}

auto cffkit::graph_from_json(const Json & j) -> SimpleGraph
{
    if (! j.is_object() || ! j.contains("edges") || ! j["edges"].is_array())
        throw UsageError("missing field \"edges\"");
    return SimpleGraph(get_field<uint32_t>(j, "n_vertices"), edges_from_json(j["edges"]));
}

auto cffkit::covering_from_json(const Json & j) -> GraphCovering
{
    if (! j.is_object() || ! j.contains("graph"))
        throw UsageError("missing field \"graph\"");
    return GraphCovering(graph_from_json(j["graph"]), get_field<vector<Subset>>(j, "sets"),
            get_field<uint32_t>(j, "w"), get_field<uint32_t>(j, "d"));
}

auto cffkit::host_from_json(const Json & j) -> HostGraphSpec
{
    auto kind = get_field<string>(j, "kind");
    HostGraphSpec result;
    if (kind == "bi_intersection")
        result = BiIntersectionHost{ get_field<uint32_t>(j, "t"), get_field<uint32_t>(j, "r"), get_field<uint32_t>(j, "w") };
    else if (kind == "kneser")
        result = KneserHost{ get_field<uint32_t>(j, "t"), get_field<uint32_t>(j, "k") };
    else if (kind == "explicit") {
        if (! j.contains("edges") || ! j["edges"].is_array())
            throw UsageError("missing field \"edges\"");
        result = make_explicit_host(get_field<uint32_t>(j, "n_left"), get_field<uint32_t>(j, "n_right"), edges_from_json(j["edges"]));
    }
    else if (kind == "derived_h") {
        if (! j.contains("graph"))
            throw UsageError("missing field \"graph\"");
        result = DerivedHost{ graph_from_json(j["graph"]), get_field<uint32_t>(j, "w") };
    }
    else
        throw UsageError("unknown host kind \"" + kind + "\"");
    validate_host(result);
    return result;
}

auto cffkit::biclique_cover_from_json(const Json & j) -> BicliqueCover
{
    if (! j.is_object() || ! j.contains("host"))
        throw UsageError("missing field \"host\"");
    BicliqueCover bc;
    bc.host = host_from_json(j["host"]);

    if (! j.contains("d"))
        throw UsageError("missing field \"d\"");
    if (j["d"].is_string()) {
        if (j["d"].get<string>() != "unbounded")
            throw UsageError("d must be an integer or \"unbounded\"");
    }
    else
        bc.d = get_field<uint64_t>(j, "d");

    if (! j.contains("bicliques") || ! j["bicliques"].is_array())
        throw UsageError("missing field \"bicliques\"");
    for (auto & item : j["bicliques"]) {
        Biclique b;
        if (! item.contains("left") || ! item.contains("right"))
            throw UsageError("biclique needs \"left\" and \"right\"");
        for (auto & v : item["left"])
            b.left.push_back(decode_vertex(bc.host, true, v));
        for (auto & v : item["right"])
            b.right.push_back(decode_vertex(bc.host, false, v));
        bc.bicliques.push_back(std::move(b));
    }
    return bc;
}

auto cffkit::to_matrix_text(const SetSystem & s) -> string
{
    std::ostringstream out;
    out << s.t() << " " << s.n_points() << "\n";
    for (auto & b : s.blocks()) {
        string row(s.n_points(), '0');
        for (auto x : b)
            row[x] = '1';
        out << row << "\n";
    }
    return out.str();
}

auto cffkit::set_system_from_matrix_text(const string & text) -> SetSystem
{
    std::istringstream in(text);
    long long t = -1, n = -1;
    if (! (in >> t >> n) || t < 1 || n < 0)
        throw UsageError("matrix header must be \"t n\" with t >= 1");

    vector<Block> blocks;
    for (long long i = 0 ; i < t ; ++i) {
        string row;
        if (n == 0) {
            blocks.emplace_back();
            continue;
        }
        if (! (in >> row) || static_cast<long long>(row.size()) != n)
            throw UsageError("matrix row " + std::to_string(i) + " must have " + std::to_string(n) + " characters");
        Block b;
        for (long long x = 0 ; x < n ; ++x) {
            if (row[x] == '1')
                b.push_back(static_cast<uint32_t>(x));
            else if (row[x] != '0')
                throw UsageError("matrix entries must be '0' or '1'");
        }
        blocks.push_back(std::move(b));
    }
    string extra;
    if (in >> extra)
        throw UsageError("trailing data after matrix rows");
    return SetSystem(static_cast<uint32_t>(n), std::move(blocks));
}

auto cffkit::parse_set_system(const string & text) -> SetSystem
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw UsageError(string("invalid JSON: ") + e.what());
        }
        return set_system_from_json(j);
    }
    return set_system_from_matrix_text(text);
}

auto cffkit::dump(const Json & j) -> string
{
    return j.dump() + "\n";
}

auto cffkit::read_file(const string & path) -> string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

auto cffkit::write_file(const string & path, const string & contents) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw UsageError("cannot write " + path);
    out << contents;
}

auto cffkit::read_json_file(const string & path) -> Json
{
    auto text = read_file(path);
    try {
        return Json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw UsageError("invalid JSON in " + path + ": " + e.what());
    }
}
